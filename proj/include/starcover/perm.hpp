#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace starcover {

/// A permutation of {1..m} in one-line notation.
///
/// Composition convention: (p * q)(x) = p(q(x)), so q is applied first.
/// With this convention a Cayley graph edge xi -> xi * tau is a right
/// multiplication, and the right action of a stabilizer subgroup on the
/// vertices of a star graph commutes with the covering projection
/// xi -> xi(m). Flipping the convention silently breaks every Frobenius
/// computation downstream.
class Permutation {
public:
    /// `images[i]` is the image of i+1 (1-based targets). Throws
    /// std::invalid_argument unless the images form a bijection on {1..m}.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int degree);
    static Permutation transposition(int degree, int a, int b);

    /// Builds from disjoint or overlapping cycles; cycles are multiplied
    /// right to left, as written.
    static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

    /// Accepts one-line notation ("4231", or "4,2,3,1" for degree >= 10)
    /// or cycle notation ("(1,4)(2,3)", "()" for the identity). Cycle
    /// notation needs `degree`; one-line notation checks it when given.
    static Permutation parse(std::string_view text, std::optional<int> degree = std::nullopt);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int x) const;
    std::span<const int> images() const { return images_; }

    bool is_identity() const;
    int order() const;
    int sign() const;

    /// "4231"; comma separated once the degree exceeds 9.
    std::string one_line() const;
    /// "(1,4)(2,3)"; "()" for the identity.
    std::string cycle_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
        return a.images_ <=> b.images_;
    }

private:
    std::vector<int> images_;
};

/// x -> p(q(x)). Throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

/// [(1,n+1), (2,n+1), ..., (n,n+1)] in S_{n+1}.
std::vector<Permutation> star_transpositions(int n);

/// All m! permutations of degree m, lexicographic in one-line notation.
std::vector<Permutation> all_permutations(int degree);

/// A finite permutation group, stored as its sorted element list.
class PermutationGroup {
public:
    /// Throws unless `elements` is a group (identity, closure, inverses,
    /// common degree).
    PermutationGroup(int degree, std::vector<Permutation> elements);

    /// Closure of `gens` under composition.
    static PermutationGroup generate(std::span<const Permutation> gens);
    static PermutationGroup trivial(int degree);
    static PermutationGroup symmetric(int degree);
    /// Elements of S_m fixing `point`.
    static PermutationGroup stabilizer(int degree, int point);

    int degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Permutation>& elements() const { return elements_; }
    bool contains(const Permutation& p) const;
    bool is_subset_of(const PermutationGroup& other) const;

    friend bool operator==(const PermutationGroup&, const PermutationGroup&) = default;

private:
    struct Unchecked {};
    PermutationGroup(int degree, std::vector<Permutation> sorted_elements, Unchecked);

    int degree_;
    std::vector<Permutation> elements_;
};

inline constexpr std::size_t kSubgroupEnumerationBound = 5040;

/// Every subgroup of G, ordered by size and then by sorted element list.
/// Throws std::length_error when |G| exceeds `bound`.
std::vector<PermutationGroup> subgroups(const PermutationGroup& group,
                                        std::size_t bound = kSubgroupEnumerationBound);

/// Throws std::invalid_argument if H is not contained in G.
bool is_normal(const PermutationGroup& subgroup, const PermutationGroup& group);

/// A finite group given by its multiplication table.
///
/// Every element carries a representative permutation. For a group built
/// from a permutation group this is the element itself; for a quotient
/// G/N it is the lexicographically smallest member of the coset. Any
/// permutation of the originating group can be looked up to find the
/// element (or coset) it belongs to.
class FiniteGroup {
public:
    static FiniteGroup from_permutation_group(const PermutationGroup& group);

    std::size_t size() const { return table_.size(); }
    int identity() const { return identity_; }
    int multiply(int a, int b) const { return table_[a][b]; }
    int inverse(int a) const { return inverses_[a]; }
    int element_order(int a) const;
    bool is_abelian() const;

    const Permutation& representative(int a) const { return representatives_[a]; }
    std::string label(int a) const { return representatives_[a].one_line(); }
    std::optional<int> index_of(const Permutation& p) const;

    /// True if `elements` (indices) is closed under multiplication and
    /// contains the identity.
    bool is_subgroup(std::span<const int> elements) const;
    bool is_normal_subgroup(std::span<const int> elements) const;
    /// Closure of the given indices.
    std::vector<int> generated_subgroup(std::span<const int> generators) const;

    /// The quotient by a normal subgroup (indices). Cosets are ordered by
    /// their smallest representative. Throws std::invalid_argument if the
    /// subgroup is not normal.
    FiniteGroup quotient(std::span<const int> normal_subgroup) const;

    const std::vector<std::vector<int>>& table() const { return table_; }

private:
    FiniteGroup() = default;
    void finish();

    std::vector<std::vector<int>> table_;
    std::vector<int> inverses_;
    std::vector<Permutation> representatives_;
    std::map<Permutation, int> lookup_;
    int identity_ = 0;
};

/// G/N as an abstract table. Throws std::invalid_argument unless N ◁ G.
FiniteGroup quotient_group(const PermutationGroup& group, const PermutationGroup& normal);

/// Indices of the elements of `subgroup` inside `group`; throws if some
/// element is not found.
std::vector<int> indices_in(const FiniteGroup& group, const PermutationGroup& subgroup);

}  // namespace starcover

template <>
struct std::hash<starcover::Permutation> {
    std::size_t operator()(const starcover::Permutation& p) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int v : p.images()) {
            h ^= static_cast<std::size_t>(v);
            h *= 1099511628211ull;
        }
        return h;
    }
};
