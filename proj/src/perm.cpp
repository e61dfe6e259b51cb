#include "starcover/perm.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace starcover {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int m = degree();
    if (m < 1) {
        throw std::invalid_argument("permutation degree must be at least 1");
    }
    std::vector<bool> seen(m + 1, false);
    for (int v : images_) {
        if (v < 1 || v > m || seen[v]) {
            throw std::invalid_argument("images do not form a bijection on {1.." + std::to_string(m) + "}");
        }
        seen[v] = true;
    }
}

Permutation Permutation::identity(int degree) {
    std::vector<int> images(degree);
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
}

Permutation Permutation::transposition(int degree, int a, int b) {
    return from_cycles(degree, {{a, b}});
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    Permutation result = identity(degree);
    for (const auto& cycle : cycles) {
        std::vector<int> images(degree);
        std::iota(images.begin(), images.end(), 1);
        std::set<int> used;
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            const int from = cycle[i];
            const int to = cycle[(i + 1) % cycle.size()];
            if (from < 1 || from > degree || !used.insert(from).second) {
                throw std::invalid_argument("invalid cycle entry " + std::to_string(from));
            }
            images[from - 1] = to;
        }
        // Right-to-left product: later cycles act first.
        result = compose(result, Permutation(std::move(images)));
    }
    return result;
}

namespace {

std::vector<int> parse_int_list(std::string_view text, char sep) {
    std::vector<int> out;
    std::string token;
    auto flush = [&] {
        if (token.empty()) {
            throw std::invalid_argument("empty entry in permutation text");
        }
        out.push_back(std::stoi(token));
        token.clear();
    };
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            continue;
        }
        if (c == sep) {
            flush();
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            token.push_back(c);
        } else {
            throw std::invalid_argument(std::string("unexpected character '") + c + "' in permutation text");
        }
    }
    if (!token.empty() || !out.empty()) {
        flush();
    }
    return out;
}

}  // namespace

Permutation Permutation::parse(std::string_view text, std::optional<int> degree) {
    auto first = text.find_first_not_of(" \t");
    if (first == std::string_view::npos) {
        throw std::invalid_argument("empty permutation text");
    }
    text.remove_prefix(first);
    if (text.front() == '(') {
        if (!degree) {
            throw std::invalid_argument("cycle notation requires an explicit degree");
        }
        std::vector<std::vector<int>> cycles;
        std::size_t pos = 0;
        while (pos < text.size()) {
            if (std::isspace(static_cast<unsigned char>(text[pos]))) {
                ++pos;
                continue;
            }
            if (text[pos] != '(') {
                throw std::invalid_argument("expected '(' at offset " + std::to_string(pos));
            }
            auto close = text.find(')', pos);
            if (close == std::string_view::npos) {
                throw std::invalid_argument("unterminated cycle starting at offset " + std::to_string(pos));
            }
            auto body = text.substr(pos + 1, close - pos - 1);
            auto entries = parse_int_list(body, ',');
            if (!entries.empty()) {
                cycles.push_back(std::move(entries));
            }
            pos = close + 1;
        }
        return from_cycles(*degree, cycles);
    }
    std::vector<int> images;
    if (text.find(',') != std::string_view::npos) {
        images = parse_int_list(text, ',');
    } else {
        for (char c : text) {
            if (std::isspace(static_cast<unsigned char>(c))) {
                continue;
            }
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                throw std::invalid_argument(std::string("unexpected character '") + c + "' in one-line notation");
            }
            images.push_back(c - '0');
        }
    }
    if (degree && static_cast<int>(images.size()) != *degree) {
        throw std::invalid_argument("one-line permutation has degree " + std::to_string(images.size()) +
                                    ", expected " + std::to_string(*degree));
    }
    return Permutation(std::move(images));
}

int Permutation::operator()(int x) const {
    if (x < 1 || x > degree()) {
        throw std::out_of_range("point " + std::to_string(x) + " outside {1.." + std::to_string(degree()) + "}");
    }
    return images_[x - 1];
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i) {
        if (images_[i] != i + 1) {
            return false;
        }
    }
    return true;
}

int Permutation::order() const {
    std::vector<bool> seen(degree(), false);
    int result = 1;
    for (int i = 0; i < degree(); ++i) {
        if (seen[i]) {
            continue;
        }
        int len = 0;
        for (int j = i; !seen[j]; j = images_[j] - 1) {
            seen[j] = true;
            ++len;
        }
        result = std::lcm(result, len);
    }
    return result;
}

int Permutation::sign() const {
    std::vector<bool> seen(degree(), false);
    int s = 1;
    for (int i = 0; i < degree(); ++i) {
        if (seen[i]) {
            continue;
        }
        int len = 0;
        for (int j = i; !seen[j]; j = images_[j] - 1) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) {
            s = -s;
        }
    }
    return s;
}

std::string Permutation::one_line() const {
    std::string out;
    for (int i = 0; i < degree(); ++i) {
        if (degree() > 9 && i > 0) {
            out.push_back(',');
        }
        out += std::to_string(images_[i]);
    }
    return out;
}

std::string Permutation::cycle_string() const {
    std::string out;
    std::vector<bool> seen(degree(), false);
    for (int i = 0; i < degree(); ++i) {
        if (seen[i] || images_[i] == i + 1) {
            continue;
        }
        out.push_back('(');
        for (int j = i; !seen[j]; j = images_[j] - 1) {
            seen[j] = true;
            if (j != i) {
                out.push_back(',');
            }
            out += std::to_string(j + 1);
        }
        out.push_back(')');
    }
    return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) {
        throw std::invalid_argument("cannot compose permutations of degree " + std::to_string(p.degree()) +
                                    " and " + std::to_string(q.degree()));
    }
    std::vector<int> images(p.degree());
    for (int x = 1; x <= p.degree(); ++x) {
        images[x - 1] = p(q(x));
    }
    return Permutation(std::move(images));
}

Permutation inverse(const Permutation& p) {
    std::vector<int> images(p.degree());
    for (int x = 1; x <= p.degree(); ++x) {
        images[p(x) - 1] = x;
    }
    return Permutation(std::move(images));
}

std::vector<Permutation> star_transpositions(int n) {
    if (n < 1) {
        throw std::invalid_argument("star transpositions need n >= 1");
    }
    std::vector<Permutation> out;
    for (int i = 1; i <= n; ++i) {
        out.push_back(Permutation::transposition(n + 1, i, n + 1));
    }
    return out;
}

std::vector<Permutation> all_permutations(int degree) {
    std::vector<int> images(degree);
    std::iota(images.begin(), images.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

// ---------------------------------------------------------------------------
// PermutationGroup

PermutationGroup::PermutationGroup(int degree, std::vector<Permutation> sorted_elements, Unchecked)
    : degree_(degree), elements_(std::move(sorted_elements)) {}

PermutationGroup::PermutationGroup(int degree, std::vector<Permutation> elements)
    : degree_(degree), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    for (const auto& e : elements_) {
        if (e.degree() != degree_) {
            throw std::invalid_argument("group element " + e.one_line() + " has the wrong degree");
        }
    }
    if (!contains(Permutation::identity(degree_))) {
        throw std::invalid_argument("element set does not contain the identity");
    }
    for (const auto& a : elements_) {
        if (!contains(inverse(a))) {
            throw std::invalid_argument("element set is not closed under inverses");
        }
        for (const auto& b : elements_) {
            if (!contains(a * b)) {
                throw std::invalid_argument("element set is not closed under composition");
            }
        }
    }
}

PermutationGroup PermutationGroup::generate(std::span<const Permutation> gens) {
    if (gens.empty()) {
        throw std::invalid_argument("generate_group needs at least one generator");
    }
    const int degree = gens.front().degree();
    for (const auto& g : gens) {
        if (g.degree() != degree) {
            throw std::invalid_argument("generators have unequal degrees");
        }
    }
    std::set<Permutation> found{Permutation::identity(degree)};
    std::deque<Permutation> frontier{Permutation::identity(degree)};
    while (!frontier.empty()) {
        Permutation x = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& g : gens) {
            Permutation y = x * g;
            if (found.insert(y).second) {
                frontier.push_back(std::move(y));
            }
        }
    }
    return PermutationGroup(degree, std::vector<Permutation>(found.begin(), found.end()), Unchecked{});
}

PermutationGroup PermutationGroup::trivial(int degree) {
    return PermutationGroup(degree, {Permutation::identity(degree)}, Unchecked{});
}

PermutationGroup PermutationGroup::symmetric(int degree) {
    return PermutationGroup(degree, all_permutations(degree), Unchecked{});
}

PermutationGroup PermutationGroup::stabilizer(int degree, int point) {
    std::vector<Permutation> out;
    for (auto& p : all_permutations(degree)) {
        if (p(point) == point) {
            out.push_back(std::move(p));
        }
    }
    return PermutationGroup(degree, std::move(out), Unchecked{});
}

bool PermutationGroup::contains(const Permutation& p) const {
    return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermutationGroup::is_subset_of(const PermutationGroup& other) const {
    return degree_ == other.degree_ &&
           std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(), elements_.end());
}

// ---------------------------------------------------------------------------
// Subgroup lattice

namespace {

struct IndexedGroup {
    std::vector<Permutation> elements;
    std::unordered_map<Permutation, int> index;

    explicit IndexedGroup(const PermutationGroup& g) : elements(g.elements()) {
        for (int i = 0; i < static_cast<int>(elements.size()); ++i) {
            index.emplace(elements[i], i);
        }
    }

    int mul(int a, int b) const { return index.at(elements[a] * elements[b]); }

    std::vector<int> closure(const std::vector<int>& gens) const {
        const int id = index.at(Permutation::identity(elements.front().degree()));
        std::vector<bool> in(elements.size(), false);
        std::vector<int> members{id};
        in[id] = true;
        for (std::size_t head = 0; head < members.size(); ++head) {
            for (int g : gens) {
                int y = mul(members[head], g);
                if (!in[y]) {
                    in[y] = true;
                    members.push_back(y);
                }
            }
        }
        std::sort(members.begin(), members.end());
        return members;
    }
};

}  // namespace

std::vector<PermutationGroup> subgroups(const PermutationGroup& group, std::size_t bound) {
    if (group.order() > bound) {
        throw std::length_error("subgroup enumeration limited to groups of order <= " + std::to_string(bound));
    }
    IndexedGroup g(group);

    // Every subgroup is the join of the cyclic subgroups it contains, so a
    // breadth-first closure over joins with cyclic subgroups reaches all.
    std::map<std::vector<int>, std::vector<int>> found;  // members -> generators
    std::vector<std::pair<std::vector<int>, int>> cyclic;
    for (int a = 0; a < static_cast<int>(g.elements.size()); ++a) {
        auto members = g.closure({a});
        if (found.emplace(members, std::vector<int>{a}).second) {
            cyclic.emplace_back(members, a);
        }
    }
    std::deque<std::vector<int>> queue;
    for (const auto& [members, gen] : cyclic) {
        queue.push_back(members);
    }
    while (!queue.empty()) {
        auto members = std::move(queue.front());
        queue.pop_front();
        const auto gens = found.at(members);
        for (const auto& [cyc_members, cyc_gen] : cyclic) {
            if (std::binary_search(members.begin(), members.end(), cyc_gen)) {
                continue;
            }
            auto joined_gens = gens;
            joined_gens.push_back(cyc_gen);
            auto joined = g.closure(joined_gens);
            if (found.emplace(joined, joined_gens).second) {
                queue.push_back(std::move(joined));
            }
        }
    }

    std::vector<std::vector<int>> all;
    for (const auto& [members, gens] : found) {
        all.push_back(members);
    }
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) {
            return a.size() < b.size();
        }
        return a < b;  // indices follow the lexicographic element order
    });
    std::vector<PermutationGroup> out;
    out.reserve(all.size());
    for (const auto& members : all) {
        std::vector<Permutation> elems;
        for (int i : members) {
            elems.push_back(g.elements[i]);
        }
        out.push_back(PermutationGroup(group.degree(), std::move(elems)));
    }
    return out;
}

bool is_normal(const PermutationGroup& subgroup, const PermutationGroup& group) {
    if (!subgroup.is_subset_of(group)) {
        throw std::invalid_argument("subgroup is not contained in the group");
    }
    for (const auto& g : group.elements()) {
        const Permutation g_inv = inverse(g);
        for (const auto& h : subgroup.elements()) {
            if (!subgroup.contains(g * h * g_inv)) {
                return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// FiniteGroup

void FiniteGroup::finish() {
    const int n = static_cast<int>(table_.size());
    identity_ = -1;
    for (int a = 0; a < n && identity_ < 0; ++a) {
        bool ok = true;
        for (int b = 0; b < n && ok; ++b) {
            ok = table_[a][b] == b && table_[b][a] == b;
        }
        if (ok) {
            identity_ = a;
        }
    }
    if (identity_ < 0) {
        throw std::logic_error("group table has no identity");
    }
    inverses_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (table_[a][b] == identity_) {
                inverses_[a] = b;
                break;
            }
        }
        if (inverses_[a] < 0) {
            throw std::logic_error("group table element without inverse");
        }
    }
}

FiniteGroup FiniteGroup::from_permutation_group(const PermutationGroup& group) {
    FiniteGroup out;
    IndexedGroup g(group);
    const int n = static_cast<int>(g.elements.size());
    out.table_.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            out.table_[a][b] = g.mul(a, b);
        }
    }
    out.representatives_ = g.elements;
    for (int a = 0; a < n; ++a) {
        out.lookup_.emplace(g.elements[a], a);
    }
    out.finish();
    return out;
}

int FiniteGroup::element_order(int a) const {
    int k = 1;
    for (int x = a; x != identity_; x = table_[x][a]) {
        ++k;
    }
    return k;
}

bool FiniteGroup::is_abelian() const {
    for (std::size_t a = 0; a < size(); ++a) {
        for (std::size_t b = a + 1; b < size(); ++b) {
            if (table_[a][b] != table_[b][a]) {
                return false;
            }
        }
    }
    return true;
}

std::optional<int> FiniteGroup::index_of(const Permutation& p) const {
    auto it = lookup_.find(p);
    if (it == lookup_.end()) {
        return std::nullopt;
    }
    return it->second;
}

bool FiniteGroup::is_subgroup(std::span<const int> elements) const {
    std::vector<bool> in(size(), false);
    for (int e : elements) {
        if (e < 0 || e >= static_cast<int>(size())) {
            return false;
        }
        in[e] = true;
    }
    if (!in[identity_]) {
        return false;
    }
    for (int a : elements) {
        for (int b : elements) {
            if (!in[table_[a][b]]) {
                return false;
            }
        }
    }
    return true;
}

bool FiniteGroup::is_normal_subgroup(std::span<const int> elements) const {
    if (!is_subgroup(elements)) {
        return false;
    }
    std::vector<bool> in(size(), false);
    for (int e : elements) {
        in[e] = true;
    }
    for (int g = 0; g < static_cast<int>(size()); ++g) {
        for (int h : elements) {
            if (!in[table_[table_[g][h]][inverses_[g]]]) {
                return false;
            }
        }
    }
    return true;
}

std::vector<int> FiniteGroup::generated_subgroup(std::span<const int> generators) const {
    std::vector<bool> in(size(), false);
    std::vector<int> members{identity_};
    in[identity_] = true;
    for (std::size_t head = 0; head < members.size(); ++head) {
        for (int g : generators) {
            int y = table_[members[head]][g];
            if (!in[y]) {
                in[y] = true;
                members.push_back(y);
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

FiniteGroup FiniteGroup::quotient(std::span<const int> normal_subgroup) const {
    if (!is_normal_subgroup(normal_subgroup)) {
        throw std::invalid_argument("quotient requires a normal subgroup");
    }
    const int n = static_cast<int>(size());
    std::vector<int> coset_of(n, -1);
    std::vector<int> reps;
    // Coset representative: the member with the smallest representative
    // permutation, which keeps quotient labels deterministic.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return representatives_[a] < representatives_[b]; });
    for (int a : order) {
        if (coset_of[a] >= 0) {
            continue;
        }
        const int c = static_cast<int>(reps.size());
        reps.push_back(a);
        for (int h : normal_subgroup) {
            coset_of[table_[a][h]] = c;
        }
    }
    FiniteGroup out;
    const int m = static_cast<int>(reps.size());
    out.table_.assign(m, std::vector<int>(m));
    for (int x = 0; x < m; ++x) {
        for (int y = 0; y < m; ++y) {
            out.table_[x][y] = coset_of[table_[reps[x]][reps[y]]];
        }
    }
    for (int x = 0; x < m; ++x) {
        out.representatives_.push_back(representatives_[reps[x]]);
    }
    for (const auto& [perm, idx] : lookup_) {
        out.lookup_.emplace(perm, coset_of[idx]);
    }
    out.finish();
    return out;
}

FiniteGroup quotient_group(const PermutationGroup& group, const PermutationGroup& normal) {
    if (!is_normal(normal, group)) {
        throw std::invalid_argument("quotient_group: subgroup is not normal");
    }
    auto table = FiniteGroup::from_permutation_group(group);
    return table.quotient(indices_in(table, normal));
}

std::vector<int> indices_in(const FiniteGroup& group, const PermutationGroup& subgroup) {
    std::set<int> out;
    for (const auto& p : subgroup.elements()) {
        auto idx = group.index_of(p);
        if (!idx) {
            throw std::invalid_argument("element " + p.cycle_string() + " does not belong to the group");
        }
        out.insert(*idx);
    }
    return {out.begin(), out.end()};
}

}  // namespace starcover
