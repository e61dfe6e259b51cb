#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace starcover {

/// Weakly decreasing positive parts.
struct Partition {
    std::vector<int> parts;

    int size() const;
    /// "31", "211"; parts are comma separated if any exceeds 9.
    std::string to_string() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// Throws std::invalid_argument unless the parts are positive and weakly
/// decreasing.
Partition make_partition(std::vector<int> parts);

inline constexpr int kMaxPartitionSize = 20;

/// Reverse-lexicographic: (m), (m-1,1), ..., (1^m).
std::vector<Partition> partitions(int m);

struct StandardTableau {
    Partition shape;
    std::vector<std::vector<int>> rows;
};

inline constexpr int kMaxTableauSize = 12;

/// Every SYT of the shape, ordered lexicographically by the sequence of
/// rows holding 1, 2, ..., m. The count is checked against the hook
/// length formula.
std::vector<StandardTableau> syt_enumerate(const Partition& shape);

std::uint64_t hook_length_count(const Partition& shape);

/// Column minus row (1-based) of the box holding `entry`. Throws
/// std::invalid_argument if the entry is absent.
int content(const StandardTableau& t, int entry);

/// Number of tableaux of shape lambda, |lambda| = n+1, whose largest
/// entry n+1 has content k. Zero for |k| > n.
std::uint64_t I_lambda(const Partition& lambda, int n, int k);

inline constexpr int kMaxMultiplicityN = 9;

/// sum over lambda of f^lambda I_lambda(k), for 1 <= n <= 9.
std::uint64_t multiplicity(int n, int k);

struct MultiplicityRow {
    Partition lambda;
    std::map<int, std::uint64_t> I;  // k in [-n, n]
    std::uint64_t f = 0;
};

std::vector<MultiplicityRow> multiplicity_table(int n);

}  // namespace starcover
