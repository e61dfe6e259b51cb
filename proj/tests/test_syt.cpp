#include <algorithm>
#include <set>

#include "doctest.h"
#include "starcover/cover.hpp"
#include "starcover/spectra.hpp"
#include "starcover/syt.hpp"

using namespace starcover;

namespace {

std::uint64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

bool is_standard(const StandardTableau& t) {
    std::multiset<int> seen;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        if (static_cast<int>(t.rows[r].size()) != t.shape.parts[r]) {
            return false;
        }
        for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
            seen.insert(t.rows[r][c]);
            if (c > 0 && t.rows[r][c - 1] >= t.rows[r][c]) {
                return false;
            }
            if (r > 0 && t.rows[r - 1][c] >= t.rows[r][c]) {
                return false;
            }
        }
    }
    std::multiset<int> expected;
    for (int i = 1; i <= t.shape.size(); ++i) {
        expected.insert(i);
    }
    return seen == expected;
}

// Removing the box holding n+1 leaves an SYT of a smaller shape, so
// I_lambda(k) is f of lambda minus its corner of content k (if any).
std::uint64_t corner_oracle(const Partition& lambda, int k) {
    for (std::size_t r = 0; r < lambda.parts.size(); ++r) {
        const bool corner = r + 1 == lambda.parts.size() || lambda.parts[r + 1] < lambda.parts[r];
        const int c = lambda.parts[r] - static_cast<int>(r) - 1;
        if (corner && c == k) {
            std::vector<int> parts = lambda.parts;
            if (--parts[r] == 0) {
                parts.pop_back();
            }
            return parts.empty() ? 1 : hook_length_count(make_partition(parts));
        }
    }
    return 0;
}

}  // namespace

TEST_CASE("partition counts") {
    const std::vector<std::size_t> p{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int m = 1; m <= 10; ++m) {
        CHECK(partitions(m).size() == p[m]);
    }
    const auto p4 = partitions(4);
    std::vector<std::string> names;
    for (const auto& l : p4) {
        names.push_back(l.to_string());
    }
    CHECK(names == std::vector<std::string>{"4", "31", "22", "211", "1111"});
    CHECK_THROWS_AS(make_partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(make_partition({2, 0}), std::invalid_argument);
    CHECK(make_partition({12, 3}).to_string() == "12,3");
}

TEST_CASE("enumeration agrees with the hook length formula and is standard") {
    for (int m = 1; m <= 8; ++m) {
        std::uint64_t sum_sq = 0;
        for (const auto& lambda : partitions(m)) {
            const auto all = syt_enumerate(lambda);
            CHECK(all.size() == hook_length_count(lambda));
            for (const auto& t : all) {
                CHECK(is_standard(t));
            }
            sum_sq += all.size() * all.size();
        }
        CHECK(sum_sq == factorial(m));
    }
}

TEST_CASE("content of a box") {
    const auto all = syt_enumerate(make_partition({2, 1}));
    REQUIRE(all.size() == 2);
    // rows {1,2},{3} then {1,3},{2}
    CHECK(all[0].rows == std::vector<std::vector<int>>{{1, 2}, {3}});
    CHECK(content(all[0], 2) == 1);
    CHECK(content(all[0], 3) == -1);
    CHECK_THROWS_AS(content(all[0], 4), std::invalid_argument);
}

TEST_CASE("I_lambda agrees with the corner-removal count") {
    for (int n = 1; n <= 7; ++n) {
        for (const auto& lambda : partitions(n + 1)) {
            std::uint64_t total = 0;
            for (int k = -n - 1; k <= n + 1; ++k) {
                CHECK(I_lambda(lambda, n, k) == corner_oracle(lambda, k));
                total += I_lambda(lambda, n, k);
            }
            CHECK(total == hook_length_count(lambda));
        }
    }
}

TEST_CASE("multiplicities sum to the vertex count and are symmetric") {
    for (int n = 1; n <= 7; ++n) {
        std::uint64_t total = 0;
        for (int k = -n; k <= n; ++k) {
            total += multiplicity(n, k);
            CHECK(multiplicity(n, k) == multiplicity(n, -k));
        }
        CHECK(total == factorial(n + 1));
        CHECK(multiplicity(n, n) == 1);
    }
    CHECK_THROWS(multiplicity(kMaxMultiplicityN + 1, 0));
}

TEST_CASE("multiplicities match computed spectra of star graphs") {
    for (int n = 1; n <= 3; ++n) {
        const SpectrumMultiset s = graph_spectrum(star_cover(n).cover.total);
        REQUIRE(s.is_integral());
        for (int k = -n; k <= n; ++k) {
            const auto it = s.entries.find(k);
            CHECK(multiplicity(n, k) == static_cast<std::uint64_t>(it == s.entries.end() ? 0 : it->second));
        }
    }
}

TEST_CASE("every integer 1..n occurs in Spec(X_n), and 0 once n >= 3") {
    for (int n = 2; n <= kMaxMultiplicityN; ++n) {
        for (int k = n >= 3 ? 0 : 1; k <= n; ++k) {
            CHECK(multiplicity(n, k) > 0);
        }
    }
}

TEST_CASE("multiplicity table rows") {
    const auto rows = multiplicity_table(3);
    REQUIRE(rows.size() == 5);
    CHECK(rows[1].lambda.to_string() == "31");
    CHECK(rows[1].I.at(2) == 2);
    CHECK(rows[1].I.at(-1) == 1);
    CHECK(rows[1].f == 3);
    CHECK(rows[1].I.size() == 7);
}
