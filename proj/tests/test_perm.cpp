#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "starcover/perm.hpp"

using namespace starcover;

namespace {

Permutation random_perm(std::mt19937& rng, int m) {
    std::vector<int> images(m);
    std::iota(images.begin(), images.end(), 1);
    std::shuffle(images.begin(), images.end(), rng);
    return Permutation(images);
}

}  // namespace

TEST_CASE("composition applies the right factor first") {
    const Permutation p = Permutation::parse("(1,2)", 3);
    const Permutation q = Permutation::parse("(2,3)", 3);
    // q sends 2 to 3, then p leaves 3 alone
    CHECK((p * q)(2) == 3);
    CHECK((p * q)(1) == 2);
    CHECK((p * q).one_line() == "231");
    CHECK((q * p).one_line() == "312");
}

TEST_CASE("parsing one-line and cycle notation") {
    CHECK(Permutation::parse("4231").cycle_string() == "(1,4)");
    CHECK(Permutation::parse("(1,4)(2,3)", 4).one_line() == "4321");
    CHECK(Permutation::parse("()", 3).is_identity());
    CHECK(Permutation::parse("2,3,1").one_line() == "231");
    CHECK(Permutation::parse("(1,2,3)", 3) == Permutation::parse("231"));
    CHECK_THROWS_AS(Permutation::parse("1123"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("(1,5)", 4), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("(1,2", 4), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("1234", 5), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
}

TEST_CASE("sign and order") {
    CHECK(Permutation::parse("(1,2,3)(4,5)", 5).order() == 6);
    CHECK(Permutation::parse("(1,2,3)(4,5)", 5).sign() == -1);
    CHECK(Permutation::identity(4).sign() == 1);
    CHECK(Permutation::transposition(4, 1, 4).cycle_string() == "(1,4)");
}

TEST_CASE("group axioms on random permutations") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        const int m = 1 + trial % 8;
        const Permutation a = random_perm(rng, m), b = random_perm(rng, m), c = random_perm(rng, m);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a * inverse(a)).is_identity());
        CHECK(inverse(a * b) == inverse(b) * inverse(a));
        CHECK((a * b).sign() == a.sign() * b.sign());
        CHECK(Permutation::parse(a.cycle_string(), m) == a);
    }
}

TEST_CASE("star transpositions") {
    const auto taus = star_transpositions(3);
    REQUIRE(taus.size() == 3);
    CHECK(taus[0].cycle_string() == "(1,4)");
    CHECK(taus[2].cycle_string() == "(3,4)");
}

TEST_CASE("all_permutations is lexicographic and complete") {
    const auto all = all_permutations(4);
    CHECK(all.size() == 24);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    CHECK(all.front().one_line() == "1234");
    CHECK(all.back().one_line() == "4321");
}

TEST_CASE("generated groups and stabilizers") {
    CHECK(PermutationGroup::symmetric(4).order() == 24);
    CHECK(PermutationGroup::stabilizer(4, 4).order() == 6);
    const auto s4 = PermutationGroup::generate(star_transpositions(3));
    CHECK(s4 == PermutationGroup::symmetric(4));
    const std::vector gens{Permutation::parse("(1,2,3,4)", 4)};
    CHECK(PermutationGroup::generate(gens).order() == 4);
    CHECK_THROWS(PermutationGroup(3, {Permutation::parse("(1,2)", 3)}));
}

TEST_CASE("subgroup enumeration matches known counts") {
    // S3 has 6 subgroups, S4 has 30
    CHECK(subgroups(PermutationGroup::symmetric(3)).size() == 6);
    CHECK(subgroups(PermutationGroup::symmetric(4)).size() == 30);
    for (const auto& h : subgroups(PermutationGroup::symmetric(4))) {
        CHECK(24 % h.order() == 0);
    }
    CHECK_THROWS_AS(subgroups(PermutationGroup::symmetric(4), 10), std::length_error);
}

TEST_CASE("normality") {
    const auto s4 = PermutationGroup::symmetric(4);
    const std::vector klein{Permutation::parse("(1,2)(3,4)", 4), Permutation::parse("(1,3)(2,4)", 4)};
    const std::vector non_normal{Permutation::parse("(1,2)", 4), Permutation::parse("(3,4)", 4)};
    CHECK(is_normal(PermutationGroup::generate(klein), s4));
    CHECK_FALSE(is_normal(PermutationGroup::generate(non_normal), s4));
    CHECK_THROWS_AS(is_normal(s4, PermutationGroup::stabilizer(4, 4)), std::invalid_argument);
}

TEST_CASE("finite group tables") {
    const auto s3 = PermutationGroup::symmetric(3);
    const FiniteGroup g = FiniteGroup::from_permutation_group(s3);
    CHECK(g.size() == 6);
    CHECK_FALSE(g.is_abelian());
    for (int a = 0; a < 6; ++a) {
        for (int b = 0; b < 6; ++b) {
            CHECK(g.representative(g.multiply(a, b)) == g.representative(a) * g.representative(b));
        }
        CHECK(g.multiply(a, g.inverse(a)) == g.identity());
    }
    const int t = *g.index_of(Permutation::parse("(1,2,3)", 3));
    CHECK(g.element_order(t) == 3);
    const auto c3 = g.generated_subgroup(std::vector{t});
    CHECK(c3.size() == 3);
    CHECK(g.is_normal_subgroup(c3));
    CHECK(g.quotient(c3).size() == 2);
    const int r = *g.index_of(Permutation::parse("(1,2)", 3));
    CHECK_FALSE(g.is_normal_subgroup(g.generated_subgroup(std::vector{r})));
}

TEST_CASE("quotient by the Klein group inside the stabilizer of 5") {
    const auto g = PermutationGroup::stabilizer(5, 5);
    const std::vector gens{Permutation::parse("(1,2)(3,4)", 5), Permutation::parse("(1,3)(2,4)", 5)};
    const FiniteGroup q = quotient_group(g, PermutationGroup::generate(gens));
    REQUIRE(q.size() == 6);
    std::vector<std::string> reps;
    for (int a = 0; a < 6; ++a) {
        reps.push_back(q.label(a));
    }
    CHECK(reps == std::vector<std::string>{"12345", "12435", "13245", "13425", "14235", "14325"});
    CHECK_FALSE(q.is_abelian());
    CHECK(q.index_of(Permutation::parse("(1,2)(3,4)", 5)) == q.identity());
}
