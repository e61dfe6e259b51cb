#include <functional>

#include "doctest.h"
#include "starcover/cover.hpp"
#include "starcover/spectra.hpp"
#include "starcover/verify.hpp"
#include "starcover/zeta.hpp"

using namespace starcover;

namespace {

// Closed non-backtracking tailless walks of each length 1..max_len.
std::vector<long> brute_force_counts(const Graph& g, int max_len) {
    std::vector<long> counts(max_len, 0);
    std::vector<int> walk;
    std::function<void()> extend = [&] {
        const int k = static_cast<int>(walk.size());
        if (k > 0 && g.dart(walk.back()).terminus == g.dart(walk.front()).origin &&
            g.dart(walk.back()).pair != walk.front()) {
            ++counts[k - 1];
        }
        if (k == max_len) {
            return;
        }
        for (int d = 0; d < g.dart_count(); ++d) {
            if (k == 0 || (g.dart(d).origin == g.dart(walk.back()).terminus && g.dart(walk.back()).pair != d)) {
                walk.push_back(d);
                extend();
                walk.pop_back();
            }
        }
    };
    extend();
    return counts;
}

IntPolynomial power(const IntPolynomial& p, unsigned e) {
    IntPolynomial out{1};
    for (unsigned i = 0; i < e; ++i) {
        out = poly_mul(out, p);
    }
    return out;
}

Series prefix(const Series& s, std::size_t n) { return Series(s.begin(), s.begin() + static_cast<long>(n)); }

}  // namespace

TEST_CASE("K4 zeta against its hand factorization") {
    // (1-u^2)^2 (1-u)(1-2u)(1+u+2u^2)^3
    const IntPolynomial expected = poly_mul(
        poly_mul(power(IntPolynomial{1, 0, -1}, 2), poly_mul(IntPolynomial{1, -1}, IntPolynomial{1, -2})),
        power(IntPolynomial{1, 1, 2}, 3));
    const ZetaReciprocal z = ihara_zeta_reciprocal(complete_graph(4));
    CHECK(z.r_minus_1 == 2);
    CHECK(z.poly == expected);
    CHECK(z.poly == IntPolynomial{1, 0, 0, -8, -6, 0, 16, 24, -3, -16, -24, 0, 16});
}

TEST_CASE("cycle graphs have 1/zeta = (1-u^n)^2") {
    for (int n = 3; n <= 7; ++n) {
        std::vector<mpz_class> c(n + 1, 0);
        c[0] = 1;
        c[n] = -1;
        const IntPolynomial f{c};
        CHECK(ihara_zeta_reciprocal(cycle_graph(n)).poly == poly_mul(f, f));
    }
}

TEST_CASE("Bass determinant and charpoly routes agree") {
    for (const Graph& g : {complete_graph(4), complete_graph(5), cube_graph(), truncated_tetrahedron(),
                           star_cover(3).cover.total}) {
        CHECK(ihara_zeta_reciprocal(g).poly == zeta_from_charpoly(g, charpoly(g)).poly);
    }
    Graph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    CHECK_THROWS_AS(ihara_zeta_reciprocal(path), std::invalid_argument);
    Graph irregular = complete_graph(4);
    irregular.add_edge(0, 1);
    CHECK_THROWS_AS(zeta_from_charpoly(irregular, charpoly(irregular)), std::invalid_argument);
}

TEST_CASE("cycle counts from zeta match brute-force enumeration") {
    const std::vector<long> k4 = brute_force_counts(complete_graph(4), 6);
    CHECK(k4 == std::vector<long>{0, 0, 24, 24, 0, 96});
    for (const Graph& g : {complete_graph(4), cube_graph(), cycle_graph(4)}) {
        const std::vector<long> brute = brute_force_counts(g, 6);
        const auto series = cycle_count_series(ihara_zeta_reciprocal(g), 6);
        for (int k = 0; k < 6; ++k) {
            CHECK(series[k] == brute[k]);
        }
    }
}

TEST_CASE("prime enumeration") {
    const Graph k4 = complete_graph(4);
    int triangles = 0, squares = 0;
    for (const PrimeCycle& c : enumerate_primes(k4, 4)) {
        triangles += c.length() == 3;
        squares += c.length() == 4;
        for (int i = 0; i < c.length(); ++i) {
            const int next = c.darts[(i + 1) % c.length()];
            CHECK(k4.dart(c.darts[i]).terminus == k4.dart(next).origin);
            CHECK(k4.dart(c.darts[i]).pair != next);
        }
    }
    // 4 triangles and 3 squares, each in two orientations
    CHECK(triangles == 8);
    CHECK(squares == 6);
    CHECK_THROWS(enumerate_primes(k4, kMaxPrimeLength + 1));
}

TEST_CASE("Euler product matches the zeta series") {
    for (const Graph& g : {complete_graph(4), cycle_graph(3), cube_graph(), complete_graph(5)}) {
        const Series euler = euler_product_reciprocal(g, 8);
        CHECK(prefix(euler, 9) == series_truncate(ihara_zeta_reciprocal(g).poly, 9));
    }
}

TEST_CASE("S3 irreducible characters are orthonormal") {
    const auto& irreps = s3_irreps();
    REQUIRE(irreps.size() == 3);
    const auto all = all_permutations(3);
    for (const auto& a : irreps) {
        for (const auto& b : irreps) {
            long sum = 0;
            for (const auto& p : all) {
                sum += a.character(p) * b.character(p);
            }
            CHECK(sum == (a.name == b.name ? 6 : 0));
        }
        for (const auto& p : all) {
            for (const auto& q : all) {
                CHECK(a(p * q) == a(p) * a(q));
            }
        }
    }
    const auto induced = induced_sign_character();
    for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(induced[i] == s3_irrep("sgn").character(all[i]) + s3_irrep("std").character(all[i]));
    }
    CHECK_THROWS(s3_irrep("nope"));
}

TEST_CASE("identify_s3 is a homomorphism") {
    const GaloisCover g = star_cover(3);
    const auto iso = identify_s3(g.group);
    for (int a = 0; a < 6; ++a) {
        for (int b = 0; b < 6; ++b) {
            CHECK(iso[g.group.multiply(a, b)] == iso[a] * iso[b]);
        }
    }
    CHECK_THROWS_AS(identify_s3(star_cover(2).group), std::invalid_argument);
}

TEST_CASE("frobenius_factor") {
    const IntMatrix id = IntMatrix::identity(2);
    // (1 - u^3)^2
    CHECK(frobenius_factor(id, 3) == IntPolynomial{1, 0, 0, -2, 0, 0, 1});
    IntMatrix swap(2, 2);
    swap(0, 1) = 1;
    swap(1, 0) = 1;
    // det(I - S u) = 1 - u^2
    CHECK(frobenius_factor(swap, 1) == IntPolynomial{1, 0, -1});
}

TEST_CASE("Artin L-functions of X3 over K4") {
    const S3Family fam = star_family();
    const ZetaReciprocal zy = ihara_zeta_reciprocal(fam.Y()), zx = ihara_zeta_reciprocal(fam.X());
    const ZetaReciprocal zq = ihara_zeta_reciprocal(fam.Q), zt = ihara_zeta_reciprocal(fam.T);
    const LFunctions l = l_functions_s3(zy, zx, zq, zt);
    CHECK(verify_zeta_identity(zy, zx, zq, zt).holds);

    const Series trivial = artin_l_reciprocal_truncated(fam.cover, s3_irrep("trivial"), 8);
    const Series sgn = artin_l_reciprocal_truncated(fam.cover, s3_irrep("sgn"), 8);
    const Series std_rep = artin_l_reciprocal_truncated(fam.cover, s3_irrep("std"), 8);
    CHECK(prefix(trivial, 9) == series_truncate(zx.poly, 9));
    CHECK(prefix(sgn, 9) == series_truncate(l.sgn_reciprocal, 9));
    CHECK(prefix(std_rep, 9) == series_truncate(l.std_reciprocal, 9));
    CHECK(prefix(std_rep, 9) == Series{1, 0, 0, 0, 6, 0, 4, 0, -15});

    // swapping Q and T must break exactness somewhere
    CHECK_THROWS_AS(l_functions_s3(zy, zx, zt, zq), std::domain_error);
}
