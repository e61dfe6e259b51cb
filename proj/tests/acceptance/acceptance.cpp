// One PASS/FAIL line per acceptance criterion; exits 1 if any criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "starcover/cover.hpp"
#include "starcover/honeycomb.hpp"
#include "starcover/spectra.hpp"
#include "starcover/syt.hpp"
#include "starcover/verify.hpp"
#include "starcover/zeta.hpp"

using namespace starcover;

namespace {

// Wall-clock budgets in seconds, one per criterion.
constexpr double kBudget1 = 2.0;
constexpr double kBudget2 = 1.0;
constexpr double kBudget3 = 60.0;
constexpr double kBudget4 = 5.0;
constexpr double kBudget5 = 300.0;
constexpr double kBudget6 = 300.0;
constexpr double kBudget7 = 2.0;
constexpr double kBudget8 = 1.0;
constexpr double kBudget9 = 30.0;
constexpr double kBudget10 = 60.0;

// Every comparison below is exact; the numeric tolerance is zero.
constexpr long kTolerance = 0;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

int failures = 0;

void criterion(int id, const std::string& name, double budget, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > budget) {
        o.pass = false;
        std::ostringstream s;
        s << "over budget " << budget << " s";
        o.detail += (o.detail.empty() ? "" : "; ") + s.str();
    }
    if (!o.pass) {
        ++failures;
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << id << "] " << name << " (" << std::fixed
              << std::setprecision(2) << secs << " s)";
    if (!o.detail.empty()) {
        std::cout << ": " << o.detail;
    }
    std::cout << std::endl;
}

// prod (x - r)^m built from scratch, independent of the spectrum module.
IntPolynomial from_roots(const std::map<long, int>& roots) {
    IntPolynomial p{1};
    for (const auto& [r, m] : roots) {
        for (int i = 0; i < m; ++i) {
            p = poly_mul(p, IntPolynomial{-r, 1});
        }
    }
    return p;
}

void expect_poly(Outcome& o, const std::string& what, const IntPolynomial& got, const std::string& printed,
                 const std::map<long, int>& roots) {
    const SpectrumMultiset s = integral_spectrum(got);
    o.require(factored_string(s) == printed, what + " printed as " + factored_string(s));
    o.require(got == from_roots(roots), what + " differs from the expanded product");
}

long multiplicity_in(const SpectrumMultiset& s, long k) {
    auto it = s.entries.find(k);
    return it == s.entries.end() ? 0 : it->second;
}

// Closed non-backtracking walks of length len with no tail (the last dart
// may not be reversed by the first), counted by brute force.
long count_closed_nb_walks(const Graph& g, int len) {
    long count = 0;
    std::vector<int> walk;
    std::function<void()> extend = [&] {
        const int k = static_cast<int>(walk.size());
        if (k == len) {
            const Dart& last = g.dart(walk.back());
            if (last.terminus == g.dart(walk.front()).origin && g.dart(walk.back()).pair != walk.front()) {
                ++count;
            }
            return;
        }
        const int from = k == 0 ? -1 : g.dart(walk.back()).terminus;
        for (int d = 0; d < g.dart_count(); ++d) {
            if (k == 0 || (g.dart(d).origin == from && g.dart(walk.back()).pair != d)) {
                walk.push_back(d);
                extend();
                walk.pop_back();
            }
        }
    };
    extend();
    return count;
}

IntPolynomial shared_x4_charpoly() {
    static const IntPolynomial p = charpoly(star_cover(4).cover.total);
    return p;
}

}  // namespace

int main() {
    std::cout << "tolerance: " << kTolerance << " (exact integer arithmetic)" << std::endl;

    const GaloisCover x3 = star_cover(3);
    const S3Family fam3 = star_family();

    criterion(1, "charpoly of X3, K4, X3/<(1,2,3)>, X3/<(1,2)>", kBudget1, [&] {
        Outcome o;
        expect_poly(o, "P_X3", charpoly(x3.cover.total), "(x+3)(x+2)^6(x+1)^3x^4(x-1)^3(x-2)^6(x-3)",
                    {{-3, 1}, {-2, 6}, {-1, 3}, {0, 4}, {1, 3}, {2, 6}, {3, 1}});
        expect_poly(o, "P_K4", charpoly(complete_graph(4)), "(x+1)^3(x-3)", {{-1, 3}, {3, 1}});
        const Permutation c3 = Permutation::parse("(1,2,3)", 4);
        const Permutation c2 = Permutation::parse("(1,2)", 4);
        const Graph q = quotient(x3, PermutationGroup::generate(std::vector{c3})).graph;
        const Graph t = quotient(x3, PermutationGroup::generate(std::vector{c2})).graph;
        expect_poly(o, "P_Q", charpoly(q), "(x+3)(x+1)^3(x-1)^3(x-3)", {{-3, 1}, {-1, 3}, {1, 3}, {3, 1}});
        expect_poly(o, "P_T", charpoly(t), "(x+2)^3(x+1)^3x^2(x-2)^3(x-3)",
                    {{-2, 3}, {-1, 3}, {0, 2}, {2, 3}, {3, 1}});
        return o;
    });

    criterion(2, "P_X3 P_K4^2 = P_Q P_T^2", kBudget2, [&] {
        Outcome o;
        const IntPolynomial y = charpoly(fam3.Y()), x = charpoly(fam3.X());
        const IntPolynomial q = charpoly(fam3.Q), t = charpoly(fam3.T);
        const IntPolynomial lhs = poly_mul(y, poly_mul(x, x));
        const IntPolynomial rhs = poly_mul(q, poly_mul(t, t));
        o.require(lhs == rhs, "expanded products differ");
        o.require(lhs.degree() == 32, "degree " + std::to_string(lhs.degree()));
        if (o.pass) o.detail = "degree 32 on both sides";
        return o;
    });

    criterion(3, "X4/V over K5: four polynomials and their identity", kBudget3, [&] {
        Outcome o;
        const S3Family fam = klein_family();
        o.require(fam.Y().vertex_count() == 30, "X4/V has " + std::to_string(fam.Y().vertex_count()) + " vertices");
        o.require(validate_galois(fam.cover).empty(), "X4/V is not a Galois cover");
        const IntPolynomial y = charpoly(fam.Y()), x = charpoly(fam.X());
        const IntPolynomial q = charpoly(fam.Q), t = charpoly(fam.T);
        expect_poly(o, "P_X4/V", y, "(x+4)(x+2)^10(x+1)^4(x-1)^4(x-2)^10(x-4)",
                    {{-4, 1}, {-2, 10}, {-1, 4}, {1, 4}, {2, 10}, {4, 1}});
        expect_poly(o, "P_K5", x, "(x+1)^4(x-4)", {{-1, 4}, {4, 1}});
        expect_poly(o, "P_Q", q, "(x+4)(x+1)^4(x-1)^4(x-4)", {{-4, 1}, {-1, 4}, {1, 4}, {4, 1}});
        expect_poly(o, "P_T", t, "(x+2)^5(x+1)^4(x-2)^5(x-4)", {{-2, 5}, {-1, 4}, {2, 5}, {4, 1}});
        o.require(poly_mul(y, poly_mul(x, x)) == poly_mul(q, poly_mul(t, t)), "identity fails");
        return o;
    });

    criterion(4, "Z_X3 Z_K4^2 = Z_Q Z_T^2 and the L-function factorization", kBudget4, [&] {
        Outcome o;
        const ZetaReciprocal zy = ihara_zeta_reciprocal(fam3.Y()), zx = ihara_zeta_reciprocal(fam3.X());
        const ZetaReciprocal zq = ihara_zeta_reciprocal(fam3.Q), zt = ihara_zeta_reciprocal(fam3.T);
        const IdentityCertificate cert = verify_zeta_identity(zy, zx, zq, zt);
        o.require(cert.holds, "zeta identity fails");
        o.require(cert.lhs.degree() == 72 + 24, "degree " + std::to_string(cert.lhs.degree()));
        const LFunctions l = l_functions_s3(zy, zx, zq, zt);
        o.require(poly_mul(l.sgn_reciprocal, zx.poly) == zq.poly, "Lsgn^-1 Z_K4^-1 != Z_Q^-1");
        o.require(poly_mul(zx.poly, poly_mul(l.sgn_reciprocal, poly_mul(l.std_reciprocal, l.std_reciprocal))) ==
                      zy.poly,
                  "Z_X3^-1 != Z_K4^-1 Lsgn^-1 (Lstd^-1)^2");
        if (o.pass) o.detail = "deg Lsgn^-1 = " + std::to_string(l.sgn_reciprocal.degree()) +
                   ", deg Lstd^-1 = " + std::to_string(l.std_reciprocal.degree());
        return o;
    });

    criterion(5, "{0,...,n} lies in the integral spectrum of X_n for n = 3, 4", kBudget5, [&] {
        Outcome o;
        const SpectrumMultiset s3 = integral_spectrum(charpoly(x3.cover.total), 3);
        const SpectrumMultiset s4 = integral_spectrum(shared_x4_charpoly(), 4);
        for (int n : {3, 4}) {
            const SpectrumMultiset& s = n == 3 ? s3 : s4;
            for (long k = 0; k <= n; ++k) {
                o.require(multiplicity_in(s, k) > 0, std::to_string(k) + " missing from Spec(X" + std::to_string(n) + ")");
            }
        }
        if (o.pass) o.detail = "Spec(X4) = " + factored_string(s4);
        return o;
    });

    criterion(6, "I_lambda table for n = 3 and mult(n,k) against spectra for n = 3, 4", kBudget6, [&] {
        Outcome o;
        // rows: lambda, I(3..-3), f
        const std::vector<std::pair<std::string, std::vector<int>>> table{
            {"4", {1, 0, 0, 0, 0, 0, 0, 1}},
            {"31", {0, 2, 0, 0, 1, 0, 0, 3}},
            {"22", {0, 0, 0, 2, 0, 0, 0, 2}},
            {"211", {0, 0, 1, 0, 0, 2, 0, 3}},
            {"1111", {0, 0, 0, 0, 0, 0, 1, 1}},
        };
        const auto rows = multiplicity_table(3);
        o.require(rows.size() == table.size(), "table has " + std::to_string(rows.size()) + " rows");
        for (std::size_t r = 0; r < std::min(rows.size(), table.size()); ++r) {
            o.require(rows[r].lambda.to_string() == table[r].first, "row " + std::to_string(r) + " is " +
                                                                        rows[r].lambda.to_string());
            for (int k = 3; k >= -3; --k) {
                o.require(rows[r].I.at(k) == static_cast<std::uint64_t>(table[r].second[3 - k]),
                          "I_" + table[r].first + "(" + std::to_string(k) + ")");
            }
            o.require(rows[r].f == static_cast<std::uint64_t>(table[r].second[7]), "f^" + table[r].first);
        }
        const SpectrumMultiset s3 = integral_spectrum(charpoly(x3.cover.total));
        const SpectrumMultiset s4 = integral_spectrum(shared_x4_charpoly());
        for (int n : {3, 4}) {
            const SpectrumMultiset& s = n == 3 ? s3 : s4;
            for (int k = -n; k <= n; ++k) {
                o.require(static_cast<long>(multiplicity(n, k)) == multiplicity_in(s, k),
                          "mult(" + std::to_string(n) + "," + std::to_string(k) + ")");
            }
        }
        return o;
    });

    criterion(7, "honeycomb quotients and the S4 labeling", kBudget7, [&] {
        Outcome o;
        const std::vector<std::tuple<std::string, LatticeSpec, Graph>> cases{
            {"L/Lambda_Q = cube", lattice_q(), cube_graph()},
            {"L/Lambda_X3 = X3", lattice_x3(), x3.cover.total},
            {"L/G_T = truncated tetrahedron", lattice_t(), truncated_tetrahedron()},
            {"L/G_K4 = K4", lattice_k4(), complete_graph(4)},
        };
        for (const auto& [name, spec, target] : cases) {
            const HoneycombQuotient h(spec);
            const auto map = isomorphic(h.graph(), target);
            o.require(map && is_isomorphism(h.graph(), target, *map), name + " has no certificate");
        }
        const HoneycombQuotient h(lattice_x3());
        const auto labels = label_vertices_s4(h);
        std::vector<int> map;
        std::set<int> seen;
        for (const auto& p : labels) {
            const auto v = x3.cover.total.find_label(p.one_line());
            o.require(v.has_value(), "label " + p.one_line() + " is not a vertex of X3");
            map.push_back(v.value_or(0));
            seen.insert(v.value_or(-1));
        }
        o.require(seen.size() == labels.size(), "labels repeat");
        o.require(is_isomorphism(h.graph(), x3.cover.total, map), "labeling is not an isomorphism onto X3");
        return o;
    });

    criterion(8, "Fourier multiset equals Spec(X3) and the union relation", kBudget8, [&] {
        Outcome o;
        SpectrumMultiset expected;
        expected.entries = {{3, 1}, {-3, 1}, {2, 6}, {-2, 6}, {1, 3}, {-1, 3}, {0, 4}};
        const SpectrumMultiset f = fourier_spectrum();
        o.require(f == expected, "Fourier multiset " + factored_string(f));
        o.require(f == graph_spectrum(x3.cover.total), "differs from Spec(X3)");
        const SpectrumMultiset k4 = graph_spectrum(fam3.X());
        const SpectrumMultiset q = graph_spectrum(fam3.Q), t = graph_spectrum(fam3.T);
        o.require(f + k4 + k4 == q + t + t, "union relation fails");
        return o;
    });

    criterion(9, "Euler products, N3(K4), Frobenius start independence", kBudget9, [&] {
        Outcome o;
        constexpr int kTerms = 8;
        for (const auto& [name, g] : std::vector<std::pair<std::string, Graph>>{
                 {"K4", complete_graph(4)}, {"C3", cycle_graph(3)}, {"cube", cube_graph()}}) {
            const Series euler = euler_product_reciprocal(g, kTerms);
            const Series zeta = series_truncate(ihara_zeta_reciprocal(g).poly, kTerms + 1);
            o.require(Series(euler.begin(), euler.begin() + kTerms + 1) == zeta, "Euler product on " + name);
        }
        const long n3 = count_closed_nb_walks(complete_graph(4), 3);
        o.require(n3 == 24, "brute-force N3(K4) = " + std::to_string(n3));
        const auto series = cycle_count_series(ihara_zeta_reciprocal(complete_graph(4)), 3);
        o.require(series[2] == 24, "N3 from zeta = " + series[2].get_str());

        std::vector<std::vector<IntMatrix>> reps;
        for (const auto& rho : s3_irreps()) {
            reps.push_back(transport(rho, x3.group));
        }
        int checked = 0;
        for (const PrimeCycle& c : enumerate_primes(x3.cover.base, 5)) {
            const int origin = x3.cover.base.dart(c.darts.front()).origin;
            for (const auto& rho : reps) {
                std::optional<IntPolynomial> first;
                for (int v = 0; v < x3.cover.total.vertex_count(); ++v) {
                    if (x3.cover.vertex_map[v] != origin) {
                        continue;
                    }
                    const IntPolynomial f = frobenius_factor(rho[frobenius(x3, c.darts, v)], c.length());
                    if (!first) {
                        first = f;
                    }
                    o.require(f == *first, "Frobenius factor depends on the start");
                    ++checked;
                }
            }
        }
        if (o.pass) o.detail = std::to_string(checked) + " (prime, representation, start) triples";
        return o;
    });

    criterion(10, "validators accept star covers and reject injected faults", kBudget10, [&] {
        Outcome o;
        for (int n = 1; n <= 4; ++n) {
            const GaloisCover g = star_cover(n);
            o.require(validate_cover(g.cover).empty(), "validate_cover(X" + std::to_string(n) + ")");
            o.require(validate_galois(g).empty(), "validate_galois(X" + std::to_string(n) + ")");
        }
        GaloisCover mutated = x3;
        std::swap(mutated.action[1].vertex[0], mutated.action[1].vertex[1]);
        o.require(!validate_galois(mutated).empty(), "mutated vertex action not detected");

        GaloisCover swapped = x3;
        std::swap(swapped.action[1], swapped.action[2]);
        o.require(!validate_galois(swapped).empty(), "permuted action table not detected");

        CoveringMap broken = x3.cover;
        const int d = 0;
        const int base_d = broken.dart_map[d];
        for (int other : broken.base.out_darts(broken.base.dart(base_d).origin)) {
            if (other != base_d) {
                broken.dart_map[d] = other;
                break;
            }
        }
        o.require(!validate_cover(broken).empty(), "broken dart map not detected");

        std::vector<Dart> darts = x3.cover.total.darts();
        darts[0].pair = 2;
        bool rejected = false;
        try {
            Graph::from_darts(x3.cover.total.labels(), darts);
        } catch (const std::invalid_argument&) {
            rejected = true;
        }
        o.require(rejected, "broken pairing accepted");
        return o;
    });

    std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
    return failures == 0 ? 0 : 1;
}
