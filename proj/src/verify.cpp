#include "starcover/verify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "starcover/honeycomb.hpp"
#include "starcover/spectra.hpp"
#include "starcover/syt.hpp"
#include "starcover/zeta.hpp"

namespace starcover {

S3Family make_s3_family(GaloisCover cover, std::optional<int> c2_generator) {
    identify_s3(cover.group);
    int c3 = -1;
    int c2 = c2_generator.value_or(-1);
    for (int e = 0; e < static_cast<int>(cover.group.size()); ++e) {
        if (c3 < 0 && cover.group.element_order(e) == 3) {
            c3 = e;
        }
        if (c2 < 0 && cover.group.element_order(e) == 2) {
            c2 = e;
        }
    }
    if (cover.group.element_order(c2) != 2) {
        throw std::invalid_argument("C2 generator does not have order 2");
    }
    const int g3[] = {c3};
    const int g2[] = {c2};
    Graph q = quotient(cover, cover.group.generated_subgroup(g3)).graph;
    Graph t = quotient(cover, cover.group.generated_subgroup(g2)).graph;
    return S3Family{std::move(cover), std::move(q), std::move(t)};
}

S3Family star_family() {
    GaloisCover x3 = star_cover(3);
    const auto c2 = x3.group.index_of(Permutation::transposition(4, 1, 2));
    return make_s3_family(std::move(x3), c2);
}

PermutationGroup klein_normal() {
    const Permutation gens[] = {Permutation::from_cycles(5, {{1, 2}, {3, 4}}),
                                Permutation::from_cycles(5, {{1, 3}, {2, 4}})};
    return PermutationGroup::generate(gens);
}

S3Family klein_family() { return make_s3_family(quotient_galois(star_cover(4), klein_normal())); }

bool SuiteReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

namespace {

Check expect_spectrum(const std::string& name, const Graph& g, const std::string& expected) {
    const std::string got = factored_string(graph_spectrum(g));
    return {name, got == expected, got == expected ? got : "got " + got + ", expected " + expected};
}

Check certificate_check(const std::string& name, const IdentityCertificate& c) {
    std::ostringstream out;
    out << "degree " << c.lhs.degree() << " on both sides";
    if (!c.holds) {
        out.str("");
        out << "sides differ";
        if (c.first_difference) {
            out << " first at degree " << *c.first_difference;
        }
    }
    return {name, c.holds, out.str()};
}

Check iso_check(const std::string& name, const Graph& a, const Graph& b) {
    const bool ok = isomorphic(a, b).has_value();
    return {name, ok, ok ? "isomorphism found and verified" : "no isomorphism"};
}

std::string series_string(const Series& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        out += (i ? " " : "") + s[i].get_str();
    }
    return out;
}

SuiteReport suite_s3() {
    SuiteReport r{"s3", {}};
    const S3Family f = star_family();
    r.checks.push_back(expect_spectrum("P_X3", f.Y(), "(x+3)(x+2)^6(x+1)^3x^4(x-1)^3(x-2)^6(x-3)"));
    r.checks.push_back(expect_spectrum("P_K4", f.X(), "(x+1)^3(x-3)"));
    r.checks.push_back(expect_spectrum("P_Q", f.Q, "(x+3)(x+1)^3(x-1)^3(x-3)"));
    r.checks.push_back(expect_spectrum("P_T", f.T, "(x+2)^3(x+1)^3x^2(x-2)^3(x-3)"));
    const IntPolynomial px = charpoly(f.X());
    const IntPolynomial pt = charpoly(f.T);
    const IntPolynomial lhs[] = {charpoly(f.Y()), px, px};
    const IntPolynomial rhs[] = {charpoly(f.Q), pt, pt};
    r.checks.push_back(certificate_check("P_X3 P_K4^2 = P_Q P_T^2", verify_charpoly_identity(lhs, rhs)));
    r.checks.push_back(iso_check("X3/<(1,2,3)> is the cube", f.Q, cube_graph()));
    r.checks.push_back(iso_check("X3/<(1,2)> is the truncated tetrahedron", f.T, truncated_tetrahedron()));
    return r;
}

SuiteReport suite_s4v() {
    SuiteReport r{"s4v", {}};
    const S3Family f = klein_family();
    const auto violations = validate_galois(f.cover);
    r.checks.push_back({"X4/V is an S3-cover of K5", violations.empty() && f.Y().vertex_count() == 30,
                        violations.empty() ? "30 vertices, group of order 6" : violations.front()});
    r.checks.push_back(expect_spectrum("P_X4/V", f.Y(), "(x+4)(x+2)^10(x+1)^4(x-1)^4(x-2)^10(x-4)"));
    r.checks.push_back(expect_spectrum("P_K5", f.X(), "(x+1)^4(x-4)"));
    r.checks.push_back(expect_spectrum("P_Q", f.Q, "(x+4)(x+1)^4(x-1)^4(x-4)"));
    r.checks.push_back(expect_spectrum("P_T", f.T, "(x+2)^5(x+1)^4(x-2)^5(x-4)"));
    const IntPolynomial px = charpoly(f.X());
    const IntPolynomial pt = charpoly(f.T);
    const IntPolynomial lhs[] = {charpoly(f.Y()), px, px};
    const IntPolynomial rhs[] = {charpoly(f.Q), pt, pt};
    r.checks.push_back(certificate_check("P_X4/V P_K5^2 = P_Q P_T^2", verify_charpoly_identity(lhs, rhs)));

    const Permutation gens[] = {Permutation::from_cycles(5, {{1, 2}}), Permutation::from_cycles(5, {{3, 4}})};
    const PermutationGroup other = PermutationGroup::generate(gens);
    const GaloisCover x4 = star_cover(4);
    const bool normal = is_normal(other, PermutationGroup::stabilizer(5, 5));
    const SpectrumMultiset s = graph_spectrum(quotient(x4, other).graph);
    const bool differs = factored_string(s) != factored_string(graph_spectrum(f.Y()));
    r.checks.push_back({"<(1,2),(3,4)> is not normal and gives a different quotient", !normal && differs,
                        "quotient spectrum " + factored_string(s)});
    return r;
}

SuiteReport suite_zeta3() {
    SuiteReport r{"zeta3", {}};
    const S3Family f = star_family();
    const ZetaReciprocal zy = ihara_zeta_reciprocal(f.Y());
    const ZetaReciprocal zx = ihara_zeta_reciprocal(f.X());
    const ZetaReciprocal zq = ihara_zeta_reciprocal(f.Q);
    const ZetaReciprocal zt = ihara_zeta_reciprocal(f.T);
    const std::pair<const char*, const Graph*> graphs[] = {{"X3", &f.Y()}, {"K4", &f.X()}, {"Q", &f.Q}, {"T", &f.T}};
    const ZetaReciprocal* zetas[] = {&zy, &zx, &zq, &zt};
    for (int i = 0; i < 4; ++i) {
        const Graph& g = *graphs[i].second;
        const ZetaReciprocal via_charpoly = zeta_from_charpoly(g, charpoly(g));
        const bool ok = via_charpoly.poly == zetas[i]->poly && zetas[i]->poly.degree() == 2 * g.edge_count();
        r.checks.push_back({std::string("Z_") + graphs[i].first + " from Bass determinant = from charpoly", ok,
                            "degree " + std::to_string(zetas[i]->poly.degree())});
    }
    r.checks.push_back(certificate_check("Z_X3 Z_K4^2 = Z_Q Z_T^2", verify_zeta_identity(zy, zx, zq, zt)));
    try {
        const LFunctions l = l_functions_s3(zy, zx, zq, zt);
        const bool degrees = l.sgn_reciprocal.degree() == 12 && l.std_reciprocal.degree() == 24;
        r.checks.push_back({"L-function divisions exact, Z_X3 = Z_K4 Lsgn^-1 (Lstd^-1)^2", degrees,
                            "deg Lsgn^-1 = " + std::to_string(l.sgn_reciprocal.degree()) +
                                ", deg Lstd^-1 = " + std::to_string(l.std_reciprocal.degree())});
        constexpr int kTerms = 8;
        const std::pair<const char*, Series> expected[] = {
            {"trivial", series_truncate(zx.poly, kTerms + 1)},
            {"sgn", series_truncate(l.sgn_reciprocal, kTerms + 1)},
            {"std", series_truncate(l.std_reciprocal, kTerms + 1)},
        };
        for (const auto& [name, want] : expected) {
            const Series got = artin_l_reciprocal_truncated(f.cover, s3_irrep(name), kTerms);
            r.checks.push_back({std::string("Euler product of 1/L(u, ") + name + ") to u^8", got == want,
                                series_string(got)});
        }
    } catch (const std::domain_error& e) {
        r.checks.push_back({"L-function divisions exact", false, e.what()});
    }
    return r;
}

SuiteReport suite_honeycomb() {
    SuiteReport r{"honeycomb", {}};
    const HoneycombQuotient q(lattice_q());
    const HoneycombQuotient x3(lattice_x3());
    const HoneycombQuotient k4(lattice_k4());
    const HoneycombQuotient t(lattice_t());
    const GaloisCover star = star_cover(3);
    r.checks.push_back(iso_check("L/Lambda_Q is the cube", q.graph(), cube_graph()));
    r.checks.push_back(iso_check("L/Lambda_X3 is X3", x3.graph(), star.cover.total));
    r.checks.push_back(iso_check("L/G_T is the truncated tetrahedron", t.graph(), truncated_tetrahedron()));
    r.checks.push_back(iso_check("L/G_K4 is K4", k4.graph(), complete_graph(4)));
    try {
        const auto labels = label_vertices_s4(x3);
        const auto all = all_permutations(4);
        std::vector<int> map;
        for (const auto& p : labels) {
            map.push_back(static_cast<int>(std::lower_bound(all.begin(), all.end(), p) - all.begin()));
        }
        const bool ok = is_isomorphism(x3.graph(), star.cover.total, map);
        r.checks.push_back({"S4 labeling of L/Lambda_X3 is an isomorphism onto X3", ok,
                            "black(0,0) -> " + labels[x3.vertex_of({Color::black, 0, 0})].one_line()});
    } catch (const std::domain_error& e) {
        r.checks.push_back({"S4 labeling of L/Lambda_X3 is an isomorphism onto X3", false, e.what()});
    }
    const auto to_q = validate_cover(honeycomb_projection(x3, q));
    const auto to_t = validate_cover(honeycomb_projection(x3, t));
    r.checks.push_back({"L/Lambda_X3 -> L/Lambda_Q is a 3-fold cover", to_q.empty(),
                        to_q.empty() ? "24 -> 8 vertices" : to_q.front()});
    r.checks.push_back({"L/Lambda_X3 -> L/G_T is a 2-fold cover", to_t.empty(),
                        to_t.empty() ? "24 -> 12 vertices" : to_t.front()});
    return r;
}

SuiteReport suite_fourier() {
    SuiteReport r{"fourier", {}};
    const S3Family f = star_family();
    const SpectrumMultiset s = fourier_spectrum();
    const SpectrumMultiset x3 = graph_spectrum(f.Y());
    r.checks.push_back({"Fourier multiset = Spec(X3)", s == x3, factored_string(s)});
    const SpectrumMultiset k4 = graph_spectrum(f.X());
    const SpectrumMultiset q = graph_spectrum(f.Q);
    const SpectrumMultiset t = graph_spectrum(f.T);
    const SpectrumMultiset lhs = s + k4 + k4;
    const SpectrumMultiset rhs = q + t + t;
    r.checks.push_back({"S + Spec(K4) + Spec(K4) = Spec(Q) + Spec(T) + Spec(T)", lhs == rhs, factored_string(lhs)});
    return r;
}

SuiteReport suite_syt() {
    SuiteReport r{"syt", {}};
    // Rows 4, 31, 22, 211, 1111; columns k = 3, 2, 1, 0, -1, -2, -3, then f.
    static const int expected[5][8] = {
        {1, 0, 0, 0, 0, 0, 0, 1}, {0, 2, 0, 0, 1, 0, 0, 3}, {0, 0, 0, 2, 0, 0, 0, 2},
        {0, 0, 1, 0, 0, 2, 0, 3}, {0, 0, 0, 0, 0, 0, 1, 1},
    };
    const auto table = multiplicity_table(3);
    bool same = table.size() == 5;
    for (std::size_t i = 0; same && i < 5; ++i) {
        for (int k = 3; k >= -3; --k) {
            same = same && table[i].I.at(k) == static_cast<std::uint64_t>(expected[i][3 - k]);
        }
        same = same && table[i].f == static_cast<std::uint64_t>(expected[i][7]);
    }
    r.checks.push_back({"I_lambda(k) and f^lambda table for n = 3", same, "5 shapes x 7 contents"});
    const SpectrumMultiset s = graph_spectrum(star_cover(3).cover.total);
    std::string detail;
    bool match = true;
    for (int k = -3; k <= 3; ++k) {
        const auto it = s.entries.find(k);
        const long direct = it == s.entries.end() ? 0 : it->second;
        const auto m = multiplicity(3, k);
        match = match && static_cast<long>(m) == direct;
        detail += (detail.empty() ? "" : " ") + std::to_string(k) + ":" + std::to_string(m);
    }
    r.checks.push_back({"mult(3,k) = multiplicity of k in Spec(X3)", match, detail});
    return r;
}

}  // namespace

std::vector<std::string> suite_names() { return {"s3", "s4v", "zeta3", "honeycomb", "fourier", "syt"}; }

SuiteReport run_suite(std::string_view name) {
    if (name == "s3") {
        return suite_s3();
    }
    if (name == "s4v") {
        return suite_s4v();
    }
    if (name == "zeta3") {
        return suite_zeta3();
    }
    if (name == "honeycomb") {
        return suite_honeycomb();
    }
    if (name == "fourier") {
        return suite_fourier();
    }
    if (name == "syt") {
        return suite_syt();
    }
    throw std::invalid_argument("unknown suite: " + std::string(name));
}

}  // namespace starcover
