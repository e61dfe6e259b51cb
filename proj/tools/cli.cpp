#include "cli.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "starcover/cover.hpp"
#include "starcover/honeycomb.hpp"
#include "starcover/spectra.hpp"
#include "starcover/syt.hpp"
#include "starcover/verify.hpp"
#include "starcover/zeta.hpp"

namespace starcover::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::string format = "text";
    std::string out_path;
    bool quiet = false;
    bool no_timestamp = false;
};

struct GraphSource {
    std::string in;
    int star = 0;
    int complete = 0;
    std::string preset;
    std::string lattice;
    bool half_turn = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--in", in, "graph JSON file");
        cmd->add_option("--star", star, "star graph X_n");
        cmd->add_option("--complete", complete, "complete graph K_m");
        cmd->add_option("--preset", preset, "honeycomb quotient: Lambda_Q, Lambda_X3, G_K4, G_T");
        cmd->add_option("--lattice", lattice, "honeycomb quotient by \"a,b;c,d\"");
        cmd->add_flag("--half-turn", half_turn, "fold the honeycomb quotient by the half-turn");
    }
};

// What a command produced: a JSON report, its text rendering, and an
// optional artifact for --out.
struct Outcome {
    json report;
    std::vector<std::string> lines;
    std::string artifact_json;
    std::string artifact_dot;
    int code = 0;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    std::ostringstream s;
    s << std::put_time(&utc, "%Y-%m-%dT%H:%M:%SZ");
    return s.str();
}

json coefficients(const IntPolynomial& p) {
    json out = json::array();
    for (const auto& c : p.coefficients()) {
        out.push_back(c.get_str());
    }
    return out;
}

json spectrum_json(const SpectrumMultiset& s) {
    json entries = json::object();
    for (const auto& [root, mult] : s.entries) {
        entries[std::to_string(root)] = mult;
    }
    return {{"eigenvalues", entries}, {"residual", coefficients(s.residual)}, {"factored", factored_string(s)}};
}

HoneycombQuotient honeycomb_from(const std::string& preset, const std::string& lattice, bool half_turn) {
    LatticeSpec spec;
    if (!preset.empty()) {
        auto p = lattice_preset(preset);
        if (!p) {
            throw UsageError("unknown lattice preset " + preset);
        }
        spec = *p;
        spec.half_turn = spec.half_turn || half_turn;
    } else {
        spec = parse_lattice(lattice);
        spec.half_turn = half_turn;
    }
    return HoneycombQuotient(spec);
}

Graph load_graph(const GraphSource& src) {
    const int given = !src.in.empty() + (src.star != 0) + (src.complete != 0) + !src.preset.empty() +
                      !src.lattice.empty();
    if (given != 1) {
        throw UsageError("give exactly one of --in, --star, --complete, --preset, --lattice");
    }
    if (!src.in.empty()) {
        return from_json(read_file(src.in));
    }
    if (src.star != 0) {
        return star_cover(src.star).cover.total;
    }
    if (src.complete != 0) {
        return complete_graph(src.complete);
    }
    return honeycomb_from(src.preset, src.lattice, src.half_turn).graph();
}

std::string zeta_factored(const IntPolynomial& p) {
    IntPolynomial rest = p;
    std::string out;
    for (const auto& [factor, name] : {std::pair{IntPolynomial{1, -1}, "(1-u)"}, std::pair{IntPolynomial{1, 1}, "(1+u)"}}) {
        long power = 0;
        while (rest.degree() > 0) {
            auto q = poly_exact_div(rest, factor);
            if (!q) {
                break;
            }
            rest = std::move(*q);
            ++power;
        }
        if (power > 0) {
            out += name + (power > 1 ? "^" + std::to_string(power) : "");
        }
    }
    if (rest != IntPolynomial{1}) {
        out += "(" + rest.to_string('u') + ")";
    }
    return out.empty() ? "1" : out;
}

Outcome cmd_star(int n) {
    const GaloisCover g = star_cover(n);
    Outcome o;
    const Graph& x = g.cover.total;
    o.report = {{"command", "star"},       {"n", n}, {"vertices", x.vertex_count()}, {"edges", x.edge_count()},
                {"base_vertices", g.cover.base.vertex_count()}, {"group_order", g.group.size()}};
    o.lines.push_back("X_" + std::to_string(n) + ": " + std::to_string(x.vertex_count()) + " vertices, " +
                      std::to_string(x.edge_count()) + " edges");
    o.lines.push_back("covers K_" + std::to_string(n + 1) + " with a group of order " +
                      std::to_string(g.group.size()));
    o.artifact_json = cover_to_json(g);
    o.artifact_dot = to_dot(x);
    return o;
}

Outcome cmd_quotient(int n, const std::string& subgroup) {
    const GaloisCover g = star_cover(n);
    std::vector<Permutation> gens;
    std::stringstream parts(subgroup);
    std::string piece;
    while (std::getline(parts, piece, ';')) {
        if (piece.find_first_not_of(" \t") == std::string::npos) {
            continue;
        }
        Permutation p = Permutation::parse(piece, n + 1);
        if (p(n + 1) != n + 1) {
            throw UsageError("generator " + piece + " moves " + std::to_string(n + 1) + " so it is not in G_" +
                             std::to_string(n));
        }
        gens.push_back(std::move(p));
    }
    const PermutationGroup h =
        gens.empty() ? PermutationGroup::trivial(n + 1) : PermutationGroup::generate(gens);
    const QuotientResult q = quotient(g, h);
    const bool normal = is_normal(h, PermutationGroup::stabilizer(n + 1, n + 1));
    const SpectrumMultiset s = graph_spectrum(q.graph);
    Outcome o;
    o.report = {{"command", "quotient"},
                {"n", n},
                {"subgroup_order", h.order()},
                {"normal", normal},
                {"vertices", q.graph.vertex_count()},
                {"edges", q.graph.edge_count()},
                {"charpoly", factored_string(s)}};
    o.lines.push_back("X_" + std::to_string(n) + "/H with |H| = " + std::to_string(h.order()) + ": " +
                      std::to_string(q.graph.vertex_count()) + " vertices, " +
                      std::to_string(q.graph.edge_count()) + " edges");
    o.lines.push_back(std::string("H is ") + (normal ? "normal (Galois quotient)" : "not normal"));
    o.lines.push_back("charpoly " + factored_string(s));
    o.artifact_json = to_json(q.graph);
    o.artifact_dot = to_dot(q.graph);
    return o;
}

Outcome cmd_verify(const std::string& suite) {
    std::vector<std::string> names;
    if (suite == "all") {
        names = suite_names();
    } else {
        const auto known = suite_names();
        if (std::find(known.begin(), known.end(), suite) == known.end()) {
            throw UsageError("unknown suite " + suite);
        }
        names = {suite};
    }
    Outcome o;
    o.report = {{"command", "verify"}, {"suites", json::array()}};
    for (const auto& name : names) {
        const SuiteReport r = run_suite(name);
        json checks = json::array();
        for (const auto& c : r.checks) {
            checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
            o.lines.push_back(std::string(c.pass ? "PASS " : "FAIL ") + name + ": " + c.name + " [" + c.detail + "]");
        }
        o.report["suites"].push_back({{"suite", name}, {"pass", r.pass()}, {"checks", checks}});
        o.lines.push_back("suite " + name + ": " + (r.pass() ? "PASS" : "FAIL"));
        if (!r.pass()) {
            o.code = 1;
        }
    }
    o.report["pass"] = o.code == 0;
    return o;
}

Outcome cmd_charpoly(const Graph& g) {
    const IntPolynomial p = charpoly(g);
    long bound = 0;
    for (int d : g.degrees()) {
        bound = std::max<long>(bound, d);
    }
    const std::string f = factored_string(integral_spectrum(p, bound));
    Outcome o;
    o.report = {{"command", "charpoly"}, {"degree", p.degree()}, {"coefficients", coefficients(p)}, {"factored", f}};
    o.lines.push_back(f);
    return o;
}

Outcome cmd_spectrum(const Graph& g) {
    const SpectrumMultiset s = graph_spectrum(g);
    Outcome o;
    o.report = spectrum_json(s);
    o.report["command"] = "spectrum";
    o.report["integral"] = s.is_integral();
    for (auto it = s.entries.rbegin(); it != s.entries.rend(); ++it) {
        o.lines.push_back(std::to_string(it->first) + " x" + std::to_string(it->second));
    }
    if (!s.is_integral()) {
        o.lines.push_back("residual " + s.residual.to_string());
    }
    return o;
}

Outcome cmd_zeta(const Graph& g) {
    const ZetaReciprocal z = ihara_zeta_reciprocal(g);
    Outcome o;
    const std::string f = zeta_factored(z.poly);
    o.report = {{"command", "zeta"},
                {"r_minus_1", z.r_minus_1},
                {"degree", z.poly.degree()},
                {"reciprocal", coefficients(z.poly)},
                {"factored", f}};
    o.lines.push_back("1/zeta(u) = " + f);
    return o;
}

Outcome cmd_mult(int n, std::optional<int> k, bool table) {
    Outcome o;
    o.report = {{"command", "mult"}, {"n", n}};
    if (table) {
        const auto rows = multiplicity_table(n);
        json out = json::array();
        std::ostringstream head;
        head << std::left << std::setw(12) << "lambda" << std::right;
        for (int c = n; c >= -n; --c) {
            head << std::setw(4) << c;
        }
        head << " |" << std::setw(8) << "f";
        o.lines.push_back(head.str());
        for (const auto& row : rows) {
            json counts = json::object();
            std::ostringstream line;
            line << std::left << std::setw(12) << row.lambda.to_string() << std::right;
            for (int c = n; c >= -n; --c) {
                counts[std::to_string(c)] = row.I.at(c);
                line << std::setw(4) << row.I.at(c);
            }
            line << " |" << std::setw(8) << row.f;
            o.lines.push_back(line.str());
            out.push_back({{"lambda", row.lambda.parts}, {"I", counts}, {"f", row.f}});
        }
        o.report["table"] = out;
        return o;
    }
    json mults = json::object();
    const int lo = k ? *k : -n;
    const int hi = k ? *k : n;
    for (int c = hi; c >= lo; --c) {
        const auto m = multiplicity(n, c);
        mults[std::to_string(c)] = m;
        o.lines.push_back("mult(" + std::to_string(n) + ", " + std::to_string(c) + ") = " + std::to_string(m));
    }
    o.report["multiplicity"] = mults;
    return o;
}

Outcome cmd_honeycomb(const std::string& preset, const std::string& lattice, bool half_turn, bool label) {
    if (preset.empty() == lattice.empty()) {
        throw UsageError("give exactly one of --preset, --lattice");
    }
    const HoneycombQuotient q = honeycomb_from(preset, lattice, half_turn);
    const Graph& g = q.graph();
    const SpectrumMultiset s = graph_spectrum(g);
    Outcome o;
    o.report = {{"command", "honeycomb"},
                {"generators", {q.spec().gen1, q.spec().gen2}},
                {"half_turn", q.spec().half_turn},
                {"vertices", g.vertex_count()},
                {"edges", g.edge_count()},
                {"charpoly", factored_string(s)}};
    o.lines.push_back(std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edge_count()) + " edges");
    o.lines.push_back("charpoly " + factored_string(s));
    if (label) {
        const auto labels = label_vertices_s4(q);
        json out = json::array();
        for (int v = 0; v < g.vertex_count(); ++v) {
            out.push_back({{"vertex", g.label(v)}, {"label", labels[v].one_line()}});
            o.lines.push_back(g.label(v) + " " + labels[v].one_line());
        }
        o.report["labels"] = out;
    }
    o.artifact_json = to_json(g);
    o.artifact_dot = to_dot(g);
    return o;
}

Outcome cmd_iso(const std::string& a, const std::string& b) {
    const Graph g1 = from_json(read_file(a));
    const Graph g2 = from_json(read_file(b));
    const auto map = isomorphic(g1, g2);
    Outcome o;
    o.report = {{"command", "iso"}, {"isomorphic", map.has_value()}};
    if (map) {
        o.report["map"] = *map;
        o.lines.push_back("isomorphic");
        for (int v = 0; v < g1.vertex_count(); ++v) {
            o.lines.push_back(g1.label(v) + " -> " + g2.label((*map)[v]));
        }
    } else {
        o.lines.push_back("not isomorphic");
        o.code = 1;
    }
    return o;
}

int finish(const Outcome& o, const Globals& g, std::ostream& out) {
    if (!g.out_path.empty()) {
        std::string body = g.format == "dot" ? o.artifact_dot : o.artifact_json;
        if (body.empty()) {
            json r = o.report;
            if (!g.no_timestamp) {
                r["timestamp"] = timestamp();
            }
            body = r.dump(2);
        }
        std::ofstream file(g.out_path, std::ios::binary);
        file << body << '\n';
        if (!file) {
            throw UsageError("cannot write " + g.out_path);
        }
    }
    if (g.quiet) {
        return o.code;
    }
    if (g.format == "json") {
        json r = o.report;
        if (!g.no_timestamp) {
            r["timestamp"] = timestamp();
        }
        out << r.dump(2) << '\n';
    } else if (g.format == "dot" && g.out_path.empty()) {
        if (o.artifact_dot.empty()) {
            throw UsageError("this command has no graph to print as DOT");
        }
        out << o.artifact_dot;
    } else {
        for (const auto& line : o.lines) {
            out << line << '\n';
        }
    }
    return o.code;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Star-graph covers, spectra and zeta functions"};
    app.name("starcover");
    app.require_subcommand(1);
    Globals g;
    app.add_option("--format", g.format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
    app.add_option("--out", g.out_path, "write the constructed object (or the report) to a file");
    app.add_flag("--quiet", g.quiet, "print nothing; rely on the exit code");
    app.add_flag("--no-timestamp", g.no_timestamp, "omit the timestamp from JSON reports");

    int n = 0;
    std::string subgroup;
    std::string suite;
    std::optional<int> k;
    bool table = false;
    bool label = false;
    std::string preset;
    std::string lattice;
    bool half_turn = false;
    std::string file_a;
    std::string file_b;
    GraphSource source;

    auto* star = app.add_subcommand("star", "build the star graph X_n as a cover of K_{n+1}");
    star->add_option("--n", n, "1 <= n <= 5")->required();

    auto* quot = app.add_subcommand("quotient", "quotient of X_n by a subgroup of G_n");
    quot->add_option("--n", n)->required();
    quot->add_option("--subgroup", subgroup, "generators separated by ';', e.g. \"(1,2);(2,3)\"")->required();

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "s3, s4v, zeta3, honeycomb, fourier, syt or all")->required();

    auto* cpoly = app.add_subcommand("charpoly", "characteristic polynomial");
    auto* spec = app.add_subcommand("spectrum", "integral spectrum");
    auto* zeta = app.add_subcommand("zeta", "reciprocal Ihara zeta function");
    GraphSource cpoly_src, spec_src, zeta_src;
    cpoly_src.attach(cpoly);
    spec_src.attach(spec);
    zeta_src.attach(zeta);

    auto* mult = app.add_subcommand("mult", "eigenvalue multiplicities of X_n from tableaux");
    mult->add_option("--n", n)->required();
    mult->add_option("--k", k);
    mult->add_flag("--table", table);

    auto* honey = app.add_subcommand("honeycomb", "quotient of the honeycomb lattice");
    honey->add_option("--preset", preset);
    honey->add_option("--lattice", lattice);
    honey->add_flag("--half-turn", half_turn);
    honey->add_flag("--label", label, "label vertices by S4 path products");

    auto* iso = app.add_subcommand("iso", "graph isomorphism");
    iso->add_option("--a", file_a)->required();
    iso->add_option("--b", file_b)->required();

    for (auto* sub : app.get_subcommands({})) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        Outcome o;
        if (star->parsed()) {
            o = cmd_star(n);
        } else if (quot->parsed()) {
            o = cmd_quotient(n, subgroup);
        } else if (verify->parsed()) {
            o = cmd_verify(suite);
        } else if (cpoly->parsed()) {
            o = cmd_charpoly(load_graph(cpoly_src));
        } else if (spec->parsed()) {
            o = cmd_spectrum(load_graph(spec_src));
        } else if (zeta->parsed()) {
            o = cmd_zeta(load_graph(zeta_src));
        } else if (mult->parsed()) {
            o = cmd_mult(n, k, table);
        } else if (honey->parsed()) {
            o = cmd_honeycomb(preset, lattice, half_turn, label);
        } else if (iso->parsed()) {
            o = cmd_iso(file_a, file_b);
        }
        return finish(o, g, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace starcover::cli
