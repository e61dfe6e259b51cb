#include "starcover/cover.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"

namespace starcover {

namespace {

// Diagnostics are capped so a badly broken input does not flood the caller.
constexpr std::size_t kMaxViolations = 64;

class Violations {
public:
    void add(std::string msg) {
        if (list_.size() < kMaxViolations) {
            list_.push_back(std::move(msg));
        }
    }
    bool empty() const { return list_.empty(); }
    std::vector<std::string> take() { return std::move(list_); }

private:
    std::vector<std::string> list_;
};

bool is_bijection(const std::vector<int>& map, int n) {
    if (static_cast<int>(map.size()) != n) {
        return false;
    }
    std::vector<bool> hit(n, false);
    for (int x : map) {
        if (x < 0 || x >= n || hit[x]) {
            return false;
        }
        hit[x] = true;
    }
    return true;
}

std::string vtx(const Graph& g, int v) {
    std::string s = "vertex " + std::to_string(v);
    if (!g.label(v).empty()) {
        s += " (" + g.label(v) + ")";
    }
    return s;
}

}  // namespace

std::vector<std::string> validate_cover(const CoveringMap& c) {
    Violations out;
    for (auto& msg : c.total.invariant_violations()) {
        out.add("total graph: " + msg);
    }
    for (auto& msg : c.base.invariant_violations()) {
        out.add("base graph: " + msg);
    }
    const int nv = c.total.vertex_count();
    const int nd = c.total.dart_count();
    if (static_cast<int>(c.vertex_map.size()) != nv) {
        out.add("vertex_map has " + std::to_string(c.vertex_map.size()) + " entries for " + std::to_string(nv) +
                " vertices");
        return out.take();
    }
    if (static_cast<int>(c.dart_map.size()) != nd) {
        out.add("dart_map has " + std::to_string(c.dart_map.size()) + " entries for " + std::to_string(nd) +
                " darts");
        return out.take();
    }
    for (int v = 0; v < nv; ++v) {
        if (c.vertex_map[v] < 0 || c.vertex_map[v] >= c.base.vertex_count()) {
            out.add(vtx(c.total, v) + " maps outside the base graph");
        }
    }
    for (int d = 0; d < nd; ++d) {
        if (c.dart_map[d] < 0 || c.dart_map[d] >= c.base.dart_count()) {
            out.add("dart " + std::to_string(d) + " maps outside the base graph");
        }
    }
    if (!out.empty()) {
        return out.take();
    }

    std::vector<bool> covered(c.base.vertex_count(), false);
    for (int v = 0; v < nv; ++v) {
        covered[c.vertex_map[v]] = true;
    }
    for (int w = 0; w < c.base.vertex_count(); ++w) {
        if (!covered[w]) {
            out.add("base " + vtx(c.base, w) + " has an empty fiber");
        }
    }

    for (int d = 0; d < nd; ++d) {
        const Dart& td = c.total.dart(d);
        const Dart& bd = c.base.dart(c.dart_map[d]);
        if (bd.origin != c.vertex_map[td.origin] || bd.terminus != c.vertex_map[td.terminus]) {
            out.add("dart " + std::to_string(d) + " does not commute with its endpoints");
        }
        if (c.dart_map[td.pair] != bd.pair) {
            out.add("dart " + std::to_string(d) + " does not commute with the pairing");
        }
    }

    for (int v = 0; v < nv; ++v) {
        const int w = c.vertex_map[v];
        const auto& up = c.total.out_darts(v);
        const auto& down = c.base.out_darts(w);
        if (up.size() != down.size()) {
            out.add(vtx(c.total, v) + " has degree " + std::to_string(up.size()) + " but its image has degree " +
                    std::to_string(down.size()));
            continue;
        }
        std::set<int> images;
        for (int d : up) {
            images.insert(c.dart_map[d]);
        }
        if (images.size() != up.size()) {
            out.add("darts at " + vtx(c.total, v) + " are not mapped injectively");
        }
    }
    return out.take();
}

std::vector<std::string> validate_galois(const GaloisCover& g) {
    Violations out;
    for (auto& msg : validate_cover(g.cover)) {
        out.add(std::move(msg));
    }
    if (!out.empty()) {
        return out.take();
    }
    const Graph& total = g.cover.total;
    const int nv = total.vertex_count();
    const int nd = total.dart_count();
    const int order = static_cast<int>(g.group.size());
    if (static_cast<int>(g.action.size()) != order) {
        out.add("action table has " + std::to_string(g.action.size()) + " entries for a group of order " +
                std::to_string(order));
        return out.take();
    }
    for (int e = 0; e < order; ++e) {
        const GroupAction& a = g.action[e];
        const std::string who = "group element " + g.group.label(e);
        if (!is_bijection(a.vertex, nv) || !is_bijection(a.dart, nd)) {
            out.add(who + " does not act bijectively");
            continue;
        }
        for (int d = 0; d < nd; ++d) {
            const Dart& src = total.dart(d);
            const Dart& dst = total.dart(a.dart[d]);
            if (dst.origin != a.vertex[src.origin] || dst.terminus != a.vertex[src.terminus] ||
                a.dart[src.pair] != dst.pair) {
                out.add(who + " is not a graph automorphism at dart " + std::to_string(d));
                break;
            }
        }
        for (int v = 0; v < nv; ++v) {
            if (g.cover.vertex_map[a.vertex[v]] != g.cover.vertex_map[v]) {
                out.add(who + " moves " + vtx(total, v) + " out of its fiber");
                break;
            }
        }
        for (int d = 0; d < nd; ++d) {
            if (g.cover.dart_map[a.dart[d]] != g.cover.dart_map[d]) {
                out.add(who + " moves dart " + std::to_string(d) + " out of its fiber");
                break;
            }
        }
        if (e != g.group.identity()) {
            for (int v = 0; v < nv; ++v) {
                if (a.vertex[v] == v) {
                    out.add(who + " fixes " + vtx(total, v) + " (action not free)");
                    break;
                }
            }
        }
    }
    if (!out.empty()) {
        return out.take();
    }
    for (int a = 0; a < order; ++a) {
        for (int b = 0; b < order; ++b) {
            const auto& ab = g.action[g.group.multiply(a, b)].vertex;
            for (int v = 0; v < nv; ++v) {
                if (ab[v] != g.action[b].vertex[g.action[a].vertex[v]]) {
                    out.add("action is not a right action for the pair (" + g.group.label(a) + ", " +
                            g.group.label(b) + ")");
                    v = nv;
                }
            }
        }
    }
    std::vector<std::vector<int>> fibers(g.cover.base.vertex_count());
    for (int v = 0; v < nv; ++v) {
        fibers[g.cover.vertex_map[v]].push_back(v);
    }
    for (int w = 0; w < static_cast<int>(fibers.size()); ++w) {
        const auto& fiber = fibers[w];
        std::set<int> orbit;
        for (int e = 0; e < order; ++e) {
            orbit.insert(g.action[e].vertex[fiber.front()]);
        }
        if (orbit.size() != fiber.size()) {
            out.add("group does not act transitively on the fiber over base " + vtx(g.cover.base, w) + " (orbit " +
                    std::to_string(orbit.size()) + " of " + std::to_string(fiber.size()) + ")");
        }
    }
    return out.take();
}

GaloisCover star_cover(int n) {
    if (n < 1 || n > kStarCoverMaxN) {
        throw std::invalid_argument("star_cover supports 1 <= n <= " + std::to_string(kStarCoverMaxN));
    }
    const int m = n + 1;
    const auto elements = all_permutations(m);
    std::unordered_map<Permutation, int> index;
    for (int i = 0; i < static_cast<int>(elements.size()); ++i) {
        index.emplace(elements[i], i);
    }
    const auto taus = star_transpositions(n);

    Graph base = complete_graph(m);
    std::vector<std::vector<int>> base_dart(m, std::vector<int>(m, -1));
    for (int d = 0; d < base.dart_count(); ++d) {
        base_dart[base.dart(d).origin][base.dart(d).terminus] = d;
    }

    std::vector<std::string> labels;
    std::vector<Dart> darts;
    std::vector<int> vertex_map;
    std::vector<int> dart_map;
    for (int v = 0; v < static_cast<int>(elements.size()); ++v) {
        const Permutation& xi = elements[v];
        labels.push_back(xi.one_line());
        vertex_map.push_back(xi(m) - 1);
        for (int i = 1; i <= n; ++i) {
            const int w = index.at(xi * taus[i - 1]);
            darts.push_back({v, w, w * n + (i - 1)});
            // xi·tau_i(m) = xi(i): the dart lies over the base edge xi(m) -> xi(i).
            dart_map.push_back(base_dart[xi(m) - 1][xi(i) - 1]);
        }
    }
    Graph total = Graph::from_darts(std::move(labels), std::move(darts));

    const PermutationGroup stabilizer = PermutationGroup::stabilizer(m, m);
    FiniteGroup group = FiniteGroup::from_permutation_group(stabilizer);
    std::vector<GroupAction> action(group.size());
    for (int e = 0; e < static_cast<int>(group.size()); ++e) {
        const Permutation& sigma = group.representative(e);
        const Permutation sigma_inv = inverse(sigma);
        GroupAction& a = action[e];
        a.vertex.resize(elements.size());
        a.dart.resize(elements.size() * n);
        for (int v = 0; v < static_cast<int>(elements.size()); ++v) {
            const int image = index.at(elements[v] * sigma);
            a.vertex[v] = image;
            // xi·sigma·tau_{sigma^-1(i)} = xi·tau_i·sigma
            for (int i = 1; i <= n; ++i) {
                a.dart[v * n + (i - 1)] = image * n + (sigma_inv(i) - 1);
            }
        }
    }
    return GaloisCover{CoveringMap{std::move(total), std::move(base), std::move(vertex_map), std::move(dart_map)},
                       std::move(group), std::move(action)};
}

namespace {

struct Orbits {
    std::vector<int> of;     // element -> orbit index
    std::vector<int> first;  // orbit index -> smallest member
};

Orbits orbits(int count, std::span<const int> subgroup, const std::vector<GroupAction>& action,
              std::vector<int> GroupAction::*field) {
    Orbits o;
    o.of.assign(count, -1);
    for (int x = 0; x < count; ++x) {
        if (o.of[x] >= 0) {
            continue;
        }
        const int id = static_cast<int>(o.first.size());
        o.first.push_back(x);
        for (int h : subgroup) {
            o.of[(action[h].*field)[x]] = id;
        }
    }
    return o;
}

}  // namespace

QuotientResult quotient(const GaloisCover& g, std::span<const int> subgroup) {
    if (!g.group.is_subgroup(subgroup)) {
        throw std::invalid_argument("quotient: element set is not a subgroup of the Galois group");
    }
    const Graph& total = g.cover.total;
    const Orbits vo = orbits(total.vertex_count(), subgroup, g.action, &GroupAction::vertex);
    const Orbits dor = orbits(total.dart_count(), subgroup, g.action, &GroupAction::dart);

    std::vector<std::string> labels(vo.first.size());
    for (int v = 0; v < total.vertex_count(); ++v) {
        auto& best = labels[vo.of[v]];
        if (best.empty() || total.label(v) < best) {
            best = total.label(v);
        }
    }
    std::vector<Dart> darts;
    for (int q = 0; q < static_cast<int>(dor.first.size()); ++q) {
        const Dart& d = total.dart(dor.first[q]);
        const int pair = dor.of[d.pair];
        if (pair == q) {
            throw std::invalid_argument("quotient: subgroup identifies dart " + std::to_string(dor.first[q]) +
                                        " with its reverse (would need a half-edge)");
        }
        darts.push_back({vo.of[d.origin], vo.of[d.terminus], pair});
    }
    Graph graph = Graph::from_darts(std::move(labels), std::move(darts));

    std::vector<int> down_vertices(vo.first.size());
    for (std::size_t q = 0; q < vo.first.size(); ++q) {
        down_vertices[q] = g.cover.vertex_map[vo.first[q]];
    }
    std::vector<int> down_darts(dor.first.size());
    for (std::size_t q = 0; q < dor.first.size(); ++q) {
        down_darts[q] = g.cover.dart_map[dor.first[q]];
    }
    QuotientResult r{graph,
                     CoveringMap{total, graph, vo.of, dor.of},
                     CoveringMap{graph, g.cover.base, std::move(down_vertices), std::move(down_darts)},
                     std::vector<int>(subgroup.begin(), subgroup.end())};
    return r;
}

QuotientResult quotient(const GaloisCover& g, const PermutationGroup& subgroup) {
    return quotient(g, indices_in(g.group, subgroup));
}

GaloisCover quotient_galois(const GaloisCover& g, std::span<const int> normal_subgroup) {
    if (!g.group.is_normal_subgroup(normal_subgroup)) {
        throw std::invalid_argument("quotient_galois: subgroup is not normal in the Galois group");
    }
    FiniteGroup factor = g.group.quotient(normal_subgroup);
    QuotientResult q = quotient(g, normal_subgroup);

    const int nv = q.graph.vertex_count();
    const int nd = q.graph.dart_count();
    std::vector<int> vertex_rep(nv, -1), dart_rep(nd, -1);
    for (int v = g.cover.total.vertex_count(); v-- > 0;) {
        vertex_rep[q.upper.vertex_map[v]] = v;
    }
    for (int d = g.cover.total.dart_count(); d-- > 0;) {
        dart_rep[q.upper.dart_map[d]] = d;
    }
    std::vector<GroupAction> action(factor.size());
    for (int c = 0; c < static_cast<int>(factor.size()); ++c) {
        auto member = g.group.index_of(factor.representative(c));
        if (!member) {
            throw std::logic_error("coset representative missing from the Galois group");
        }
        const GroupAction& up = g.action[*member];
        action[c].vertex.resize(nv);
        action[c].dart.resize(nd);
        for (int v = 0; v < nv; ++v) {
            action[c].vertex[v] = q.upper.vertex_map[up.vertex[vertex_rep[v]]];
        }
        for (int d = 0; d < nd; ++d) {
            action[c].dart[d] = q.upper.dart_map[up.dart[dart_rep[d]]];
        }
    }
    return GaloisCover{std::move(q.lower), std::move(factor), std::move(action)};
}

GaloisCover quotient_galois(const GaloisCover& g, const PermutationGroup& normal_subgroup) {
    return quotient_galois(g, indices_in(g.group, normal_subgroup));
}

EdgeDeletion delete_edges_cover(const GaloisCover& g, std::span<const std::pair<int, int>> base_edges) {
    const Graph& base = g.cover.base;
    const Graph& total = g.cover.total;
    std::vector<bool> drop_base(base.dart_count(), false);
    for (auto [u, v] : base_edges) {
        if (u < 0 || u >= base.vertex_count() || v < 0 || v >= base.vertex_count()) {
            throw std::invalid_argument("delete_edges_cover: base vertex out of range");
        }
        int victim = -1;
        for (int d : base.out_darts(u)) {
            if (base.dart(d).terminus == v && !drop_base[d]) {
                victim = d;
                break;
            }
        }
        if (victim < 0) {
            throw std::invalid_argument("delete_edges_cover: no base edge between " + std::to_string(u) + " and " +
                                        std::to_string(v));
        }
        drop_base[victim] = true;
        drop_base[base.dart(victim).pair] = true;
    }

    auto renumber = [](const std::vector<bool>& drop) {
        std::vector<int> idx(drop.size(), -1);
        int next = 0;
        for (std::size_t d = 0; d < drop.size(); ++d) {
            if (!drop[d]) {
                idx[d] = next++;
            }
        }
        return idx;
    };
    auto rebuild = [](const Graph& graph, const std::vector<int>& idx) {
        std::vector<Dart> darts;
        for (int d = 0; d < graph.dart_count(); ++d) {
            if (idx[d] >= 0) {
                const Dart& x = graph.dart(d);
                darts.push_back({x.origin, x.terminus, idx[x.pair]});
            }
        }
        return Graph::from_darts(graph.labels(), std::move(darts));
    };

    std::vector<bool> drop_total(total.dart_count(), false);
    for (int d = 0; d < total.dart_count(); ++d) {
        drop_total[d] = drop_base[g.cover.dart_map[d]];
    }
    const auto base_idx = renumber(drop_base);
    const auto total_idx = renumber(drop_total);

    CoveringMap cover{rebuild(total, total_idx), rebuild(base, base_idx), g.cover.vertex_map, {}};
    for (int d = 0; d < total.dart_count(); ++d) {
        if (total_idx[d] >= 0) {
            cover.dart_map.push_back(base_idx[g.cover.dart_map[d]]);
        }
    }
    std::vector<GroupAction> action(g.action.size());
    for (std::size_t e = 0; e < g.action.size(); ++e) {
        action[e].vertex = g.action[e].vertex;
        for (int d = 0; d < total.dart_count(); ++d) {
            if (total_idx[d] >= 0) {
                action[e].dart.push_back(total_idx[g.action[e].dart[d]]);
            }
        }
    }
    EdgeDeletion result{GaloisCover{std::move(cover), g.group, std::move(action)}, {}};
    if (!is_connected(result.cover.cover.base)) {
        result.warnings.push_back("base graph is disconnected after deleting the requested edges");
    }
    if (!is_connected(result.cover.cover.total)) {
        result.warnings.push_back("total graph is disconnected after deleting the requested edges");
    }
    return result;
}

std::vector<int> lift_walk(const CoveringMap& c, std::span<const int> base_walk, int start) {
    if (start < 0 || start >= c.total.vertex_count()) {
        throw std::invalid_argument("lift start vertex out of range");
    }
    std::vector<int> path{start};
    int current = start;
    for (std::size_t k = 0; k < base_walk.size(); ++k) {
        const int b = base_walk[k];
        if (b < 0 || b >= c.base.dart_count()) {
            throw std::invalid_argument("base walk references a missing dart");
        }
        if (c.base.dart(b).origin != c.vertex_map[current]) {
            throw std::invalid_argument("base walk is not a walk starting at the projection of the start vertex");
        }
        int next = -1;
        for (int d : c.total.out_darts(current)) {
            if (c.dart_map[d] == b) {
                next = c.total.dart(d).terminus;
                break;
            }
        }
        if (next < 0) {
            throw std::logic_error("no lift of base dart " + std::to_string(b));
        }
        current = next;
        path.push_back(current);
    }
    return path;
}

int frobenius(const GaloisCover& g, std::span<const int> base_walk, int start) {
    if (start < 0 || start >= g.cover.total.vertex_count()) {
        throw std::invalid_argument("frobenius: start vertex out of range");
    }
    if (base_walk.empty()) {
        return g.group.identity();
    }
    const Graph& base = g.cover.base;
    for (int b : base_walk) {
        if (b < 0 || b >= base.dart_count()) {
            throw std::invalid_argument("frobenius: walk references a missing dart");
        }
    }
    if (base.dart(base_walk.front()).origin != g.cover.vertex_map[start]) {
        throw std::invalid_argument("frobenius: start vertex is not in the fiber over the walk's origin");
    }
    for (std::size_t k = 0; k < base_walk.size(); ++k) {
        const int next = base_walk[(k + 1) % base_walk.size()];
        if (base.dart(base_walk[k]).terminus != base.dart(next).origin) {
            throw std::invalid_argument(k + 1 == base_walk.size() ? "frobenius: walk is not closed"
                                                                  : "frobenius: darts do not form a walk");
        }
    }
    const int end = lift_walk(g.cover, base_walk, start).back();
    for (int e = 0; e < static_cast<int>(g.group.size()); ++e) {
        if (g.action[e].vertex[start] == end) {
            return e;
        }
    }
    throw std::logic_error("frobenius: no deck transformation reaches the lift's end point");
}

CoveringMap compose_maps(const CoveringMap& upper, const CoveringMap& lower) {
    CoveringMap out{upper.total, lower.base, {}, {}};
    for (int w : upper.vertex_map) {
        out.vertex_map.push_back(lower.vertex_map.at(w));
    }
    for (int d : upper.dart_map) {
        out.dart_map.push_back(lower.dart_map.at(d));
    }
    return out;
}

std::string cover_to_json(const GaloisCover& g) {
    using nlohmann::json;
    json elements = json::array();
    for (int e = 0; e < static_cast<int>(g.group.size()); ++e) {
        elements.push_back(g.group.label(e));
    }
    json action = json::array();
    for (int e = 0; e < static_cast<int>(g.action.size()); ++e) {
        action.push_back({{"element", g.group.label(e)}, {"vertex", g.action[e].vertex}, {"dart", g.action[e].dart}});
    }
    json doc{
        {"total", json::parse(to_json(g.cover.total))},
        {"base", json::parse(to_json(g.cover.base))},
        {"vertex_map", g.cover.vertex_map},
        {"dart_map", g.cover.dart_map},
        {"group", {{"elements", elements}, {"identity", g.group.identity()}, {"table", g.group.table()}}},
        {"action", action},
    };
    return doc.dump();
}

}  // namespace starcover
