#include "starcover/graph.hpp"

#include <algorithm>
#include <deque>

namespace starcover {

Graph::Graph(int vertex_count) {
    for (int v = 0; v < vertex_count; ++v) {
        add_vertex(std::to_string(v + 1));
    }
}

int Graph::add_vertex(std::string label) {
    labels_.push_back(std::move(label));
    out_.emplace_back();
    return vertex_count() - 1;
}

int Graph::add_edge(int u, int v) {
    if (u < 0 || u >= vertex_count() || v < 0 || v >= vertex_count()) {
        throw std::out_of_range("add_edge: vertex out of range");
    }
    const int d = dart_count();
    darts_.push_back({u, v, d + 1});
    darts_.push_back({v, u, d});
    out_[u].push_back(d);
    out_[v].push_back(d + 1);
    return d;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> out(vertex_count());
    for (int v = 0; v < vertex_count(); ++v) {
        out[v] = degree(v);
    }
    return out;
}

int Graph::loop_count() const {
    int loops = 0;
    for (const auto& d : darts_) {
        loops += d.origin == d.terminus ? 1 : 0;
    }
    return loops / 2;
}

std::optional<int> Graph::find_label(std::string_view label) const {
    for (int v = 0; v < vertex_count(); ++v) {
        if (labels_[v] == label) {
            return v;
        }
    }
    return std::nullopt;
}

void Graph::rebuild_incidence() {
    out_.assign(labels_.size(), {});
    for (int d = 0; d < dart_count(); ++d) {
        out_.at(darts_[d].origin).push_back(d);
    }
}

Graph Graph::from_darts(std::vector<std::string> labels, std::vector<Dart> darts) {
    Graph g;
    g.labels_ = std::move(labels);
    g.darts_ = std::move(darts);
    for (const auto& d : g.darts_) {
        if (d.origin < 0 || d.origin >= g.vertex_count() || d.terminus < 0 || d.terminus >= g.vertex_count() ||
            d.pair < 0 || d.pair >= g.dart_count()) {
            throw std::invalid_argument("dart table references a missing vertex or dart");
        }
    }
    g.rebuild_incidence();
    auto problems = g.invariant_violations();
    if (!problems.empty()) {
        throw std::invalid_argument("invalid dart table: " + problems.front());
    }
    return g;
}

std::vector<std::string> Graph::invariant_violations() const {
    std::vector<std::string> out;
    for (int e = 0; e < dart_count(); ++e) {
        const Dart& d = darts_[e];
        if (d.pair < 0 || d.pair >= dart_count()) {
            out.push_back("dart " + std::to_string(e) + " has no valid pair");
            continue;
        }
        const Dart& r = darts_[d.pair];
        if (d.pair == e) {
            out.push_back("dart " + std::to_string(e) + " is paired with itself");
        }
        if (r.pair != e) {
            out.push_back("pairing is not an involution at dart " + std::to_string(e));
        }
        if (r.origin != d.terminus || r.terminus != d.origin) {
            out.push_back("dart " + std::to_string(e) + " and its pair have mismatched endpoints");
        }
    }
    return out;
}

Graph complete_graph(int m) {
    if (m < 1) {
        throw std::invalid_argument("complete_graph needs m >= 1");
    }
    Graph g(m);
    for (int u = 0; u < m; ++u) {
        for (int v = u + 1; v < m; ++v) {
            g.add_edge(u, v);
        }
    }
    return g;
}

Graph cycle_graph(int m) {
    if (m < 3) {
        throw std::invalid_argument("cycle_graph needs m >= 3");
    }
    Graph g(m);
    for (int v = 0; v < m; ++v) {
        g.add_edge(v, (v + 1) % m);
    }
    return g;
}

Graph cube_graph() {
    Graph g;
    for (int v = 0; v < 8; ++v) {
        std::string label;
        for (int bit = 2; bit >= 0; --bit) {
            label.push_back((v >> bit) & 1 ? '1' : '0');
        }
        g.add_vertex(label);
    }
    for (int v = 0; v < 8; ++v) {
        for (int bit = 0; bit < 3; ++bit) {
            int w = v ^ (1 << bit);
            if (v < w) {
                g.add_edge(v, w);
            }
        }
    }
    return g;
}

Graph truncated_tetrahedron() {
    Graph g;
    std::map<std::pair<int, int>, int> id;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (i != j) {
                id[{i, j}] = g.add_vertex(std::to_string(i + 1) + ">" + std::to_string(j + 1));
            }
        }
    }
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            for (int k = j + 1; k < 4; ++k) {
                if (i != j && i != k) {
                    g.add_edge(id[{i, j}], id[{i, k}]);
                }
            }
            if (i < j) {
                g.add_edge(id[{i, j}], id[{j, i}]);
            }
        }
    }
    return g;
}

IntMatrix adjacency_matrix(const Graph& g) {
    IntMatrix a(g.vertex_count(), g.vertex_count());
    for (const auto& d : g.darts()) {
        a(d.origin, d.terminus) += 1;
    }
    return a;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) {
        return true;
    }
    std::vector<bool> seen(g.vertex_count(), false);
    std::deque<int> queue{0};
    seen[0] = true;
    int reached = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int d : g.out_darts(v)) {
            int w = g.dart(d).terminus;
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                queue.push_back(w);
            }
        }
    }
    return reached == g.vertex_count();
}

Graph delete_undirected_edge(const Graph& g, int u, int v) {
    int victim = -1;
    for (int d : g.out_darts(u)) {
        if (g.dart(d).terminus == v) {
            victim = d;
            break;
        }
    }
    if (victim < 0) {
        throw std::invalid_argument("no edge between vertices " + std::to_string(u) + " and " + std::to_string(v));
    }
    const int partner = g.dart(victim).pair;
    std::vector<int> new_index(g.dart_count(), -1);
    int next = 0;
    for (int d = 0; d < g.dart_count(); ++d) {
        if (d != victim && d != partner) {
            new_index[d] = next++;
        }
    }
    std::vector<Dart> darts;
    for (int d = 0; d < g.dart_count(); ++d) {
        if (new_index[d] >= 0) {
            const Dart& x = g.dart(d);
            darts.push_back({x.origin, x.terminus, new_index[x.pair]});
        }
    }
    return Graph::from_darts(g.labels(), std::move(darts));
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.vertex_count()) {
        throw std::invalid_argument("relabel: permutation size mismatch");
    }
    std::vector<std::string> labels(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        labels.at(perm[v]) = g.label(v);
    }
    std::vector<Dart> darts;
    for (const auto& d : g.darts()) {
        darts.push_back({perm[d.origin], perm[d.terminus], d.pair});
    }
    return Graph::from_darts(std::move(labels), std::move(darts));
}

}  // namespace starcover
