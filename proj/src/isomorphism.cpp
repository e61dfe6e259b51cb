#include <algorithm>
#include <map>
#include <set>

#include "starcover/graph.hpp"

namespace starcover {

namespace {

// Both graphs live in one index space (g1 first, then g2) so that color
// refinement assigns the same color ids to equivalent vertices on both sides.
struct JointGraph {
    int n1 = 0;
    int n2 = 0;
    std::vector<std::vector<std::pair<int, int>>> neighbours;  // (vertex, multiplicity)

    JointGraph(const Graph& g1, const Graph& g2) : n1(g1.vertex_count()), n2(g2.vertex_count()) {
        neighbours.resize(n1 + n2);
        add(g1, 0);
        add(g2, n1);
    }

    void add(const Graph& g, int offset) {
        for (int v = 0; v < g.vertex_count(); ++v) {
            std::map<int, int> counts;
            for (int d : g.out_darts(v)) {
                ++counts[g.dart(d).terminus + offset];
            }
            neighbours[v + offset].assign(counts.begin(), counts.end());
        }
    }
};

using Signature = std::pair<int, std::vector<std::pair<int, int>>>;

std::vector<int> refine(const JointGraph& g, std::vector<int> colors) {
    const int n = static_cast<int>(colors.size());
    int classes = static_cast<int>(std::set<int>(colors.begin(), colors.end()).size());
    while (true) {
        std::vector<Signature> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<std::pair<int, int>> s;
            for (auto [w, mult] : g.neighbours[v]) {
                s.emplace_back(colors[w], mult);
            }
            std::sort(s.begin(), s.end());
            sig[v] = {colors[v], std::move(s)};
        }
        std::map<Signature, int> ids;
        for (const auto& s : sig) {
            ids.emplace(s, 0);
        }
        int next = 0;
        for (auto& [s, id] : ids) {
            id = next++;
        }
        for (int v = 0; v < n; ++v) {
            colors[v] = ids[sig[v]];
        }
        if (next == classes) {
            return colors;
        }
        classes = next;
    }
}

class Matcher {
public:
    Matcher(const Graph& g1, const Graph& g2) : g1_(g1), g2_(g2), joint_(g1, g2) {}

    std::optional<std::vector<int>> run() { return search(std::vector<int>(joint_.n1 + joint_.n2, 0)); }

private:
    std::optional<std::vector<int>> search(std::vector<int> colors) {
        colors = refine(joint_, std::move(colors));
        const int palette = *std::max_element(colors.begin(), colors.end()) + 1;
        std::vector<int> left(palette, 0), right(palette, 0);
        for (int v = 0; v < joint_.n1; ++v) {
            ++left[colors[v]];
        }
        for (int v = joint_.n1; v < joint_.n1 + joint_.n2; ++v) {
            ++right[colors[v]];
        }
        if (left != right) {
            return std::nullopt;
        }
        int target = -1;
        for (int c = 0; c < palette; ++c) {
            if (left[c] > 1 && (target < 0 || left[c] < left[target])) {
                target = c;
            }
        }
        if (target < 0) {
            std::vector<int> where(palette, -1);
            for (int w = 0; w < joint_.n2; ++w) {
                where[colors[joint_.n1 + w]] = w;
            }
            std::vector<int> map(joint_.n1);
            for (int v = 0; v < joint_.n1; ++v) {
                map[v] = where[colors[v]];
            }
            if (is_isomorphism(g1_, g2_, map)) {
                return map;
            }
            return std::nullopt;
        }
        int pivot = 0;
        while (colors[pivot] != target) {
            ++pivot;
        }
        for (int w = joint_.n1; w < joint_.n1 + joint_.n2; ++w) {
            if (colors[w] != target) {
                continue;
            }
            auto trial = colors;
            trial[pivot] = palette;
            trial[w] = palette;
            if (auto found = search(std::move(trial))) {
                return found;
            }
        }
        return std::nullopt;
    }

    const Graph& g1_;
    const Graph& g2_;
    JointGraph joint_;
};

}  // namespace

bool is_isomorphism(const Graph& g1, const Graph& g2, const std::vector<int>& map) {
    const int n = g1.vertex_count();
    if (n != g2.vertex_count() || static_cast<int>(map.size()) != n || g1.dart_count() != g2.dart_count()) {
        return false;
    }
    std::vector<bool> hit(n, false);
    for (int v : map) {
        if (v < 0 || v >= n || hit[v]) {
            return false;
        }
        hit[v] = true;
    }
    const IntMatrix a1 = adjacency_matrix(g1);
    const IntMatrix a2 = adjacency_matrix(g2);
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (a1(u, v) != a2(map[u], map[v])) {
                return false;
            }
        }
    }
    return true;
}

std::optional<std::vector<int>> isomorphic(const Graph& g1, const Graph& g2) {
    if (g1.vertex_count() > kIsomorphismVertexLimit || g2.vertex_count() > kIsomorphismVertexLimit) {
        throw std::length_error("isomorphism test limited to " + std::to_string(kIsomorphismVertexLimit) +
                                " vertices");
    }
    if (g1.vertex_count() != g2.vertex_count() || g1.dart_count() != g2.dart_count()) {
        return std::nullopt;
    }
    auto d1 = g1.degrees();
    auto d2 = g2.degrees();
    std::sort(d1.begin(), d1.end());
    std::sort(d2.begin(), d2.end());
    if (d1 != d2) {
        return std::nullopt;
    }
    if (g1.vertex_count() == 0) {
        return std::vector<int>{};
    }
    return Matcher(g1, g2).run();
}

}  // namespace starcover
