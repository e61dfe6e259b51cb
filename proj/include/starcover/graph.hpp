#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "starcover/linalg.hpp"

namespace starcover {

/// A directed half of an undirected edge. `pair` is the index of the
/// reverse dart; a loop contributes two darts v -> v paired with each other.
struct Dart {
    int origin;
    int terminus;
    int pair;

    friend bool operator==(const Dart&, const Dart&) = default;
};

/// Finite multigraph stored as paired darts. Vertex labels are metadata
/// and never consulted by any algorithm.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count);

    int add_vertex(std::string label = {});
    /// Adds the undirected edge {u, v} as darts u->v and v->u; returns the
    /// index of u->v (its pair is the next index).
    int add_edge(int u, int v);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    int dart_count() const { return static_cast<int>(darts_.size()); }
    int edge_count() const { return dart_count() / 2; }

    const Dart& dart(int d) const { return darts_.at(d); }
    const std::vector<Dart>& darts() const { return darts_; }
    /// Darts leaving v, in increasing index order.
    const std::vector<int>& out_darts(int v) const { return out_.at(v); }
    int degree(int v) const { return static_cast<int>(out_.at(v).size()); }
    std::vector<int> degrees() const;
    int loop_count() const;

    const std::string& label(int v) const { return labels_.at(v); }
    void set_label(int v, std::string label) { labels_.at(v) = std::move(label); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<int> find_label(std::string_view label) const;

    /// Builds a graph from a raw dart table; throws std::invalid_argument if
    /// the pairing is not a fixed-point-free involution compatible with the
    /// endpoints.
    static Graph from_darts(std::vector<std::string> labels, std::vector<Dart> darts);

    /// Human-readable descriptions of every broken dart invariant.
    std::vector<std::string> invariant_violations() const;

private:
    void rebuild_incidence();

    std::vector<std::string> labels_;
    std::vector<Dart> darts_;
    std::vector<std::vector<int>> out_;
};

Graph complete_graph(int m);
Graph cycle_graph(int m);
/// The 3-cube on vertices 000..111 (binary labels).
Graph cube_graph();
/// The truncated tetrahedron; vertex (i,j) sits on the edge of K4 from i
/// toward j.
Graph truncated_tetrahedron();

/// A[u][v] = number of darts u -> v.
IntMatrix adjacency_matrix(const Graph& g);

/// A vertexless graph counts as connected.
bool is_connected(const Graph& g);

/// Removes one dart u -> v (the lowest-indexed) together with its pair.
/// Throws std::invalid_argument if there is no such dart.
Graph delete_undirected_edge(const Graph& g, int u, int v);

/// Relabels vertex v of g as perm[v]; darts keep their order.
Graph relabel(const Graph& g, const std::vector<int>& perm);

inline constexpr int kIsomorphismVertexLimit = 200;

/// A vertex bijection g1 -> g2 preserving dart multiplicities, or empty.
/// The returned map is verified before it is returned. Throws
/// std::length_error above kIsomorphismVertexLimit vertices.
std::optional<std::vector<int>> isomorphic(const Graph& g1, const Graph& g2);

/// True if `map` is a bijection that preserves all adjacency counts.
bool is_isomorphism(const Graph& g1, const Graph& g2, const std::vector<int>& map);

/// Error raised by from_json, carrying the offending location.
class GraphFormatError : public std::runtime_error {
public:
    GraphFormatError(const std::string& where, const std::string& what)
        : std::runtime_error(where + ": " + what), where_(where) {}
    const std::string& where() const { return where_; }

private:
    std::string where_;
};

std::string to_dot(const Graph& g);
/// {"vertices":[{"id":..,"label":..}], "edges":[{"u":..,"v":..,"multiplicity":..}]}
std::string to_json(const Graph& g);
Graph from_json(std::string_view text);

}  // namespace starcover
