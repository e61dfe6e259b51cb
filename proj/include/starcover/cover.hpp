#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "starcover/graph.hpp"
#include "starcover/perm.hpp"

namespace starcover {

/// A graph morphism total -> base given on vertices and darts.
struct CoveringMap {
    Graph total;
    Graph base;
    std::vector<int> vertex_map;  // total vertex -> base vertex
    std::vector<int> dart_map;    // total dart -> base dart
};

/// Action of one group element on the total graph.
struct GroupAction {
    std::vector<int> vertex;
    std::vector<int> dart;
};

/// A cover together with a group acting on the total graph from the right:
/// action[g] sends a vertex v to v·g, and action[g·h] = action[h] ∘ action[g].
struct GaloisCover {
    CoveringMap cover;
    FiniteGroup group;
    std::vector<GroupAction> action;  // indexed by group element
};

/// Empty iff the map is surjective, commutes with endpoints and pairing,
/// and is a bijection on the darts around every total vertex.
std::vector<std::string> validate_cover(const CoveringMap& c);

/// validate_cover plus: each action is a graph automorphism, a right
/// action, fiber-preserving, and free and transitive on every fiber.
std::vector<std::string> validate_galois(const GaloisCover& g);

inline constexpr int kStarCoverMaxN = 5;

/// The star graph Cay(S_{n+1}, {(i,n+1)}) as a G_n-cover of K_{n+1}, where
/// G_n is the stabilizer of n+1 acting by right multiplication. Vertices
/// are all of S_{n+1} in lexicographic order, labeled in one-line notation;
/// dart 3·v + (i-1) (for n = 3) runs from xi to xi·tau_i. The projection
/// is xi -> xi(n+1).
GaloisCover star_cover(int n);

struct QuotientResult {
    Graph graph;
    CoveringMap upper;  // total -> quotient
    CoveringMap lower;  // quotient -> base
    std::vector<int> subgroup;
};

/// Quotient of the total graph by a subgroup (element indices of
/// g.group). Vertices and darts are orbits, ordered by their smallest
/// member; each vertex is labeled by its smallest member's label. Throws
/// std::invalid_argument if the indices do not form a subgroup or an
/// orbit would identify a dart with its own reverse.
QuotientResult quotient(const GaloisCover& g, std::span<const int> subgroup);
QuotientResult quotient(const GaloisCover& g, const PermutationGroup& subgroup);

/// The Galois cover total/N -> base with group G/N. Throws
/// std::invalid_argument unless N is normal.
GaloisCover quotient_galois(const GaloisCover& g, std::span<const int> normal_subgroup);
GaloisCover quotient_galois(const GaloisCover& g, const PermutationGroup& normal_subgroup);

struct EdgeDeletion {
    GaloisCover cover;
    std::vector<std::string> warnings;
};

/// Removes base edges (pairs of base vertex indices) and every dart of
/// their fibers. A disconnected result produces a warning, not an error.
EdgeDeletion delete_edges_cover(const GaloisCover& g, std::span<const std::pair<int, int>> base_edges);

/// The deck transformation carrying `start` to the end of the lift of the
/// closed base walk `base_walk` (dart indices) started at `start`.
/// Returns a group element index. Throws std::invalid_argument if the
/// walk is not closed or does not begin at the projection of `start`.
int frobenius(const GaloisCover& g, std::span<const int> base_walk, int start);

/// The lift of a base walk from `start`: visited total vertices, including
/// both endpoints.
std::vector<int> lift_walk(const CoveringMap& c, std::span<const int> base_walk, int start);

/// upper: X -> Y and lower: Y -> Z give X -> Z.
CoveringMap compose_maps(const CoveringMap& upper, const CoveringMap& lower);

/// JSON document with the total and base graphs, both projection maps, the
/// group element labels and the action tables.
std::string cover_to_json(const GaloisCover& g);

}  // namespace starcover
