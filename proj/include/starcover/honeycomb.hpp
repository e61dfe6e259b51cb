#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "starcover/cover.hpp"
#include "starcover/graph.hpp"
#include "starcover/perm.hpp"
#include "starcover/spectra.hpp"

namespace starcover {

/// Sublattice of Z^2 spanned by gen1 and gen2 (coordinates in the basis
/// v1 = (3/2, sqrt3/2), v2 = (3/2, -sqrt3/2)), optionally extended by the
/// half-turn about the origin.
struct LatticeSpec {
    std::array<long, 2> gen1{};
    std::array<long, 2> gen2{};
    bool half_turn = false;

    long determinant() const { return gen1[0] * gen2[1] - gen1[1] * gen2[0]; }
};

LatticeSpec lattice_q();       // {(2,0),(0,2)}
LatticeSpec lattice_x3();      // {(2,2),(4,-2)}
LatticeSpec lattice_k4();      // lattice_q with the half-turn
LatticeSpec lattice_t();       // lattice_x3 with the half-turn
/// "Lambda_Q", "Lambda_X3", "G_K4", "G_T".
std::optional<LatticeSpec> lattice_preset(std::string_view name);
/// "a,b;c,d". Throws std::invalid_argument on malformed text.
LatticeSpec parse_lattice(std::string_view text);

enum class Color { black, white };

/// black(a,b) sits at (-1,0) + a v1 + b v2 and white(a,b) at
/// (-2,0) + a v1 + b v2. black(a,b) is adjacent to white(a,b),
/// white(a+1,b) and white(a,b+1).
struct HoneycombVertex {
    Color color;
    long a;
    long b;

    friend bool operator==(const HoneycombVertex&, const HoneycombVertex&) = default;
};

/// Neighbour offsets of a black vertex, in direction order 0, 1, 2.
inline constexpr std::array<std::array<long, 2>, 3> kHoneycombSteps{{{0, 0}, {1, 0}, {0, 1}}};

/// Weight of the edge leaving black(a,b) in `direction`. For a = b mod 3
/// directions 0, 1, 2 carry (3,4), (1,4), (2,4); each unit increase of
/// a - b shifts this assignment by one direction. Every hexagon then
/// alternates two transpositions.
Permutation honeycomb_weight(long a, long b, int direction);

/// The finite graph L / Lambda, or L / <Lambda, R> with R(black(a,b)) =
/// white(1-a, 1-b). Vertices are black classes then white classes (only
/// black classes with the half-turn), each ordered by its reduced
/// coordinates.
class HoneycombQuotient {
public:
    /// Throws std::invalid_argument for a degenerate lattice or when the
    /// half-turn would reverse an edge onto itself.
    explicit HoneycombQuotient(const LatticeSpec& spec);

    const LatticeSpec& spec() const { return spec_; }
    const Graph& graph() const { return graph_; }

    bool contains(long a, long b) const;
    /// Reduced coordinates of the class of (a,b) modulo the lattice.
    std::array<long, 2> reduce(long a, long b) const;

    int vertex_of(const HoneycombVertex& v) const;
    /// Reduced representative of a graph vertex.
    HoneycombVertex representative(int vertex) const;
    /// The dart from black(a,b) toward its neighbour in `direction`.
    int dart_of(long a, long b, int direction) const;
    /// Direction of the edge carrying a dart.
    int direction(int dart) const { return dart_direction_.at(dart); }

private:
    int class_index(long a, long b) const;

    LatticeSpec spec_;
    long d1_ = 0;  // Lambda contains (d1, 0) and (c, d2)
    long c_ = 0;
    long d2_ = 0;
    Graph graph_;
    std::vector<int> black_dart_;  // class * 3 + direction -> dart leaving the black end
    std::vector<int> dart_direction_;
};

/// Labels every vertex by the product of edge weights along a path from
/// black(0,0), which gets the identity. Needs a lattice without the
/// half-turn whose generators satisfy a = b mod 3. Throws
/// std::domain_error otherwise, or if two paths give different products.
std::vector<Permutation> label_vertices_s4(const HoneycombQuotient& q);

/// The covering map fine -> coarse induced by the identity on L. Requires
/// fine without half-turn and its lattice inside the coarse lattice.
CoveringMap honeycomb_projection(const HoneycombQuotient& fine, const HoneycombQuotient& coarse);

/// {+-|1 + w^k + w^(-k+3l)| : k mod 6, l mod 2} with w = e^(2 pi i/6),
/// computed exactly.
SpectrumMultiset fourier_spectrum();

}  // namespace starcover
