#include "starcover/honeycomb.hpp"

#include <deque>
#include <regex>
#include <stdexcept>

namespace starcover {

namespace {

long floor_mod(long x, long m) {
    const long r = x % m;
    return r < 0 ? r + m : r;
}

long floor_div(long x, long m) { return (x - floor_mod(x, m)) / m; }

// s*x + t*y = gcd(x, y) >= 0
long extended_gcd(long x, long y, long& s, long& t) {
    long old_r = x, r = y, old_s = 1, s1 = 0, old_t = 0, t1 = 1;
    while (r != 0) {
        const long q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s1;
        std::swap(old_s, s1);
        old_t -= q * t1;
        std::swap(old_t, t1);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    s = old_s;
    t = old_t;
    return old_r;
}

std::string coords(long a, long b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

}  // namespace

LatticeSpec lattice_q() { return {{2, 0}, {0, 2}, false}; }
LatticeSpec lattice_x3() { return {{2, 2}, {4, -2}, false}; }
LatticeSpec lattice_k4() { return {{2, 0}, {0, 2}, true}; }
LatticeSpec lattice_t() { return {{2, 2}, {4, -2}, true}; }

std::optional<LatticeSpec> lattice_preset(std::string_view name) {
    if (name == "Lambda_Q") {
        return lattice_q();
    }
    if (name == "Lambda_X3") {
        return lattice_x3();
    }
    if (name == "G_K4") {
        return lattice_k4();
    }
    if (name == "G_T") {
        return lattice_t();
    }
    return std::nullopt;
}

LatticeSpec parse_lattice(std::string_view text) {
    static const std::regex form(R"(\s*(-?\d+)\s*,\s*(-?\d+)\s*;\s*(-?\d+)\s*,\s*(-?\d+)\s*)");
    std::cmatch m;
    if (!std::regex_match(text.begin(), text.end(), m, form)) {
        throw std::invalid_argument("lattice must look like \"a,b;c,d\", got \"" + std::string(text) + "\"");
    }
    LatticeSpec spec;
    spec.gen1 = {std::stol(m[1]), std::stol(m[2])};
    spec.gen2 = {std::stol(m[3]), std::stol(m[4])};
    return spec;
}

Permutation honeycomb_weight(long a, long b, int direction) {
    static const int targets[3] = {3, 1, 2};
    return Permutation::transposition(4, targets[floor_mod(direction - (a - b), 3)], 4);
}

HoneycombQuotient::HoneycombQuotient(const LatticeSpec& spec) : spec_(spec) {
    const long det = spec.determinant();
    if (det == 0) {
        throw std::invalid_argument("lattice generators are linearly dependent");
    }
    long s = 0, t = 0;
    d2_ = extended_gcd(spec.gen1[1], spec.gen2[1], s, t);
    d1_ = std::labs(det) / d2_;
    c_ = floor_mod(s * spec.gen1[0] + t * spec.gen2[0], d1_);

    const long classes = d1_ * d2_;
    const bool folded = spec.half_turn;
    for (long i = 0; i < classes; ++i) {
        graph_.add_vertex("B" + coords(i / d2_, i % d2_));
    }
    if (!folded) {
        for (long i = 0; i < classes; ++i) {
            graph_.add_vertex("W" + coords(i / d2_, i % d2_));
        }
    }
    black_dart_.assign(classes * 3, -1);
    for (long i = 0; i < classes; ++i) {
        const long a = i / d2_;
        const long b = i % d2_;
        for (int dir = 0; dir < 3; ++dir) {
            const long wa = a + kHoneycombSteps[dir][0];
            const long wb = b + kHoneycombSteps[dir][1];
            if (!folded) {
                const int w = static_cast<int>(classes) + class_index(wa, wb);
                black_dart_[i * 3 + dir] = graph_.add_edge(static_cast<int>(i), w);
                continue;
            }
            // white(wa,wb) is identified with black(1-wa, 1-wb); the edge
            // (P, dir) is identified with (1-P-step, dir).
            const long j = class_index(1 - wa, 1 - wb);
            if (j == i) {
                throw std::invalid_argument("half-turn reverses the edge at black" + coords(a, b) + " direction " +
                                            std::to_string(dir));
            }
            if (i < j) {
                const int d = graph_.add_edge(static_cast<int>(i), static_cast<int>(j));
                black_dart_[i * 3 + dir] = d;
                black_dart_[j * 3 + dir] = d + 1;
            }
        }
    }
    dart_direction_.assign(graph_.dart_count(), -1);
    for (long k = 0; k < classes * 3; ++k) {
        const int d = black_dart_[k];
        dart_direction_[d] = static_cast<int>(k % 3);
        dart_direction_[graph_.dart(d).pair] = static_cast<int>(k % 3);
    }
}

bool HoneycombQuotient::contains(long a, long b) const {
    // adj(M) (a,b)^T must be divisible by det M, M = [gen1 gen2] as columns.
    const auto& g1 = spec_.gen1;
    const auto& g2 = spec_.gen2;
    const long det = spec_.determinant();
    const long x = g2[1] * a - g2[0] * b;
    const long y = -g1[1] * a + g1[0] * b;
    return x % det == 0 && y % det == 0;
}

std::array<long, 2> HoneycombQuotient::reduce(long a, long b) const {
    const long k = floor_div(b, d2_);
    return {floor_mod(a - k * c_, d1_), b - k * d2_};
}

int HoneycombQuotient::class_index(long a, long b) const {
    const auto r = reduce(a, b);
    return static_cast<int>(r[0] * d2_ + r[1]);
}

int HoneycombQuotient::vertex_of(const HoneycombVertex& v) const {
    if (v.color == Color::black) {
        return class_index(v.a, v.b);
    }
    if (spec_.half_turn) {
        return class_index(1 - v.a, 1 - v.b);
    }
    return static_cast<int>(d1_ * d2_) + class_index(v.a, v.b);
}

HoneycombVertex HoneycombQuotient::representative(int vertex) const {
    const long classes = d1_ * d2_;
    if (vertex < 0 || vertex >= graph_.vertex_count()) {
        throw std::out_of_range("honeycomb vertex out of range");
    }
    const long i = vertex % classes;
    return {vertex < classes ? Color::black : Color::white, i / d2_, i % d2_};
}

int HoneycombQuotient::dart_of(long a, long b, int direction) const {
    if (direction < 0 || direction > 2) {
        throw std::out_of_range("honeycomb direction must be 0, 1 or 2");
    }
    return black_dart_[class_index(a, b) * 3 + direction];
}

std::vector<Permutation> label_vertices_s4(const HoneycombQuotient& q) {
    const LatticeSpec& spec = q.spec();
    if (spec.half_turn) {
        throw std::domain_error("S4 labeling is defined on translation quotients only");
    }
    for (const auto& gen : {spec.gen1, spec.gen2}) {
        if (floor_mod(gen[0] - gen[1], 3) != 0) {
            throw std::domain_error("edge weights are not periodic under generator " + coords(gen[0], gen[1]));
        }
    }
    const Graph& g = q.graph();
    std::vector<Permutation> weight;
    for (int d = 0; d < g.dart_count(); ++d) {
        const Dart& x = g.dart(d);
        HoneycombVertex black = q.representative(x.origin);
        if (black.color != Color::black) {
            black = q.representative(x.terminus);
        }
        weight.push_back(honeycomb_weight(black.a, black.b, q.direction(d)));
    }
    std::vector<std::optional<Permutation>> label(g.vertex_count());
    const int root = q.vertex_of({Color::black, 0, 0});
    label[root] = Permutation::identity(4);
    std::deque<int> queue{root};
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int d : g.out_darts(u)) {
            const int v = g.dart(d).terminus;
            if (!label[v]) {
                label[v] = *label[u] * weight[d];
                queue.push_back(v);
            }
        }
    }
    std::vector<Permutation> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!label[v]) {
            throw std::domain_error("honeycomb quotient is disconnected");
        }
        out.push_back(*label[v]);
    }
    for (int d = 0; d < g.dart_count(); ++d) {
        const Dart& x = g.dart(d);
        if (out[x.origin] * weight[d] != out[x.terminus]) {
            throw std::domain_error("path products disagree across dart " + std::to_string(d) + " (" +
                                    g.label(x.origin) + " -> " + g.label(x.terminus) + ")");
        }
    }
    return out;
}

CoveringMap honeycomb_projection(const HoneycombQuotient& fine, const HoneycombQuotient& coarse) {
    if (fine.spec().half_turn) {
        throw std::invalid_argument("honeycomb_projection: the covering lattice must not include the half-turn");
    }
    for (const auto& gen : {fine.spec().gen1, fine.spec().gen2}) {
        if (!coarse.contains(gen[0], gen[1])) {
            throw std::invalid_argument("honeycomb_projection: fine lattice is not contained in the coarse lattice");
        }
    }
    const Graph& g = fine.graph();
    CoveringMap map{g, coarse.graph(), std::vector<int>(g.vertex_count()), std::vector<int>(g.dart_count())};
    for (int v = 0; v < g.vertex_count(); ++v) {
        map.vertex_map[v] = coarse.vertex_of(fine.representative(v));
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        const HoneycombVertex p = fine.representative(v);
        if (p.color != Color::black) {
            continue;
        }
        for (int dir = 0; dir < 3; ++dir) {
            const int d = fine.dart_of(p.a, p.b, dir);
            const int image = coarse.dart_of(p.a, p.b, dir);
            map.dart_map[d] = image;
            map.dart_map[g.dart(d).pair] = coarse.graph().dart(image).pair;
        }
    }
    return map;
}

SpectrumMultiset fourier_spectrum() {
    // 2 cos(pi j / 3) for j mod 6
    static const long twice_cos[6] = {2, 1, -1, -2, -1, 1};
    auto tc = [](long j) { return twice_cos[floor_mod(j, 6)]; };
    SpectrumMultiset out;
    for (long k = 0; k < 6; ++k) {
        for (long l = 0; l < 2; ++l) {
            const long m = -k + 3 * l;
            const long square = 3 + tc(k) + tc(m) + tc(k - m);
            long root = 0;
            while ((root + 1) * (root + 1) <= square) {
                ++root;
            }
            if (root * root != square) {
                throw std::logic_error("|1 + w^k + w^m|^2 = " + std::to_string(square) + " is not a perfect square");
            }
            ++out.entries[root];
            ++out.entries[-root];
        }
    }
    return out;
}

}  // namespace starcover
