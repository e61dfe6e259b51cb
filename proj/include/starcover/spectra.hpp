#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>

#include "starcover/graph.hpp"
#include "starcover/polynomial.hpp"

namespace starcover {

/// det(xI - A), computed by exact determinants at |V|+1 integer points
/// followed by interpolation.
IntPolynomial charpoly(const Graph& g);

/// Integer eigenvalues with multiplicities, plus the part of the
/// characteristic polynomial that has no integer roots.
struct SpectrumMultiset {
    std::map<long, long> entries;
    IntPolynomial residual{1};

    long size() const;
    bool is_integral() const { return residual == IntPolynomial{1}; }

    friend bool operator==(const SpectrumMultiset&, const SpectrumMultiset&) = default;
};

/// Multiset union (residuals multiply).
SpectrumMultiset operator+(const SpectrumMultiset& a, const SpectrumMultiset& b);

/// Strips every integer root of a monic polynomial. Candidates run from
/// -bound to bound; without a bound the Fujiwara root bound is used.
/// Throws std::invalid_argument on non-monic input.
SpectrumMultiset integral_spectrum(const IntPolynomial& p, std::optional<long> bound = std::nullopt);

/// Integral spectrum of a graph's adjacency matrix, bounded by its
/// maximum degree.
SpectrumMultiset graph_spectrum(const Graph& g);

/// "(x+3)(x+1)^3x(x-2)" with roots ascending and any residual last.
std::string factored_string(const SpectrumMultiset& s, char var = 'x');

/// Rebuilds the monic polynomial with this root multiset.
IntPolynomial expand(const SpectrumMultiset& s);

IdentityCertificate verify_charpoly_identity(std::span<const IntPolynomial> lhs, std::span<const IntPolynomial> rhs);

}  // namespace starcover
