#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "starcover/cover.hpp"
#include "starcover/graph.hpp"
#include "starcover/linalg.hpp"
#include "starcover/perm.hpp"
#include "starcover/polynomial.hpp"

namespace starcover {

/// 1/zeta(u) as a polynomial in u. r_minus_1 = |E| - |V|.
struct ZetaReciprocal {
    IntPolynomial poly;
    long r_minus_1 = 0;
};

/// (1-u^2)^(r-1) det(I - uA + u^2 Q) with Q = diag(deg - 1). Throws
/// std::invalid_argument for disconnected graphs or a vertex of degree < 2.
ZetaReciprocal ihara_zeta_reciprocal(const Graph& g);

/// The same polynomial from the characteristic polynomial of a
/// (q+1)-regular graph: (1-u^2)^(|E|-|V|) * sum_k c_k (q u^2 + 1)^k u^(|V|-k).
/// Throws std::invalid_argument if g is not regular or p has the wrong degree.
ZetaReciprocal zeta_from_charpoly(const Graph& g, const IntPolynomial& p);

/// Cyclic dart sequence stored as its least rotation.
struct PrimeCycle {
    std::vector<int> darts;
    int length() const { return static_cast<int>(darts.size()); }
    friend auto operator<=>(const PrimeCycle&, const PrimeCycle&) = default;
};

inline constexpr int kMaxPrimeLength = 16;

/// All prime cycles of length <= max_len, ordered by length then darts.
std::vector<PrimeCycle> enumerate_primes(const Graph& g, int max_len);

inline constexpr int kMaxCycleSeries = 32;

/// N_1..N_m where u d/du log zeta(u) = sum N_k u^k. Entry k-1 holds N_k.
std::vector<mpz_class> cycle_count_series(const ZetaReciprocal& z, int m);

/// prod over primes of (1 - u^len), truncated after u^max_len.
Series euler_product_reciprocal(const Graph& g, int max_len);

struct S3Representation {
    std::string name;
    int degree = 0;
    /// Indexed like all_permutations(3): 123, 132, 213, 231, 312, 321.
    std::vector<IntMatrix> matrices;

    const IntMatrix& operator()(const Permutation& p) const;
    long character(const Permutation& p) const;
};

/// trivial, sgn, std. Checks the homomorphism property and that inducing
/// the sign character of <(1,2)> gives chi_sgn + chi_std; throws
/// std::logic_error otherwise.
const std::vector<S3Representation>& s3_irreps();
const S3Representation& s3_irrep(std::string_view name);

/// Character of the representation induced from the sign character of
/// <(1,2)>, in all_permutations(3) order.
std::vector<long> induced_sign_character();

/// An explicit isomorphism from an abstract group of order 6 onto S3:
/// result[e] is the image of element e. The smallest-index element of
/// order 2 goes to (1,2), the smallest of order 3 to (1,2,3). Throws
/// std::invalid_argument if the group is not isomorphic to S3.
std::vector<Permutation> identify_s3(const FiniteGroup& group);

/// det(I - M u^len) as a polynomial in u.
IntPolynomial frobenius_factor(const IntMatrix& m, int len);

inline constexpr int kMaxArtinLength = 10;

/// prod over base primes of det(I - rho(Frob) u^len), truncated after
/// u^max_len; this is the power series of 1/L(u, rho). rho is given per
/// group element index. Frobenius elements are taken at the smallest
/// vertex of each fiber.
Series artin_l_reciprocal_truncated(const GaloisCover& g, std::span<const IntMatrix> rho, int max_len);
/// Same, for a cover whose group is isomorphic to S3.
Series artin_l_reciprocal_truncated(const GaloisCover& g, const S3Representation& rho, int max_len);

/// Matrices of an S3 representation transported to an order-6 group.
std::vector<IntMatrix> transport(const S3Representation& rho, const FiniteGroup& group);

struct LFunctions {
    IntPolynomial sgn_reciprocal;
    IntPolynomial std_reciprocal;
};

/// Lsgn^-1 = Z_Q / Z_X and Lstd^-1 = Z_Y Z_X / (Z_T Z_Q), then rechecks
/// Z_Y = Z_X Lsgn^-1 (Lstd^-1)^2. Throws std::domain_error if a division
/// is inexact or the recheck fails.
LFunctions l_functions_s3(const ZetaReciprocal& zY, const ZetaReciprocal& zX, const ZetaReciprocal& zQ,
                          const ZetaReciprocal& zT);

/// Z_Y Z_X^2 = Z_Q Z_T^2.
IdentityCertificate verify_zeta_identity(const ZetaReciprocal& zY, const ZetaReciprocal& zX,
                                         const ZetaReciprocal& zQ, const ZetaReciprocal& zT);

}  // namespace starcover
