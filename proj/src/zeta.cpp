#include "starcover/zeta.hpp"

#include <algorithm>
#include <stdexcept>

namespace starcover {

namespace {

IntPolynomial one_minus_u2_power(long exponent) {
    if (exponent < 0) {
        throw std::invalid_argument("negative (1-u^2) exponent");
    }
    return poly_pow(IntPolynomial{1, 0, -1}, static_cast<unsigned>(exponent));
}

void require_zeta_hypotheses(const Graph& g) {
    if (g.vertex_count() == 0) {
        throw std::invalid_argument("zeta of the empty graph is undefined");
    }
    if (!is_connected(g)) {
        throw std::invalid_argument("zeta needs a connected graph");
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) < 2) {
            throw std::invalid_argument("zeta needs minimum degree 2; vertex " + std::to_string(v) + " has degree " +
                                        std::to_string(g.degree(v)));
        }
    }
}

}  // namespace

ZetaReciprocal ihara_zeta_reciprocal(const Graph& g) {
    require_zeta_hypotheses(g);
    const std::size_t n = g.vertex_count();
    const IntMatrix a = adjacency_matrix(g);
    const auto us = centered_points(2 * n + 1);
    std::vector<mpz_class> ys;
    for (const auto& u : us) {
        BigMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) = -u * a(i, j);
            }
            m(i, i) += 1 + u * u * (g.degree(static_cast<int>(i)) - 1);
        }
        ys.push_back(bareiss_determinant(std::move(m)));
    }
    ZetaReciprocal z;
    z.r_minus_1 = g.edge_count() - g.vertex_count();
    z.poly = one_minus_u2_power(z.r_minus_1) * interpolate(us, ys);
    if (z.poly.coefficient(0) != 1) {
        throw std::logic_error("zeta reciprocal does not start with 1");
    }
    return z;
}

ZetaReciprocal zeta_from_charpoly(const Graph& g, const IntPolynomial& p) {
    require_zeta_hypotheses(g);
    const int d = g.degree(0);
    for (int v = 1; v < g.vertex_count(); ++v) {
        if (g.degree(v) != d) {
            throw std::invalid_argument("zeta_from_charpoly needs a regular graph");
        }
    }
    const long n = g.vertex_count();
    if (p.degree() != n || !p.is_monic()) {
        throw std::invalid_argument("zeta_from_charpoly: polynomial is not a monic degree-|V| polynomial");
    }
    const IntPolynomial inner{1, 0, d - 1};
    IntPolynomial sum;
    IntPolynomial power{1};
    for (long k = 0; k <= n; ++k) {
        sum += IntPolynomial::constant(p.coefficient(k)) * power * IntPolynomial::monomial(1, n - k);
        power *= inner;
    }
    ZetaReciprocal z;
    z.r_minus_1 = g.edge_count() - n;
    z.poly = one_minus_u2_power(z.r_minus_1) * sum;
    return z;
}

namespace {

class PrimeSearch {
public:
    PrimeSearch(const Graph& g, int max_len) : g_(g), max_len_(max_len) {}

    std::vector<PrimeCycle> run() {
        for (int first = 0; first < g_.dart_count(); ++first) {
            path_ = {first};
            extend(first);
        }
        std::sort(found_.begin(), found_.end(), [](const PrimeCycle& a, const PrimeCycle& b) {
            return a.length() != b.length() ? a.length() < b.length() : a.darts < b.darts;
        });
        return std::move(found_);
    }

private:
    void extend(int first) {
        const int last = path_.back();
        const int len = static_cast<int>(path_.size());
        if (g_.dart(last).terminus == g_.dart(first).origin && g_.dart(last).pair != first && accept()) {
            found_.push_back({path_});
        }
        if (len == max_len_) {
            return;
        }
        for (int next : g_.out_darts(g_.dart(last).terminus)) {
            if (next < first || next == g_.dart(last).pair) {
                continue;
            }
            path_.push_back(next);
            extend(first);
            path_.pop_back();
        }
    }

    // Least among its rotations and not a proper power.
    bool accept() const {
        const int len = static_cast<int>(path_.size());
        for (int shift = 1; shift < len; ++shift) {
            int cmp = 0;
            for (int k = 0; k < len && cmp == 0; ++k) {
                const int x = path_[(k + shift) % len];
                cmp = x < path_[k] ? -1 : (x > path_[k] ? 1 : 0);
            }
            if (cmp <= 0) {
                return false;
            }
        }
        return true;
    }

    const Graph& g_;
    int max_len_;
    std::vector<int> path_;
    std::vector<PrimeCycle> found_;
};

}  // namespace

std::vector<PrimeCycle> enumerate_primes(const Graph& g, int max_len) {
    if (max_len < 0 || max_len > kMaxPrimeLength) {
        throw std::length_error("enumerate_primes supports max_len <= " + std::to_string(kMaxPrimeLength));
    }
    if (max_len == 0) {
        return {};
    }
    return PrimeSearch(g, max_len).run();
}

std::vector<mpz_class> cycle_count_series(const ZetaReciprocal& z, int m) {
    if (m < 0 || m > kMaxCycleSeries) {
        throw std::length_error("cycle_count_series supports m <= " + std::to_string(kMaxCycleSeries));
    }
    const auto& p = z.poly;
    if (p.coefficient(0) != 1) {
        throw std::invalid_argument("zeta reciprocal must have constant term 1");
    }
    std::vector<mpz_class> n(m + 1);
    for (int k = 1; k <= m; ++k) {
        mpz_class acc = -p.coefficient(k) * k;
        for (int j = 1; j < k; ++j) {
            acc -= p.coefficient(j) * n[k - j];
        }
        n[k] = acc;
    }
    return {n.begin() + 1, n.end()};
}

Series euler_product_reciprocal(const Graph& g, int max_len) {
    Series acc(max_len + 1);
    acc[0] = 1;
    for (const auto& c : enumerate_primes(g, max_len)) {
        Series factor(max_len + 1);
        factor[0] = 1;
        factor[c.length()] = -1;
        acc = series_mul(acc, factor, max_len + 1);
    }
    return acc;
}

IntPolynomial frobenius_factor(const IntMatrix& m, int len) {
    const std::size_t d = m.rows();
    if (m.cols() != d) {
        throw std::invalid_argument("frobenius_factor needs a square matrix");
    }
    const auto ts = centered_points(d + 1);
    std::vector<mpz_class> ys;
    for (const auto& t : ts) {
        BigMatrix x(d, d);
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                x(i, j) = -t * m(i, j);
            }
            x(i, i) += 1;
        }
        ys.push_back(bareiss_determinant(std::move(x)));
    }
    return interpolate(ts, ys).substitute(IntPolynomial::monomial(1, len));
}

Series artin_l_reciprocal_truncated(const GaloisCover& g, std::span<const IntMatrix> rho, int max_len) {
    if (max_len < 0 || max_len > kMaxArtinLength) {
        throw std::length_error("artin_l_reciprocal_truncated supports max_len <= " +
                                std::to_string(kMaxArtinLength));
    }
    if (rho.size() != g.group.size()) {
        throw std::invalid_argument("representation must give one matrix per group element");
    }
    const Graph& base = g.cover.base;
    std::vector<int> fiber_start(base.vertex_count(), -1);
    for (int v = g.cover.total.vertex_count(); v-- > 0;) {
        fiber_start[g.cover.vertex_map[v]] = v;
    }
    Series acc(max_len + 1);
    acc[0] = 1;
    for (const auto& c : enumerate_primes(base, max_len)) {
        const int start = fiber_start[base.dart(c.darts.front()).origin];
        const int frob = frobenius(g, c.darts, start);
        acc = series_mul(acc, series_truncate(frobenius_factor(rho[frob], c.length()), max_len + 1), max_len + 1);
    }
    return acc;
}

Series artin_l_reciprocal_truncated(const GaloisCover& g, const S3Representation& rho, int max_len) {
    const auto matrices = transport(rho, g.group);
    return artin_l_reciprocal_truncated(g, matrices, max_len);
}

LFunctions l_functions_s3(const ZetaReciprocal& zY, const ZetaReciprocal& zX, const ZetaReciprocal& zQ,
                          const ZetaReciprocal& zT) {
    auto sgn = poly_exact_div(zQ.poly, zX.poly);
    if (!sgn) {
        throw std::domain_error("Z_Q / Z_X is not exact: inputs are not one S3-cover family");
    }
    auto stdr = poly_exact_div(zY.poly * zX.poly, zT.poly * zQ.poly);
    if (!stdr) {
        throw std::domain_error("Z_Y Z_X / (Z_T Z_Q) is not exact: inputs are not one S3-cover family");
    }
    if (zX.poly * *sgn * *stdr * *stdr != zY.poly) {
        throw std::domain_error("Z_Y differs from Z_X Lsgn^-1 (Lstd^-1)^2");
    }
    return {std::move(*sgn), std::move(*stdr)};
}

IdentityCertificate verify_zeta_identity(const ZetaReciprocal& zY, const ZetaReciprocal& zX,
                                         const ZetaReciprocal& zQ, const ZetaReciprocal& zT) {
    const IntPolynomial lhs[] = {zY.poly, zX.poly, zX.poly};
    const IntPolynomial rhs[] = {zQ.poly, zT.poly, zT.poly};
    return compare_products(lhs, rhs);
}

}  // namespace starcover
