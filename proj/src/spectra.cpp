#include "starcover/spectra.hpp"

#include <algorithm>
#include <stdexcept>

#include "starcover/linalg.hpp"

namespace starcover {

namespace {

constexpr long kRootSearchLimit = 1'000'000;

// 2 * max_k |a_{n-k}|^(1/k), rounded up.
long fujiwara_bound(const IntPolynomial& p) {
    const long n = p.degree();
    mpz_class best = 0;
    for (long k = 1; k <= n; ++k) {
        mpz_class a = abs(p.coefficient(n - k));
        if (k == n) {
            a /= 2;
        }
        mpz_class r;
        mpz_root(r.get_mpz_t(), a.get_mpz_t(), k);
        r += 1;
        best = std::max(best, r);
    }
    best *= 2;
    if (best > kRootSearchLimit) {
        throw std::length_error("integral_spectrum: root bound " + best.get_str() + " too large to scan");
    }
    return best.get_si();
}

// Quotient of p by (x - r) when r is a root.
std::optional<IntPolynomial> divide_root(const IntPolynomial& p, long r) {
    const auto& c = p.coefficients();
    if (c.empty()) {
        return std::nullopt;
    }
    std::vector<mpz_class> q(c.size() - 1);
    mpz_class carry = 0;
    for (std::size_t k = c.size(); k-- > 1;) {
        carry = carry * r + c[k];
        q[k - 1] = carry;
    }
    if (carry * r + c[0] != 0) {
        return std::nullopt;
    }
    return IntPolynomial(std::move(q));
}

}  // namespace

IntPolynomial charpoly(const Graph& g) {
    const std::size_t n = g.vertex_count();
    const IntMatrix a = adjacency_matrix(g);
    const auto xs = centered_points(n + 1);
    std::vector<mpz_class> ys;
    ys.reserve(xs.size());
    for (const auto& t : xs) {
        BigMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) = -a(i, j);
            }
            m(i, i) += t;
        }
        ys.push_back(bareiss_determinant(std::move(m)));
    }
    IntPolynomial p = interpolate(xs, ys);
    if (!p.is_monic() || p.degree() != static_cast<long>(n)) {
        throw std::logic_error("charpoly: interpolation did not produce a monic polynomial of degree |V|");
    }
    return p;
}

long SpectrumMultiset::size() const {
    long total = std::max(0L, residual.degree());
    for (const auto& [root, mult] : entries) {
        total += mult;
    }
    return total;
}

SpectrumMultiset operator+(const SpectrumMultiset& a, const SpectrumMultiset& b) {
    SpectrumMultiset out = a;
    for (const auto& [root, mult] : b.entries) {
        out.entries[root] += mult;
    }
    out.residual = a.residual * b.residual;
    return out;
}

SpectrumMultiset integral_spectrum(const IntPolynomial& p, std::optional<long> bound) {
    if (!p.is_monic()) {
        throw std::invalid_argument("integral_spectrum needs a monic polynomial");
    }
    SpectrumMultiset out;
    IntPolynomial rest = p;
    const long limit = bound ? *bound : fujiwara_bound(p);
    for (long r = -limit; r <= limit && rest.degree() > 0; ++r) {
        while (rest.degree() > 0) {
            auto q = divide_root(rest, r);
            if (!q) {
                break;
            }
            ++out.entries[r];
            rest = std::move(*q);
        }
    }
    out.residual = std::move(rest);
    return out;
}

SpectrumMultiset graph_spectrum(const Graph& g) {
    long bound = 0;
    for (int d : g.degrees()) {
        bound = std::max<long>(bound, d);
    }
    return integral_spectrum(charpoly(g), bound);
}

std::string factored_string(const SpectrumMultiset& s, char var) {
    std::string out;
    for (const auto& [root, mult] : s.entries) {
        if (root == 0) {
            out += var;
        } else {
            out += '(';
            out += var;
            out += root < 0 ? "+" + std::to_string(-root) : "-" + std::to_string(root);
            out += ')';
        }
        if (mult > 1) {
            out += "^" + std::to_string(mult);
        }
    }
    if (!s.is_integral()) {
        out += "(" + s.residual.to_string(var) + ")";
    }
    return out.empty() ? "1" : out;
}

IntPolynomial expand(const SpectrumMultiset& s) {
    IntPolynomial p = s.residual;
    for (const auto& [root, mult] : s.entries) {
        p *= poly_pow(IntPolynomial::linear_factor(root), static_cast<unsigned>(mult));
    }
    return p;
}

IdentityCertificate verify_charpoly_identity(std::span<const IntPolynomial> lhs, std::span<const IntPolynomial> rhs) {
    return compare_products(lhs, rhs);
}

}  // namespace starcover
