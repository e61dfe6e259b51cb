#include "starcover/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include <gmpxx.h>

namespace starcover {

IntPolynomial::IntPolynomial(std::vector<mpz_class> ascending) : coeffs_(std::move(ascending)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> ascending) {
    for (long c : ascending) {
        coeffs_.emplace_back(c);
    }
    trim();
}

IntPolynomial IntPolynomial::constant(const mpz_class& c) { return IntPolynomial(std::vector<mpz_class>{c}); }

IntPolynomial IntPolynomial::monomial(const mpz_class& c, std::size_t degree) {
    std::vector<mpz_class> v(degree + 1);
    v[degree] = c;
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::linear_factor(long root) { return IntPolynomial{-root, 1}; }

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

mpz_class IntPolynomial::coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : mpz_class(0); }

mpz_class IntPolynomial::leading() const { return coeffs_.empty() ? mpz_class(0) : coeffs_.back(); }

bool IntPolynomial::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

mpz_class IntPolynomial::evaluate(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

IntPolynomial IntPolynomial::substitute(const IntPolynomial& q) const {
    IntPolynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * q + constant(*it);
    }
    return acc;
}

IntPolynomial IntPolynomial::derivative() const {
    std::vector<mpz_class> out;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        out.push_back(coeffs_[k] * static_cast<unsigned long>(k));
    }
    return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string(char var) const {
    if (coeffs_.empty()) {
        return "0";
    }
    std::string out;
    for (long k = degree(); k >= 0; --k) {
        const mpz_class& c = coeffs_[k];
        if (c == 0) {
            continue;
        }
        mpz_class mag = abs(c);
        if (out.empty()) {
            if (c < 0) {
                out += "-";
            }
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (k == 0 || mag != 1) {
            out += mag.get_str();
        }
        if (k >= 1) {
            out.push_back(var);
        }
        if (k >= 2) {
            out += "^" + std::to_string(k);
        }
    }
    return out;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
        coeffs_[k] += o.coeffs_[k];
    }
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
        coeffs_[k] -= o.coeffs_[k];
    }
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) { return *this = *this * o; }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
        }
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q) { return p * q; }

std::optional<IntPolynomial> poly_exact_div(const IntPolynomial& p, const IntPolynomial& q) {
    if (q.is_zero()) {
        return std::nullopt;
    }
    if (p.is_zero()) {
        return IntPolynomial{};
    }
    if (p.degree() < q.degree()) {
        return std::nullopt;
    }
    std::vector<mpz_class> rem = p.coefficients();
    const auto& d = q.coefficients();
    const std::size_t dq = d.size() - 1;
    std::vector<mpz_class> quot(rem.size() - dq);
    for (std::size_t k = quot.size(); k-- > 0;) {
        const mpz_class& top = rem[k + dq];
        if (top == 0) {
            continue;
        }
        if (!mpz_divisible_p(top.get_mpz_t(), d.back().get_mpz_t())) {
            return std::nullopt;
        }
        mpz_class c;
        mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), d.back().get_mpz_t());
        for (std::size_t j = 0; j <= dq; ++j) {
            mpz_submul(rem[k + j].get_mpz_t(), c.get_mpz_t(), d[j].get_mpz_t());
        }
        quot[k] = std::move(c);
    }
    for (const auto& r : rem) {
        if (r != 0) {
            return std::nullopt;
        }
    }
    return IntPolynomial(std::move(quot));
}

mpz_class poly_eval(const IntPolynomial& p, const mpz_class& x) { return p.evaluate(x); }

IntPolynomial poly_pow(const IntPolynomial& p, unsigned exponent) {
    IntPolynomial result{1};
    IntPolynomial base = p;
    while (exponent > 0) {
        if (exponent & 1U) {
            result *= base;
        }
        exponent >>= 1U;
        if (exponent > 0) {
            base *= base;
        }
    }
    return result;
}

IntPolynomial poly_product(std::span<const IntPolynomial> factors) {
    IntPolynomial acc{1};
    for (const auto& f : factors) {
        acc *= f;
    }
    return acc;
}

IntPolynomial interpolate(std::span<const mpz_class> xs, std::span<const mpz_class> ys) {
    if (xs.size() != ys.size()) {
        throw std::invalid_argument("interpolate: point count mismatch");
    }
    const std::size_t n = xs.size();
    if (n == 0) {
        return {};
    }
    // Newton divided differences over the rationals.
    std::vector<mpq_class> dd(ys.begin(), ys.end());
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            mpz_class span = xs[i] - xs[i - level];
            if (span == 0) {
                throw std::invalid_argument("interpolate: repeated sample point");
            }
            dd[i] = (dd[i] - dd[i - 1]) / mpq_class(span);
        }
    }
    // Horner expansion of the Newton form.
    std::vector<mpq_class> coeffs(1, dd[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;) {
        std::vector<mpq_class> next(coeffs.size() + 1);
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            next[k + 1] += coeffs[k];
            next[k] -= coeffs[k] * mpq_class(xs[i]);
        }
        next[0] += dd[i];
        coeffs = std::move(next);
    }
    std::vector<mpz_class> out;
    out.reserve(coeffs.size());
    for (auto& c : coeffs) {
        c.canonicalize();
        if (c.get_den() != 1) {
            throw std::domain_error("interpolated polynomial has non-integer coefficient " + c.get_str());
        }
        out.push_back(c.get_num());
    }
    return IntPolynomial(std::move(out));
}

std::vector<mpz_class> centered_points(std::size_t n) {
    std::vector<mpz_class> out;
    out.reserve(n);
    const long offset = static_cast<long>(n / 2);
    for (std::size_t i = 0; i < n; ++i) {
        out.emplace_back(static_cast<long>(i) - offset);
    }
    return out;
}

IdentityCertificate compare_products(std::span<const IntPolynomial> lhs, std::span<const IntPolynomial> rhs) {
    IdentityCertificate cert;
    cert.lhs = poly_product(lhs);
    cert.rhs = poly_product(rhs);
    const std::size_t n = std::max(cert.lhs.coefficients().size(), cert.rhs.coefficients().size());
    for (std::size_t k = 0; k < n; ++k) {
        if (cert.lhs.coefficient(k) != cert.rhs.coefficient(k)) {
            cert.first_difference = k;
            break;
        }
    }
    cert.holds = !cert.first_difference.has_value();
    return cert;
}

Series series_truncate(const IntPolynomial& p, std::size_t terms) {
    Series out(terms);
    for (std::size_t k = 0; k < terms; ++k) {
        out[k] = p.coefficient(k);
    }
    return out;
}

Series series_mul(const Series& a, const Series& b, std::size_t terms) {
    Series out(terms);
    for (std::size_t i = 0; i < std::min(a.size(), terms); ++i) {
        for (std::size_t j = 0; j < b.size() && i + j < terms; ++j) {
            mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    return out;
}

Series series_inverse(const Series& a, std::size_t terms) {
    if (a.empty() || abs(a[0]) != 1) {
        throw std::invalid_argument("series_inverse needs a unit constant term");
    }
    Series out(terms);
    if (terms == 0) {
        return out;
    }
    out[0] = a[0];  // ±1 is its own inverse
    for (std::size_t k = 1; k < terms; ++k) {
        mpz_class acc = 0;
        for (std::size_t j = 1; j <= k && j < a.size(); ++j) {
            acc += a[j] * out[k - j];
        }
        out[k] = -acc * a[0];
    }
    return out;
}

}  // namespace starcover
