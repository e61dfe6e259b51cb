#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace starcover {

/// Polynomial with arbitrary-precision integer coefficients, stored in
/// ascending degree. The zero polynomial has no coefficients; otherwise
/// the leading coefficient is nonzero.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> ascending);
    IntPolynomial(std::initializer_list<long> ascending);

    static IntPolynomial constant(const mpz_class& c);
    static IntPolynomial monomial(const mpz_class& c, std::size_t degree);
    /// x - root
    static IntPolynomial linear_factor(long root);

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<mpz_class>& coefficients() const { return coeffs_; }
    /// Coefficient of x^k (zero past the degree).
    mpz_class coefficient(std::size_t k) const;
    mpz_class leading() const;
    bool is_monic() const;

    mpz_class evaluate(const mpz_class& x) const;
    /// p(q(x)).
    IntPolynomial substitute(const IntPolynomial& q) const;
    IntPolynomial derivative() const;

    /// Descending-degree text, e.g. "x^2 - 2".
    std::string to_string(char var = 'x') const;

    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    IntPolynomial& operator*=(const IntPolynomial& o);

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q);
/// p / q when the division is exact over the integers; empty otherwise
/// (including division by zero).
std::optional<IntPolynomial> poly_exact_div(const IntPolynomial& p, const IntPolynomial& q);
mpz_class poly_eval(const IntPolynomial& p, const mpz_class& x);
IntPolynomial poly_pow(const IntPolynomial& p, unsigned exponent);
IntPolynomial poly_product(std::span<const IntPolynomial> factors);

/// The unique polynomial of degree < xs.size() through the points
/// (xs[i], ys[i]). Throws std::domain_error if it does not have integer
/// coefficients, std::invalid_argument on repeated abscissae.
IntPolynomial interpolate(std::span<const mpz_class> xs, std::span<const mpz_class> ys);

/// Symmetric integer sample points around zero: -(n/2), ..., n - 1 - n/2.
std::vector<mpz_class> centered_points(std::size_t n);

/// Outcome of an exact polynomial identity check: both expanded sides, and
/// the lowest degree where they differ when they do.
struct IdentityCertificate {
    bool holds = false;
    IntPolynomial lhs;
    IntPolynomial rhs;
    std::optional<std::size_t> first_difference;
};

IdentityCertificate compare_products(std::span<const IntPolynomial> lhs, std::span<const IntPolynomial> rhs);

/// Truncated power series arithmetic on coefficient vectors (index = degree).
using Series = std::vector<mpz_class>;
Series series_truncate(const IntPolynomial& p, std::size_t terms);
Series series_mul(const Series& a, const Series& b, std::size_t terms);
/// 1/a; requires a[0] = ±1.
Series series_inverse(const Series& a, std::size_t terms);

}  // namespace starcover
