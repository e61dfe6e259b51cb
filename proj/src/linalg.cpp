#include "starcover/linalg.hpp"

namespace starcover {

mpz_class bareiss_determinant(BigMatrix m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("determinant of a non-square matrix");
    }
    const std::size_t n = m.rows();
    if (n == 0) {
        return 1;
    }
    int sign = 1;
    mpz_class previous = 1;
    mpz_class scratch;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && m(r, k) == 0) {
                ++r;
            }
            if (r == n) {
                return 0;
            }
            m.swap_rows(k, r);
            sign = -sign;
        }
        const mpz_srcptr pivot = m(k, k).get_mpz_t();
        for (std::size_t i = k + 1; i < n; ++i) {
            const mpz_srcptr lead = m(i, k).get_mpz_t();
            const bool lead_zero = mpz_sgn(lead) == 0;
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_ptr cell = m(i, j).get_mpz_t();
                mpz_mul(scratch.get_mpz_t(), cell, pivot);
                if (!lead_zero) {
                    mpz_submul(scratch.get_mpz_t(), lead, m(k, j).get_mpz_t());
                }
                mpz_divexact(cell, scratch.get_mpz_t(), previous.get_mpz_t());
            }
        }
        previous = m(k, k);
    }
    mpz_class det = m(n - 1, n - 1);
    return sign > 0 ? det : mpz_class(-det);
}

BigMatrix to_big(const IntMatrix& m) {
    BigMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out(i, j) = static_cast<long>(m(i, j));
        }
    }
    return out;
}

}  // namespace starcover
