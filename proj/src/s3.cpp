#include <algorithm>
#include <stdexcept>

#include "starcover/zeta.hpp"

namespace starcover {

namespace {

int s3_index(const Permutation& p) {
    if (p.degree() != 3) {
        throw std::invalid_argument("expected a permutation of degree 3");
    }
    static const auto all = all_permutations(3);
    return static_cast<int>(std::lower_bound(all.begin(), all.end(), p) - all.begin());
}

IntMatrix scalar(long v) {
    IntMatrix m(1, 1);
    m(0, 0) = v;
    return m;
}

// Action on sum-zero vectors in the basis e1-e2, e2-e3; coordinates of
// (x1,x2,x3) are (x1, x1+x2).
IntMatrix standard_matrix(const Permutation& p) {
    IntMatrix m(2, 2);
    for (int j = 0; j < 2; ++j) {
        long x[3] = {0, 0, 0};
        x[p(j + 1) - 1] += 1;
        x[p(j + 2) - 1] -= 1;
        m(0, j) = x[0];
        m(1, j) = x[0] + x[1];
    }
    return m;
}

long trace(const IntMatrix& m) {
    long t = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        t += m(i, i);
    }
    return t;
}

std::vector<S3Representation> build_irreps() {
    const auto all = all_permutations(3);
    std::vector<S3Representation> reps{{"trivial", 1, {}}, {"sgn", 1, {}}, {"std", 2, {}}};
    for (const auto& p : all) {
        reps[0].matrices.push_back(scalar(1));
        reps[1].matrices.push_back(scalar(p.sign()));
        reps[2].matrices.push_back(standard_matrix(p));
    }
    for (const auto& rep : reps) {
        for (const auto& a : all) {
            for (const auto& b : all) {
                if (rep(a * b) != rep(a) * rep(b)) {
                    throw std::logic_error("S3 representation " + rep.name + " is not a homomorphism");
                }
            }
        }
    }
    const auto induced = induced_sign_character();
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (induced[i] != reps[1].character(all[i]) + reps[2].character(all[i])) {
            throw std::logic_error("Ind(sgn) from <(1,2)> differs from sgn + std");
        }
    }
    return reps;
}

}  // namespace

const IntMatrix& S3Representation::operator()(const Permutation& p) const { return matrices.at(s3_index(p)); }

long S3Representation::character(const Permutation& p) const { return trace((*this)(p)); }

std::vector<long> induced_sign_character() {
    const auto all = all_permutations(3);
    const Permutation t = Permutation::transposition(3, 1, 2);
    std::vector<long> out;
    for (const auto& g : all) {
        long sum = 0;
        for (const auto& x : all) {
            const Permutation c = inverse(x) * g * x;
            if (c.is_identity()) {
                sum += 1;
            } else if (c == t) {
                sum -= 1;
            }
        }
        out.push_back(sum / 2);
    }
    return out;
}

const std::vector<S3Representation>& s3_irreps() {
    static const std::vector<S3Representation> reps = build_irreps();
    return reps;
}

const S3Representation& s3_irrep(std::string_view name) {
    for (const auto& rep : s3_irreps()) {
        if (rep.name == name) {
            return rep;
        }
    }
    throw std::invalid_argument("unknown S3 representation: " + std::string(name));
}

std::vector<Permutation> identify_s3(const FiniteGroup& group) {
    if (group.size() != 6 || group.is_abelian()) {
        throw std::invalid_argument("group is not isomorphic to S3");
    }
    int a = -1;
    int b = -1;
    for (int e = 0; e < 6; ++e) {
        if (a < 0 && group.element_order(e) == 2) {
            a = e;
        }
        if (b < 0 && group.element_order(e) == 3) {
            b = e;
        }
    }
    const Permutation ta = Permutation::transposition(3, 1, 2);
    const Permutation tb = Permutation::from_cycles(3, {{1, 2, 3}});
    std::vector<std::optional<Permutation>> image(6);
    int x = group.identity();
    Permutation px = Permutation::identity(3);
    for (int i = 0; i < 2; ++i) {
        int y = x;
        Permutation py = px;
        for (int j = 0; j < 3; ++j) {
            image[y] = py;
            y = group.multiply(y, b);
            py = py * tb;
        }
        x = group.multiply(x, a);
        px = px * ta;
    }
    std::vector<Permutation> out;
    for (auto& p : image) {
        if (!p) {
            throw std::invalid_argument("group is not isomorphic to S3");
        }
        out.push_back(*p);
    }
    for (int u = 0; u < 6; ++u) {
        for (int v = 0; v < 6; ++v) {
            if (out[group.multiply(u, v)] != out[u] * out[v]) {
                throw std::invalid_argument("group is not isomorphic to S3");
            }
        }
    }
    return out;
}

std::vector<IntMatrix> transport(const S3Representation& rho, const FiniteGroup& group) {
    std::vector<IntMatrix> out;
    for (const auto& p : identify_s3(group)) {
        out.push_back(rho(p));
    }
    return out;
}

}  // namespace starcover
