#include "starcover/syt.hpp"

#include <numeric>
#include <stdexcept>

namespace starcover {

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::to_string() const {
    bool wide = false;
    for (int p : parts) {
        wide = wide || p > 9;
    }
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (wide && i > 0) {
            out += ',';
        }
        out += std::to_string(parts[i]);
    }
    return out;
}

Partition make_partition(std::vector<int> parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0 || (i > 0 && parts[i] > parts[i - 1])) {
            throw std::invalid_argument("partition parts must be positive and weakly decreasing");
        }
    }
    return Partition{std::move(parts)};
}

namespace {

void partitions_rec(int remaining, int cap, std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition{prefix});
        return;
    }
    for (int p = std::min(remaining, cap); p >= 1; --p) {
        prefix.push_back(p);
        partitions_rec(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

class TableauFiller {
public:
    explicit TableauFiller(const Partition& shape) : shape_(shape), m_(shape.size()) {
        current_.rows.assign(shape.parts.size(), {});
        current_.shape = shape;
    }

    std::vector<StandardTableau> run() {
        place(1);
        return std::move(out_);
    }

private:
    void place(int entry) {
        if (entry > m_) {
            out_.push_back(current_);
            return;
        }
        for (std::size_t r = 0; r < shape_.parts.size(); ++r) {
            auto& row = current_.rows[r];
            if (static_cast<int>(row.size()) == shape_.parts[r]) {
                continue;
            }
            if (r > 0 && current_.rows[r - 1].size() <= row.size()) {
                continue;
            }
            row.push_back(entry);
            place(entry + 1);
            row.pop_back();
        }
    }

    const Partition& shape_;
    int m_;
    StandardTableau current_;
    std::vector<StandardTableau> out_;
};

}  // namespace

std::vector<Partition> partitions(int m) {
    if (m < 1 || m > kMaxPartitionSize) {
        throw std::length_error("partitions supports 1 <= m <= " + std::to_string(kMaxPartitionSize));
    }
    std::vector<Partition> out;
    std::vector<int> prefix;
    partitions_rec(m, m, prefix, out);
    return out;
}

std::uint64_t hook_length_count(const Partition& shape) {
    const int m = shape.size();
    std::uint64_t num = 1;
    for (int k = 2; k <= m; ++k) {
        num *= static_cast<std::uint64_t>(k);
    }
    std::uint64_t den = 1;
    for (std::size_t r = 0; r < shape.parts.size(); ++r) {
        for (int c = 0; c < shape.parts[r]; ++c) {
            int below = 0;
            for (std::size_t rr = r + 1; rr < shape.parts.size() && shape.parts[rr] > c; ++rr) {
                ++below;
            }
            den *= static_cast<std::uint64_t>(shape.parts[r] - c + below);
        }
    }
    return num / den;
}

std::vector<StandardTableau> syt_enumerate(const Partition& shape) {
    make_partition(shape.parts);
    if (shape.size() > kMaxTableauSize) {
        throw std::length_error("syt_enumerate supports shapes of size <= " + std::to_string(kMaxTableauSize));
    }
    auto out = TableauFiller(shape).run();
    if (out.size() != hook_length_count(shape)) {
        throw std::logic_error("tableau count disagrees with the hook length formula for " + shape.to_string());
    }
    return out;
}

int content(const StandardTableau& t, int entry) {
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
            if (t.rows[r][c] == entry) {
                return static_cast<int>(c + 1) - static_cast<int>(r + 1);
            }
        }
    }
    throw std::invalid_argument("entry " + std::to_string(entry) + " is not in the tableau");
}

std::uint64_t I_lambda(const Partition& lambda, int n, int k) {
    if (lambda.size() != n + 1) {
        throw std::invalid_argument("I_lambda needs |lambda| = n + 1");
    }
    if (k > n || k < -n) {
        return 0;
    }
    std::uint64_t count = 0;
    for (const auto& t : syt_enumerate(lambda)) {
        count += content(t, n + 1) == k ? 1 : 0;
    }
    return count;
}

std::vector<MultiplicityRow> multiplicity_table(int n) {
    if (n < 1 || n > kMaxMultiplicityN) {
        throw std::length_error("multiplicity supports 1 <= n <= " + std::to_string(kMaxMultiplicityN));
    }
    std::vector<MultiplicityRow> rows;
    for (const auto& lambda : partitions(n + 1)) {
        MultiplicityRow row{lambda, {}, 0};
        for (int k = -n; k <= n; ++k) {
            row.I[k] = 0;
        }
        const auto tableaux = syt_enumerate(lambda);
        row.f = tableaux.size();
        for (const auto& t : tableaux) {
            ++row.I[content(t, n + 1)];
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::uint64_t multiplicity(int n, int k) {
    std::uint64_t total = 0;
    for (const auto& row : multiplicity_table(n)) {
        auto it = row.I.find(k);
        if (it != row.I.end()) {
            total += row.f * it->second;
        }
    }
    return total;
}

}  // namespace starcover
