#include "nodal/partitions.hpp"

#include "nodal/errors.hpp"

#include <functional>
#include <numeric>

namespace nodal {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw InvalidInput("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidInput("partition parts must be weakly decreasing");
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::all_even() const noexcept {
    for (int p : parts_)
        if (p % 2 != 0) return false;
    return true;
}

std::string Partition::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

std::vector<Partition> partitions_of(int m) {
    if (m < 0) throw InvalidInput("cannot partition a negative integer");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int cap) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(m, m);
    return out;
}

std::vector<Partition> even_row_partitions(int m) {
    if (m < 2 || m % 2 != 0) throw InvalidInput("even_row_partitions needs an even m >= 2, got " + std::to_string(m));
    std::vector<Partition> out;
    for (const auto& mu : partitions_of(m / 2)) out.push_back(double_partition(mu));
    return out;
}

BigInt hook_dimension(const Partition& lambda) {
    const auto& rows = lambda.parts();
    Partition t = transpose(lambda);
    BigInt hooks = 1;
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < rows[i]; ++j) {
            int arm = rows[i] - j - 1;
            int leg = t.parts()[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
            hooks *= arm + leg + 1;
        }
    return factorial(lambda.weight()) / hooks;
}

Rational content_product(const Partition& lambda, const Rational& x) {
    Partition half = half_partition(lambda);
    Rational r = 1;
    for (std::size_t i = 0; i < half.parts().size(); ++i)
        for (int j = 1; j <= half.parts()[i]; ++j) r *= x - static_cast<long>(i + 1) + 2 * j - 1;
    return r;
}

Partition half_partition(const Partition& lambda) {
    if (!lambda.all_even()) throw InvalidInput("half_partition of " + lambda.str() + ": odd part");
    std::vector<int> parts;
    for (int p : lambda.parts()) parts.push_back(p / 2);
    return Partition(parts);
}

Partition double_partition(const Partition& lambda) {
    std::vector<int> parts;
    for (int p : lambda.parts()) parts.push_back(2 * p);
    return Partition(parts);
}

Partition transpose(const Partition& lambda) {
    std::vector<int> cols(static_cast<std::size_t>(lambda.largest()), 0);
    for (int p : lambda.parts())
        for (int j = 0; j < p; ++j) ++cols[static_cast<std::size_t>(j)];
    return Partition(cols);
}

}
