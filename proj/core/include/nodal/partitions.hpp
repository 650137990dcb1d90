#pragma once

#include "nodal/rational.hpp"

#include <compare>
#include <string>
#include <vector>

namespace nodal {

class Partition {
public:
    Partition() = default;
    // Throws InvalidInput unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int weight() const noexcept { return weight_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
    bool all_even() const noexcept;

    std::string str() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// All partitions of m, reverse-lexicographic: (m), (m-1,1), ...
std::vector<Partition> partitions_of(int m);
std::vector<Partition> even_row_partitions(int m);

BigInt hook_dimension(const Partition& lambda);
Rational content_product(const Partition& lambda, const Rational& x);
Partition half_partition(const Partition& lambda);
Partition double_partition(const Partition& lambda);
Partition transpose(const Partition& lambda);

}
