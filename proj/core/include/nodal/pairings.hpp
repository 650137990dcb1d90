#pragma once

#include "nodal/partitions.hpp"

#include <string>
#include <utility>
#include <vector>

namespace nodal {

// Permutation of {1..m} stored one-based: perm[i-1] is the image of i.
using Permutation = std::vector<int>;

class Pairing {
public:
    Pairing() = default;
    // Any fixed-point-free matching of {1..2n}; stored canonically.
    explicit Pairing(std::vector<std::pair<int, int>> pairs);

    int n() const noexcept { return static_cast<int>(pairs_.size()); }
    const std::vector<std::pair<int, int>>& pairs() const noexcept { return pairs_; }
    // partner(i) for i in 1..2n
    int partner(int i) const { return involution_[static_cast<std::size_t>(i - 1)]; }
    Permutation involution() const { return involution_; }

    std::string str() const;

    friend bool operator==(const Pairing& a, const Pairing& b) { return a.pairs_ == b.pairs_; }
    friend auto operator<=>(const Pairing& a, const Pairing& b) { return a.pairs_ <=> b.pairs_; }

private:
    std::vector<std::pair<int, int>> pairs_;
    Permutation involution_;
};

enum class ActionFlavor { Plain, Signed };

std::vector<Pairing> enumerate_pairings(int n);
std::size_t pairing_index(const Pairing& p, const std::vector<Pairing>& basis);

int crossing_number(const Pairing& p);
int loop_number(const Pairing& p1, const Pairing& p2);
// Cycle count of the permutation P1∘P2 on {1..2n}.
int product_cycle_count(const Pairing& p1, const Pairing& p2);
// Half-lengths of the loops of the merged arc diagram, as a partition of n.
Partition loop_partition(const Pairing& p1, const Pairing& p2);

int permutation_sign(const Permutation& g);
bool is_permutation(const Permutation& g);
Permutation compose(const Permutation& g, const Permutation& h);  // g∘h
std::pair<Pairing, int> act_permutation(const Permutation& g, const Pairing& p, ActionFlavor flavor);

}
