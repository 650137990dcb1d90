#include "nodal/pairings.hpp"

#include "nodal/errors.hpp"

#include <algorithm>
#include <functional>

namespace nodal {

Pairing::Pairing(std::vector<std::pair<int, int>> pairs) {
    const int m = 2 * static_cast<int>(pairs.size());
    if (m == 0) throw InvalidInput("a pairing needs at least one pair");
    involution_.assign(static_cast<std::size_t>(m), 0);
    for (auto& [a, b] : pairs) {
        if (a > b) std::swap(a, b);
        if (a < 1 || b > m || a == b) throw InvalidInput("pair entries must be distinct values in 1..2n");
        auto& ia = involution_[static_cast<std::size_t>(a - 1)];
        auto& ib = involution_[static_cast<std::size_t>(b - 1)];
        if (ia != 0 || ib != 0) throw InvalidInput("pairing entries repeat");
        ia = b;
        ib = a;
    }
    std::sort(pairs.begin(), pairs.end());
    pairs_ = std::move(pairs);
}

std::string Pairing::str() const {
    std::string s;
    for (auto [a, b] : pairs_) s += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    return s;
}

std::vector<Pairing> enumerate_pairings(int n) {
    if (n <= 0) throw InvalidInput("enumerate_pairings needs n >= 1");
    std::vector<Pairing> out;
    std::vector<std::pair<int, int>> cur;
    std::vector<char> used(static_cast<std::size_t>(2 * n + 1), 0);
    std::function<void()> rec = [&] {
        int first = 1;
        while (first <= 2 * n && used[static_cast<std::size_t>(first)]) ++first;
        if (first > 2 * n) {
            out.emplace_back(cur);
            return;
        }
        used[static_cast<std::size_t>(first)] = 1;
        for (int b = first + 1; b <= 2 * n; ++b) {
            if (used[static_cast<std::size_t>(b)]) continue;
            used[static_cast<std::size_t>(b)] = 1;
            cur.emplace_back(first, b);
            rec();
            cur.pop_back();
            used[static_cast<std::size_t>(b)] = 0;
        }
        used[static_cast<std::size_t>(first)] = 0;
    };
    rec();
    return out;
}

std::size_t pairing_index(const Pairing& p, const std::vector<Pairing>& basis) {
    auto it = std::lower_bound(basis.begin(), basis.end(), p);
    if (it == basis.end() || !(*it == p)) throw InvalidInput("pairing " + p.str() + " not in basis");
    return static_cast<std::size_t>(it - basis.begin());
}

int crossing_number(const Pairing& p) {
    int c = 0;
    const auto& pr = p.pairs();
    for (std::size_t s = 0; s < pr.size(); ++s)
        for (std::size_t t = s + 1; t < pr.size(); ++t) {
            auto [i, k] = pr[s];
            auto [j, l] = pr[t];
            if ((i < j && j < k && k < l) || (j < i && i < l && l < k)) ++c;
        }
    return c;
}

namespace {

std::vector<int> product_cycle_lengths(const Pairing& p1, const Pairing& p2) {
    if (p1.n() != p2.n()) throw InvalidInput("loop_number of pairings with different n");
    const int m = 2 * p1.n();
    std::vector<char> seen(static_cast<std::size_t>(m + 1), 0);
    std::vector<int> lengths;
    for (int s = 1; s <= m; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        int len = 0;
        for (int i = s; !seen[static_cast<std::size_t>(i)]; i = p1.partner(p2.partner(i))) {
            seen[static_cast<std::size_t>(i)] = 1;
            ++len;
        }
        lengths.push_back(len);
    }
    return lengths;
}

}

int product_cycle_count(const Pairing& p1, const Pairing& p2) {
    return static_cast<int>(product_cycle_lengths(p1, p2).size());
}

int loop_number(const Pairing& p1, const Pairing& p2) {
    int cycles = product_cycle_count(p1, p2);
    if (cycles % 2 != 0) throw InternalConsistency("odd cycle count in a product of two pairings");
    return cycles / 2;
}

Partition loop_partition(const Pairing& p1, const Pairing& p2) {
    if (p1.n() != p2.n()) throw InvalidInput("loop_partition of pairings with different n");
    const int m = 2 * p1.n();
    std::vector<char> seen(static_cast<std::size_t>(m + 1), 0);
    std::vector<int> halves;
    for (int s = 1; s <= m; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        // walk the loop alternating between the two arc systems
        int len = 0;
        int i = s;
        bool top = true;
        while (!seen[static_cast<std::size_t>(i)]) {
            seen[static_cast<std::size_t>(i)] = 1;
            ++len;
            i = top ? p1.partner(i) : p2.partner(i);
            top = !top;
        }
        halves.push_back(len / 2);
    }
    std::sort(halves.rbegin(), halves.rend());
    return Partition(halves);
}

bool is_permutation(const Permutation& g) {
    std::vector<char> hit(g.size() + 1, 0);
    for (int v : g) {
        if (v < 1 || v > static_cast<int>(g.size()) || hit[static_cast<std::size_t>(v)]) return false;
        hit[static_cast<std::size_t>(v)] = 1;
    }
    return true;
}

int permutation_sign(const Permutation& g) {
    if (!is_permutation(g)) throw InvalidInput("not a permutation");
    std::vector<char> seen(g.size(), 0);
    int sign = 1;
    for (std::size_t s = 0; s < g.size(); ++s) {
        if (seen[s]) continue;
        std::size_t len = 0;
        for (std::size_t i = s; !seen[i]; i = static_cast<std::size_t>(g[i] - 1)) {
            seen[i] = 1;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

Permutation compose(const Permutation& g, const Permutation& h) {
    if (g.size() != h.size()) throw InvalidInput("composing permutations of different sizes");
    Permutation out(g.size());
    for (std::size_t i = 0; i < h.size(); ++i) out[i] = g[static_cast<std::size_t>(h[i] - 1)];
    return out;
}

std::pair<Pairing, int> act_permutation(const Permutation& g, const Pairing& p, ActionFlavor flavor) {
    if (static_cast<int>(g.size()) != 2 * p.n() || !is_permutation(g))
        throw InvalidInput("act_permutation needs a bijection of {1..2n}");
    std::vector<std::pair<int, int>> image;
    for (auto [a, b] : p.pairs())
        image.emplace_back(g[static_cast<std::size_t>(a - 1)], g[static_cast<std::size_t>(b - 1)]);
    int sign = flavor == ActionFlavor::Signed ? permutation_sign(g) : 1;
    return {Pairing(std::move(image)), sign};
}

}
