#pragma once

#include "nodal/rational.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace nodal {

// Number of rational degree-d plane curves through 3d-1 general points.
BigInt kontsevich_nd(int d);
// N_1..N_d; `reversed` walks the (d1,d2) splittings in the opposite order.
std::vector<BigInt> kontsevich_table(int d, bool reversed = false);

// Reducible fibers of a conic-bundle pencil: (chi + basepoints) - 4.
long pencil_reducible_count(long chi_surface, long num_basepoints);

struct OracleEntry {
    Rational value;
    std::string provenance;
};

class OracleTable {
public:
    static OracleTable from_json(std::string_view text);
    static OracleTable bundled();

    bool contains(const std::string& key) const { return entries_.count(key) != 0; }
    const OracleEntry& entry(const std::string& key) const;
    void set(const std::string& key, OracleEntry entry) { entries_[key] = std::move(entry); }
    const std::map<std::string, OracleEntry>& entries() const noexcept { return entries_; }

private:
    std::map<std::string, OracleEntry> entries_;
};

const Rational& lookup(const std::string& key, const OracleTable& table);

}
