#include "nodal/gw_oracle.hpp"

#include "bundled_data.hpp"
#include "nodal/errors.hpp"

#include <json.hpp>

namespace nodal {

std::vector<BigInt> kontsevich_table(int d, bool reversed) {
    if (d <= 0) throw InvalidInput("kontsevich_nd needs d >= 1");
    std::vector<BigInt> n(static_cast<std::size_t>(d + 1));
    n[1] = 1;
    for (int e = 2; e <= d; ++e) {
        BigInt acc = 0;
        for (int step = 1; step < e; ++step) {
            int d1 = reversed ? e - step : step;
            int d2 = e - d1;
            BigInt term = d2 * binomial(3 * e - 4, 3 * d1 - 2) - d1 * binomial(3 * e - 4, 3 * d1 - 1);
            acc += n[static_cast<std::size_t>(d1)] * n[static_cast<std::size_t>(d2)] * d1 * d1 * d2 * term;
        }
        n[static_cast<std::size_t>(e)] = acc;
    }
    n.erase(n.begin());
    return n;
}

BigInt kontsevich_nd(int d) {
    return kontsevich_table(d).back();
}

long pencil_reducible_count(long chi_surface, long num_basepoints) {
    if (num_basepoints < 0) throw InvalidInput("negative number of base points");
    long k = chi_surface + num_basepoints - 4;
    if (k < 0) throw InvalidModel("Euler characteristic too small for a conic-bundle pencil");
    return k;
}

OracleTable OracleTable::from_json(std::string_view text) {
    OracleTable t;
    try {
        auto j = nlohmann::json::parse(text);
        for (auto it = j.begin(); it != j.end(); ++it) {
            const auto& e = it.value();
            std::string prov = e.at("provenance").get<std::string>();
            if (prov.empty()) throw InvalidModel("oracle entry " + it.key() + " lacks a provenance note");
            t.entries_[it.key()] = {parse_rational(e.at("value").get<std::string>()), prov};
        }
    } catch (const nlohmann::json::exception& e) {
        throw InvalidModel(std::string("oracle table does not match the schema: ") + e.what());
    }
    return t;
}

OracleTable OracleTable::bundled() {
    return from_json(bundled::oracle_table());
}

const OracleEntry& OracleTable::entry(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) throw MissingData(key);
    return it->second;
}

const Rational& lookup(const std::string& key, const OracleTable& table) {
    return table.entry(key).value;
}

}
