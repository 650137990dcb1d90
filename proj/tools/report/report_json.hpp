#pragma once

#include "nodal/appendix_case.hpp"
#include "nodal/loop_matrix.hpp"
#include "nodal/pairings.hpp"
#include "nodal/stable_graphs.hpp"
#include "nodal/tensor_oracle.hpp"

#include <json.hpp>

#include <string>

namespace nodal::report {

using Json = nlohmann::ordered_json;

Json rational(const Rational& q);
Json vector(const Vector& v);
Json matrix(const Matrix& m);
Json partition(const Partition& p);
Json pairing(const Pairing& p);
Json tensor(const DenseTensor& t);
Json graph(const StableGraph& g);
Json splitting(const Splitting& s);
Json contribution(const Contribution& c);
Json case_report(const CaseReport& r);
Json elliptic(const EllipticReport& r);

// Accepts {vertices, edges, legs} with an optional "generators" list (default ["L"]).
StableGraph parse_graph(const nlohmann::json& j);
Rational parse_rational_value(const nlohmann::json& j);

std::string dump(const Json& j);

}
