#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "vpoly/assignment.hpp"
#include "vpoly/evaluators.hpp"
#include "vpoly/ffcount.hpp"
#include "vpoly/graph.hpp"
#include "vpoly/groth.hpp"
#include "vpoly/multipoly.hpp"

namespace vpoly::json_io {

using Json = nlohmann::json;

// {"weight_dim": k, "vertices": [{"id", "weight"}], "edges": [{"id", "ends"}]},
// vertices and edges in id order.
Json graph_to_json(const WeightedGraph& g);
WeightedGraph graph_from_json(const Json& j);

// {"terms": [{"coeff": "int", "vars": [{"kind", "key", "exp"}]}]} in canonical
// monomial order. x keys are integer lists.
Json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j);

// {"ring": "int"|"rational"|"float"|{"fp": p}, "t": {edge: scalar},
//  "x": {"3" or "1,0,2": scalar}, "default_t": scalar, "default_x": scalar}.
// Integer and rational scalars may be JSON numbers or strings ("-7", "2/3").
AnyAssignment assignment_from_json(const Json& j);
Weight parse_weight_key(const std::string& key);

Json scalar_to_json(const BigInt& v);
Json scalar_to_json(const Rational& v);
Json scalar_to_json(double v);
Json ring_to_json(const AnyAssignment& a);

Json torus_to_json(const TorusPoly& c);
Json count_to_json(const CountReport& r);
Json countability_to_json(const CountabilityReport& r);

// Compact, sorted-key serialization with a trailing newline.
std::string dump(const Json& j);

// Throws InputError on missing files and malformed JSON.
Json read_file(const std::string& path);

}  // namespace vpoly::json_io
