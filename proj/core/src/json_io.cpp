#include "vpoly/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "vpoly/error.hpp"

namespace vpoly::json_io {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::uint64_t as_u64(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    throw InputError(std::string(what) + " must be a non-negative integer");
  return j.get<std::uint64_t>();
}

BigInt parse_bigint(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) throw InputError("malformed integer '" + s + "'");
  for (std::size_t k = i; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9') throw InputError("malformed integer '" + s + "'");
  return BigInt(s[0] == '+' ? s.substr(1) : s);
}

BigInt integer_scalar(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
    return BigInt(j.get<std::int64_t>());
  }
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  throw InputError("expected an integer scalar, got " + j.dump());
}

Rational rational_scalar(const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_bigint(s));
    BigInt den = parse_bigint(s.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in '" + s + "'");
    return make_rational(parse_bigint(s.substr(0, slash)), den);
  }
  return Rational(integer_scalar(j));
}

double float_scalar(const Json& j) {
  double v = 0;
  if (j.is_number())
    v = j.get<double>();
  else if (j.is_string()) {
    const auto s = j.get<std::string>();
    std::size_t used = 0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw InputError("malformed float '" + s + "'");
  } else {
    throw InputError("expected a float scalar, got " + j.dump());
  }
  if (!std::isfinite(v)) throw InputError("float scalar must be finite");
  return v;
}

template <EvaluationRing Ring, class Parse>
Assignment<Ring> fill(Ring ring, const Json& j, Parse parse) {
  Assignment<Ring> a(std::move(ring));
  if (j.contains("t")) {
    if (!j.at("t").is_object()) throw InputError("'t' must be an object");
    for (const auto& [k, v] : j.at("t").items()) a.set_t(k, parse(v));
  }
  if (j.contains("x")) {
    if (!j.at("x").is_object()) throw InputError("'x' must be an object");
    for (const auto& [k, v] : j.at("x").items()) a.set_x(parse_weight_key(k), parse(v));
  }
  if (j.contains("default_t")) a.set_default_t(parse(j.at("default_t")));
  if (j.contains("default_x")) a.set_default_x(parse(j.at("default_x")));
  return a;
}

}  // namespace

Json graph_to_json(const WeightedGraph& g) {
  Json vertices = Json::array();
  for (const auto& [id, w] : g.vertices()) {
    Json coords = Json::array();
    for (auto c : w.coords()) coords.push_back(c);
    vertices.push_back({{"id", id}, {"weight", coords}});
  }
  Json edges = Json::array();
  for (const auto& [id, e] : g.edges()) edges.push_back({{"id", id}, {"ends", {e.u, e.v}}});
  return {{"weight_dim", g.weight_dim()}, {"vertices", vertices}, {"edges", edges}};
}

WeightedGraph graph_from_json(const Json& j) {
  const std::size_t dim = j.is_object() && j.contains("weight_dim")
                              ? static_cast<std::size_t>(as_u64(j.at("weight_dim"), "weight_dim"))
                              : 1;
  WeightedGraph g(dim);
  const Json& vertices = require(j, "vertices");
  if (!vertices.is_array()) throw InputError("'vertices' must be an array");
  for (const auto& v : vertices) {
    const Json& id = require(v, "id");
    if (!id.is_string()) throw InputError("vertex id must be a string");
    const Json& w = require(v, "weight");
    std::vector<std::uint64_t> coords;
    if (w.is_array())
      for (const auto& c : w) coords.push_back(as_u64(c, "weight coordinate"));
    else
      coords.push_back(as_u64(w, "weight"));
    g.add_vertex(id.get<std::string>(), Weight(std::move(coords)));
  }
  const Json& edges = require(j, "edges");
  if (!edges.is_array()) throw InputError("'edges' must be an array");
  for (const auto& e : edges) {
    const Json& id = require(e, "id");
    const Json& ends = require(e, "ends");
    if (!id.is_string() || !ends.is_array() || ends.size() != 2 || !ends[0].is_string() ||
        !ends[1].is_string())
      throw InputError("edge needs a string id and two string ends");
    g.add_edge(id.get<std::string>(), ends[0].get<std::string>(), ends[1].get<std::string>());
  }
  return g;
}

Json poly_to_json(const MultiPoly& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json vars = Json::array();
    for (const auto& [v, e] : m.factors()) {
      Json key;
      if (v.is_t()) {
        key = v.edge();
      } else {
        key = Json::array();
        for (auto c : v.weight().coords()) key.push_back(c);
      }
      vars.push_back({{"kind", v.is_t() ? "t" : "x"}, {"key", key}, {"exp", e}});
    }
    terms.push_back({{"coeff", c.str()}, {"vars", vars}});
  }
  return {{"terms", terms}};
}

MultiPoly poly_from_json(const Json& j) {
  MultiPoly p;
  for (const auto& term : require(j, "terms")) {
    std::vector<Monomial::Factor> factors;
    for (const auto& v : require(term, "vars")) {
      const auto kind = require(v, "kind").get<std::string>();
      const Json& key = require(v, "key");
      const auto exp = static_cast<std::uint32_t>(as_u64(require(v, "exp"), "exp"));
      if (kind == "t") {
        if (!key.is_string()) throw InputError("t key must be an edge id");
        factors.emplace_back(VarKey::t(key.get<std::string>()), exp);
      } else if (kind == "x") {
        std::vector<std::uint64_t> coords;
        if (key.is_array())
          for (const auto& c : key) coords.push_back(as_u64(c, "x key"));
        else
          coords.push_back(as_u64(key, "x key"));
        factors.emplace_back(VarKey::x(Weight(std::move(coords))), exp);
      } else {
        throw InputError("variable kind must be 't' or 'x'");
      }
    }
    p.add_term(Monomial(std::move(factors)), integer_scalar(require(term, "coeff")));
  }
  return p;
}

Weight parse_weight_key(const std::string& key) {
  std::vector<std::uint64_t> coords;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const BigInt v = parse_bigint(part);
    if (v < 0 || v > std::numeric_limits<std::uint64_t>::max())
      throw InputError("weight key '" + key + "' out of range");
    coords.push_back(v.convert_to<std::uint64_t>());
  }
  if (coords.empty()) throw InputError("empty weight key");
  return Weight(std::move(coords));
}

AnyAssignment assignment_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("point must be a JSON object");
  const Json ring = j.contains("ring") ? j.at("ring") : Json("int");
  if (ring.is_object()) {
    const PrimeField field(as_u64(require(ring, "fp"), "fp"));
    return fill(field, j, [&](const Json& v) { return field.from_integer(integer_scalar(v)); });
  }
  if (!ring.is_string()) throw InputError("'ring' must be a string or {\"fp\": p}");
  const auto name = ring.get<std::string>();
  if (name == "int") return fill(IntegerRing{}, j, integer_scalar);
  if (name == "rational") return fill(RationalRing{}, j, rational_scalar);
  if (name == "float") return fill(FloatRing{}, j, float_scalar);
  throw InputError("unknown ring '" + name + "'");
}

Json scalar_to_json(const BigInt& v) { return v.str(); }
Json scalar_to_json(const Rational& v) { return v.str(); }
Json scalar_to_json(double v) { return v; }

Json ring_to_json(const AnyAssignment& a) {
  return std::visit(
      [](const auto& as) -> Json {
        using R = std::decay_t<decltype(as.ring())>;
        if constexpr (std::is_same_v<R, PrimeField>)
          return {{"fp", as.ring().modulus()}};
        else
          return std::string(R::kName);
      },
      a);
}

Json torus_to_json(const TorusPoly& c) {
  Json coeffs = Json::array();
  for (const auto& k : c.coeffs()) coeffs.push_back(k.str());
  return {{"text", c.to_string()}, {"coefficients", coeffs}};
}

Json count_to_json(const CountReport& r) {
  return {{"prime", r.prime},
          {"ambient_dim", r.ambient_dim},
          {"zeros", r.zeros.str()},
          {"method", std::string(to_string(r.method))}};
}

Json countability_to_json(const CountabilityReport& r) {
  auto strings = [](const auto& xs) {
    Json out = Json::array();
    for (const auto& x : xs) out.push_back(x.str());
    return out;
  };
  Json j{{"degree_bound", r.degree_bound},
         {"fit_primes", r.fit_primes},
         {"fit_counts", strings(r.fit_counts)},
         {"interpolant", strings(r.interpolant)},
         {"validation_primes", r.validation_primes},
         {"validation_counts", strings(r.validation_counts)},
         {"residuals", strings(r.residuals)},
         {"verdict", std::string(to_string(r.verdict))},
         {"caveat", r.caveat}};
  j["fit_coefficients"] = r.fit_coefficients ? strings(*r.fit_coefficients) : Json(nullptr);
  return j;
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
}

}  // namespace vpoly::json_io
