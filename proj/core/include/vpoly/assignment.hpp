#pragma once

#include <map>
#include <string>
#include <utility>
#include <variant>

#include "vpoly/multipoly.hpp"
#include "vpoly/rings.hpp"

namespace vpoly {

// A point: values for t_e and x_s in a chosen ring. Lookups fall back to the
// family default (zero unless overridden).
template <EvaluationRing Ring>
class Assignment {
 public:
  using value_type = typename Ring::value_type;

  Assignment() : Assignment(Ring{}) {}
  explicit Assignment(Ring ring)
      : ring_(std::move(ring)), default_t_(ring_.zero()), default_x_(ring_.zero()) {}

  const Ring& ring() const { return ring_; }

  void set_t(const std::string& edge_id, value_type v) { t_[edge_id] = std::move(v); }
  void set_x(const Weight& weight, value_type v) { x_[weight] = std::move(v); }
  void set(const VarKey& key, value_type v) {
    if (key.is_t())
      set_t(key.edge(), std::move(v));
    else
      set_x(key.weight(), std::move(v));
  }
  void set_default_t(value_type v) { default_t_ = std::move(v); }
  void set_default_x(value_type v) { default_x_ = std::move(v); }

  const value_type& t(const std::string& edge_id) const {
    auto it = t_.find(edge_id);
    return it == t_.end() ? default_t_ : it->second;
  }
  const value_type& x(const Weight& weight) const {
    auto it = x_.find(weight);
    return it == x_.end() ? default_x_ : it->second;
  }
  const value_type& at(const VarKey& key) const {
    return key.is_t() ? t(key.edge()) : x(key.weight());
  }

  const value_type& default_t() const { return default_t_; }
  const value_type& default_x() const { return default_x_; }
  const std::map<std::string, value_type>& explicit_t() const { return t_; }
  const std::map<Weight, value_type>& explicit_x() const { return x_; }

  // Same values in a ring that counts operations (or any other wrapper that
  // shares the value type).
  template <EvaluationRing Other>
    requires std::same_as<typename Other::value_type, value_type>
  Assignment<Other> rebind(Other other) const {
    Assignment<Other> out(std::move(other));
    for (const auto& [k, v] : t_) out.set_t(k, v);
    for (const auto& [k, v] : x_) out.set_x(k, v);
    out.set_default_t(default_t_);
    out.set_default_x(default_x_);
    return out;
  }

 private:
  Ring ring_;
  std::map<std::string, value_type> t_;
  std::map<Weight, value_type> x_;
  value_type default_t_;
  value_type default_x_;
};

using AnyAssignment = std::variant<Assignment<IntegerRing>, Assignment<RationalRing>,
                                   Assignment<FloatRing>, Assignment<PrimeField>>;

template <EvaluationRing Ring>
typename Ring::value_type power(const Ring& ring, typename Ring::value_type base,
                                std::uint64_t exp) {
  auto result = ring.one();
  while (exp) {
    if (exp & 1) result = ring.mul(result, base);
    exp >>= 1;
    if (exp) base = ring.mul(base, base);
  }
  return result;
}

// Substitutes every variable and reduces in the assignment's ring.
template <EvaluationRing Ring>
typename Ring::value_type evaluate(const MultiPoly& p, const Assignment<Ring>& a) {
  const Ring& ring = a.ring();
  auto total = ring.zero();
  for (const auto& [m, c] : p.terms()) {
    auto term = ring.from_integer(c);
    for (const auto& [var, exp] : m.factors()) term = ring.mul(term, power(ring, a.at(var), exp));
    total = ring.add(total, term);
  }
  return total;
}

}  // namespace vpoly
