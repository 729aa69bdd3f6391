#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vpoly/bigint.hpp"
#include "vpoly/graph.hpp"

namespace vpoly {

enum class VarKind { t, x };

// A polynomial variable: t_e for an edge id or x_s for a weight s. All
// t-keys precede all x-keys; t-keys compare by edge id, x-keys by weight.
class VarKey {
 public:
  static VarKey t(std::string edge_id);
  static VarKey x(Weight weight);

  VarKind kind() const { return kind_; }
  bool is_t() const { return kind_ == VarKind::t; }
  const std::string& edge() const { return edge_; }
  const Weight& weight() const { return weight_; }

  std::strong_ordering operator<=>(const VarKey& other) const;
  bool operator==(const VarKey& other) const = default;

  // t[e1] or x[3] / x[1,0,2].
  std::string to_string() const;

 private:
  VarKind kind_ = VarKind::t;
  std::string edge_;
  Weight weight_;
};

// Product of variables with positive exponents, kept sorted by VarKey.
class Monomial {
 public:
  using Factor = std::pair<VarKey, std::uint32_t>;

  Monomial() = default;
  // Factors may be unsorted and repeated; zero exponents are dropped.
  explicit Monomial(std::vector<Factor> factors);
  static Monomial of(const VarKey& var, std::uint32_t exp = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::uint64_t degree() const;
  std::uint32_t exponent(const VarKey& var) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  bool operator==(const Monomial&) const = default;

  std::string to_string() const;

 private:
  std::vector<Factor> factors_;
};

// Graded lexicographic order, largest first: higher total degree first, then
// the monomial with the larger exponent on the earliest differing variable.
struct GrlexOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse polynomial in Z[t, x] with arbitrary-precision coefficients. Terms
// are stored in canonical form: no zero coefficients, canonical monomials,
// grlex order.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, BigInt, GrlexOrder>;

  MultiPoly() = default;
  static MultiPoly constant(const BigInt& c);
  static MultiPoly variable(const VarKey& var);
  static MultiPoly term(const Monomial& m, const BigInt& c = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  std::uint64_t total_degree() const;
  // Coefficient of `m`, zero if absent.
  BigInt coefficient(const Monomial& m) const;

  // Accumulates c * m.
  void add_term(const Monomial& m, const BigInt& c);

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  MultiPoly& operator*=(const BigInt& scalar);
  MultiPoly operator-() const;

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const BigInt& s) { return a *= s; }
  friend MultiPoly operator*(const BigInt& s, MultiPoly a) { return a *= s; }
  // Multiplication by a single monomial, which never merges terms.
  MultiPoly times(const Monomial& m) const;

  bool operator==(const MultiPoly&) const = default;

  // Canonical text, e.g. "t[e1]*x[3] + x[1]*x[2]"; the zero polynomial is "0".
  std::string to_string() const;
  // Inverse of to_string (accepts any sum of products in that syntax).
  static MultiPoly parse(std::string_view text);

 private:
  TermMap terms_;
};

// Var(p): every variable with a nonzero occurrence, ascending VarKey order.
std::vector<VarKey> variables_of(const MultiPoly& p);

}  // namespace vpoly
