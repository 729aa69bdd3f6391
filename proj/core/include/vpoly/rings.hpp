#pragma once

#include <cmath>
#include <concepts>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "vpoly/bigint.hpp"
#include "vpoly/error.hpp"

namespace vpoly {

// Commutative rings the evaluators run in. A ring is a small value object
// carrying whatever runtime parameters it needs (the modulus of F_p).
template <class R>
concept EvaluationRing = requires(const R& r, const typename R::value_type& a, const BigInt& n) {
  { r.zero() } -> std::convertible_to<typename R::value_type>;
  { r.one() } -> std::convertible_to<typename R::value_type>;
  { r.from_integer(n) } -> std::convertible_to<typename R::value_type>;
  { r.add(a, a) } -> std::convertible_to<typename R::value_type>;
  { r.mul(a, a) } -> std::convertible_to<typename R::value_type>;
  { r.is_zero(a) } -> std::convertible_to<bool>;
};

class IntegerRing {
 public:
  using value_type = BigInt;
  static constexpr std::string_view kName = "int";

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_integer(const BigInt& n) const { return n; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  bool is_zero(const value_type& a) const { return a == 0; }
};

class RationalRing {
 public:
  using value_type = Rational;
  static constexpr std::string_view kName = "rational";

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_integer(const BigInt& n) const { return Rational(n); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  bool is_zero(const value_type& a) const { return a == 0; }
};

// IEEE double arithmetic; any non-finite result raises EvaluationError.
class FloatRing {
 public:
  using value_type = double;
  static constexpr std::string_view kName = "float";

  value_type zero() const { return 0.0; }
  value_type one() const { return 1.0; }
  value_type from_integer(const BigInt& n) const { return check(n.convert_to<double>()); }
  value_type add(value_type a, value_type b) const { return check(a + b); }
  value_type mul(value_type a, value_type b) const { return check(a * b); }
  bool is_zero(value_type a) const { return a == 0.0; }

  static value_type check(value_type v) {
    if (!std::isfinite(v)) throw EvaluationError("floating-point evaluation left the finite range");
    return v;
  }
};

bool is_prime(std::uint64_t n);

// F_p for a prime p < 2^32, elements stored reduced in [0, p).
class PrimeField {
 public:
  using value_type = std::uint64_t;
  static constexpr std::string_view kName = "fp";
  static constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 32;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p >= kMaxModulus || !is_prime(p))
      throw InputError(std::to_string(p) + " is not a prime below 2^32");
  }

  std::uint64_t modulus() const { return p_; }
  value_type zero() const { return 0; }
  value_type one() const { return 1 % p_; }
  value_type from_integer(const BigInt& n) const {
    BigInt r = n % p_;
    if (r < 0) r += p_;
    return r.convert_to<std::uint64_t>();
  }
  value_type reduce(std::uint64_t n) const { return n % p_; }
  value_type add(value_type a, value_type b) const {
    value_type s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type mul(value_type a, value_type b) const { return a * b % p_; }
  bool is_zero(value_type a) const { return a == 0; }

 private:
  std::uint64_t p_;
};

// Wraps a ring and counts its additions and multiplications. Copies share the
// same counters, so an evaluator that copies the ring still reports into them.
template <EvaluationRing Base>
class CountingRing {
 public:
  using value_type = typename Base::value_type;
  static constexpr std::string_view kName = Base::kName;

  struct Counts {
    std::uint64_t additions = 0;
    std::uint64_t multiplications = 0;
  };

  explicit CountingRing(Base base = {}) : base_(std::move(base)), counts_(std::make_shared<Counts>()) {}

  const Base& base() const { return base_; }
  const Counts& counts() const { return *counts_; }
  void reset() const { *counts_ = {}; }

  value_type zero() const { return base_.zero(); }
  value_type one() const { return base_.one(); }
  value_type from_integer(const BigInt& n) const { return base_.from_integer(n); }
  value_type add(const value_type& a, const value_type& b) const {
    ++counts_->additions;
    return base_.add(a, b);
  }
  value_type mul(const value_type& a, const value_type& b) const {
    ++counts_->multiplications;
    return base_.mul(a, b);
  }
  bool is_zero(const value_type& a) const { return base_.is_zero(a); }

 private:
  Base base_;
  std::shared_ptr<Counts> counts_;
};

}  // namespace vpoly
