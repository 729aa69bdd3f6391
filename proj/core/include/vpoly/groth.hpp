#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "vpoly/bigint.hpp"

namespace vpoly {

// Element of Z[T], T the torus class (T = L - 1). Coefficients ascending,
// no trailing zeros.
class TorusPoly {
 public:
  TorusPoly() = default;
  explicit TorusPoly(std::vector<BigInt> coeffs);
  static TorusPoly constant(const BigInt& c);
  static TorusPoly t();  // T itself

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  BigInt coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }

  // Substitution T -> value, a ring homomorphism Z[T] -> Z.
  BigInt evaluate(const BigInt& value) const;

  TorusPoly& operator+=(const TorusPoly& o);
  TorusPoly& operator-=(const TorusPoly& o);
  friend TorusPoly operator+(TorusPoly a, const TorusPoly& b) { return a += b; }
  friend TorusPoly operator-(TorusPoly a, const TorusPoly& b) { return a -= b; }
  friend TorusPoly operator*(const TorusPoly& a, const TorusPoly& b);
  TorusPoly pow(unsigned e) const;

  bool operator==(const TorusPoly&) const = default;

  // Descending powers, e.g. "T^4 + 3*T^3 + 2*T^2"; zero is "0".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

// Classes of the hypersurface complements of the banana graphs with magnetic
// field: i = 0 is a single edge, i = 1 a pair of parallel edges.
TorusPoly banana_base(int i);
// Iterates u_m = (2T + 1) u_{m-1} - T(T + 1) u_{m-2} from the two base classes.
TorusPoly banana_recursion(std::size_t m);
// -(1 + T) T^{m+1} + T (T + 1)^{m+3}.
TorusPoly banana_closed(std::size_t m);
// m-th term of the same recursion for arbitrary anchors, in closed form
// A T^m + B (T + 1)^m with A = (T + 1) b0 - b1 and B = b1 - T b0.
TorusPoly closed_from_bases(const TorusPoly& b0, const TorusPoly& b1, std::size_t m);
// Comparison class without magnetic field: T^m + (T - 1)(T + 1)^{m+1}.
TorusPoly no_field_banana(std::size_t m);

// Euler characteristic with compact support: T -> -2.
BigInt euler_char_c(const TorusPoly& c);
// Predicted F_p-point count: T -> p - 1 (L -> p).
BigInt class_to_count(const TorusPoly& c, std::uint64_t prime);

}  // namespace vpoly
