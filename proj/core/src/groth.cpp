#include "vpoly/groth.hpp"

#include "vpoly/error.hpp"
#include "vpoly/rings.hpp"

namespace vpoly {

TorusPoly::TorusPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

TorusPoly TorusPoly::constant(const BigInt& c) { return TorusPoly({c}); }

TorusPoly TorusPoly::t() { return TorusPoly({0, 1}); }

void TorusPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt TorusPoly::evaluate(const BigInt& value) const {
  BigInt acc = 0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * value + coeffs_[k];
  return acc;
}

TorusPoly& TorusPoly::operator+=(const TorusPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

TorusPoly& TorusPoly::operator-=(const TorusPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

TorusPoly operator*(const TorusPoly& a, const TorusPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return TorusPoly(std::move(out));
}

TorusPoly TorusPoly::pow(unsigned e) const {
  TorusPoly result = constant(1);
  TorusPoly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::string TorusPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const BigInt mag = negative ? BigInt(-c) : c;
    if (k == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str() + "*";
    out += k == 1 ? "T" : "T^" + std::to_string(k);
  }
  return out;
}

namespace {

const TorusPoly kT = TorusPoly::t();
const TorusPoly kOne = TorusPoly::constant(1);

}  // namespace

TorusPoly banana_base(int i) {
  const TorusPoly t1 = kT + kOne;
  switch (i) {
    case 0:
      return t1 * kT.pow(2) + t1.pow(2) * kT.pow(2);
    case 1:
      return t1.pow(2) * kT.pow(2) + t1.pow(2) * kT.pow(3) +
             kT * t1 * (kT.pow(2) + kT + kOne);
    default:
      throw InputError("banana base class index must be 0 or 1");
  }
}

TorusPoly banana_recursion(std::size_t m) {
  TorusPoly prev = banana_base(0);
  if (m == 0) return prev;
  TorusPoly cur = banana_base(1);
  const TorusPoly a = TorusPoly({1, 2});         // 2T + 1
  const TorusPoly b = kT * (kT + kOne);          // T(T + 1)
  for (std::size_t k = 2; k <= m; ++k) {
    TorusPoly next = a * cur - b * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

TorusPoly banana_closed(std::size_t m) {
  const auto e = static_cast<unsigned>(m);
  return kT * (kT + kOne).pow(e + 3) - (kOne + kT) * kT.pow(e + 1);
}

TorusPoly closed_from_bases(const TorusPoly& b0, const TorusPoly& b1, std::size_t m) {
  const auto e = static_cast<unsigned>(m);
  const TorusPoly a = (kT + kOne) * b0 - b1;
  const TorusPoly b = b1 - kT * b0;
  return a * kT.pow(e) + b * (kT + kOne).pow(e);
}

TorusPoly no_field_banana(std::size_t m) {
  const auto e = static_cast<unsigned>(m);
  return kT.pow(e) + (kT - kOne) * (kT + kOne).pow(e + 1);
}

BigInt euler_char_c(const TorusPoly& c) { return c.evaluate(-2); }

BigInt class_to_count(const TorusPoly& c, std::uint64_t prime) {
  if (!is_prime(prime)) throw InputError(std::to_string(prime) + " is not prime");
  return c.evaluate(BigInt(prime) - 1);
}

}  // namespace vpoly
