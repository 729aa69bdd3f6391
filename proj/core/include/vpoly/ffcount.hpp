#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vpoly/bigint.hpp"
#include "vpoly/multipoly.hpp"

namespace vpoly {

enum class CountMethod {
  brute,               // every tuple of F_p^n
  linear_elimination,  // solve for a variable of degree 1 per co-assignment
};

std::string_view to_string(CountMethod m);
CountMethod parse_count_method(std::string_view name);  // "brute" | "elim"

struct CountOptions {
  // Maximum polynomial evaluations per (polynomial, prime).
  std::uint64_t budget = 200'000'000;
  // 0 = take VPOLY_WORKERS from the environment, else 1.
  unsigned workers = 0;
  // Unset = linear elimination when some variable occurs linearly, else brute.
  std::optional<CountMethod> method;
};

// Resolves CountOptions::workers.
unsigned resolve_workers(unsigned requested);

struct CountReport {
  std::uint64_t prime = 0;
  std::size_t ambient_dim = 0;
  BigInt zeros;
  CountMethod method = CountMethod::brute;
};

// Number of points of F_p^{|ambient|} where p vanishes. `ambient` must contain
// every variable of p. The result is identical for any worker count.
CountReport count_zeros(const MultiPoly& poly, std::span<const VarKey> ambient,
                        std::uint64_t prime, const CountOptions& options = {});

// t1^2 + t2^2 + t1 t2 + t1^2 t2 + t1 t2^2 in t[e1], t[e2].
MultiPoly curve_f();
// Zeros of curve_f() in F_p^2.
BigInt count_curve_f(std::uint64_t prime, const CountOptions& options = {});

enum class Verdict { polynomial_fit, non_polynomial_evidence };
std::string_view to_string(Verdict v);

struct CountabilityReport {
  std::size_t degree_bound = 0;
  std::vector<std::uint64_t> fit_primes;
  std::vector<BigInt> fit_counts;
  // Interpolating polynomial, ascending powers of p, trailing zeros trimmed.
  std::vector<Rational> interpolant;
  // Present only when every interpolant coefficient is an integer.
  std::optional<std::vector<BigInt>> fit_coefficients;
  std::vector<std::uint64_t> validation_primes;
  std::vector<BigInt> validation_counts;
  // N(q) - interpolant(q) at each validation prime.
  std::vector<Rational> residuals;
  Verdict verdict = Verdict::non_polynomial_evidence;
  std::string caveat;
};

// Interpolates N(p) through the fit primes and checks the validation primes.
// polynomial_fit needs integer coefficients, degree <= degree_bound, and zero
// residuals. degree_bound defaults to the number of variables of `poly`.
CountabilityReport countability_test(const MultiPoly& poly,
                                     const std::vector<std::uint64_t>& fit_primes,
                                     const std::vector<std::uint64_t>& validation_primes,
                                     std::optional<std::size_t> degree_bound = std::nullopt,
                                     const CountOptions& options = {});

// Exact Lagrange interpolation, ascending coefficients, trailing zeros trimmed.
std::vector<Rational> interpolate(std::span<const BigInt> xs, std::span<const BigInt> ys);

}  // namespace vpoly
