#include "vpoly/ffcount.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <thread>

#include "vpoly/error.hpp"
#include "vpoly/rings.hpp"

namespace vpoly {

std::string_view to_string(CountMethod m) {
  return m == CountMethod::brute ? "brute" : "linear-elimination";
}

CountMethod parse_count_method(std::string_view name) {
  if (name == "brute") return CountMethod::brute;
  if (name == "elim" || name == "linear-elimination") return CountMethod::linear_elimination;
  throw InputError("unknown counting method '" + std::string(name) + "'");
}

std::string_view to_string(Verdict v) {
  return v == Verdict::polynomial_fit ? "polynomial_fit" : "non_polynomial_evidence";
}

unsigned resolve_workers(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("VPOLY_WORKERS")) {
    char* end = nullptr;
    long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<unsigned>(std::min(n, 256L));
    throw InputError("VPOLY_WORKERS must be a positive integer");
  }
  return 1;
}

namespace {

// Polynomial reduced mod p over variable slots 0..n-1.
struct CompiledPoly {
  struct Term {
    std::uint64_t coeff;
    std::vector<std::pair<std::size_t, std::uint32_t>> factors;
  };
  std::vector<Term> terms;

  std::uint64_t eval(const PrimeField& f, const std::vector<std::uint64_t>& vals) const {
    std::uint64_t acc = 0;
    for (const auto& t : terms) {
      std::uint64_t v = t.coeff;
      for (const auto& [slot, exp] : t.factors)
        for (std::uint32_t k = 0; k < exp && v != 0; ++k) v = f.mul(v, vals[slot]);
      acc = f.add(acc, v);
    }
    return acc;
  }
};

// Evaluates `visit(values)` over every tuple with flat index in [lo, hi) of
// F_p^dims, digits little-endian in slot order.
template <class Visit>
std::uint64_t sweep(std::uint64_t p, std::size_t dims, std::uint64_t lo, std::uint64_t hi,
                    Visit&& visit) {
  std::vector<std::uint64_t> vals(dims, 0);
  std::uint64_t idx = lo;
  for (std::size_t d = 0; d < dims; ++d) {
    vals[d] = idx % p;
    idx /= p;
  }
  std::uint64_t count = 0;
  for (std::uint64_t i = lo; i < hi; ++i) {
    count += visit(vals);
    for (std::size_t d = 0; d < dims; ++d) {
      if (++vals[d] < p) break;
      vals[d] = 0;
    }
  }
  return count;
}

// Splits [0, total) into `workers` contiguous chunks and sums the per-chunk
// counts. Chunk boundaries depend only on `workers`; the sum does not.
template <class Visit>
BigInt parallel_sweep(std::uint64_t p, std::size_t dims, std::uint64_t total, unsigned workers,
                      const Visit& visit) {
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(total, 1)));
  if (workers <= 1) return BigInt(sweep(p, dims, 0, total, visit));
  std::vector<std::uint64_t> partial(workers, 0);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t lo = total / workers * w + std::min<std::uint64_t>(w, total % workers);
    const std::uint64_t hi = lo + total / workers + (w < total % workers ? 1 : 0);
    pool.emplace_back([&, w, lo, hi] { partial[w] = sweep(p, dims, lo, hi, visit); });
  }
  for (auto& t : pool) t.join();
  BigInt sum = 0;
  for (auto c : partial) sum += c;
  return sum;
}

std::uint64_t checked_space(std::uint64_t p, std::size_t dims, std::uint64_t budget) {
  BigInt space = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(dims));
  if (space > budget)
    throw RefusalError(std::to_string(p) + "^" + std::to_string(dims) +
                       " evaluations exceed the counting budget of " + std::to_string(budget));
  return space.convert_to<std::uint64_t>();
}

// First variable (ambient order) that appears, and only with exponent 1.
std::optional<VarKey> linear_variable(const MultiPoly& poly, std::span<const VarKey> ambient) {
  std::map<VarKey, std::uint32_t> max_exp;
  for (const auto& [m, c] : poly.terms())
    for (const auto& [v, e] : m.factors()) max_exp[v] = std::max(max_exp[v], e);
  for (const auto& v : ambient) {
    auto it = max_exp.find(v);
    if (it != max_exp.end() && it->second == 1) return v;
  }
  return std::nullopt;
}

}  // namespace

CountReport count_zeros(const MultiPoly& poly, std::span<const VarKey> ambient, std::uint64_t prime,
                        const CountOptions& options) {
  if (!is_prime(prime)) throw InputError(std::to_string(prime) + " is not prime");
  const PrimeField field(prime);
  std::map<VarKey, std::size_t> slot_of;
  for (const auto& v : ambient)
    if (!slot_of.emplace(v, slot_of.size()).second)
      throw InputError("ambient variable " + v.to_string() + " listed twice");
  for (const auto& v : variables_of(poly))
    if (!slot_of.contains(v))
      throw InputError("variable " + v.to_string() + " is missing from the ambient space");

  const unsigned workers = resolve_workers(options.workers);
  CountReport report{prime, ambient.size(), 0, CountMethod::brute};

  std::optional<VarKey> pivot;
  if (options.method != CountMethod::brute) {
    pivot = linear_variable(poly, ambient);
    if (!pivot && options.method == CountMethod::linear_elimination)
      throw InputError("no variable occurs linearly; linear elimination does not apply");
  }

  if (!pivot) {
    const std::uint64_t space = checked_space(prime, ambient.size(), options.budget);
    CompiledPoly compiled;
    for (const auto& [m, c] : poly.terms()) {
      CompiledPoly::Term t{field.from_integer(c), {}};
      for (const auto& [v, e] : m.factors()) t.factors.emplace_back(slot_of.at(v), e);
      compiled.terms.push_back(std::move(t));
    }
    report.zeros = parallel_sweep(prime, ambient.size(), space, workers,
                                  [&](const std::vector<std::uint64_t>& vals) -> std::uint64_t {
                                    return compiled.eval(field, vals) == 0 ? 1 : 0;
                                  });
    return report;
  }

  // poly = a * pivot + b. Per co-assignment of the other occurring variables:
  // a != 0 gives one root, a = b = 0 gives p, otherwise none. Ambient
  // variables that do not occur contribute a factor p each.
  report.method = CountMethod::linear_elimination;
  std::map<VarKey, std::size_t> rest;
  for (const auto& v : variables_of(poly))
    if (v != *pivot) rest.emplace(v, rest.size());
  const std::size_t free_vars = ambient.size() - rest.size() - 1;
  const std::uint64_t space = checked_space(prime, rest.size(), options.budget);

  CompiledPoly a, b;
  for (const auto& [m, c] : poly.terms()) {
    CompiledPoly::Term t{field.from_integer(c), {}};
    bool linear = false;
    for (const auto& [v, e] : m.factors()) {
      if (v == *pivot)
        linear = true;
      else
        t.factors.emplace_back(rest.at(v), e);
    }
    (linear ? a : b).terms.push_back(std::move(t));
  }
  BigInt zeros = parallel_sweep(prime, rest.size(), space, workers,
                                [&](const std::vector<std::uint64_t>& vals) -> std::uint64_t {
                                  if (a.eval(field, vals) != 0) return 1;
                                  return b.eval(field, vals) == 0 ? prime : 0;
                                });
  report.zeros = zeros * boost::multiprecision::pow(BigInt(prime), static_cast<unsigned>(free_vars));
  return report;
}

MultiPoly curve_f() {
  return MultiPoly::parse("t[e1]^2 + t[e2]^2 + t[e1]*t[e2] + t[e1]^2*t[e2] + t[e1]*t[e2]^2");
}

BigInt count_curve_f(std::uint64_t prime, const CountOptions& options) {
  const std::vector<VarKey> ambient{VarKey::t("e1"), VarKey::t("e2")};
  return count_zeros(curve_f(), ambient, prime, options).zeros;
}

std::vector<Rational> interpolate(std::span<const BigInt> xs, std::span<const BigInt> ys) {
  if (xs.size() != ys.size()) throw InputError("interpolation needs matching point lists");
  const std::size_t n = xs.size();
  std::vector<Rational> out(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<BigInt> basis{1};  // prod_{j != i} (X - x_j), ascending
    BigInt denom = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      if (xs[i] == xs[j]) throw InputError("interpolation nodes must be distinct");
      std::vector<BigInt> next(basis.size() + 1, 0);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * xs[j];
      }
      basis = std::move(next);
      denom *= xs[i] - xs[j];
    }
    const Rational scale = make_rational(ys[i], denom);
    for (std::size_t k = 0; k < basis.size(); ++k) out[k] += scale * basis[k];
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

CountabilityReport countability_test(const MultiPoly& poly,
                                     const std::vector<std::uint64_t>& fit_primes,
                                     const std::vector<std::uint64_t>& validation_primes,
                                     std::optional<std::size_t> degree_bound,
                                     const CountOptions& options) {
  const auto ambient = variables_of(poly);
  CountabilityReport r;
  r.degree_bound = degree_bound.value_or(ambient.size());
  r.fit_primes = fit_primes;
  r.validation_primes = validation_primes;

  if (fit_primes.size() < r.degree_bound + 1)
    throw InputError("need at least " + std::to_string(r.degree_bound + 1) +
                     " fit primes for degree bound " + std::to_string(r.degree_bound));
  std::set<std::uint64_t> distinct;
  for (auto p : fit_primes) distinct.insert(p);
  for (auto p : validation_primes) distinct.insert(p);
  if (distinct.size() != fit_primes.size() + validation_primes.size())
    throw InputError("fit and validation primes must be distinct");
  for (auto p : distinct)
    if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");

  std::vector<BigInt> xs;
  for (auto p : fit_primes) {
    xs.emplace_back(p);
    r.fit_counts.push_back(count_zeros(poly, ambient, p, options).zeros);
  }
  r.interpolant = interpolate(xs, r.fit_counts);

  auto value_at = [&](std::uint64_t q) {
    Rational acc = 0;
    for (std::size_t k = r.interpolant.size(); k-- > 0;) acc = acc * q + r.interpolant[k];
    return acc;
  };
  bool residuals_zero = true;
  for (auto q : validation_primes) {
    r.validation_counts.push_back(count_zeros(poly, ambient, q, options).zeros);
    r.residuals.push_back(Rational(r.validation_counts.back()) - value_at(q));
    if (r.residuals.back() != 0) residuals_zero = false;
  }

  const bool integral = std::all_of(r.interpolant.begin(), r.interpolant.end(), [](const Rational& c) {
    return boost::multiprecision::denominator(c) == 1;
  });
  if (integral) {
    std::vector<BigInt> coeffs;
    for (const auto& c : r.interpolant) coeffs.push_back(boost::multiprecision::numerator(c));
    r.fit_coefficients = std::move(coeffs);
  }
  const bool within_bound = r.interpolant.size() <= r.degree_bound + 1;
  r.verdict = integral && within_bound && residuals_zero ? Verdict::polynomial_fit
                                                         : Verdict::non_polynomial_evidence;
  r.caveat =
      "evidence from a finite sample of prime fields F_p only; prime powers q = p^r are not "
      "counted, so a polynomial fit is not a proof of polynomial countability";
  return r;
}

}  // namespace vpoly
