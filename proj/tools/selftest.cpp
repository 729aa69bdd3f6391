#include <functional>

#include "cli.hpp"
#include "vpoly/error.hpp"
#include "vpoly/evaluators.hpp"
#include "vpoly/ffcount.hpp"
#include "vpoly/groth.hpp"
#include "vpoly/vpolynomial.hpp"

namespace vpoly::cli {

namespace {

WeightedGraph triangle(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return make_cycle(3, {Weight{a}, Weight{b}, Weight{c}});
}

BigInt ipow(const BigInt& b, unsigned e) {
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

std::string join(const std::vector<BigInt>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : ",") + x.str();
  return s;
}

using Check = std::function<std::pair<bool, std::string>()>;

std::vector<std::pair<std::string, Check>> checks() {
  std::vector<std::pair<std::string, Check>> c;

  c.emplace_back("unit-triangle-polynomial", [] {
    const auto text = fk_polynomial(triangle(1, 1, 1)).to_string();
    return std::pair{text == "t[e1]*t[e2]*t[e3]*x[3] + t[e1]*t[e2]*x[3] + t[e1]*t[e3]*x[3] + t[e1]*x[1]*x[2] + "
                              "t[e2]*t[e3]*x[3] + t[e2]*x[1]*x[2] + t[e3]*x[1]*x[2] + x[1]^3",
                     text};
  });
  c.emplace_back("perturbed-triangle-polynomial", [] {
    const auto text = fk_polynomial(triangle(1, 0, 0)).to_string();
    return std::pair{text == "t[e1]*t[e2]*t[e3]*x[1] + t[e1]*t[e2]*x[1] + t[e1]*t[e3]*x[1] + t[e1]*x[0]*x[1] + "
                              "t[e2]*t[e3]*x[1] + t[e2]*x[0]*x[1] + t[e3]*x[0]*x[1] + x[0]^2*x[1]",
                     text};
  });
  c.emplace_back("triangle-variable-counts", [] {
    const auto a = variables_of(fk_polynomial(triangle(1, 1, 1))).size();
    const auto b = variables_of(fk_polynomial(triangle(1, 0, 0))).size();
    return std::pair{a == 6 && b == 5, std::to_string(a) + " and " + std::to_string(b) + " variables"};
  });
  c.emplace_back("banana-polynomials", [] {
    const auto b0 = dc_polynomial(make_banana(0, 1, 2)).to_string();
    const auto b1 = dc_polynomial(make_banana(1, 1, 2)).to_string();
    const bool ok = b0 == "t[e1]*x[3] + x[1]*x[2]" &&
                    b1 == "t[e1]*t[e2]*x[3] + t[e1]*x[3] + t[e2]*x[3] + x[1]*x[2]" &&
                    fk_polynomial(make_banana(1, 1, 2)) == doubled_edge_polynomial(make_banana(0, 1, 2), "e1", "e2");
    return std::pair{ok, b1};
  });
  c.emplace_back("fk-equals-deletion-contraction", [] {
    bool ok = true;
    for (std::size_t n = 1; n <= 6 && ok; ++n) {
      std::vector<Weight> w;
      for (std::size_t i = 0; i < n; ++i) w.push_back(Weight{i % 3});
      ok = fk_polynomial(make_cycle(n, w)) == dc_polynomial(make_cycle(n, w)) &&
           fk_polynomial(make_line(n, w)) == dc_polynomial(make_line(n, w));
    }
    return std::pair{ok, std::string("lines and cycles up to 6 vertices")};
  });
  c.emplace_back("perturbed-triangle-counts", [] {
    const auto poly = fk_polynomial(triangle(1, 0, 0));
    std::vector<BigInt> got;
    bool ok = true;
    for (long p : {2, 3, 5, 7, 11, 13}) {
      got.push_back(count_zeros(poly, variables_of(poly), static_cast<std::uint64_t>(p)).zeros);
      ok = ok && got.back() == 4 * p - 7 * p * p + 2 * p * p * p + 2 * p * p * p * p;
    }
    return std::pair{ok, join(got)};
  });
  c.emplace_back("perturbed-triangle-countable", [] {
    const auto r = countability_test(fk_polynomial(triangle(1, 0, 0)), {2, 3, 5, 7, 11, 13}, {17, 19});
    const bool ok = r.verdict == Verdict::polynomial_fit && r.fit_coefficients &&
                    *r.fit_coefficients == std::vector<BigInt>{0, 4, -7, 2, 2};
    return std::pair{ok, std::string(to_string(r.verdict)) +
                             (r.fit_coefficients ? " (" + join(*r.fit_coefficients) + ")" : "")};
  });
  c.emplace_back("unit-triangle-not-countable", [] {
    const auto r = countability_test(fk_polynomial(triangle(1, 1, 1)), {2, 3, 5, 7, 11, 13, 17}, {19});
    return std::pair{r.verdict == Verdict::non_polynomial_evidence,
                     std::string(to_string(r.verdict)) + ", residual " + r.residuals.at(0).str()};
  });
  c.emplace_back("curve-point-counts", [] {
    const std::vector<BigInt> z{count_curve_f(2), count_curve_f(3), count_curve_f(5)};
    return std::pair{z == std::vector<BigInt>{1, 1, 4}, join(z)};
  });
  c.emplace_back("banana-base-classes", [] {
    const TorusPoly T = TorusPoly::t(), one = TorusPoly::constant(1);
    const bool ok = banana_base(0).to_string() == "T^4 + 3*T^3 + 2*T^2" &&
                    banana_base(1) == T * (T + one) * (T.pow(3) + TorusPoly({1, 2, 3}));
    return std::pair{ok, banana_base(1).to_string()};
  });
  c.emplace_back("banana-recursion-closed-form", [] {
    bool ok = true;
    for (std::size_t m = 0; m <= 20; ++m)
      ok = ok && banana_recursion(m) == banana_closed(m) &&
           closed_from_bases(banana_base(0), banana_base(1), m) == banana_closed(m);
    return std::pair{ok, std::string("m = 0..20")};
  });
  c.emplace_back("banana-euler-characteristic", [] {
    bool ok = true;
    for (unsigned m = 0; m <= 20; ++m)
      ok = ok && euler_char_c(banana_closed(m)) == ipow(-2, m + 1) + ipow(-1, m) * 2;
    return std::pair{ok, "m = 2 gives " + euler_char_c(banana_closed(2)).str()};
  });
  c.emplace_back("banana-point-count-bridge", [] {
    bool ok = true;
    for (std::size_t m = 0; m <= 3; ++m) {
      const auto poly = fk_polynomial(make_banana(m, 1, 2));
      for (std::uint64_t p : {2, 3, 5, 7}) {
        CountOptions brute;
        brute.method = CountMethod::brute;
        const auto zeros = count_zeros(poly, variables_of(poly), p, brute).zeros;
        ok = ok && class_to_count(banana_closed(m), p) == ipow(p, static_cast<unsigned>(m + 4)) - zeros;
      }
    }
    return std::pair{ok, std::string("m <= 3, p in {2,3,5,7}")};
  });
  c.emplace_back("no-field-banana-differs", [] {
    bool ok = no_field_banana(0) == TorusPoly({0, 0, 1});
    for (std::size_t m = 0; m <= 20; ++m) ok = ok && no_field_banana(m) != banana_closed(m);
    return std::pair{ok, no_field_banana(1).to_string()};
  });
  c.emplace_back("line-and-cycle-evaluators", [] {
    Assignment<IntegerRing> a;
    bool ok = true;
    for (std::size_t n = 1; n <= 10 && ok; ++n) {
      for (std::size_t k = 1; k <= n; ++k) a.set_t("e" + std::to_string(k), static_cast<long>(k % 5) - 2);
      for (std::uint64_t s = 0; s <= 2 * n; ++s) a.set_x(Weight{s}, static_cast<long>(s % 7) - 3);
      std::vector<Weight> w;
      for (std::size_t i = 0; i < n; ++i) w.push_back(Weight{i % 3});
      ok = eval_line(w, a) == eval_generic(make_line(n, w), a) && eval_cycle(w, a) == eval_generic(make_cycle(n, w), a);
    }
    return std::pair{ok, std::string("n = 1..10 against scalar deletion-contraction")};
  });
  c.emplace_back("half-partition-gadget", [] {
    const bool ok = decide_half_partition({1, 2, 3}) && !decide_half_partition({2, 2, 2}) &&
                    decide_half_partition({1, 1}) && !decide_half_partition({1, 2, 4}) &&
                    decide_half_partition({3, 1, 1, 2, 2, 1});
    return std::pair{ok, std::string("{1,2,3} {2,2,2} {1,1} {1,2,4} {3,1,1,2,2,1}")};
  });
  c.emplace_back("physical-routes-agree", [] {
    const auto g = triangle(1, 1, 1);
    PhysicalParams p{1.0, {{"e1", 1.0}, {"e2", 1.0}, {"e3", 1.0}}, {{"v1", 0.0}, {"v2", 0.0}, {"v3", 0.0}}};
    const double a = physical_partition_function(g, p);
    const double b = physical_partition_function_symbolic(g, p);
    return std::pair{std::abs(a - b) <= 1e-9 * std::abs(a), std::to_string(a)};
  });
  return c;
}

}  // namespace

std::vector<Claim> run_selftest() {
  std::vector<Claim> out;
  for (const auto& [key, check] : checks()) {
    Claim claim{key, false, ""};
    try {
      auto [ok, detail] = check();
      claim.passed = ok;
      claim.detail = detail;
    } catch (const std::exception& e) {
      claim.detail = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(claim));
  }
  return out;
}

}  // namespace vpoly::cli
