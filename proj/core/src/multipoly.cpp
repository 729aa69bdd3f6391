#include "vpoly/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "vpoly/error.hpp"

namespace vpoly {

VarKey VarKey::t(std::string edge_id) {
  VarKey k;
  k.kind_ = VarKind::t;
  k.edge_ = std::move(edge_id);
  return k;
}

VarKey VarKey::x(Weight weight) {
  VarKey k;
  k.kind_ = VarKind::x;
  k.weight_ = std::move(weight);
  return k;
}

std::strong_ordering VarKey::operator<=>(const VarKey& other) const {
  if (kind_ != other.kind_) return kind_ == VarKind::t ? std::strong_ordering::less
                                                       : std::strong_ordering::greater;
  if (kind_ == VarKind::t) return edge_ <=> other.edge_;
  return weight_ <=> other.weight_;
}

std::string VarKey::to_string() const {
  return is_t() ? "t[" + edge_ + "]" : "x[" + weight_.to_string() + "]";
}

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  for (auto& f : factors) {
    if (f.second == 0) continue;
    if (!factors_.empty() && factors_.back().first == f.first)
      factors_.back().second += f.second;
    else
      factors_.push_back(std::move(f));
  }
}

Monomial Monomial::of(const VarKey& var, std::uint32_t exp) { return Monomial({{var, exp}}); }

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (const auto& [v, e] : factors_) d += e;
  return d;
}

std::uint32_t Monomial::exponent(const VarKey& var) const {
  for (const auto& [v, e] : factors_)
    if (v == var) return e;
  return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto& f = out.factors_;
  f.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    auto cmp = i->first <=> j->first;
    if (cmp < 0) {
      f.push_back(*i++);
    } else if (cmp > 0) {
      f.push_back(*j++);
    } else {
      f.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  f.insert(f.end(), i, a.factors_.end());
  f.insert(f.end(), j, b.factors_.end());
  return out;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [v, e] : factors_) {
    if (!out.empty()) out += '*';
    out += v.to_string();
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

bool GrlexOrder::operator()(const Monomial& a, const Monomial& b) const {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da > db;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  const std::size_t n = std::min(fa.size(), fb.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto cmp = fa[i].first <=> fb[i].first;
    if (cmp != 0) return cmp < 0;  // a has the earlier variable
    if (fa[i].second != fb[i].second) return fa[i].second > fb[i].second;
  }
  return false;
}

MultiPoly MultiPoly::constant(const BigInt& c) { return term(Monomial{}, c); }

MultiPoly MultiPoly::variable(const VarKey& var) { return term(Monomial::of(var)); }

MultiPoly MultiPoly::term(const Monomial& m, const BigInt& c) {
  MultiPoly p;
  p.add_term(m, c);
  return p;
}

std::uint64_t MultiPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

BigInt MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const BigInt& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) { return *this = *this * other; }

MultiPoly& MultiPoly::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

MultiPoly MultiPoly::times(const Monomial& m) const {
  MultiPoly out;
  // grlex is compatible with multiplication, so terms arrive in order.
  for (const auto& [mm, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), mm * m, c);
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    BigInt mag = negative ? BigInt(-c) : c;
    if (m.is_one()) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str() + "*";
      out += m.to_string();
    }
  }
  return out;
}

namespace {

class TextParser {
 public:
  explicit TextParser(std::string_view text) : s_(text) {}

  MultiPoly parse() {
    MultiPoly out;
    skip();
    bool negative = false;
    if (peek() == '-') {
      ++pos_;
      negative = true;
    }
    while (true) {
      auto [m, c] = term();
      out.add_term(m, negative ? BigInt(-c) : c);
      skip();
      if (pos_ == s_.size()) break;
      char op = s_[pos_++];
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      negative = op == '-';
    }
    return out;
  }

 private:
  std::pair<Monomial, BigInt> term() {
    skip();
    BigInt coeff = 1;
    std::vector<Monomial::Factor> factors;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = BigInt(digits());
      skip();
      if (peek() != '*') return {Monomial{}, coeff};
      ++pos_;
    }
    while (true) {
      factors.push_back(factor());
      skip();
      if (peek() != '*') break;
      ++pos_;
    }
    return {Monomial(std::move(factors)), coeff};
  }

  Monomial::Factor factor() {
    skip();
    char kind = peek();
    if (kind != 't' && kind != 'x') fail("expected t[...] or x[...]");
    ++pos_;
    expect('[');
    auto close = s_.find(']', pos_);
    if (close == std::string_view::npos) fail("unterminated '['");
    std::string body(s_.substr(pos_, close - pos_));
    pos_ = close + 1;
    VarKey key = kind == 't' ? VarKey::t(body) : VarKey::x(parse_weight(body));
    if (kind == 't' && body.empty()) fail("empty edge id");
    std::uint32_t exp = 1;
    if (peek() == '^') {
      ++pos_;
      exp = static_cast<std::uint32_t>(std::stoul(digits()));
      if (exp == 0) fail("zero exponent");
    }
    return {key, exp};
  }

  Weight parse_weight(const std::string& body) {
    std::vector<std::uint64_t> coords;
    std::size_t i = 0;
    while (i <= body.size()) {
      auto comma = body.find(',', i);
      if (comma == std::string::npos) comma = body.size();
      std::string part = body.substr(i, comma - i);
      if (part.empty() || !std::all_of(part.begin(), part.end(),
                                       [](unsigned char ch) { return std::isdigit(ch); }))
        fail("bad weight coordinate '" + part + "'");
      coords.push_back(std::stoull(part));
      i = comma + 1;
    }
    return Weight(std::move(coords));
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  void expect(char ch) {
    if (peek() != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text) { return TextParser(text).parse(); }

std::vector<VarKey> variables_of(const MultiPoly& p) {
  std::set<VarKey> vars;
  for (const auto& [m, c] : p.terms())
    for (const auto& [v, e] : m.factors()) vars.insert(v);
  return {vars.begin(), vars.end()};
}

}  // namespace vpoly
