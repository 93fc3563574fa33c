#include "hamcurve/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace hamcurve {

namespace {

int variable_rank(std::string_view name) {
  static constexpr std::string_view kOrder[] = {"p1", "p2", "p", "z", "q", "x1", "x2", "x", "y", "t"};
  for (int i = 0; i < static_cast<int>(std::size(kOrder)); ++i)
    if (kOrder[i] == name) return i;
  return static_cast<int>(std::size(kOrder));
}

std::vector<std::string> merge_vars(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
             [](const std::string& l, const std::string& r) { return variable_less(l, r); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void accumulate(MultiPoly::TermMap& terms, const Exponents& e, const Rational& c) {
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  } else if (c == 0) {
    terms.erase(it);
  }
}

}  // namespace

bool variable_less(std::string_view a, std::string_view b) {
  const int ra = variable_rank(a);
  const int rb = variable_rank(b);
  if (ra != rb) return ra < rb;
  return a < b;
}

bool is_identifier(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  return std::all_of(name.begin(), name.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

MultiPoly::MultiPoly(const Rational& c) {
  // mpq_class(num, den) is not reduced on construction.
  Rational v = c;
  v.canonicalize();
  if (v != 0) terms_.emplace(Exponents{}, std::move(v));
}

MultiPoly::MultiPoly(long c) : MultiPoly(Rational(c)) {}

MultiPoly::MultiPoly(std::vector<std::string> vars, TermMap terms) : vars_(std::move(vars)), terms_(std::move(terms)) {
  normalize();
}

MultiPoly MultiPoly::variable(std::string_view name) {
  if (!is_identifier(name)) throw PolyError("invalid variable name '" + std::string(name) + "'");
  TermMap t;
  t.emplace(Exponents{1}, Rational(1));
  return MultiPoly({std::string(name)}, std::move(t));
}

void MultiPoly::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) used[i] = true;
  if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;

  std::vector<std::string> vars;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (used[i]) {
      vars.push_back(vars_[i]);
      keep.push_back(i);
    }
  }
  TermMap terms;
  for (const auto& [e, c] : terms_) {
    Exponents ne(keep.size());
    for (std::size_t k = 0; k < keep.size(); ++k) ne[k] = e[keep[k]];
    terms.emplace(std::move(ne), c);
  }
  vars_ = std::move(vars);
  terms_ = std::move(terms);
}

MultiPoly::TermMap MultiPoly::remap(const std::vector<std::string>& vars) const {
  if (vars == vars_) return terms_;
  std::vector<std::size_t> pos(vars_.size());
  for (std::size_t i = 0, j = 0; i < vars_.size(); ++i) {
    while (vars[j] != vars_[i]) ++j;
    pos[i] = j;
  }
  TermMap out;
  for (const auto& [e, c] : terms_) {
    Exponents ne(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
    out.emplace(std::move(ne), c);
  }
  return out;
}

Rational MultiPoly::constant_term() const {
  auto it = terms_.find(Exponents(vars_.size(), 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

bool MultiPoly::depends_on(std::string_view var) const {
  return std::find(vars_.begin(), vars_.end(), var) != vars_.end();
}

int MultiPoly::degree(std::string_view var) const {
  if (is_zero()) return -1;
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return 0;
  const auto idx = static_cast<std::size_t>(it - vars_.begin());
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
  return static_cast<int>(d);
}

int MultiPoly::total_degree() const {
  if (is_zero()) return -1;
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) {
    std::uint32_t s = 0;
    for (auto v : e) s += v;
    d = std::max(d, s);
  }
  return static_cast<int>(d);
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::string_view var) const {
  const int deg = degree(var);
  if (deg < 0) return {};
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return {*this};
  const auto idx = static_cast<std::size_t>(it - vars_.begin());
  std::vector<TermMap> parts(static_cast<std::size_t>(deg) + 1);
  for (const auto& [e, c] : terms_) {
    Exponents ne = e;
    const auto k = ne[idx];
    ne[idx] = 0;
    parts[k].emplace(std::move(ne), c);
  }
  std::vector<MultiPoly> out;
  out.reserve(parts.size());
  for (auto& p : parts) out.push_back(MultiPoly(vars_, std::move(p)));
  return out;
}

std::pair<Exponents, Rational> MultiPoly::leading_term() const {
  if (is_zero()) throw PolyError("leading term of zero polynomial");
  const auto& [e, c] = *terms_.rbegin();
  return {e, c};
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(Rational(1));
  MultiPoly base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

Rational MultiPoly::eval(const std::map<std::string, Rational>& values) const {
  std::vector<Rational> point;
  point.reserve(vars_.size());
  for (const auto& v : vars_) {
    auto it = values.find(v);
    if (it == values.end()) throw PolyError("unbound variable '" + v + "' in evaluation");
    point.push_back(it->second);
  }
  Rational sum = 0;
  Rational term;
  for (const auto& [e, c] : terms_) {
    term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::uint32_t k = 0; k < e[i]; ++k) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

double MultiPoly::eval(const std::map<std::string, double>& values) const {
  std::vector<double> point;
  point.reserve(vars_.size());
  for (const auto& v : vars_) {
    auto it = values.find(v);
    if (it == values.end()) throw PolyError("unbound variable '" + v + "' in evaluation");
    point.push_back(it->second);
  }
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double term = to_double(c);
    for (std::size_t i = 0; i < e.size(); ++i) term *= std::pow(point[i], static_cast<int>(e[i]));
    sum += term;
  }
  return sum;
}

std::string MultiPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    Rational mag = abs(c);
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;

    std::vector<std::string> factors;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      factors.push_back(e[i] == 1 ? vars_[i] : vars_[i] + "^" + std::to_string(e[i]));
    }
    if (factors.empty() || mag != 1) {
      os << mag.get_str();
      if (!factors.empty()) os << "*";
    }
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (k) os << "*";
      os << factors[k];
    }
  }
  return os.str();
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.is_zero()) return *this;
  if (vars_ == o.vars_) {
    for (const auto& [e, c] : o.terms_) accumulate(terms_, e, c);
  } else {
    auto vars = merge_vars(vars_, o.vars_);
    TermMap mine = remap(vars);
    for (const auto& [e, c] : o.remap(vars)) accumulate(mine, e, c);
    vars_ = std::move(vars);
    terms_ = std::move(mine);
  }
  normalize();
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  auto vars = merge_vars(a.vars_, b.vars_);
  const auto ta = a.remap(vars);
  const auto tb = b.remap(vars);
  MultiPoly::TermMap out;
  Exponents e(vars.size());
  for (const auto& [ea, ca] : ta) {
    for (const auto& [eb, cb] : tb) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      accumulate(out, e, ca * cb);
    }
  }
  return MultiPoly(std::move(vars), std::move(out));
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly add(const MultiPoly& a, const MultiPoly& b) { return a + b; }
MultiPoly mul(const MultiPoly& a, const MultiPoly& b) { return a * b; }

MultiPoly scale(const MultiPoly& a, const Rational& c) {
  if (c == 0) return {};
  MultiPoly r = a;
  return r * MultiPoly(c);
}

MultiPoly monomial(const Rational& c, const std::map<std::string, unsigned>& powers) {
  MultiPoly r(c);
  for (const auto& [name, e] : powers) r *= MultiPoly::variable(name).pow(e);
  return r;
}

MultiPoly differentiate(const MultiPoly& a, std::string_view var) {
  if (!is_identifier(var)) throw PolyError("unknown variable name '" + std::string(var) + "'");
  auto it = std::find(a.vars_.begin(), a.vars_.end(), var);
  if (it == a.vars_.end()) return {};
  const auto idx = static_cast<std::size_t>(it - a.vars_.begin());
  MultiPoly::TermMap out;
  for (const auto& [e, c] : a.terms_) {
    if (e[idx] == 0) continue;
    Exponents ne = e;
    --ne[idx];
    accumulate(out, ne, c * e[idx]);
  }
  return MultiPoly(a.vars_, std::move(out));
}

MultiPoly substitute(const MultiPoly& a, const std::map<std::string, MultiPoly>& bindings) {
  std::vector<const MultiPoly*> image(a.vars_.size(), nullptr);
  bool any = false;
  for (std::size_t i = 0; i < a.vars_.size(); ++i) {
    auto it = bindings.find(a.vars_[i]);
    if (it != bindings.end()) {
      image[i] = &it->second;
      any = true;
    }
  }
  if (!any) return a;

  // Cache powers of each substituted value.
  std::vector<std::vector<MultiPoly>> powers(a.vars_.size());
  auto power_of = [&](std::size_t i, std::uint32_t e) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.emplace_back(Rational(1));
    while (cache.size() <= e) cache.push_back(cache.back() * *image[i]);
    return cache[e];
  };

  MultiPoly result;
  for (const auto& [e, c] : a.terms_) {
    Exponents kept(a.vars_.size(), 0);
    MultiPoly term(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (image[i])
        term *= power_of(i, e[i]);
      else
        kept[i] = e[i];
    }
    MultiPoly::TermMap m;
    m.emplace(std::move(kept), Rational(1));
    result += term * MultiPoly(a.vars_, std::move(m));
  }
  return result;
}

MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw PolyError("division by zero polynomial");
  if (a.is_zero()) return {};
  if (b.is_constant()) return scale(a, Rational(1) / b.constant_term());

  auto vars = merge_vars(a.vars_, b.vars_);
  MultiPoly::TermMap rem = a.remap(vars);
  const MultiPoly::TermMap div = b.remap(vars);
  const auto& [lead_e, lead_c] = *div.rbegin();

  MultiPoly::TermMap quot;
  Exponents qe(vars.size());
  while (!rem.empty()) {
    const auto& [re, rc] = *rem.rbegin();
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (re[i] < lead_e[i]) throw PolyError("inexact polynomial division");
      qe[i] = re[i] - lead_e[i];
    }
    const Rational qc = rc / lead_c;
    accumulate(quot, qe, qc);
    Exponents e(vars.size());
    for (const auto& [de, dc] : div) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = de[i] + qe[i];
      accumulate(rem, e, -qc * dc);
    }
  }
  return MultiPoly(std::move(vars), std::move(quot));
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  MultiPoly parse() {
    MultiPoly r = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw PolyError(what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly r = term();
    for (;;) {
      if (accept('+'))
        r += term();
      else if (accept('-'))
        r -= term();
      else
        return r;
    }
  }

  MultiPoly term() {
    MultiPoly r = unary();
    for (;;) {
      if (accept('*')) {
        r *= unary();
      } else if (accept('/')) {
        MultiPoly d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division only by nonzero constants");
        r = scale(r, Rational(1) / d.constant_term());
      } else {
        return r;
      }
    }
  }

  MultiPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  MultiPoly power() {
    MultiPoly base = primary();
    if (accept('^')) {
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      const unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (e > 1000) fail("exponent too large");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  MultiPoly primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
        ++pos_;
      return MultiPoly(parse_rational(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return MultiPoly::variable(text_.substr(start, pos_ - start));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text) { return Parser(text).parse(); }

}  // namespace hamcurve
