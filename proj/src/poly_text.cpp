#include "nashcert/poly_text.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "nashcert/error.hpp"

namespace nashcert {

namespace {

std::string render_monomial(const VarSpace& space, const Exponents& e) {
  std::string out;
  for (std::size_t s = 0; s < e.size(); ++s) {
    if (e[s] == 0) continue;
    if (!out.empty()) out += '*';
    out += space.var_at(s).name();
    if (e[s] > 1) out += '^' + std::to_string(e[s]);
  }
  return out;
}

// Splits a coefficient into a sign and an unsigned body. Complex coefficients
// with both parts nonzero always carry '+' and keep their sign inside parens.
std::pair<bool, std::string> render_coefficient(const GaussianRational& c, bool bare) {
  if (c.is_real()) {
    const bool neg = sgn(c.re()) < 0;
    mpq_class a = abs(c.re());
    if (!bare && a == 1) return {neg, ""};
    return {neg, a.get_str()};
  }
  if (sgn(c.re()) == 0) {
    const bool neg = sgn(c.im()) < 0;
    mpq_class b = abs(c.im());
    return {neg, b == 1 ? "i" : b.get_str() + "i"};
  }
  return {false, c.str()};
}

}  // namespace

std::string render_poly(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : p.terms()) {
    const std::string mono = render_monomial(p.space(), t.exps);
    auto [neg, coef] = render_coefficient(t.coef, mono.empty());
    std::string body = coef;
    if (!mono.empty()) body = coef.empty() ? mono : coef + "*" + mono;
    if (first) {
      out = (neg ? "-" : "") + body;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(const std::string& text) : s_(text) {}

  struct RawTerm {
    GaussianRational coef;
    std::vector<std::pair<Var, std::uint32_t>> factors;
  };

  std::vector<RawTerm> parse() {
    std::vector<RawTerm> terms;
    skip_ws();
    bool negative = eat('-');
    while (true) {
      RawTerm t = term();
      if (negative) t.coef = -t.coef;
      terms.push_back(std::move(t));
      skip_ws();
      if (pos_ == s_.size()) break;
      if (eat('+')) {
        negative = false;
      } else if (eat('-')) {
        negative = true;
      } else {
        fail("expected '+' or '-'");
      }
    }
    return terms;
  }

 private:
  RawTerm term() {
    skip_ws();
    RawTerm t{GaussianRational(1), {}};
    if (at_var_start()) {
      monomial(t);
      return t;
    }
    t.coef = coefficient();
    if (eat('*')) monomial(t);
    return t;
  }

  GaussianRational coefficient() {
    skip_ws();
    if (eat('(')) {
      const bool neg_re = eat('-');
      mpq_class re = rational();
      if (neg_re) re = -re;
      bool neg_im = false;
      if (eat('-')) {
        neg_im = true;
      } else if (!eat('+')) {
        fail("expected '+' or '-' inside complex coefficient");
      }
      mpq_class im = at_digit() ? rational() : mpq_class(1);
      if (!eat('i')) fail("expected 'i'");
      if (!eat(')')) fail("expected ')'");
      return GaussianRational(re, neg_im ? mpq_class(-im) : im);
    }
    if (eat('i')) return GaussianRational::i();
    if (!at_digit()) fail("expected coefficient or variable");
    mpq_class q = rational();
    if (pos_ < s_.size() && s_[pos_] == 'i') {
      ++pos_;
      return GaussianRational(0, q);
    }
    return GaussianRational(q);
  }

  void monomial(RawTerm& t) {
    do {
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      auto v = parse_var(name);
      if (!v) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      std::uint32_t power = 1;
      if (eat('^')) {
        mpz_class k = integer();
        if (k < 1 || k > 1000000) fail("exponent must be a positive integer");
        power = static_cast<std::uint32_t>(k.get_ui());
      }
      t.factors.emplace_back(*v, power);
    } while (eat('*'));
  }

  mpq_class rational() {
    mpq_class q(integer());
    if (eat('/')) {
      mpz_class d = integer();
      if (d == 0) fail("zero denominator");
      q /= d;
    }
    return q;
  }

  mpz_class integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(s_.substr(start, pos_ - start));
  }

  bool at_var_start() const {
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return c == 'x' || c == 'y' || c == 'z' || c == 't' || c == 'w';
  }
  bool at_digit() {
    skip_ws();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t k = 0; k < pos_ && k < s_.size(); ++k) {
      if (s_[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("polynomial: " + what, line, col);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(const std::string& text, const std::optional<VarSpace>& space) {
  auto raw = PolyParser(text).parse();

  VarSpace target = [&] {
    if (space) return *space;
    int n = 1;
    bool has_w = false;
    std::set<Family> families;
    for (const auto& t : raw) {
      for (const auto& [v, k] : t.factors) {
        if (v.family == Family::W) has_w = true;
        if (v.is_spatial()) {
          families.insert(v.family);
          n = std::max(n, v.index);
        }
      }
    }
    return VarSpace(n, {families.begin(), families.end()}, has_w);
  }();

  std::vector<Term> terms;
  terms.reserve(raw.size());
  for (const auto& t : raw) {
    Exponents e(target.size(), 0);
    for (const auto& [v, k] : t.factors) {
      auto s = target.slot(v);
      if (!s) {
        throw Error(ErrorCode::UnknownVariable,
                    "variable " + v.name() + " is not in " + target.describe());
      }
      e[*s] += k;
    }
    terms.push_back(Term{std::move(e), t.coef});
  }
  return MultiPoly(target, std::move(terms));
}

}  // namespace nashcert
