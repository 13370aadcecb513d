#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hilb/monomial.hpp"
#include "hilb/rings.hpp"

namespace hilb {

/// Sparse multivariate polynomial over a coefficient ring.
///
/// Canonical form: terms sorted by degrevlex, largest first, with no zero
/// coefficients and no repeated monomials. Two polynomials are equal iff
/// their term lists are equal.
template <CoefficientRing Ring>
class Polynomial {
 public:
  using Coeff = typename Ring::Element;
  struct Term {
    Monomial mono;
    Coeff coeff;
  };

  Polynomial(Ring ring, AmbientPtr ambient) : ring_(std::move(ring)), amb_(std::move(ambient)) {}

  static Polynomial constant(const Ring& ring, AmbientPtr amb, Coeff c) {
    Monomial one(amb ? amb->size() : 0);
    return term(ring, std::move(amb), one, std::move(c));
  }
  static Polynomial term(const Ring& ring, AmbientPtr amb, const Monomial& m, Coeff c) {
    Polynomial p(ring, std::move(amb));
    if (!ring.is_zero(c)) p.terms_.push_back({m, std::move(c)});
    return p;
  }
  static Polynomial monomial(const Ring& ring, AmbientPtr amb, const Monomial& m) {
    return term(ring, std::move(amb), m, ring.one());
  }
  static Polynomial variable(const Ring& ring, AmbientPtr amb, std::size_t i) {
    auto n = amb->size();
    return monomial(ring, std::move(amb), Monomial::variable(n, i));
  }
  /// Combines like terms, drops zeros, sorts.
  static Polynomial from_terms(const Ring& ring, AmbientPtr amb, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return degrevlex_compare(a.mono, b.mono) > 0; });
    Polynomial p(ring, std::move(amb));
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff = ring.add(p.terms_.back().coeff, t.coeff);
      } else {
        if (!p.terms_.empty() && ring.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
        p.terms_.push_back(std::move(t));
      }
    }
    if (!p.terms_.empty() && ring.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
    return p;
  }

  const Ring& ring() const { return ring_; }
  const AmbientPtr& ambient() const { return amb_; }
  std::size_t nvars() const { return amb_->size(); }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coeff coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& k) { return degrevlex_compare(t.mono, k) > 0; });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return ring_.zero();
  }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = ring_.neg(t.coeff);
    return r;
  }

  Polynomial operator+(const Polynomial& o) const { return combine(o, false); }
  Polynomial operator-(const Polynomial& o) const { return combine(o, true); }

  Polynomial operator*(const Polynomial& o) const {
    check_compatible(o);
    std::unordered_map<Monomial, Coeff, MonomialHash> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
      for (const auto& b : o.terms_) {
        Monomial m = a.mono * b.mono;
        auto c = ring_.mul(a.coeff, b.coeff);
        auto [it, inserted] = acc.try_emplace(m, c);
        if (!inserted) it->second = ring_.add(it->second, c);
      }
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!ring_.is_zero(c)) terms.push_back({m, std::move(c)});
    return from_terms(ring_, amb_, std::move(terms));
  }

  Polynomial scale(const Coeff& c) const {
    Polynomial r(ring_, amb_);
    for (const auto& t : terms_) {
      auto v = ring_.mul(t.coeff, c);
      if (!ring_.is_zero(v)) r.terms_.push_back({t.mono, std::move(v)});
    }
    return r;
  }

  /// c * m * this
  Polynomial mul_term(const Monomial& m, const Coeff& c) const {
    Polynomial r(ring_, amb_);
    for (const auto& t : terms_) {
      auto v = ring_.mul(t.coeff, c);
      if (!ring_.is_zero(v)) r.terms_.push_back({t.mono * m, std::move(v)});
    }
    return r;  // multiplication by a monomial preserves degrevlex order
  }

  Polynomial pow(unsigned e) const {
    Polynomial r = constant(ring_, amb_, ring_.one());
    Polynomial b = *this;
    while (e) {
      if (e & 1) r = r * b;
      e >>= 1;
      if (e) b = b * b;
    }
    return r;
  }

  /// One exact division step of the head term: this - (lc(this)/lc(d)) * (lm(this)/lm(d)) * d.
  /// Heads are taken in degrevlex.
  Polynomial head_division_step(const Polynomial& d) const {
    check_compatible(d);
    if (is_zero() || d.is_zero()) fail(ErrorCode::InvalidArgument, "head division with zero polynomial");
    const auto& h = terms_.front();
    const auto& dh = d.terms_.front();
    if (!dh.mono.divides(h.mono)) fail(ErrorCode::InvalidArgument, "head monomial does not divide");
    if (!ring_.is_unit(dh.coeff)) fail(ErrorCode::NonUnitDivision, "head coefficient is not a unit");
    auto q = ring_.mul(h.coeff, ring_.inv(dh.coeff));
    return *this - d.mul_term(h.mono / dh.mono, q);
  }

  bool operator==(const Polynomial& o) const {
    if (!same_ambient(amb_, o.amb_) || !(ring_ == o.ring_) || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (!(terms_[i].mono == o.terms_[i].mono) || !ring_.equal(terms_[i].coeff, o.terms_[i].coeff)) return false;
    return true;
  }

  void check_compatible(const Polynomial& o) const {
    if (!same_ambient(amb_, o.amb_)) fail(ErrorCode::AmbientMismatch, "polynomials live in different rings");
    if (!(ring_ == o.ring_)) fail(ErrorCode::RingMismatch, "coefficient rings differ");
  }

  /// Maps coefficients into another ring, keeping the ambient.
  template <CoefficientRing Target, class Fn>
  Polynomial<Target> map_coefficients(const Target& target, Fn&& fn) const {
    std::vector<typename Polynomial<Target>::Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.mono, fn(t.coeff)});
    return Polynomial<Target>::from_terms(target, amb_, std::move(out));
  }

  /// Same coefficients, reinterpreted in another ambient with the same number of variables
  /// or with extra variables appended/prepended via an index map old -> new.
  Polynomial embed(AmbientPtr target, const std::vector<std::size_t>& index_map) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m(target->size());
      for (std::size_t i = 0; i < t.mono.size(); ++i) m[index_map[i]] = t.mono[i];
      out.push_back({m, t.coeff});
    }
    return from_terms(ring_, std::move(target), std::move(out));
  }

 private:
  Polynomial combine(const Polynomial& o, bool subtract) const {
    check_compatible(o);
    Polynomial r(ring_, amb_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      int cmp;
      if (i == terms_.size()) cmp = -1;
      else if (j == o.terms_.size()) cmp = 1;
      else cmp = degrevlex_compare(terms_[i].mono, o.terms_[j].mono);
      if (cmp > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (cmp < 0) {
        const auto& t = o.terms_[j++];
        r.terms_.push_back({t.mono, subtract ? ring_.neg(t.coeff) : t.coeff});
      } else {
        auto c = subtract ? ring_.sub(terms_[i].coeff, o.terms_[j].coeff) : ring_.add(terms_[i].coeff, o.terms_[j].coeff);
        if (!ring_.is_zero(c)) r.terms_.push_back({terms_[i].mono, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  Ring ring_;
  AmbientPtr amb_;
  std::vector<Term> terms_;
};

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

namespace detail {

inline bool is_compound_coefficient(const std::string& s) {
  for (std::size_t i = 1; i < s.size(); ++i)
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] == ' ') return true;
  return false;
}

}  // namespace detail

template <CoefficientRing Ring>
std::string to_string(const Polynomial<Ring>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    std::string c = p.ring().to_string(t.coeff);
    bool compound = detail::is_compound_coefficient(c);
    bool negative = !compound && !c.empty() && c.front() == '-';
    if (negative) c = c.substr(1);
    if (compound) c = "(" + c + ")";
    std::string body;
    if (t.mono.is_one()) body = c;
    else if (c == "1") body = monomial_to_string(t.mono, *p.ambient());
    else body = c + "*" + monomial_to_string(t.mono, *p.ambient());
    if (first) out += negative ? "-" + body : body;
    else out += (negative ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

namespace detail {

struct Token {
  enum Kind { Number, Ident, Op, End } kind;
  std::string text;
};

std::vector<Token> tokenize_polynomial(const std::string& text);

template <CoefficientRing Ring>
class PolynomialParser {
 public:
  using Poly = Polynomial<Ring>;
  PolynomialParser(const std::string& text, const Ring& ring, AmbientPtr amb)
      : text_(text), toks_(tokenize_polynomial(text)), ring_(ring), amb_(std::move(amb)) {}

  Poly parse() {
    Poly p = expr();
    if (peek().kind != Token::End) error("unexpected '" + peek().text + "'");
    return p;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool accept_op(char c) {
    if (peek().kind == Token::Op && peek().text[0] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorCode::Parse, msg + " in polynomial '" + text_ + "'");
  }

  Poly expr() {
    bool neg = false;
    if (accept_op('-')) neg = true;
    else accept_op('+');
    Poly acc = term();
    if (neg) acc = -acc;
    while (true) {
      if (accept_op('+')) acc = acc + term();
      else if (accept_op('-')) acc = acc - term();
      else break;
    }
    return acc;
  }

  bool starts_factor() const {
    const auto& t = peek();
    return t.kind == Token::Number || t.kind == Token::Ident || (t.kind == Token::Op && t.text[0] == '(');
  }

  Poly term() {
    Poly acc = power();
    while (true) {
      if (accept_op('*')) acc = acc * power();
      else if (starts_factor()) acc = acc * power();
      else break;
    }
    return acc;
  }

  Poly power() {
    Poly base = atom();
    if (accept_op('^')) {
      if (peek().kind != Token::Number || peek().text.find('/') != std::string::npos) error("exponent must be a nonnegative integer");
      unsigned e = static_cast<unsigned>(std::stoul(toks_[pos_++].text));
      return base.pow(e);
    }
    return base;
  }

  Poly atom() {
    const auto& t = peek();
    if (t.kind == Token::Number) {
      ++pos_;
      return Poly::constant(ring_, amb_, ring_.from_rational(parse_rational(t.text)));
    }
    if (t.kind == Token::Ident) {
      ++pos_;
      int v = amb_->index_of(t.text);
      if (v >= 0) return Poly::variable(ring_, amb_, static_cast<std::size_t>(v));
      if (!ring_.parameter_name().empty() && t.text == ring_.parameter_name())
        return Poly::constant(ring_, amb_, ring_.parameter());
      error("unknown symbol '" + t.text + "'");
    }
    if (accept_op('(')) {
      Poly p = expr();
      if (!accept_op(')')) error("missing ')'");
      return p;
    }
    if (accept_op('-')) return -atom();
    error(t.kind == Token::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
  }

  std::string text_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Ring ring_;
  AmbientPtr amb_;
};

}  // namespace detail

/// Grammar: integer or rational coefficients, variables from the ambient,
/// '^' for nonnegative integer powers, optional '*', parentheses. The
/// ring's parameter symbol ("eps" for dual numbers, "t" for K[t]) is
/// accepted as a coefficient.
template <CoefficientRing Ring>
Polynomial<Ring> parse_polynomial(const std::string& text, const Ring& ring, const AmbientPtr& amb) {
  return detail::PolynomialParser<Ring>(text, ring, amb).parse();
}

}  // namespace hilb
