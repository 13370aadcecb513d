#pragma once

// Exact coefficient rings. Each ring is a small context object (copyable,
// comparable) that performs arithmetic on its Element type:
//
//   RationalField            Q, arbitrary precision (GMP)
//   PrimeField               F_p, p prime, p < 2^62
//   DualNumbers<K>           K[eps]/(eps^2) over a field K
//   UnivariatePolys<K>       K[t] over a field K
//
// Marked reduction only ever divides by the monic head 1, so every ring
// here is admissible as a base for marked sets.

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hilb/error.hpp"

namespace hilb {

template <class R>
concept CoefficientRing = requires(const R r, const typename R::Element a, const typename R::Element b,
                                   const mpq_class q) {
  { r.zero() } -> std::same_as<typename R::Element>;
  { r.one() } -> std::same_as<typename R::Element>;
  { r.from_rational(q) } -> std::same_as<typename R::Element>;
  { r.is_zero(a) } -> std::same_as<bool>;
  { r.equal(a, b) } -> std::same_as<bool>;
  { r.add(a, b) } -> std::same_as<typename R::Element>;
  { r.sub(a, b) } -> std::same_as<typename R::Element>;
  { r.mul(a, b) } -> std::same_as<typename R::Element>;
  { r.neg(a) } -> std::same_as<typename R::Element>;
  { r.is_unit(a) } -> std::same_as<bool>;
  { r.inv(a) } -> std::same_as<typename R::Element>;
  { r.to_string(a) } -> std::same_as<std::string>;
  { r.characteristic() } -> std::same_as<std::uint64_t>;
  { r.parameter_name() } -> std::same_as<std::string_view>;
  { r.name() } -> std::same_as<std::string>;
};

template <class R>
concept Field = CoefficientRing<R> && R::kIsField;

class RationalField {
 public:
  using Element = mpq_class;
  static constexpr bool kIsField = true;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_integer(long v) const { return Element(v); }
  Element from_rational(const mpq_class& q) const { return q; }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  bool is_unit(const Element& a) const { return !is_zero(a); }
  Element inv(const Element& a) const {
    if (is_zero(a)) fail(ErrorCode::NonUnitDivision, "inverse of 0 in Q");
    return 1 / a;
  }
  std::string to_string(const Element& a) const { return a.get_str(); }
  std::uint64_t characteristic() const { return 0; }
  std::string_view parameter_name() const { return {}; }
  Element parameter() const { fail(ErrorCode::InvalidArgument, "Q has no ring parameter"); }
  std::string name() const { return "QQ"; }

  bool operator==(const RationalField&) const = default;
};

bool is_prime_u64(std::uint64_t n);

class PrimeField {
 public:
  using Element = std::uint64_t;
  static constexpr bool kIsField = true;

  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1 % p_; }
  Element from_integer(long v) const {
    long r = v % static_cast<long>(p_);
    return static_cast<Element>(r < 0 ? r + static_cast<long>(p_) : r);
  }
  Element from_mpz(const mpz_class& z) const;
  Element from_rational(const mpq_class& q) const;
  bool is_zero(const Element& a) const { return a == 0; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  Element add(Element a, Element b) const {
    Element s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  bool is_unit(Element a) const { return a != 0; }
  Element inv(Element a) const;
  Element pow(Element a, std::uint64_t e) const;
  std::string to_string(Element a) const { return std::to_string(a); }
  std::uint64_t characteristic() const { return p_; }
  std::string_view parameter_name() const { return {}; }
  Element parameter() const { fail(ErrorCode::InvalidArgument, "F_p has no ring parameter"); }
  std::string name() const { return "ZZ/" + std::to_string(p_); }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint64_t p_;
};

template <Field K>
class DualNumbers {
 public:
  struct Element {
    typename K::Element re;
    typename K::Element eps;
  };
  static constexpr bool kIsField = false;

  explicit DualNumbers(K base = K{}) : base_(std::move(base)) {}
  const K& base() const { return base_; }

  Element zero() const { return {base_.zero(), base_.zero()}; }
  Element one() const { return {base_.one(), base_.zero()}; }
  Element make(typename K::Element re, typename K::Element eps) const { return {std::move(re), std::move(eps)}; }
  Element from_base(typename K::Element a) const { return {std::move(a), base_.zero()}; }
  Element from_rational(const mpq_class& q) const { return {base_.from_rational(q), base_.zero()}; }
  bool is_zero(const Element& a) const { return base_.is_zero(a.re) && base_.is_zero(a.eps); }
  bool equal(const Element& a, const Element& b) const {
    return base_.equal(a.re, b.re) && base_.equal(a.eps, b.eps);
  }
  Element add(const Element& a, const Element& b) const {
    return {base_.add(a.re, b.re), base_.add(a.eps, b.eps)};
  }
  Element sub(const Element& a, const Element& b) const {
    return {base_.sub(a.re, b.re), base_.sub(a.eps, b.eps)};
  }
  // (a + a'e)(b + b'e) = ab + (ab' + a'b)e, since e^2 = 0
  Element mul(const Element& a, const Element& b) const {
    return {base_.mul(a.re, b.re), base_.add(base_.mul(a.re, b.eps), base_.mul(a.eps, b.re))};
  }
  Element neg(const Element& a) const { return {base_.neg(a.re), base_.neg(a.eps)}; }
  bool is_unit(const Element& a) const { return base_.is_unit(a.re); }
  Element inv(const Element& a) const {
    if (!is_unit(a)) fail(ErrorCode::NonUnitDivision, "pure-eps element is not a unit");
    auto r = base_.inv(a.re);
    return {r, base_.neg(base_.mul(a.eps, base_.mul(r, r)))};
  }
  std::string to_string(const Element& a) const {
    if (base_.is_zero(a.eps)) return base_.to_string(a.re);
    std::string e = base_.to_string(a.eps);
    std::string eps_part = (e == "1") ? "eps" : (e == "-1" ? "-eps" : e + "*eps");
    if (base_.is_zero(a.re)) return eps_part;
    std::string s = base_.to_string(a.re);
    if (eps_part.front() == '-') return s + " - " + eps_part.substr(1);
    return s + " + " + eps_part;
  }
  std::uint64_t characteristic() const { return base_.characteristic(); }
  std::string_view parameter_name() const { return "eps"; }
  Element parameter() const { return {base_.zero(), base_.one()}; }
  std::string name() const { return base_.name() + "[eps]/(eps^2)"; }

  bool operator==(const DualNumbers&) const = default;

 private:
  K base_;
};

template <Field K>
class UnivariatePolys {
 public:
  /// Dense coefficient list, index = power of t, no trailing zeros.
  using Element = std::vector<typename K::Element>;
  static constexpr bool kIsField = false;

  explicit UnivariatePolys(K base = K{}, std::string var = "t") : base_(std::move(base)), var_(std::move(var)) {}
  const K& base() const { return base_; }

  Element zero() const { return {}; }
  Element one() const { return {base_.one()}; }
  Element from_base(typename K::Element a) const { return trim({std::move(a)}); }
  Element from_rational(const mpq_class& q) const { return from_base(base_.from_rational(q)); }
  /// c * t^k
  Element monomial(typename K::Element c, std::size_t k) const {
    Element r(k + 1, base_.zero());
    r[k] = std::move(c);
    return trim(std::move(r));
  }
  bool is_zero(const Element& a) const { return a.empty(); }
  bool equal(const Element& a, const Element& b) const {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!base_.equal(a[i], b[i])) return false;
    return true;
  }
  Element add(const Element& a, const Element& b) const {
    Element r(std::max(a.size(), b.size()), base_.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = base_.add(r[i], b[i]);
    return trim(std::move(r));
  }
  Element sub(const Element& a, const Element& b) const { return add(a, neg(b)); }
  Element mul(const Element& a, const Element& b) const {
    if (a.empty() || b.empty()) return {};
    Element r(a.size() + b.size() - 1, base_.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (base_.is_zero(a[i])) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = base_.add(r[i + j], base_.mul(a[i], b[j]));
    }
    return trim(std::move(r));
  }
  Element neg(const Element& a) const {
    Element r = a;
    for (auto& c : r) c = base_.neg(c);
    return r;
  }
  bool is_unit(const Element& a) const { return a.size() == 1; }
  Element inv(const Element& a) const {
    if (!is_unit(a)) fail(ErrorCode::NonUnitDivision, "non-constant element of K[t] is not a unit");
    return {base_.inv(a[0])};
  }
  typename K::Element evaluate(const Element& a, const typename K::Element& t) const {
    auto acc = base_.zero();
    for (std::size_t i = a.size(); i-- > 0;) acc = base_.add(base_.mul(acc, t), a[i]);
    return acc;
  }
  std::size_t degree(const Element& a) const { return a.empty() ? 0 : a.size() - 1; }
  std::string to_string(const Element& a) const {
    if (a.empty()) return "0";
    std::string out;
    for (std::size_t i = a.size(); i-- > 0;) {
      if (base_.is_zero(a[i])) continue;
      std::string c = base_.to_string(a[i]);
      bool negative = !c.empty() && c.front() == '-';
      if (negative) c = c.substr(1);
      if (!out.empty()) out += negative ? " - " : " + ";
      else if (negative) out += "-";
      std::string power = i == 0 ? "" : (i == 1 ? var_ : var_ + "^" + std::to_string(i));
      if (power.empty()) out += c;
      else if (c == "1") out += power;
      else out += c + "*" + power;
    }
    return out;
  }
  std::uint64_t characteristic() const { return base_.characteristic(); }
  std::string_view parameter_name() const { return var_; }
  Element parameter() const { return monomial(base_.one(), 1); }
  std::string name() const { return base_.name() + "[" + var_ + "]"; }

  bool operator==(const UnivariatePolys&) const = default;

 private:
  Element trim(Element r) const {
    while (!r.empty() && base_.is_zero(r.back())) r.pop_back();
    return r;
  }

  K base_;
  std::string var_;
};

/// Parses "a" or "a/b" (optionally signed) into a rational.
mpq_class parse_rational(std::string_view text);

}  // namespace hilb
