#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "hilb/error.hpp"

namespace hilb {

inline constexpr std::size_t kMaxVariables = 8;

/// Exponent vector x^a = x_0^a_0 ... x_{n-1}^a_{n-1}.
///
/// Variable ranking: index 0 is the LARGEST variable. With variables
/// [x, y, z] this is x > y > z. "min" and "max" of a monomial refer to this
/// ranking, so the minimum variable of a monomial is the one with the
/// highest index among those dividing it.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : n_(static_cast<std::uint8_t>(nvars)) {
    if (nvars > kMaxVariables) fail(ErrorCode::InvalidArgument, "at most 8 variables are supported");
  }
  Monomial(std::initializer_list<unsigned> exps) : Monomial(exps.size()) {
    std::size_t i = 0;
    for (unsigned e : exps) e_[i++] = static_cast<Exponent>(e);
  }
  static Monomial from_vector(const std::vector<int>& exps) {
    Monomial m(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] < 0) fail(ErrorCode::InvalidArgument, "negative exponent");
      m.e_[i] = static_cast<Exponent>(exps[i]);
    }
    return m;
  }
  static Monomial variable(std::size_t nvars, std::size_t i) {
    Monomial m(nvars);
    m.e_[i] = 1;
    return m;
  }

  std::size_t size() const { return n_; }
  Exponent operator[](std::size_t i) const { return e_[i]; }
  Exponent& operator[](std::size_t i) { return e_[i]; }

  unsigned degree() const {
    unsigned d = 0;
    for (std::size_t i = 0; i < n_; ++i) d += e_[i];
    return d;
  }
  bool is_one() const { return degree() == 0; }

  /// Index of the smallest variable dividing this monomial (-1 for 1).
  int min_var() const {
    for (std::size_t i = n_; i-- > 0;)
      if (e_[i]) return static_cast<int>(i);
    return -1;
  }
  /// Index of the largest variable dividing this monomial (-1 for 1).
  int max_var() const {
    for (std::size_t i = 0; i < n_; ++i)
      if (e_[i]) return static_cast<int>(i);
    return -1;
  }

  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < n_; ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }
  Monomial operator*(const Monomial& o) const {
    Monomial r(n_);
    for (std::size_t i = 0; i < n_; ++i) r.e_[i] = static_cast<Exponent>(e_[i] + o.e_[i]);
    return r;
  }
  /// this / o; requires o | this.
  Monomial operator/(const Monomial& o) const {
    Monomial r(n_);
    for (std::size_t i = 0; i < n_; ++i) r.e_[i] = static_cast<Exponent>(e_[i] - o.e_[i]);
    return r;
  }
  Monomial lcm(const Monomial& o) const {
    Monomial r(n_);
    for (std::size_t i = 0; i < n_; ++i) r.e_[i] = std::max(e_[i], o.e_[i]);
    return r;
  }
  bool coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < n_; ++i)
      if (e_[i] && o.e_[i]) return false;
    return true;
  }
  Monomial times_var(std::size_t i) const {
    Monomial r = *this;
    ++r.e_[i];
    return r;
  }

  std::vector<int> to_vector() const { return std::vector<int>(e_.begin(), e_.begin() + n_); }

  bool operator==(const Monomial& o) const = default;

  std::size_t hash() const {
    std::size_t h = n_;
    for (std::size_t i = 0; i < n_; ++i) h = h * 1000003u ^ e_[i];
    return h;
  }

 private:
  std::array<Exponent, kMaxVariables> e_{};
  std::uint8_t n_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Graded reverse lexicographic comparison: -1, 0, +1.
inline int degrevlex_compare(const Monomial& a, const Monomial& b) {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

/// Strict "a > b" in degrevlex; the canonical sort key for polynomials.
struct DegRevLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return degrevlex_compare(a, b) > 0; }
};

/// Variable names of a polynomial ring, listed from largest to smallest.
struct Ambient {
  std::vector<std::string> names;

  std::size_t size() const { return names.size(); }
  int index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return static_cast<int>(i);
    return -1;
  }
  bool operator==(const Ambient&) const = default;
};

using AmbientPtr = std::shared_ptr<const Ambient>;

AmbientPtr make_ambient(std::vector<std::string> names);

inline bool same_ambient(const AmbientPtr& a, const AmbientPtr& b) { return a == b || (a && b && *a == *b); }

/// "x^2*y", "1" for the unit monomial.
std::string monomial_to_string(const Monomial& m, const Ambient& amb);

/// Parses a pure monomial such as "x^2*y" or "1".
Monomial parse_monomial(const std::string& text, const Ambient& amb);

/// All monomials of total degree exactly d in n variables.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d);

}  // namespace hilb
