#pragma once

// Q[c1..c6] as a coefficient ring, for marked sets with symbolic tails.

#include "test_util.hpp"

namespace testutil {

inline const AmbientPtr& coeff_ambient() {
  static const AmbientPtr amb = make_ambient({"c1", "c2", "c3", "c4", "c5", "c6"});
  return amb;
}

/// Q[c1..c6] posing as a field; inverses exist only for nonzero constants,
/// which is all the reduction needs since heads are monic.
class SymbolicRing {
 public:
  using Element = Polynomial<RationalField>;
  static constexpr bool kIsField = true;

  Element zero() const { return Element(Q, coeff_ambient()); }
  Element one() const { return from_rational(1); }
  Element from_rational(const mpq_class& q) const { return Element::constant(Q, coeff_ambient(), q); }
  bool is_zero(const Element& a) const { return a.is_zero(); }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  bool is_unit(const Element& a) const { return a.size() == 1 && a.terms().front().mono.is_one(); }
  Element inv(const Element& a) const {
    if (!is_unit(a)) fail(ErrorCode::NonUnitDivision, "only nonzero constants are invertible");
    return from_rational(1 / a.terms().front().coeff);
  }
  std::string to_string(const Element& a) const { return hilb::to_string(a); }
  std::uint64_t characteristic() const { return 0; }
  std::string_view parameter_name() const { return {}; }
  Element parameter() const { fail(ErrorCode::InvalidArgument, "no ring parameter"); }
  std::string name() const { return "QQ[c1..c6]"; }
  bool operator==(const SymbolicRing&) const = default;
};

static_assert(Field<SymbolicRing>);

inline Polynomial<RationalField> C(const std::string& s) { return P(s, coeff_ambient()); }

inline const SymbolicRing S{};

using SPoly = Polynomial<SymbolicRing>;

/// a*x + b over the symbolic ring.
inline SPoly linear(const std::string& a, const std::string& b) {
  auto amb = xy_ambient();
  return SPoly::term(S, amb, M("x", amb), C(a)) + SPoly::constant(S, amb, C(b));
}

inline MarkedSet<SymbolicRing> example_set(const std::array<std::string, 6>& c) {
  auto amb = xy_ambient();
  return MarkedSet<SymbolicRing>::make(S, amb, order_ideal({"1", "x"}, amb),
                                       {{M("x^2", amb), linear(c[0], c[1])},
                                        {M("x*y", amb), linear(c[2], c[3])},
                                        {M("y", amb), linear(c[4], c[5])}});
}

inline const std::array<std::string, 6> kGeneric{"c1", "c2", "c3", "c4", "c5", "c6"};
// c3 = c6 - c1 c5 and c4 = -c2 c5 solve both conditions
inline const std::array<std::string, 6> kLocus{"c1", "c2", "c6 - c1*c5", "-c2*c5", "c5", "c6"};

inline SPoly times_x(const SPoly& f) { return f.mul_term(M("x", xy_ambient()), S.one()); }

inline std::vector<Polynomial<RationalField>> row_of(const SparseRow<Polynomial<RationalField>>& r) {
  std::vector<Polynomial<RationalField>> out(6, S.zero());
  for (const auto& [c, v] : r) out[c] = v;
  return out;
}

inline std::vector<Polynomial<RationalField>> row(std::initializer_list<const char*> entries) {
  std::vector<Polynomial<RationalField>> out;
  for (const char* e : entries) out.push_back(C(e));
  return out;
}

inline std::vector<Polynomial<RationalField>> negated(std::vector<Polynomial<RationalField>> r) {
  for (auto& e : r) e = -e;
  return r;
}

}  // namespace testutil
