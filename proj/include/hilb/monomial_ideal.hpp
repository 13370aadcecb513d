#pragma once

#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "hilb/monomial.hpp"

namespace hilb {

/// Finite set of monomials closed under division, sorted degrevlex-descending.
class OrderIdeal {
 public:
  OrderIdeal() = default;
  /// Throws InvalidOrderIdeal unless the set is division-closed.
  static OrderIdeal make(std::size_t nvars, std::vector<Monomial> monomials);

  std::size_t nvars() const { return nvars_; }
  std::size_t size() const { return monos_.size(); }
  const std::vector<Monomial>& monomials() const { return monos_; }
  const Monomial& operator[](std::size_t i) const { return monos_[i]; }
  bool contains(const Monomial& m) const { return index_.count(m) != 0; }
  /// Position in the sorted list, or -1.
  int index_of(const Monomial& m) const {
    auto it = index_.find(m);
    return it == index_.end() ? -1 : static_cast<int>(it->second);
  }
  unsigned max_degree() const;

  bool operator==(const OrderIdeal& o) const { return nvars_ == o.nvars_ && monos_ == o.monos_; }

 private:
  std::size_t nvars_ = 0;
  std::vector<Monomial> monos_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

bool is_order_ideal(std::span<const Monomial> monomials);

/// Monomial ideal stored by its minimal generators (degrevlex-descending).
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Reduces the given generators to the minimal antichain.
  static MonomialIdeal from_generators(std::size_t nvars, std::vector<Monomial> gens);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool contains(const Monomial& m) const;
  unsigned max_generator_degree() const;
  bool operator==(const MonomialIdeal&) const = default;

 private:
  std::size_t nvars_ = 0;
  std::vector<Monomial> gens_;
};

/// J_N: the ideal generated by the monomials outside N.
MonomialIdeal complement_ideal(const OrderIdeal& N);

/// Standard monomials of J, or nullopt when J has infinite colength.
std::optional<OrderIdeal> standard_monomials(const MonomialIdeal& J);

/// Pommaret cone of a monomial m != 1: m times any monomial in the
/// variables that are <= min(m).
struct PommaretCone {
  Monomial generator;
  std::vector<std::size_t> multipliers;  // variable indices

  bool contains(const Monomial& m) const;
};

PommaretCone pommaret_cone(const Monomial& m);

/// Membership in the Pommaret cone of g (g == 1 is given every multiplier).
bool in_pommaret_cone(const Monomial& g, const Monomial& m);

class PommaretBasis {
 public:
  PommaretBasis() = default;
  PommaretBasis(std::vector<Monomial> gens, MonomialIdeal parent);

  const std::vector<Monomial>& generators() const { return gens_; }
  const MonomialIdeal& parent() const { return parent_; }
  std::size_t size() const { return gens_.size(); }
  /// Index of the generator whose cone contains m, or -1. Cones are
  /// disjoint; if several matched, the generator with the largest minimum
  /// variable would win.
  int find_cone(const Monomial& m) const;
  unsigned max_degree() const;

 private:
  std::vector<Monomial> gens_;  // degrevlex-descending
  MonomialIdeal parent_;
};

/// Degree bound for the bounded completion: max(D + n, n(D - 1) + 1) where D
/// is the largest minimal generator degree.
unsigned pommaret_degree_bound(const MonomialIdeal& J);

/// Completion by non-multiplicative prolongations up to the degree bound;
/// nullopt if it has not closed by then. Works for any monomial ideal.
std::optional<PommaretBasis> pommaret_completion(const MonomialIdeal& J);

/// Pommaret basis of a finite-colength ideal. Throws InfiniteColength or NotQuasiStable.
PommaretBasis pommaret_basis(const MonomialIdeal& J);

bool is_quasi_stable(const MonomialIdeal& J);

/// Checks that the cones are pairwise disjoint and cover exactly the
/// monomials of the parent ideal in every degree <= bound.
bool verify_cone_partition(const PommaretBasis& P, unsigned bound);

/// Number of degree-d monomials of J counted through the cone decomposition.
std::size_t count_via_cones(const PommaretBasis& P, unsigned d);

}  // namespace hilb
