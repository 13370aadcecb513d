#include "test_util.hpp"

using namespace hilb;
using namespace testutil;

TEST_SUITE("monomial") {

TEST_CASE("degrevlex order and variable ranks") {
  CHECK(degrevlex_compare(M("x"), M("y")) > 0);
  CHECK(degrevlex_compare(M("y"), M("z")) > 0);
  CHECK(degrevlex_compare(M("x*z"), M("y^2")) < 0);
  CHECK(degrevlex_compare(M("x^2"), M("y^3")) < 0);
  CHECK(M("x*y^2").min_var() == 1);
  CHECK(M("x*y^2").max_var() == 0);
  CHECK(M("1").min_var() == -1);
  CHECK(monomial_to_string(M("x^2*z"), *xyz_ambient()) == "x^2*z");
  CHECK(monomials_of_degree(3, 2).size() == 6);
}

TEST_CASE("order ideals validate division closure") {
  CHECK(order_ideal({"1", "x", "y", "x*y"}).size() == 4);
  CHECK(error_of([] { order_ideal({"1", "x^2"}); }) == ErrorCode::InvalidOrderIdeal);
  CHECK(error_of([] { order_ideal({"x"}); }) == ErrorCode::InvalidOrderIdeal);
}

TEST_CASE("complement ideal and Pommaret basis of N = {1, x}") {
  auto amb = xy_ambient();
  auto N = order_ideal({"1", "x"}, amb);
  auto J = complement_ideal(N);
  std::vector<Monomial> want{M("x^2", amb), M("y", amb)};
  CHECK(J.generators() == want);
  auto P = pommaret_basis(J);
  std::vector<Monomial> pj{M("x^2", amb), M("x*y", amb), M("y", amb)};
  CHECK(P.generators() == pj);
  CHECK(standard_monomials(J) == N);
}

TEST_CASE("Pommaret cones use variables at or below the minimum variable") {
  auto c = pommaret_cone(M("x*y"));
  CHECK(c.multipliers == std::vector<std::size_t>{1, 2});
  CHECK(c.contains(M("x*y^3*z")));
  CHECK_FALSE(c.contains(M("x^2*y")));
  CHECK(pommaret_cone(M("x^3")).multipliers == std::vector<std::size_t>{0, 1, 2});
  CHECK(pommaret_cone(M("z")).multipliers == std::vector<std::size_t>{2});
  CHECK(in_pommaret_cone(M("1"), M("x*y")));
}

TEST_CASE("degree bound") {
  auto amb = xy_ambient();
  auto J = MonomialIdeal::from_generators(2, {M("x^4", amb), M("y^4", amb)});
  CHECK(pommaret_degree_bound(J) == 7);
  auto P = pommaret_basis(J);
  CHECK(P.max_degree() == 7);
  CHECK(verify_cone_partition(P, 10));
}

TEST_CASE("quasi-stability") {
  auto amb = xy_ambient();
  CHECK_FALSE(is_quasi_stable(MonomialIdeal::from_generators(2, {M("y", amb)})));
  CHECK(is_quasi_stable(MonomialIdeal::from_generators(2, {M("x", amb)})));
  CHECK(error_of([&] { pommaret_basis(MonomialIdeal::from_generators(2, {M("x", amb)})); }) ==
        ErrorCode::InfiniteColength);
  CHECK_FALSE(standard_monomials(MonomialIdeal::from_generators(2, {M("x", amb)})).has_value());
}

TEST_CASE("cones partition J on random order ideals") {
  Rng rng(17);
  for (int i = 0; i < 60; ++i) {
    auto N = random_order_ideal(3, 1 + rng.uniform(0, 14), rng);
    auto J = complement_ideal(N);
    auto P = pommaret_basis(J);
    CHECK(standard_monomials(J) == N);
    CHECK(verify_cone_partition(P, P.max_degree() + 2));
    for (unsigned d = 0; d <= P.max_degree() + 2; ++d) {
      std::size_t inJ = 0;
      for (const auto& m : monomials_of_degree(3, d)) inJ += J.contains(m);
      CHECK(count_via_cones(P, d) == inJ);
    }
  }
}

TEST_CASE("order ideal enumeration counts") {
  const std::size_t want[] = {1, 3, 6, 13, 24, 48, 86, 160};
  for (std::size_t d = 1; d <= 8; ++d) {
    auto all = enumerate_order_ideals(3, d);
    CHECK(all.size() == want[d - 1]);
    for (const auto& N : all) CHECK(N.size() == d);
  }
  CHECK(enumerate_order_ideals(2, 4).size() == 5);
}

}
