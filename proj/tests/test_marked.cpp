#include "test_util.hpp"

using namespace hilb;
using namespace testutil;

namespace {

MarkedSet<RationalField> xy_set(const char* fx2, const char* fxy, const char* fy) {
  auto amb = xy_ambient();
  return MarkedSet<RationalField>::from_polynomials(Q, amb, order_ideal({"1", "x"}, amb),
                                                    {P(fx2, amb), P(fxy, amb), P(fy, amb)});
}

}  // namespace

TEST_SUITE("marked") {

TEST_CASE("construction checks heads and tails") {
  auto amb = xy_ambient();
  auto N = order_ideal({"1", "x"}, amb);
  using MS = MarkedSet<RationalField>;
  CHECK(error_of([&] { MS::make(Q, amb, N, {{M("x^2", amb), P("1", amb)}}); }) == ErrorCode::HeadMismatch);
  CHECK(error_of([&] {
          MS::make(Q, amb, N, {{M("x^2", amb), P("1", amb)}, {M("x*y", amb), P("x", amb)}, {M("x^3", amb), P("0", amb)}});
        }) == ErrorCode::HeadMismatch);
  CHECK(error_of([&] {
          MS::make(Q, amb, N, {{M("x^2", amb), P("y", amb)}, {M("x*y", amb), P("x", amb)}, {M("y", amb), P("0", amb)}});
        }) == ErrorCode::TailOutsideN);
  CHECK(error_of([&] { xy_set("x^2 + y", "x*y", "y"); }) == ErrorCode::TailOutsideN);
  CHECK(error_of([&] { xy_set("2*x^2", "x*y", "y"); }) == ErrorCode::TailOutsideN);
  auto F = xy_set("x^2 - 1", "x*y - 2*x", "y - 2");
  CHECK(F.size() == 3);
  CHECK(F.head(2) == M("y", amb));
  CHECK(F.tail(2) == P("-2", amb));
}

TEST_CASE("basis criterion on a small example") {
  auto good = xy_set("x^2 - 1", "x*y - 2*x", "y - 2");
  CHECK(is_marked_basis(good).is_basis);
  CHECK(colength(good) == 2);
  auto bad = xy_set("x^2 - 1", "x*y", "y - x");
  auto v = is_marked_basis(bad);
  CHECK_FALSE(v.is_basis);
  REQUIRE(v.normal_form);
  CHECK(v.normal_form->is_zero() == false);
  CHECK(error_of([&] { quotient_algebra(bad); }) == ErrorCode::NotABasis);
  CHECK(error_of([&] { colength(bad); }) == ErrorCode::NotABasis);
}

TEST_CASE("non-basis witness") {
  auto amb = xy_ambient();
  auto F = MarkedSet<RationalField>::from_polynomials(Q, amb, order_ideal({"1", "x", "y"}, amb),
                                                      {P("x^2", amb), P("x*y + y", amb), P("y^2", amb)});
  auto v = is_marked_basis(F);
  CHECK_FALSE(v.is_basis);
  REQUIRE(v.normal_form);
  CHECK((*v.normal_form == P("y", amb) || *v.normal_form == P("-y", amb)));
  CHECK(reduce(P("x + 3", amb), F) == P("x + 3", amb));
}

TEST_CASE("monomial marked sets are bases") {
  Rng rng(4);
  for (int i = 0; i < 20; ++i) {
    auto N = random_order_ideal(3, 1 + rng.uniform(0, 11), rng);
    auto F = MarkedSet<RationalField>::monomial(Q, xyz_ambient(), N);
    CHECK(is_marked_basis(F).is_basis);
    CHECK(colength(F) == N.size());
  }
}

TEST_CASE("recorded reduction steps reconstruct the normal form") {
  Rng rng(21);
  for (int i = 0; i < 15; ++i) {
    auto N = random_order_ideal(3, 2 + rng.uniform(0, 8), rng);
    auto F = random_marked_basis(Q, N, rng);
    for (int j = 0; j < 5; ++j) {
      auto g = random_poly(Q, xyz_ambient(), rng, 5, 6);
      std::vector<ReductionStep<mpq_class>> steps;
      auto h = reduce(g, F, &steps);
      auto acc = g;
      for (const auto& s : steps) acc = acc - F.polynomial(s.head).mul_term(s.multiplier, s.coeff);
      CHECK(acc == h);
      for (const auto& t : h.terms()) CHECK(N.contains(t.mono));
    }
  }
}

TEST_CASE("normal forms do not depend on the reduction strategy") {
  Rng rng(22);
  for (int i = 0; i < 15; ++i) {
    auto N = random_order_ideal(3, 2 + rng.uniform(0, 8), rng);
    auto F = random_marked_basis(Q, N, rng);
    for (int j = 0; j < 5; ++j) {
      auto g = random_poly(Q, xyz_ambient(), rng, 5, 6);
      auto h = reduce(g, F);
      for (std::uint64_t s = 1; s <= 3; ++s) CHECK(reduce(g, F, nullptr, {true, s}) == h);
    }
    CHECK(is_marked_basis(F, {true, 7}).is_basis);
  }
}

TEST_CASE("ideal members reduce to zero") {
  Rng rng(23);
  for (int i = 0; i < 10; ++i) {
    auto N = random_order_ideal(3, 2 + rng.uniform(0, 8), rng);
    auto F = random_marked_basis(Q, N, rng);
    auto g = random_poly(Q, xyz_ambient(), rng, 3, 4) * F.polynomial(rng.uniform(0, F.size() - 1)) +
             random_poly(Q, xyz_ambient(), rng, 2, 3) * F.polynomial(rng.uniform(0, F.size() - 1));
    CHECK(reduce(g, F).is_zero());
  }
}

TEST_CASE("multiplication matrices commute for a basis") {
  Rng rng(24);
  for (int i = 0; i < 10; ++i) {
    auto N = random_order_ideal(3, 2 + rng.uniform(0, 10), rng);
    auto F = random_marked_basis(Q, N, rng);
    auto A = quotient_algebra(F);
    CHECK(A.mult.size() == 3);
    CHECK(matrices_commute(Q, A));
    MonomialNormalForms<RationalField> nf(Q, A);
    auto m = M("x^2*y*z^3");
    CHECK(nf.of(m) == coordinates(reduce(Polynomial<RationalField>::monomial(Q, xyz_ambient(), m), F), N));
  }
}

TEST_CASE("marked basis from generators of a point") {
  auto F = marked_basis_from_generators(std::vector{P("x - 1"), P("y + 2"), P("z")});
  CHECK(F.order_ideal().size() == 1);
  CHECK(F.tail(0) == P("-1"));
  CHECK(is_marked_basis(F).is_basis);
  CHECK(error_of([] { marked_basis_from_generators(std::vector{P("x"), P("y")}); }) == ErrorCode::NotZeroDimensional);
  CHECK(error_of([] {
          marked_basis_from_generators(std::vector{P("x"), P("y"), P("z^2")}, order_ideal({"1"}));
        }) == ErrorCode::NotComplementary);
}

TEST_CASE("marked basis on a non-standard order ideal") {
  // (x - y^2, y^3, z): the degrevlex standard set is {1, y, y^2}; {1, x, y} also works.
  auto gens = std::vector{P("x - y^2"), P("y^3"), P("z")};
  auto F = marked_basis_from_generators(gens, order_ideal({"1", "y", "x"}));
  CHECK(is_marked_basis(F).is_basis);
  CHECK(ideal_equal(F.polynomials(), gens));
}

}
