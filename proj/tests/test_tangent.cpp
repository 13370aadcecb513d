#include "test_util.hpp"

using namespace hilb;
using namespace testutil;

namespace {

std::vector<MarkedSet<RationalField>> sample_bases(std::uint64_t seed, int count, std::size_t max_d = 8) {
  Rng rng(seed);
  std::vector<MarkedSet<RationalField>> out;
  for (int i = 0; i < count; ++i)
    out.push_back(random_marked_basis(Q, random_order_ideal(3, 1 + rng.uniform(0, max_d - 1), rng), rng));
  return out;
}

std::vector<mpq_class> random_vector(Rng& rng, std::size_t n) {
  std::vector<mpq_class> v(n);
  for (auto& c : v) c = rng.rational(4, 3);
  return v;
}

}  // namespace

TEST_SUITE("tangent") {

TEST_CASE("a point has a three-dimensional tangent space") {
  auto F = marked_basis_from_generators(std::vector{P("x - 1"), P("y"), P("z + 3")});
  auto rep = tangent_dimension(F);
  CHECK(rep.d == 1);
  CHECK(rep.unknowns == 3);
  CHECK(rep.dim == 3);
  CHECK(rep.parity_holds);
  CHECK(rep.rank_method == "exact-rational");
}

TEST_CASE("both routes build the same system") {
  for (const auto& F : sample_bases(31, 25)) {
    auto A = build_tangent_system(F, TangentRoute::Superposition);
    auto B = build_tangent_system(F, TangentRoute::Linearized);
    CHECK(A.unknowns() == B.unknowns());
    CHECK(A.matrix.dense(Q) == B.matrix.dense(Q));
  }
}

TEST_CASE("Bareiss rank agrees with the modular consensus") {
  for (const auto& F : sample_bases(32, 25)) {
    auto exact = tangent_dimension(F);
    TangentOptions opts;
    opts.exact_threshold = 0;
    auto modular = tangent_dimension(F, opts);
    CHECK(exact.rank_method == "exact-rational");
    CHECK(modular.rank_method == "modular-consensus");
    CHECK(modular.primes.size() >= 3);
    CHECK(exact.dim == modular.dim);
    auto S = build_tangent_system(F);
    CHECK(rank_bareiss(S.matrix) == rank_generic(Q, S.matrix));
  }
}

TEST_CASE("prime field ranks are exact") {
  Rng rng(33);
  PrimeField F101(101);
  for (int i = 0; i < 10; ++i) {
    auto F = random_marked_basis(F101, random_order_ideal(3, 1 + rng.uniform(0, 7), rng), rng);
    auto rep = tangent_dimension(F);
    CHECK(rep.rank_method == "exact-modular");
    CHECK(rep.characteristic == 101);
    auto S = build_tangent_system(F);
    CHECK(rep.rank == rank_generic(F101, S.matrix));
  }
}

TEST_CASE("consensus acceptance rule") {
  Rng rng(34);
  auto agree = consensus_rank([](std::uint64_t) { return std::optional<std::size_t>(7); }, rng);
  CHECK(agree.rank == 7);
  CHECK(agree.primes.size() == 3);
  for (auto p : agree.primes) {
    CHECK(p >= kConsensusPrimeLo);
    CHECK(p < kConsensusPrimeHi);
    CHECK(is_prime_u64(p));
  }
  int calls = 0;
  auto one_bad = consensus_rank(
      [&](std::uint64_t) { return std::optional<std::size_t>(calls++ == 0 ? 4 : 5); }, rng);
  CHECK(one_bad.rank == 5);
  int seen = 0;
  auto skip = consensus_rank(
      [&](std::uint64_t) { return seen++ % 2 ? std::optional<std::size_t>(2) : std::nullopt; }, rng);
  CHECK(skip.rank == 2);
  CHECK(error_of([&] {
          consensus_rank([](std::uint64_t p) { return std::optional<std::size_t>(p % 1000003); }, rng);
        }) == ErrorCode::ModularDisagreement);
  auto fixed = consensus_rank([](std::uint64_t) { return std::optional<std::size_t>(1); }, rng,
                              {16777259, 16777289, 16777291});
  CHECK(fixed.primes == std::vector<std::uint64_t>{16777259, 16777289, 16777291});
}

TEST_CASE("kernel vectors are flat first-order deformations") {
  for (const auto& F : sample_bases(35, 10, 6)) {
    auto K = tangent_basis(F);
    CHECK(K.size() == tangent_dimension(F).dim);
    auto S = build_tangent_system(F);
    for (const auto& v : K) {
      CHECK(in_kernel(S, Q, v));
      auto Ft = first_order_deformation(F, v);
      CHECK(is_marked_basis(Ft).is_basis);
      CHECK(eps_vector(Ft) == v);
    }
    if (!K.empty()) {
      std::vector<MarkedSet<DualNumbers<RationalField>>> V;
      for (const auto& v : K) V.push_back(first_order_deformation(F, v));
      CHECK(tangent_vectors_rank(V) == K.size());
    }
  }
}

TEST_CASE("a vector outside the kernel is not flat") {
  Rng rng(36);
  int tried = 0;
  for (const auto& F : sample_bases(36, 10, 6)) {
    auto S = build_tangent_system(F);
    auto v = random_vector(rng, S.unknowns());
    if (in_kernel(S, Q, v)) continue;
    ++tried;
    CHECK_FALSE(is_marked_basis(first_order_deformation(F, v)).is_basis);
  }
  CHECK(tried > 0);
}

TEST_CASE("the flatness conditions are linear in the eps-part") {
  Rng rng(37);
  for (const auto& F : sample_bases(37, 8, 6)) {
    auto K = tangent_basis(F);
    if (K.size() < 2) continue;
    auto a = rng.rational(5, 2), b = rng.rational(5, 2);
    std::vector<mpq_class> v(K[0].size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a * K[0][i] + b * K[K.size() - 1][i];
    CHECK(is_marked_basis(first_order_deformation(F, v)).is_basis);
  }
}

TEST_CASE("tangent vectors must share a flat base") {
  auto F = marked_basis_from_generators(std::vector{P("x"), P("y"), P("z")});
  auto G = marked_basis_from_generators(std::vector{P("x - 1"), P("y"), P("z")});
  std::vector<mpq_class> e{1, 0, 0};
  std::vector V{first_order_deformation(F, e), first_order_deformation(G, e)};
  CHECK(error_of([&] { tangent_vectors_rank(V); }) == ErrorCode::BaseMismatch);

  auto amb = xy_ambient();
  auto H = MarkedSet<RationalField>::from_polynomials(Q, amb, order_ideal({"1", "x"}, amb),
                                                      {P("x^2", amb), P("x*y", amb), P("y", amb)});
  auto S = build_tangent_system(H);
  std::vector<mpq_class> w(S.unknowns());
  w[S.unknown(2, 1)] = 1;  // y + eps*x
  REQUIRE_FALSE(in_kernel(S, Q, w));
  std::vector W{first_order_deformation(H, w)};
  CHECK(error_of([&] { tangent_vectors_rank(W); }) == ErrorCode::NotFlat);
  CHECK(error_of([&] { tangent_dimension(MarkedSet<RationalField>::from_polynomials(
                           Q, amb, order_ideal({"1", "x"}, amb), {P("x^2 - 1", amb), P("x*y", amb), P("y - x", amb)})); }) ==
        ErrorCode::NotABasis);
}

}
