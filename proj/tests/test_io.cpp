#include "hilb/io.hpp"
#include "hilb/presentation.hpp"
#include "hilb/reproduce.hpp"
#include "hilb/scan.hpp"
#include "test_util.hpp"

using namespace hilb;
using namespace testutil;
using nlohmann::json;

TEST_SUITE("io") {

TEST_CASE("fnv1a digests") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
  CHECK(fnv1a_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("ideal specs parse and round-trip") {
  auto j = json::parse(R"({"name": "n", "variables": ["x", "y"], "characteristic": 7,
                           "generators": ["x^2", "y - a*x"], "params": {"a": "1/2"}})");
  auto s = ideal_spec_from_json(j);
  CHECK(s.name == "n");
  CHECK(s.characteristic == 7);
  CHECK(s.params.at("a") == mpq_class(1, 2));
  auto back = ideal_spec_from_json(ideal_spec_to_json(s));
  CHECK(back.generators == s.generators);
  CHECK(back.params == s.params);
  PrimeField F7(7);
  auto gens = spec_generators(s, F7);
  CHECK(to_string(gens[1]) == "3*x + y");
  auto d = ideal_spec_from_json(json::parse(R"({"generators": ["x", "y", "z"]})"));
  CHECK(d.variables == std::vector<std::string>{"x", "y", "z"});
  CHECK(d.characteristic == 0);
}

TEST_CASE("order ideals as exponent vectors") {
  auto amb = xyz_ambient();
  auto N = parse_order_ideal({"1", "x", "y", "z", "y^2", "y*z"}, *amb);
  auto j = order_ideal_to_json(N);
  CHECK(j.dump() == "[[0,0,0],[1,0,0],[0,1,0],[0,0,1],[0,2,0],[0,1,1]]");
  CHECK(OrderIdeal::make(3, order_ideal_monomials(j, *amb)).monomials() == N.monomials());
  auto mixed = json::parse(R"(["1", [1,0,0], "y"])");
  CHECK(order_ideal_monomials(mixed, *amb).size() == 3);
  CHECK(error_of([&] { order_ideal_monomials(json::parse("[[1,0]]"), *amb); }) == ErrorCode::Parse);
  CHECK(error_of([&] { order_ideal_monomials(json::parse("[[1,-1,0]]"), *amb); }) == ErrorCode::Parse);
  CHECK(error_of([&] { order_ideal_monomials(json::parse(R"({"a": 1})"), *amb); }) == ErrorCode::Parse);

  auto spec = ideal_spec_from_json(json::parse(R"({"variables": ["x", "y"], "generators": ["x^2", "y"],
                                                   "order_ideal": [[0,0],[1,0]]})"));
  REQUIRE(spec.order_ideal);
  CHECK(*spec.order_ideal == std::vector<std::string>{"1", "x"});
}

TEST_CASE("marked sets round-trip through JSON") {
  RationalField Q;
  auto amb = xyz_ambient();
  auto F = marked_basis_from_generators(std::vector{P("x - 1", amb), P("y", amb), P("z", amb)});
  auto j = marked_set_to_json(F);
  CHECK(j["order_ideal"].dump() == "[[0,0,0]]");
  CHECK(j["tails"]["x"] == "-1");
  auto G = marked_set_from_json(j, Q);
  REQUIRE(G.size() == F.size());
  for (std::size_t a = 0; a < F.size(); ++a) CHECK(to_string(G.polynomial(a)) == to_string(F.polynomial(a)));
  CHECK(is_marked_basis(G).is_basis);

  auto bad = j;
  bad["tails"]["x"] = "x";
  CHECK(error_of([&] { marked_set_from_json(bad, Q); }) == ErrorCode::TailOutsideN);
  bad = j;
  bad.erase("tails");
  CHECK(error_of([&] { marked_set_from_json(bad, Q); }) == ErrorCode::Parse);
  bad = j;
  bad["tails"]["x"] = "1 +";
  CHECK(error_of([&] { marked_set_from_json(bad, Q); }) == ErrorCode::Parse);
}

TEST_CASE("ideal spec errors") {
  auto parse_err = [](const char* text) {
    return error_of([&] { ideal_spec_from_json(json::parse(text)); });
  };
  CHECK(parse_err(R"([1, 2])") == ErrorCode::Parse);
  CHECK(parse_err(R"({"generators": "x"})") == ErrorCode::Parse);
  CHECK(parse_err(R"({"generators": ["x"], "bogus": 1})") == ErrorCode::Parse);
  CHECK(parse_err(R"({"generators": ["x"], "characteristic": 6})") == ErrorCode::Parse);
  CHECK(parse_err(R"({"generators": ["x"], "variables": ["x", "x"]})") == ErrorCode::Parse);
  CHECK(parse_err(R"({"generators": ["x"], "params": {"a": "1/0"}})") == ErrorCode::Parse);
  CHECK(error_of([] { load_ideal_spec("/nonexistent/spec.json"); }) == ErrorCode::Parse);
  auto s = ideal_spec_from_json(json::parse(R"({"generators": ["x +* y"]})"));
  CHECK(error_of([&] { spec_generators(s, Q); }) == ErrorCode::Parse);
  CHECK(error_category(ErrorCode::Parse) == ErrorCategory::Parse);
  CHECK(error_category(ErrorCode::NotABasis) == ErrorCategory::Precondition);
  CHECK(error_category(ErrorCode::Internal) == ErrorCategory::Internal);
}

TEST_CASE("fixtures load") {
  auto s = load_ideal_spec(HILB_FIXTURES "/counterexample_b.json");
  auto gens = spec_generators(s, Q);
  auto N = parse_order_ideal(*s.order_ideal, *make_ambient(s.variables));
  CHECK(N == counterexample_order_ideal());
  auto F = marked_basis_from_generators(gens, N);
  CHECK(tangent_dimension(F).dim == 45);
  auto eq = load_ideal_spec(HILB_FIXTURES "/eq12.json");
  CHECK(ideal_equal(spec_generators(eq, Q), baby_example_generators(Q)));
  CHECK(error_of([] { parse_order_ideal({"1", "x^2"}, *xyz_ambient()); }) == ErrorCode::InvalidOrderIdeal);
}

TEST_CASE("report serialization") {
  TangentReport r;
  r.d = 12;
  r.dim = 45;
  r.unknowns = 96;
  r.rank = 51;
  r.equations = 96;
  r.parity_holds = false;
  r.rank_method = "exact-rational";
  auto j = tangent_report_json(r);
  CHECK(j["d"] == 12);
  CHECK(j["dim"] == 45);
  CHECK(j["parity"] == "fails");
  CHECK(j["rank_method"] == "exact-rational");
  CHECK(tangent_report_csv(9, r) == "9,12,45,fails");
  CHECK(parity_word(true) == "holds");
}

TEST_CASE("scans are deterministic across job counts") {
  ScanOptions a;
  a.seed = 77;
  a.count = 12;
  auto b = a;
  b.jobs = 3;
  std::vector<OrderIdeal> ideals{order_ideal({"1", "x", "y", "z"}), order_ideal({"1", "z", "z^2", "y", "y*z"})};
  auto r1 = scan_order_ideals(ideals, a), r3 = scan_order_ideals(ideals, b);
  REQUIRE(r1.items.size() == 12);
  for (std::size_t i = 0; i < 12; ++i) {
    CHECK(r1.items[i].seed == r3.items[i].seed);
    CHECK(r1.items[i].dim == r3.items[i].dim);
    CHECK(r1.items[i].label == r3.items[i].label);
    CHECK(r1.items[i].ok());
  }
  CHECK(r1.violations == 0);
  auto l1 = scan_lambda(a), l3 = scan_lambda(b);
  for (std::size_t i = 0; i < 12; ++i) {
    CHECK(l1.items[i].label == l3.items[i].label);
    CHECK(l1.items[i].dim == l3.items[i].dim);
  }
  CHECK(l1.mismatches == 0);
  CHECK(l1.errors == 0);
  CHECK(error_of([&] { scan_order_ideals({}, a); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("parallel items capture per-item errors") {
  auto items = parallel_items(5, 2, [](std::size_t i) {
    if (i == 3) fail(ErrorCode::NotABasis, "boom");
    ScanItem it;
    it.dim = i;
    return it;
  });
  CHECK(items[3].error.find("boom") != std::string::npos);
  CHECK(items[4].dim == 4);
  CHECK(items[4].index == 4);
}

TEST_CASE("reproduce targets") {
  CHECK(reproduce_targets().front() == "all");
  CHECK(error_of([] { reproduce("nope"); }) == ErrorCode::InvalidArgument);
  auto checks = reproduce("char2");
  REQUIRE_FALSE(checks.empty());
  for (const auto& c : checks) CHECK_MESSAGE(c.passed, c.name);
}

}
