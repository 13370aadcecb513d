#include "hilb/reproduce.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "hilb/families.hpp"
#include "hilb/scan.hpp"

namespace hilb {

namespace {

using Clock = std::chrono::steady_clock;

class Recorder {
 public:
  Recorder(std::vector<Check>& out, std::string group) : out_(out), group_(std::move(group)), t0_(Clock::now()) {}

  template <class A, class B>
  void expect(const std::string& name, const A& expected, const B& actual) {
    std::ostringstream e, a;
    e << expected;
    a << actual;
    push(name, expected == actual, e.str(), a.str());
  }
  void expect_true(const std::string& name, bool ok) { push(name, ok, "true", ok ? "true" : "false"); }

 private:
  void push(const std::string& name, bool ok, std::string e, std::string a) {
    auto now = Clock::now();
    out_.push_back({group_, name, ok, std::move(e), std::move(a), std::chrono::duration<double>(now - t0_).count()});
    t0_ = now;
  }

  std::vector<Check>& out_;
  std::string group_;
  Clock::time_point t0_;
};

const Params5 kEq12{0, 0, 0, 0, -1};
const Params5 kGeneric{2, -1, 3, 1, mpq_class(1, 2)};
const Params5 kFigure{0, mpq_class(-1, 2), 0, 1, 1};

void run_thmA(std::vector<Check>& out, const ReproduceOptions&) {
  Recorder r(out, "thmA");
  RationalField Q;
  auto gens = baby_example_generators(Q);
  r.expect("oracle colength", std::size_t{12}, oracle_colength(gens).value_or(0));
  auto F = counterexample_marked_basis(Q, kEq12);
  r.expect_true("marked basis", is_marked_basis(F).is_basis);
  r.expect("marked colength", std::size_t{12}, colength(F));
  r.expect_true("ideal matches generators", ideal_equal(F.polynomials(), gens));
  auto rep = tangent_dimension(F);
  r.expect("tangent dimension", std::size_t{45}, rep.dim);
  r.expect("rank method", std::string("exact-rational"), rep.rank_method);
  r.expect("parity", std::string("fails"), std::string(rep.parity_holds ? "holds" : "fails"));
  auto G = counterexample_marked_basis(Q, kGeneric);
  auto rg = tangent_dimension(G);
  r.expect("unknowns (generic b)", std::size_t{96}, rg.unknowns);
  r.expect("nonzero equations (generic b)", std::size_t{98}, rg.equations);
  r.expect("rank (generic b)", std::size_t{51}, rg.rank);
  r.expect_true("45-parameter pattern spans ker S", tangent_pattern_holds(G, kGeneric));
  auto U = marked_basis_from_generators(disjoint_union(gens, {{{1, 0, 0}}}));
  auto ru = tangent_dimension(U);
  r.expect("union with one point: d", std::size_t{13}, ru.d);
  r.expect("union with one point: dim", std::size_t{48}, ru.dim);
}

void run_table(std::vector<Check>& out, const ReproduceOptions& opts) {
  Recorder r(out, "table");
  RationalField Q;
  const std::vector<std::pair<Params5, std::size_t>> samples{
      {{1, 2, 3, 0, 0}, 54}, {{1, 0, 0, 1, 1}, 48}, {kEq12, 45}, {kGeneric, 45}, {kFigure, 45}};
  for (const auto& [b, want] : samples) {
    std::string name = "b=(";
    for (std::size_t k = 0; k < 5; ++k) name += (k ? "," : "") + b[k].get_str();
    r.expect(name + ")", want, tangent_dimension(counterexample_marked_basis(Q, b)).dim);
  }
  ScanOptions so;
  so.seed = opts.seed;
  so.count = 50;
  so.jobs = opts.jobs;
  auto res = scan_lambda(so);
  r.expect("50 seeded b: errors", std::size_t{0}, res.errors);
  r.expect("50 seeded b: stratum mismatches", std::size_t{0}, res.mismatches);
}

void run_char2(std::vector<Check>& out, const ReproduceOptions&) {
  Recorder r(out, "char2");
  PrimeField F2(2);
  auto F = counterexample_marked_basis(F2, kEq12);
  r.expect_true("marked basis over F2", is_marked_basis(F).is_basis);
  r.expect("tangent dimension over F2", std::size_t{46}, tangent_dimension(F).dim);
}

void run_smoothing(std::vector<Check>& out, const ReproduceOptions&) {
  Recorder r(out, "smoothing");
  RationalField Q;
  r.expect("B at (0,-1/2,0,1,1)", mpq_class(-1, 2), discriminant_B(kFigure));
  auto rep = smoothing_components(Q, kFigure, 1);
  std::ostringstream lens;
  lens << rep.lengths[0] << "," << rep.lengths[1] << "," << rep.lengths[2] << "," << rep.lengths[3];
  r.expect("component lengths", std::string("7,2,2,1"), lens.str());
  r.expect_true("components supported at their points",
                rep.supported[0] && rep.supported[1] && rep.supported[2] && rep.supported[3]);
  r.expect_true("pairwise comaximal", rep.pairwise_comaximal);
  r.expect_true("intersection equals the fiber at t = 1", rep.intersection_matches);
  r.expect("fiber colength", std::size_t{12}, rep.fiber_length);
  r.expect_true("flat over k[t]", rep.family_flat);
  auto F = smoothing_family(Q, kFigure);
  r.expect_true("t = 0 is the counterexample",
                ideal_equal(specialize_family(F, 0), counterexample_marked_basis(Q, kFigure).polynomials()));
  r.expect_true("b4 = b5 = 0 family flat over k[t]",
                is_marked_basis(smoothing_family_homogeneous(Q, Params5{1, 2, 3, 0, 0})).is_basis);
}

void run_immersion(std::vector<Check>& out, const ReproduceOptions&) {
  Recorder r(out, "immersion");
  RationalField Q;
  auto V = closed_immersion_vectors(Q, kGeneric);
  bool flat = true;
  for (const auto& v : V) flat = flat && is_marked_basis(v).is_basis;
  r.expect_true("all ten flat", flat);
  r.expect("rank", std::size_t{10}, tangent_vectors_rank(V));
  auto S = build_tangent_system(counterexample_marked_basis(Q, kGeneric));
  std::size_t inside = 0;
  for (const auto& v : V) inside += in_kernel(S, Q, eps_vector(v));
  r.expect("inside ker S", std::size_t{10}, inside);
}

void run_len78(std::vector<Check>& out, const ReproduceOptions& opts) {
  Recorder r(out, "len78");
  RationalField Q;
  auto gens = length78_generators(Q);
  Rng rng(opts.seed);
  auto F = marked_basis_any_coordinates(gens, rng);
  r.expect("colength", std::size_t{78}, F.order_ideal().size());
  TangentOptions to;
  to.seed = opts.seed;
  to.primes = opts.primes;
  auto rep = tangent_dimension(F, to);
  r.expect("tangent dimension", std::size_t{263}, rep.dim);
  r.expect("rank method", std::string("modular-consensus"), rep.rank_method);
  r.expect_true("at least three primes", rep.primes.size() >= 3);
}

void run_monomial(std::vector<Check>& out, const ReproduceOptions& opts) {
  Recorder r(out, "monomial-parity");
  ScanOptions so;
  so.jobs = opts.jobs;
  auto res = scan_monomial(8, so);
  r.expect("ideals enumerated", std::size_t{1 + 3 + 6 + 13 + 24 + 48 + 86 + 160}, res.items.size());
  r.expect("errors", std::size_t{0}, res.errors);
  r.expect("parity violations", std::size_t{0}, res.violations);
}

}  // namespace

const std::vector<std::string>& reproduce_targets() {
  static const std::vector<std::string> t{"all",       "thmA",      "table", "char2",
                                          "smoothing", "immersion", "len78", "monomial-parity"};
  return t;
}

std::vector<Check> reproduce(const std::string& which, const ReproduceOptions& opts) {
  using Fn = void (*)(std::vector<Check>&, const ReproduceOptions&);
  const std::vector<std::pair<std::string, Fn>> runs{
      {"thmA", run_thmA},           {"table", run_table}, {"char2", run_char2},
      {"smoothing", run_smoothing}, {"immersion", run_immersion}, {"len78", run_len78},
      {"monomial-parity", run_monomial}};
  std::vector<Check> out;
  bool found = false;
  for (const auto& [name, fn] : runs)
    if (which == "all" || which == name) {
      found = true;
      fn(out, opts);
    }
  if (!found) fail(ErrorCode::InvalidArgument, "unknown reproduction target '" + which + "'");
  return out;
}

}  // namespace hilb
