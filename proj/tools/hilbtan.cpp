// hilbtan: tangent spaces of Hilbert schemes of points via marked bases.

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hilb/families.hpp"
#include "hilb/io.hpp"
#include "hilb/reproduce.hpp"
#include "hilb/scan.hpp"

using namespace hilb;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitInternal = 4;

struct Common {
  std::optional<std::uint64_t> characteristic;
  std::uint64_t seed = 1;
  std::string primes;
  std::string format = "json";
  bool oracle_check = false;
  bool timings = false;
  unsigned jobs = 1;
};

std::vector<std::uint64_t> parse_primes(const std::string& s) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoull(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      fail(ErrorCode::Parse, "--primes expects a comma-separated list of integers");
    }
  }
  return out;
}

template <class Fn>
auto with_field(std::uint64_t characteristic, Fn&& fn) {
  if (characteristic == 0) return fn(RationalField{});
  return fn(PrimeField(characteristic));
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// one "key: value" line per field, nested objects flattened with dots
void emit_text(const json& j, const std::string& prefix = "") {
  for (const auto& [k, v] : j.items()) {
    if (v.is_object()) emit_text(v, prefix + k + ".");
    else std::cout << prefix << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
}

template <Field K>
MarkedSet<K> marked_basis_for(const IdealSpec& s, const std::vector<Polynomial<K>>& gens, std::uint64_t seed) {
  if (s.order_ideal) return marked_basis_from_generators(gens, parse_order_ideal(*s.order_ideal, *gens.front().ambient()));
  Rng rng(seed);
  return marked_basis_any_coordinates(gens, rng);
}

int cmd_tangent(const std::string& path, const std::string& route_name, const Common& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::string text = read_file(path);
  IdealSpec spec;
  try {
    spec = ideal_spec_from_json(json::parse(text));
  } catch (const json::exception& e) {
    fail(ErrorCode::Parse, path + ": " + e.what());
  }
  const std::uint64_t p = c.characteristic.value_or(spec.characteristic);
  TangentOptions opts;
  opts.seed = c.seed;
  opts.primes = parse_primes(c.primes);
  if (route_name == "superposition") opts.route = TangentRoute::Superposition;
  else if (route_name == "linearized") opts.route = TangentRoute::Linearized;

  json out;
  out["command"] = "tangent";
  out["input"] = path;
  out["input_digest"] = fnv1a_hex(text);
  if (!spec.name.empty()) out["name"] = spec.name;
  int code = kExitOk;
  with_field(p, [&](const auto& field) {
    auto gens = spec_generators(spec, field);
    auto F = marked_basis_for(spec, gens, c.seed);
    const double t_basis = seconds_since(t0);
    auto rep = tangent_dimension(F, opts);
    const json rj = tangent_report_json(rep);
    for (auto& [k, v] : rj.items()) out[k] = v;
    if (c.oracle_check) {
      auto oc = oracle_colength(gens);
      const bool same_ideal = ideal_equal(F.polynomials(), gens);
      const bool agrees = oc && *oc == colength(F) && same_ideal;
      out["oracle"] = {{"colength", oc ? json(*oc) : json(nullptr)}, {"same_ideal", same_ideal}, {"agrees", agrees}};
      if (!agrees) code = kExitInternal;
    }
    if (c.timings) out["timings"] = {{"marked_basis_s", t_basis}, {"total_s", seconds_since(t0)}};
    if (c.format == "csv") std::cout << tangent_report_csv(c.seed, rep) << "\n";
    else if (c.format == "text") emit_text(out);
    else emit(out);
  });
  return code;
}

int cmd_reproduce(const std::string& which, const Common& c) {
  ReproduceOptions opts;
  opts.seed = c.seed;
  opts.primes = parse_primes(c.primes);
  opts.jobs = c.jobs;
  auto checks = reproduce(which, opts);
  bool all = true;
  for (const auto& ch : checks) all = all && ch.passed;
  if (c.format == "json") {
    json arr = json::array();
    for (const auto& ch : checks) {
      json j{{"group", ch.group},
             {"name", ch.name},
             {"passed", ch.passed},
             {"expected", ch.expected},
             {"actual", ch.actual}};
      if (c.timings) j["seconds"] = ch.seconds;
      arr.push_back(j);
    }
    emit(json{{"command", "reproduce"}, {"target", which}, {"passed", all}, {"checks", arr}});
  } else if (c.format == "csv") {
    std::cout << "group,name,passed,expected,actual\n";
    for (const auto& ch : checks)
      std::cout << ch.group << "," << ch.name << "," << (ch.passed ? "true" : "false") << "," << ch.expected << ","
                << ch.actual << "\n";
  } else {
    for (const auto& ch : checks) {
      std::cout << (ch.passed ? "PASS " : "FAIL ") << ch.group << ": " << ch.name;
      if (!ch.passed) std::cout << " (expected " << ch.expected << ", got " << ch.actual << ")";
      if (c.timings) std::cout << " [" << ch.seconds << "s]";
      std::cout << "\n";
    }
    std::cout << (all ? "all checks passed" : "some checks FAILED") << "\n";
  }
  return all ? kExitOk : kExitMismatch;
}

json scan_item_json(const ScanItem& it) {
  json j{{"index", it.index}, {"seed", it.seed}, {"label", it.label}};
  if (!it.ok()) {
    j["error"] = it.error;
    return j;
  }
  j["d"] = it.d;
  j["dim"] = it.dim;
  j["parity"] = parity_word(it.parity_holds);
  if (it.expected_dim) j["expected_dim"] = *it.expected_dim;
  return j;
}

int cmd_scan(const std::string& order_ideals, bool lambda, std::size_t monomial, std::size_t count, const Common& c) {
  ScanOptions opts;
  opts.seed = c.seed;
  opts.count = count;
  opts.characteristic = c.characteristic.value_or(0);
  opts.jobs = c.jobs;
  if (opts.characteristic) PrimeField check(opts.characteristic);
  const int sources = !order_ideals.empty() + lambda + (monomial > 0);
  if (sources != 1) fail(ErrorCode::InvalidArgument, "choose exactly one of --order-ideals, --lambda, --monomial");
  ScanResult res;
  if (!order_ideals.empty()) {
    auto j = load_json(order_ideals);
    if (!j.is_object() || !j.contains("order_ideals") || !j["order_ideals"].is_array())
      fail(ErrorCode::Parse, order_ideals + ": expected {\"order_ideals\": [[monomials], ...]}");
    std::vector<OrderIdeal> ideals;
    for (const auto& e : j["order_ideals"]) ideals.push_back(OrderIdeal::make(3, order_ideal_monomials(e, *xyz_ambient())));
    res = scan_order_ideals(ideals, opts);
  } else if (lambda) {
    res = scan_lambda(opts);
  } else {
    res = scan_monomial(monomial, opts);
  }
  for (const auto& it : res.items) {
    if (!it.ok()) std::cerr << "item " << it.index << " (seed " << it.seed << "): " << it.error << "\n";
    if (c.format == "csv") {
      if (it.ok()) std::cout << it.seed << "," << it.d << "," << it.dim << "," << parity_word(it.parity_holds) << "\n";
    } else {
      std::cout << scan_item_json(it).dump() << "\n";
    }
  }
  json summary{{"samples", res.items.size()},
               {"violations", res.violations},
               {"errors", res.errors},
               {"mismatches", res.mismatches}};
  if (c.format == "csv") {
    std::cout << "# samples=" << res.items.size() << " violations=" << res.violations << " errors=" << res.errors
              << " mismatches=" << res.mismatches << "\n";
  } else {
    std::cout << json{{"summary", summary}}.dump() << "\n";
  }
  return res.mismatches ? kExitMismatch : kExitOk;
}

int cmd_oracle(const std::string& op, const std::vector<std::string>& files, const std::string& poly, const Common& c) {
  auto a = load_ideal_spec(files.at(0));
  std::optional<IdealSpec> b;
  if (op == "equal" || op == "intersect") {
    if (files.size() != 2) fail(ErrorCode::InvalidArgument, op + " needs two spec files");
    b = load_ideal_spec(files[1]);
    if (b->variables != a.variables) fail(ErrorCode::AmbientMismatch, "the two specs use different variables");
  }
  const std::uint64_t p = c.characteristic.value_or(a.characteristic);
  json out{{"command", "oracle " + op}, {"input_digest", fnv1a_hex(read_file(files[0]))}};
  with_field(p, [&](const auto& field) {
    auto ga = spec_generators(a, field);
    if (op == "colength") {
      auto n = oracle_colength(ga);
      out["zero_dimensional"] = n.has_value();
      if (n) out["colength"] = *n;
    } else if (op == "member") {
      if (poly.empty()) fail(ErrorCode::InvalidArgument, "member needs --poly");
      out["member"] = membership(parse_polynomial(poly, field, ga.front().ambient()), ga);
    } else if (op == "equal") {
      out["equal"] = ideal_equal(ga, spec_generators(*b, field));
    } else if (op == "intersect") {
      auto gi = intersect(ga, spec_generators(*b, field));
      auto G = buchberger(gi, TermOrder::degrevlex());
      json gens = json::array();
      for (const auto& g : G.generators) gens.push_back(to_string(g));
      out["generators"] = gens;
      auto n = oracle_colength(gi);
      if (n) out["colength"] = *n;
    } else {
      fail(ErrorCode::InvalidArgument, "unknown oracle operation '" + op + "'");
    }
  });
  emit(out);
  return kExitOk;
}

int exit_code_for(const Error& e) {
  switch (e.category()) {
    case ErrorCategory::Parse: return kExitParse;
    case ErrorCategory::Precondition: return kExitPrecondition;
    case ErrorCategory::Internal: return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tangent spaces of Hilbert schemes of points via marked bases"};
  app.require_subcommand(1);
  Common common;
  std::uint64_t characteristic = 0;

  auto add_common = [&](CLI::App* sub, bool with_format) {
    sub->add_option("--char", characteristic, "Field characteristic (0 or a prime)");
    sub->add_option("--seed", common.seed, "Seed for every random choice");
    sub->add_option("--primes", common.primes, "Comma-separated primes for the modular rank");
    if (with_format) sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_flag("--timings", common.timings, "Include timings in the output");
    sub->add_option("--jobs", common.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  };

  std::string spec_path, route = "auto";
  auto* tangent = app.add_subcommand("tangent", "Tangent space dimension of an ideal spec");
  tangent->add_option("spec", spec_path, "IdealSpec JSON file")->required();
  tangent->add_option("--route", route, "Tangent system construction")
      ->check(CLI::IsMember({"auto", "superposition", "linearized"}));
  tangent->add_flag("--oracle-check", common.oracle_check, "Cross-check against the Groebner oracle");
  add_common(tangent, true);

  std::string which;
  auto* repro = app.add_subcommand("reproduce", "Recompute the reference results and compare");
  repro->add_option("which", which, "Target")->required()->check(CLI::IsMember(reproduce_targets()));
  add_common(repro, true);

  std::string order_ideals;
  bool lambda = false;
  std::size_t monomial = 0, count = 100;
  auto* scan = app.add_subcommand("scan", "Parity scan over random or enumerated marked bases");
  scan->add_option("--order-ideals", order_ideals, "JSON file {\"order_ideals\": [[...], ...]}");
  scan->add_flag("--lambda", lambda, "Random members of the colength-12 family");
  scan->add_option("--monomial", monomial, "All monomial ideals up to this colength");
  scan->add_option("--count", count, "Number of samples");
  add_common(scan, true);

  std::string op, poly;
  std::vector<std::string> files;
  auto* oracle = app.add_subcommand("oracle", "Groebner-basis computations");
  oracle->add_option("op", op, "Operation")->required()->check(CLI::IsMember({"colength", "member", "equal", "intersect"}));
  oracle->add_option("specs", files, "IdealSpec JSON file(s)")->required();
  oracle->add_option("--poly", poly, "Polynomial for member");
  add_common(oracle, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitParse;
  }

  if (app.get_subcommand_ptr(app.get_subcommands().front()->get_name())->count("--char"))
    common.characteristic = characteristic;
  try {
    if (*tangent) {
      return cmd_tangent(spec_path, route, common);
    }
    if (*repro) {
      if (!repro->count("--format")) common.format = "text";
      return cmd_reproduce(which, common);
    }
    if (*scan) {
      if (!scan->count("--format")) common.format = "csv";
      return cmd_scan(order_ideals, lambda, monomial, count, common);
    }
    return cmd_oracle(op, files, poly, common);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
