#include "hilb/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace hilb {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Parse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json load_json(const std::string& path) {
  try {
    return nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parse, path + ": " + e.what());
  }
}

namespace {

mpq_class json_rational(const nlohmann::json& v, const std::string& what) {
  if (v.is_number_integer()) return mpq_class(v.get<long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  fail(ErrorCode::Parse, what + " must be an integer or a rational string");
}

std::vector<std::string> string_list(const nlohmann::json& v, const std::string& what) {
  if (!v.is_array()) fail(ErrorCode::Parse, what + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string()) fail(ErrorCode::Parse, what + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

}  // namespace

IdealSpec ideal_spec_from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail(ErrorCode::Parse, "an ideal spec must be a JSON object");
  for (const auto& [k, v] : j.items())
    if (k != "name" && k != "variables" && k != "characteristic" && k != "generators" && k != "order_ideal" &&
        k != "params")
      fail(ErrorCode::Parse, "unknown key '" + k + "' in ideal spec");
  IdealSpec s;
  if (j.contains("name")) {
    if (!j["name"].is_string()) fail(ErrorCode::Parse, "name must be a string");
    s.name = j["name"].get<std::string>();
  }
  s.variables = j.contains("variables") ? string_list(j["variables"], "variables")
                                        : std::vector<std::string>{"x", "y", "z"};
  if (j.contains("characteristic")) {
    if (!j["characteristic"].is_number_unsigned()) fail(ErrorCode::Parse, "characteristic must be 0 or a prime");
    s.characteristic = j["characteristic"].get<std::uint64_t>();
  }
  if (!j.contains("generators")) fail(ErrorCode::Parse, "missing 'generators'");
  s.generators = string_list(j["generators"], "generators");
  if (j.contains("params")) {
    if (!j["params"].is_object()) fail(ErrorCode::Parse, "params must be an object");
    for (const auto& [k, v] : j["params"].items()) s.params.emplace(k, json_rational(v, "param '" + k + "'"));
  }
  // validate eagerly so parse failures surface before any computation
  AmbientPtr amb;
  try {
    amb = make_ambient(s.variables);
  } catch (const Error& e) {
    fail(ErrorCode::Parse, e.what());
  }
  if (j.contains("order_ideal")) {
    std::vector<std::string> ms;
    for (const auto& m : order_ideal_monomials(j["order_ideal"], *amb)) ms.push_back(monomial_to_string(m, *amb));
    s.order_ideal = std::move(ms);
  }
  if (s.characteristic != 0) {
    try {
      PrimeField check(s.characteristic);
      (void)check;
    } catch (const Error& e) {
      fail(ErrorCode::Parse, e.what());
    }
  }
  return s;
}

IdealSpec load_ideal_spec(const std::string& path) { return ideal_spec_from_json(load_json(path)); }

nlohmann::json ideal_spec_to_json(const IdealSpec& s) {
  nlohmann::json j;
  if (!s.name.empty()) j["name"] = s.name;
  j["variables"] = s.variables;
  j["characteristic"] = s.characteristic;
  j["generators"] = s.generators;
  if (s.order_ideal) j["order_ideal"] = *s.order_ideal;
  if (!s.params.empty()) {
    nlohmann::json p = nlohmann::json::object();
    for (const auto& [k, v] : s.params) p[k] = v.get_str();
    j["params"] = p;
  }
  return j;
}

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = digits[h & 15];
  return out;
}

std::vector<Monomial> order_ideal_monomials(const nlohmann::json& v, const Ambient& amb) {
  if (!v.is_array()) fail(ErrorCode::Parse, "order_ideal must be an array");
  std::vector<Monomial> out;
  for (const auto& e : v) {
    if (e.is_string()) {
      out.push_back(parse_monomial(e.get<std::string>(), amb));
      continue;
    }
    if (!e.is_array() || e.size() != amb.size())
      fail(ErrorCode::Parse, "order_ideal entries must be monomial strings or exponent vectors of length " +
                                 std::to_string(amb.size()));
    Monomial m(amb.size());
    for (std::size_t i = 0; i < amb.size(); ++i) {
      if (!e[i].is_number_integer() || e[i].get<std::int64_t>() < 0 || e[i].get<std::int64_t>() > 0xffff)
        fail(ErrorCode::Parse, "exponents must be small nonnegative integers");
      m[i] = static_cast<Monomial::Exponent>(e[i].get<std::int64_t>());
    }
    out.push_back(m);
  }
  return out;
}

nlohmann::json order_ideal_to_json(const OrderIdeal& N) {
  auto ms = N.monomials();
  std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : a.to_vector() > b.to_vector();
  });
  nlohmann::json out = nlohmann::json::array();
  for (const auto& m : ms) out.push_back(m.to_vector());
  return out;
}

OrderIdeal parse_order_ideal(const std::vector<std::string>& monomials, const Ambient& amb) {
  std::vector<Monomial> m;
  for (const auto& s : monomials) m.push_back(parse_monomial(s, amb));
  return OrderIdeal::make(amb.size(), std::move(m));
}

std::string parity_word(bool holds) { return holds ? "holds" : "fails"; }

nlohmann::json tangent_report_json(const TangentReport& r) {
  nlohmann::json j;
  j["d"] = r.d;
  j["dim"] = r.dim;
  j["parity"] = parity_word(r.parity_holds);
  j["unknowns"] = r.unknowns;
  j["equations"] = r.equations;
  j["rank"] = r.rank;
  j["characteristic"] = r.characteristic;
  j["rank_method"] = r.rank_method;
  if (!r.primes.empty()) j["primes"] = r.primes;
  return j;
}

std::string tangent_report_csv(std::uint64_t seed, const TangentReport& r) {
  return std::to_string(seed) + "," + std::to_string(r.d) + "," + std::to_string(r.dim) + "," +
         parity_word(r.parity_holds);
}

}  // namespace hilb
