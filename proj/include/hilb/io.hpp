#pragma once

// IdealSpec ingestion and report serialization.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hilb/monomial_ideal.hpp"
#include "hilb/substitution.hpp"
#include "hilb/tangent.hpp"

namespace hilb {

struct IdealSpec {
  std::string name;
  std::vector<std::string> variables;  // listed from largest to smallest
  std::uint64_t characteristic = 0;
  std::vector<std::string> generators;
  std::optional<std::vector<std::string>> order_ideal;
  std::map<std::string, mpq_class> params;  // substituted before use
};

/// Throws Parse on malformed input.
IdealSpec ideal_spec_from_json(const nlohmann::json& j);
IdealSpec load_ideal_spec(const std::string& path);
nlohmann::json ideal_spec_to_json(const IdealSpec& s);

/// Reads a whole file; Parse error if it cannot be opened.
std::string read_file(const std::string& path);
nlohmann::json load_json(const std::string& path);

/// 64-bit FNV-1a as 16 hex digits.
std::string fnv1a_hex(std::string_view data);

OrderIdeal parse_order_ideal(const std::vector<std::string>& monomials, const Ambient& amb);

/// Entries may be monomial strings or exponent vectors. Throws Parse.
std::vector<Monomial> order_ideal_monomials(const nlohmann::json& v, const Ambient& amb);
/// Exponent vectors by increasing degree, e.g. [[0,0,0],[1,0,0],[0,1,0],...].
nlohmann::json order_ideal_to_json(const OrderIdeal& N);

/// {"variables", "order_ideal", "tails": {head: tail}}
template <Field K>
nlohmann::json marked_set_to_json(const MarkedSet<K>& F) {
  nlohmann::json tails = nlohmann::json::object();
  for (std::size_t a = 0; a < F.size(); ++a)
    tails[monomial_to_string(F.head(a), *F.ambient())] = to_string(F.tail(a));
  return {{"variables", F.ambient()->names}, {"order_ideal", order_ideal_to_json(F.order_ideal())}, {"tails", tails}};
}

template <Field K>
MarkedSet<K> marked_set_from_json(const nlohmann::json& j, const K& field) {
  if (!j.is_object() || !j.contains("variables") || !j.contains("order_ideal") || !j.contains("tails") ||
      !j["tails"].is_object())
    fail(ErrorCode::Parse, "a marked set needs variables, order_ideal and tails");
  std::vector<std::string> names;
  for (const auto& v : j["variables"]) {
    if (!v.is_string()) fail(ErrorCode::Parse, "variables must be strings");
    names.push_back(v.template get<std::string>());
  }
  auto amb = make_ambient(names);
  auto N = OrderIdeal::make(amb->size(), order_ideal_monomials(j["order_ideal"], *amb));
  std::vector<std::pair<Monomial, Polynomial<K>>> tails;
  for (const auto& [head, tail] : j["tails"].items()) {
    if (!tail.is_string()) fail(ErrorCode::Parse, "tails must be polynomial strings");
    tails.emplace_back(parse_monomial(head, *amb), parse_polynomial(tail.template get<std::string>(), field, amb));
  }
  return MarkedSet<K>::make(field, amb, std::move(N), std::move(tails));
}

/// Generators over the given field, parameters substituted.
template <Field K>
std::vector<Polynomial<K>> spec_generators(const IdealSpec& s, const K& field) {
  if (s.generators.empty()) fail(ErrorCode::Parse, "the spec lists no generators");
  auto amb = make_ambient(s.variables);
  if (s.params.empty()) {
    std::vector<Polynomial<K>> out;
    for (const auto& g : s.generators) out.push_back(parse_polynomial(g, field, amb));
    return out;
  }
  auto names = s.variables;
  std::vector<std::string> params;
  std::map<std::string, typename K::Element> values;
  for (const auto& [k, v] : s.params) {
    names.push_back(k);
    params.push_back(k);
    values.emplace(k, field.from_rational(v));
  }
  auto wide = make_ambient(names);
  std::vector<Polynomial<K>> out;
  for (const auto& g : s.generators) {
    auto p = specialize(parse_polynomial(g, field, wide), values, params);
    // rebuild on the spec's own ambient so every generator shares one pointer
    out.push_back(Polynomial<K>::from_terms(field, amb, std::vector<typename Polynomial<K>::Term>(p.terms())));
  }
  return out;
}

std::string parity_word(bool holds);
nlohmann::json tangent_report_json(const TangentReport& r);
/// seed,d,dim,parity
std::string tangent_report_csv(std::uint64_t seed, const TangentReport& r);

}  // namespace hilb
