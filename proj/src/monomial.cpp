#include "hilb/monomial.hpp"

#include <cctype>
#include <set>

namespace hilb {

AmbientPtr make_ambient(std::vector<std::string> names) {
  if (names.size() > kMaxVariables) fail(ErrorCode::InvalidArgument, "at most 8 variables are supported");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty() || !std::isalpha(static_cast<unsigned char>(n[0])))
      fail(ErrorCode::InvalidArgument, "invalid variable name '" + n + "'");
    if (!seen.insert(n).second) fail(ErrorCode::InvalidArgument, "duplicate variable name '" + n + "'");
  }
  return std::make_shared<const Ambient>(Ambient{std::move(names)});
}

std::string monomial_to_string(const Monomial& m, const Ambient& amb) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i]) continue;
    if (!out.empty()) out += "*";
    out += amb.names[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

Monomial parse_monomial(const std::string& text, const Ambient& amb) {
  Monomial m(amb.size());
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i < text.size() && text[i] == '1') {
    ++i;
    skip();
    if (i != text.size()) fail(ErrorCode::Parse, "malformed monomial '" + text + "'");
    return m;
  }
  while (true) {
    skip();
    std::size_t start = i;
    while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
    std::string name = text.substr(start, i - start);
    int v = amb.index_of(name);
    if (v < 0) fail(ErrorCode::Parse, "unknown variable '" + name + "' in monomial '" + text + "'");
    unsigned e = 1;
    skip();
    if (i < text.size() && text[i] == '^') {
      ++i;
      skip();
      std::size_t s = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (s == i) fail(ErrorCode::Parse, "missing exponent in monomial '" + text + "'");
      e = static_cast<unsigned>(std::stoul(text.substr(s, i - s)));
    }
    m[static_cast<std::size_t>(v)] = static_cast<Monomial::Exponent>(m[static_cast<std::size_t>(v)] + e);
    skip();
    if (i == text.size()) break;
    if (text[i] != '*') fail(ErrorCode::Parse, "malformed monomial '" + text + "'");
    ++i;
  }
  return m;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  Monomial m(nvars);
  // enumerate compositions of d into nvars parts
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == nvars) {
      m[i] = static_cast<Monomial::Exponent>(left);
      out.push_back(m);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      m[i] = static_cast<Monomial::Exponent>(e);
      rec(i + 1, left - e);
    }
  };
  rec(0, d);
  std::sort(out.begin(), out.end(), DegRevLexGreater{});
  return out;
}

}  // namespace hilb
