#include "hilb/rings.hpp"

#include <cctype>

namespace hilb {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (1ull << 62) || !is_prime_u64(p))
    fail(ErrorCode::InvalidArgument, "characteristic must be a prime below 2^62, got " + std::to_string(p));
}

PrimeField::Element PrimeField::from_mpz(const mpz_class& z) const {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p_);
  return r.get_ui();
}

PrimeField::Element PrimeField::from_rational(const mpq_class& q) const {
  Element den = from_mpz(q.get_den());
  if (den == 0)
    fail(ErrorCode::NonUnitDivision, "denominator of " + q.get_str() + " vanishes mod " + std::to_string(p_));
  return mul(from_mpz(q.get_num()), inv(den));
}

PrimeField::Element PrimeField::pow(Element a, std::uint64_t e) const { return powmod(a, e, p_); }

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) fail(ErrorCode::NonUnitDivision, "inverse of 0 in " + name());
  // extended Euclid on signed 128-bit to stay exact for p < 2^62
  __int128 t = 0, new_t = 1, r = p_, new_r = a;
  while (new_r != 0) {
    __int128 q = r / new_r;
    auto tmp_t = t - q * new_t;
    t = new_t;
    new_t = tmp_t;
    auto tmp_r = r - q * new_r;
    r = new_r;
    new_r = tmp_r;
  }
  if (t < 0) t += p_;
  return static_cast<Element>(t);
}

mpq_class parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) fail(ErrorCode::Parse, "empty rational literal");
  auto valid_int = [](std::string_view v) {
    std::size_t i = (!v.empty() && (v[0] == '-' || v[0] == '+')) ? 1 : 0;
    if (i == v.size()) return false;
    for (; i < v.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(v[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!den.empty() && den[0] == '+') den.erase(0, 1);
  if (!valid_int(num) || !valid_int(den)) fail(ErrorCode::Parse, "malformed rational '" + std::string(text) + "'");
  mpz_class d(den);
  if (d == 0) fail(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
  mpq_class q(mpz_class(num), d);
  q.canonicalize();
  return q;
}

}  // namespace hilb
