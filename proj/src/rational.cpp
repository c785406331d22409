#include "fgre/rational.hpp"

#include <cctype>

#include "fgre/error.hpp"

namespace fgre {

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t k = start; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  }
  return true;
}

std::string strip_plus(std::string_view s) {
  return std::string(!s.empty() && s[0] == '+' ? s.substr(1) : s);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+') {
    throw Error(ErrorKind::kInvalidInput, "bad rational '" + std::string(text) + "'");
  }
  Integer n(strip_plus(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw Error(ErrorKind::kInvalidInput, "zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& r) { return r.get_str(10); }

std::size_t hash_value(const Rational& r) {
  auto limb_hash = [](const mpz_class& z) {
    std::size_t h = static_cast<std::size_t>(mpz_size(z.get_mpz_t())) * 0x9e3779b97f4a7c15ULL;
    if (mpz_size(z.get_mpz_t()) > 0) h ^= static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), 0));
    return h ^ static_cast<std::size_t>(sgn(z) + 1);
  };
  return limb_hash(r.get_num()) * 31 + limb_hash(r.get_den());
}

}  // namespace fgre
