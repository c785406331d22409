#include "fgre/quaternion.hpp"

namespace fgre {

Quaternion operator*(const Quaternion& x, const Quaternion& y) {
  return {x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d,
          x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c,
          x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b,
          x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a};
}

std::strong_ordering operator<=>(const Quaternion& x, const Quaternion& y) {
  for (int c : {cmp(x.a, y.a), cmp(x.b, y.b), cmp(x.c, y.c), cmp(x.d, y.d)}) {
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string Quaternion::label() const {
  const auto parts = coords();
  Integer den = 1;
  for (const auto& p : parts) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), p.get_den_mpz_t());
  static const char* const kUnits[] = {"", "i", "j", "k"};
  std::string body;
  int terms = 0;
  for (int u = 0; u < 4; ++u) {
    const Rational scaled = parts[u] * den;
    const Integer n = scaled.get_num();
    if (n == 0) continue;
    ++terms;
    std::string coeff;
    if (u == 0) {
      coeff = n.get_str();
    } else if (n == 1) {
      coeff = "";
    } else if (n == -1) {
      coeff = "-";
    } else {
      coeff = n.get_str();
    }
    if (!body.empty() && n > 0) body += "+";
    body += coeff + kUnits[u];
  }
  if (body.empty()) return "0";
  if (den == 1) return body;
  return (terms > 1 ? "(" + body + ")" : body) + "/" + den.get_str();
}

std::size_t Quaternion::hash() const {
  return ((hash_value(a) * 31 + hash_value(b)) * 31 + hash_value(c)) * 31 + hash_value(d);
}

}  // namespace fgre
