#include "lgt/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace lgt {

Rational parse_rational(std::string_view s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw std::invalid_argument("empty rational");
  if (t[0] == '+') t.erase(0, 1);
  auto slash = t.find('/');
  auto digits_ok = [](const std::string& d, bool allow_sign) {
    size_t i = (allow_sign && !d.empty() && d[0] == '-') ? 1 : 0;
    if (i == d.size()) return false;
    for (; i < d.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(d[i]))) return false;
    return true;
  };
  std::string num = t.substr(0, slash), den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false))
    throw std::invalid_argument("bad rational '" + std::string(s) + "'");
  mpz_class d(den);
  if (d == 0) throw std::invalid_argument("zero denominator");
  Rational q{mpz_class(num), d};
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const QVec& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].get_str();
  }
  return out + ")";
}

}  // namespace lgt
