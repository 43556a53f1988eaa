#ifndef LGT_RATIONAL_HPP
#define LGT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace lgt {

using Rational = mpq_class;
using QVec = std::vector<Rational>;

// Accepts "p", "-p", "p/q". Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view s);

std::string to_string(const Rational& q);
std::string to_string(const QVec& v);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace lgt

#endif
