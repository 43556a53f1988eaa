#ifndef LGT_PERIODS_HPP
#define LGT_PERIODS_HPP

#include <optional>
#include <vector>

#include "lgt/param.hpp"

namespace lgt {

// c_k = constant_term(f^k) for k = 0..N.
PowerSeries classical_period(const LaurentPoly& f, size_t N);

struct PeriodMatch {
  bool match = true;
  std::optional<size_t> first_mismatch;
  ParamScalar shift_f, shift_g;  // constant terms removed before comparing
};

// Periods are compared after removing the constant term of each potential;
// a constant shift of f only reparametrizes t.
PeriodMatch period_match(const LaurentPoly& f, const LaurentPoly& g, size_t N, bool remove_constants = true);

}  // namespace lgt

#endif
