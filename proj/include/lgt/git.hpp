#ifndef LGT_GIT_HPP
#define LGT_GIT_HPP

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "lgt/param.hpp"
#include "lgt/polytope.hpp"

namespace lgt {

struct TorusAction {
  size_t rank = 0;
  std::vector<IVec> weights;  // per ambient coordinate, a linear form in the 1PS parameters
  std::vector<std::string> parameter_names;  // defaults to a, b, c

  TorusAction() = default;
  TorusAction(size_t r, std::vector<IVec> w, std::vector<std::string> names = {});
  bool normalized() const;  // weight forms sum to zero
  Rational weight(size_t coord, const QVec& lambda) const;
  std::string form_string(const QVec& form) const;  // "-2a + b"
};

TorusAction weights_from_lattice(const std::vector<IVec>& points, size_t r);

struct CyclePoint {
  std::vector<ParamScalar> coordinates;
  Rational multiplicity = 1;
  std::string label;
  std::vector<size_t> support() const;
};

struct WeightedCycle {
  std::vector<CyclePoint> points;
};

// Support vectors only; convenient for table fixtures.
CyclePoint support_point(size_t ambient, const std::vector<size_t>& support, Rational multiplicity = 1,
                         std::string label = "");

struct LimitWeight {
  std::vector<size_t> support;
  Rational weight;
};

LimitWeight limit_and_weight(const CyclePoint& p, const QVec& lambda, const TorusAction& action);
Rational chow_weight(const WeightedCycle& cycle, const QVec& lambda, const TorusAction& action);
// The linear form that agrees with the Chow weight near lambda's cone.
QVec chow_form(const WeightedCycle& cycle, const QVec& lambda, const TorusAction& action);
QVec to_qvec(const IVec& v);

// Semistable: weight nowhere positive, but some zero-weight 1PS has a limit outside the orbit.
enum class Verdict { Stable, Polystable, Semistable, Unstable };
std::string to_string(Verdict v);

struct Chamber {
  int dim = 0;
  std::vector<int> signs;   // per hyperplane of the scan
  std::vector<IVec> generators;
  IVec sample;              // integral interior point
  std::vector<std::vector<size_t>> limit;  // per cycle point
  QVec chow_form;
  int sign = 0;  // -1: negative on the closure minus 0; 0: nonpositive with zeros; 1: positive somewhere
};

struct ChamberScan {
  std::vector<IVec> hyperplanes;  // normals n with n.lambda = 0
  std::vector<Chamber> chambers;  // all faces of the arrangement, sorted by (dim, signs)
  Verdict verdict = Verdict::Unstable;
  IVec witness;  // a 1PS with positive weight, or a zero-weight 1PS with a limit outside the orbit
  std::string reason;
  std::vector<Chamber> maximal() const;
  const Chamber* locate(const QVec& lambda) const;
};

ChamberScan chamber_scan(const WeightedCycle& cycle, const TorusAction& action);
std::string inequality_string(const ChamberScan& scan, const Chamber& c, const TorusAction& action);

// Lines in P^{n-1} through two points; 2x2 minors ordered lexicographically (01, 02, 03, 12, ...).
WeightedCycle pluecker_cycle(const std::vector<std::pair<QVec, QVec>>& lines);
TorusAction pluecker_action(const TorusAction& action);

// Moment map of the Fubini-Study metric on P^2 for the torus acting by
// [lambda z0 : nu/lambda z1 : z2/nu].
std::array<double, 2> moment_balance(const std::vector<std::array<std::complex<double>, 3>>& points, double lambda,
                                     double nu);
// Bisection in log(lambda) along nu = lambda^2 for the zero of the first component.
double balance_solve(const std::vector<std::array<std::complex<double>, 3>>& points);
// The P^2 mirror cycle at parameter a0, in global-quotient coordinates.
std::vector<std::array<std::complex<double>, 3>> p2_quotient_points(double a0);

}  // namespace lgt

#endif
