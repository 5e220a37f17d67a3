#include "seaopt/task.hpp"

namespace seaopt {

namespace {

double wrap_phase(double t, double period) {
  double u = std::fmod(t, period);
  if (u < 0) u += period;
  return u;
}

// Shortest cyclic distance between two phases.
double cyclic_distance(double a, double b, double period) {
  double d = std::fabs(wrap_phase(a - b, period));
  return std::min(d, period - d);
}

}  // namespace

ValidatedTaskSpec validate_task(const TaskSpec& spec) {
  if (!(spec.period > 0.0))
    throw NonPositivePeriod("task period must be positive");
  if (spec.point_1.size() == 0 || spec.point_1.size() != spec.point_2.size())
    throw InvalidParameter("operating points must share a nonzero dimension");
  if ((spec.point_1 - spec.point_2).norm() == 0.0)
    throw InvalidParameter("operating points coincide");
  if (spec.rest_time_1 < 0.0 || spec.rest_time_2 < 0.0)
    throw InvalidParameter("resting times must be non-negative");
  if (spec.rest_time_1 + spec.rest_time_2 >= spec.period)
    throw OverlappingRestWindows("resting times leave no motion time");

  const auto check_halfwidth = [&](const Eigen::VectorXd& hw) {
    if (hw.size() != spec.point_1.size())
      throw DegenerateWindow("window half-width dimension mismatch");
    if ((hw.array() <= 0.0).any())
      throw DegenerateWindow("window half-width must be positive");
  };
  check_halfwidth(spec.rest_halfwidth_1);
  check_halfwidth(spec.rest_halfwidth_2);

  const double c1 = wrap_phase(spec.window_center_1.value_or(0.0), spec.period);
  const double c2 =
      wrap_phase(spec.window_center_2.value_or(0.5 * spec.period), spec.period);

  // Centered placement around each phase; starts wrap through zero.
  RestWindow w1{wrap_phase(c1 - 0.5 * spec.rest_time_1, spec.period),
                spec.rest_time_1, c1, spec.point_1, spec.rest_halfwidth_1};
  RestWindow w2{wrap_phase(c2 - 0.5 * spec.rest_time_2, spec.period),
                spec.rest_time_2, c2, spec.point_2, spec.rest_halfwidth_2};

  // Touching boundaries already demand two different points at one instant.
  if (cyclic_distance(c1, c2, spec.period) <=
      0.5 * (spec.rest_time_1 + spec.rest_time_2))
    throw OverlappingRestWindows("resting windows overlap");

  return ValidatedTaskSpec{spec, {w1, w2}};
}

}  // namespace seaopt
