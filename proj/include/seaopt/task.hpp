#ifndef SEAOPT_TASK_HPP_
#define SEAOPT_TASK_HPP_

#include <Eigen/Core>
#include <cmath>
#include <optional>
#include <vector>

#include "seaopt/errors.hpp"

namespace seaopt {

/// Cyclic pick-and-place task: the end effector oscillates between two
/// operating points with period `period`, and must stay within a small
/// per-coordinate deviation window around each point for the given resting
/// time (gripping / releasing). Between windows the trajectory is free.
///
/// Placement convention: each resting window is centered at a phase of the
/// cycle, by default phase 0 for the first point and period/2 for the
/// second. The offsets are configurable.
struct TaskSpec {
  double period = 0.0;                  // s
  Eigen::VectorXd point_1, point_2;     // m (1-D or 2-D)
  double rest_time_1 = 0.0;             // s
  double rest_time_2 = 0.0;             // s
  Eigen::VectorXd rest_halfwidth_1;     // m, per coordinate
  Eigen::VectorXd rest_halfwidth_2;     // m, per coordinate
  std::optional<double> window_center_1;  // s, defaults to 0
  std::optional<double> window_center_2;  // s, defaults to period/2
};

/// One normalized resting window: the closed time interval
/// [start, start + duration] taken modulo the period, around `point`.
/// A zero-duration window still pins the trajectory at its center instant.
struct RestWindow {
  double start = 0.0;     // s, in [0, period)
  double duration = 0.0;  // s
  double center = 0.0;    // s, in [0, period)
  Eigen::VectorXd point;
  Eigen::VectorXd halfwidth;

  /// Cyclic membership test (closed interval, small slack for grid hits).
  bool contains(double t, double period, double tol = 1e-12) const {
    double u = std::fmod(t - start, period);
    if (u < 0) u += period;
    return u <= duration + tol || u >= period - tol;
  }
};

struct ValidatedTaskSpec {
  TaskSpec spec;
  std::vector<RestWindow> windows;  // exactly two

  double period() const { return spec.period; }
  int dim() const { return static_cast<int>(spec.point_1.size()); }
};

/// Checks the task invariants and places the resting windows. Throws
/// NonPositivePeriod, OverlappingRestWindows, DegenerateWindow or
/// InvalidParameter. Validation of an already-validated spec is the
/// identity.
ValidatedTaskSpec validate_task(const TaskSpec& spec);
inline ValidatedTaskSpec validate_task(const ValidatedTaskSpec& v) { return v; }

}  // namespace seaopt

#endif  // SEAOPT_TASK_HPP_
