#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ricci {

using Array2d = Eigen::ArrayXXd;
using Array1d = Eigen::ArrayXd;

// Coordinates in the backend's natural chart: (x, y) on periodic grids,
// (radius, angle-ignored) on radial grids, nominal normal coordinates on
// homothety backends.
struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline double radius_of(const Point& p) { return std::hypot(p.x, p.y); }

enum class ErrorKind {
  InvalidState,     // non-finite or inconsistent metric data
  GridMismatch,     // field does not live on the state's grid
  Domain,           // point/radius/width outside the admissible range
  Stability,        // explicit-step stability bound violated
  SingularTime,     // curvature ceiling hit / extinction reached
  Solve,            // iterative solve failed (shooting, kernel, ...)
  Config,           // scenario config schema violation
  InsufficientRange,// verifier window shorter than required
  InconsistentSup,  // recorded sup does not dominate the samples
  MissingManifest,  // run directory has no manifest
  Unsupported,      // operation not defined for this backend
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

// Deterministic uniform draws. std::uniform_real_distribution is not
// bit-stable across standard libraries, so scenarios draw through these.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : s_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next_u64() {
    // xorshift* — fixed algorithm, identical stream on every platform.
    s_ ^= s_ >> 12;
    s_ ^= s_ << 25;
    s_ ^= s_ >> 27;
    return s_ * 0x2545f4914f6cdd1dull;
  }

  double uniform() {  // in [0, 1)
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t s_;
};

constexpr double kPi = 3.14159265358979323846;

}  // namespace ricci
