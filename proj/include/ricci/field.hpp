#pragma once

#include "ricci/grid.hpp"

namespace ricci {

// Samples of a scalar function aligned to a grid: (nx, ny) on periodic
// grids, (nr, 1) on radial grids, (1, 1) on gridless backends.
struct ScalarField {
  Array2d values;

  ScalarField() = default;
  explicit ScalarField(Array2d v) : values(std::move(v)) {}

  static ScalarField zeros(const GridSpec& g) {
    return ScalarField(Array2d::Zero(g.rows(), g.cols()));
  }
  static ScalarField constant(const GridSpec& g, double c) {
    return ScalarField(Array2d::Constant(g.rows(), g.cols(), c));
  }

  bool matches(const GridSpec& g) const {
    return values.rows() == g.rows() && values.cols() == g.cols();
  }
  bool finite() const { return values.isFinite().all(); }
  double min() const { return values.minCoeff(); }
  double max() const { return values.maxCoeff(); }
};

// Frame the components of a symmetric 2-tensor refer to.
enum class TensorFrame {
  ConformalCoord,  // coordinate frame of e^{2phi} delta: (xx, xy, yy)
  RadialOrtho,     // orthonormal frame (e_r, e_theta): (rr, tt), rt = 0
  HomothetyG,      // multiple of the metric: coefficient alpha in alpha*g
};

struct SymTensorField {
  TensorFrame frame = TensorFrame::ConformalCoord;
  Array2d a;  // xx / rr / alpha
  Array2d b;  // xy / (unused) / (unused)
  Array2d c;  // yy / tt / (unused)

  static SymTensorField zeros(TensorFrame f, const GridSpec& g) {
    SymTensorField t;
    t.frame = f;
    t.a = Array2d::Zero(g.rows(), g.cols());
    t.b = Array2d::Zero(g.rows(), g.cols());
    t.c = Array2d::Zero(g.rows(), g.cols());
    return t;
  }

  bool finite() const {
    return a.isFinite().all() && b.isFinite().all() && c.isFinite().all();
  }
};

}  // namespace ricci
