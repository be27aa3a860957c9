#pragma once

#include "ricci/common.hpp"

namespace ricci {

enum class GridKind { Periodic2D, Radial1D, None };

// Sampling layout for one reduced backend. Periodic grids sample the cell
// [0,lx)x[0,ly) at nx*ny nodes (no duplicated seam); radial grids sample
// r_i = i*hr on [0, rmax] including the origin.
struct GridSpec {
  GridKind kind = GridKind::None;
  int nx = 0, ny = 0;
  double lx = 0.0, ly = 0.0;
  int nr = 0;
  double rmax = 0.0;

  static GridSpec periodic(int nx, int ny, double lx, double ly) {
    GridSpec g;
    g.kind = GridKind::Periodic2D;
    g.nx = nx;
    g.ny = ny;
    g.lx = lx;
    g.ly = ly;
    g.validate();
    return g;
  }

  static GridSpec radial(int nr, double rmax) {
    GridSpec g;
    g.kind = GridKind::Radial1D;
    g.nr = nr;
    g.rmax = rmax;
    g.validate();
    return g;
  }

  static GridSpec none() { return GridSpec{}; }

  void validate() const {
    switch (kind) {
      case GridKind::Periodic2D:
        require(nx >= 16 && ny >= 16, ErrorKind::InvalidState,
                "periodic grid resolution must be >= 16");
        require(lx > 0 && ly > 0, ErrorKind::InvalidState,
                "periodic grid extent must be positive");
        break;
      case GridKind::Radial1D:
        require(nr >= 16, ErrorKind::InvalidState,
                "radial grid resolution must be >= 16");
        require(rmax > 0, ErrorKind::InvalidState,
                "radial grid extent must be positive");
        break;
      case GridKind::None:
        break;
    }
  }

  double hx() const { return lx / nx; }
  double hy() const { return ly / ny; }
  double hr() const { return rmax / (nr - 1); }
  double r(int i) const { return i * hr(); }

  // Number of stored samples for fields on this grid.
  Eigen::Index rows() const {
    switch (kind) {
      case GridKind::Periodic2D: return nx;
      case GridKind::Radial1D: return nr;
      case GridKind::None: return 1;
    }
    return 1;
  }
  Eigen::Index cols() const { return kind == GridKind::Periodic2D ? ny : 1; }

  bool same_layout(const GridSpec& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
      case GridKind::Periodic2D:
        return nx == o.nx && ny == o.ny && lx == o.lx && ly == o.ly;
      case GridKind::Radial1D:
        return nr == o.nr && rmax == o.rmax;
      case GridKind::None:
        return true;
    }
    return false;
  }
};

}  // namespace ricci
