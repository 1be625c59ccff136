#pragma once

#include <array>
#include <cmath>

namespace difftransfer {

// Point in task space: planar object pose change (tx, ty in meters,
// rot in radians). Joint-fixture tasks use the same coordinates as the
// fixture base-pose offset from the source instance.
struct TaskVector {
  double tx = 0.0;
  double ty = 0.0;
  double rot = 0.0;

  static constexpr int dim = 3;

  double& operator[](int i) { return i == 0 ? tx : (i == 1 ? ty : rot); }
  double operator[](int i) const { return i == 0 ? tx : (i == 1 ? ty : rot); }

  friend TaskVector operator+(TaskVector a, const TaskVector& b) {
    return {a.tx + b.tx, a.ty + b.ty, a.rot + b.rot};
  }
  friend TaskVector operator-(TaskVector a, const TaskVector& b) {
    return {a.tx - b.tx, a.ty - b.ty, a.rot - b.rot};
  }
  friend TaskVector operator*(double s, const TaskVector& v) {
    return {s * v.tx, s * v.ty, s * v.rot};
  }
  friend bool operator==(const TaskVector& a, const TaskVector& b) {
    return a.tx == b.tx && a.ty == b.ty && a.rot == b.rot;
  }

  bool finite() const {
    return std::isfinite(tx) && std::isfinite(ty) && std::isfinite(rot);
  }
};

// Diagonal weights of the task-space norm: w_t on both translation
// coordinates (per m^2), w_r on the rotation coordinate (per rad^2).
struct TaskWeights {
  double w_t = 1.0;
  double w_r = 1.0;

  double coord_weight(int i) const { return i < 2 ? w_t : w_r; }
};

inline double wnorm_sq(const TaskVector& v, const TaskWeights& w) {
  return w.w_t * (v.tx * v.tx + v.ty * v.ty) + w.w_r * v.rot * v.rot;
}

inline double wnorm(const TaskVector& v, const TaskWeights& w) {
  return std::sqrt(wnorm_sq(v, w));
}

inline double wdist(const TaskVector& a, const TaskVector& b,
                    const TaskWeights& w) {
  return wnorm(a - b, w);
}

}  // namespace difftransfer
