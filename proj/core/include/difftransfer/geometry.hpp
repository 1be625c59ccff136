#pragma once

#include <cmath>

#include "difftransfer/scalar_ops.hpp"

namespace difftransfer::sim {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
  double norm() const { return std::hypot(x, y); }
};

struct Pose2 {
  double x = 0.0;
  double y = 0.0;
  double phi = 0.0;
};

// Signed distance from a point (box-local frame) to the box inflated by
// `inflate`, corners rounded by the inflation. Negative inside. Exact
// Euclidean distance; kinks only on the interior medial axis.
template <class S>
S rounded_box_sdf_local(S px, S py, double half_x, double half_y,
                        double inflate) {
  using scalar_ops::hypot;
  using scalar_ops::max;
  using scalar_ops::min;
  S ax = max(px, -px);
  S ay = max(py, -py);
  S dx = ax - half_x;
  S dy = ay - half_y;
  S ox = max(dx, 0.0);
  S oy = max(dy, 0.0);
  S outside = hypot(ox, oy);
  S inside = min(max(dx, dy), 0.0);
  return outside + inside - inflate;
}

// Same field with the probe given in world frame and the box at pose
// (cx, cy, phi-as-cos/sin).
template <class S>
S rounded_box_sdf_world(S px, S py, S cx, S cy, S cos_phi, S sin_phi,
                        double half_x, double half_y, double inflate) {
  S dx = px - cx;
  S dy = py - cy;
  S lx = cos_phi * dx + sin_phi * dy;
  S ly = cos_phi * dy - sin_phi * dx;
  return rounded_box_sdf_local(lx, ly, half_x, half_y, inflate);
}

}  // namespace difftransfer::sim
