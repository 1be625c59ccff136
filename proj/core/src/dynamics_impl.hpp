#pragma once

// Scalar-generic dynamics. Instantiated for double (plain rollout) and
// ad::DiffScalar (gradient rollout); both instantiations execute the
// same arithmetic in the same order, so forward values agree bitwise
// (the core library builds with fp-contract off).

#include "difftransfer/env.hpp"
#include "difftransfer/geometry.hpp"
#include "difftransfer/scalar_ops.hpp"

namespace difftransfer::sim::detail {

using scalar_ops::cos;
using scalar_ops::hypot;
using scalar_ops::max;
using scalar_ops::min;
using scalar_ops::sin;
using scalar_ops::smooth_clamp;
using scalar_ops::softplus;
using scalar_ops::square;
using scalar_ops::tanh;

template <class S>
struct StateT {
  // object base
  S ox, oy, ophi, ovx, ovy, oom;
  // object joint
  S q, qd;
  // robot
  S rx, ry, rvx, rvy;
};

template <class S>
struct ContactT {
  S sdf;
  S fn;  // normal force magnitude on the object
  S ft;  // signed tangential force along t_hat = perp(n_hat)
};

// Common contact force resolution given the gap, the outward unit normal
// (object surface -> pusher) and the velocity of the object material
// point at the contact.
template <class S>
void contact_forces(const Physics& P, S phi_sd, S nx, S ny, S vpx, S vpy,
                    S vrx, S vry, S& fn, S& ft, S& fx, S& fy) {
  fn = (P.contact_stiffness * P.contact_smoothing) *
       softplus(-phi_sd / P.contact_smoothing);
  S tx = -ny;
  S ty = nx;
  S vrelx = vpx - vrx;
  S vrely = vpy - vry;
  S vt = vrelx * tx + vrely * ty;
  ft = (-P.friction) * fn * tanh(vt / P.friction_smoothing);
  S nfn = -fn;
  fx = nfn * nx + ft * tx;
  fy = nfn * ny + ft * ty;
}

template <class S>
S planar_sdf(const Environment& e, S px, S py, S ox, S oy, S cphi, S sphi) {
  return rounded_box_sdf_world(px, py, ox, oy, cphi, sphi,
                               e.geometry.box_half_x, e.geometry.box_half_y,
                               e.geometry.pusher_radius);
}

template <class S>
void step_planar(const Environment& e, StateT<S>& s, S ux, S uy,
                 ContactT<S>* info) {
  const Physics& P = e.physics;
  S vrx = smooth_clamp(ux, P.max_speed);
  S vry = smooth_clamp(uy, P.max_speed);

  S cphi = cos(s.ophi);
  S sphi = sin(s.ophi);
  S phi_sd = planar_sdf(e, s.rx, s.ry, s.ox, s.oy, cphi, sphi);

  // Contact normal from a central stencil of the distance field; keeps
  // the direction smooth across face/corner region boundaries.
  const double eps = 0.5 * P.contact_smoothing;
  S nx = (planar_sdf(e, s.rx + eps, s.ry, s.ox, s.oy, cphi, sphi) -
          planar_sdf(e, s.rx - eps, s.ry, s.ox, s.oy, cphi, sphi)) /
         (2.0 * eps);
  S ny = (planar_sdf(e, s.rx, s.ry + eps, s.ox, s.oy, cphi, sphi) -
          planar_sdf(e, s.rx, s.ry - eps, s.ox, s.oy, cphi, sphi)) /
         (2.0 * eps);
  S nlen = hypot(nx, ny) + 1e-12;
  nx = nx / nlen;
  ny = ny / nlen;

  // Object material point nearest the pusher centre.
  S depth = phi_sd + e.geometry.pusher_radius;
  S cpx = s.rx - depth * nx;
  S cpy = s.ry - depth * ny;
  S relx = cpx - s.ox;
  S rely = cpy - s.oy;
  S vcpx = s.ovx - s.oom * rely;
  S vcpy = s.ovy + s.oom * relx;

  S fn, ft, fx, fy;
  contact_forces(P, phi_sd, nx, ny, vcpx, vcpy, vrx, vry, fn, ft, fx, fy);
  S tau = relx * fy - rely * fx;

  if (info != nullptr) {
    info->sdf = phi_sd;
    info->fn = fn;
    info->ft = ft;
  }

  s.ovx = s.ovx + (fx - s.ovx * P.lin_damping) * (P.dt / P.mass);
  s.ovy = s.ovy + (fy - s.ovy * P.lin_damping) * (P.dt / P.mass);
  s.oom = s.oom + (tau - s.oom * P.ang_damping) * (P.dt / P.inertia);
  s.ox = s.ox + s.ovx * P.dt;
  s.oy = s.oy + s.ovy * P.dt;
  s.ophi = s.ophi + s.oom * P.dt;

  s.rvx = vrx;
  s.rvy = vry;
  s.rx = s.rx + vrx * P.dt;
  s.ry = s.ry + vry * P.dt;
}

// Soft joint range: restoring generalized force, negligible inside the
// range, stiffening smoothly outside it.
template <class S>
S joint_limit_force(const Physics& P, S q) {
  return (P.limit_stiffness * P.limit_smoothing) *
         (softplus((-q + P.joint_min) / P.limit_smoothing) -
          softplus((q - P.joint_max) / P.limit_smoothing));
}

template <class S>
void step_revolute(const Environment& e, StateT<S>& s, S ux, S uy,
                   ContactT<S>* info) {
  const Physics& P = e.physics;
  const Geometry& G = e.geometry;
  S vrx = smooth_clamp(ux, P.max_speed);
  S vry = smooth_clamp(uy, P.max_speed);

  S theta = s.q + e.base_pose.phi;
  S ct = cos(theta);
  S st = sin(theta);
  S armx = ct * G.arm_length;  // hinge -> handle
  S army = st * G.arm_length;
  S hcx = armx + e.base_pose.x;
  S hcy = army + e.base_pose.y;

  S dx = s.rx - hcx;
  S dy = s.ry - hcy;
  S dist = hypot(dx, dy);
  S phi_sd = dist - (G.pusher_radius + G.handle_radius);
  S nlen = dist + 1e-12;
  S nx = dx / nlen;
  S ny = dy / nlen;

  // Handle material point velocity.
  S vhx = (-G.arm_length) * st * s.qd;
  S vhy = G.arm_length * ct * s.qd;

  S fn, ft, fx, fy;
  contact_forces(P, phi_sd, nx, ny, vhx, vhy, vrx, vry, fn, ft, fx, fy);
  S tau = armx * fy - army * fx;

  if (info != nullptr) {
    info->sdf = phi_sd;
    info->fn = fn;
    info->ft = ft;
  }

  S tau_lim = joint_limit_force(P, s.q);
  s.qd = s.qd + (tau + tau_lim - s.qd * P.joint_damping) *
                    (P.dt / P.joint_inertia);
  s.q = s.q + s.qd * P.dt;

  s.rvx = vrx;
  s.rvy = vry;
  s.rx = s.rx + vrx * P.dt;
  s.ry = s.ry + vry * P.dt;
}

template <class S>
void step_prismatic(const Environment& e, StateT<S>& s, S ux, S uy,
                    ContactT<S>* info) {
  const Physics& P = e.physics;
  const Geometry& G = e.geometry;
  S vrx = smooth_clamp(ux, P.max_speed);
  S vry = smooth_clamp(uy, P.max_speed);

  const double ax = std::cos(e.base_pose.phi);
  const double ay = std::sin(e.base_pose.phi);
  S slide = s.q + G.arm_length;
  S hcx = slide * ax + e.base_pose.x;
  S hcy = slide * ay + e.base_pose.y;

  S dx = s.rx - hcx;
  S dy = s.ry - hcy;
  S dist = hypot(dx, dy);
  S phi_sd = dist - (G.pusher_radius + G.handle_radius);
  S nlen = dist + 1e-12;
  S nx = dx / nlen;
  S ny = dy / nlen;

  S vhx = s.qd * ax;
  S vhy = s.qd * ay;

  S fn, ft, fx, fy;
  contact_forces(P, phi_sd, nx, ny, vhx, vhy, vrx, vry, fn, ft, fx, fy);
  S f_axial = fx * ax + fy * ay;

  if (info != nullptr) {
    info->sdf = phi_sd;
    info->fn = fn;
    info->ft = ft;
  }

  S f_lim = joint_limit_force(P, s.q);
  s.qd = s.qd + (f_axial + f_lim - s.qd * P.joint_damping) *
                    (P.dt / P.joint_inertia);
  s.q = s.q + s.qd * P.dt;

  s.rvx = vrx;
  s.rvy = vry;
  s.rx = s.rx + vrx * P.dt;
  s.ry = s.ry + vry * P.dt;
}

template <class S>
void step_core(const Environment& e, StateT<S>& s, S ux, S uy,
               ContactT<S>* info = nullptr) {
  switch (e.kind) {
    case EnvKind::planar_push:
      step_planar(e, s, ux, uy, info);
      break;
    case EnvKind::revolute_1dof:
      step_revolute(e, s, ux, uy, info);
      break;
    case EnvKind::prismatic_1dof:
      step_prismatic(e, s, ux, uy, info);
      break;
  }
}

// Weighted squared task-space distance (Eq.-of-motion independent); the
// double and tape paths share this exact expression order.
template <class S>
S planar_loss(const TaskWeights& w, S adx, S ady, S adr, double gx, double gy,
              double gr) {
  return w.w_t * square(adx - gx) + w.w_t * square(ady - gy) +
         w.w_r * square(adr - gr);
}

template <class S>
S joint_loss(double w_q, S q_final, double q_goal) {
  return w_q * square(q_final - q_goal);
}

}  // namespace difftransfer::sim::detail
