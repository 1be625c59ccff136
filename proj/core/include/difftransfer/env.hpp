#pragma once

#include <array>
#include <string>
#include <vector>

#include "difftransfer/geometry.hpp"
#include "difftransfer/task_space.hpp"

namespace difftransfer::sim {

enum class EnvKind { planar_push, revolute_1dof, prismatic_1dof };

std::string to_string(EnvKind kind);
EnvKind env_kind_from_string(const std::string& s);

// Planar end-effector (a disc pusher), kinematic.
struct RobotState {
  Vec2 pos;
  Vec2 vel;
};

// Manipulated object. planar-push uses base + base velocities (joint
// fields stay zero); the joint fixtures keep base fixed at the fixture
// pose and move only the joint coordinate (rad or m).
struct ObjectState {
  Pose2 base;
  double joint = 0.0;
  Vec2 base_vel;
  double base_ang_vel = 0.0;
  double joint_vel = 0.0;
};

// Commanded end-effector velocity (m/s); the dynamics saturate it
// smoothly at max_speed.
struct Action {
  Vec2 u;
};

struct ActionSequence {
  std::vector<Action> actions;

  int horizon() const { return static_cast<int>(actions.size()); }
  static ActionSequence zeros(int horizon) {
    ActionSequence a;
    a.actions.resize(static_cast<std::size_t>(horizon));
    return a;
  }
};

struct TrajStep {
  RobotState robot;
  ObjectState object;
  Action action;
};

struct Trajectory {
  std::vector<TrajStep> steps;
  TaskVector achieved_change;  // object base pose change, steps.back - steps.front

  int horizon() const { return static_cast<int>(steps.size()); }
};

struct Geometry {
  double box_half_x = 0.05;  // planar-push object half extents (m)
  double box_half_y = 0.05;
  double arm_length = 0.25;  // hinge->handle (revolute) or base->knob at q=0 (prismatic)
  double pusher_radius = 0.02;
  double handle_radius = 0.02;
};

struct Physics {
  double dt = 0.01;                  // s
  double mass = 0.5;                 // planar object (kg)
  double inertia = 8.333e-4;         // planar object (kg m^2)
  double lin_damping = 2.0;          // c (kg/s)
  double ang_damping = 0.01;         // c_omega (kg m^2/s)
  double joint_inertia = 6.25e-3;    // I_j (kg m^2) or m_j (kg)
  double joint_damping = 0.5;        // b
  double contact_stiffness = 500.0;  // k_c (N/m)
  double contact_smoothing = 0.005;  // delta (m)
  double friction = 0.5;             // mu
  double friction_smoothing = 0.01;  // v_eps (m/s)
  double max_speed = 0.5;            // u_max (m/s)
  double joint_min = -2.5;           // soft joint range
  double joint_max = 2.5;
  double limit_stiffness = 2.0;
  double limit_smoothing = 0.05;
  double workspace = 1.5;  // |robot pos| bound (m)
};

struct GoalSpec {
  double joint_goal = 1.0;    // joint kinds: target joint value (rad / m)
  double joint_weight = 1.0;  // w_q
  TaskWeights weights;        // task-space norm W
};

struct Environment {
  EnvKind kind = EnvKind::planar_push;
  Geometry geometry;
  Physics physics;
  Pose2 base_pose;  // fixture pose; ignored by planar-push
  GoalSpec goal;
};

// Validates every field range; throws ConfigError naming the bad field.
Environment make_environment(const Environment& desc);

// One semi-implicit Euler step. Pure; throws NumericError (with the
// timestep unknown at this level) if the result is non-finite.
std::pair<RobotState, ObjectState> step(const Environment& env,
                                        const RobotState& s_r,
                                        const ObjectState& s_o,
                                        const Action& a);

// Contact diagnostics for one step (forces as applied to the object).
struct ContactInfo {
  double sdf = 0.0;
  double normal_force = 0.0;    // magnitude, >= 0
  double tangent_force = 0.0;   // signed along the tangent
};
ContactInfo step_contact_info(const Environment& env, const RobotState& s_r,
                              const ObjectState& s_o, const Action& a);

// T states from T-1 transitions; actions.back() is carried but unused.
Trajectory rollout(const Environment& env, const RobotState& s_r1,
                   const ObjectState& s_o1, const ActionSequence& A);

// planar-push: ||achieved_change - x||^2_W. Joint kinds: w_q (joint_T -
// joint_goal)^2 in the instance that produced tau (x only checked).
double task_loss(const Environment& env, const Trajectory& tau,
                 const TaskVector& x);

struct GradResult {
  double loss = 0.0;
  std::vector<std::array<double, 2>> grad;  // [T][m], last row zero
};

// Reverse-mode d task_loss / d action for every coordinate; loss is
// bit-identical to task_loss(rollout(...), x).
GradResult rollout_gradient(const Environment& env, const RobotState& s_r1,
                            const ObjectState& s_o1, const ActionSequence& A,
                            const TaskVector& x);

// Signed distance from a probe point to the contact surface (object
// inflated by the pusher radius). Negative in penetration.
double signed_distance(const Environment& env, const Vec2& p,
                       const ObjectState& s_o);

// World position of the handle/knob centre for the joint fixtures.
Vec2 handle_position(const Environment& env, double joint);

// A transfer problem: one environment family plus the episode framing
// shared by every sub-task instance (horizon, robot home, joint rest).
struct EnvFamily {
  Environment source_env;
  int horizon = 120;
  Vec2 robot_home;
  double joint_init = 0.0;

  // Joint kinds: source fixture pose offset by x. planar-push: the
  // single shared environment (x enters only the loss).
  Environment instantiate(const TaskVector& x) const;

  RobotState initial_robot() const;
  ObjectState initial_object(const Environment& instance) const;

  // Rollout from the family's initial object state in the instance at x
  // with the given initial robot state.
  Trajectory rollout_in_instance(const TaskVector& x, const RobotState& s_r1,
                                 const ActionSequence& A) const;

  double loss_in_instance(const TaskVector& x, const Trajectory& tau) const;

  GradResult gradient_in_instance(const TaskVector& x, const RobotState& s_r1,
                                  const ActionSequence& A) const;

  const TaskWeights& weights() const { return source_env.goal.weights; }
};

}  // namespace difftransfer::sim
