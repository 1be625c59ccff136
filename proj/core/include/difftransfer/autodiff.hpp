#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace difftransfer::ad {

// Node operation kinds. The first group is the public primitive set
// exposed through apply(); the *_c variants fold a double constant into
// the node (one parent, partial stored at record time) and exist so
// operator sugar does not bloat the tape with leaf constants. min/max/
// hypot/sin/cos are needed by the rotated-box contact geometry; min and
// max are differentiable almost everywhere (tie broken toward the first
// argument), hypot's partials are defined to be zero at the origin.
enum class Op : std::uint8_t {
  leaf,
  add,
  sub,
  mul,
  div,
  neg,
  tanh,
  softplus,
  exp,
  square,
  smooth_clamp,
  sin,
  cos,
  min,
  max,
  hypot,
  add_c,
  rsub_c,  // c - x
  mul_c,
  div_c,   // x / c
  rdiv_c,  // c / x
  min_c,
  max_c,
};

class Tape;

// Scalar recorded on a tape. Cheap value type: copying shares the node.
struct DiffScalar {
  double value = 0.0;
  std::uint32_t id = 0;
  Tape* tape = nullptr;
};

// Append-only record of one forward computation. Node ids strictly
// increase in creation order; backward visits them exactly once in
// reverse. A tape is confined to one thread.
class Tape {
 public:
  struct Node {
    Op op;
    std::uint32_t a;
    std::uint32_t b;
    double pa;  // d(node)/d(parent a), fixed at record time
    double pb;
  };

  static constexpr std::uint32_t kNoParent = 0xffffffffu;

  Tape() = default;
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  DiffScalar lift(double x);

  // d(output)/d(input) for each input, by one reverse sweep.
  std::vector<double> gradients(const DiffScalar& output,
                                std::span<const DiffScalar> inputs) const;

  std::size_t size() const { return nodes_.size(); }
  const Node& node(std::uint32_t id) const { return nodes_[id]; }
  void reserve(std::size_t n) { nodes_.reserve(n); }
  void clear() { nodes_.clear(); }

  // Raw node append; used by the operation layer.
  DiffScalar record(Op op, double value, std::uint32_t a, double pa,
                    std::uint32_t b, double pb);

 private:
  std::vector<Node> nodes_;
};

// Generic primitive dispatcher (arity-checked).
DiffScalar apply(Op op, std::span<const DiffScalar> args);

// Named primitives.
DiffScalar add(DiffScalar a, DiffScalar b);
DiffScalar sub(DiffScalar a, DiffScalar b);
DiffScalar mul(DiffScalar a, DiffScalar b);
DiffScalar div(DiffScalar a, DiffScalar b);
DiffScalar neg(DiffScalar a);
DiffScalar tanh(DiffScalar a);
DiffScalar softplus(DiffScalar a);
DiffScalar exp(DiffScalar a);
DiffScalar square(DiffScalar a);
// max_mag * tanh(v / max_mag): smooth saturation with nonzero slope everywhere.
DiffScalar smooth_clamp(DiffScalar v, double max_mag);
DiffScalar sin(DiffScalar a);
DiffScalar cos(DiffScalar a);
DiffScalar min(DiffScalar a, DiffScalar b);
DiffScalar max(DiffScalar a, DiffScalar b);
DiffScalar hypot(DiffScalar a, DiffScalar b);

// Operator sugar (constant-folding variants on the double side).
inline DiffScalar operator+(DiffScalar a, DiffScalar b) { return add(a, b); }
inline DiffScalar operator-(DiffScalar a, DiffScalar b) { return sub(a, b); }
inline DiffScalar operator*(DiffScalar a, DiffScalar b) { return mul(a, b); }
inline DiffScalar operator/(DiffScalar a, DiffScalar b) { return div(a, b); }
inline DiffScalar operator-(DiffScalar a) { return neg(a); }
DiffScalar operator+(DiffScalar a, double c);
inline DiffScalar operator+(double c, DiffScalar a) { return a + c; }
inline DiffScalar operator-(DiffScalar a, double c) { return a + (-c); }
DiffScalar operator-(double c, DiffScalar a);
DiffScalar operator*(DiffScalar a, double c);
inline DiffScalar operator*(double c, DiffScalar a) { return a * c; }
DiffScalar operator/(DiffScalar a, double c);
DiffScalar operator/(double c, DiffScalar a);
DiffScalar min(DiffScalar a, double c);
DiffScalar max(DiffScalar a, double c);

namespace detail {
// Shared value kernels so the double overloads in scalar_ops.hpp and the
// tape ops above produce bit-identical forward values.
double softplus_value(double x);
double smooth_clamp_value(double v, double max_mag);
}  // namespace detail

// Central-difference gradient estimate (f(x+h e_i) - f(x-h e_i)) / 2h.
// Independent of the tape machinery; the oracle for the reverse sweep.
std::vector<double> finite_difference_gradient(
    const std::function<double(std::span<const double>)>& f,
    std::span<const double> x, double h);

}  // namespace difftransfer::ad
