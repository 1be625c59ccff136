#include "difftransfer/autodiff.hpp"

#include <cmath>

#include "difftransfer/errors.hpp"

namespace difftransfer::ad {

namespace detail {

double softplus_value(double x) {
  // ln(1 + e^x), stable on both tails.
  if (x > 0.0) return x + std::log1p(std::exp(-x));
  return std::log1p(std::exp(x));
}

double smooth_clamp_value(double v, double max_mag) {
  return max_mag * std::tanh(v / max_mag);
}

double logistic(double x) {
  // d/dx softplus(x)
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

}  // namespace detail

DiffScalar Tape::record(Op op, double value, std::uint32_t a, double pa,
                        std::uint32_t b, double pb) {
  const auto id = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back(Node{op, a, b, pa, pb});
  return DiffScalar{value, id, this};
}

DiffScalar Tape::lift(double x) {
  return record(Op::leaf, x, kNoParent, 0.0, kNoParent, 0.0);
}

std::vector<double> Tape::gradients(const DiffScalar& output,
                                    std::span<const DiffScalar> inputs) const {
  if (output.tape != this) {
    throw UsageError("gradients: output recorded on a different tape");
  }
  for (const DiffScalar& in : inputs) {
    if (in.tape != this) {
      throw UsageError("gradients: input recorded on a different tape");
    }
  }
  std::vector<double> adjoint(nodes_.size(), 0.0);
  adjoint[output.id] = 1.0;
  for (std::uint32_t id = output.id + 1; id-- > 0;) {
    const double adj = adjoint[id];
    if (adj == 0.0) continue;
    const Node& n = nodes_[id];
    if (n.a != kNoParent) adjoint[n.a] += n.pa * adj;
    if (n.b != kNoParent) adjoint[n.b] += n.pb * adj;
  }
  std::vector<double> out;
  out.reserve(inputs.size());
  for (const DiffScalar& in : inputs) out.push_back(adjoint[in.id]);
  return out;
}

namespace {

Tape* same_tape(DiffScalar a, DiffScalar b) {
  if (a.tape == nullptr || a.tape != b.tape) {
    throw UsageError("autodiff: operands belong to different tapes");
  }
  return a.tape;
}

Tape* own_tape(DiffScalar a) {
  if (a.tape == nullptr) throw UsageError("autodiff: scalar has no tape");
  return a.tape;
}

}  // namespace

DiffScalar add(DiffScalar a, DiffScalar b) {
  return same_tape(a, b)->record(Op::add, a.value + b.value, a.id, 1.0, b.id,
                                 1.0);
}

DiffScalar sub(DiffScalar a, DiffScalar b) {
  return same_tape(a, b)->record(Op::sub, a.value - b.value, a.id, 1.0, b.id,
                                 -1.0);
}

DiffScalar mul(DiffScalar a, DiffScalar b) {
  return same_tape(a, b)->record(Op::mul, a.value * b.value, a.id, b.value,
                                 b.id, a.value);
}

DiffScalar div(DiffScalar a, DiffScalar b) {
  Tape* t = same_tape(a, b);
  if (b.value == 0.0) throw DomainError("autodiff: division by zero");
  const double inv = 1.0 / b.value;
  return t->record(Op::div, a.value / b.value, a.id, inv, b.id,
                   -a.value * inv * inv);
}

DiffScalar neg(DiffScalar a) {
  return own_tape(a)->record(Op::neg, -a.value, a.id, -1.0, Tape::kNoParent,
                             0.0);
}

DiffScalar tanh(DiffScalar a) {
  const double t = std::tanh(a.value);
  return own_tape(a)->record(Op::tanh, t, a.id, 1.0 - t * t, Tape::kNoParent,
                             0.0);
}

DiffScalar softplus(DiffScalar a) {
  return own_tape(a)->record(Op::softplus, detail::softplus_value(a.value),
                             a.id, detail::logistic(a.value), Tape::kNoParent,
                             0.0);
}

DiffScalar exp(DiffScalar a) {
  const double e = std::exp(a.value);
  return own_tape(a)->record(Op::exp, e, a.id, e, Tape::kNoParent, 0.0);
}

DiffScalar square(DiffScalar a) {
  return own_tape(a)->record(Op::square, a.value * a.value, a.id,
                             2.0 * a.value, Tape::kNoParent, 0.0);
}

DiffScalar smooth_clamp(DiffScalar v, double max_mag) {
  const double t = std::tanh(v.value / max_mag);
  return own_tape(v)->record(Op::smooth_clamp, max_mag * t, v.id, 1.0 - t * t,
                             Tape::kNoParent, 0.0);
}

DiffScalar sin(DiffScalar a) {
  return own_tape(a)->record(Op::sin, std::sin(a.value), a.id,
                             std::cos(a.value), Tape::kNoParent, 0.0);
}

DiffScalar cos(DiffScalar a) {
  return own_tape(a)->record(Op::cos, std::cos(a.value), a.id,
                             -std::sin(a.value), Tape::kNoParent, 0.0);
}

DiffScalar min(DiffScalar a, DiffScalar b) {
  const bool first = a.value <= b.value;
  return same_tape(a, b)->record(Op::min, first ? a.value : b.value, a.id,
                                 first ? 1.0 : 0.0, b.id, first ? 0.0 : 1.0);
}

DiffScalar max(DiffScalar a, DiffScalar b) {
  const bool first = a.value >= b.value;
  return same_tape(a, b)->record(Op::max, first ? a.value : b.value, a.id,
                                 first ? 1.0 : 0.0, b.id, first ? 0.0 : 1.0);
}

DiffScalar hypot(DiffScalar a, DiffScalar b) {
  const double h = std::hypot(a.value, b.value);
  const double pa = h > 0.0 ? a.value / h : 0.0;
  const double pb = h > 0.0 ? b.value / h : 0.0;
  return same_tape(a, b)->record(Op::hypot, h, a.id, pa, b.id, pb);
}

DiffScalar operator+(DiffScalar a, double c) {
  return own_tape(a)->record(Op::add_c, a.value + c, a.id, 1.0,
                             Tape::kNoParent, 0.0);
}

DiffScalar operator-(double c, DiffScalar a) {
  return own_tape(a)->record(Op::rsub_c, c - a.value, a.id, -1.0,
                             Tape::kNoParent, 0.0);
}

DiffScalar operator*(DiffScalar a, double c) {
  return own_tape(a)->record(Op::mul_c, a.value * c, a.id, c, Tape::kNoParent,
                             0.0);
}

DiffScalar operator/(DiffScalar a, double c) {
  if (c == 0.0) throw DomainError("autodiff: division by zero constant");
  return own_tape(a)->record(Op::div_c, a.value / c, a.id, 1.0 / c,
                             Tape::kNoParent, 0.0);
}

DiffScalar operator/(double c, DiffScalar a) {
  if (a.value == 0.0) throw DomainError("autodiff: division by zero");
  const double v = c / a.value;
  return own_tape(a)->record(Op::rdiv_c, v, a.id, -v / a.value,
                             Tape::kNoParent, 0.0);
}

DiffScalar min(DiffScalar a, double c) {
  const bool first = a.value <= c;
  return own_tape(a)->record(Op::min_c, first ? a.value : c, a.id,
                             first ? 1.0 : 0.0, Tape::kNoParent, 0.0);
}

DiffScalar max(DiffScalar a, double c) {
  const bool first = a.value >= c;
  return own_tape(a)->record(Op::max_c, first ? a.value : c, a.id,
                             first ? 1.0 : 0.0, Tape::kNoParent, 0.0);
}

DiffScalar apply(Op op, std::span<const DiffScalar> args) {
  const auto need = [&](std::size_t n) {
    if (args.size() != n) {
      throw UsageError("apply: wrong number of arguments for primitive");
    }
  };
  switch (op) {
    case Op::add: need(2); return add(args[0], args[1]);
    case Op::sub: need(2); return sub(args[0], args[1]);
    case Op::mul: need(2); return mul(args[0], args[1]);
    case Op::div: need(2); return div(args[0], args[1]);
    case Op::neg: need(1); return neg(args[0]);
    case Op::tanh: need(1); return tanh(args[0]);
    case Op::softplus: need(1); return softplus(args[0]);
    case Op::exp: need(1); return exp(args[0]);
    case Op::square: need(1); return square(args[0]);
    case Op::sin: need(1); return sin(args[0]);
    case Op::cos: need(1); return cos(args[0]);
    case Op::min: need(2); return min(args[0], args[1]);
    case Op::max: need(2); return max(args[0], args[1]);
    case Op::hypot: need(2); return hypot(args[0], args[1]);
    default:
      throw UsageError("apply: op kind not applicable through apply()");
  }
}

std::vector<double> finite_difference_gradient(
    const std::function<double(std::span<const double>)>& f,
    std::span<const double> x, double h) {
  if (!(h > 0.0)) throw UsageError("finite_difference_gradient: h must be > 0");
  std::vector<double> probe(x.begin(), x.end());
  std::vector<double> grad(x.size(), 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double xi = probe[i];
    probe[i] = xi + h;
    const double fp = f(probe);
    probe[i] = xi - h;
    const double fm = f(probe);
    probe[i] = xi;
    if (!std::isfinite(fp) || !std::isfinite(fm)) {
      throw NumericError("finite_difference_gradient: non-finite f value");
    }
    grad[i] = (fp - fm) / (2.0 * h);
  }
  return grad;
}

}  // namespace difftransfer::ad
