#pragma once

#include <algorithm>
#include <cmath>

#include "difftransfer/autodiff.hpp"

// Double overloads of the tape primitives. Dynamics code is templated on
// the scalar type and instantiated for both double and ad::DiffScalar;
// these overloads keep the two paths value-identical (the tape variants
// compute values through the same kernels, and the core library builds
// with fp-contract off).

namespace difftransfer::scalar_ops {

inline double tanh(double x) { return std::tanh(x); }
inline double softplus(double x) { return ad::detail::softplus_value(x); }
inline double exp(double x) { return std::exp(x); }
inline double square(double x) { return x * x; }
inline double smooth_clamp(double v, double max_mag) {
  return ad::detail::smooth_clamp_value(v, max_mag);
}
inline double sin(double x) { return std::sin(x); }
inline double cos(double x) { return std::cos(x); }
inline double min(double a, double b) { return a <= b ? a : b; }
inline double max(double a, double b) { return a >= b ? a : b; }
inline double hypot(double a, double b) { return std::hypot(a, b); }

using ad::cos;
using ad::exp;
using ad::hypot;
using ad::max;
using ad::min;
using ad::sin;
using ad::smooth_clamp;
using ad::softplus;
using ad::square;
using ad::tanh;

}  // namespace difftransfer::scalar_ops
