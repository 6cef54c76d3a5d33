#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace ontic {

using Complex = std::complex<double>;
using DenseOperator = Eigen::MatrixXcd;
using DenseVector = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr Complex kI{0.0, 1.0};

/// Largest entry magnitude of `m` (0 for an empty matrix).
double max_norm(const DenseOperator& m);

/// max_norm(a - b); throws std::invalid_argument on shape mismatch.
double max_abs_diff(const DenseOperator& a, const DenseOperator& b);

/// max_norm(m m^dag - 1). Throws for non-square input.
double unitarity_defect(const DenseOperator& m);

double hermiticity_defect(const DenseOperator& m);

/// exp(a) for a normal matrix, through a complex Schur factorisation
/// a = Q T Q^dag whose triangular factor is diagonal up to round-off.
/// Throws std::invalid_argument if `a` is not square or not normal
/// (||a a^dag - a^dag a||_max above 1e-9 relative to ||a||^2).
DenseOperator exp_normal(const DenseOperator& a);

/// Map an angle into [0, 2pi). Angles within `snap` below 2pi go to 0.
double wrap_phase(double theta, double snap = 1e-9);

}  // namespace ontic
