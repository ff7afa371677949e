#ifndef KERRSIM_TESTS_REFERENCE_HPP
#define KERRSIM_TESTS_REFERENCE_HPP

// Test-side oracles, kept independent of the library code paths they check:
// a truncated-series matrix exponential and a Runge-Kutta integrator for the
// damped-Kerr Lindblad equation.

#include <Eigen/Dense>
#include <complex>

namespace kerrsim_test {

using Matrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

/// exp(A) by scaling-and-squaring Taylor summation.
Matrix series_expm(const Matrix& a);

/// Integrate d rho/dt = -i[(chi/2)(a^dag)^2 a^2, rho]
///                      + (gamma/2)(2 a rho a^dag - a^dag a rho - rho a^dag a)
/// over [0, t] with fixed-step classical RK4 fine enough for ~1e-9 accuracy.
Matrix lindblad_damped_kerr(const Matrix& rho0, double chi, double gamma, double t,
                            int steps = 40000);

/// Random Hermitian matrix with entries of order 1 (deterministic per seed).
Matrix random_hermitian(int dim, unsigned seed);

/// Random density matrix: normalized X X^dag with Gaussian X (deterministic).
Matrix random_density(int dim, unsigned seed);

}  // namespace kerrsim_test

#endif
