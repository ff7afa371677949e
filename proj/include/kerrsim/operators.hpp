#ifndef KERRSIM_OPERATORS_HPP
#define KERRSIM_OPERATORS_HPP

#include <Eigen/Dense>
#include <complex>

namespace kerrsim {

using Complex = std::complex<double>;

/// Dense operator on the truncated Fock space |0>..|dim-1>.
using Operator = Eigen::MatrixXcd;

/// Probability amplitudes over |0>..|dim-1>.
using StateVector = Eigen::VectorXcd;

/// Density matrix on the truncated Fock space.
using DensityMatrix = Eigen::MatrixXcd;

/// Annihilation operator: entries <n-1|a|n> = sqrt(n), zero elsewhere.
Operator annihilation(int dim);

/// Creation operator, the conjugate transpose of annihilation(dim).
Operator creation(int dim);

/// Fock basis state |n> in a dim-dimensional space.
StateVector fock_state(int dim, int n);

inline StateVector vacuum_state(int dim) { return fock_state(dim, 0); }

/// exp(scale * h).
///
/// Hermitian and anti-Hermitian generators go through an eigendecomposition
/// (exact at these dimensions); anything else falls back to scaled-and-squared
/// Taylor summation.  For Hermitian h and purely imaginary scale the result is
/// unitary to ~1e-14.
Operator matrix_exponential(const Operator& h, Complex scale);

/// |<a|b>|^2.  States of unequal dimension are compared by zero-padding the
/// shorter one.  Throws std::invalid_argument on a zero-norm input.
double fidelity(const StateVector& a, const StateVector& b);

/// Per-level probabilities |amp[n]|^2.
Eigen::VectorXd probabilities(const StateVector& a);

bool is_hermitian(const Operator& m, double tol = 1e-12);
bool is_unitary(const Operator& m, double tol = 1e-10);

/// max_ij |a_ij - b_ij|
double max_abs_diff(const Operator& a, const Operator& b);

/// Smallest eigenvalue of a Hermitian matrix (used for density-matrix
/// positivity checks).
double min_eigenvalue_hermitian(const Operator& m);

}  // namespace kerrsim

#endif
