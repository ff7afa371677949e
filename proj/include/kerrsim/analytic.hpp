#ifndef KERRSIM_ANALYTIC_HPP
#define KERRSIM_ANALYTIC_HPP

#include "kerrsim/model.hpp"
#include "kerrsim/operators.hpp"

namespace kerrsim {

/// Weak-drive superposition coefficients of the N-dimensional target state.
/// `coeffs` holds C_0..C_{N-1}; `leak` is the coefficient of the first level
/// above the manifold and enters the physical state with an explicit factor
/// eps.  The leak is not part of the normalization.
struct CoherentCoefficients {
    int order = 0;  // N
    Eigen::VectorXcd coeffs;
    Complex leak = 0.0;
    double norm_tolerance = 1e-12;

    double norm_defect() const;
    /// Materialize sum C_n |n> + eps*leak |N> in a dim-dimensional space.
    StateVector state(int dim, double eps) const;
};

/// Even-level coefficients C_0, C_2, ..., C_{2 sigma} of the squeezed target,
/// with the eps-weighted leak C_{2 sigma + 2} held separately.
struct SqueezedCoefficients {
    int sigma = 0;  // Int(s/2)
    Eigen::VectorXcd even_coeffs;
    Complex leak = 0.0;
    double norm_tolerance = 1e-12;

    double norm_defect() const;
    StateVector state(int dim, double eps) const;
};

/// Two-level weak-drive solution: C_0 = cos(theta), C_1 = -i sin(theta),
/// normalized so that C_0(0) = 1.
StateVector two_level_amplitudes(double theta);

/// Three-level weak-drive solution:
///   C_0 = [2 + cos(sqrt3 eps t)]/3
///   C_1 = -i/sqrt3 sin(sqrt3 eps t)
///   C_2 = sqrt2/3 [cos(sqrt3 eps t) - 1]
StateVector three_level_amplitudes(double eps, double t);

/// Probabilists' Hermite polynomial He_n (He_{n+1} = x He_n - n He_{n-1}).
double hermite_he(int n, double x);

/// He_n / sqrt(n!), numerically safe for large n.
double hermite_he_orthonormal(int n, double x);

/// All N roots of He_N, ascending.  Computed as eigenvalues of the symmetric
/// tridiagonal Jacobi matrix with offdiagonals sqrt(n), then polished with one
/// Newton step on the orthonormal recurrence.  Supported for 1 <= N <= 30.
Eigen::VectorXd hermite_roots(int order);

/// Stroboscopic manifold coefficients after k drive periods:
///   C_n = (-1)^n / N * sum_m exp(i k x_m eps c_0) he_n(x_m) / he_{N-1}(x_m)^2
/// and leak C_N = sqrt(N) B C_{N-1}.
CoherentCoefficients coherent_coefficients(int order, double eps, double chi,
                                           const DriveEnvelope& env, int k);

/// exp(alpha a_s^dag - alpha^* a_s) |0>, an (s+1)-dimensional state.
StateVector fd_coherent_state(Complex alpha, int s);

/// exp[(xi/2) (a_s^dag)^2 - (xi^*/2) a_s^2] |0>, even levels only.
StateVector fd_squeezed_vacuum(Complex xi, int s);

/// Weak-drive even-manifold coefficients under the parametric drive, from the
/// exact eigendecomposition of the (sigma+1)-dimensional coupling matrix with
/// <2n+2| a^dag^2 |2n> = sqrt((2n+1)(2n+2)); leak per the closed form
/// C_{2 sigma + 2} = 2^{-sigma-1} sqrt((2 sigma + 1)(2 sigma + 2)) C_{2 sigma}.
SqueezedCoefficients squeezed_coefficients(int s, double eps, double t);

}  // namespace kerrsim

#endif
