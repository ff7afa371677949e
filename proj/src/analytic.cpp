#include "kerrsim/analytic.hpp"

#include <cmath>
#include <stdexcept>

namespace kerrsim {

double CoherentCoefficients::norm_defect() const {
    return std::abs(coeffs.squaredNorm() - 1.0);
}

StateVector CoherentCoefficients::state(int dim, double eps) const {
    if (dim < order) throw std::invalid_argument("CoherentCoefficients::state: dim < order");
    StateVector v = StateVector::Zero(dim);
    v.head(order) = coeffs;
    if (dim > order) v(order) = eps * leak;
    return v;
}

double SqueezedCoefficients::norm_defect() const {
    return std::abs(even_coeffs.squaredNorm() - 1.0);
}

StateVector SqueezedCoefficients::state(int dim, double eps) const {
    if (dim < 2 * sigma + 1) {
        throw std::invalid_argument("SqueezedCoefficients::state: dim too small");
    }
    StateVector v = StateVector::Zero(dim);
    for (int n = 0; n <= sigma; ++n) v(2 * n) = even_coeffs(n);
    if (dim > 2 * sigma + 2) v(2 * sigma + 2) = eps * leak;
    return v;
}

StateVector two_level_amplitudes(double theta) {
    StateVector v(2);
    v(0) = std::cos(theta);
    v(1) = Complex(0.0, -1.0) * std::sin(theta);
    return v;
}

StateVector three_level_amplitudes(double eps, double t) {
    const double x = std::sqrt(3.0) * eps * t;
    StateVector v(3);
    v(0) = (2.0 + std::cos(x)) / 3.0;
    v(1) = Complex(0.0, -1.0) * std::sin(x) / std::sqrt(3.0);
    v(2) = std::sqrt(2.0) / 3.0 * (std::cos(x) - 1.0);
    return v;
}

double hermite_he(int n, double x) {
    if (n < 0) throw std::invalid_argument("hermite_he: negative order");
    double hm1 = 0.0, h = 1.0;
    for (int k = 0; k < n; ++k) {
        const double hp1 = x * h - k * hm1;
        hm1 = h;
        h = hp1;
    }
    return h;
}

double hermite_he_orthonormal(int n, double x) {
    if (n < 0) throw std::invalid_argument("hermite_he_orthonormal: negative order");
    double hm1 = 0.0, h = 1.0;  // he_0 = 1
    for (int k = 0; k < n; ++k) {
        const double hp1 = (x * h - std::sqrt(static_cast<double>(k)) * hm1) /
                           std::sqrt(static_cast<double>(k + 1));
        hm1 = h;
        h = hp1;
    }
    return h;
}

Eigen::VectorXd hermite_roots(int order) {
    if (order < 1 || order > 30) {
        throw std::invalid_argument("hermite_roots: order outside supported range [1, 30]");
    }
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(order, order);
    for (int n = 1; n < order; ++n) {
        const double c = std::sqrt(static_cast<double>(n));
        jacobi(n - 1, n) = c;
        jacobi(n, n - 1) = c;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi, Eigen::EigenvaluesOnly);
    Eigen::VectorXd roots = es.eigenvalues();
    // one Newton step against the polynomial recurrence ties the eigenvalues
    // to He_N itself: x <- x - he_N(x) / (sqrt(N) he_{N-1}(x))
    for (int m = 0; m < order; ++m) {
        const double x = roots(m);
        const double num = hermite_he_orthonormal(order, x);
        const double den = std::sqrt(static_cast<double>(order)) *
                           hermite_he_orthonormal(order - 1, x);
        if (std::abs(den) > 0.0) roots(m) = x - num / den;
    }
    std::sort(roots.data(), roots.data() + order);
    return roots;
}

CoherentCoefficients coherent_coefficients(int order, double eps, double chi,
                                           const DriveEnvelope& env, int k) {
    if (order < 1) throw std::invalid_argument("coherent_coefficients: order must be >= 1");
    if (k < 0) throw std::invalid_argument("coherent_coefficients: k must be >= 0");
    const Eigen::VectorXd roots = hermite_roots(order);
    const double c0 = fourier_coefficient(env, 0).real();

    CoherentCoefficients out;
    out.order = order;
    out.coeffs = Eigen::VectorXcd::Zero(order);
    out.norm_tolerance = std::max(1e-12, (eps / chi) * (eps / chi));

    for (int n = 0; n < order; ++n) {
        Complex sum(0.0, 0.0);
        for (int m = 0; m < order; ++m) {
            const double x = roots(m);
            const double hn = hermite_he_orthonormal(n, x);
            const double hd = hermite_he_orthonormal(order - 1, x);
            sum += std::exp(Complex(0.0, k * x * eps * c0)) * (hn / (hd * hd));
        }
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        out.coeffs(n) = sign / static_cast<double>(order) * sum;
    }
    const Complex b = b_coefficient(env, order, chi);
    out.leak = std::sqrt(static_cast<double>(order)) * b * out.coeffs(order - 1);
    return out;
}

StateVector fd_coherent_state(Complex alpha, int s) {
    if (s < 1) throw std::invalid_argument("fd_coherent_state: s must be >= 1");
    const int dim = s + 1;
    const Operator a = annihilation(dim);
    const Operator gen = alpha * a.adjoint() - std::conj(alpha) * a;
    return matrix_exponential(gen, 1.0) * vacuum_state(dim);
}

StateVector fd_squeezed_vacuum(Complex xi, int s) {
    if (s < 1) throw std::invalid_argument("fd_squeezed_vacuum: s must be >= 1");
    const int dim = s + 1;
    const Operator a = annihilation(dim);
    const Operator a2 = a * a;
    const Operator gen = 0.5 * xi * a2.adjoint() - 0.5 * std::conj(xi) * a2;
    return matrix_exponential(gen, 1.0) * vacuum_state(dim);
}

SqueezedCoefficients squeezed_coefficients(int s, double eps, double t) {
    if (s < 1) throw std::invalid_argument("squeezed_coefficients: s must be >= 1");
    const int sigma = s / 2;
    // even-parity manifold |0>, |2>, ..., |2 sigma> under eps*(a^dag^2 + a^2)
    Operator coupling = Operator::Zero(sigma + 1, sigma + 1);
    for (int n = 0; n < sigma; ++n) {
        const double g = std::sqrt(static_cast<double>((2 * n + 1) * (2 * n + 2)));
        coupling(n, n + 1) = g;
        coupling(n + 1, n) = g;
    }
    const Operator u = matrix_exponential(coupling, Complex(0.0, -eps * t));

    SqueezedCoefficients out;
    out.sigma = sigma;
    out.even_coeffs = u.col(0);
    out.norm_tolerance = std::max(1e-12, eps * eps);
    out.leak = std::pow(2.0, -sigma - 1) *
               std::sqrt(static_cast<double>((2 * sigma + 1) * (2 * sigma + 2))) *
               out.even_coeffs(sigma);
    return out;
}

}  // namespace kerrsim
