#include "kerrsim/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace kerrsim {

Operator annihilation(int dim) {
    if (dim < 1) {
        throw std::invalid_argument("annihilation: dimension must be >= 1");
    }
    Operator a = Operator::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) {
        a(n - 1, n) = std::sqrt(static_cast<double>(n));
    }
    return a;
}

Operator creation(int dim) { return annihilation(dim).adjoint(); }

StateVector fock_state(int dim, int n) {
    if (dim < 1 || n < 0 || n >= dim) {
        throw std::invalid_argument("fock_state: level outside [0, dim)");
    }
    StateVector v = StateVector::Zero(dim);
    v(n) = 1.0;
    return v;
}

bool is_hermitian(const Operator& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return max_abs_diff(m, m.adjoint()) <= tol;
}

bool is_unitary(const Operator& m, double tol) {
    if (m.rows() != m.cols()) return false;
    Operator id = Operator::Identity(m.rows(), m.cols());
    return max_abs_diff(m * m.adjoint(), id) <= tol;
}

double max_abs_diff(const Operator& a, const Operator& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

double min_eigenvalue_hermitian(const Operator& m) {
    Eigen::SelfAdjointEigenSolver<Operator> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

namespace {

// Plain scaled-and-squared Taylor sum; only reached for generators with no
// (anti-)Hermitian structure.
Operator exp_taylor(const Operator& a) {
    const int dim = static_cast<int>(a.rows());
    double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
    int squarings = 0;
    Operator b = a;
    while (norm > 0.5) {
        b *= 0.5;
        norm *= 0.5;
        ++squarings;
    }
    Operator result = Operator::Identity(dim, dim);
    Operator term = Operator::Identity(dim, dim);
    for (int k = 1; k <= 40; ++k) {
        term = (term * b) / static_cast<double>(k);
        result += term;
        if (term.cwiseAbs().maxCoeff() < 1e-20) break;
    }
    for (int s = 0; s < squarings; ++s) result = result * result;
    return result;
}

// exp(c * k) for Hermitian k via eigendecomposition.
Operator exp_hermitian(const Operator& k, Complex c) {
    Eigen::SelfAdjointEigenSolver<Operator> es(k);
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("matrix_exponential: eigendecomposition failed");
    }
    const Eigen::VectorXd& w = es.eigenvalues();
    Eigen::VectorXcd phases(w.size());
    for (Eigen::Index i = 0; i < w.size(); ++i) {
        phases(i) = std::exp(c * w(i));
    }
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

Operator matrix_exponential(const Operator& h, Complex scale) {
    if (h.rows() != h.cols() || h.rows() < 1) {
        throw std::invalid_argument("matrix_exponential: matrix must be square");
    }
    if (!h.allFinite() || !std::isfinite(scale.real()) || !std::isfinite(scale.imag())) {
        throw std::invalid_argument("matrix_exponential: non-finite input");
    }
    const double scale_tol = 1e-12 * std::max(1.0, h.cwiseAbs().maxCoeff());
    if (max_abs_diff(h, h.adjoint()) <= scale_tol) {
        return exp_hermitian(h, scale);
    }
    // anti-Hermitian h = i k with k Hermitian: exp(scale h) = exp((i scale) k)
    if (max_abs_diff(h, -h.adjoint()) <= scale_tol) {
        Operator k = Complex(0, -1) * h;
        return exp_hermitian(k, scale * Complex(0, 1));
    }
    return exp_taylor(scale * h);
}

double fidelity(const StateVector& a, const StateVector& b) {
    const double na = a.norm();
    const double nb = b.norm();
    if (na < 1e-300 || nb < 1e-300) {
        throw std::invalid_argument("fidelity: zero-norm state");
    }
    const Eigen::Index n = std::min(a.size(), b.size());
    // zero-padding embedding: the overlap only sees the common levels
    Complex overlap = a.head(n).dot(b.head(n));  // Eigen's dot conjugates a
    double f = std::norm(overlap) / (na * na * nb * nb);
    return std::min(f, 1.0);
}

Eigen::VectorXd probabilities(const StateVector& a) {
    return a.cwiseAbs2();
}

}  // namespace kerrsim
