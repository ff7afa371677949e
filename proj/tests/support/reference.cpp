#include "reference.hpp"

#include <cmath>
#include <random>

namespace kerrsim_test {

Matrix series_expm(const Matrix& a) {
    const Eigen::Index dim = a.rows();
    int squarings = 0;
    Matrix b = a;
    while (b.cwiseAbs().maxCoeff() * static_cast<double>(dim) > 0.25) {
        b *= 0.5;
        ++squarings;
    }
    Matrix sum = Matrix::Identity(dim, dim);
    Matrix term = Matrix::Identity(dim, dim);
    for (int k = 1; k <= 60; ++k) {
        term = term * b / static_cast<double>(k);
        sum += term;
        if (term.cwiseAbs().maxCoeff() < 1e-22) break;
    }
    for (int s = 0; s < squarings; ++s) sum = sum * sum;
    return sum;
}

Matrix lindblad_damped_kerr(const Matrix& rho0, double chi, double gamma, double t, int steps) {
    const Eigen::Index dim = rho0.rows();
    Matrix a = Matrix::Zero(dim, dim);
    for (Eigen::Index n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    const Matrix ad = a.adjoint();
    const Matrix h = 0.5 * chi * ad * ad * a * a;
    const Matrix num = ad * a;

    auto rhs = [&](const Matrix& rho) -> Matrix {
        const Complex mi(0.0, -1.0);
        return mi * (h * rho - rho * h) +
               0.5 * gamma * (2.0 * a * rho * ad - num * rho - rho * num);
    };

    Matrix rho = rho0;
    const double dt = t / steps;
    for (int s = 0; s < steps; ++s) {
        const Matrix k1 = rhs(rho);
        const Matrix k2 = rhs(rho + 0.5 * dt * k1);
        const Matrix k3 = rhs(rho + 0.5 * dt * k2);
        const Matrix k4 = rhs(rho + dt * k3);
        rho += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return rho;
}

Matrix random_hermitian(int dim, unsigned seed) {
    std::mt19937 gen(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    Matrix m(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) m(i, j) = Complex(dist(gen), dist(gen));
    }
    return 0.5 * (m + m.adjoint());
}

Matrix random_density(int dim, unsigned seed) {
    std::mt19937 gen(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    Matrix x(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) x(i, j) = Complex(dist(gen), dist(gen));
    }
    Matrix rho = x * x.adjoint();
    rho /= rho.trace().real();
    return rho;
}

}  // namespace kerrsim_test
