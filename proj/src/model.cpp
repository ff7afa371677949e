#include "kerrsim/model.hpp"

#include <algorithm>
#include <boost/math/special_functions/digamma.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace kerrsim {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

DriveEnvelope DriveEnvelope::constant() { return DriveEnvelope{}; }

DriveEnvelope DriveEnvelope::constant(double declared_period) {
    DriveEnvelope e;
    e.period = declared_period;
    e.validate();
    return e;
}

DriveEnvelope DriveEnvelope::delta_train(double period) {
    DriveEnvelope e;
    e.kind = Kind::DeltaTrain;
    e.period = period;
    e.validate();
    return e;
}

DriveEnvelope DriveEnvelope::tabulated(double period, std::vector<double> samples) {
    DriveEnvelope e;
    e.kind = Kind::PeriodicTabulated;
    e.period = period;
    e.samples = std::move(samples);
    e.validate();
    return e;
}

void DriveEnvelope::validate() const {
    if (kind != Kind::Constant && period <= 0.0) {
        throw std::invalid_argument("DriveEnvelope: periodic variant requires period > 0");
    }
    if (kind == Kind::Constant && period < 0.0) {
        throw std::invalid_argument("DriveEnvelope: negative period");
    }
    if (kind == Kind::PeriodicTabulated && samples.size() < 2) {
        throw std::invalid_argument("DriveEnvelope: tabulated envelope needs >= 2 samples");
    }
}

void KerrModel::validate() const {
    if (dim < 1) throw std::invalid_argument("KerrModel: dim must be >= 1");
    if (order < 1) throw std::invalid_argument("KerrModel: order must be >= 1");
    if (chi <= 0.0) throw std::invalid_argument("KerrModel: chi must be > 0");
    // eps = 0 is the trivial boundary of the weak-drive regime; the ODE
    // oracle uses it to isolate the bare Kerr phases
    if (eps < 0.0) throw std::invalid_argument("KerrModel: eps must be >= 0");
    envelope.validate();
}

std::vector<std::string> KerrModel::warnings() const {
    std::vector<std::string> w;
    if (!weak_drive()) {
        w.push_back("eps/chi = " + std::to_string(eps / chi) +
                    " exceeds 0.2; outside the weak-drive regime the closed forms degrade");
    }
    if (!leakage_resolving()) {
        w.push_back("dim = " + std::to_string(dim) + " < order + 2; leakage above the target manifold is not resolved");
    }
    return w;
}

Operator KerrModel::kerr() const { return kerr_hamiltonian(order, chi, dim); }

Operator KerrModel::drive_generator() const { return drive_hamiltonian(drive, eps, dim); }

Operator KerrModel::hamiltonian() const { return kerr() + drive_generator(); }

Operator kerr_hamiltonian(int order, double chi, int dim) {
    if (dim < 1) throw std::invalid_argument("kerr_hamiltonian: dimension must be >= 1");
    if (order < 1) throw std::invalid_argument("kerr_hamiltonian: order must be >= 1");
    Operator h = Operator::Zero(dim, dim);
    for (int n = 0; n < dim; ++n) {
        double falling = 1.0;  // n (n-1) ... (n-order+1); vanishes for n < order
        for (int j = 0; j < order; ++j) falling *= static_cast<double>(n - j);
        h(n, n) = chi / order * falling;
    }
    return h;
}

Operator drive_hamiltonian(DriveKind kind, double eps, int dim) {
    if (dim < 1) throw std::invalid_argument("drive_hamiltonian: dimension must be >= 1");
    const Operator a = annihilation(dim);
    const Operator ad = a.adjoint();
    if (kind == DriveKind::Linear) return eps * (ad + a);
    return eps * (ad * ad + a * a);
}

namespace {

// Integral of the piecewise-linear periodic interpolant over one period.
double tabulated_period_integral(const DriveEnvelope& env) {
    const std::size_t m = env.samples.size();
    const double h = env.period / static_cast<double>(m);
    double sum = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        const double f0 = env.samples[j];
        const double f1 = env.samples[(j + 1) % m];
        sum += 0.5 * (f0 + f1) * h;
    }
    return sum;
}

// Integral of the interpolant over [0, tau] with 0 <= tau <= T.
double tabulated_partial_integral(const DriveEnvelope& env, double tau) {
    const std::size_t m = env.samples.size();
    const double h = env.period / static_cast<double>(m);
    double acc = 0.0;
    for (std::size_t j = 0; j < m && tau > 0.0; ++j) {
        const double f0 = env.samples[j];
        const double f1 = env.samples[(j + 1) % m];
        const double seg = std::min(tau, h);
        const double slope = (f1 - f0) / h;
        acc += f0 * seg + 0.5 * slope * seg * seg;
        tau -= h;
    }
    return acc;
}

}  // namespace

double pulse_area(const DriveEnvelope& env, double eps, double t) {
    env.validate();
    if (t < 0.0) return 0.0;
    switch (env.kind) {
        case DriveEnvelope::Kind::Constant:
            return eps * t;
        case DriveEnvelope::Kind::DeltaTrain:
            // pulses at 0, T, 2T, ...; the k = 0 pulse counts
            return eps * (std::floor(t / env.period) + 1.0);
        case DriveEnvelope::Kind::PeriodicTabulated: {
            const double full = std::floor(t / env.period);
            const double rem = t - full * env.period;
            return eps * (full * tabulated_period_integral(env) +
                          tabulated_partial_integral(env, rem));
        }
    }
    throw std::logic_error("pulse_area: unhandled envelope kind");
}

Complex fourier_coefficient(const DriveEnvelope& env, int n) {
    env.validate();
    switch (env.kind) {
        case DriveEnvelope::Kind::Constant: {
            if (!env.has_period()) {
                throw std::invalid_argument(
                    "fourier_coefficient: constant envelope needs a declared period");
            }
            return n == 0 ? Complex(env.period, 0.0) : Complex(0.0, 0.0);
        }
        case DriveEnvelope::Kind::DeltaTrain:
            // the boundary pulse carries its full weight
            return Complex(1.0, 0.0);
        case DriveEnvelope::Kind::PeriodicTabulated: {
            const std::size_t m = env.samples.size();
            const double h = env.period / static_cast<double>(m);
            if (n == 0) return Complex(tabulated_period_integral(env), 0.0);
            const double w = kTwoPi * n / env.period;
            const Complex iw(0.0, w);
            // per-segment integrals of (f0 + slope*s) e^{-iw(t_j+s)}
            const Complex e_h = std::exp(Complex(0.0, -w * h));
            const Complex i0 = (1.0 - e_h) / iw;
            const Complex i1 = e_h * (Complex(0.0, 1.0) / w * h + 1.0 / (w * w)) - 1.0 / (w * w);
            Complex c(0.0, 0.0);
            for (std::size_t j = 0; j < m; ++j) {
                const double f0 = env.samples[j];
                const double f1 = env.samples[(j + 1) % m];
                const Complex phase = std::exp(Complex(0.0, -w * h * static_cast<double>(j)));
                c += phase * (f0 * i0 + (f1 - f0) / h * i1);
            }
            return c;
        }
    }
    throw std::logic_error("fourier_coefficient: unhandled envelope kind");
}

double factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= static_cast<double>(k);
    return f;
}

Complex b_coefficient(const DriveEnvelope& env, int order, double chi) {
    env.validate();
    if (order < 1) throw std::invalid_argument("b_coefficient: order must be >= 1");
    if (!env.has_period()) {
        throw std::invalid_argument("b_coefficient: envelope needs a declared period");
    }
    const double T = env.period;
    const double a = T * chi * factorial(order - 1) / kTwoPi;

    // resonance guard: a term c_{-m}/( -m + a ) with integer m = a diverges
    const long long m = std::llround(a);
    if (std::abs(a - static_cast<double>(m)) <= 1e-9) {
        const Complex cm = fourier_coefficient(env, static_cast<int>(-m));
        if (std::abs(cm) > 1e-14 * std::max(1.0, T)) {
            throw std::runtime_error("b_coefficient: resonance, a is integer with nonzero c_{-a}");
        }
    }

    switch (env.kind) {
        case DriveEnvelope::Kind::Constant:
            // only c_0 = T survives
            return Complex(T / (kTwoPi * a), 0.0);
        case DriveEnvelope::Kind::DeltaTrain: {
            // all c_n = 1: pair +-n terms, close the tail with digamma
            const int n0 = 64 + static_cast<int>(std::ceil(2.0 * std::abs(a)));
            double s = 1.0 / a;
            for (int n = 1; n <= n0; ++n) {
                s += 2.0 * a / (a * a - static_cast<double>(n) * n);
            }
            s += boost::math::digamma(n0 + 1.0 - a) - boost::math::digamma(n0 + 1.0 + a);
            return Complex(s / kTwoPi, 0.0);
        }
        case DriveEnvelope::Kind::PeriodicTabulated: {
            Complex s = fourier_coefficient(env, 0) / a;
            const int block = 64;
            const int n_cap = 1 << 20;
            for (int start = 1; start <= n_cap; start += block) {
                double block_max = 0.0;
                for (int n = start; n < start + block; ++n) {
                    const Complex cp = fourier_coefficient(env, n);
                    const Complex cm = fourier_coefficient(env, -n);
                    const Complex pair = cp / (n + a) + cm / (a - n);
                    s += pair;
                    block_max = std::max(block_max, std::abs(pair));
                }
                const int n_end = start + block - 1;
                // pairs decay at least like 1/n^3 for the linear interpolant
                if (block_max * n_end / 2.0 < 1e-10 && n_end > 2.0 * std::abs(a)) {
                    return s / kTwoPi;
                }
            }
            throw std::runtime_error("b_coefficient: series did not converge");
        }
    }
    throw std::logic_error("b_coefficient: unhandled envelope kind");
}

}  // namespace kerrsim
