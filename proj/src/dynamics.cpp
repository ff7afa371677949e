#include "kerrsim/dynamics.hpp"

#include <algorithm>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <stdexcept>

namespace kerrsim {

void KickSchedule::validate() const {
    if (period <= 0.0) throw std::invalid_argument("KickSchedule: period must be > 0");
    if (n_pulses < 0) throw std::invalid_argument("KickSchedule: n_pulses must be >= 0");
}

UnitaryPropagator::UnitaryPropagator(const Operator& h) {
    if (!is_hermitian(h, 1e-10 * std::max(1.0, h.cwiseAbs().maxCoeff()))) {
        throw std::invalid_argument("UnitaryPropagator: generator must be Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Operator> es(h);
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("UnitaryPropagator: eigendecomposition failed");
    }
    vecs_ = es.eigenvectors();
    vals_ = es.eigenvalues();
}

StateVector UnitaryPropagator::evolve(const StateVector& psi0, double t) const {
    Eigen::VectorXcd modal = vecs_.adjoint() * psi0;
    for (Eigen::Index i = 0; i < vals_.size(); ++i) {
        modal(i) *= std::exp(Complex(0.0, -vals_(i) * t));
    }
    return vecs_ * modal;
}

namespace {

void require_constant_envelope(const KerrModel& model, const char* who) {
    if (model.envelope.kind != DriveEnvelope::Kind::Constant) {
        throw std::invalid_argument(std::string(who) +
                                    ": only the constant envelope is supported; "
                                    "use the kicked engine for pulsed drives");
    }
}

double target_fidelity(const StateVector& target, const StateVector& psi) {
    return fidelity(target, psi);
}

double target_fidelity(const StateVector& target, const DensityMatrix& rho) {
    const Eigen::Index n = std::min<Eigen::Index>(target.size(), rho.rows());
    const Complex f = target.head(n).adjoint() * rho.topLeftCorner(n, n) * target.head(n);
    return std::clamp(f.real(), 0.0, 1.0);
}

}  // namespace

StateVector evolve_unitary(const KerrModel& model, const StateVector& psi0, double t) {
    model.validate();
    require_constant_envelope(model, "evolve_unitary");
    if (psi0.size() != model.dim) {
        throw std::invalid_argument("evolve_unitary: psi0 dimension != model.dim");
    }
    return UnitaryPropagator(model.hamiltonian()).evolve(psi0, t);
}

SimulationResult continuous_series(const KerrModel& model, const StateVector& psi0,
                                   double duration, int samples, const StateVector* target) {
    model.validate();
    require_constant_envelope(model, "continuous_series");
    if (samples < 2) throw std::invalid_argument("continuous_series: samples must be >= 2");
    if (duration < 0.0) throw std::invalid_argument("continuous_series: negative duration");

    UnitaryPropagator prop(model.hamiltonian());
    SimulationResult out;
    out.times.reserve(samples);
    out.probs.reserve(samples);
    for (int i = 0; i < samples; ++i) {
        const double t = duration * static_cast<double>(i) / (samples - 1);
        const StateVector psi = prop.evolve(psi0, t);
        out.times.push_back(t);
        out.probs.push_back(probabilities(psi));
        if (target) out.fidelity_vs_target.push_back(target_fidelity(*target, psi));
    }
    return out;
}

std::pair<Operator, Operator> kick_operators(const KerrModel& model, double period) {
    model.validate();
    if (period <= 0.0) throw std::invalid_argument("kick_operators: period must be > 0");
    Operator u_free = matrix_exponential(model.kerr(), Complex(0.0, -period));
    Operator u_kick = matrix_exponential(model.drive_generator(), Complex(0.0, -1.0));
    return {std::move(u_free), std::move(u_kick)};
}

SimulationResult evolve_kicked(const KerrModel& model, const StateVector& psi0,
                               const KickSchedule& schedule, const StateVector* target) {
    schedule.validate();
    if (psi0.size() != model.dim) {
        throw std::invalid_argument("evolve_kicked: psi0 dimension != model.dim");
    }
    auto [u_free, u_kick] = kick_operators(model, schedule.period);

    SimulationResult out;
    StateVector psi = psi0;
    auto record = [&](int k) {
        out.times.push_back(k * schedule.period);
        out.probs.push_back(probabilities(psi));
        if (target) out.fidelity_vs_target.push_back(target_fidelity(*target, psi));
    };
    record(0);
    for (int k = 1; k <= schedule.n_pulses; ++k) {
        psi = u_kick * (u_free * psi);  // free evolution, then the kick
        record(k);
    }
    return out;
}

DensityMatrix damped_kerr_step(const DensityMatrix& rho, double chi, double gamma, double T) {
    const int dim = static_cast<int>(rho.rows());
    if (rho.cols() != dim || dim < 1) {
        throw std::invalid_argument("damped_kerr_step: rho must be square");
    }
    if (chi <= 0.0) throw std::invalid_argument("damped_kerr_step: chi must be > 0");
    if (T <= 0.0) throw std::invalid_argument("damped_kerr_step: T must be > 0");
    if (gamma < 0.0) throw std::invalid_argument("damped_kerr_step: negative damping");

    const double theta = chi * T;
    if (gamma == 0.0) {
        // lossless limit: conjugation by exp(-i (theta/2) n(n-1))
        Eigen::VectorXcd phase(dim);
        for (int n = 0; n < dim; ++n) {
            phase(n) = std::exp(Complex(0.0, -0.5 * theta * n * (n - 1)));
        }
        return phase.asDiagonal() * rho * phase.asDiagonal().toDenseMatrix().adjoint();
    }

    const double kappa = gamma / chi;
    std::vector<double> fact(dim);
    fact[0] = 1.0;
    for (int n = 1; n < dim; ++n) fact[n] = fact[n - 1] * n;

    DensityMatrix out = DensityMatrix::Zero(dim, dim);
    for (int p = 0; p < dim; ++p) {
        for (int q = 0; q <= p; ++q) {
            const int d = p - q;
            // g^(p+q)/2 must use the accumulated exponent, not the principal
            // branch: theta*d routinely exceeds pi
            const Complex log_g(-kappa * theta, -theta * d);
            const Complex g = std::exp(log_g);
            const Complex pref = std::exp(Complex(0.0, 0.5 * theta * d)) *
                                 std::exp(log_g * (0.5 * (p + q))) /
                                 std::sqrt(fact[p] * fact[q]);
            const Complex ratio = (1.0 - g) / Complex(1.0, d / kappa);
            Complex sum(0.0, 0.0);
            Complex ratio_pow(1.0, 0.0);
            for (int n = p; n < dim; ++n) {
                sum += rho(n, n - d) * std::sqrt(fact[n] * fact[n - d]) / fact[n - p] * ratio_pow;
                ratio_pow *= ratio;
            }
            out(p, q) = pref * sum;
            if (p != q) out(q, p) = std::conj(out(p, q));
        }
    }
    return out;
}

SimulationResult evolve_kicked_dissipative(const KerrModel& model, const DensityMatrix& rho0,
                                           double gamma, const KickSchedule& schedule,
                                           const StateVector* target) {
    schedule.validate();
    if (rho0.rows() != model.dim || rho0.cols() != model.dim) {
        throw std::invalid_argument("evolve_kicked_dissipative: rho0 dimension != model.dim");
    }
    if (model.order != 2) {
        throw std::invalid_argument(
            "evolve_kicked_dissipative: the damped Kerr map covers the two-photon "
            "nonlinearity only (order = 2)");
    }
    auto [u_free, u_kick] = kick_operators(model, schedule.period);
    (void)u_free;  // the lossy step replaces the free unitary

    SimulationResult out;
    DensityMatrix rho = rho0;
    auto record = [&](int k) {
        out.times.push_back(k * schedule.period);
        out.probs.push_back(rho.diagonal().real());
        if (target) out.fidelity_vs_target.push_back(target_fidelity(*target, rho));
    };
    record(0);
    for (int k = 1; k <= schedule.n_pulses; ++k) {
        rho = damped_kerr_step(rho, model.chi, gamma, schedule.period);
        rho = u_kick * rho * u_kick.adjoint();
        record(k);
    }
    return out;
}

OdeOracleResult ode_oracle(const KerrModel& model, const StateVector& psi0, double t,
                           int dim_big) {
    model.validate();
    require_constant_envelope(model, "ode_oracle");
    if (dim_big < model.dim) {
        throw std::invalid_argument("ode_oracle: dim_big must be >= model.dim");
    }
    if (psi0.size() != model.dim) {
        throw std::invalid_argument("ode_oracle: psi0 dimension != model.dim");
    }

    KerrModel big = model;
    big.dim = dim_big;
    const Operator h = big.hamiltonian();
    if (h.imag().cwiseAbs().maxCoeff() > 1e-14) {
        throw std::logic_error("ode_oracle: expected a real Hamiltonian matrix");
    }
    const Eigen::MatrixXd hr = h.real();

    // amplitudes interleaved as [Re C; Im C]; dC/dt = -i H C
    using state_t = std::vector<double>;
    auto rhs = [&hr, dim_big](const state_t& y, state_t& dydt, double /*t*/) {
        Eigen::Map<const Eigen::VectorXd> u(y.data(), dim_big);
        Eigen::Map<const Eigen::VectorXd> v(y.data() + dim_big, dim_big);
        Eigen::Map<Eigen::VectorXd> du(dydt.data(), dim_big);
        Eigen::Map<Eigen::VectorXd> dv(dydt.data() + dim_big, dim_big);
        du = hr * v;
        dv = -(hr * u);
    };

    state_t y(2 * dim_big, 0.0);
    for (int n = 0; n < model.dim; ++n) {
        y[n] = psi0(n).real();
        y[dim_big + n] = psi0(n).imag();
    }

    namespace ode = boost::numeric::odeint;
    auto stepper = ode::make_controlled(1e-12, 1e-10, ode::runge_kutta_fehlberg78<state_t>());
    double now = 0.0;
    double dt = std::min(0.1, std::max(t, 1e-6));
    const double dt_floor = 1e-14 * std::max(1.0, t);
    long iterations = 0;
    while (now < t) {
        dt = std::min(dt, t - now);
        const auto res = stepper.try_step(rhs, y, now, dt);
        if (res == ode::fail && dt < dt_floor) {
            throw std::runtime_error("ode_oracle: step-size underflow");
        }
        if (++iterations > 50'000'000L) {
            throw std::runtime_error("ode_oracle: integration failed to converge");
        }
    }

    OdeOracleResult out;
    out.state = StateVector(model.dim);
    for (int n = 0; n < model.dim; ++n) {
        out.state(n) = Complex(y[n], y[dim_big + n]);
    }
    double tail = 0.0;
    for (int n = model.dim; n < dim_big; ++n) {
        tail += y[n] * y[n] + y[dim_big + n] * y[dim_big + n];
    }
    out.discarded_tail_norm = std::sqrt(tail);
    return out;
}

}  // namespace kerrsim
