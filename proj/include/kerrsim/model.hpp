#ifndef KERRSIM_MODEL_HPP
#define KERRSIM_MODEL_HPP

#include <string>
#include <vector>

#include "kerrsim/operators.hpp"

namespace kerrsim {

enum class DriveKind { Linear, Parametric };

/// Shape f(t) of the classical drive envelope.
///
/// Constant is f(t) = 1; its period is only needed by the Fourier machinery
/// and must be declared explicitly when used there.  DeltaTrain is a comb of
/// unit-weight Dirac pulses at t = kT.  PeriodicTabulated is the periodic
/// piecewise-linear interpolant through uniform samples on [0, T).
struct DriveEnvelope {
    enum class Kind { Constant, DeltaTrain, PeriodicTabulated };

    Kind kind = Kind::Constant;
    double period = 0.0;  // 0 = undeclared (Constant only)
    std::vector<double> samples;

    static DriveEnvelope constant();
    static DriveEnvelope constant(double declared_period);
    static DriveEnvelope delta_train(double period);
    static DriveEnvelope tabulated(double period, std::vector<double> samples);

    bool has_period() const { return period > 0.0; }
    void validate() const;
};

/// Driven Kerr oscillator: H = (chi/N) (a^dag)^N a^N + eps * D * f(t)
/// with D = a^dag + a (linear) or a^dag^2 + a^2 (parametric).
struct KerrModel {
    int dim = 0;    // simulation truncation dimension
    int order = 0;  // N, the nonlinearity order = target FD dimension
    double chi = 1.0;
    double eps = 0.0;
    DriveKind drive = DriveKind::Linear;
    DriveEnvelope envelope = DriveEnvelope::constant();

    static int default_dim(int order) { return order + 3; }

    bool weak_drive() const { return eps <= 0.2 * chi; }
    bool leakage_resolving() const { return dim >= order + 2; }

    void validate() const;                  // throws on hard violations
    std::vector<std::string> warnings() const;

    Operator kerr() const;
    Operator drive_generator() const;       // eps * D, the f(t)=1 snapshot
    Operator hamiltonian() const;           // kerr() + drive_generator()
};

/// Diagonal N-photon Kerr Hamiltonian (chi/N) n(n-1)...(n-N+1).
Operator kerr_hamiltonian(int order, double chi, int dim);

/// eps*(a^dag + a) or eps*(a^dag^2 + a^2).
Operator drive_hamiltonian(DriveKind kind, double eps, int dim);

/// Pulse area Theta(t) = eps * integral_0^t f.
/// DeltaTrain counts pulses in [0, t] including the one at t = 0.
double pulse_area(const DriveEnvelope& env, double eps, double t);

/// c_n = integral_0^T f(t) exp(-i 2 pi n t / T) dt.
/// Boundary delta pulses contribute full weight, so DeltaTrain has c_n = 1.
Complex fourier_coefficient(const DriveEnvelope& env, int n);

/// B = (1/2pi) sum_n c_n / (n + a) with a = T chi (N-1)! / (2 pi).
/// Summed in symmetric +-n pairs; the DeltaTrain tail beyond the partial sum
/// is closed with a digamma pair.  Throws std::runtime_error when a sits
/// within 1e-9 of an integer whose c_{-a} does not vanish.
Complex b_coefficient(const DriveEnvelope& env, int order, double chi);

double factorial(int n);

}  // namespace kerrsim

#endif
