#ifndef KERRSIM_DYNAMICS_HPP
#define KERRSIM_DYNAMICS_HPP

#include <utility>
#include <vector>

#include "kerrsim/model.hpp"
#include "kerrsim/operators.hpp"

namespace kerrsim {

struct KickSchedule {
    double period = 0.0;
    int n_pulses = 0;
    void validate() const;
};

/// Time series of level probabilities, plus fidelity against a fixed target
/// state when one was supplied (empty otherwise).
struct SimulationResult {
    std::vector<double> times;
    std::vector<Eigen::VectorXd> probs;
    std::vector<double> fidelity_vs_target;
};

/// Eigendecomposition-backed propagator for a time-independent Hermitian H;
/// evolve() applies exp(-iHt) without re-diagonalizing.
class UnitaryPropagator {
  public:
    explicit UnitaryPropagator(const Operator& h);
    StateVector evolve(const StateVector& psi0, double t) const;

  private:
    Eigen::MatrixXcd vecs_;
    Eigen::VectorXd vals_;
};

/// exp(-iHt)|psi0> with H = kerr + drive generator.  Requires a constant
/// envelope; time-shaped drives go through the kicked engine.
StateVector evolve_unitary(const KerrModel& model, const StateVector& psi0, double t);

/// Uniformly sampled continuous evolution over [0, duration].
SimulationResult continuous_series(const KerrModel& model, const StateVector& psi0,
                                   double duration, int samples,
                                   const StateVector* target = nullptr);

/// {U_free, U_kick}: free Kerr evolution over one period and the
/// integrated-pulse kick exp(-i * drive generator).
std::pair<Operator, Operator> kick_operators(const KerrModel& model, double period);

/// Delta-kicked evolution: each period is free Kerr evolution followed by a
/// kick; the state is recorded after every period (row 0 is the initial
/// state).
SimulationResult evolve_kicked(const KerrModel& model, const StateVector& psi0,
                               const KickSchedule& schedule,
                               const StateVector* target = nullptr);

/// Exact Fock-basis solution of the damped (chi/2)(a^dag)^2 a^2 Kerr master
/// equation over a time T.  gamma = 0 reduces to the unitary Kerr phase
/// conjugation.  Throws std::invalid_argument for gamma < 0.
DensityMatrix damped_kerr_step(const DensityMatrix& rho, double chi, double gamma, double T);

/// Kicked evolution with cavity loss: per period a damped Kerr step followed
/// by the unitary kick conjugation.
SimulationResult evolve_kicked_dissipative(const KerrModel& model, const DensityMatrix& rho0,
                                           double gamma, const KickSchedule& schedule,
                                           const StateVector* target = nullptr);

struct OdeOracleResult {
    StateVector state;               // truncated back to model.dim
    double discarded_tail_norm = 0;  // norm of the amplitude above model.dim
};

/// Independent check of the propagator route: integrates the amplitude ODEs
/// i dC_n/dt = H C in a dim_big-dimensional space with an adaptive
/// Fehlberg 7(8) stepper (rel 1e-10, abs 1e-12).
OdeOracleResult ode_oracle(const KerrModel& model, const StateVector& psi0, double t,
                           int dim_big);

}  // namespace kerrsim

#endif
