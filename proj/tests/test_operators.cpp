#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "kerrsim/analytic.hpp"
#include "kerrsim/operators.hpp"
#include "support/reference.hpp"

using namespace kerrsim;
using doctest::Approx;

namespace {
const Complex I(0.0, 1.0);
}

// ---------------------------------------------------------------------------
// ladder operators
// ---------------------------------------------------------------------------

TEST_CASE("annihilation carries sqrt(n) on the superdiagonal") {
    const Operator a = annihilation(4);
    CHECK(std::abs(a(0, 1) - 1.0) < 1e-15);
    CHECK(std::abs(a(1, 2) - std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(a(2, 3) - std::sqrt(3.0)) < 1e-15);
    double off = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (j != i + 1) off = std::max(off, std::abs(a(i, j)));
        }
    }
    CHECK(off == 0.0);
    CHECK(max_abs_diff(creation(4), a.adjoint()) == 0.0);
}

TEST_CASE("one-dimensional space has no ladder") {
    CHECK(annihilation(1).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("number operator identity and the truncation edge") {
    const Operator n_op = creation(4) * annihilation(4);
    Operator expected = Operator::Zero(4, 4);
    expected.diagonal() << 0, 1, 2, 3;
    CHECK(max_abs_diff(n_op, expected) <= 1e-14);

    // a a^dag has the deformed top level: diag(1, 2, 3, 0), not diag(1..4)
    const Operator flipped = annihilation(4) * creation(4);
    Operator deformed = Operator::Zero(4, 4);
    deformed.diagonal() << 1, 2, 3, 0;
    CHECK(max_abs_diff(flipped, deformed) <= 1e-14);
}

TEST_CASE("invalid dimension is rejected") {
    CHECK_THROWS_AS(annihilation(0), std::invalid_argument);
    CHECK_THROWS_AS(fock_state(3, 5), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// matrix exponential
// ---------------------------------------------------------------------------

TEST_CASE("zero exponent gives the identity") {
    const Operator h = kerrsim_test::random_hermitian(5, 11);
    const Operator u = matrix_exponential(h, 0.0);
    CHECK(max_abs_diff(u, Operator::Identity(5, 5)) <= 1e-14);
}

TEST_CASE("two-level drive exponential is the Rabi rotation") {
    // exp(-i t eps (a^dag + a)) on two levels: [[cos, -i sin], [-i sin, cos]]
    const double eps = 0.31, t = 2.7;
    Operator h = Operator::Zero(2, 2);
    h(0, 1) = h(1, 0) = eps;
    const Operator u = matrix_exponential(h, -I * t);
    CHECK(std::abs(u(0, 0) - std::cos(eps * t)) < 1e-14);
    CHECK(std::abs(u(1, 1) - std::cos(eps * t)) < 1e-14);
    CHECK(std::abs(u(0, 1) - (-I * std::sin(eps * t))) < 1e-14);
    CHECK(std::abs(u(1, 0) - (-I * std::sin(eps * t))) < 1e-14);

    // vacuum evolves with probabilities cos^2, sin^2
    const StateVector psi = u * vacuum_state(2);
    CHECK(probabilities(psi)(0) == Approx(std::cos(eps * t) * std::cos(eps * t)).epsilon(1e-12));
    CHECK(probabilities(psi)(1) == Approx(std::sin(eps * t) * std::sin(eps * t)).epsilon(1e-12));
}

TEST_CASE("eigendecomposition route agrees with the series oracle") {
    for (unsigned seed : {1u, 2u, 3u}) {
        const Operator h = kerrsim_test::random_hermitian(6, seed);
        const Complex scale = -I * 1.3;
        const Operator via_eigen = matrix_exponential(h, scale);
        const Operator via_series = kerrsim_test::series_expm(scale * h);
        CHECK(max_abs_diff(via_eigen, via_series) <= 1e-8);
    }
}

TEST_CASE("propagators of Hermitian generators are unitary") {
    for (int dim : {2, 5, 9, 16}) {
        const Operator h = kerrsim_test::random_hermitian(dim, 40 + dim);
        const Operator u = matrix_exponential(h, -I * 0.8);
        CHECK(is_unitary(u, 1e-10));
    }
}

TEST_CASE("anti-Hermitian generators take the exact branch") {
    const Complex alpha(0.4, -0.9);
    const Operator a = annihilation(5);
    const Operator gen = alpha * a.adjoint() - std::conj(alpha) * a;
    const Operator u = matrix_exponential(gen, 1.0);
    CHECK(is_unitary(u, 1e-12));
    CHECK(max_abs_diff(u, kerrsim_test::series_expm(gen)) <= 1e-10);
}

TEST_CASE("general non-normal generators fall back to the series") {
    Operator m = Operator::Zero(3, 3);
    m(0, 1) = 2.0;
    m(1, 2) = Complex(0.0, 1.0);
    m(0, 0) = 0.3;
    const Operator e = matrix_exponential(m, 1.0);
    CHECK(max_abs_diff(e, kerrsim_test::series_expm(m)) <= 1e-12);
}

TEST_CASE("non-finite input is rejected") {
    Operator h = Operator::Zero(2, 2);
    h(0, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(matrix_exponential(h, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(matrix_exponential(Operator::Identity(2, 2),
                                       Complex(std::numeric_limits<double>::infinity(), 0)),
                    std::invalid_argument);
}

// ---------------------------------------------------------------------------
// fidelity and probabilities
// ---------------------------------------------------------------------------

TEST_CASE("fidelity of a state with itself is one") {
    const StateVector psi = fd_coherent_state(Complex(0.3, 0.2), 3);
    CHECK(fidelity(psi, psi) == Approx(1.0).epsilon(1e-12));
}

TEST_CASE("orthogonal Fock states have zero fidelity") {
    CHECK(fidelity(fock_state(4, 0), fock_state(4, 1)) == Approx(0.0).epsilon(1e-15));
}

TEST_CASE("vacuum overlap with the two-level displaced vacuum is cos^2") {
    // 2x2 displacement exponential: exp(0.4 (a^dag - a))|0> = (cos 0.4, sin 0.4)
    const double expected = std::cos(0.4) * std::cos(0.4);
    CHECK(expected == Approx(0.84835).epsilon(1e-4));  // ballpark guard
    CHECK(fidelity(vacuum_state(2), fd_coherent_state(0.4, 1)) ==
          Approx(expected).epsilon(1e-12));
}

TEST_CASE("fidelity ignores global phases and zero-padding") {
    const StateVector psi = fd_coherent_state(Complex(0.5, 0.1), 4);
    const StateVector rotated = std::exp(I * 1.234) * psi;
    CHECK(fidelity(psi, rotated) == Approx(1.0).epsilon(1e-12));

    StateVector padded = StateVector::Zero(9);
    padded.head(psi.size()) = psi;
    CHECK(fidelity(psi, padded) == Approx(1.0).epsilon(1e-12));
}

TEST_CASE("zero-norm states are rejected") {
    CHECK_THROWS_AS(fidelity(StateVector::Zero(3), fock_state(3, 0)), std::invalid_argument);
}

TEST_CASE("probabilities of basic states") {
    Eigen::VectorXd p = probabilities(vacuum_state(5));
    CHECK(p(0) == 1.0);
    CHECK(p.tail(4).cwiseAbs().maxCoeff() == 0.0);

    StateVector sup(3);
    sup << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0), 0.0;
    p = probabilities(sup);
    CHECK(p(0) == Approx(0.5).epsilon(1e-14));
    CHECK(p(1) == Approx(0.5).epsilon(1e-14));

    // quarter-period pulse area splits the two-level state evenly
    p = probabilities(two_level_amplitudes(std::numbers::pi / 4.0));
    CHECK(p(0) == Approx(0.5).epsilon(1e-14));
    CHECK(p(1) == Approx(0.5).epsilon(1e-14));
    CHECK(p.sum() == Approx(1.0).epsilon(1e-12));
}
