#pragma once

// Shared helpers for the unit and acceptance suites: deterministic random
// states, literal constructors for the known intermediate states of the
// three circuits, and an independent branch-enumeration oracle that computes
// outcome states, fidelity and efficiency from closed matrix algebra without
// touching the netlist executor.

#include <random>
#include <vector>

#include "spingate/gates.hpp"

namespace spingate::testing {

using DenseOp = std::vector<Complex>;  // dim x dim row-major

std::mt19937& rng();

/// Random unit spin state, complex Gaussian amplitudes.
SpinState random_spin_state(int n);

/// Random hybrid state over the given modes (both polarizations), norm <= 1.
HybridState random_hybrid_state(int spin_count, const std::vector<ModeLabel>& modes);

/// |<a|b>| treating global phase as irrelevant.
double phase_free_overlap(const SpinState& a, const SpinState& b);

/// max_k | a_k - b_k | over the union of kets.
double max_amplitude_error(const HybridState& a, const HybridState& b);

// ---- literal intermediate states of the three circuits ----
// `alphas` are the input spin amplitudes (dimension 4 for the CNOT,
// 8 otherwise, most-significant bit = first qubit).

HybridState cnot_premeasurement_state(const std::vector<Complex>& alphas);
HybridState toffoli_state_xi1(const std::vector<Complex>& alphas);
HybridState toffoli_state_xi2(const std::vector<Complex>& alphas);
HybridState toffoli_state_xi3(const std::vector<Complex>& alphas);
HybridState toffoli_state_xi4(const std::vector<Complex>& alphas);
HybridState fredkin_state_pi1(const std::vector<Complex>& alphas);
HybridState fredkin_state_xi2(const std::vector<Complex>& alphas);
HybridState fredkin_state_xi3(const std::vector<Complex>& alphas);
HybridState fredkin_state_xi4(const std::vector<Complex>& alphas);

/// The four detector brackets of the Toffoli (modes 26..29) and Fredkin
/// (modes 25..28) pre-measurement states, as unit spin states in detector
/// order, before feed-forward.
std::vector<SpinState> toffoli_detector_brackets(const std::vector<Complex>& alphas);
std::vector<SpinState> fredkin_detector_brackets(const std::vector<Complex>& alphas);

// ---- independent branch-enumeration oracle ----

struct OracleOutcome {
    std::string label;
    double probability = 0.0;
    SpinState spin_state;  // post-feed-forward, unit norm
};

struct OracleResult {
    std::vector<OracleOutcome> outcomes;
    double efficiency = 0.0;

    /// Detection-conditioned fidelity against the ideal gate output.
    double fidelity(GateKind kind, const SpinState& input) const;
};

/// Expands the photon paths of the gate circuit as per-branch spin operators
/// (products of projector and cavity-factor matrices) and evaluates them on
/// `input`. Signed-moduli factors: the coupled transition reflects with +mh,
/// the uncoupled one with -m0.
OracleResult oracle_run(GateKind kind, double m0, double mh, const SpinState& input);

}  // namespace spingate::testing
