#pragma once

#include <utility>

#include "spingate/netlist.hpp"

namespace spingate {

struct Outcome {
    std::string label;
    double probability = 0.0;
    SpinState spin_state;  // unit norm, feed-forward already applied
    bool feedforward_applied = false;
};

/// All nonzero-probability detector outcomes of one run. The probabilities
/// sum to the squared norm of the pre-measurement state (the run's
/// efficiency), which is below one for sub-unitary reflection pairs.
using OutcomeDistribution = std::vector<Outcome>;

/// (checkpoint name, full hybrid state right after the tagged element), in
/// netlist order.
using ExecutionTrace = std::vector<std::pair<std::string, HybridState>>;

/// Applies the listed single-spin operators to a spin state.
SpinState apply_feedforward(const SpinState& state, const std::vector<FeedForwardStep>& ops);

/// Prepares the photon per the netlist, applies every element in order and
/// returns the pre-measurement hybrid state.
/// Throws NonUnitInput unless `spin_in` is unit norm of dimension
/// 2^spin_count.
HybridState premeasurement_state(const Netlist& netlist, const ReflectionPair& pair,
                                 const SpinState& spin_in,
                                 ScatterConvention convention = ScatterConvention::SignedModuli,
                                 ExecutionTrace* trace = nullptr);

/// Full run: preparation, elements, photon measurement at the detectors and
/// classical feed-forward per outcome.
OutcomeDistribution execute(const Netlist& netlist, const ReflectionPair& pair,
                            const SpinState& spin_in,
                            ScatterConvention convention = ScatterConvention::SignedModuli);

/// As execute, additionally returning the state at every named checkpoint.
std::pair<OutcomeDistribution, ExecutionTrace> execute_traced(
    const Netlist& netlist, const ReflectionPair& pair, const SpinState& spin_in,
    ScatterConvention convention = ScatterConvention::SignedModuli);

}  // namespace spingate
