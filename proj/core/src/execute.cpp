#include "spingate/execute.hpp"

#include <cmath>

namespace spingate {

SpinState apply_feedforward(const SpinState& state, const std::vector<FeedForwardStep>& ops) {
    SpinState out = state;
    for (const FeedForwardStep& s : ops) {
        switch (s.op) {
            case FeedForwardOp::I:
                out = out.apply_single(s.spin, identity2());
                break;
            case FeedForwardOp::Z:
                out = out.apply_single(s.spin, sigma_z2(+1));
                break;
            case FeedForwardOp::MinusZ:
                out = out.apply_single(s.spin, sigma_z2(-1));
                break;
        }
    }
    return out;
}

HybridState premeasurement_state(const Netlist& netlist, const ReflectionPair& pair,
                                 const SpinState& spin_in, ScatterConvention convention,
                                 ExecutionTrace* trace) {
    const std::size_t dim = std::size_t{1} << netlist.spin_count;
    if (spin_in.spin_count != netlist.spin_count || spin_in.dim() != dim) {
        throw NonUnitInput("spin input has wrong dimension for " +
                           std::to_string(netlist.spin_count) + " spins");
    }
    if (std::abs(spin_in.squared_norm() - 1.0) > 1e-9) {
        throw NonUnitInput("spin input is not unit norm");
    }

    std::vector<std::pair<BasisKet, Complex>> terms;
    for (std::size_t idx = 0; idx < dim; ++idx) {
        const Complex a = spin_in.amps[idx];
        if (a == Complex(0.0)) continue;
        std::vector<Spin> spins(netlist.spin_count);
        for (int k = 0; k < netlist.spin_count; ++k) {
            spins[k] = (idx >> (netlist.spin_count - 1 - k)) & 1 ? Spin::Down : Spin::Up;
        }
        for (int p = 0; p < 2; ++p) {
            const Complex c = netlist.input_pol[p] * a;
            if (c == Complex(0.0)) continue;
            terms.push_back({BasisKet{static_cast<Pol>(p), netlist.input_mode, spins}, c});
        }
    }
    HybridState state = HybridState::make(netlist.spin_count, terms);

    for (const NetlistStep& step : netlist.steps) {
        state = apply_element(state, step.element, pair, convention);
        if (trace && step.checkpoint) {
            trace->emplace_back(*step.checkpoint, state);
        }
    }
    return state;
}

OutcomeDistribution execute(const Netlist& netlist, const ReflectionPair& pair,
                            const SpinState& spin_in, ScatterConvention convention) {
    const HybridState final_state =
        premeasurement_state(netlist, pair, spin_in, convention, nullptr);
    OutcomeDistribution out;
    for (MeasurementOutcome& mo : measure_photon(final_state, netlist.detectors)) {
        SpinState collapsed = apply_feedforward(mo.spin_state, netlist.feedforward.at(mo.label));
        out.push_back({mo.label, mo.probability, std::move(collapsed), true});
    }
    return out;
}

std::pair<OutcomeDistribution, ExecutionTrace> execute_traced(const Netlist& netlist,
                                                              const ReflectionPair& pair,
                                                              const SpinState& spin_in,
                                                              ScatterConvention convention) {
    ExecutionTrace trace;
    const HybridState final_state =
        premeasurement_state(netlist, pair, spin_in, convention, &trace);
    OutcomeDistribution out;
    for (MeasurementOutcome& mo : measure_photon(final_state, netlist.detectors)) {
        SpinState collapsed = apply_feedforward(mo.spin_state, netlist.feedforward.at(mo.label));
        out.push_back({mo.label, mo.probability, std::move(collapsed), true});
    }
    return {std::move(out), std::move(trace)};
}

}  // namespace spingate
