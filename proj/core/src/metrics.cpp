#include "spingate/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

namespace spingate {

namespace {

double pow2(double x) { return x * x; }

}  // namespace

double simulated_fidelity(GateKind kind, const ReflectionPair& pair, const SpinState& input,
                          ScatterConvention convention) {
    const Netlist nl = builtin_netlist(kind);
    const SpinState ideal = ideal_gate_matrix(kind).apply(input);
    const OutcomeDistribution outcomes = execute(nl, pair, input, convention);
    double num = 0.0;
    double den = 0.0;
    for (const Outcome& oc : outcomes) {
        num += oc.probability * overlap2(ideal, oc.spin_state);
        den += oc.probability;
    }
    if (den < 1e-30) {
        throw ZeroDetectionProbability("every detector outcome has zero probability");
    }
    return num / den;
}

double unconditioned_overlap(GateKind kind, const ReflectionPair& pair, const SpinState& input,
                             ScatterConvention convention) {
    const Netlist nl = builtin_netlist(kind);
    const HybridState real = premeasurement_state(nl, pair, input, convention);
    const HybridState ideal = premeasurement_state(nl, ideal_reflection_pair(), input, convention);
    return std::norm(inner_product(real, ideal));
}

double simulated_efficiency(GateKind kind, const ReflectionPair& pair, const SpinState& input,
                            ScatterConvention convention) {
    const Netlist nl = builtin_netlist(kind);
    return premeasurement_state(nl, pair, input, convention).squared_norm();
}

double closed_form_fidelity(GateKind kind, double m0, double mh) {
    switch (kind) {
        case GateKind::Cnot:
            return 0.5 * (1.0 + 2.0 * mh + m0 * mh) /
                   (pow2(1.0 + mh) + pow2(1.0 - m0) + mh * mh * pow2(1.0 - mh) +
                    mh * mh * pow2(1.0 + m0));
        case GateKind::Toffoli:
            return 0.25 * (3.0 + 2.0 * m0 + mh * (5.0 + mh + m0 * (4.0 + m0))) /
                   (std::pow(1.0 + mh, 4) + 2.0 * pow2(mh * mh - 1.0) +
                    2.0 * pow2(mh - 1.0) * pow2(m0 - 1.0) + std::pow(m0 - 1.0, 4) +
                    2.0 * pow2(m0 * m0 - 1.0) + 4.0 * pow2(1.0 + mh) * (1.0 + m0 * m0) +
                    mh * mh * pow2(pow2(mh - 1.0) + pow2(1.0 + m0)));
        case GateKind::Fredkin: {
            const double num =
                4.0 * (1.0 + mh) * (1.0 + m0 * mh) +
                2.0 * (2.0 + m0 + mh) * (2.0 + m0 * m0 + mh * mh) +
                (1.0 + m0) * (4.0 * mh * mh - std::pow(mh, 4) + 2.0 * std::pow(mh, 3) * m0 +
                              2.0 * mh * std::pow(m0, 3) + std::pow(m0, 4));
            const double s2 = mh * mh + m0 * m0;
            const double den =
                (pow2(mh - 1.0) + pow2(1.0 + m0)) * (4.0 + 2.0 * pow2(mh - m0) + pow2(s2)) +
                4.0 * (pow2(1.0 + mh) + pow2(m0 - 1.0)) * (8.0 + 2.0 * pow2(s2)) +
                (2.0 + mh * (mh - 2.0) + m0 * (2.0 + m0)) *
                    (std::pow(mh, 8) - 4.0 * std::pow(mh, 7) * m0 +
                     4.0 * std::pow(mh, 3) * std::pow(m0, 5) +
                     8.0 * mh * mh * std::pow(m0, 6) + 4.0 * mh * std::pow(m0, 7) +
                     std::pow(m0, 8) - 4.0 * std::pow(mh, 5) * m0 * (m0 * m0 - 4.0) +
                     8.0 * std::pow(mh, 6) * (m0 * m0 - 1.0) -
                     2.0 * std::pow(mh, 4) * (4.0 * m0 * m0 + std::pow(m0, 4) - 8.0));
            return 0.125 * num / den;
        }
    }
    return 0.0;
}

double closed_form_efficiency(GateKind kind, double m0, double mh) {
    const double s = mh * mh + m0 * m0;
    switch (kind) {
        case GateKind::Cnot:
            return pow2(2.0 + s) / 16.0;
        case GateKind::Toffoli:
            return pow2(2.0 + s) * (6.0 + s) / 128.0;
        case GateKind::Fredkin:
            return (2.0 + s) * (4.0 + s * s) * (12.0 + s * s) / 512.0;
    }
    return 0.0;
}

double AxisSpec::value(int i) const {
    if (steps <= 1) return min;
    return min + (max - min) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

void SweepGrid::validate() const {
    for (const AxisSpec& axis : {g_axis, ks_axis}) {
        if (axis.steps < 1 || (axis.steps < 2 && axis.max != axis.min)) {
            throw Error("axis needs at least two steps to span a range");
        }
        if (axis.min < 0.0 || axis.max < axis.min) {
            throw Error("axis range must satisfy 0 <= min <= max");
        }
    }
    if (gamma_over_kappa < 0.0) throw Error("gamma/kappa must be nonnegative");
    if (gates.empty()) throw Error("no gates selected");
}

GateMetrics metrics_at_pair(GateKind kind, const ReflectionPair& pair, const SpinState& input,
                            const std::optional<DephasingParams>& dephasing,
                            ScatterConvention convention) {
    GateMetrics m;
    m.kind = kind;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    m.g_ratio = nan;
    m.ks_ratio = nan;
    m.gamma_ratio = nan;
    m.detuning = nan;
    m.pair = pair;
    m.f_sim = simulated_fidelity(kind, pair, input, convention);
    m.eta_sim = simulated_efficiency(kind, pair, input, convention);
    m.f_closed = closed_form_fidelity(kind, pair.abs_r0(), pair.abs_rh());
    m.eta_closed = closed_form_efficiency(kind, pair.abs_r0(), pair.abs_rh());
    if (dephasing) m.f_dephased = m.f_sim * dephasing_factor(*dephasing);
    return m;
}

std::vector<GateMetrics> sweep(const SweepGrid& grid, const std::optional<SpinState>& input,
                               const std::optional<DephasingParams>& dephasing) {
    grid.validate();
    if (dephasing) dephasing->validate();

    std::vector<GateMetrics> rows;
    rows.reserve(static_cast<std::size_t>(grid.g_axis.steps) * grid.ks_axis.steps *
                 grid.gates.size());
    for (GateKind kind : grid.gates) {
        const int n = gate_spin_count(kind);
        SpinState in = input.value_or(SpinState::uniform(n));
        if (in.spin_count != n) {
            throw WrongLength("sweep input has " + std::to_string(in.spin_count) +
                              " spins but gate '" + gate_name(kind) + "' needs " +
                              std::to_string(n));
        }
        for (int i = 0; i < grid.g_axis.steps; ++i) {
            const double g_ratio = grid.g_axis.value(i);
            for (int j = 0; j < grid.ks_axis.steps; ++j) {
                const double ks_ratio = grid.ks_axis.value(j);
                const CavityParams params =
                    CavityParams::from_ratios(g_ratio, ks_ratio, grid.gamma_over_kappa);
                const ReflectionPair pair =
                    reflection_pair(params, params.omega_c + grid.detuning * params.kappa);
                GateMetrics m = metrics_at_pair(kind, pair, in, dephasing);
                m.g_ratio = g_ratio;
                m.ks_ratio = ks_ratio;
                m.gamma_ratio = grid.gamma_over_kappa;
                m.detuning = grid.detuning;
                rows.push_back(std::move(m));
            }
        }
    }
    return rows;
}

void write_csv(std::ostream& os, const std::vector<GateMetrics>& rows) {
    os << "gate,g_over_kappa_plus_kappas,kappas_over_kappa,gamma_over_kappa,"
          "abs_r0,abs_rh,F_sim,F_closed,eta_sim,eta_closed,F_dephased\n";
    char buf[512];
    for (const GateMetrics& m : rows) {
        std::snprintf(buf, sizeof(buf), "%s,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g",
                      gate_name(m.kind), m.g_ratio, m.ks_ratio, m.gamma_ratio,
                      m.pair.abs_r0(), m.pair.abs_rh(), m.f_sim, m.f_closed, m.eta_sim,
                      m.eta_closed);
        os << buf << ",";
        if (m.f_dephased) {
            std::snprintf(buf, sizeof(buf), "%.9g", *m.f_dephased);
            os << buf;
        }
        os << "\n";
    }
}

}  // namespace spingate
