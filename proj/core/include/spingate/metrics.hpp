#pragma once

#include <iosfwd>
#include <optional>

#include "spingate/gates.hpp"

namespace spingate {

/// Detection-conditioned gate fidelity, averaged over detector outcomes:
///   sum_k p_k |<ideal|psi_k>|^2 / sum_k p_k
/// with psi_k the renormalized post-feed-forward outcome states and
/// |ideal> = ideal_gate_matrix * input. Equals one at the ideal pair.
/// Throws ZeroDetectionProbability when every outcome vanishes.
double simulated_fidelity(GateKind kind, const ReflectionPair& pair, const SpinState& input,
                          ScatterConvention convention = ScatterConvention::SignedModuli);

/// Unconditioned overlap |<real|ideal>|^2 of the (unnormalized) pre-measurement
/// hybrid state against the ideal-pair run. Reported next to the conditioned
/// fidelity for comparison against the closed forms.
double unconditioned_overlap(GateKind kind, const ReflectionPair& pair, const SpinState& input,
                             ScatterConvention convention = ScatterConvention::SignedModuli);

/// Photon survival probability of the run: the squared norm of the
/// pre-measurement state, equal to the sum of all outcome probabilities.
double simulated_efficiency(GateKind kind, const ReflectionPair& pair, const SpinState& input,
                            ScatterConvention convention = ScatterConvention::SignedModuli);

/// Reference closed-form fidelity in |r0|, |rh|, evaluated verbatim. The
/// expressions do not reach one in the lossless limit (cnot 1/4, toffoli
/// 1/16, fredkin 1/52); they are reported for comparison only and are never
/// used as an oracle.
double closed_form_fidelity(GateKind kind, double m0, double mh);

/// Reference closed-form efficiency in |r0|, |rh|:
///   cnot    (2 + mh^2 + m0^2)^2 / 16
///   toffoli (2 + mh^2 + m0^2)^2 (6 + mh^2 + m0^2) / 128
///   fredkin (2 + mh^2 + m0^2) [4 + (mh^2+m0^2)^2] [12 + (mh^2+m0^2)^2] / 512
/// Agrees with simulated_efficiency when |r0| = |rh|; off that diagonal the
/// two differ because the closed forms ignore interference between the
/// direct and cavity arms (see the fidelity comparison note in the README).
double closed_form_efficiency(GateKind kind, double m0, double mh);

/// All metric values at one parameter point.
struct GateMetrics {
    GateKind kind = GateKind::Cnot;
    double g_ratio = 0.0;      // g / (kappa + kappa_s)
    double ks_ratio = 0.0;     // kappa_s / kappa
    double gamma_ratio = 0.0;  // gamma / kappa
    double detuning = 0.0;     // (omega - omega_c) / kappa
    ReflectionPair pair;
    double f_sim = 0.0;
    double eta_sim = 0.0;
    double f_closed = 0.0;
    double eta_closed = 0.0;
    std::optional<double> f_dephased;
};

/// Inclusive-endpoint axis: value(i) = min + (max - min) * i / (steps - 1).
struct AxisSpec {
    double min = 0.0;
    double max = 0.0;
    int steps = 1;

    double value(int i) const;
};

struct SweepGrid {
    AxisSpec g_axis{0.0, 2.4, 31};
    AxisSpec ks_axis{0.0, 1.3, 27};
    double gamma_over_kappa = 0.1;
    double detuning = 0.0;
    std::vector<GateKind> gates{GateKind::Cnot, GateKind::Toffoli, GateKind::Fredkin};

    void validate() const;
};

/// Evaluates every grid point for every requested gate: reflection pair from
/// the ratios, simulated and closed-form fidelity/efficiency, and the
/// dephasing-scaled fidelity when requested. Rows are ordered gate-major,
/// then row-major over (g axis, ks axis). `input` must match each gate's
/// spin count; leave empty to use the uniform superposition per gate.
std::vector<GateMetrics> sweep(const SweepGrid& grid,
                               const std::optional<SpinState>& input = std::nullopt,
                               const std::optional<DephasingParams>& dephasing = std::nullopt);

/// Metrics at one explicit reflection pair (used by the CLI for --ideal and
/// --r0/--rh runs; ratio fields are filled with NaN).
GateMetrics metrics_at_pair(GateKind kind, const ReflectionPair& pair, const SpinState& input,
                            const std::optional<DephasingParams>& dephasing = std::nullopt,
                            ScatterConvention convention = ScatterConvention::SignedModuli);

/// CSV with the fixed header
/// gate,g_over_kappa_plus_kappas,kappas_over_kappa,gamma_over_kappa,abs_r0,abs_rh,F_sim,F_closed,eta_sim,eta_closed,F_dephased
/// and numbers at nine significant digits; F_dephased stays empty when
/// dephasing was not requested.
void write_csv(std::ostream& os, const std::vector<GateMetrics>& rows);

}  // namespace spingate
