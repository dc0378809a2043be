#pragma once

#include "spingate/execute.hpp"

namespace spingate {

enum class GateKind { Cnot, Toffoli, Fredkin };

const char* gate_name(GateKind kind);
int gate_spin_count(GateKind kind);

/// Ideal gate action as a permutation matrix, row-major, dimension
/// 2^spin_count. Basis convention: Up = 0, Down = 1, first-listed qubit is
/// the most significant bit. All three gates trigger on Down controls:
/// CNOT flips the target iff control = Down; Toffoli iff both controls are
/// Down; Fredkin swaps the targets iff the control is Down.
struct SpinOp {
    int spin_count = 0;
    std::vector<Complex> m;  // dim x dim, row-major

    std::size_t dim() const { return std::size_t{1} << spin_count; }
    SpinState apply(const SpinState& in) const;
};

SpinOp ideal_gate_matrix(GateKind kind);

/// The built-in circuit for `kind`. Qubit order: CNOT (control, target);
/// Toffoli (control 1, control 2, target); Fredkin (control, target 1,
/// target 2). Checkpoints: CNOT "pre-measurement"; Toffoli "Xi1".."Xi4";
/// Fredkin "Pi1", "Xi2".."Xi4".
Netlist builtin_netlist(GateKind kind);

struct TruthTableRow {
    unsigned input_bits = 0;
    std::string input_label;     // e.g. "01" (0 = Up, 1 = Down)
    double worst_overlap = 0.0;  // min over outcomes of |<ideal|outcome>|
    double probability_sum = 0.0;
    bool pass = false;
};

struct TruthTableReport {
    GateKind kind = GateKind::Cnot;
    ReflectionPair pair;
    double tolerance = 0.0;
    std::vector<TruthTableRow> rows;
    bool pass = false;
};

/// Runs every computational-basis spin input through the built-in circuit
/// and compares each outcome against the ideal gate output.
TruthTableReport verify_truth_table(GateKind kind, const ReflectionPair& pair,
                                    double tolerance,
                                    ScatterConvention convention = ScatterConvention::SignedModuli);

}  // namespace spingate
