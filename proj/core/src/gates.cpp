#include "spingate/gates.hpp"

#include <cmath>

namespace spingate {

const char* gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::Cnot: return "cnot";
        case GateKind::Toffoli: return "toffoli";
        case GateKind::Fredkin: return "fredkin";
    }
    return "?";
}

int gate_spin_count(GateKind kind) {
    return kind == GateKind::Cnot ? 2 : 3;
}

SpinState SpinOp::apply(const SpinState& in) const {
    const std::size_t d = dim();
    SpinState out;
    out.spin_count = spin_count;
    out.amps.assign(d, Complex(0.0));
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            const Complex v = m[r * d + c];
            if (v != Complex(0.0)) out.amps[r] += v * in.amps[c];
        }
    }
    return out;
}

SpinOp ideal_gate_matrix(GateKind kind) {
    const int n = gate_spin_count(kind);
    const std::size_t d = std::size_t{1} << n;
    SpinOp op;
    op.spin_count = n;
    op.m.assign(d * d, Complex(0.0));
    for (std::size_t in = 0; in < d; ++in) {
        std::size_t out = in;
        switch (kind) {
            case GateKind::Cnot:
                if (in & 0b10) out = in ^ 0b01;
                break;
            case GateKind::Toffoli:
                if ((in & 0b110) == 0b110) out = in ^ 0b001;
                break;
            case GateKind::Fredkin:
                if (in & 0b100) {
                    const std::size_t t1 = (in >> 1) & 1;
                    const std::size_t t2 = in & 1;
                    out = (in & 0b100) | (t2 << 1) | t1;
                }
                break;
        }
        op.m[out * d + in] = 1.0;
    }
    return op;
}

namespace {

// Shorthands for building the circuits. Physical PBSes with two used input
// ports appear as two lines; their never-lit spill ports are u1, u2, ...

NetlistStep step(Element e) { return {std::move(e), std::nullopt}; }
NetlistStep step(Element e, const char* checkpoint) { return {std::move(e), checkpoint}; }

Netlist cnot_netlist() {
    Netlist nl;
    nl.spin_count = 2;  // control = 0 (cavity 1), target = 1 (cavity 2)
    nl.input_mode = "in";
    nl.input_pol = {Complex(kInvSqrt2), Complex(kInvSqrt2)};  // R+L
    nl.steps = {
        step(Pbs{"in", "1", "2"}),
        step(CavityEl{0, "2"}),
        step(Pbs{"1", "4", "u1"}),
        step(Pbs{"2", "u1", "4"}),
        step(Hwp{"4"}),
        step(SpinH{1}),
        step(Pbs{"4", "5", "6"}),
        step(CavityEl{1, "6"}),
        step(Pbs{"5", "9", "u2"}),
        step(Pbs{"6", "u2", "9"}),
        step(SpinH{1}, "pre-measurement"),
        step(PmPbs{"9", "10", "11"}),
    };
    nl.detectors = {{"D+", "10", PolSign::Plus}, {"D-", "11", PolSign::Minus}};
    nl.feedforward = {{"D+", {}}, {"D-", {{0, FeedForwardOp::Z}}}};
    return nl;
}

Netlist toffoli_netlist() {
    Netlist nl;
    nl.spin_count = 3;  // c1 = 0 (cavity 1), c2 = 1 (cavity 2), t = 2 (cavity 3)
    nl.input_mode = "in";
    nl.input_pol = {Complex(kInvSqrt2), Complex(-kInvSqrt2)};  // R-L
    nl.steps = {
        step(Pbs{"in", "1", "2"}),
        step(CavityEl{0, "2"}),
        step(Pbs{"1", "5", "u1"}),
        step(Pbs{"2", "u1", "5"}),
        step(Hwp{"5"}, "Xi1"),
        step(Pbs{"5", "6", "7"}),
        // R arm of PBS3 through cavity 2, lands on 19
        step(Hwp{"6"}),
        step(Pbs{"6", "8", "9"}),
        step(CavityEl{1, "9"}),
        step(Pbs{"8", "19", "u2"}),
        step(Pbs{"9", "u2", "19"}),
        step(Hwp{"19"}),
        // L arm of PBS3 through cavity 2, lands on 18
        step(Hwp{"7"}),
        step(Pbs{"7", "10", "11"}),
        step(CavityEl{1, "11"}),
        step(Pbs{"10", "18", "u3"}),
        step(Pbs{"11", "u3", "18"}),
        step(Hwp{"18"}, "Xi2"),
        // cavity-3 block on the 19 arm, sandwiched by spin Hadamards
        step(SpinH{2}),
        step(Pbs{"19", "20", "21"}),
        step(CavityEl{2, "21"}),
        step(Pbs{"20", "23", "u4"}),
        step(Pbs{"21", "u4", "23"}),
        step(SpinH{2}, "Xi3"),
        step(Bs{"18", "23", "24", "25"}),
        step(PmPbs{"24", "26", "27"}),
        step(PmPbs{"25", "28", "29"}, "Xi4"),
    };
    nl.detectors = {{"D1+", "26", PolSign::Plus},
                    {"D1-", "27", PolSign::Minus},
                    {"D2+", "28", PolSign::Plus},
                    {"D2-", "29", PolSign::Minus}};
    nl.feedforward = {{"D1+", {}},
                      {"D1-", {{0, FeedForwardOp::MinusZ}, {1, FeedForwardOp::Z}}},
                      {"D2+", {{0, FeedForwardOp::Z}}},
                      {"D2-", {{1, FeedForwardOp::MinusZ}}}};
    return nl;
}

Netlist fredkin_netlist() {
    Netlist nl;
    nl.spin_count = 3;  // c = 0 (cavity 1), t1 = 1 (cavity 2), t2 = 2 (cavity 3)
    nl.input_mode = "in";
    nl.input_pol = {Complex(kInvSqrt2), Complex(-kInvSqrt2)};  // R-L
    nl.steps = {
        step(Pbs{"in", "1", "2"}),
        step(CavityEl{0, "2"}),
        step(Pbs{"1", "5", "u1"}),
        step(Pbs{"2", "u1", "5"}),
        step(Hwp{"5"}, "Pi1"),
        step(Pbs{"5", "6", "7"}),
        // L arm: through cavities 2 and 3 in series, parks on 22
        step(Hwp{"7"}),
        step(Pbs{"7", "10", "11"}),
        step(CavityEl{1, "11"}),
        step(CavityEl{2, "11"}),
        step(Pbs{"10", "22", "u2"}),
        step(Pbs{"11", "u2", "22"}),
        step(Hwp{"22"}),
        // R arm, first pass: switch leads it into the same cavity block
        step(Hwp{"6"}),
        step(SwitchEl{"6", "8"}),
        step(Pbs{"8", "9", "12"}),
        step(CavityEl{1, "12"}),
        step(CavityEl{2, "12"}),
        step(Pbs{"9", "20", "u3"}),
        step(Pbs{"12", "u3", "20"}),
        step(WpMirror{"20"}, "Xi2"),
        // second pass, reverse direction, spin Hadamards on both targets
        step(SpinH{1}),
        step(SpinH{2}),
        step(Pbs{"20", "13", "14"}),
        step(CavityEl{2, "14"}),
        step(CavityEl{1, "14"}),
        step(Pbs{"13", "15", "u4"}),
        step(Pbs{"14", "u4", "15"}),
        step(SpinH{1}),
        step(SpinH{2}),
        step(SwitchEl{"15", "21"}, "Xi3"),
        step(Bs{"22", "21", "23", "24"}),
        step(PmPbs{"23", "25", "26"}),
        step(PmPbs{"24", "27", "28"}, "Xi4"),
    };
    nl.detectors = {{"D1+", "25", PolSign::Plus},
                    {"D1-", "26", PolSign::Minus},
                    {"D2+", "27", PolSign::Plus},
                    {"D2-", "28", PolSign::Minus}};
    nl.feedforward = {
        {"D1+", {}},
        {"D1-", {{0, FeedForwardOp::MinusZ}, {1, FeedForwardOp::Z}, {2, FeedForwardOp::Z}}},
        {"D2+", {{0, FeedForwardOp::Z}}},
        {"D2-", {{1, FeedForwardOp::Z}, {2, FeedForwardOp::Z}}}};
    return nl;
}

}  // namespace

Netlist builtin_netlist(GateKind kind) {
    Netlist nl;
    switch (kind) {
        case GateKind::Cnot: nl = cnot_netlist(); break;
        case GateKind::Toffoli: nl = toffoli_netlist(); break;
        case GateKind::Fredkin: nl = fredkin_netlist(); break;
    }
    validate_netlist(nl);
    return nl;
}

TruthTableReport verify_truth_table(GateKind kind, const ReflectionPair& pair,
                                    double tolerance, ScatterConvention convention) {
    const Netlist nl = builtin_netlist(kind);
    const SpinOp ideal = ideal_gate_matrix(kind);
    const int n = nl.spin_count;
    const std::size_t dim = std::size_t{1} << n;

    TruthTableReport report;
    report.kind = kind;
    report.pair = pair;
    report.tolerance = tolerance;
    report.pass = true;
    for (std::size_t bits = 0; bits < dim; ++bits) {
        const SpinState in = SpinState::basis(n, static_cast<unsigned>(bits));
        const SpinState expected = ideal.apply(in);
        const OutcomeDistribution outcomes = execute(nl, pair, in, convention);

        TruthTableRow row;
        row.input_bits = static_cast<unsigned>(bits);
        for (int k = n - 1; k >= 0; --k) {
            row.input_label += (bits >> k) & 1 ? '1' : '0';
        }
        row.worst_overlap = 1.0;
        for (const Outcome& oc : outcomes) {
            row.worst_overlap =
                std::min(row.worst_overlap, std::abs(inner_product(expected, oc.spin_state)));
            row.probability_sum += oc.probability;
        }
        if (outcomes.empty()) row.worst_overlap = 0.0;
        row.pass = row.worst_overlap >= 1.0 - tolerance;
        report.pass = report.pass && row.pass;
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace spingate
