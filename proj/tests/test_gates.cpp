#include <cmath>

#include "doctest.h"
#include "spingate/gates.hpp"
#include "test_support.hpp"

using namespace spingate;
namespace st = spingate::testing;

namespace {
const ReflectionPair kIdeal = ideal_reflection_pair();
}

TEST_CASE("ideal gate matrices") {
    SUBCASE("CNOT flips the target iff the control is down") {
        const SpinOp m = ideal_gate_matrix(GateKind::Cnot);
        const SpinState out = m.apply(SpinState::basis(2, 0b10));
        CHECK(out.amps[0b11] == Complex(1.0));
        const SpinState idle = m.apply(SpinState::basis(2, 0b01));
        CHECK(idle.amps[0b01] == Complex(1.0));
    }
    SUBCASE("Toffoli needs both controls down") {
        const SpinOp m = ideal_gate_matrix(GateKind::Toffoli);
        const SpinState same = m.apply(SpinState::basis(3, 0b101));
        CHECK(same.amps[0b101] == Complex(1.0));
        const SpinState flipped = m.apply(SpinState::basis(3, 0b110));
        CHECK(flipped.amps[0b111] == Complex(1.0));
    }
    SUBCASE("Fredkin swaps the targets iff the control is down") {
        const SpinOp m = ideal_gate_matrix(GateKind::Fredkin);
        const SpinState swapped = m.apply(SpinState::basis(3, 0b101));
        CHECK(swapped.amps[0b110] == Complex(1.0));
        const SpinState idle = m.apply(SpinState::basis(3, 0b011));
        CHECK(idle.amps[0b011] == Complex(1.0));
    }
    SUBCASE("permutation matrices, involutive") {
        for (GateKind kind : {GateKind::Cnot, GateKind::Toffoli, GateKind::Fredkin}) {
            const SpinOp m = ideal_gate_matrix(kind);
            const std::size_t d = m.dim();
            for (std::size_t c = 0; c < d; ++c) {
                int ones = 0;
                for (std::size_t r = 0; r < d; ++r) {
                    if (m.m[r * d + c] != Complex(0.0)) {
                        CHECK(m.m[r * d + c] == Complex(1.0));
                        ++ones;
                    }
                }
                CHECK(ones == 1);
            }
            // M^2 = I on a random state
            const SpinState psi = st::random_spin_state(m.spin_count);
            const SpinState twice = m.apply(m.apply(psi));
            for (std::size_t i = 0; i < psi.dim(); ++i) {
                CHECK(std::abs(twice.amps[i] - psi.amps[i]) < 1e-14);
            }
        }
    }
}

TEST_CASE("truth tables pass at the ideal pair") {
    for (GateKind kind : {GateKind::Cnot, GateKind::Toffoli, GateKind::Fredkin}) {
        const TruthTableReport report = verify_truth_table(kind, kIdeal, 1e-10);
        CHECK(report.pass);
        CHECK(report.rows.size() == (kind == GateKind::Cnot ? 4u : 8u));
        for (const TruthTableRow& row : report.rows) {
            CHECK(row.worst_overlap == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(row.probability_sum == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("lossy truth table degrades where branches acquire unequal amplitudes") {
    const TruthTableReport report =
        verify_truth_table(GateKind::Cnot, ReflectionPair::from_moduli(0.9, 0.9), 1e-10);
    CHECK(!report.pass);
    double worst = 1.0;
    for (const TruthTableRow& row : report.rows) {
        worst = std::min(worst, row.worst_overlap);
        CHECK(row.probability_sum < 1.0);
    }
    CHECK(worst < 1.0);
    CHECK(worst > 0.99);
    // regression anchor, cross-checked against the branch-enumeration oracle
    CHECK(worst == doctest::Approx(0.99829444547712).epsilon(1e-9));
}

TEST_CASE("random superposition inputs match the ideal gate at the ideal pair") {
    for (GateKind kind : {GateKind::Cnot, GateKind::Toffoli, GateKind::Fredkin}) {
        const Netlist nl = builtin_netlist(kind);
        const SpinOp ideal = ideal_gate_matrix(kind);
        for (int trial = 0; trial < 100; ++trial) {
            const SpinState in = st::random_spin_state(nl.spin_count);
            const SpinState expected = ideal.apply(in);
            for (const Outcome& oc : execute(nl, kIdeal, in)) {
                CHECK(st::phase_free_overlap(expected, oc.spin_state) >= 1.0 - 1e-10);
            }
        }
    }
}

TEST_CASE("built-in netlists satisfy the parse-time invariants") {
    for (GateKind kind : {GateKind::Cnot, GateKind::Toffoli, GateKind::Fredkin}) {
        CHECK_NOTHROW(validate_netlist(builtin_netlist(kind)));
    }
    // element sequence starts with the first routing PBS and the control cavity
    const Netlist cnot = builtin_netlist(GateKind::Cnot);
    CHECK(std::holds_alternative<Pbs>(cnot.steps[0].element));
    CHECK(std::holds_alternative<CavityEl>(cnot.steps[1].element));
    CHECK(std::get<CavityEl>(cnot.steps[1].element).spin == 0);
    CHECK(cnot.detectors.size() == 2);
    CHECK(builtin_netlist(GateKind::Toffoli).detectors.size() == 4);
    // the Fredkin routes its second pass through the block with switches,
    // and each target cavity is bounced twice on that arm
    const Netlist fredkin = builtin_netlist(GateKind::Fredkin);
    int switches = 0, t1_bounces = 0;
    for (const NetlistStep& step : fredkin.steps) {
        switches += std::holds_alternative<SwitchEl>(step.element);
        if (const auto* cav = std::get_if<CavityEl>(&step.element)) {
            t1_bounces += cav->spin == 1;
        }
    }
    CHECK(switches == 2);
    CHECK(t1_bounces == 3);  // once on the L arm, twice on the switched arm
}

TEST_CASE("Fredkin leaves symmetric target states alone") {
    const Netlist nl = builtin_netlist(GateKind::Fredkin);
    for (int trial = 0; trial < 20; ++trial) {
        // random state of the form |down>_c x symmetric(t1, t2)
        const SpinState r = st::random_spin_state(3);
        SpinState sym(3, std::vector<Complex>(8, 0.0));
        for (unsigned i = 4; i < 8; ++i) {
            const unsigned swapped = 4u | ((i & 1u) << 1) | ((i >> 1) & 1u);
            sym.amps[i] = r.amps[i] + r.amps[swapped];
        }
        sym = sym.normalized();
        for (const Outcome& oc : execute(nl, kIdeal, sym)) {
            CHECK(st::phase_free_overlap(sym, oc.spin_state) >= 1.0 - 1e-10);
        }
    }
}
