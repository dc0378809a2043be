#include <benchmark/benchmark.h>

#include "spingate/metrics.hpp"

using namespace spingate;

namespace {

GateKind gate_for(int64_t idx) {
    switch (idx) {
        case 0: return GateKind::Cnot;
        case 1: return GateKind::Toffoli;
        default: return GateKind::Fredkin;
    }
}

void BM_Execute(benchmark::State& state) {
    const GateKind kind = gate_for(state.range(0));
    const Netlist nl = builtin_netlist(kind);
    const SpinState in = SpinState::uniform(nl.spin_count);
    const ReflectionPair pair = ReflectionPair::from_moduli(0.9, 0.95);
    for (auto _ : state) {
        benchmark::DoNotOptimize(execute(nl, pair, in));
    }
    state.SetLabel(gate_name(kind));
}
BENCHMARK(BM_Execute)->Arg(0)->Arg(1)->Arg(2);

void BM_ExecuteTraced(benchmark::State& state) {
    const GateKind kind = gate_for(state.range(0));
    const Netlist nl = builtin_netlist(kind);
    const SpinState in = SpinState::uniform(nl.spin_count);
    for (auto _ : state) {
        benchmark::DoNotOptimize(execute_traced(nl, ideal_reflection_pair(), in));
    }
    state.SetLabel(gate_name(kind));
}
BENCHMARK(BM_ExecuteTraced)->Arg(0)->Arg(2);

void BM_SweepPoint(benchmark::State& state) {
    // one full metrics evaluation (simulated + closed forms) at one grid point
    const GateKind kind = gate_for(state.range(0));
    const SpinState in = SpinState::uniform(gate_spin_count(kind));
    const CavityParams params = CavityParams::from_ratios(1.2, 0.4, 0.1);
    const ReflectionPair pair = reflection_pair(params, 0.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(metrics_at_pair(kind, pair, in));
    }
    state.SetLabel(gate_name(kind));
}
BENCHMARK(BM_SweepPoint)->Arg(0)->Arg(1)->Arg(2);

void BM_ParseNetlist(benchmark::State& state) {
    const std::string text = serialize_netlist(builtin_netlist(GateKind::Fredkin));
    for (auto _ : state) {
        benchmark::DoNotOptimize(parse_netlist(text));
    }
}
BENCHMARK(BM_ParseNetlist);

void BM_VerifyTruthTable(benchmark::State& state) {
    const GateKind kind = gate_for(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_truth_table(kind, ideal_reflection_pair(), 1e-10));
    }
    state.SetLabel(gate_name(kind));
}
BENCHMARK(BM_VerifyTruthTable)->Arg(0)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
