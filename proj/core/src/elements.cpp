#include "spingate/elements.hpp"

namespace spingate {

namespace {

HybridState registered(const HybridState& s, std::initializer_list<ModeLabel> modes) {
    HybridState out = s;
    for (const ModeLabel& m : modes) out = out.with_mode(m);
    return out;
}

HybridState apply_bs(const HybridState& state, const Bs& e) {
    // Mode mixing is not expressible through the per-mode primitives, so the
    // output map is rebuilt term by term.
    std::vector<std::pair<BasisKet, Complex>> terms;
    terms.reserve(2 * state.amplitudes().size());
    for (const auto& [ket, amp] : state.amplitudes()) {
        if (ket.mode == e.in_a || ket.mode == e.in_b) {
            const double sign = ket.mode == e.in_a ? +1.0 : -1.0;
            BasisKet ka = ket;
            ka.mode = e.out_a;
            terms.emplace_back(ka, amp * kInvSqrt2);
            BasisKet kb = ket;
            kb.mode = e.out_b;
            terms.emplace_back(kb, sign * amp * kInvSqrt2);
        } else {
            terms.emplace_back(ket, amp);
        }
    }
    HybridState out = HybridState::make(state.spin_count(), terms);
    for (const ModeLabel& m : state.modes()) out = out.with_mode(m);
    return registered(out, {e.in_a, e.in_b, e.out_a, e.out_b});
}

}  // namespace

HybridState apply_element(const HybridState& state, const Element& element,
                          const ReflectionPair& pair, ScatterConvention convention) {
    return std::visit(
        [&](const auto& e) -> HybridState {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, Pbs>) {
                HybridState s = registered(state, {e.in, e.transmit_to, e.reflect_to});
                s = s.reroute_mode(Pol::R, e.in, e.transmit_to);
                return s.reroute_mode(Pol::L, e.in, e.reflect_to);
            } else if constexpr (std::is_same_v<T, PmPbs>) {
                // change to the +/- basis, route, change back
                HybridState s = registered(state, {e.in, e.plus_to, e.minus_to});
                s = s.apply_pol_op(e.in, hadamard2());
                s = s.reroute_mode(Pol::R, e.in, e.plus_to);
                s = s.reroute_mode(Pol::L, e.in, e.minus_to);
                s = s.apply_pol_op(e.plus_to, hadamard2());
                return s.apply_pol_op(e.minus_to, hadamard2());
            } else if constexpr (std::is_same_v<T, Hwp>) {
                return registered(state, {e.mode}).apply_pol_op(e.mode, hadamard2());
            } else if constexpr (std::is_same_v<T, WpMirror>) {
                return registered(state, {e.mode}).apply_pol_op(e.mode, hadamard2());
            } else if constexpr (std::is_same_v<T, Bs>) {
                return apply_bs(state, e);
            } else if constexpr (std::is_same_v<T, SpinH>) {
                return state.apply_spin_op(e.spin, hadamard2());
            } else if constexpr (std::is_same_v<T, SpinZ>) {
                return state.apply_spin_op(e.spin, sigma_z2(e.sign));
            } else if constexpr (std::is_same_v<T, CavityEl>) {
                return registered(state, {e.mode})
                    .apply_joint_pol_spin_op(e.mode, e.spin,
                                             scattering_operator(pair, convention));
            } else {
                static_assert(std::is_same_v<T, SwitchEl>);
                HybridState s = registered(state, {e.from, e.to});
                s = s.reroute_mode(Pol::R, e.from, e.to);
                return s.reroute_mode(Pol::L, e.from, e.to);
            }
        },
        element);
}

NormClass element_norm_class(const Element& element, const ReflectionPair& pair) {
    if (std::holds_alternative<CavityEl>(element)) {
        if (pair.abs_r0() < 1.0 - 1e-12 || pair.abs_rh() < 1.0 - 1e-12) {
            return NormClass::SubUnitary;
        }
    }
    return NormClass::Unitary;
}

const char* element_keyword(const Element& element) {
    return std::visit(
        [](const auto& e) -> const char* {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, Pbs>) return "PBS";
            else if constexpr (std::is_same_v<T, PmPbs>) return "PMPBS";
            else if constexpr (std::is_same_v<T, Hwp>) return "HWP";
            else if constexpr (std::is_same_v<T, WpMirror>) return "WPM";
            else if constexpr (std::is_same_v<T, Bs>) return "BS";
            else if constexpr (std::is_same_v<T, SpinH>) return "SH";
            else if constexpr (std::is_same_v<T, SpinZ>) return "SZ";
            else if constexpr (std::is_same_v<T, CavityEl>) return "CAV";
            else return "SW";
        },
        element);
}

}  // namespace spingate
