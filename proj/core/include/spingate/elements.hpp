#pragma once

#include <variant>

#include "spingate/cavity.hpp"
#include "spingate/state.hpp"

namespace spingate {

// Circuit elements. A physical polarizing beam splitter has two input ports;
// each used port is written as its own Pbs entry (R transmits, L reflects).

struct Pbs {
    ModeLabel in, transmit_to, reflect_to;
    friend bool operator==(const Pbs&, const Pbs&) = default;
};

/// PBS in the {|+>, |->} basis: |+> transmits, |-> reflects.
struct PmPbs {
    ModeLabel in, plus_to, minus_to;
    friend bool operator==(const PmPbs&, const PmPbs&) = default;
};

/// Half-wave plate at 22.5 degrees: polarization Hadamard.
struct Hwp {
    ModeLabel mode;
    friend bool operator==(const Hwp&, const Hwp&) = default;
};

/// Wave plate passed twice around a mirror; net polarization Hadamard.
struct WpMirror {
    ModeLabel mode;
    friend bool operator==(const WpMirror&, const WpMirror&) = default;
};

/// Balanced 50:50 beam splitter:
///   |X>_in_a -> (|X>_out_a + |X>_out_b)/sqrt2
///   |X>_in_b -> (|X>_out_a - |X>_out_b)/sqrt2
struct Bs {
    ModeLabel in_a, in_b, out_a, out_b;
    friend bool operator==(const Bs&, const Bs&) = default;
};

struct SpinH {
    int spin = 0;
    friend bool operator==(const SpinH&, const SpinH&) = default;
};

/// sigma_z (sign +1) or -sigma_z (sign -1) on one spin.
struct SpinZ {
    int spin = 0;
    int sign = +1;
    friend bool operator==(const SpinZ&, const SpinZ&) = default;
};

/// One photon bounce off the cavity holding `spin`, applied to kets on `mode`.
struct CavityEl {
    int spin = 0;
    ModeLabel mode;
    friend bool operator==(const CavityEl&, const CavityEl&) = default;
};

/// Classically timed optical switch: reroutes both polarizations, losslessly.
struct SwitchEl {
    ModeLabel from, to;
    friend bool operator==(const SwitchEl&, const SwitchEl&) = default;
};

using Element = std::variant<Pbs, PmPbs, Hwp, WpMirror, Bs, SpinH, SpinZ, CavityEl, SwitchEl>;

/// Applies one element. Missing input amplitude passes through silently as
/// zero; referenced modes are registered on the result as needed.
HybridState apply_element(const HybridState& state, const Element& element,
                          const ReflectionPair& pair,
                          ScatterConvention convention = ScatterConvention::SignedModuli);

enum class NormClass { Unitary, SubUnitary };

/// A cavity bounce with |r0| or |rh| below one shrinks the norm; every other
/// element preserves it.
NormClass element_norm_class(const Element& element, const ReflectionPair& pair);

/// DSL keyword of the element (PBS, PMPBS, HWP, WPM, BS, SH, SZ, CAV, SW).
const char* element_keyword(const Element& element);

}  // namespace spingate
