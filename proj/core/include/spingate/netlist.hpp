#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spingate/elements.hpp"

namespace spingate {

enum class FeedForwardOp { I, Z, MinusZ };

struct FeedForwardStep {
    int spin = 0;
    FeedForwardOp op = FeedForwardOp::I;
    friend bool operator==(const FeedForwardStep&, const FeedForwardStep&) = default;
};

struct NetlistStep {
    Element element;
    std::optional<std::string> checkpoint;
    friend bool operator==(const NetlistStep&, const NetlistStep&) = default;
};

/// Executable form of one photonic gate circuit: the photon preparation, the
/// ordered element list, the detector map and the classical feed-forward
/// table keyed by detector outcome.
struct Netlist {
    int spin_count = 0;
    ModeLabel input_mode;
    std::array<Complex, 2> input_pol{Complex(1.0), Complex(0.0)};  // (R, L)
    std::vector<NetlistStep> steps;
    std::vector<DetectorSpec> detectors;
    std::map<std::string, std::vector<FeedForwardStep>> feedforward;

    friend bool operator==(const Netlist&, const Netlist&) = default;
};

/// Parses the line-oriented netlist DSL ('#' comments, whitespace-separated
/// tokens, optional trailing @checkpoint on element lines):
///
///   spins <n>
///   input <mode> <R|L|R+L|R-L>
///   PBS <in> <transmit_to> <reflect_to> [@name]
///   PMPBS <in> <plus_to> <minus_to> [@name]
///   HWP <mode> [@name]
///   WPM <mode> [@name]
///   BS <in_a> <in_b> <out_a> <out_b> [@name]
///   SH <spin_index> [@name]
///   SZ <spin_index> <+|-> [@name]
///   CAV <spin_index> <mode> [@name]
///   SW <from> <to> [@name]
///   detector <label> <mode> <+|->
///   feedforward <label> (<spin_index> <I|Z|-Z>)*
///
/// The result is fully validated (see validate_netlist). Throws ParseError.
Netlist parse_netlist(std::string_view text);

/// Static checks: unique outcome labels, feed-forward covering every
/// detector, spin indices in range, distinct routing modes, and detector
/// modes matching exactly the terminal modes a generic input can occupy.
/// Throws ParseError (line/column 0 for programmatically built netlists).
void validate_netlist(const Netlist& netlist);

/// Canonical DSL text; parse_netlist(serialize_netlist(n)) == n.
std::string serialize_netlist(const Netlist& netlist);

}  // namespace spingate
