#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "spingate/errors.hpp"
#include "spingate/linalg.hpp"

namespace spingate {

/// Circular photon polarization.
enum class Pol : int { R = 0, L = 1 };

/// Electron-spin basis state along the cavity axis.
enum class Spin : int { Up = 0, Down = 1 };

/// Name of a photon spatial mode ("1", "18", "in", ...). Nonempty.
using ModeLabel = std::string;

/// Detector analysis basis: |+> = (|R>+|L>)/sqrt2, |-> = (|R>-|L>)/sqrt2.
enum class PolSign : int { Plus = +1, Minus = -1 };

/// One basis ket of the hybrid photon-spin space:
/// photon polarization x spatial mode x one spin value per qubit.
struct BasisKet {
    Pol pol = Pol::R;
    ModeLabel mode;
    std::vector<Spin> spins;

    friend bool operator==(const BasisKet&, const BasisKet&) = default;
    friend bool operator<(const BasisKet& a, const BasisKet& b) {
        if (a.mode != b.mode) return a.mode < b.mode;
        if (a.pol != b.pol) return a.pol < b.pol;
        return a.spins < b.spins;
    }
};

/// Dense state of n spins, dimension 2^n. Index bit convention: the
/// first-listed spin is the most significant bit, Up = 0, Down = 1.
struct SpinState {
    int spin_count = 0;
    std::vector<Complex> amps;

    SpinState() = default;
    SpinState(int n, std::vector<Complex> a) : spin_count(n), amps(std::move(a)) {}

    static SpinState basis(int n, unsigned bits);
    static SpinState uniform(int n);
    static int index_of(const std::vector<Spin>& spins);

    std::size_t dim() const { return amps.size(); }
    double squared_norm() const;
    SpinState normalized() const;
    /// Applies a single-spin operator (Up/Down basis) to spin `index`.
    SpinState apply_single(int index, const Mat2& op) const;
};

Complex inner_product(const SpinState& a, const SpinState& b);

/// Squared-magnitude overlap |<a|b>|^2 of two unit spin states.
double overlap2(const SpinState& a, const SpinState& b);

struct DetectorSpec {
    std::string label;
    ModeLabel mode;
    PolSign basis = PolSign::Plus;

    friend bool operator==(const DetectorSpec&, const DetectorSpec&) = default;
};

struct MeasurementOutcome {
    std::string label;
    double probability = 0.0;
    SpinState spin_state;  // collapsed, renormalized to unit norm
};

/// Sparse amplitude vector over one photon (polarization x spatial mode)
/// tensored with n electron spins. The squared norm may be below one:
/// the deficit is amplitude lost to imperfect cavity reflection.
///
/// Values are immutable after construction; every operation returns a new
/// state, so instances can be shared freely across threads.
class HybridState {
public:
    using AmplitudeMap = std::map<BasisKet, Complex>;

    /// Builds a state from explicit terms. The mode registry is the set of
    /// modes appearing in `terms`.
    /// Throws InconsistentSpinCount or NormExceedsOne on contract violations.
    static HybridState make(int spin_count,
                            const std::vector<std::pair<BasisKet, Complex>>& terms);

    int spin_count() const { return spin_count_; }
    const std::set<ModeLabel>& modes() const { return modes_; }
    const AmplitudeMap& amplitudes() const { return amps_; }
    bool empty() const { return amps_.empty(); }

    double squared_norm() const;
    Complex amplitude(const BasisKet& ket) const;

    /// Registers a mode so that operations may address it even while no
    /// amplitude lives there yet.
    HybridState with_mode(const ModeLabel& mode) const;

    /// Applies `op` in the {R, L} basis to every ket on `mode`. The operator
    /// need not be unitary (cavity reflection is sub-unitary).
    HybridState apply_pol_op(const ModeLabel& mode, const Mat2& op) const;

    /// Applies `op` in the {Up, Down} basis of one spin, across all kets.
    HybridState apply_spin_op(int spin_index, const Mat2& op) const;

    /// Applies a joint operator on (polarization, spin) for kets on `mode`,
    /// in the ordered basis (R Up, L Up, R Down, L Down).
    HybridState apply_joint_pol_spin_op(const ModeLabel& mode, int spin_index,
                                        const Mat4& op) const;

    /// Relabels the `pol` component of mode `from` to mode `to`; all other
    /// amplitudes are untouched and the norm is preserved exactly. When a
    /// target ket is already occupied the amplitudes are summed; with
    /// `strict` set, that raises ModeCollision instead.
    HybridState reroute_mode(Pol pol, const ModeLabel& from, const ModeLabel& to,
                             bool strict = false) const;

    std::string to_string() const;

private:
    HybridState(int spin_count, AmplitudeMap amps, std::set<ModeLabel> modes)
        : spin_count_(spin_count), amps_(std::move(amps)), modes_(std::move(modes)) {}

    void require_mode(const ModeLabel& mode) const;
    void require_spin(int spin_index) const;

    int spin_count_ = 0;
    AmplitudeMap amps_;
    std::set<ModeLabel> modes_;
};

/// <a|b>. Kets are compared by (pol, mode, spins) identity.
/// Throws IncompatibleShapes when the spin counts differ.
Complex inner_product(const HybridState& a, const HybridState& b);

/// Projects the photon onto each detector's (mode, |+/->) entry and factors
/// it out. Returns one entry per detector with nonzero probability, in
/// detector order; collapsed spin states are renormalized to unit norm.
/// The probabilities sum to the squared norm of `state`.
///
/// Throws EmptyState on a normless state and UncoveredMode when a mode that
/// still carries amplitude is not covered by exactly one detector.
std::vector<MeasurementOutcome> measure_photon(const HybridState& state,
                                               const std::vector<DetectorSpec>& detectors);

}  // namespace spingate
