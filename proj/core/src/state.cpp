#include "spingate/state.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace spingate {

namespace {

constexpr double kNormSlack = 1e-12;
// Amplitudes below this are dropped when rebuilding a state; far below every
// tolerance used by callers.
constexpr double kAmpFloor = 1e-150;
// Outcomes below this probability are omitted from measurement results.
constexpr double kProbFloor = 1e-18;

}  // namespace

// ---- SpinState ----

SpinState SpinState::basis(int n, unsigned bits) {
    SpinState s;
    s.spin_count = n;
    s.amps.assign(std::size_t{1} << n, Complex(0.0));
    s.amps[bits] = 1.0;
    return s;
}

SpinState SpinState::uniform(int n) {
    SpinState s;
    s.spin_count = n;
    const std::size_t dim = std::size_t{1} << n;
    s.amps.assign(dim, Complex(1.0 / std::sqrt(static_cast<double>(dim))));
    return s;
}

int SpinState::index_of(const std::vector<Spin>& spins) {
    int idx = 0;
    for (Spin v : spins) idx = idx * 2 + static_cast<int>(v);
    return idx;
}

double SpinState::squared_norm() const {
    double s = 0.0;
    for (const Complex& a : amps) s += std::norm(a);
    return s;
}

SpinState SpinState::normalized() const {
    const double n = std::sqrt(squared_norm());
    SpinState out = *this;
    if (n > 0.0) {
        for (Complex& a : out.amps) a /= n;
    }
    return out;
}

SpinState SpinState::apply_single(int index, const Mat2& op) const {
    if (index < 0 || index >= spin_count) {
        throw SpinIndexOutOfRange("spin index " + std::to_string(index) +
                                  " out of range for " + std::to_string(spin_count) +
                                  " spins");
    }
    SpinState out;
    out.spin_count = spin_count;
    out.amps.assign(amps.size(), Complex(0.0));
    const std::size_t bit = std::size_t{1} << (spin_count - 1 - index);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (amps[i] == Complex(0.0)) continue;
        const int v = (i & bit) ? 1 : 0;
        out.amps[i & ~bit] += op[0][v] * amps[i];
        out.amps[i | bit] += op[1][v] * amps[i];
    }
    return out;
}

Complex inner_product(const SpinState& a, const SpinState& b) {
    if (a.spin_count != b.spin_count) {
        throw IncompatibleShapes("spin states have different spin counts");
    }
    Complex s(0.0);
    for (std::size_t i = 0; i < a.amps.size(); ++i) s += std::conj(a.amps[i]) * b.amps[i];
    return s;
}

double overlap2(const SpinState& a, const SpinState& b) {
    return std::norm(inner_product(a, b));
}

// ---- HybridState ----

HybridState HybridState::make(int spin_count,
                              const std::vector<std::pair<BasisKet, Complex>>& terms) {
    AmplitudeMap amps;
    std::set<ModeLabel> modes;
    for (const auto& [ket, amp] : terms) {
        if (static_cast<int>(ket.spins.size()) != spin_count) {
            throw InconsistentSpinCount(
                "term has " + std::to_string(ket.spins.size()) + " spins, state declares " +
                std::to_string(spin_count));
        }
        if (ket.mode.empty()) {
            throw UnknownMode("empty mode label");
        }
        modes.insert(ket.mode);
        amps[ket] += amp;
    }
    HybridState s(spin_count, std::move(amps), std::move(modes));
    const double n2 = s.squared_norm();
    if (n2 > 1.0 + kNormSlack) {
        throw NormExceedsOne("squared norm " + std::to_string(n2) + " exceeds one");
    }
    return s;
}

double HybridState::squared_norm() const {
    double s = 0.0;
    for (const auto& [ket, amp] : amps_) s += std::norm(amp);
    return s;
}

Complex HybridState::amplitude(const BasisKet& ket) const {
    auto it = amps_.find(ket);
    return it == amps_.end() ? Complex(0.0) : it->second;
}

HybridState HybridState::with_mode(const ModeLabel& mode) const {
    HybridState out = *this;
    out.modes_.insert(mode);
    return out;
}

void HybridState::require_mode(const ModeLabel& mode) const {
    if (!modes_.count(mode)) {
        throw UnknownMode("mode '" + mode + "' is not registered");
    }
}

void HybridState::require_spin(int spin_index) const {
    if (spin_index < 0 || spin_index >= spin_count_) {
        throw SpinIndexOutOfRange("spin index " + std::to_string(spin_index) +
                                  " out of range for " + std::to_string(spin_count_) +
                                  " spins");
    }
}

HybridState HybridState::apply_pol_op(const ModeLabel& mode, const Mat2& op) const {
    require_mode(mode);
    AmplitudeMap out;
    for (const auto& [ket, amp] : amps_) {
        if (ket.mode != mode) {
            out[ket] += amp;
            continue;
        }
        const int col = static_cast<int>(ket.pol);
        for (int row = 0; row < 2; ++row) {
            const Complex c = op[row][col] * amp;
            if (std::abs(c) < kAmpFloor) continue;
            BasisKet nk = ket;
            nk.pol = static_cast<Pol>(row);
            out[nk] += c;
        }
    }
    return HybridState(spin_count_, std::move(out), modes_);
}

HybridState HybridState::apply_spin_op(int spin_index, const Mat2& op) const {
    require_spin(spin_index);
    AmplitudeMap out;
    for (const auto& [ket, amp] : amps_) {
        const int col = static_cast<int>(ket.spins[spin_index]);
        for (int row = 0; row < 2; ++row) {
            const Complex c = op[row][col] * amp;
            if (std::abs(c) < kAmpFloor) continue;
            BasisKet nk = ket;
            nk.spins[spin_index] = static_cast<Spin>(row);
            out[nk] += c;
        }
    }
    return HybridState(spin_count_, std::move(out), modes_);
}

HybridState HybridState::apply_joint_pol_spin_op(const ModeLabel& mode, int spin_index,
                                                 const Mat4& op) const {
    require_mode(mode);
    require_spin(spin_index);
    AmplitudeMap out;
    for (const auto& [ket, amp] : amps_) {
        if (ket.mode != mode) {
            out[ket] += amp;
            continue;
        }
        // basis order (R Up, L Up, R Down, L Down)
        const int col = static_cast<int>(ket.spins[spin_index]) * 2 + static_cast<int>(ket.pol);
        for (int row = 0; row < 4; ++row) {
            const Complex c = op[row][col] * amp;
            if (std::abs(c) < kAmpFloor) continue;
            BasisKet nk = ket;
            nk.pol = static_cast<Pol>(row % 2);
            nk.spins[spin_index] = static_cast<Spin>(row / 2);
            out[nk] += c;
        }
    }
    return HybridState(spin_count_, std::move(out), modes_);
}

HybridState HybridState::reroute_mode(Pol pol, const ModeLabel& from, const ModeLabel& to,
                                      bool strict) const {
    require_mode(from);
    AmplitudeMap out;
    for (const auto& [ket, amp] : amps_) {
        if (ket.mode != from || ket.pol != pol) {
            out[ket] += amp;
            continue;
        }
        BasisKet nk = ket;
        nk.mode = to;
        if (strict && (out.count(nk) || amplitude(nk) != Complex(0.0))) {
            throw ModeCollision("reroute target ket on mode '" + to + "' already occupied");
        }
        out[nk] += amp;
    }
    std::set<ModeLabel> modes = modes_;
    modes.insert(to);
    return HybridState(spin_count_, std::move(out), std::move(modes));
}

std::string HybridState::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [ket, amp] : amps_) {
        if (!first) os << "\n";
        first = false;
        char buf[64];
        std::snprintf(buf, sizeof(buf), "(%+.9g%+.9gi)", amp.real(), amp.imag());
        os << buf << " |" << (ket.pol == Pol::R ? 'R' : 'L') << ">_" << ket.mode << " |";
        for (Spin s : ket.spins) os << (s == Spin::Up ? '0' : '1');
        os << ">";
    }
    if (first) os << "(empty)";
    return os.str();
}

Complex inner_product(const HybridState& a, const HybridState& b) {
    if (a.spin_count() != b.spin_count()) {
        throw IncompatibleShapes("states have different spin counts");
    }
    Complex s(0.0);
    const auto& bigger = a.amplitudes().size() < b.amplitudes().size() ? b : a;
    const auto& smaller = a.amplitudes().size() < b.amplitudes().size() ? a : b;
    const bool swapped = &smaller == &b;
    for (const auto& [ket, amp] : smaller.amplitudes()) {
        const Complex other = bigger.amplitude(ket);
        if (swapped) {
            s += std::conj(other) * amp;  // smaller is b
        } else {
            s += std::conj(amp) * other;  // smaller is a
        }
    }
    return s;
}

std::vector<MeasurementOutcome> measure_photon(const HybridState& state,
                                               const std::vector<DetectorSpec>& detectors) {
    if (state.empty() || state.squared_norm() <= 0.0) {
        throw EmptyState("cannot measure a normless state");
    }
    // Every mode still carrying amplitude must be covered by exactly one entry.
    std::map<ModeLabel, int> coverage;
    for (const auto& d : detectors) coverage[d.mode] += 1;
    for (const auto& [ket, amp] : state.amplitudes()) {
        if (std::norm(amp) <= kProbFloor) continue;
        auto it = coverage.find(ket.mode);
        if (it == coverage.end()) {
            throw UncoveredMode("mode '" + ket.mode + "' carries amplitude but no detector");
        }
        if (it->second != 1) {
            throw UncoveredMode("mode '" + ket.mode + "' covered by " +
                                std::to_string(it->second) + " detectors, expected one");
        }
    }

    const int n = state.spin_count();
    const std::size_t dim = std::size_t{1} << n;
    std::vector<MeasurementOutcome> outcomes;
    for (const auto& d : detectors) {
        std::vector<Complex> vec(dim, Complex(0.0));
        double mode_norm = 0.0;
        for (const auto& [ket, amp] : state.amplitudes()) {
            if (ket.mode != d.mode) continue;
            mode_norm += std::norm(amp);
            // <+|R> = <+|L> = <-|R> = 1/sqrt2, <-|L> = -1/sqrt2
            const double w =
                (ket.pol == Pol::L && d.basis == PolSign::Minus) ? -kInvSqrt2 : kInvSqrt2;
            vec[SpinState::index_of(ket.spins)] += w * amp;
        }
        double p = 0.0;
        for (const Complex& c : vec) p += std::norm(c);
        // the detector basis must capture the mode's whole amplitude, else
        // probabilities would not sum to the state's squared norm
        if (mode_norm - p > 1e-12) {
            throw UncoveredMode("detector '" + d.label + "' leaves orthogonal amplitude on mode '" +
                                d.mode + "' unaccounted");
        }
        if (p < kProbFloor) continue;
        const double inv = 1.0 / std::sqrt(p);
        for (Complex& c : vec) c *= inv;
        outcomes.push_back({d.label, p, SpinState(n, std::move(vec))});
    }
    return outcomes;
}

}  // namespace spingate
