#pragma once

#include "spingate/errors.hpp"
#include "spingate/linalg.hpp"

namespace spingate {

/// Physical parameters of one singly charged QD in a single-side microcavity.
/// All rates carry the same (arbitrary) energy unit; the library works in
/// units of kappa, see from_ratios().
struct CavityParams {
    double g = 0.0;        ///< QD-cavity coupling strength
    double kappa = 1.0;    ///< cavity decay rate
    double kappa_s = 0.0;  ///< side-leakage rate
    double gamma = 0.0;    ///< exciton decay rate
    double omega_c = 0.0;  ///< cavity mode frequency
    double omega_x = 0.0;  ///< exciton transition frequency

    /// Builds resonant parameters (omega_c = omega_x = 0, kappa = 1) from the
    /// dimensionless ratios used by the sweep axes.
    static CavityParams from_ratios(double g_over_kappa_plus_kappas,
                                    double kappas_over_kappa,
                                    double gamma_over_kappa);

    void validate() const;
};

/// The two reflection amplitudes a photon can see: r0 with the QD transition
/// decoupled (g = 0) and rh with it coupled.
struct ReflectionPair {
    Complex r0{-1.0, 0.0};
    Complex rh{1.0, 0.0};

    /// Builds a pair directly from moduli, with the resonant sign convention
    /// (r0 negative, rh positive).
    static ReflectionPair from_moduli(double m0, double mh) {
        return {Complex(-m0, 0.0), Complex(mh, 0.0)};
    }

    double abs_r0() const { return std::abs(r0); }
    double abs_rh() const { return std::abs(rh); }

    friend bool operator==(const ReflectionPair&, const ReflectionPair&) = default;
};

/// Evaluates the input-output reflection coefficient
///   r(w) = 1 - kappa [i(w_x - w) + gamma/2] /
///          ([i(w_x - w) + gamma/2][i(w_c - w) + kappa/2 + kappa_s/2] + g^2)
/// with g forced to zero when `coupled` is false.
/// Throws DegenerateDenominator when the denominator modulus is below 1e-30
/// (only reachable with unphysical inputs).
Complex reflection_coefficient(const CavityParams& params, double omega, bool coupled);

/// (r0, rh) at the probe frequency `omega`.
ReflectionPair reflection_pair(const CavityParams& params, double omega);

/// The lossless resonant limit: (r0, rh) = (-1, +1).
ReflectionPair ideal_reflection_pair();

/// How cavity scattering is written down when building the 4x4 operator.
enum class ScatterConvention {
    /// diag(-|r0|, |rh|, |rh|, -|r0|): resonant moduli with the resonant
    /// signs. Matches the closed-form fidelity/efficiency expressions, which
    /// are written in |r0|, |rh|. Default everywhere.
    SignedModuli,
    /// diag(r0, rh, rh, r0) with the complex values as evaluated; intended
    /// for off-resonance exploration.
    FullComplex,
};

/// Joint (polarization, spin) scattering operator of one photon bounce, in
/// the ordered basis (R Up, L Up, R Down, L Down):
///   R|Up> -> r0 R|Up>,   L|Up> -> rh L|Up>,
///   R|Dn> -> rh R|Dn>,   L|Dn> -> r0 L|Dn>.
Mat4 scattering_operator(const ReflectionPair& pair,
                         ScatterConvention convention = ScatterConvention::SignedModuli);

/// Exciton dephasing: cavity-photon coherence time tau against the dipole
/// coherence time T2.
struct DephasingParams {
    double tau = 0.0;
    double t2 = 1.0;

    void validate() const;
};

/// Multiplicative fidelity penalty exp(-tau/T2). Applied to reported
/// fidelities only, never to state amplitudes.
double dephasing_factor(const DephasingParams& dp);

}  // namespace spingate
