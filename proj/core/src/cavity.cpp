#include "spingate/cavity.hpp"

#include <cmath>
#include <string>

namespace spingate {

CavityParams CavityParams::from_ratios(double g_over_kappa_plus_kappas,
                                       double kappas_over_kappa,
                                       double gamma_over_kappa) {
    CavityParams p;
    p.kappa = 1.0;
    p.kappa_s = kappas_over_kappa;
    p.gamma = gamma_over_kappa;
    p.g = g_over_kappa_plus_kappas * (p.kappa + p.kappa_s);
    p.omega_c = 0.0;
    p.omega_x = 0.0;
    p.validate();
    return p;
}

void CavityParams::validate() const {
    if (!(kappa > 0.0)) throw Error("kappa must be positive");
    if (kappa_s < 0.0) throw Error("kappa_s must be nonnegative");
    if (gamma < 0.0) throw Error("gamma must be nonnegative");
    if (g < 0.0) throw Error("g must be nonnegative");
}

Complex reflection_coefficient(const CavityParams& params, double omega, bool coupled) {
    params.validate();
    const Complex i(0.0, 1.0);
    const double g = coupled ? params.g : 0.0;
    const Complex dipole = i * (params.omega_x - omega) + params.gamma / 2.0;
    const Complex cavity = i * (params.omega_c - omega) + params.kappa / 2.0 + params.kappa_s / 2.0;
    const Complex den = dipole * cavity + g * g;
    if (std::abs(den) < 1e-30) {
        throw DegenerateDenominator("reflection coefficient denominator vanishes");
    }
    return 1.0 - params.kappa * dipole / den;
}

ReflectionPair reflection_pair(const CavityParams& params, double omega) {
    return {reflection_coefficient(params, omega, false),
            reflection_coefficient(params, omega, true)};
}

ReflectionPair ideal_reflection_pair() {
    return {Complex(-1.0, 0.0), Complex(1.0, 0.0)};
}

Mat4 scattering_operator(const ReflectionPair& pair, ScatterConvention convention) {
    if (convention == ScatterConvention::SignedModuli) {
        const double m0 = pair.abs_r0();
        const double mh = pair.abs_rh();
        return diag4(-m0, mh, mh, -m0);
    }
    return diag4(pair.r0, pair.rh, pair.rh, pair.r0);
}

void DephasingParams::validate() const {
    if (tau < 0.0) throw Error("tau must be nonnegative");
    if (!(t2 > 0.0)) throw Error("T2 must be positive");
}

double dephasing_factor(const DephasingParams& dp) {
    dp.validate();
    return std::exp(-dp.tau / dp.t2);
}

}  // namespace spingate
