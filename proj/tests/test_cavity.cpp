#include "doctest.h"
#include "spingate/cavity.hpp"

using namespace spingate;

namespace {

CavityParams resonant(double g, double ks, double gamma) {
    CavityParams p;
    p.g = g;
    p.kappa = 1.0;
    p.kappa_s = ks;
    p.gamma = gamma;
    return p;
}

}  // namespace

TEST_CASE("reflection coefficient at resonance") {
    SUBCASE("uncoupled lossless cavity reflects with a pi phase") {
        const Complex r = reflection_coefficient(resonant(0.0, 0.0, 0.1), 0.0, false);
        CHECK(r.real() == doctest::Approx(-1.0).epsilon(1e-15));
        CHECK(r.imag() == 0.0);
    }
    SUBCASE("coupled, g = kappa, gamma = 0.1 kappa") {
        // direct evaluation: 1 - (0.1/2) / ((0.1/2)(1/2) + 1)
        const double expected = 1.0 - 0.05 / 1.025;
        const Complex r = reflection_coefficient(resonant(1.0, 0.0, 0.1), 0.0, true);
        CHECK(r.real() == doctest::Approx(expected).epsilon(1e-14));
        CHECK(std::abs(r.imag()) < 1e-15);
        CHECK(expected == doctest::Approx(0.951220).epsilon(1e-6));
    }
    SUBCASE("side leakage equal to kappa kills the uncoupled reflection") {
        const Complex r = reflection_coefficient(resonant(0.0, 1.0, 0.1), 0.0, false);
        CHECK(std::abs(r) < 1e-15);
    }
    SUBCASE("degenerate denominator only with unphysical gamma = 0, g = 0") {
        CHECK_THROWS_AS(reflection_coefficient(resonant(0.0, 0.0, 0.0), 0.0, true),
                        DegenerateDenominator);
    }
}

TEST_CASE("reflection pair") {
    SUBCASE("strong coupling approaches the ideal pair") {
        const ReflectionPair pair = reflection_pair(resonant(100.0, 0.0, 0.1), 0.0);
        CHECK(std::abs(pair.r0 - Complex(-1.0)) < 1e-12);
        CHECK(std::abs(pair.rh - Complex(1.0)) < 0.01);
    }
    SUBCASE("g = 0 makes both coefficients identical") {
        const ReflectionPair pair = reflection_pair(resonant(0.0, 0.3, 0.1), 0.7);
        CHECK(pair.r0 == pair.rh);
    }
    SUBCASE("ideal pair") {
        const ReflectionPair pair = ideal_reflection_pair();
        CHECK(pair.r0 == Complex(-1.0));
        CHECK(pair.rh == Complex(1.0));
        CHECK(pair.abs_r0() == 1.0);
        CHECK(pair.abs_rh() == 1.0);
    }
}

TEST_CASE("scattering operator") {
    SUBCASE("ideal pair gives diag(-1, 1, 1, -1)") {
        const Mat4 m = scattering_operator(ideal_reflection_pair());
        CHECK(m[0][0] == Complex(-1.0));
        CHECK(m[1][1] == Complex(1.0));
        CHECK(m[2][2] == Complex(1.0));
        CHECK(m[3][3] == Complex(-1.0));
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                if (i != j) CHECK(m[i][j] == Complex(0.0));
            }
        }
    }
    SUBCASE("conventions agree at the resonant ideal point") {
        const Mat4 a = scattering_operator(ideal_reflection_pair(), ScatterConvention::SignedModuli);
        const Mat4 b = scattering_operator(ideal_reflection_pair(), ScatterConvention::FullComplex);
        for (int i = 0; i < 4; ++i) CHECK(a[i][i] == b[i][i]);
    }
    SUBCASE("signed moduli on a lossy pair") {
        const Mat4 m = scattering_operator(ReflectionPair::from_moduli(0.5, 0.9));
        CHECK(m[0][0] == Complex(-0.5));
        CHECK(m[1][1] == Complex(0.9));
        CHECK(m[2][2] == Complex(0.9));
        CHECK(m[3][3] == Complex(-0.5));
    }
    SUBCASE("singular values are the moduli, each twice") {
        const Mat4 m = scattering_operator(ReflectionPair::from_moduli(0.5, 0.9));
        // diagonal operator: singular values are the absolute diagonal entries
        CHECK(std::abs(m[0][0]) == doctest::Approx(0.5));
        CHECK(std::abs(m[3][3]) == doctest::Approx(0.5));
        CHECK(std::abs(m[1][1]) == doctest::Approx(0.9));
        CHECK(std::abs(m[2][2]) == doctest::Approx(0.9));
    }
}

TEST_CASE("reflection coefficient properties over the sampled grid") {
    // g/(kappa+kappa_s) in [0, 3], kappa_s/kappa in [0, 2], gamma = 0.1 kappa,
    // |omega - omega_c| <= 5 kappa
    for (int ig = 0; ig <= 6; ++ig) {
        for (int is = 0; is <= 4; ++is) {
            const double gr = 3.0 * ig / 6.0;
            const double ks = 2.0 * is / 4.0;
            const CavityParams p = CavityParams::from_ratios(gr, ks, 0.1);
            for (int iw = -5; iw <= 5; ++iw) {
                const double w = static_cast<double>(iw);
                const ReflectionPair pair = reflection_pair(p, w);
                CHECK(pair.abs_r0() <= 1.0 + 1e-9);
                CHECK(pair.abs_rh() <= 1.0 + 1e-9);
            }
        }
    }
}

TEST_CASE("reflection coefficient is continuous in omega") {
    const CavityParams p = CavityParams::from_ratios(0.8, 0.4, 0.1);
    const double w0 = 0.37;
    double prev = 1e9;
    for (double delta = 1e-2; delta > 1e-8; delta *= 0.1) {
        const double diff = std::abs(reflection_coefficient(p, w0 + delta, true) -
                                     reflection_coefficient(p, w0, true));
        CHECK(diff < prev);
        prev = diff;
    }
    CHECK(prev < 1e-6);
}

TEST_CASE("resonant lossless limits") {
    // kappa_s = 0: r0 = -1 exactly; rh is real and crosses zero at
    // g^2 = kappa gamma / 4, positive and below one beyond it
    for (double g : {0.2, 0.5, 1.0, 2.4}) {
        const ReflectionPair pair = reflection_pair(resonant(g, 0.0, 0.1), 0.0);
        CHECK(pair.r0.real() == doctest::Approx(-1.0).epsilon(1e-15));
        CHECK(std::abs(pair.r0.imag()) < 1e-15);
        CHECK(pair.rh.real() > 0.0);
        CHECK(pair.rh.real() < 1.0);
        CHECK(std::abs(pair.rh.imag()) < 1e-15);
    }
    // below the crossing the coupled reflection is still negative
    CHECK(reflection_pair(resonant(0.1, 0.0, 0.1), 0.0).rh.real() < 0.0);
    CHECK(std::abs(reflection_pair(resonant(std::sqrt(0.025), 0.0, 0.1), 0.0).rh) < 1e-12);
}

TEST_CASE("dephasing factor") {
    CHECK(dephasing_factor({0.0, 5.0}) == 1.0);
    CHECK(dephasing_factor({1.0, 1.0}) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    CHECK(dephasing_factor({1.0, 1.0}) == doctest::Approx(0.367879).epsilon(1e-6));
    CHECK(dephasing_factor({1.0, 1e12}) == doctest::Approx(1.0).epsilon(1e-11));
    CHECK_THROWS_AS(dephasing_factor({-1.0, 1.0}), Error);
    CHECK_THROWS_AS(dephasing_factor({1.0, 0.0}), Error);
}

TEST_CASE("parameter validation") {
    CavityParams p;
    p.kappa = 0.0;
    CHECK_THROWS_AS(p.validate(), Error);
    CHECK_THROWS_AS(CavityParams::from_ratios(-0.1, 0.0, 0.1), Error);
}
