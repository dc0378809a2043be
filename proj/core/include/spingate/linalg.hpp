#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace spingate {

using Complex = std::complex<double>;

/// 2x2 complex matrix, row-major.
using Mat2 = std::array<std::array<Complex, 2>, 2>;

/// 4x4 complex matrix, row-major.
using Mat4 = std::array<std::array<Complex, 4>, 4>;

inline constexpr double kInvSqrt2 = 0.70710678118654752440;

inline Mat2 identity2() {
    return {{{1.0, 0.0}, {0.0, 1.0}}};
}

/// Hadamard: |0> -> (|0>+|1>)/sqrt2, |1> -> (|0>-|1>)/sqrt2.
inline Mat2 hadamard2() {
    return {{{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}}};
}

inline Mat2 sigma_z2(int sign = +1) {
    return {{{Complex(sign), 0.0}, {0.0, Complex(-sign)}}};
}

inline Mat4 diag4(Complex a, Complex b, Complex c, Complex d) {
    Mat4 m{};
    m[0][0] = a;
    m[1][1] = b;
    m[2][2] = c;
    m[3][3] = d;
    return m;
}

inline Mat4 identity4() {
    return diag4(1.0, 1.0, 1.0, 1.0);
}

}  // namespace spingate
