#pragma once

// Scaling-and-squaring Taylor exponential for 2x2 complex matrices.
// Deliberately self-contained (own multiply, no library code) so it can
// serve as an independent oracle for the closed-form exponential.

#include <array>
#include <cmath>
#include <complex>

namespace oracle {

using C = std::complex<double>;
using Mat2 = std::array<C, 4>;  // row-major [[0,1],[2,3]]

inline Mat2 mul(const Mat2& a, const Mat2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

inline Mat2 mat_exp(Mat2 m) {
    double norm = 0.0;
    for (const C& e : m) norm = std::max(norm, std::abs(e));
    int squarings = 0;
    while (norm > 0.25) {
        norm *= 0.5;
        ++squarings;
    }
    double scale = std::ldexp(1.0, -squarings);
    for (C& e : m) e *= scale;

    Mat2 sum{1.0, 0.0, 0.0, 1.0};
    Mat2 term{1.0, 0.0, 0.0, 1.0};
    for (int k = 1; k <= 24; ++k) {
        term = mul(term, m);
        for (C& e : term) e /= static_cast<double>(k);
        for (int i = 0; i < 4; ++i) sum[i] += term[i];
    }
    for (int s = 0; s < squarings; ++s) sum = mul(sum, sum);
    return sum;
}

// exp of the algebra element z0*X + z1*I with X = [[0,1],[1,0]]: the
// matrix [[z1, z0], [z0, z1]]. Entry [0][1] is eta, entry [0][0] is xi.
inline std::pair<C, C> exp_eta_xi(C z0, C z1) {
    Mat2 e = mat_exp({z1, z0, z0, z1});
    return {e[1], e[0]};
}

}  // namespace oracle
