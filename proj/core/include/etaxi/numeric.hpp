#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

namespace etaxi {

using Complex = std::complex<double>;

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Reduce x into [0, 2*pi). fmod can land exactly on 2*pi after the
// negative-branch correction, so that case is folded back to 0.
double mod_two_pi(double x);

// Relative max-norm gap between two scalars: |a-b| / max(1, |a|, |b|).
inline double rel_gap(Complex a, Complex b) {
    double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) / scale;
}

inline double rel_gap(double a, double b) {
    double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) / scale;
}

// Gap between two component pairs under one shared scale.
inline double rel_gap2(Complex a0, Complex a1, Complex b0, Complex b1) {
    double num = std::max(std::abs(a0 - b0), std::abs(a1 - b1));
    double scale = std::max({1.0, std::abs(a0), std::abs(a1),
                             std::abs(b0), std::abs(b1)});
    return num / scale;
}

}  // namespace etaxi
