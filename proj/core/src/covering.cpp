#include "etaxi/covering.hpp"

#include <cmath>
#include <numbers>

namespace etaxi {

CylinderPoint::CylinderPoint(double u0_in, double v0_in, double u1_in,
                             double v1_in)
    : u0(u0_in), v0(mod_two_pi(v0_in)), u1(u1_in), v1(mod_two_pi(v1_in)) {
    if (!is_finite(u0_in) || !is_finite(v0_in) || !is_finite(u1_in) ||
        !is_finite(v1_in)) {
        throw NonFiniteError("CylinderPoint: non-finite coordinate");
    }
}

V0Point exp_map(const AlgebraVector& v) {
    if (!is_finite(v.z0) || !is_finite(v.z1)) {
        throw NonFiniteError("exp_map: non-finite component");
    }
    if (std::abs(v.z0.real()) + std::abs(v.z1.real()) > kExpEnvelope) {
        throw OverflowError("exp_map: outside the double-range envelope");
    }
    Complex e = std::exp(v.z1);
    return make_point(e * std::sinh(v.z0), e * std::cosh(v.z0));
}

namespace {

// Complex logarithm with the argument taken in [0, 2pi).
Complex log_principal(Complex z) {
    return {std::log(std::abs(z)), mod_two_pi(std::arg(z))};
}

}  // namespace

AlgebraVector log_map(const V0Point& p) {
    DiagonalPair d = to_diagonal(p);
    Complex lu = log_principal(d.u);
    Complex lw = log_principal(d.w);
    return {0.5 * (lw - lu), 0.5 * (lw + lu)};
}

CylinderPoint project(const AlgebraVector& v) {
    if (!is_finite(v.z0) || !is_finite(v.z1)) {
        throw NonFiniteError("project: non-finite component");
    }
    return CylinderPoint(v.z0.real(), v.z0.imag(), v.z1.real(), v.z1.imag());
}

V0Point lift_q(const CylinderPoint& c) {
    return exp_map({Complex(c.u0, c.v0), Complex(c.u1, c.v1)});
}

std::optional<LatticeShift> lattice_shift_between(const AlgebraVector& a,
                                                  const AlgebraVector& b,
                                                  double tol) {
    constexpr double pi = std::numbers::pi;
    AlgebraVector d = a - b;
    double i0 = d.z0.imag();
    double i1 = d.z1.imag();
    if (!(std::abs(i0) < 1e15) || !(std::abs(i1) < 1e15)) return std::nullopt;
    long m = std::lround(i0 / pi);
    long n = std::lround(i1 / pi);
    double miss = std::max({std::abs(d.z0.real()), std::abs(d.z1.real()),
                            std::abs(i0 - pi * static_cast<double>(m)),
                            std::abs(i1 - pi * static_cast<double>(n))});
    if (miss > tol) return std::nullopt;
    return LatticeShift{m, n};
}

bool lattice_equivalent(const AlgebraVector& a, const AlgebraVector& b,
                        double tol) {
    auto shift = lattice_shift_between(a, b, tol);
    return shift.has_value() && shift->identifies_same_point();
}

}  // namespace etaxi
