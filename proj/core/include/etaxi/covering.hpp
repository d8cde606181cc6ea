#pragma once

#include <optional>

#include "etaxi/group.hpp"

namespace etaxi {

// Safe envelope for exp_map: e^(|Re z0| + |Re z1|) stays inside double
// range when the sum is at most this.
inline constexpr double kExpEnvelope = 700.0;

// Tolerance used when matching differences against the covering lattice.
inline constexpr double kLatticeTol = 1e-10;

// An element (z0, z1) of the Lie algebra C^2, also a point of the
// universal cover.
struct AlgebraVector {
    Complex z0;
    Complex z1;
};

inline AlgebraVector operator+(const AlgebraVector& a, const AlgebraVector& b) {
    return {a.z0 + b.z0, a.z1 + b.z1};
}
inline AlgebraVector operator-(const AlgebraVector& a, const AlgebraVector& b) {
    return {a.z0 - b.z0, a.z1 - b.z1};
}
inline AlgebraVector operator*(double s, const AlgebraVector& v) {
    return {s * v.z0, s * v.z1};
}

// Cylinder coordinates (u0, v0, u1, v1); angles normalized into [0, 2pi)
// on construction.
struct CylinderPoint {
    CylinderPoint(double u0, double v0, double u1, double v1);

    double u0, v0, u1, v1;
};

// Lattice shift (i pi m, i pi n). Shifts with m and n of equal parity
// are exactly the kernel of exp.
struct LatticeShift {
    long m = 0;
    long n = 0;

    bool identifies_same_point() const { return ((m - n) % 2) == 0; }
};

// exp(z0, z1) = (e^z1 sinh z0, e^z1 cosh z0). Throws NonFiniteError on
// bad input and OverflowError outside the envelope. The result is
// off-cone analytically (cone form e^(2 z1) never vanishes), but for
// Re z1 below about -13.8 it falls inside the cone guard and the
// admission check throws OnLightConeError; such points are numerically
// indistinguishable from the cone.
V0Point exp_map(const AlgebraVector& v);

// Principal logarithm on the diagonal chart: z0 = (Log w - Log u)/2,
// z1 = (Log w + Log u)/2 with both complex Log arguments taken in
// [0, 2pi). Right inverse of exp_map; left inverse modulo the lattice.
AlgebraVector log_map(const V0Point& p);

// Pi: (z0, z1) -> (Re z0, Im z0 mod 2pi, Re z1, Im z1 mod 2pi).
CylinderPoint project(const AlgebraVector& v);

// Q: the exp factor through the cylinder, exp = lift_q . project.
V0Point lift_q(const CylinderPoint& c);

// The lattice shift carrying b onto a, if the difference is one.
std::optional<LatticeShift> lattice_shift_between(const AlgebraVector& a,
                                                  const AlgebraVector& b,
                                                  double tol = kLatticeTol);

// True iff exp_map(a) == exp_map(b): the difference is (i pi m, i pi n)
// with m and n of equal parity.
bool lattice_equivalent(const AlgebraVector& a, const AlgebraVector& b,
                        double tol = kLatticeTol);

}  // namespace etaxi
