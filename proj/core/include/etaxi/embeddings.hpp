#pragma once

#include "etaxi/covering.hpp"

namespace etaxi {

enum class SliceKind { imaginary, real };
enum class Universe { one, two };

// A point of an embedded slice: (t, tau, x1) with the angle tau reduced
// into [0, 2pi) on construction. For SliceKind::imaginary t is the fixed
// parameter and (tau, x1) vary; for SliceKind::real tau is fixed.
struct SlicePoint {
    SlicePoint(SliceKind kind, double t, double tau, double x1);

    SliceKind kind;
    double t;
    double tau;
    double x1;
};

// Q_I at fixed t: (tau, x1) -> (e^x1 sinh(t + i tau), e^x1 cosh(t + i tau)).
// Carries the Euclidean line element d tau^2 + d x1^2.
V0Point q_imaginary(double t, double tau, double x1);

// Q_R at fixed tau: (t, x1) -> the same closed form with the other slot
// varying. Carries the Minkowskian line element -dt^2 + dx1^2.
V0Point q_real(double tau, double t, double x1);

V0Point slice_to_v0(const SlicePoint& s);

// Universe one is the tau = 0 slice (real entries, xi > 0), universe two
// the tau = pi slice (real entries, xi < 0); they differ by pointwise
// negation.
V0Point universe_point(Universe which, double t, double x1);

// Membership test: entries real to within tol * max(1, |p|) and the real
// part of xi strictly of the universe's sign.
bool in_universe(Universe which, const V0Point& p, double tol = 1e-10);

// Left translation by (i sin tau', cos tau'); carries the Q_R slice at
// angle tau onto the slice at tau + tau' pointwise in (t, x1).
V0Point translate_real_slice(double tau_prime, const V0Point& p);

}  // namespace etaxi
