#pragma once

#include <functional>
#include <span>
#include <vector>

#include "etaxi/group.hpp"

namespace etaxi {

// Central finite-difference step. Balances O(h^2) truncation against
// O(eps/h) rounding for unit-scale inputs.
inline constexpr double kFdStep = 1e-6;

// Tangent vector (d_eta, d_xi) at a point of V0.
struct Tangent {
    Complex d_eta;
    Complex d_xi;
};

inline Tangent operator+(const Tangent& a, const Tangent& b) {
    return {a.d_eta + b.d_eta, a.d_xi + b.d_xi};
}
inline Tangent operator-(const Tangent& a, const Tangent& b) {
    return {a.d_eta - b.d_eta, a.d_xi - b.d_xi};
}
inline Tangent operator*(Complex s, const Tangent& t) {
    return {s * t.d_eta, s * t.d_xi};
}

// The holomorphic quadratic form evaluated on a tangent vector.
using QuadraticValue = Complex;

// A point of the full product space: V0 times the flat C^2 factor.
struct FullPoint {
    V0Point base;
    Complex y;
    Complex z;
};

struct FullTangent {
    Tangent t;
    Complex dy;
    Complex dz;
};

// ds^2 = (-d_eta^2 + d_xi^2) / (alpha^2 (xi^2 - eta^2)), complex-bilinear
// with no conjugation. Real slices of this one form reproduce both the
// Euclidean and the Minkowskian line elements.
QuadraticValue metric_value(const V0Point& p, const Tangent& t,
                            double alpha = 1.0);

// Adds the flat dy^2 + dz^2 terms.
QuadraticValue full_metric_value(const FullPoint& p, const FullTangent& t,
                                 double alpha = 1.0);

// A curve s -> V0 with a stated domain interval.
struct ParamCurve {
    std::function<V0Point(double)> eval;
    double s_min;
    double s_max;
};

// Componentwise central difference (c(s+h) - c(s-h)) / (2h). Throws
// DomainEdgeError when the stencil leaves [s_min, s_max].
Tangent curve_derivative(const ParamCurve& c, double s, double h = kFdStep);

// A map R^k -> V0, k inferred from the coordinate vector passed in.
using Immersion = std::function<V0Point(std::span<const double>)>;

// Dense k x k complex matrix for pulled-back quadratic forms.
using FormMatrix = std::vector<std::vector<Complex>>;

// Pulls the metric back along the immersion at the given coordinates
// using central differences per coordinate direction and polarization
// B(x,y) = (Q(x+y) - Q(x-y)) / 4 for the off-diagonal entries, then
// returns the max-norm difference against expected_form.
double pullback_residual(const Immersion& f, std::span<const double> point,
                         const FormMatrix& expected_form, double alpha = 1.0,
                         double h = kFdStep);

// |Q(transform(p), D transform(t)) - Q(p, t)| with the differential from
// central differences along t. Zero for isometries. Throws NearConeError
// when a stencil point crosses the cone guard. For affine transforms the
// central difference has no truncation term, so a larger h (1e-3) only
// lowers the rounding floor.
double isometry_residual(const std::function<V0Point(const V0Point&)>& transform,
                         const V0Point& p, const Tangent& t,
                         double alpha = 1.0, double h = kFdStep);

}  // namespace etaxi
