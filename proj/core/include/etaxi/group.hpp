#pragma once

#include <complex>

#include "etaxi/errors.hpp"
#include "etaxi/numeric.hpp"

namespace etaxi {

// Cone guard: points with |xi^2 - eta^2| below this are rejected.
// Metric values scale like 1/(xi^2 - eta^2), so closer than this the
// doubles carry no significance.
inline constexpr double kConeEps = 1e-12;

// Tolerance for subgroup membership classification.
inline constexpr double kMemberTol = 1e-10;

// A point of the group manifold: C^2 minus the cone {xi^2 = eta^2}.
// Construction goes through make_point, which enforces the cone guard,
// so every live V0Point is invertible.
class V0Point {
public:
    Complex eta() const { return eta_; }
    Complex xi() const { return xi_; }

private:
    V0Point(Complex eta, Complex xi) : eta_(eta), xi_(xi) {}
    friend V0Point make_point(Complex eta, Complex xi, double cone_eps);

    Complex eta_;
    Complex xi_;
};

// Validating constructor. Throws NonFiniteError on NaN/inf input and
// OnLightConeError when |xi^2 - eta^2| < cone_eps.
V0Point make_point(Complex eta, Complex xi, double cone_eps = kConeEps);

// The group identity (0, 1).
V0Point identity_point();

// xi^2 - eta^2, evaluated in the factored form (xi - eta)(xi + eta) to
// dodge cancellation for large points. Multiplicative under the group
// law and equal to the determinant of the matrix representation.
Complex cone_form(const V0Point& p);

// Group law: (eta, xi) * (eta', xi') = (xi eta' + eta xi', xi xi' + eta eta').
// Evaluated componentwise so the identity acts exactly in IEEE arithmetic;
// the diagonal chart is used where cone-scaled quantities are involved.
V0Point multiply(const V0Point& a, const V0Point& b);

// Group inverse: (-eta, xi) / (xi^2 - eta^2).
V0Point inverse(const V0Point& p);

// Pointwise sign flip (-eta, -xi). Not the group inverse: it is the
// translation by (0, -1) and squares to the identity.
V0Point negate(const V0Point& p);

// 2x2 complex matrix, row-major.
struct MatrixRep {
    Complex a00, a01, a10, a11;
};

MatrixRep mat_mul(const MatrixRep& a, const MatrixRep& b);
Complex mat_det(const MatrixRep& m);

// Faithful representation (eta, xi) -> [[xi, eta], [eta, xi]].
MatrixRep to_matrix(const V0Point& p);

// Diagonal chart u = xi - eta, w = xi + eta. The group law becomes
// componentwise multiplication on C* x C*, which keeps the logarithm
// and the inverse's denominator well conditioned.
struct DiagonalPair {
    Complex u;
    Complex w;
};

DiagonalPair to_diagonal(const V0Point& p);

// Inverse chart eta = (w - u)/2, xi = (w + u)/2. Rejects pairs whose
// product u*w falls inside the cone guard.
V0Point from_diagonal(const DiagonalPair& d, double cone_eps = kConeEps);

// G1: cone form equals 1 (the unit-determinant subgroup). G2: G1 with
// real entries, the 2-D Lorentz boosts. Both tolerance-based.
struct SubgroupMembership {
    bool in_g1 = false;
    bool in_g2 = false;
};

SubgroupMembership subgroup_membership(const V0Point& p,
                                       double tol = kMemberTol);

// Boost of rapidity phi as a group element (sinh phi, cosh phi).
V0Point boost_point(double phi);

}  // namespace etaxi
