#include "etaxi/group.hpp"

#include <cmath>

namespace etaxi {

V0Point make_point(Complex eta, Complex xi, double cone_eps) {
    if (!is_finite(eta) || !is_finite(xi)) {
        throw NonFiniteError("make_point: non-finite component");
    }
    Complex cone = (xi - eta) * (xi + eta);
    if (!is_finite(cone)) {
        throw NonFiniteError("make_point: cone form overflowed");
    }
    if (std::abs(cone) < cone_eps) {
        throw OnLightConeError("make_point: point within cone guard");
    }
    return V0Point(eta, xi);
}

V0Point identity_point() { return make_point({0.0, 0.0}, {1.0, 0.0}); }

Complex cone_form(const V0Point& p) {
    return (p.xi() - p.eta()) * (p.xi() + p.eta());
}

V0Point multiply(const V0Point& a, const V0Point& b) {
    Complex eta = a.xi() * b.eta() + a.eta() * b.xi();
    Complex xi = a.xi() * b.xi() + a.eta() * b.eta();
    return make_point(eta, xi);
}

V0Point inverse(const V0Point& p) {
    Complex c = cone_form(p);
    return make_point(-p.eta() / c, p.xi() / c);
}

V0Point negate(const V0Point& p) { return make_point(-p.eta(), -p.xi()); }

MatrixRep mat_mul(const MatrixRep& a, const MatrixRep& b) {
    return {a.a00 * b.a00 + a.a01 * b.a10, a.a00 * b.a01 + a.a01 * b.a11,
            a.a10 * b.a00 + a.a11 * b.a10, a.a10 * b.a01 + a.a11 * b.a11};
}

Complex mat_det(const MatrixRep& m) {
    return m.a00 * m.a11 - m.a01 * m.a10;
}

MatrixRep to_matrix(const V0Point& p) {
    return {p.xi(), p.eta(), p.eta(), p.xi()};
}

DiagonalPair to_diagonal(const V0Point& p) {
    return {p.xi() - p.eta(), p.xi() + p.eta()};
}

V0Point from_diagonal(const DiagonalPair& d, double cone_eps) {
    if (!is_finite(d.u) || !is_finite(d.w)) {
        throw NonFiniteError("from_diagonal: non-finite component");
    }
    if (std::abs(d.u * d.w) < cone_eps) {
        throw OnLightConeError("from_diagonal: u*w within cone guard");
    }
    return make_point(0.5 * (d.w - d.u), 0.5 * (d.w + d.u), cone_eps);
}

SubgroupMembership subgroup_membership(const V0Point& p, double tol) {
    SubgroupMembership m;
    m.in_g1 = std::abs(cone_form(p) - 1.0) <= tol;
    m.in_g2 = m.in_g1 && std::abs(p.eta().imag()) <= tol &&
              std::abs(p.xi().imag()) <= tol;
    return m;
}

V0Point boost_point(double phi) {
    return make_point({std::sinh(phi), 0.0}, {std::cosh(phi), 0.0});
}

}  // namespace etaxi
