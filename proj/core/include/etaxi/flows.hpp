#pragma once

#include "etaxi/covering.hpp"
#include "etaxi/metric.hpp"

namespace etaxi {

// Default flow parameter for Killing-property probes.
inline constexpr double kMuProbe = 0.3;

// A one-parameter subgroup direction v = (a, b) and a flow time mu.
// The exp envelope |mu| (|Re a| + |Re b|) <= 700 must hold.
struct FlowSpec {
    AlgebraVector v;
    double mu = 0.0;
};

// rho_v(mu) = exp(mu v) = (e^(mu b) sinh(mu a), e^(mu b) cosh(mu a)).
V0Point one_param_point(const FlowSpec& f);

// The induced transformation: left translation by rho_v(mu).
V0Point flow_apply(const FlowSpec& f, const V0Point& p);

// Generator of the flow at p: (eta, xi) -> (b eta + a xi, b xi + a eta).
// Bilinear in v and p; equals the mu-derivative of flow_apply at mu = 0.
Tangent killing_vector(const AlgebraVector& v, const V0Point& p);

// Max of two residuals: the isometry residual of the finite flow map at
// (p, t), and the gap between Q(p, killing_vector(v, p)) and the flat
// form (-a^2 + b^2)/alpha^2 of v. The second is an identity of the
// quadratic form, so it also pins the causal character: the field keeps
// the character of v everywhere, not just at the identity.
double killing_residual(const AlgebraVector& v, const V0Point& p,
                        const Tangent& t, double mu_probe = kMuProbe,
                        double alpha = 1.0, double h = 1e-3);

}  // namespace etaxi
