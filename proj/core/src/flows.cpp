#include "etaxi/flows.hpp"

#include <cmath>

namespace etaxi {

namespace {

void check_flow_envelope(const FlowSpec& f) {
    if (!is_finite(f.v.z0) || !is_finite(f.v.z1) || !std::isfinite(f.mu)) {
        throw NonFiniteError("flow: non-finite spec");
    }
    double sum = std::abs(f.v.z0.real()) + std::abs(f.v.z1.real());
    if (std::abs(f.mu) * sum > kExpEnvelope) {
        throw OverflowError("flow: outside the exp envelope");
    }
}

}  // namespace

V0Point one_param_point(const FlowSpec& f) {
    check_flow_envelope(f);
    return exp_map(f.mu * f.v);
}

V0Point flow_apply(const FlowSpec& f, const V0Point& p) {
    return multiply(one_param_point(f), p);
}

Tangent killing_vector(const AlgebraVector& v, const V0Point& p) {
    Complex a = v.z0;
    Complex b = v.z1;
    return {b * p.eta() + a * p.xi(), b * p.xi() + a * p.eta()};
}

double killing_residual(const AlgebraVector& v, const V0Point& p,
                        const Tangent& t, double mu_probe, double alpha,
                        double h) {
    auto flow = [&](const V0Point& q) {
        return flow_apply({v, mu_probe}, q);
    };
    double iso = isometry_residual(flow, p, t, alpha, h);
    // Q(p, K(v, p)) collapses to (-a^2 + b^2)/alpha^2 at every point, so
    // the field's causal character is the flat character of v globally.
    Complex along = metric_value(p, killing_vector(v, p), alpha);
    Complex flat = (v.z1 * v.z1 - v.z0 * v.z0) / (alpha * alpha);
    return std::max(iso, rel_gap(along, flat));
}

}  // namespace etaxi
