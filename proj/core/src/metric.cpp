#include "etaxi/metric.hpp"

#include <cmath>

namespace etaxi {

QuadraticValue metric_value(const V0Point& p, const Tangent& t, double alpha) {
    if (!std::isfinite(alpha) || alpha == 0.0) {
        throw InvalidParamError("metric_value: alpha must be finite nonzero");
    }
    if (!is_finite(t.d_eta) || !is_finite(t.d_xi)) {
        throw NonFiniteError("metric_value: non-finite tangent");
    }
    // Factored -d_eta^2 + d_xi^2, mirroring the cone form.
    Complex num = (t.d_xi - t.d_eta) * (t.d_xi + t.d_eta);
    return num / (alpha * alpha * cone_form(p));
}

QuadraticValue full_metric_value(const FullPoint& p, const FullTangent& t,
                                 double alpha) {
    if (!is_finite(t.dy) || !is_finite(t.dz)) {
        throw NonFiniteError("full_metric_value: non-finite tangent");
    }
    return metric_value(p.base, t.t, alpha) + t.dy * t.dy + t.dz * t.dz;
}

Tangent curve_derivative(const ParamCurve& c, double s, double h) {
    if (!std::isfinite(s) || !std::isfinite(h) || h <= 0.0) {
        throw InvalidParamError("curve_derivative: bad s or h");
    }
    if (s - h < c.s_min || s + h > c.s_max) {
        throw DomainEdgeError("curve_derivative: stencil leaves the domain");
    }
    V0Point fwd = c.eval(s + h);
    V0Point bwd = c.eval(s - h);
    return {(fwd.eta() - bwd.eta()) / (2.0 * h),
            (fwd.xi() - bwd.xi()) / (2.0 * h)};
}

namespace {

Tangent direction_derivative(const Immersion& f, std::span<const double> point,
                             std::size_t i, double h) {
    std::vector<double> coords(point.begin(), point.end());
    coords[i] = point[i] + h;
    V0Point fwd = f(coords);
    coords[i] = point[i] - h;
    V0Point bwd = f(coords);
    return {(fwd.eta() - bwd.eta()) / (2.0 * h),
            (fwd.xi() - bwd.xi()) / (2.0 * h)};
}

}  // namespace

double pullback_residual(const Immersion& f, std::span<const double> point,
                         const FormMatrix& expected_form, double alpha,
                         double h) {
    std::size_t k = point.size();
    if (k == 0 || expected_form.size() != k) {
        throw InvalidParamError("pullback_residual: dimension mismatch");
    }
    for (const auto& row : expected_form) {
        if (row.size() != k) {
            throw InvalidParamError("pullback_residual: dimension mismatch");
        }
    }
    V0Point base = f(point);
    std::vector<Tangent> dirs;
    dirs.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        dirs.push_back(direction_derivative(f, point, i, h));
    }
    double residual = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            Complex value;
            if (i == j) {
                value = metric_value(base, dirs[i], alpha);
            } else {
                // Polarization B(x, y) = (Q(x+y) - Q(x-y)) / 4.
                Complex plus = metric_value(base, dirs[i] + dirs[j], alpha);
                Complex minus = metric_value(base, dirs[i] - dirs[j], alpha);
                value = 0.25 * (plus - minus);
            }
            residual = std::max(residual,
                                std::abs(value - expected_form[i][j]));
        }
    }
    return residual;
}

double isometry_residual(
    const std::function<V0Point(const V0Point&)>& transform, const V0Point& p,
    const Tangent& t, double alpha, double h) {
    if (!std::isfinite(h) || h <= 0.0) {
        throw InvalidParamError("isometry_residual: bad h");
    }
    QuadraticValue before = metric_value(p, t, alpha);
    try {
        V0Point image = transform(p);
        V0Point fwd = transform(
            make_point(p.eta() + h * t.d_eta, p.xi() + h * t.d_xi));
        V0Point bwd = transform(
            make_point(p.eta() - h * t.d_eta, p.xi() - h * t.d_xi));
        Tangent pushed{(fwd.eta() - bwd.eta()) / (2.0 * h),
                       (fwd.xi() - bwd.xi()) / (2.0 * h)};
        return std::abs(metric_value(image, pushed, alpha) - before);
    } catch (const OnLightConeError&) {
        throw NearConeError("isometry_residual: stencil crossed the cone guard");
    }
}

}  // namespace etaxi
