#include "etaxi/contour.hpp"

#include <cmath>
#include <numbers>

namespace etaxi {

const char* segment_name(int segment) {
    switch (segment) {
        case 0: return "C1";
        case 1: return "C3";
        case 2: return "C2";
        case 3: return "C4";
        default: throw InvalidParamError("segment_name: index out of range");
    }
}

double TimePath::arclength() const {
    double total = 0.0;
    for (std::size_t j = 0; j + 1 < vertices.size(); ++j) {
        total += std::abs(vertices[j + 1] - vertices[j]);
    }
    return total;
}

TimePath build_time_path(double F, double beta, int n) {
    if (!std::isfinite(F) || !std::isfinite(beta) || F < 0.0 || beta <= 0.0) {
        throw InvalidParamError("build_time_path: need F >= 0 and beta > 0");
    }
    if (n < 2) {
        throw InvalidParamError("build_time_path: need n >= 2");
    }
    TimePath path;
    path.F = F;
    path.beta = beta;
    path.samples_per_segment = n;
    double half = 0.5 * beta;
    path.vertices = {Complex(-F, 0.0), Complex(F, 0.0), Complex(F, -half),
                     Complex(-F, -half), Complex(-F, -beta)};
    path.polyline.reserve(4 * static_cast<std::size_t>(n));
    double s_base = 0.0;
    for (int seg = 0; seg < 4; ++seg) {
        Complex a = path.vertices[seg];
        Complex b = path.vertices[seg + 1];
        double len = std::abs(b - a);
        for (int i = 0; i < n; ++i) {
            double frac = static_cast<double>(i) / (n - 1);
            // a(1-frac) + b*frac hits both endpoints exactly.
            Complex z = a * (1.0 - frac) + b * frac;
            path.polyline.push_back({s_base + frac * len, z, seg});
        }
        s_base += len;
    }
    return path;
}

CylinderPath map_to_cylinder(const TimePath& path, double x1) {
    if (!std::isfinite(x1)) {
        throw NonFiniteError("map_to_cylinder: non-finite x1");
    }
    CylinderPath out;
    out.x1 = x1;
    out.samples.reserve(path.polyline.size());
    for (const PathSample& ps : path.polyline) {
        out.samples.push_back(
            {ps.s, ps.z, ps.segment,
             CylinderPoint(ps.z.real(), ps.z.imag(), x1, 0.0)});
    }
    return out;
}

V0Path map_to_v0(const TimePath& path, double x1) {
    if (!std::isfinite(x1)) {
        throw NonFiniteError("map_to_v0: non-finite x1");
    }
    V0Path out;
    out.x1 = x1;
    out.samples.reserve(path.polyline.size());
    for (const PathSample& ps : path.polyline) {
        out.samples.push_back(
            {ps.s, ps.z, ps.segment, exp_map({ps.z, Complex(x1, 0.0)})});
    }
    return out;
}

namespace {

double angular_gap(double a, double b) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double d = std::abs(a - b);
    return std::min(d, two_pi - d);
}

}  // namespace

double circle_distance(double F, double beta, double x1, int n) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    CylinderPath mapped = map_to_cylinder(build_time_path(F, beta, n), x1);
    std::size_t m = 4 * static_cast<std::size_t>(n);
    std::vector<double> circle(m);
    for (std::size_t k = 0; k < m; ++k) {
        circle[k] = two_pi * static_cast<double>(k) / static_cast<double>(m);
    }
    std::vector<double> to_circle(mapped.samples.size(), HUGE_VAL);
    std::vector<double> to_path(m, HUGE_VAL);
    for (std::size_t i = 0; i < mapped.samples.size(); ++i) {
        const CylinderPoint& c = mapped.samples[i].c;
        for (std::size_t k = 0; k < m; ++k) {
            double dv = angular_gap(c.v0, circle[k]);
            double d = std::sqrt(c.u0 * c.u0 + dv * dv);
            to_circle[i] = std::min(to_circle[i], d);
            to_path[k] = std::min(to_path[k], d);
        }
    }
    double h = 0.0;
    for (double d : to_circle) h = std::max(h, d);
    for (double d : to_path) h = std::max(h, d);
    return h;
}

SliceField restrict_field(Field phi, ImaginaryTime mode) {
    return [phi = std::move(phi), t = mode.t](double tau, double x1) {
        return phi(q_imaginary(t, tau, x1));
    };
}

SliceField restrict_field(Field phi, RealTimeOne) {
    return [phi = std::move(phi)](double t, double x1) {
        return phi(universe_point(Universe::one, t, x1));
    };
}

SliceField restrict_field(Field phi, RealTimeTwo) {
    // The tilde field: composition with the negation of the universe-one
    // slice, which is the tau = pi embedding.
    return [phi = std::move(phi)](double t, double x1) {
        return phi(negate(universe_point(Universe::one, t, x1)));
    };
}

}  // namespace etaxi
