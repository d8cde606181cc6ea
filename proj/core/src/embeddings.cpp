#include "etaxi/embeddings.hpp"

#include <cmath>
#include <numbers>

namespace etaxi {

SlicePoint::SlicePoint(SliceKind kind_in, double t_in, double tau_in,
                       double x1_in)
    : kind(kind_in), t(t_in), tau(mod_two_pi(tau_in)), x1(x1_in) {
    if (!std::isfinite(t_in) || !std::isfinite(tau_in) ||
        !std::isfinite(x1_in)) {
        throw NonFiniteError("SlicePoint: non-finite coordinate");
    }
}

V0Point q_imaginary(double t, double tau, double x1) {
    return exp_map({Complex(t, tau), Complex(x1, 0.0)});
}

V0Point q_real(double tau, double t, double x1) {
    return exp_map({Complex(t, tau), Complex(x1, 0.0)});
}

V0Point slice_to_v0(const SlicePoint& s) {
    return exp_map({Complex(s.t, s.tau), Complex(s.x1, 0.0)});
}

V0Point universe_point(Universe which, double t, double x1) {
    double tau = which == Universe::one ? 0.0 : std::numbers::pi;
    return q_real(tau, t, x1);
}

bool in_universe(Universe which, const V0Point& p, double tol) {
    double scale = std::max({1.0, std::abs(p.eta()), std::abs(p.xi())});
    if (std::abs(p.eta().imag()) > tol * scale ||
        std::abs(p.xi().imag()) > tol * scale) {
        return false;
    }
    double re_xi = p.xi().real();
    return which == Universe::one ? re_xi > 0.0 : re_xi < 0.0;
}

V0Point translate_real_slice(double tau_prime, const V0Point& p) {
    if (!std::isfinite(tau_prime)) {
        throw NonFiniteError("translate_real_slice: non-finite angle");
    }
    V0Point translator = make_point({0.0, std::sin(tau_prime)},
                                    {std::cos(tau_prime), 0.0});
    return multiply(translator, p);
}

}  // namespace etaxi
