#include "etaxi/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <numbers>
#include <string_view>

#include "etaxi/contour.hpp"
#include "etaxi/flows.hpp"
#include "etaxi/rng.hpp"

namespace etaxi {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// FNV-1a of the check id mixed with the user seed: each check owns an
// independent stream, so results do not depend on which suite ran it.
std::uint64_t check_seed(std::uint64_t base, std::string_view id) {
    std::uint64_t h = 1469598103934665603ULL;
    for (char ch : id) {
        h ^= static_cast<unsigned char>(ch);
        h *= 1099511628211ULL;
    }
    return h ^ (base * 0x9E3779B97F4A7C15ULL + 0x243F6A8885A308D3ULL);
}

long n_full(const VerifyConfig& c) { return std::max(1L, c.samples); }
long n_kilo(const VerifyConfig& c) { return std::max(1L, c.samples / 10); }
long n_hecto(const VerifyConfig& c) { return std::max(1L, c.samples / 100); }

double point_gap(const V0Point& a, const V0Point& b) {
    return rel_gap2(a.eta(), a.xi(), b.eta(), b.xi());
}

double matrix_gap(const MatrixRep& a, const MatrixRep& b) {
    double num = std::max({std::abs(a.a00 - b.a00), std::abs(a.a01 - b.a01),
                           std::abs(a.a10 - b.a10), std::abs(a.a11 - b.a11)});
    double scale = std::max({1.0, std::abs(a.a00), std::abs(a.a01),
                             std::abs(a.a10), std::abs(a.a11),
                             std::abs(b.a00), std::abs(b.a01),
                             std::abs(b.a10), std::abs(b.a11)});
    return num / scale;
}

struct Check {
    const char* id;
    double default_tol;
    // Returns (max residual, sample count).
    std::pair<double, long> (*run)(Rng&, const VerifyConfig&);
};

// ---- group ----

std::pair<double, long> run_associativity(Rng& rng, const VerifyConfig& c) {
    double r = 0.0;
    long n = n_full(c);
    for (long i = 0; i < n; ++i) {
        V0Point p = rng.point(c.box, c.min_cone);
        V0Point q = rng.point(c.box, c.min_cone);
        V0Point s = rng.point(c.box, c.min_cone);
        r = std::max(r, point_gap(multiply(multiply(p, q), s),
                                  multiply(p, multiply(q, s))));
    }
    return {r, n};
}

std::pair<double, long> run_commutativity(Rng& rng, const VerifyConfig& c) {
    double r = 0.0;
    long n = n_full(c);
    for (long i = 0; i < n; ++i) {
        V0Point p = rng.point(c.box, c.min_cone);
        V0Point q = rng.point(c.box, c.min_cone);
        r = std::max(r, point_gap(multiply(p, q), multiply(q, p)));
    }
    return {r, n};
}

std::pair<double, long> run_identity_exact(Rng& rng, const VerifyConfig& c) {
    double r = 0.0;
    long n = n_full(c);
    V0Point e = identity_point();
    for (long i = 0; i < n; ++i) {
        V0Point p = rng.point(c.box, c.min_cone);
        r = std::max({r, point_gap(multiply(p, e), p),
                      point_gap(multiply(e, p), p)});
    }
    return {r, n};
}

std::pair<double, long> run_inverse_law(Rng& rng, const VerifyConfig& c) {
    double r = 0.0;
    long n = n_full(c);
    V0Point e = identity_point();
    for (long i = 0; i < n; ++i) {
        V0Point p = rng.point(c.box, c.min_cone);
        V0Point pi = inverse(p);
        r = std::max({r, point_gap(multiply(p, pi), e),
                      point_gap(multiply(pi, p), e)});
    }
    return {r, n};
}

std::pair<double, long> run_representation_hom(Rng& rng,
                                               const VerifyConfig& c) {
    double r = 0.0;
    long n = n_full(c);
    for (long i = 0; i < n; ++i) {
        V0Point p = rng.point(c.box, c.min_cone);
        V0Point q = rng.point(c.box, c.min_cone);
        r = std::max(r, matrix_gap(to_matrix(multiply(p, q)),
                                   mat_mul(to_matrix(p), to_matrix(q))));
    }
    return {r, n};
}

std::pair<double, long> run_det_matches_cone(Rng& rng,
                                             const VerifyConfig& c) {
    double r = 0.0;
    long n = n_full(c);
    for (long i = 0; i < n; ++i) {
        V0Point p = rng.point(c.box, c.min_cone);
        r = std::max(r, rel_gap(mat_det(to_matrix(p)), cone_form(p)));
    }
    return {r, n};
}

std::pair<double, long> run_cone_multiplicative(Rng& rng,
                                                const VerifyConfig& c) {
    double r = 0.0;
    long n = n_full(c);
    for (long i = 0; i < n; ++i) {
        V0Point p = rng.point(c.box, c.min_cone);
        V0Point q = rng.point(c.box, c.min_cone);
        r = std::max(r, rel_gap(cone_form(multiply(p, q)),
                                cone_form(p) * cone_form(q)));
    }
    return {r, n};
}

std::pair<double, long> run_diagonal_isomorphism(Rng& rng,
                                                 const VerifyConfig& c) {
    double r = 0.0;
    long n = n_full(c);
    for (long i = 0; i < n; ++i) {
        V0Point p = rng.point(c.box, c.min_cone);
        V0Point q = rng.point(c.box, c.min_cone);
        DiagonalPair dp = to_diagonal(p);
        DiagonalPair dq = to_diagonal(q);
        DiagonalPair prod = to_diagonal(multiply(p, q));
        r = std::max(r, rel_gap2(prod.u, prod.w, dp.u * dq.u, dp.w * dq.w));
    }
    return {r, n};
}

std::pair<double, long> run_diagonal_roundtrip(Rng& rng,
                                               const VerifyConfig& c) {
    double r = 0.0;
    long n = n_full(c);
    for (long i = 0; i < n; ++i) {
        V0Point p = rng.point(c.box, c.min_cone);
        r = std::max(r, point_gap(from_diagonal(to_diagonal(p)), p));
    }
    return {r, n};
}

std::pair<double, long> run_conjugation_identity(Rng& rng,
                                                 const VerifyConfig& c) {
    double r = 0.0;
    long n = n_full(c);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const MatrixRep R{{inv_sqrt2, 0.0}, {inv_sqrt2, 0.0},
                      {-inv_sqrt2, 0.0}, {inv_sqrt2, 0.0}};
    const MatrixRep R_inv{{inv_sqrt2, 0.0}, {-inv_sqrt2, 0.0},
                          {inv_sqrt2, 0.0}, {inv_sqrt2, 0.0}};
    for (long i = 0; i < n; ++i) {
        V0Point p = rng.point(c.box, c.min_cone);
        MatrixRep conj = mat_mul(R_inv, mat_mul(to_matrix(p), R));
        DiagonalPair d = to_diagonal(p);
        MatrixRep expected{d.u, 0.0, 0.0, d.w};
        r = std::max(r, matrix_gap(conj, expected));
    }
    return {r, n};
}

std::pair<double, long> run_lorentz_boost_rep(Rng& rng,
                                              const VerifyConfig& c) {
    double r = 0.0;
    long n = n_hecto(c);
    for (long i = 0; i < n; ++i) {
        double phi = rng.uniform(-3.0, 3.0);
        V0Point b = boost_point(phi);
        MatrixRep expected{{std::cosh(phi), 0.0}, {std::sinh(phi), 0.0},
                           {std::sinh(phi), 0.0}, {std::cosh(phi), 0.0}};
        double gap = matrix_gap(to_matrix(b), expected);
        SubgroupMembership m = subgroup_membership(b);
        if (!m.in_g1 || !m.in_g2) gap = std::max(gap, 1.0);
        r = std::max(r, gap);
    }
    return {r, n};
}

std::pair<double, long> run_g2_closure(Rng& rng, const VerifyConfig& c) {
    double r = 0.0;
    long n = n_hecto(c);
    for (long i = 0; i < n; ++i) {
        double phi1 = rng.uniform(-3.0, 3.0);
        double phi2 = rng.uniform(-3.0, 3.0);
        V0Point prod = multiply(boost_point(phi1), boost_point(phi2));
        V0Point inv = inverse(boost_point(phi1));
        double gap = point_gap(prod, boost_point(phi1 + phi2));
        gap = std::max(gap, point_gap(inv, boost_point(-phi1)));
        if (!subgroup_membership(prod).in_g2 ||
            !subgroup_membership(inv).in_g2) {
            gap = std::max(gap, 1.0);
        }
        r = std::max(r, gap);
    }
    return {r, n};
}

// ---- cover ----

std::pair<double, long> run_exp_homomorphism(Rng& rng,
                                             const VerifyConfig& c) {
    double r = 0.0;
    long n = n_full(c);
    for (long i = 0; i < n; ++i) {
        AlgebraVector a = rng.algebra(3.0);
        AlgebraVector b = rng.algebra(3.0);
        r = std::max(r, point_gap(exp_map(a + b),
                                  multiply(exp_map(a), exp_map(b))));
    }
    return {r, n};
}

std::pair<double, long> run_exp_translation(Rng& rng,
                                            const VerifyConfig& c) {
    double r = 0.0;
    long n = n_full(c);
    for (long i = 0; i < n; ++i) {
        AlgebraVector v = rng.algebra(3.0);
        AlgebraVector w = rng.algebra(3.0);
        r = std::max(r, point_gap(exp_map(v + w),
                                  multiply(exp_map(w), exp_map(v))));
    }
    return {r, n};
}

std::pair<double, long> run_lattice_kernel(Rng& rng, const VerifyConfig& c) {
    double r = 0.0;
    long vectors = 20;
    long n = 0;
    for (long i = 0; i < vectors; ++i) {
        AlgebraVector v = rng.algebra(c.box);
        V0Point base = exp_map(v);
        for (int m = -3; m <= 3; ++m) {
            for (int k = -3; k <= 3; ++k) {
                ++n;
                AlgebraVector shifted{v.z0 + Complex(0.0, kPi * m),
                                      v.z1 + Complex(0.0, kPi * k)};
                double gap = point_gap(exp_map(shifted), base);
                bool same = ((m - k) % 2) == 0;
                if (same) {
                    r = std::max(r, gap);
                } else if (gap < 1e-6) {
                    r = std::max(r, 1.0);
                }
                if (lattice_equivalent(shifted, v) != same) {
                    r = std::max(r, 1.0);
                }
            }
        }
    }
    return {r, n};
}

std::pair<double, long> run_log_exp_roundtrip(Rng& rng,
                                              const VerifyConfig& c) {
    double r = 0.0;
    long n = n_full(c);
    for (long i = 0; i < n; ++i) {
        V0Point p = rng.point(c.box, c.min_cone);
        r = std::max(r, point_gap(exp_map(log_map(p)), p));
    }
    return {r, n};
}

std::pair<double, long> run_log_exp_lattice(Rng& rng,
                                            const VerifyConfig& c) {
    double r = 0.0;
    long n = n_full(c);
    for (long i = 0; i < n; ++i) {
        // Imaginary parts span several sheets of the cover.
        AlgebraVector v{Complex(rng.uniform(-2.0, 2.0), rng.uniform(-8.0, 8.0)),
                        Complex(rng.uniform(-2.0, 2.0), rng.uniform(-8.0, 8.0))};
        if (!lattice_equivalent(log_map(exp_map(v)), v)) {
            r = std::max(r, 1.0);
        }
    }
    return {r, n};
}

std::pair<double, long> run_q_pi_factorization(Rng& rng,
                                               const VerifyConfig& c) {
    double r = 0.0;
    long n = n_full(c);
    for (long i = 0; i < n; ++i) {
        AlgebraVector v = rng.algebra(c.box);
        r = std::max(r, point_gap(lift_q(project(v)), exp_map(v)));
    }
    return {r, n};
}

std::pair<double, long> run_exp_periodicity(Rng& rng,
                                            const VerifyConfig& c) {
    double r = 0.0;
    long n = n_full(c);
    for (long i = 0; i < n; ++i) {
        AlgebraVector v = rng.algebra(c.box);
        int k0 = static_cast<int>(rng.uniform(0.0, 5.0)) - 2;
        int k1 = static_cast<int>(rng.uniform(0.0, 5.0)) - 2;
        AlgebraVector shifted{v.z0 + Complex(0.0, kTwoPi * k0),
                              v.z1 + Complex(0.0, kTwoPi * k1)};
        r = std::max(r, point_gap(exp_map(shifted), exp_map(v)));
    }
    return {r, n};
}

std::pair<double, long> run_cone_exponential(Rng& rng,
                                             const VerifyConfig& c) {
    double r = 0.0;
    long n = n_full(c);
    for (long i = 0; i < n; ++i) {
        AlgebraVector v = rng.algebra(c.box);
        r = std::max(r, rel_gap(cone_form(exp_map(v)),
                                std::exp(2.0 * v.z1)));
    }
    return {r, n};
}

// ---- metric ----

std::pair<double, long> run_exp_pullback_plane(Rng& rng,
                                               const VerifyConfig& c) {
    double r = 0.0;
    long n = n_kilo(c);
    FormMatrix expected{{{-1.0, 0.0}, {0.0, 0.0}},
                        {{0.0, 0.0}, {1.0, 0.0}}};
    for (long i = 0; i < n; ++i) {
        AlgebraVector v = rng.algebra(c.box);
        Immersion f = [v](std::span<const double> x) {
            return exp_map({v.z0 + x[0], v.z1 + x[1]});
        };
        std::array<double, 2> at{0.0, 0.0};
        r = std::max(r, pullback_residual(f, at, expected, 1.0, c.fd_step));
    }
    return {r, n};
}

std::pair<double, long> run_exp_pullback_real_lines(Rng& rng,
                                                    const VerifyConfig& c) {
    double r = 0.0;
    long n = n_kilo(c);
    for (long i = 0; i < n; ++i) {
        AlgebraVector v = rng.algebra(c.box);
        double d0 = rng.uniform(-1.0, 1.0);
        double d1 = rng.uniform(-1.0, 1.0);
        Immersion f = [v, d0, d1](std::span<const double> x) {
            return exp_map({v.z0 + x[0] * d0, v.z1 + x[0] * d1});
        };
        FormMatrix expected{{Complex(-d0 * d0 + d1 * d1, 0.0)}};
        std::array<double, 1> at{0.0};
        r = std::max(r, pullback_residual(f, at, expected, 1.0, c.fd_step));
    }
    return {r, n};
}

std::pair<double, long> run_exp_pullback_complex_lines(Rng& rng,
                                                       const VerifyConfig& c) {
    double r = 0.0;
    long n = n_kilo(c);
    for (long i = 0; i < n; ++i) {
        AlgebraVector v = rng.algebra(c.box);
        Complex d0 = rng.complex_box(1.0);
        Complex d1 = rng.complex_box(1.0);
        Immersion f = [v, d0, d1](std::span<const double> x) {
            return exp_map({v.z0 + x[0] * d0, v.z1 + x[0] * d1});
        };
        FormMatrix expected{{-d0 * d0 + d1 * d1}};
        std::array<double, 1> at{0.0};
        r = std::max(r, pullback_residual(f, at, expected, 1.0, c.fd_step));
    }
    return {r, n};
}

std::pair<double, long> run_left_translation_isometry(Rng& rng,
                                                      const VerifyConfig& c) {
    double r = 0.0;
    long n = n_kilo(c);
    for (long i = 0; i < n; ++i) {
        V0Point g = rng.point(c.box, c.min_cone);
        V0Point p = rng.point(c.box, c.min_cone);
        Tangent t = rng.tangent(c.box);
        auto translate = [&g](const V0Point& q) { return multiply(g, q); };
        r = std::max(r, isometry_residual(translate, p, t, 1.0,
                                          c.fd_step_affine));
    }
    return {r, n};
}

std::pair<double, long> run_alpha_scaling(Rng& rng, const VerifyConfig& c) {
    double r = 0.0;
    long n = n_full(c);
    for (long i = 0; i < n; ++i) {
        V0Point p = rng.point(c.box, c.min_cone);
        Tangent t = rng.tangent(c.box);
        double alpha = rng.uniform(0.5, 2.0);
        if (rng.unit() < 0.5) alpha = -alpha;
        r = std::max(r, rel_gap(metric_value(p, t, alpha),
                                metric_value(p, t, 1.0) / (alpha * alpha)));
    }
    return {r, n};
}

std::pair<double, long> run_fd_quadratic_exact(Rng& rng,
                                               const VerifyConfig& c) {
    double r = 0.0;
    long n = n_kilo(c);
    long done = 0;
    while (done < n) {
        V0Point base = rng.point(c.box, c.min_cone);
        Complex a0 = 0.1 * rng.complex_box(1.0);
        Complex a1 = 0.1 * rng.complex_box(1.0);
        Complex b0 = 0.1 * rng.complex_box(1.0);
        Complex b1 = 0.1 * rng.complex_box(1.0);
        double s0 = rng.uniform(-0.5, 0.5);
        ParamCurve curve{
            [=](double s) {
                return make_point(a0 * s * s + b0 * s + base.eta(),
                                  a1 * s * s + b1 * s + base.xi());
            },
            -1.0, 1.0};
        try {
            Tangent fd = curve_derivative(curve, s0, c.fd_step);
            Tangent exact{2.0 * a0 * s0 + b0, 2.0 * a1 * s0 + b1};
            r = std::max(r, rel_gap2(fd.d_eta, fd.d_xi, exact.d_eta,
                                     exact.d_xi));
            ++done;
        } catch (const OnLightConeError&) {
            // Curve wandered into the cone guard; draw again.
        }
    }
    return {r, n};
}

std::pair<double, long> run_homogeneity_reflection(Rng& rng,
                                                   const VerifyConfig& c) {
    double r = 0.0;
    long n = n_full(c);
    for (long i = 0; i < n; ++i) {
        V0Point p = rng.point(c.box, c.min_cone);
        Tangent t = rng.tangent(c.box);
        Complex lam = rng.complex_box(2.0);
        Complex scaled = metric_value(p, lam * t);
        Complex expected = lam * lam * metric_value(p, t);
        double gap = rel_gap(scaled, expected);
        Complex reflected = metric_value(p, Complex(-1.0, 0.0) * t);
        if (reflected != metric_value(p, t)) gap = std::max(gap, 1.0);
        r = std::max(r, gap);
    }
    return {r, n};
}

std::pair<double, long> run_full_metric_consistency(Rng& rng,
                                                    const VerifyConfig& c) {
    double r = 0.0;
    long n = n_full(c);
    for (long i = 0; i < n; ++i) {
        V0Point p = rng.point(c.box, c.min_cone);
        Tangent t = rng.tangent(c.box);
        Complex dy = rng.complex_box(c.box);
        Complex dz = rng.complex_box(c.box);
        FullPoint fp{p, rng.complex_box(c.box), rng.complex_box(c.box)};
        Complex with_flat = full_metric_value(fp, {t, dy, dz});
        Complex expected = metric_value(p, t) + dy * dy + dz * dz;
        double gap = rel_gap(with_flat, expected);
        Complex base_only = full_metric_value(fp, {t, 0.0, 0.0});
        if (base_only != metric_value(p, t)) gap = std::max(gap, 1.0);
        r = std::max(r, gap);
    }
    return {r, n};
}

// ---- killing ----

const std::array<AlgebraVector, 4>& killing_directions() {
    static const std::array<AlgebraVector, 4> dirs{
        AlgebraVector{{1.0, 0.0}, {0.0, 0.0}},
        AlgebraVector{{0.0, 0.0}, {1.0, 0.0}},
        AlgebraVector{{0.0, 1.0}, {0.0, 0.0}},
        AlgebraVector{{1.0, 1.0}, {2.0, 0.0}}};
    return dirs;
}

std::pair<double, long> run_flow_isometry(Rng& rng, const VerifyConfig& c) {
    double r = 0.0;
    long n = n_kilo(c);
    for (long i = 0; i < n; ++i) {
        const AlgebraVector& v = killing_directions()[i % 4];
        V0Point p = rng.point(c.box, c.min_cone);
        Tangent t = rng.tangent(c.box);
        double mu = rng.uniform(-1.0, 1.0);
        r = std::max(r, killing_residual(v, p, t, mu, 1.0,
                                         c.fd_step_affine));
    }
    return {r, n};
}

std::pair<double, long> run_generator_matches_flow(Rng& rng,
                                                   const VerifyConfig& c) {
    double r = 0.0;
    long n = n_kilo(c);
    double h = c.fd_step;
    for (long i = 0; i < n; ++i) {
        AlgebraVector v = rng.algebra(c.box);
        V0Point p = rng.point(c.box, c.min_cone);
        V0Point fwd = flow_apply({v, h}, p);
        V0Point bwd = flow_apply({v, -h}, p);
        Tangent fd{(fwd.eta() - bwd.eta()) / (2.0 * h),
                   (fwd.xi() - bwd.xi()) / (2.0 * h)};
        Tangent gen = killing_vector(v, p);
        r = std::max(r, rel_gap2(fd.d_eta, fd.d_xi, gen.d_eta, gen.d_xi));
    }
    return {r, n};
}

std::pair<double, long> run_flow_composition(Rng& rng,
                                             const VerifyConfig& c) {
    double r = 0.0;
    long n = n_kilo(c);
    for (long i = 0; i < n; ++i) {
        AlgebraVector v = rng.algebra(c.box);
        V0Point p = rng.point(c.box, c.min_cone);
        double mu1 = rng.uniform(-1.0, 1.0);
        double mu2 = rng.uniform(-1.0, 1.0);
        V0Point joint = flow_apply({v, mu1 + mu2}, p);
        V0Point staged = flow_apply({v, mu1}, flow_apply({v, mu2}, p));
        r = std::max(r, point_gap(joint, staged));
    }
    return {r, n};
}

std::pair<double, long> run_generator_bilinearity(Rng& rng,
                                                  const VerifyConfig& c) {
    double r = 0.0;
    long n = n_full(c);
    for (long i = 0; i < n; ++i) {
        AlgebraVector v = rng.algebra(c.box);
        AlgebraVector w = rng.algebra(c.box);
        V0Point p = rng.point(c.box, c.min_cone);
        Complex ca = rng.complex_box(2.0);
        Complex cb = rng.complex_box(2.0);
        AlgebraVector mix{ca * v.z0 + cb * w.z0, ca * v.z1 + cb * w.z1};
        Tangent lhs = killing_vector(mix, p);
        Tangent rhs = ca * killing_vector(v, p) + cb * killing_vector(w, p);
        double gap = rel_gap2(lhs.d_eta, lhs.d_xi, rhs.d_eta, rhs.d_xi);
        double lam = rng.uniform(0.5, 2.0);
        V0Point q = make_point(lam * p.eta(), lam * p.xi());
        Tangent scaled = killing_vector(v, q);
        Tangent expect = Complex(lam, 0.0) * killing_vector(v, p);
        gap = std::max(gap, rel_gap2(scaled.d_eta, scaled.d_xi,
                                     expect.d_eta, expect.d_xi));
        r = std::max(r, gap);
    }
    return {r, n};
}

std::pair<double, long> run_causal_character(Rng& rng,
                                             const VerifyConfig& c) {
    double r = 0.0;
    long n = n_full(c);
    for (long i = 0; i < n; ++i) {
        AlgebraVector v = rng.algebra(c.box);
        V0Point p = rng.point(c.box, c.min_cone);
        Complex along = metric_value(p, killing_vector(v, p));
        Complex flat = v.z1 * v.z1 - v.z0 * v.z0;
        r = std::max(r, rel_gap(along, flat));
    }
    return {r, n};
}

// ---- embed ----

std::pair<double, long> run_slice_coherence(Rng& rng,
                                            const VerifyConfig& c) {
    double r = 0.0;
    long n = n_full(c);
    for (long i = 0; i < n; ++i) {
        double t = rng.uniform(-2.0, 2.0);
        double tau = rng.uniform(0.0, kTwoPi);
        double x1 = rng.uniform(-2.0, 2.0);
        V0Point qi = q_imaginary(t, tau, x1);
        V0Point qr = q_real(tau, t, x1);
        V0Point qe = exp_map({Complex(t, tau), Complex(x1, 0.0)});
        r = std::max({r, point_gap(qi, qr), point_gap(qi, qe)});
    }
    return {r, n};
}

std::pair<double, long> run_euclidean_pullback(Rng& rng,
                                               const VerifyConfig& c) {
    double r = 0.0;
    long n = n_kilo(c);
    FormMatrix expected{{{1.0, 0.0}, {0.0, 0.0}}, {{0.0, 0.0}, {1.0, 0.0}}};
    for (long i = 0; i < n; ++i) {
        double t = rng.uniform(-2.0, 2.0);
        double tau = rng.uniform(0.0, kTwoPi);
        double x1 = rng.uniform(-2.0, 2.0);
        Immersion f = [t](std::span<const double> x) {
            return q_imaginary(t, x[0], x[1]);
        };
        std::array<double, 2> at{tau, x1};
        r = std::max(r, pullback_residual(f, at, expected, 1.0, c.fd_step));
    }
    return {r, n};
}

std::pair<double, long> run_minkowski_pullback(Rng& rng,
                                               const VerifyConfig& c) {
    double r = 0.0;
    long n = n_kilo(c);
    FormMatrix expected{{{-1.0, 0.0}, {0.0, 0.0}}, {{0.0, 0.0}, {1.0, 0.0}}};
    for (long i = 0; i < n; ++i) {
        double tau = rng.uniform(0.0, kTwoPi);
        double t = rng.uniform(-2.0, 2.0);
        double x1 = rng.uniform(-2.0, 2.0);
        Immersion f = [tau](std::span<const double> x) {
            return q_real(tau, x[0], x[1]);
        };
        std::array<double, 2> at{t, x1};
        r = std::max(r, pullback_residual(f, at, expected, 1.0, c.fd_step));
    }
    return {r, n};
}

std::pair<double, long> run_negation_relation(Rng& rng,
                                              const VerifyConfig& c) {
    double r = 0.0;
    long n = n_kilo(c);
    for (long i = 0; i < n; ++i) {
        double tau = rng.uniform(0.0, kTwoPi);
        double t = rng.uniform(-2.0, 2.0);
        double x1 = rng.uniform(-2.0, 2.0);
        r = std::max(r, point_gap(q_real(tau + kPi, t, x1),
                                  negate(q_real(tau, t, x1))));
    }
    return {r, n};
}

std::pair<double, long> run_translation_relation(Rng& rng,
                                                 const VerifyConfig& c) {
    double r = 0.0;
    long n = n_kilo(c);
    for (long i = 0; i < n; ++i) {
        double tau = rng.uniform(0.0, kTwoPi);
        double tau_prime = rng.uniform(0.0, kTwoPi);
        double t = rng.uniform(-2.0, 2.0);
        double x1 = rng.uniform(-2.0, 2.0);
        r = std::max(r,
                     point_gap(translate_real_slice(tau_prime,
                                                    q_real(tau, t, x1)),
                               q_real(tau + tau_prime, t, x1)));
    }
    return {r, n};
}

std::pair<double, long> run_shared_axis(Rng& rng, const VerifyConfig& c) {
    double r = 0.0;
    long n = n_full(c);
    for (long i = 0; i < n; ++i) {
        double t = rng.uniform(-2.0, 2.0);
        double x1 = rng.uniform(-2.0, 2.0);
        r = std::max(r, point_gap(q_imaginary(t, 0.0, x1),
                                  q_real(0.0, t, x1)));
    }
    return {r, n};
}

std::pair<double, long> run_universe_signs(Rng& rng, const VerifyConfig& c) {
    double r = 0.0;
    long n = n_kilo(c);
    for (long i = 0; i < n; ++i) {
        double t = rng.uniform(-2.0, 2.0);
        double x1 = rng.uniform(-2.0, 2.0);
        V0Point one = universe_point(Universe::one, t, x1);
        V0Point two = universe_point(Universe::two, t, x1);
        double gap = rel_gap(cone_form(one), Complex(std::exp(2.0 * x1), 0.0));
        gap = std::max(gap, point_gap(two, negate(one)));
        if (!in_universe(Universe::one, one) ||
            !in_universe(Universe::two, two) ||
            in_universe(Universe::one, two)) {
            gap = std::max(gap, 1.0);
        }
        r = std::max(r, gap);
    }
    return {r, n};
}

std::pair<double, long> run_injectivity_grid(Rng& rng,
                                             const VerifyConfig& c) {
    (void)rng;
    (void)c;
    const double t = 0.7;
    std::vector<std::array<double, 4>> pts;
    for (int i = 0; i < 24; ++i) {
        double tau = kTwoPi * i / 24.0;
        for (int j = 0; j < 9; ++j) {
            double x1 = -2.0 + 0.5 * j;
            V0Point p = q_imaginary(t, tau, x1);
            pts.push_back({p.eta().real(), p.eta().imag(), p.xi().real(),
                           p.xi().imag()});
        }
    }
    double min_d = HUGE_VAL;
    for (std::size_t a = 0; a < pts.size(); ++a) {
        for (std::size_t b = a + 1; b < pts.size(); ++b) {
            double d2 = 0.0;
            for (int k = 0; k < 4; ++k) {
                double d = pts[a][k] - pts[b][k];
                d2 += d * d;
            }
            min_d = std::min(min_d, std::sqrt(d2));
        }
    }
    // Distinct grid nodes must stay at least 1e-3 apart.
    double residual = std::max(0.0, 1e-3 - min_d);
    return {residual, static_cast<long>(pts.size())};
}

// ---- contour ----

std::pair<double, long> run_arclength(Rng& rng, const VerifyConfig& c) {
    (void)rng;
    (void)c;
    double r = 0.0;
    const std::array<std::pair<double, double>, 5> params{
        {{0.0, kTwoPi}, {1.0, kTwoPi}, {2.0, kTwoPi}, {0.5, kPi}, {2.0, 5.0}}};
    for (const auto& [F, beta] : params) {
        TimePath path = build_time_path(F, beta, 50);
        r = std::max(r, rel_gap(path.arclength(), 4.0 * F + beta));
    }
    return {r, static_cast<long>(params.size())};
}

std::pair<double, long> run_endpoint_closure(Rng& rng,
                                             const VerifyConfig& c) {
    (void)rng;
    double r = 0.0;
    const std::array<double, 4> fs{0.3, 1.0, 2.0, 5.0};
    for (double F : fs) {
        CylinderPath mapped =
            map_to_cylinder(build_time_path(F, c.beta, 64), 0.7);
        const CylinderPoint& first = mapped.samples.front().c;
        const CylinderPoint& last = mapped.samples.back().c;
        double du = std::abs(first.u0 - last.u0);
        double dv = std::min(std::abs(first.v0 - last.v0),
                             kTwoPi - std::abs(first.v0 - last.v0));
        r = std::max(r, std::hypot(du, dv));
    }
    return {r, static_cast<long>(fs.size())};
}

std::pair<double, long> run_q_pi_consistency(Rng& rng,
                                             const VerifyConfig& c) {
    (void)rng;
    double r = 0.0;
    TimePath path = build_time_path(1.3, c.beta, c.contour_n);
    double x1 = 0.4;
    CylinderPath cyl = map_to_cylinder(path, x1);
    V0Path direct = map_to_v0(path, x1);
    for (std::size_t i = 0; i < direct.samples.size(); ++i) {
        r = std::max(r, point_gap(lift_q(cyl.samples[i].c),
                                  direct.samples[i].p));
    }
    return {r, static_cast<long>(direct.samples.size())};
}

std::pair<double, long> run_circle_monotone(Rng& rng,
                                            const VerifyConfig& c) {
    (void)rng;
    const std::array<double, 4> fs{1.0, 0.5, 0.1, 0.01};
    std::array<double, 4> d{};
    for (std::size_t i = 0; i < fs.size(); ++i) {
        d[i] = circle_distance(fs[i], c.beta, 0.0, c.contour_n);
    }
    double residual = 0.0;
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
        residual = std::max(residual, d[i + 1] - d[i]);
    }
    residual = std::max(residual, d.back() - 0.02);
    return {std::max(residual, 0.0), static_cast<long>(fs.size())};
}

std::pair<double, long> run_slice_landing(Rng& rng, const VerifyConfig& c) {
    (void)rng;
    double r = 0.0;
    V0Path mapped = map_to_v0(build_time_path(2.0, c.beta, c.contour_n), 0.5);
    long n = 0;
    for (const V0Sample& s : mapped.samples) {
        if (s.segment == 0) {
            ++n;
            if (!in_universe(Universe::one, s.p)) r = std::max(r, 1.0);
        } else if (s.segment == 2) {
            ++n;
            if (!in_universe(Universe::two, s.p)) r = std::max(r, 1.0);
        } else {
            continue;
        }
        double scale = std::max({1.0, std::abs(s.p.eta()),
                                 std::abs(s.p.xi())});
        double imag = std::max(std::abs(s.p.eta().imag()),
                               std::abs(s.p.xi().imag()));
        r = std::max(r, imag / scale);
    }
    return {r, n};
}

std::pair<double, long> run_tilde_field(Rng& rng, const VerifyConfig& c) {
    double r = 0.0;
    long n = n_kilo(c);
    Field phi = [](const V0Point& p) {
        return p.eta() * p.xi() + cone_form(p) + Complex(0.3, 0.7) * p.xi();
    };
    SliceField phi0 = restrict_field(phi, ImaginaryTime{0.4});
    SliceField phi1 = restrict_field(phi, RealTimeOne{});
    SliceField phi2 = restrict_field(phi, RealTimeTwo{});
    for (long i = 0; i < n; ++i) {
        double t = rng.uniform(-2.0, 2.0);
        double x1 = rng.uniform(-2.0, 2.0);
        Complex tilde = phi2(t, x1);
        Complex via_negation =
            phi(negate(universe_point(Universe::one, t, x1)));
        if (tilde != via_negation) r = std::max(r, 1.0);
        if (phi1(t, x1) != phi(universe_point(Universe::one, t, x1))) {
            r = std::max(r, 1.0);
        }
        double tau = rng.uniform(0.0, kTwoPi);
        if (phi0(tau, x1) != phi(q_imaginary(0.4, tau, x1))) {
            r = std::max(r, 1.0);
        }
    }
    return {r, n};
}

// ---- registry ----

constexpr std::array<Check, 11> kGroupChecks{{
    {"group.associativity", 1e-12, run_associativity},
    {"group.commutativity", 1e-12, run_commutativity},
    {"group.identity_exact", 1e-12, run_identity_exact},
    {"group.inverse_law", 1e-12, run_inverse_law},
    {"group.representation_hom", 1e-12, run_representation_hom},
    {"group.det_matches_cone", 1e-13, run_det_matches_cone},
    {"group.cone_multiplicative", 1e-12, run_cone_multiplicative},
    {"group.diagonal_isomorphism", 1e-12, run_diagonal_isomorphism},
    {"group.diagonal_roundtrip", 1e-13, run_diagonal_roundtrip},
    {"group.conjugation_identity", 1e-12, run_conjugation_identity},
    {"group.lorentz_boost_rep", 1e-12, run_lorentz_boost_rep},
}};

constexpr std::array<Check, 1> kGroupChecks2{{
    {"group.g2_closure", 1e-10, run_g2_closure},
}};

constexpr std::array<Check, 8> kCoverChecks{{
    {"cover.exp_homomorphism", 1e-10, run_exp_homomorphism},
    {"cover.exp_translation_correspondence", 1e-10, run_exp_translation},
    {"cover.lattice_kernel_exhaustive", 1e-12, run_lattice_kernel},
    {"cover.log_exp_roundtrip", 1e-12, run_log_exp_roundtrip},
    {"cover.log_exp_lattice", 0.0, run_log_exp_lattice},
    {"cover.q_pi_factorization", 1e-13, run_q_pi_factorization},
    {"cover.exp_2pi_periodicity", 1e-12, run_exp_periodicity},
    {"cover.cone_form_exponential", 1e-12, run_cone_exponential},
}};

constexpr std::array<Check, 8> kMetricChecks{{
    {"metric.exp_pullback_plane", 1e-6, run_exp_pullback_plane},
    {"metric.exp_pullback_real_lines", 1e-6, run_exp_pullback_real_lines},
    {"metric.exp_pullback_complex_lines", 1e-6,
     run_exp_pullback_complex_lines},
    {"metric.left_translation_isometry", 1e-6,
     run_left_translation_isometry},
    {"metric.alpha_scaling", 1e-13, run_alpha_scaling},
    {"metric.fd_quadratic_exact", 1e-9, run_fd_quadratic_exact},
    {"metric.homogeneity_reflection", 1e-13, run_homogeneity_reflection},
    {"metric.full_metric_consistency", 1e-13, run_full_metric_consistency},
}};

constexpr std::array<Check, 5> kKillingChecks{{
    {"killing.flow_isometry", 1e-6, run_flow_isometry},
    {"killing.generator_matches_flow_derivative", 1e-6,
     run_generator_matches_flow},
    {"killing.flow_composition", 1e-11, run_flow_composition},
    {"killing.generator_bilinearity", 1e-13, run_generator_bilinearity},
    {"killing.causal_character_identity", 1e-12, run_causal_character},
}};

constexpr std::array<Check, 8> kEmbedChecks{{
    {"embed.slice_coherence", 1e-13, run_slice_coherence},
    {"embed.euclidean_pullback", 1e-6, run_euclidean_pullback},
    {"embed.minkowski_pullback", 1e-6, run_minkowski_pullback},
    {"embed.negation_relation", 1e-12, run_negation_relation},
    {"embed.translation_relation", 1e-12, run_translation_relation},
    {"embed.shared_axis", 1e-13, run_shared_axis},
    {"embed.universe_signs", 1e-10, run_universe_signs},
    {"embed.injectivity_grid", 0.0, run_injectivity_grid},
}};

constexpr std::array<Check, 6> kContourChecks{{
    {"contour.arclength", 1e-12, run_arclength},
    {"contour.endpoint_closure", 1e-12, run_endpoint_closure},
    {"contour.q_pi_consistency", 1e-12, run_q_pi_consistency},
    {"contour.circle_deformation_monotone", 0.0, run_circle_monotone},
    {"contour.slice_landing", 1e-10, run_slice_landing},
    {"contour.tilde_field_relation", 0.0, run_tilde_field},
}};

void append_checks(std::vector<const Check*>& out,
                   std::span<const Check> checks) {
    for (const Check& c : checks) out.push_back(&c);
}

std::vector<const Check*> checks_for(const std::string& suite) {
    std::vector<const Check*> out;
    bool all = suite == "all";
    if (all || suite == "group") {
        append_checks(out, kGroupChecks);
        append_checks(out, kGroupChecks2);
    }
    if (all || suite == "cover") append_checks(out, kCoverChecks);
    if (all || suite == "metric") append_checks(out, kMetricChecks);
    if (all || suite == "killing") append_checks(out, kKillingChecks);
    if (all || suite == "embed") append_checks(out, kEmbedChecks);
    if (all || suite == "contour") append_checks(out, kContourChecks);
    return out;
}

}  // namespace

bool is_suite_name(const std::string& name) {
    static const std::array<std::string_view, 7> names{
        "all", "group", "cover", "metric", "killing", "embed", "contour"};
    return std::find(names.begin(), names.end(), name) != names.end();
}

VerificationReport run_suite(const std::string& suite,
                             const VerifyConfig& config) {
    if (!is_suite_name(suite)) {
        throw InvalidParamError("run_suite: unknown suite '" + suite + "'");
    }
    auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.suite = suite;
    report.config = config;
    report.pass = true;
    for (const Check* check : checks_for(suite)) {
        Rng rng(check_seed(config.seed, check->id));
        auto [residual, samples] = check->run(rng, config);
        double tol = config.tol_override.value_or(check->default_tol);
        bool pass = residual <= tol;
        report.checks.push_back({check->id, samples, residual, tol, pass});
        report.pass = report.pass && pass;
    }
    auto end = std::chrono::steady_clock::now();
    report.wall_time_ms =
        std::chrono::duration<double, std::milli>(end - start).count();
    return report;
}

}  // namespace etaxi
