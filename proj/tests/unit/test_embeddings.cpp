#include <cmath>
#include <limits>
#include <numbers>

#include "doctest.h"
#include "etaxi/embeddings.hpp"

using namespace etaxi;

namespace {

constexpr double kPi = std::numbers::pi;

double point_gap(const V0Point& a, const V0Point& b) {
    return rel_gap2(a.eta(), a.xi(), b.eta(), b.xi());
}

}  // namespace

TEST_CASE("imaginary-kind slice at t = 0 traces the unit circle pattern") {
    // (i e^x1 sin tau, e^x1 cos tau) for a few angles.
    for (double tau : {0.1, 1.0, 2.5, 4.0, 5.9}) {
        for (double x1 : {-0.7, 0.0, 1.2}) {
            V0Point p = q_imaginary(0.0, tau, x1);
            double r = std::exp(x1);
            CHECK(std::abs(p.eta() - Complex{0.0, r * std::sin(tau)}) <
                  1e-14 * r);
            CHECK(std::abs(p.xi() - Complex{r * std::cos(tau), 0.0}) <
                  1e-14 * r);
        }
    }
}

TEST_CASE("real-kind slice worked values") {
    // tau = 0, t = 0, x1 = 0 is the identity.
    V0Point e = q_real(0.0, 0.0, 0.0);
    CHECK(e.eta() == Complex{0.0, 0.0});
    CHECK(e.xi() == Complex{1.0, 0.0});

    // tau = 0 gives (e^x1 sinh t, e^x1 cosh t) with real entries.
    V0Point p = q_real(0.0, 0.75, -0.3);
    double r = std::exp(-0.3);
    CHECK(p.eta().real() == doctest::Approx(r * std::sinh(0.75)).epsilon(1e-14));
    CHECK(p.xi().real() == doctest::Approx(r * std::cosh(0.75)).epsilon(1e-14));
    CHECK(p.eta().imag() == 0.0);
    CHECK(p.xi().imag() == 0.0);
}

TEST_CASE("advancing tau by pi negates the slice pointwise") {
    for (double tau : {0.0, 0.4, 2.0}) {
        for (double t : {-1.1, 0.0, 0.8}) {
            V0Point plus = q_real(tau + kPi, t, 0.5);
            V0Point neg = negate(q_real(tau, t, 0.5));
            CHECK(point_gap(plus, neg) < 1e-14);
        }
    }
}

TEST_CASE("universe points and membership") {
    V0Point one = universe_point(Universe::one, 0.7, -0.2);
    V0Point two = universe_point(Universe::two, 0.7, -0.2);

    CHECK(one.xi().real() > 0.0);
    CHECK(two.xi().real() < 0.0);
    CHECK(in_universe(Universe::one, one));
    CHECK(in_universe(Universe::two, two));
    CHECK_FALSE(in_universe(Universe::two, one));
    CHECK_FALSE(in_universe(Universe::one, two));

    CHECK(point_gap(two, negate(one)) < 1e-14);

    // Complex entries fail membership even with unit cone form.
    V0Point rot = make_point({0.0, std::sin(1.0)}, {std::cos(1.0), 0.0});
    CHECK_FALSE(in_universe(Universe::one, rot));

    CHECK(in_universe(Universe::one, identity_point()));
    CHECK(in_universe(Universe::two, negate(identity_point())));
}

TEST_CASE("slice translation rotates the real slices into each other") {
    // Pushing the identity by tau' = pi/2 lands on (i, 0).
    V0Point quarter = translate_real_slice(kPi / 2.0, identity_point());
    CHECK(std::abs(quarter.eta() - Complex{0.0, 1.0}) < 1e-15);
    CHECK(std::abs(quarter.xi()) < 1e-15);

    // Generic slide: tau -> tau + tau' pointwise in (t, x1).
    for (double tau_prime : {0.3, 1.7, 5.0}) {
        V0Point moved =
            translate_real_slice(tau_prime, q_real(0.9, -0.6, 0.2));
        V0Point direct = q_real(0.9 + tau_prime, -0.6, 0.2);
        CHECK(point_gap(moved, direct) < 1e-13);
    }

    // tau' = 0 translates by the identity, which acts exactly.
    V0Point p = q_real(0.3, 0.5, -0.1);
    V0Point same = translate_real_slice(0.0, p);
    CHECK(same.eta() == p.eta());
    CHECK(same.xi() == p.xi());

    double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(translate_real_slice(nan, p), NonFiniteError);
}

TEST_CASE("slice points normalize tau and defer to the embeddings") {
    SlicePoint s(SliceKind::real, 0.4, -kPi / 2.0, 0.1);
    CHECK(s.tau == doctest::Approx(1.5 * kPi).epsilon(1e-15));

    V0Point via_slice = slice_to_v0(s);
    V0Point direct = q_real(s.tau, s.t, s.x1);
    CHECK(via_slice.eta() == direct.eta());
    CHECK(via_slice.xi() == direct.xi());

    SlicePoint si(SliceKind::imaginary, 0.4, 1.0, 0.1);
    V0Point vi = slice_to_v0(si);
    V0Point di = q_imaginary(0.4, 1.0, 0.1);
    CHECK(vi.eta() == di.eta());
    CHECK(vi.xi() == di.xi());

    double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(SlicePoint(SliceKind::real, nan, 0.0, 0.0),
                    NonFiniteError);
}

TEST_CASE("both slice kinds share the tau = 0 axis") {
    for (double t : {-1.0, 0.0, 0.6}) {
        V0Point qi = q_imaginary(t, 0.0, 0.4);
        V0Point qr = q_real(0.0, t, 0.4);
        CHECK(qi.eta() == qr.eta());
        CHECK(qi.xi() == qr.xi());
    }
}
