#pragma once

#include <cstdint>
#include <random>

#include "etaxi/covering.hpp"
#include "etaxi/metric.hpp"

namespace etaxi {

// Deterministic sampler. mt19937_64 output is pinned by the standard and
// the 53-bit mapping below is exact, so sequences are identical across
// platforms for a given seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, 1).
    double unit() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    Complex complex_box(double box) {
        double re = uniform(-box, box);
        double im = uniform(-box, box);
        return {re, im};
    }

    // Complex components uniform in [-box, box], rejecting points whose
    // cone form is smaller than min_cone in magnitude.
    V0Point point(double box, double min_cone);

    Tangent tangent(double box) {
        Complex a = complex_box(box);
        Complex b = complex_box(box);
        return {a, b};
    }

    AlgebraVector algebra(double box) {
        Complex a = complex_box(box);
        Complex b = complex_box(box);
        return {a, b};
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace etaxi
