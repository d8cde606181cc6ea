#include "etaxi/rng.hpp"

namespace etaxi {

V0Point Rng::point(double box, double min_cone) {
    for (int tries = 0; tries < 1000; ++tries) {
        Complex eta = complex_box(box);
        Complex xi = complex_box(box);
        if (std::abs((xi - eta) * (xi + eta)) >= min_cone) {
            return make_point(eta, xi, min_cone);
        }
    }
    throw InvalidParamError("Rng::point: rejection loop exhausted");
}

}  // namespace etaxi
