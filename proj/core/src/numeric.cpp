#include "etaxi/numeric.hpp"

#include <numbers>

namespace etaxi {

double mod_two_pi(double x) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double m = std::fmod(x, two_pi);
    if (m < 0.0) m += two_pi;
    if (m >= two_pi) m = 0.0;
    return m;
}

}  // namespace etaxi
