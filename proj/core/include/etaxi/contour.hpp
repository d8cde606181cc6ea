#pragma once

#include <array>
#include <functional>
#include <vector>

#include "etaxi/covering.hpp"
#include "etaxi/embeddings.hpp"

namespace etaxi {

// One point of the thermal contour in the complex time plane: arclength
// parameter s, complex time z = t + i sigma, and the segment index in
// traversal order (0..3 for C1, C3, C2, C4).
struct PathSample {
    double s;
    Complex z;
    int segment;
};

// Human name of a segment index in traversal order.
const char* segment_name(int segment);

// The piecewise-linear contour -F -> F -> F - i beta/2 -> -F - i beta/2
// -> -F - i beta. Vertices are stored in traversal order; the polyline
// holds n samples per segment with shared vertices duplicated, so the
// sample count is 4n.
struct TimePath {
    double F;
    double beta;
    int samples_per_segment;
    std::array<Complex, 5> vertices;
    std::vector<PathSample> polyline;

    // Sum of the four segment lengths: 4F + beta up to rounding.
    double arclength() const;
};

// Throws InvalidParamError for F < 0, beta <= 0, n < 2 or non-finite
// input. F = 0 degenerates C1 and C2 to points and the path to the
// vertical segment 0 -> -i beta.
TimePath build_time_path(double F, double beta, int n);

struct CylinderSample {
    double s;
    Complex z;
    int segment;
    CylinderPoint c;
};

struct V0Sample {
    double s;
    Complex z;
    int segment;
    V0Point p;
};

struct CylinderPath {
    double x1;
    std::vector<CylinderSample> samples;
};

struct V0Path {
    double x1;
    std::vector<V0Sample> samples;
};

// Each time sample z = t + i sigma goes to Pi(z, x1): note sigma <= 0 on
// the contour wraps into [0, 2pi).
CylinderPath map_to_cylinder(const TimePath& path, double x1);

// Each time sample z goes to exp_map(z, x1). Samples with sigma = 0 land
// on the tau = 0 real slice, sigma = -beta/2 with beta = 2pi on the
// tau = pi slice.
V0Path map_to_v0(const TimePath& path, double x1);

// Symmetric Hausdorff distance, in the (u0, v0) cylinder plane with
// angular metric min(|dv|, 2pi - |dv|), between the mapped contour and
// the circle {u0 = 0}. The circle is sampled with 4n points to match the
// path resolution. For beta = 2pi this tends to 0 as F -> 0.
double circle_distance(double F, double beta, double x1, int n);

using Field = std::function<Complex(const V0Point&)>;
using SliceField = std::function<Complex(double, double)>;

// Restriction modes: the imaginary-time field on (tau, x1) at fixed t,
// and the two real-time fields on (t, x1). The universe-two restriction
// is the tilde field, evaluated as phi(-Q_R0(t, x1)) via the negation
// relation, so it agrees with that composition exactly.
struct ImaginaryTime {
    double t = 0.0;
};
struct RealTimeOne {};
struct RealTimeTwo {};

SliceField restrict_field(Field phi, ImaginaryTime mode);
SliceField restrict_field(Field phi, RealTimeOne mode);
SliceField restrict_field(Field phi, RealTimeTwo mode);

}  // namespace etaxi
