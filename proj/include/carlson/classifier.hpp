#pragma once

#include "carlson/family.hpp"

#include <optional>
#include <string_view>

namespace carlson {

enum class RegionClass {
    StrictlyDecreasing,
    StrictlyIncreasing,
    UniqueMax,
    UniqueMin,
    MaxThenMin,
    Indeterminate,
};

std::string_view to_string(RegionClass c);
RegionClass region_class_from_name(std::string_view name);

/// Roots of the envelope quadratic (a-b)^2 x^2 + (a+b)(2a-2b-1) x + (a+b)^2 - a + b
/// and the extremum bound coefficients they produce.
struct ExtremaReport {
    double disc_closed = 0.0;     // 16ab(b-a) + (a+b)^2
    double disc_quadratic = 0.0;  // B^2 - 4AC from the quadratic's coefficients
    std::optional<double> x1;
    std::optional<double> x2;
    std::optional<double> max_coeff;  // envelope(x1), present iff x1 in (0,1)
    std::optional<double> min_coeff;  // envelope(x2), present iff x2 in (0,1)
};

/// Symbolic region test: the five condition sets checked in order, first match wins.
/// Plain double arithmetic on the condition expressions.
RegionClass classify_symbolic(const Params& p);

/// Individual condition sets, exposed for tests and the bounds validity predicates.
namespace conditions {
bool decreasing(const Params& p);    // b <= 2/pi - a and a <= 1/2
bool increasing(const Params& p);    // union of three sets
bool unique_max(const Params& p);    // 1/3 < a-b < 4/pi^2 and 2/pi - b < a <= 1/2
bool unique_min(const Params& p);    // 1/3 < a-b < 4/pi^2 and 1/2 < a <= 2/pi - b
bool max_then_min(const Params& p);  // 1/3 < a-b < 4/pi^2, 2/pi < a+b < curve, a > 1/2
/// 2(a-b)^(3/2) / sqrt(4(a-b) - 1), the a+b threshold curve. Requires a-b > 1/4.
double threshold_curve(double diff);
}  // namespace conditions

/// Class reconstructed from the sign structure of g: g' increases from a-b-4/pi^2 to a-b-1/3,
/// g runs from a+b-2/pi to 2a-1. Values below `tol` in magnitude are re-evaluated at 40 digits;
/// endpoint values still below `tol` count as zero, an interior minimum still below `tol` gives
/// Indeterminate.
RegionClass classify_numeric(const Params& p, double tol = 1e-9);

/// Unique zero of g' in (0,1) by bisection to absolute `tol`, or nullopt when the endpoint limits
/// do not strictly bracket zero (limits within `tol` of zero count as zero).
std::optional<double> critical_point_g(const Params& p, double tol = 1e-12);

/// Throws DegenerateParams when a = b = 0.
ExtremaReport extrema_points(const Params& p);

/// Necessary condition for f to increase: b >= 2/pi - a and a >= 1/2 (signs taken at 40 digits).
bool necessary_increasing(const Params& p);

/// Smallest |expression| over the region boundaries a+b = 2/pi, a = 1/2, a-b = 1/3,
/// a-b = 4/pi^2 and a+b = threshold_curve(a-b).
double boundary_distance(const Params& p);

namespace classifier {

/// Closed-form roots (x1 <= x2 for a != b) at working type R; nullopt pair when disc <= 0.
template <class R>
struct Roots {
    R disc;
    std::optional<R> x1;
    std::optional<R> x2;
};

template <class R>
Roots<R> envelope_roots(const Params& p) {
    using std::sqrt;
    const R a(p.a), b(p.b);
    const R s = a + b;
    const R d = a - b;
    const R disc = 16 * a * b * (b - a) + s * s;
    Roots<R> out{disc, std::nullopt, std::nullopt};
    if (d == 0) {
        if (a == 0) throw DegenerateParams("extrema: a = b = 0 makes the envelope quadratic vanish");
        // Linear case -2a x + 4a^2 = 0; a sign change from + to - (a maximum) when a > 0.
        out.x1 = 2 * a;
        return out;
    }
    if (disc > 0) {
        const R root = sqrt(disc);
        const R num = s * (2 * b - 2 * a + 1);
        const R den = 2 * d * d;
        out.x1 = (num - root) / den;
        out.x2 = (num + root) / den;
    }
    return out;
}

}  // namespace classifier

}  // namespace carlson
