#include "carlson/classifier.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace carlson {

namespace {

constexpr double kTwoOverPi = 2.0 / std::numbers::pi;
constexpr double kFourOverPiSq = 4.0 / (std::numbers::pi * std::numbers::pi);
constexpr double kThird = 1.0 / 3.0;

constexpr std::array<std::pair<RegionClass, std::string_view>, 6> kClassNames{{
    {RegionClass::StrictlyDecreasing, "StrictlyDecreasing"},
    {RegionClass::StrictlyIncreasing, "StrictlyIncreasing"},
    {RegionClass::UniqueMax, "UniqueMax"},
    {RegionClass::UniqueMin, "UniqueMin"},
    {RegionClass::MaxThenMin, "MaxThenMin"},
    {RegionClass::Indeterminate, "Indeterminate"},
}};

bool in_middle_band(double d) { return kThird < d && d < kFourOverPiSq; }

hp_t two_over_pi_hp() { return hp_t(2) / oracle::pi<hp_t>(); }
hp_t four_over_pi_sq_hp() {
    const hp_t pi = oracle::pi<hp_t>();
    return hp_t(4) / (pi * pi);
}

// Sign of a quantity: trusted in double when |approx| >= tol, otherwise re-evaluated at 40 digits;
// 0 when the 40-digit value is still below tol.
template <class Exact>
int robust_sign(double approx, double tol, Exact&& exact) {
    if (std::abs(approx) >= tol) return approx > 0 ? 1 : -1;
    const hp_t v = exact();
    if (abs(v) >= tol) return v > 0 ? 1 : -1;
    return 0;
}

int sign_g_at_0(const Params& p, double tol) {
    return robust_sign(p.a + p.b - kTwoOverPi, tol,
                       [&] { return hp_t(p.a) + hp_t(p.b) - two_over_pi_hp(); });
}

int sign_g_at_1(const Params& p, double tol) {
    return robust_sign(2.0 * p.a - 1.0, tol, [&] { return 2 * hp_t(p.a) - 1; });
}

int sign_gp_at_0(const Params& p, double tol) {
    return robust_sign(p.a - p.b - kFourOverPiSq, tol,
                       [&] { return hp_t(p.a) - hp_t(p.b) - four_over_pi_sq_hp(); });
}

int sign_gp_at_1(const Params& p, double tol) {
    return robust_sign(p.a - p.b - kThird, tol,
                       [&] { return hp_t(p.a) - hp_t(p.b) - hp_t(1) / 3; });
}

// Bisection on g' (strictly increasing) at 40 digits; assumes g'(0) < 0 < g'(1-).
double bisect_g_prime(const Params& p, double tol) {
    hp_t lo(0), hi(1);
    for (int it = 0; it < 200 && hi - lo > tol; ++it) {
        const hp_t mid = (lo + hi) / 2;
        if (family::g_prime_at<hp_t>(p, mid) < 0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return static_cast<double>((lo + hi) / 2);
}

RegionClass from_monotone_g(bool g_increasing, int s0, int s1) {
    if (g_increasing) {
        if (s0 >= 0) return RegionClass::StrictlyIncreasing;
        if (s1 <= 0) return RegionClass::StrictlyDecreasing;
        return RegionClass::UniqueMin;
    }
    if (s1 >= 0) return RegionClass::StrictlyIncreasing;
    if (s0 <= 0) return RegionClass::StrictlyDecreasing;
    return RegionClass::UniqueMax;
}

}  // namespace

std::string_view to_string(RegionClass c) {
    for (const auto& [k, n] : kClassNames) {
        if (k == c) return n;
    }
    return "?";
}

RegionClass region_class_from_name(std::string_view name) {
    for (const auto& [k, n] : kClassNames) {
        if (n == name) return k;
    }
    throw ArgumentError("unknown region class '" + std::string(name) + "'");
}

namespace conditions {

double threshold_curve(double diff) {
    if (!(diff > 0.25)) throw DomainError("threshold_curve: requires a - b > 1/4");
    return 2.0 * diff * std::sqrt(diff) / std::sqrt(4.0 * diff - 1.0);
}

bool decreasing(const Params& p) { return p.b <= kTwoOverPi - p.a && p.a <= 0.5; }

bool increasing(const Params& p) {
    const double d = p.diff();
    if (kTwoOverPi - p.a <= p.b && p.b <= p.a - kFourOverPiSq) return true;
    if (0.5 <= p.a && p.a <= p.b + kThird) return true;
    return in_middle_band(d) && p.sum() >= threshold_curve(d);
}

bool unique_max(const Params& p) {
    return in_middle_band(p.diff()) && kTwoOverPi - p.b < p.a && p.a <= 0.5;
}

bool unique_min(const Params& p) {
    return in_middle_band(p.diff()) && 0.5 < p.a && p.a <= kTwoOverPi - p.b;
}

bool max_then_min(const Params& p) {
    const double d = p.diff();
    return in_middle_band(d) && kTwoOverPi < p.sum() && p.sum() < threshold_curve(d) && p.a > 0.5;
}

}  // namespace conditions

RegionClass classify_symbolic(const Params& p) {
    if (conditions::decreasing(p)) return RegionClass::StrictlyDecreasing;
    if (conditions::increasing(p)) return RegionClass::StrictlyIncreasing;
    if (conditions::unique_max(p)) return RegionClass::UniqueMax;
    if (conditions::unique_min(p)) return RegionClass::UniqueMin;
    if (conditions::max_then_min(p)) return RegionClass::MaxThenMin;
    return RegionClass::Indeterminate;
}

std::optional<double> critical_point_g(const Params& p, double tol) {
    if (!(tol > 0.0)) throw ArgumentError("critical_point_g: tol must be positive");
    if (sign_gp_at_0(p, tol) < 0 && sign_gp_at_1(p, tol) > 0) return bisect_g_prime(p, tol);
    return std::nullopt;
}

RegionClass classify_numeric(const Params& p, double tol) {
    if (!(tol > 0.0)) throw ArgumentError("classify_numeric: tol must be positive");
    const int s0 = sign_g_at_0(p, tol);
    const int s1 = sign_g_at_1(p, tol);
    const int gp0 = sign_gp_at_0(p, tol);
    const int gp1 = sign_gp_at_1(p, tol);

    if (gp0 >= 0) return from_monotone_g(true, s0, s1);
    if (gp1 <= 0) return from_monotone_g(false, s0, s1);

    // g is convex-shaped: decreasing to its minimum at x0, then increasing.
    const double x0 = bisect_g_prime(p, std::min(tol, 1e-12));
    const int m = robust_sign(g_eval(p, {x0}), tol, [&] { return family::g_at<hp_t>(p, hp_t(x0)); });
    if (m == 0) return RegionClass::Indeterminate;
    if (m > 0) return RegionClass::StrictlyIncreasing;
    const bool left_zero = s0 > 0;
    const bool right_zero = s1 > 0;
    if (left_zero && right_zero) return RegionClass::MaxThenMin;
    if (left_zero) return RegionClass::UniqueMax;
    if (right_zero) return RegionClass::UniqueMin;
    return RegionClass::StrictlyDecreasing;
}

ExtremaReport extrema_points(const Params& p) {
    const hp_t a(p.a), b(p.b);
    const hp_t s = a + b;
    const hp_t d = a - b;
    const hp_t qa = d * d;
    const hp_t qb = s * (2 * d - 1);
    const hp_t qc = s * s - a + b;

    const auto roots = classifier::envelope_roots<hp_t>(p);
    ExtremaReport r;
    r.disc_closed = static_cast<double>(roots.disc);
    r.disc_quadratic = static_cast<double>(qb * qb - 4 * qa * qc);

    auto coeff = [&](const hp_t& x) -> std::optional<double> {
        if (!(x > 0 && x < 1)) return std::nullopt;
        try {
            return static_cast<double>(family::envelope_at<hp_t>(p, x));
        } catch (const PoleError&) {
            return std::nullopt;
        }
    };
    if (roots.x1) {
        r.x1 = static_cast<double>(*roots.x1);
        r.max_coeff = coeff(*roots.x1);
    }
    if (roots.x2) {
        r.x2 = static_cast<double>(*roots.x2);
        r.min_coeff = coeff(*roots.x2);
    }
    return r;
}

bool necessary_increasing(const Params& p) {
    return hp_t(p.a) + hp_t(p.b) - two_over_pi_hp() >= 0 && p.a >= 0.5;
}

double boundary_distance(const Params& p) {
    const double d = p.diff();
    double dist = std::min({std::abs(p.sum() - kTwoOverPi), std::abs(p.a - 0.5), std::abs(d - kThird),
                            std::abs(d - kFourOverPiSq)});
    if (kThird <= d && d <= kFourOverPiSq) {
        dist = std::min(dist, std::abs(p.sum() - conditions::threshold_curve(d)));
    }
    return dist;
}

}  // namespace carlson
