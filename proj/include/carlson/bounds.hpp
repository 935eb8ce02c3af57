#pragma once

#include "carlson/classifier.hpp"
#include "carlson/family.hpp"

#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

namespace carlson {

enum class FamilyKind { Carlson, Thm2, Thm2Reversed, Thm3, Thm2MaxCoef, Thm2MinCoef };

/// One of the two-sided (or one-sided) arccos inequality families.
///
///   carlson           6 sqrt(1-x) / (2 sqrt2 + sqrt(1+x))  <  acos x  <  cbrt4 sqrt(1-x) / (1+x)^(1/6)
///   thm2(b)           pi/2 * s(x)                           <  acos x  <  2^(b+1/2) * s(x),   b >= 1/6
///   thm2_reversed(b)  2^(b+1/2) * s(x)                      <  acos x  <  pi/2 * s(x),        b <= 2/pi - 1/2
///   thm3              6 sqrt(1-x) / (2 sqrt2 + sqrt(1+x))  <  acos x  <  (1/2+sqrt2) pi sqrt(1-x) / (2 sqrt2 + sqrt(1+x))
///   thm2_maxcoef(a,b) acos x <= C1 (1-x)^a / (1+x)^b  with C1 the envelope value at x1
///   thm2_mincoef(a,b) acos x >= C2 (1-x)^a / (1+x)^b  with C2 the envelope value at x2
///
/// where s(x) = sqrt(1-x) / (1+x)^b. The thresholds b = 1/6 and b = 2/pi - 1/2 have dedicated
/// constructors that keep the exponent exact at high precision.
class BoundFamily {
public:
    static BoundFamily carlson();
    static BoundFamily thm3();
    static BoundFamily thm2(double b);
    static BoundFamily thm2_threshold();  // b = 1/6
    static BoundFamily thm2_reversed(double b);
    static BoundFamily thm2_reversed_threshold();  // b = 2/pi - 1/2
    static BoundFamily max_coef(const Params& p);
    static BoundFamily min_coef(const Params& p);

    FamilyKind kind() const { return kind_; }
    const Params& params() const { return params_; }
    double b() const { return params_.b; }
    bool is_threshold() const { return threshold_; }

    /// Stable identifier, e.g. "carlson", "thm2(1/6)", "thm2(0.2)", "thm2_maxcoef(0.5,0.14)".
    std::string id() const;

    /// Whether the inequality is certified for these parameters.
    bool valid() const;

    /// Exponent b at working type R (exact threshold constant where applicable).
    template <class R>
    R exponent() const {
        if (threshold_ && kind_ == FamilyKind::Thm2) return R(1) / 6;
        if (threshold_ && kind_ == FamilyKind::Thm2Reversed) return R(2) / oracle::pi<R>() - R(1) / 2;
        return R(params_.b);
    }

private:
    BoundFamily(FamilyKind kind, Params p, bool threshold) : kind_(kind), params_(p), threshold_(threshold) {}

    FamilyKind kind_;
    Params params_;
    bool threshold_ = false;
};

/// Accepts the identifiers produced by BoundFamily::id(); bare "thm2" / "thm2_reversed" select
/// the threshold members.
BoundFamily parse_family(std::string_view text);
std::vector<BoundFamily> parse_families(std::string_view comma_separated);

/// carlson, thm2(1/6), thm2_reversed(2/pi-1/2), thm3.
std::vector<BoundFamily> default_families();

/// Lower/upper pair; either side may be absent for one-sided families.
struct BoundInterval {
    std::optional<double> lower;
    std::optional<double> upper;
    std::string lower_family;
    std::string upper_family;

    double width() const;  // +inf when one-sided
};

namespace bounds {

template <class R>
struct Sides {
    std::optional<R> lower;
    std::optional<R> upper;
};

/// Coefficient C1 (max) or C2 (min) at working type R; throws InvalidFamily when the root is
/// missing or outside (0, 1).
template <class R>
R coefficient(const BoundFamily& fam) {
    const auto roots = classifier::envelope_roots<R>(fam.params());
    const auto& root = fam.kind() == FamilyKind::Thm2MaxCoef ? roots.x1 : roots.x2;
    if (!root || !(*root > 0 && *root < 1)) throw InvalidFamily(fam.id() + ": extremum point not in (0, 1)");
    return family::envelope_at<R>(fam.params(), *root);
}

/// Raw family expressions at x in [0, 1): no validity check, no outward rounding.
template <class R>
Sides<R> family_sides(const BoundFamily& fam, const R& x) {
    using std::sqrt;
    const R one(1);
    const R root = sqrt(one - x);
    const R pi = oracle::pi<R>();
    const R two_sqrt2 = 2 * sqrt(R(2));
    Sides<R> out;
    switch (fam.kind()) {
    case FamilyKind::Carlson: {
        const R sixth = one / 6;
        out.lower = 6 * root / (two_sqrt2 + sqrt(one + x));
        out.upper = oracle::constant<R>(oracle::Constant::Cbrt4) * root / family::pow1p<R>(x, sixth);
        break;
    }
    case FamilyKind::Thm3: {
        const R den = two_sqrt2 + sqrt(one + x);
        out.lower = 6 * root / den;
        out.upper = oracle::constant<R>(oracle::Constant::BestUpperThm3) * root / den;
        break;
    }
    case FamilyKind::Thm2:
    case FamilyKind::Thm2Reversed: {
        const R b = fam.exponent<R>();
        const R shape = root / family::pow1p<R>(x, b);
        const R small = pi / 2 * shape;
        const R large = family::pow1p<R>(one, b + one / 2) * shape;  // 2^(b+1/2)
        if (fam.kind() == FamilyKind::Thm2) {
            out.lower = small;
            out.upper = large;
        } else {
            out.lower = large;
            out.upper = small;
        }
        break;
    }
    case FamilyKind::Thm2MaxCoef:
    case FamilyKind::Thm2MinCoef: {
        const Params& p = fam.params();
        const R shape = family::pow1p<R>(R(-x), R(p.a)) / family::pow1p<R>(x, R(p.b));
        R c;
        if constexpr (std::is_same_v<R, double>) {
            // Coefficient from 40 digits, rounded in the direction that keeps the bound certified.
            const double rounded = static_cast<double>(coefficient<hp_t>(fam));
            c = std::nextafter(rounded, fam.kind() == FamilyKind::Thm2MaxCoef ? 2 * rounded + 1 : 0.0);
        } else {
            c = coefficient<R>(fam);
        }
        if (fam.kind() == FamilyKind::Thm2MaxCoef) {
            out.upper = c * shape;
        } else {
            out.lower = c * shape;
        }
        break;
    }
    }
    return out;
}

}  // namespace bounds

/// Certified bounds of one family at x in (0, 1), rounded outward.
/// Throws InvalidFamily when the family is not valid, DomainError outside (0, 1).
BoundInterval family_bounds(const BoundFamily& fam, double x);

/// Tightest certified interval over `enabled` for x in (-1, 1]. Negative x goes through
/// arccos x = pi - arccos(-x). Always two-sided: the fallback sides are 0 and pi/2 ("trivial").
BoundInterval best_envelope(double x, std::span<const BoundFamily> enabled);

struct Approximation {
    double value = 0.0;
    double radius = 0.0;  // |value - arccos x| <= radius
};

/// Midpoint of best_envelope over the default families, with its certified radius.
Approximation approx_arccos(double x);

struct TableRow {
    double x = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    double reference = 0.0;  // 40-digit arccos rounded to double
    double width = 0.0;
    std::string lower_family;
    std::string upper_family;
};

/// One row per grid point; grid must be strictly increasing inside (0, 1).
std::vector<TableRow> bound_table(std::span<const double> grid, std::span<const BoundFamily> enabled);

}  // namespace carlson
