#pragma once

#include "carlson/errors.hpp"
#include "carlson/precision.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <numbers>
#include <string>
#include <string_view>

namespace carlson::oracle {

/// A high-precision result rendered to `digits` significant decimal digits.
struct HPValue {
    unsigned digits = kDefaultDigits;
    std::string decimal;  // scientific notation, `digits` significant digits

    double to_double() const;

    template <class R>
    R as() const { return R(decimal); }
};

enum class Constant {
    Pi,
    TwoOverPi,
    FourOverPiSq,
    OneThird,
    Cbrt4,
    TwoSqrt2,
    BestUpperThm3,  // (1/2 + sqrt 2) * pi
};

/// Parses PI, TWO_OVER_PI, FOUR_OVER_PI_SQ, ONE_THIRD, CBRT4, TWO_SQRT2, BEST_UPPER_THM3.
Constant constant_from_name(std::string_view name);
std::string_view constant_name(Constant c);

template <class R>
R pi() {
    if constexpr (std::is_same_v<R, double>) {
        return std::numbers::pi;
    } else {
        return boost::math::constants::pi<R>();
    }
}

template <class R>
R constant(Constant c) {
    using std::cbrt;
    using std::sqrt;
    const R p = pi<R>();
    switch (c) {
    case Constant::Pi: return p;
    case Constant::TwoOverPi: return R(2) / p;
    case Constant::FourOverPiSq: return R(4) / (p * p);
    case Constant::OneThird: return R(1) / R(3);
    case Constant::Cbrt4: return cbrt(R(4));
    case Constant::TwoSqrt2: return R(2) * sqrt(R(2));
    case Constant::BestUpperThm3: return (R(1) / R(2) + sqrt(R(2))) * p;
    }
    throw ArgumentError("unknown constant");
}

/// arccos through the half-angle form 2*atan(sqrt((1-x)/(1+x))) on (0, 1] and reflection
/// pi - arccos(-x) on [-1, 0). Precondition |x| <= 1 (not checked here).
template <class R>
R arccos(const R& x) {
    using std::atan;
    using std::sqrt;
    if (x == 0) return pi<R>() / 2;
    if (x < 0) return pi<R>() - arccos<R>(R(-x));
    const R one(1);
    return 2 * atan(sqrt((one - x) / (one + x)));
}

/// Double-precision arccos, stable near +/-1; error within a few ulp.
double arccos_stable(double x);

/// arccos(x) for a decimal string x, correct to relative 10^(1 - digits).
/// Throws DomainError for |x| > 1, PrecisionError for digits outside [17, 200].
HPValue arccos_hp(std::string_view x, unsigned digits = kDefaultDigits);
HPValue arccos_hp(double x, unsigned digits = kDefaultDigits);

HPValue const_hp(Constant c, unsigned digits = kDefaultDigits);
HPValue const_hp(std::string_view name, unsigned digits = kDefaultDigits);

}  // namespace carlson::oracle
