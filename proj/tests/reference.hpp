#pragma once

// Reference values computed independently of the library: boost's decimal backend with its own
// acos, and a plain power series near x = 1.

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

namespace ref {

using dec = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<100>, boost::multiprecision::et_off>;

inline dec acos(const dec& x) { return boost::multiprecision::acos(x); }
inline dec acos(double x) { return acos(dec(x)); }
inline dec acos(const std::string& x) { return acos(dec(x)); }

// MPFR's own acos (not the half-angle route): fast enough for bulk sampling.
inline double acos_mpfr(double x) {
    using mp = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<40>, boost::multiprecision::et_off>;
    return static_cast<double>(boost::multiprecision::acos(mp(x)));
}

inline dec pi() { return boost::math::constants::pi<dec>(); }

// arccos(1 - t) = 2 arcsin(sqrt(t/2)) with the arcsin Maclaurin series; good for small t.
inline dec acos_one_minus(const dec& t) {
    const dec y = sqrt(t / 2);
    const dec y2 = y * y;
    dec term = y, sum = y;
    for (int k = 1; k < 200; ++k) {
        term *= y2 * dec(2 * k - 1) * dec(2 * k - 1) / (dec(2 * k) * dec(2 * k + 1));
        sum += term;
        if (term < sum * dec("1e-95")) break;
    }
    return 2 * sum;
}

inline double rel_err(const dec& got, const dec& want) {
    if (want == 0) return static_cast<double>(abs(got));
    return static_cast<double>(abs((got - want) / want));
}

// Distance in units in the last place between two finite doubles of the same sign.
inline std::uint64_t ulp_distance(double a, double b) {
    if (a == b) return 0;
    auto key = [](double v) {
        const auto bits = std::bit_cast<std::int64_t>(v);
        return bits < 0 ? std::numeric_limits<std::int64_t>::min() - bits : bits;
    };
    const std::int64_t ka = key(a), kb = key(b);
    return ka > kb ? static_cast<std::uint64_t>(ka - kb) : static_cast<std::uint64_t>(kb - ka);
}

// Uniform double in [0, 1).
template <class Rng>
double unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace ref
