#pragma once

#include "carlson/errors.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <utility>

namespace carlson {

/// Fixed-precision MPFR real with stack storage; no global precision state is touched.
template <unsigned Digits10>
using mp_real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<Digits10, boost::multiprecision::allocate_stack>,
    boost::multiprecision::et_off>;

using hp50 = mp_real<50>;
using hp100 = mp_real<100>;
using hp250 = mp_real<250>;
using hp500 = mp_real<500>;

/// Working type for all "40 digit" comparisons.
using hp_t = hp50;

inline constexpr unsigned kMinDigits = 17;
inline constexpr unsigned kMaxDigits = 200;
inline constexpr unsigned kDefaultDigits = 40;
/// Largest digit count the family/verifier layer can work at.
inline constexpr unsigned kMaxWorkingDigits = 95;

template <class T>
inline constexpr bool is_mp_real_v = false;
template <unsigned D>
inline constexpr bool is_mp_real_v<mp_real<D>> = true;

/// Default oracle digits; CARLSON_PRECISION overrides kDefaultDigits when set to a value in range.
unsigned default_digits();

/// Evaluation precision: plain double, or high precision with a digit count.
class Precision {
public:
    static constexpr Precision Double() { return Precision{0}; }
    static Precision Digits(unsigned digits);

    constexpr bool is_double() const { return digits_ == 0; }
    constexpr unsigned digits() const { return digits_; }

private:
    constexpr explicit Precision(unsigned d) : digits_(d) {}
    unsigned digits_;
};

/// Calls `fn.template operator()<R>()` with the smallest working type carrying `digits` plus guard digits.
/// Throws PrecisionError above kMaxWorkingDigits.
template <class Fn>
decltype(auto) with_working_type(unsigned digits, Fn&& fn) {
    if (digits < kMinDigits || digits > kMaxWorkingDigits) {
        throw PrecisionError("working precision must be in [17, 95] digits, got " + std::to_string(digits));
    }
    if (digits <= 45) return std::forward<Fn>(fn).template operator()<hp50>();
    return std::forward<Fn>(fn).template operator()<hp100>();
}

}  // namespace carlson
