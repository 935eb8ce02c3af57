#include "carlson/oracle.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <ios>
#include <utility>

namespace carlson::oracle {

namespace {

constexpr std::array<std::pair<Constant, std::string_view>, 7> kConstantNames{{
    {Constant::Pi, "PI"},
    {Constant::TwoOverPi, "TWO_OVER_PI"},
    {Constant::FourOverPiSq, "FOUR_OVER_PI_SQ"},
    {Constant::OneThird, "ONE_THIRD"},
    {Constant::Cbrt4, "CBRT4"},
    {Constant::TwoSqrt2, "TWO_SQRT2"},
    {Constant::BestUpperThm3, "BEST_UPPER_THM3"},
}};

void check_digits(unsigned digits) {
    if (digits < kMinDigits || digits > kMaxDigits) {
        throw PrecisionError("digits must be in [17, 200], got " + std::to_string(digits));
    }
}

// Significant digits in the mantissa of a decimal literal; throws on malformed input.
unsigned mantissa_digits(std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    unsigned count = 0;
    bool leading = true;
    bool any = false;
    bool seen_point = false;
    for (; i < s.size(); ++i) {
        const char c = s[i];
        if (c == '.' && !seen_point) {
            seen_point = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c))) break;
        any = true;
        if (leading && c == '0') continue;
        leading = false;
        ++count;
    }
    if (!any) throw ArgumentError("not a decimal number: '" + std::string(s) + "'");
    if (i < s.size()) {
        if (s[i] != 'e' && s[i] != 'E') throw ArgumentError("not a decimal number: '" + std::string(s) + "'");
        ++i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
        if (i == s.size()) throw ArgumentError("not a decimal number: '" + std::string(s) + "'");
        for (; i < s.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
                throw ArgumentError("not a decimal number: '" + std::string(s) + "'");
            }
        }
    }
    return count;
}

template <class R>
HPValue render(const R& v, unsigned digits) {
    return HPValue{digits, v.str(static_cast<std::streamsize>(digits), std::ios_base::fmtflags{})};
}

template <class R>
HPValue arccos_at(const std::string& x, unsigned digits) {
    const R xr(x);
    if (abs(xr) > 1) throw DomainError("arccos: |x| > 1 (x = " + x + ")");
    return render(arccos<R>(xr), digits);
}

template <class R>
HPValue constant_at(Constant c, unsigned digits) {
    return render(constant<R>(c), digits);
}

// Working precision: requested digits plus the input's own digits (cancellation in 1 - x) plus guard.
template <class Fn>
HPValue at_tier(unsigned working, Fn&& fn) {
    if (working <= 50) return fn.template operator()<hp50>();
    if (working <= 100) return fn.template operator()<hp100>();
    if (working <= 250) return fn.template operator()<hp250>();
    if (working <= 500) return fn.template operator()<hp500>();
    throw PrecisionError("input carries too many significant digits for the oracle");
}

}  // namespace

double HPValue::to_double() const { return std::strtod(decimal.c_str(), nullptr); }

Constant constant_from_name(std::string_view name) {
    for (const auto& [c, n] : kConstantNames) {
        if (n == name) return c;
    }
    throw ArgumentError("unknown constant '" + std::string(name) + "'");
}

std::string_view constant_name(Constant c) {
    for (const auto& [k, n] : kConstantNames) {
        if (k == c) return n;
    }
    return "?";
}

double arccos_stable(double x) {
    if (!(std::abs(x) <= 1.0)) throw DomainError("arccos: |x| > 1");
    return arccos<double>(x);
}

HPValue arccos_hp(std::string_view x, unsigned digits) {
    check_digits(digits);
    const unsigned working = digits + mantissa_digits(x) + 8;
    const std::string xs(x);
    return at_tier(working, [&]<class R>() { return arccos_at<R>(xs, digits); });
}

HPValue arccos_hp(double x, unsigned digits) {
    check_digits(digits);
    if (!(std::abs(x) <= 1.0)) throw DomainError("arccos: |x| > 1");
    // Doubles convert exactly, and 1 - x is exact at any tier.
    return at_tier(digits + 8, [&]<class R>() { return render(arccos<R>(R(x)), digits); });
}

HPValue const_hp(Constant c, unsigned digits) {
    check_digits(digits);
    return at_tier(digits + 8, [&]<class R>() { return constant_at<R>(c, digits); });
}

HPValue const_hp(std::string_view name, unsigned digits) {
    return const_hp(constant_from_name(name), digits);
}

}  // namespace carlson::oracle
