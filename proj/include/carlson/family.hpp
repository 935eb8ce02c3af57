#pragma once

#include "carlson/errors.hpp"
#include "carlson/oracle.hpp"
#include "carlson/precision.hpp"

#include <cmath>
#include <string_view>

namespace carlson {

/// Parameter pair (a, b) of f_{a,b}(x) = (1+x)^b (1-x)^(-a) arccos x. Any finite reals.
struct Params {
    double a = 0.0;
    double b = 0.0;

    Params() = default;
    Params(double a_, double b_) : a(a_), b(b_) {
        if (!std::isfinite(a) || !std::isfinite(b)) throw ArgumentError("Params: a and b must be finite");
    }

    double diff() const { return a - b; }
    double sum() const { return a + b; }
};

struct EvalPoint {
    double x = 0.5;
    Precision precision = Precision::Double();
};

/// Value of a limit that may be zero or infinite.
struct Limit {
    enum class Kind { Finite, Zero, Infinity };
    Kind kind = Kind::Finite;
    double value = 0.0;  // meaningful for Finite; 0 for Zero; +inf for Infinity
};

/// Parameter-free functions of the monotonicity proof chain.
enum class ChainFn { H, Q, GSecond, BigG };

ChainFn chain_fn_from_name(std::string_view name);

namespace family {

/// (1+x)^t computed as exp(t log1p(x)).
template <class R>
R pow1p(const R& x, const R& t) {
    using std::exp;
    using std::log1p;
    return exp(t * log1p(x));
}

/// sqrt(1 - x^2) without forming x^2.
template <class R>
R sqrt_one_minus_sq(const R& x) {
    using std::sqrt;
    return sqrt((R(1) - x) * (R(1) + x));
}

template <class R>
R f_at(const Params& p, const R& x) {
    return pow1p<R>(x, R(p.b)) * pow1p<R>(R(-x), R(-p.a)) * oracle::arccos<R>(x);
}

template <class R>
R g_at(const Params& p, const R& x) {
    const R a(p.a), b(p.b);
    if (x == 0) return a + b - R(2) / oracle::pi<R>();
    return a + b + (a - b) * x - sqrt_one_minus_sq<R>(x) / oracle::arccos<R>(x);
}

template <class R>
R g_prime_at(const Params& p, const R& x) {
    const R d = R(p.a) - R(p.b);
    if (x == 0) {
        const R pi = oracle::pi<R>();
        return d - R(4) / (pi * pi);
    }
    const R t = oracle::arccos<R>(x);
    return d - R(1) / (t * t) + x / (sqrt_one_minus_sq<R>(x) * t);
}

/// f' = (1+x)^(b-1) (1-x)^(-a-1) arccos(x) g(x).
template <class R>
R f_prime_at(const Params& p, const R& x) {
    return pow1p<R>(x, R(p.b) - 1) * pow1p<R>(R(-x), R(-p.a) - 1) * oracle::arccos<R>(x) * g_at<R>(p, x);
}

template <class R>
R h_at(const R& x) {
    const R t = oracle::arccos<R>(x);
    return t * t + x * sqrt_one_minus_sq<R>(x) * t + 2 * x * x - 2;
}

template <class R>
R q_at(const R& x) {
    return 3 * x * sqrt_one_minus_sq<R>(x) / (1 + 2 * x * x) - oracle::arccos<R>(x);
}

/// g'' = h / ((1-x^2)^(3/2) arccos^3 x); independent of (a, b).
template <class R>
R g_second_at(const R& x) {
    const R s = sqrt_one_minus_sq<R>(x);
    const R t = oracle::arccos<R>(x);
    return h_at<R>(x) / (s * s * s * t * t * t);
}

template <class R>
R big_g_at(const R& x) {
    using std::sqrt;
    const R one(1);
    return oracle::arccos<R>(x)
           - (sqrt(one + x) + 2 * sqrt(R(2))) * sqrt(one - x) / (one + sqrt(2 * (x + one)));
}

/// F(x) = (2 sqrt 2 + sqrt(1+x)) / sqrt(1-x) * arccos x.
template <class R>
R big_f_at(const R& x) {
    using std::sqrt;
    const R one(1);
    return (2 * sqrt(R(2)) + sqrt(one + x)) / sqrt(one - x) * oracle::arccos<R>(x);
}

/// F' = [1 + sqrt(2(x+1))] sqrt(1-x^2) / ((1+x)(x-1)^2) * G(x).
template <class R>
R big_f_prime_at(const R& x) {
    using std::sqrt;
    const R one(1);
    return (one + sqrt(2 * (x + one))) * sqrt_one_minus_sq<R>(x) / ((one + x) * (x - one) * (x - one))
           * big_g_at<R>(x);
}

template <class R>
R chain_at(ChainFn which, const R& x) {
    switch (which) {
    case ChainFn::H: return h_at<R>(x);
    case ChainFn::Q: return q_at<R>(x);
    case ChainFn::GSecond: return g_second_at<R>(x);
    case ChainFn::BigG: return big_g_at<R>(x);
    }
    throw ArgumentError("unknown chain function");
}

/// Candidate extreme value of f when the extreme point sits at x:
/// (1+x)^(b+1/2) (1-x)^(1/2-a) / (a+b+(a-b)x). Throws PoleError on a vanishing denominator.
template <class R>
R envelope_at(const Params& p, const R& x) {
    const R a(p.a), b(p.b);
    const R den = a + b + (a - b) * x;
    if (den == 0) throw PoleError("envelope: a+b+(a-b)x = 0");
    const R half = R(1) / 2;
    return pow1p<R>(x, b + half) * pow1p<R>(R(-x), half - a) / den;
}

/// a+b - 2(a-b)^(3/2) / sqrt(4(a-b) - 1); requires 4(a-b) > 1.
template <class R>
R g_min_lower_bound_at(const Params& p) {
    using std::sqrt;
    const R d = R(p.a) - R(p.b);
    const R den2 = 4 * d - 1;
    if (!(den2 > 0)) throw DomainError("g_min_lower_bound: requires a - b > 1/4");
    return R(p.a) + R(p.b) - 2 * d * sqrt(d) / sqrt(den2);
}

}  // namespace family

// Runtime API. Double requests within kPromotionBand of 0 or 1 run at hp_t internally.
inline constexpr double kPromotionBand = 1e-8;

double f_eval(const Params& p, const EvalPoint& pt);
double f_prime_eval(const Params& p, const EvalPoint& pt);
double g_eval(const Params& p, const EvalPoint& pt);
double g_prime_eval(const Params& p, const EvalPoint& pt);
double chain_eval(ChainFn which, const EvalPoint& pt);
double envelope_eval(const Params& p, const EvalPoint& pt);
double big_f_eval(const EvalPoint& pt);
double big_f_prime_eval(const EvalPoint& pt);
double g_min_lower_bound(const Params& p);

double f_limit_at_0(const Params& p);  // pi/2
Limit f_limit_at_1(const Params& p);
double g_limit_at_1(const Params& p);  // 2a - 1
double g_prime_limit_at_1(const Params& p);  // a - b - 1/3
double envelope_limit_at_0(const Params& p);  // 1/(a+b)
Limit envelope_limit_at_1(const Params& p);
double big_f_limit_at_0();  // (1/2 + sqrt 2) pi
double big_f_limit_at_1();  // 6

}  // namespace carlson
