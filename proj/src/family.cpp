#include "carlson/family.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace carlson {

namespace {

void require_open(double x, const char* what) {
    if (!(x > 0.0 && x < 1.0)) {
        throw DomainError(std::string(what) + ": x must lie in (0, 1), got " + std::to_string(x));
    }
}

void require_half_open(double x, const char* what) {
    if (!(x >= 0.0 && x < 1.0)) {
        throw DomainError(std::string(what) + ": x must lie in [0, 1), got " + std::to_string(x));
    }
}

// Runs fn<R>(R(x)) at the precision the point asks for, promoting near the endpoints.
template <class Fn>
double dispatch(const EvalPoint& pt, Fn&& fn) {
    if (pt.precision.is_double()) {
        if (pt.x < kPromotionBand || 1.0 - pt.x < kPromotionBand) {
            return static_cast<double>(fn.template operator()<hp_t>(hp_t(pt.x)));
        }
        return fn.template operator()<double>(pt.x);
    }
    return with_working_type(pt.precision.digits(), [&]<class R>() {
        return static_cast<double>(fn.template operator()<R>(R(pt.x)));
    });
}

Limit limit_at_1(const Params& p) {
    if (p.a == 0.5) return {Limit::Kind::Finite, std::exp2(p.b + 0.5)};
    if (p.a < 0.5) return {Limit::Kind::Zero, 0.0};
    return {Limit::Kind::Infinity, std::numeric_limits<double>::infinity()};
}

}  // namespace

ChainFn chain_fn_from_name(std::string_view name) {
    if (name == "h") return ChainFn::H;
    if (name == "q") return ChainFn::Q;
    if (name == "g_second") return ChainFn::GSecond;
    if (name == "big_g") return ChainFn::BigG;
    throw ArgumentError("unknown chain function '" + std::string(name) + "'");
}

double f_eval(const Params& p, const EvalPoint& pt) {
    require_open(pt.x, "f_eval");
    return dispatch(pt, [&]<class R>(const R& x) { return family::f_at<R>(p, x); });
}

double f_prime_eval(const Params& p, const EvalPoint& pt) {
    require_open(pt.x, "f_prime_eval");
    return dispatch(pt, [&]<class R>(const R& x) { return family::f_prime_at<R>(p, x); });
}

double g_eval(const Params& p, const EvalPoint& pt) {
    require_half_open(pt.x, "g_eval");
    return dispatch(pt, [&]<class R>(const R& x) { return family::g_at<R>(p, x); });
}

double g_prime_eval(const Params& p, const EvalPoint& pt) {
    require_half_open(pt.x, "g_prime_eval");
    return dispatch(pt, [&]<class R>(const R& x) { return family::g_prime_at<R>(p, x); });
}

double chain_eval(ChainFn which, const EvalPoint& pt) {
    require_half_open(pt.x, "chain_eval");
    return dispatch(pt, [&]<class R>(const R& x) { return family::chain_at<R>(which, x); });
}

double envelope_eval(const Params& p, const EvalPoint& pt) {
    require_open(pt.x, "envelope_eval");
    return dispatch(pt, [&]<class R>(const R& x) { return family::envelope_at<R>(p, x); });
}

double big_f_eval(const EvalPoint& pt) {
    require_open(pt.x, "big_f_eval");
    return dispatch(pt, [&]<class R>(const R& x) { return family::big_f_at<R>(x); });
}

double big_f_prime_eval(const EvalPoint& pt) {
    require_open(pt.x, "big_f_prime_eval");
    return dispatch(pt, [&]<class R>(const R& x) { return family::big_f_prime_at<R>(x); });
}

double g_min_lower_bound(const Params& p) { return family::g_min_lower_bound_at<double>(p); }

double f_limit_at_0(const Params&) { return std::numbers::pi / 2; }

Limit f_limit_at_1(const Params& p) { return limit_at_1(p); }

double g_limit_at_1(const Params& p) { return 2.0 * p.a - 1.0; }

double g_prime_limit_at_1(const Params& p) { return p.a - p.b - 1.0 / 3.0; }

double envelope_limit_at_0(const Params& p) {
    if (p.a + p.b == 0.0) throw PoleError("envelope: a + b = 0");
    return 1.0 / (p.a + p.b);
}

Limit envelope_limit_at_1(const Params& p) { return limit_at_1(p); }

double big_f_limit_at_0() { return (0.5 + std::numbers::sqrt2) * std::numbers::pi; }

double big_f_limit_at_1() { return 6.0; }

}  // namespace carlson
