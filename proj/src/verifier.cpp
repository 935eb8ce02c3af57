#include "carlson/verifier.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>
#include <utility>

namespace carlson {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kMaxViolationWitnesses = 16;
constexpr int kSweepDepth = 12;

// Uniform double in [0, 1) from the top 53 bits; stable across standard libraries.
double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double uniform_open01(std::mt19937_64& rng) {
    double u = 0.0;
    while (u == 0.0) u = uniform01(rng);
    return u;
}

std::string fmt(const char* pattern, double v) {
    char buf[96];
    std::snprintf(buf, sizeof buf, pattern, v);
    return buf;
}

template <class R>
R pow10_neg(int k) {
    using std::pow;
    return pow(R(10), R(-k));
}

void add_violation(VerificationReport& rep, Witness w) {
    w.violation = true;
    rep.passed = false;
    if (std::count_if(rep.witnesses.begin(), rep.witnesses.end(), [](const Witness& x) { return x.violation; })
        < static_cast<long>(kMaxViolationWitnesses)) {
        rep.witnesses.push_back(std::move(w));
    }
}

void require_at_least(std::size_t n, std::size_t min, const char* what) {
    if (n < min) throw ArgumentError(std::string(what) + ": sample count too small (minimum " + std::to_string(min) + ")");
}

// Sample set: n uniform points in (0, 1) plus 10^-k and 1 - 10^-k for k = 1..depth.
template <class R>
std::vector<R> sample_points(std::size_t n, unsigned depth, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<R> xs;
    xs.reserve(n + 2 * depth);
    for (std::size_t i = 0; i < n; ++i) xs.emplace_back(uniform_open01(rng));
    for (unsigned k = 1; k <= depth; ++k) {
        xs.push_back(pow10_neg<R>(static_cast<int>(k)));
        xs.push_back(R(1) - pow10_neg<R>(static_cast<int>(k)));
    }
    return xs;
}

template <class R>
VerificationReport double_inequality_impl(const BoundFamily& fam, std::size_t n, unsigned depth,
                                          std::uint64_t seed) {
    VerificationReport rep{"double_inequality:" + fam.id(), 0, kInf, true, {}};
    const auto xs = sample_points<R>(n, depth, seed);
    for (const R& x : xs) {
        const R acos = oracle::arccos<R>(x);
        const auto sides = bounds::family_sides<R>(fam, x);
        if (sides.lower) {
            const double m = static_cast<double>((acos - *sides.lower) / acos);
            rep.worst_margin = std::min(rep.worst_margin, m);
            if (!(m > kStrictMargin)) {
                add_violation(rep, {static_cast<double>(x), {}, {}, true, "lower side fails, relative margin " + fmt("%.6e", m)});
            }
        }
        if (sides.upper) {
            const double m = static_cast<double>((*sides.upper - acos) / acos);
            rep.worst_margin = std::min(rep.worst_margin, m);
            if (!(m > kStrictMargin)) {
                add_violation(rep, {static_cast<double>(x), {}, {}, true, "upper side fails, relative margin " + fmt("%.6e", m)});
            }
        }
    }
    rep.samples = xs.size();
    return rep;
}

template <class R>
VerificationReport sign_chain_impl(std::size_t n) {
    VerificationReport rep{"sign_chain", 0, kInf, true, {}};
    const R top = R(1) - pow10_neg<R>(8);
    R prev_q = 0, prev_h = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const R x = top * R(static_cast<double>(i)) / R(static_cast<double>(n - 1));
        const R q = family::q_at<R>(x);
        const R h = family::h_at<R>(x);
        const R g2 = family::g_second_at<R>(x);
        const double m = std::min({static_cast<double>(-q), static_cast<double>(h), static_cast<double>(g2)});
        rep.worst_margin = std::min(rep.worst_margin, m);
        const double xd = static_cast<double>(x);
        if (!(q < 0)) add_violation(rep, {xd, {}, {}, true, "q >= 0"});
        if (!(h > 0)) add_violation(rep, {xd, {}, {}, true, "h <= 0"});
        if (!(g2 > 0)) add_violation(rep, {xd, {}, {}, true, "g'' <= 0"});
        if (i > 0 && !(q > prev_q)) add_violation(rep, {xd, {}, {}, true, "q not increasing"});
        if (i > 0 && !(h < prev_h)) add_violation(rep, {xd, {}, {}, true, "h not decreasing"});
        prev_q = q;
        prev_h = h;
    }
    if (family::q_at<R>(R(0)) != -oracle::pi<R>() / 2) add_violation(rep, {0.0, {}, {}, true, "q(0) != -pi/2"});

    const R near_one = R(1) - pow10_neg<R>(10);
    const R h1 = family::h_at<R>(near_one);
    const R q1 = family::q_at<R>(near_one);
    const double xd = static_cast<double>(near_one);
    if (!(h1 > 0 && h1 < R(1e-4))) add_violation(rep, {xd, {}, {}, true, "h(1-1e-10) not in (0, 1e-4)"});
    if (!(q1 < 0 && q1 > R(-1e-4))) add_violation(rep, {xd, {}, {}, true, "q(1-1e-10) not in (-1e-4, 0)"});
    rep.samples = n + 2;
    return rep;
}

template <class R>
VerificationReport sharpness_impl(SharpnessKind kind, double epsilon) {
    VerificationReport rep{"sharpness:" + std::string(to_string(kind)), 0, -kInf, false, {}};
    const R eps(epsilon);
    const R pi = oracle::pi<R>();
    const R half = R(1) / 2;

    if (kind == SharpnessKind::BUpperOneSixth || kind == SharpnessKind::BLowerTwoOverPi) {
        const bool near_one = kind == SharpnessKind::BUpperOneSixth;
        const R b = near_one ? R(1) / 6 - eps : R(2) / pi - half + eps;
        for (int k = 1; k <= kSweepDepth; ++k) {
            const R x = near_one ? R(1) - pow10_neg<R>(k) : pow10_neg<R>(k);
            const R acos = oracle::arccos<R>(x);
            const R shape = sqrt(R(1) - x) / family::pow1p<R>(x, b);
            // Right side of the b-family for b < 1/6; left side of the reversed family for b > 2/pi - 1/2.
            const R bound = near_one ? family::pow1p<R>(R(1), b + half) * shape : pi / 2 * shape;
            const double depth = static_cast<double>((acos - bound) / acos);
            ++rep.samples;
            rep.worst_margin = std::max(rep.worst_margin, depth);
            if (depth > 0) {
                rep.passed = true;
                rep.witnesses.push_back({static_cast<double>(x), {}, static_cast<double>(b), false,
                                         near_one ? "arccos x exceeds 2^(b+1/2) sqrt(1-x)/(1+x)^b"
                                                  : "arccos x exceeds (pi/2) sqrt(1-x)/(1+x)^b"});
                break;
            }
        }
        return rep;
    }

    // F decreases from (1/2 + sqrt2) pi at 0+ to 6 at 1-: both constants are approached within epsilon.
    const R top = (half + sqrt(R(2))) * pi;
    const R bottom(6);
    bool found_top = false, found_bottom = false;
    rep.passed = true;
    rep.worst_margin = kInf;
    for (int k = 1; k <= kSweepDepth; ++k) {
        for (const bool at_zero : {true, false}) {
            const R x = at_zero ? pow10_neg<R>(k) : R(1) - pow10_neg<R>(k);
            const R f = family::big_f_at<R>(x);
            const R gap = at_zero ? top - f : f - bottom;
            ++rep.samples;
            rep.worst_margin = std::min(rep.worst_margin, static_cast<double>(gap));
            const double xd = static_cast<double>(x);
            if (!(gap > 0)) {
                add_violation(rep, {xd, {}, {}, true, at_zero ? "F above (1/2+sqrt2) pi" : "F below 6"});
                continue;
            }
            bool& found = at_zero ? found_top : found_bottom;
            if (!found && gap < eps) {
                found = true;
                rep.witnesses.push_back({xd, {}, {}, false,
                                         (at_zero ? "(1/2+sqrt2) pi - F(x) = " : "F(x) - 6 = ")
                                             + fmt("%.6e", static_cast<double>(gap))});
            }
        }
    }
    rep.passed = rep.passed && found_top && found_bottom;
    return rep;
}

template <class R>
VerificationReport identities_impl(std::size_t n, std::uint64_t seed) {
    VerificationReport rep{"identities", 0, kInf, true, {}};

    // Discriminant: closed form against the quadratic's B^2 - 4AC.
    std::mt19937_64 rng(seed);
    std::size_t drawn = 0;
    while (drawn < n) {
        const double a = 2 * uniform01(rng) - 1;
        const double b = 2 * uniform01(rng) - 1;
        if (std::abs(a - b) < 1e-6) continue;
        ++drawn;
        const R ar(a), br(b);
        const R s = ar + br, d = ar - br;
        const R closed = 16 * ar * br * (br - ar) + s * s;
        const R qb = s * (2 * d - 1);
        const R quad = qb * qb - 4 * (d * d) * (s * s - ar + br);
        using std::abs;
        const R scale = std::max(abs(closed), R(1e-300));
        const double rel = static_cast<double>(abs(closed - quad) / scale);
        rep.worst_margin = std::min(rep.worst_margin, 1.0 - rel / 1e-10);
        if (rel > 1e-10) add_violation(rep, {{}, a, b, true, "discriminant forms differ, relative " + fmt("%.3e", rel)});
    }
    {
        const auto r = extrema_points(Params{0.5, 0.14});
        const double err = std::max(std::abs(r.disc_closed - 0.0064), std::abs(r.disc_quadratic - 0.0064));
        if (err > 1e-15) add_violation(rep, {{}, 0.5, 0.14, true, "discriminant at (0.5, 0.14) differs from 0.0064"});
    }

    // The four concrete double inequalities.
    const std::array<BoundFamily, 4> fams{BoundFamily::carlson(), BoundFamily::thm3(), BoundFamily::thm2_threshold(),
                                          BoundFamily::thm2_reversed_threshold()};
    enum { C, T3, T2, T2R };
    std::vector<R> xs;
    for (int k = 1; k < 1000; ++k) xs.push_back(R(k) / 1000);
    for (int j = 4; j <= 11; ++j) {
        xs.push_back(pow10_neg<R>(j));
        xs.push_back(R(1) - pow10_neg<R>(j));
    }

    struct Pair {
        int first, second;
        bool lower;
        enum Kind { Coincide, FirstDominates, TwoWay } kind;
        bool seen_first = false, seen_second = false;
    };
    std::vector<Pair> pairs{
        {C, T3, true, Pair::Coincide},      {C, T2, false, Pair::Coincide},
        {C, T2R, true, Pair::FirstDominates},
        {C, T2, true, Pair::TwoWay},        {T2, T2R, true, Pair::TwoWay},
        {C, T3, false, Pair::TwoWay},       {C, T2R, false, Pair::TwoWay},
        {T3, T2R, false, Pair::TwoWay},
    };
    auto label = [&](const Pair& p) {
        return fams[p.first].id() + (p.lower ? " lower" : " upper") + " vs " + fams[p.second].id();
    };

    for (const R& x : xs) {
        std::array<bounds::Sides<R>, 4> sides;
        for (int i = 0; i < 4; ++i) sides[i] = bounds::family_sides<R>(fams[i], x);
        const double xd = static_cast<double>(x);
        for (auto& p : pairs) {
            const R u = p.lower ? *sides[p.first].lower : *sides[p.first].upper;
            const R v = p.lower ? *sides[p.second].lower : *sides[p.second].upper;
            using std::abs;
            switch (p.kind) {
            case Pair::Coincide: {
                const double rel = static_cast<double>(abs(u - v) / abs(u));
                rep.worst_margin = std::min(rep.worst_margin, 1.0 - rel / 1e-12);
                if (rel > 1e-12) add_violation(rep, {xd, {}, {}, true, label(p) + ": expected to coincide"});
                break;
            }
            case Pair::FirstDominates: {
                const double gap = static_cast<double>((u - v) / u);
                rep.worst_margin = std::min(rep.worst_margin, gap);
                if (!(u > v)) add_violation(rep, {xd, {}, {}, true, label(p) + ": expected first to be tighter"});
                break;
            }
            case Pair::TwoWay: {
                // Tighter = larger lower bound or smaller upper bound.
                const bool first_tighter = p.lower ? u > v : u < v;
                const bool second_tighter = p.lower ? v > u : v < u;
                if (first_tighter && !p.seen_first) {
                    p.seen_first = true;
                    rep.witnesses.push_back({xd, {}, {}, false, label(p) + ": " + fams[p.first].id() + " tighter"});
                }
                if (second_tighter && !p.seen_second) {
                    p.seen_second = true;
                    rep.witnesses.push_back({xd, {}, {}, false, label(p) + ": " + fams[p.second].id() + " tighter"});
                }
                break;
            }
            }
        }
    }
    for (const auto& p : pairs) {
        if (p.kind == Pair::TwoWay && !(p.seen_first && p.seen_second)) {
            rep.worst_margin = std::min(rep.worst_margin, -1.0);
            add_violation(rep, {{}, {}, {}, true, label(p) + ": no two-way witnesses"});
        }
    }
    rep.samples = n + 1 + xs.size();
    return rep;
}

template <class R>
VerificationReport coefficient_impl(const BoundFamily& fam, std::size_t n, std::uint64_t seed) {
    VerificationReport rep{"coefficient_bound:" + fam.id(), 0, kInf, true, {}};
    const bool is_max = fam.kind() == FamilyKind::Thm2MaxCoef;
    const auto xs = sample_points<R>(n, 10, seed);
    for (const R& x : xs) {
        const R acos = oracle::arccos<R>(x);
        const auto sides = bounds::family_sides<R>(fam, x);
        const R bound = is_max ? *sides.upper : *sides.lower;
        const double m = static_cast<double>(is_max ? (bound - acos) / acos : (acos - bound) / acos);
        rep.worst_margin = std::min(rep.worst_margin, m);
        if (m < 0) add_violation(rep, {static_cast<double>(x), {}, {}, true, "coefficient bound fails"});
    }
    rep.samples = xs.size();
    return rep;
}

}  // namespace

std::string_view to_string(SharpnessKind k) {
    switch (k) {
    case SharpnessKind::BUpperOneSixth: return "b_upper_1_6";
    case SharpnessKind::BLowerTwoOverPi: return "b_lower_2pi";
    case SharpnessKind::Thm3Constants: return "thm3_constants";
    }
    return "?";
}

SharpnessKind sharpness_kind_from_name(std::string_view name) {
    for (const auto k : {SharpnessKind::BUpperOneSixth, SharpnessKind::BLowerTwoOverPi, SharpnessKind::Thm3Constants}) {
        if (to_string(k) == name) return k;
    }
    throw ArgumentError("unknown sharpness kind '" + std::string(name) + "'");
}

std::vector<double> scan_grid(std::size_t n) {
    std::vector<double> grid(n);
    for (std::size_t k = 1; k <= n; ++k) {
        const double s = std::sin(std::numbers::pi * static_cast<double>(k) / (2.0 * static_cast<double>(n + 1)));
        grid[k - 1] = s * s;
    }
    return grid;
}

std::string sign_pattern(const Params& p, std::span<const double> grid) {
    constexpr double kHighPrecisionBand = 1e-3;
    constexpr double kRelativeAmbiguity = 1e-12;
    const std::size_t n = grid.size();
    std::vector<double> fd(n);
    std::vector<std::optional<hp_t>> fh(n);
    auto high = [&](std::size_t k) -> const hp_t& {
        if (!fh[k]) fh[k] = family::f_at<hp_t>(p, hp_t(grid[k]));
        return *fh[k];
    };
    for (std::size_t k = 0; k < n; ++k) {
        fd[k] = 1.0 - grid[k] < kHighPrecisionBand ? static_cast<double>(high(k)) : f_eval(p, {grid[k]});
    }
    std::string pattern;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        int sign = 0;
        const double diff = fd[k + 1] - fd[k];
        const double scale = std::max(std::abs(fd[k]), std::abs(fd[k + 1]));
        if (1.0 - grid[k] < kHighPrecisionBand || std::abs(diff) <= kRelativeAmbiguity * scale) {
            const hp_t d = high(k + 1) - high(k);
            sign = d > 0 ? 1 : (d < 0 ? -1 : 0);
        } else {
            sign = diff > 0 ? 1 : -1;
        }
        if (sign == 0) continue;
        const char c = sign > 0 ? '+' : '-';
        if (pattern.empty() || pattern.back() != c) pattern.push_back(c);
    }
    return pattern;
}

std::string_view expected_pattern(RegionClass c) {
    switch (c) {
    case RegionClass::StrictlyDecreasing: return "-";
    case RegionClass::StrictlyIncreasing: return "+";
    case RegionClass::UniqueMax: return "+-";
    case RegionClass::UniqueMin: return "-+";
    case RegionClass::MaxThenMin: return "+-+";
    case RegionClass::Indeterminate: return "";
    }
    return "";
}

VerificationReport check_double_inequality(const BoundFamily& fam, std::size_t n, unsigned endpoint_depth,
                                           const VerifyOptions& opts) {
    require_at_least(n, 1000, "check_double_inequality");
    return with_working_type(opts.digits, [&]<class R>() {
        return double_inequality_impl<R>(fam, n, endpoint_depth, opts.seed);
    });
}

VerificationReport check_class(const Params& p, RegionClass expected, std::size_t n, const VerifyOptions&) {
    require_at_least(n, 256, "check_class");
    const auto grid = scan_grid(n);
    const std::string pattern = sign_pattern(p, grid);
    VerificationReport rep{"class:" + std::string(to_string(expected)), n, 0.0, true, {}};

    // Extremum locations: the grid points where the difference sign flips.
    double smallest = kInf;
    int prev = 0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const double fa = family::f_at<double>(p, grid[k]);
        const double fb = family::f_at<double>(p, grid[k + 1]);
        smallest = std::min(smallest, std::abs(fb - fa) / std::max(std::abs(fa), std::abs(fb)));
        const int sign = fb > fa ? 1 : (fb < fa ? -1 : 0);
        if (prev != 0 && sign != 0 && sign != prev) {
            rep.witnesses.push_back({grid[k], p.a, p.b, false, prev > 0 ? "local max" : "local min"});
        }
        if (sign != 0) prev = sign;
    }
    rep.worst_margin = smallest;
    if (pattern != expected_pattern(expected)) {
        rep.worst_margin = -smallest;
        rep.witnesses.clear();
        add_violation(rep, {{}, p.a, p.b, true,
                            "difference pattern '" + pattern + "', expected '" + std::string(expected_pattern(expected)) + "'"});
    }
    return rep;
}

VerificationReport check_sign_chain(std::size_t n, const VerifyOptions& opts) {
    require_at_least(n, 1000, "check_sign_chain");
    return with_working_type(opts.digits, [&]<class R>() { return sign_chain_impl<R>(n); });
}

VerificationReport check_sharpness(SharpnessKind kind, double epsilon, const VerifyOptions& opts) {
    if (!(epsilon > 0.0 && epsilon <= 1e-2)) throw ArgumentError("check_sharpness: epsilon must lie in (0, 1e-2]");
    return with_working_type(opts.digits, [&]<class R>() { return sharpness_impl<R>(kind, epsilon); });
}

VerificationReport check_identities(std::size_t n, const VerifyOptions& opts) {
    require_at_least(n, 1000, "check_identities");
    return with_working_type(opts.digits, [&]<class R>() { return identities_impl<R>(n, opts.seed); });
}

VerificationReport check_coefficient_bound(const BoundFamily& fam, std::size_t n, const VerifyOptions& opts) {
    if (fam.kind() != FamilyKind::Thm2MaxCoef && fam.kind() != FamilyKind::Thm2MinCoef) {
        throw ArgumentError("check_coefficient_bound: needs a thm2_maxcoef or thm2_mincoef family");
    }
    if (!fam.valid()) throw InvalidFamily("family " + fam.id() + " is not valid for its parameters");
    return with_working_type(opts.digits, [&]<class R>() { return coefficient_impl<R>(fam, n, opts.seed); });
}

VerificationReport check_envelope_extremum(const Params& p, std::size_t n, const VerifyOptions&) {
    VerificationReport rep{"envelope_extremum", n, kInf, true, {}};
    const ExtremaReport ex = extrema_points(p);
    std::vector<double> values(n);
    for (std::size_t k = 0; k < n; ++k) {
        values[k] = envelope_eval(p, {static_cast<double>(k + 1) / static_cast<double>(n + 1)});
    }
    auto x_at = [&](std::ptrdiff_t k) { return static_cast<double>(k + 1) / static_cast<double>(n + 1); };
    bool any = false;
    auto compare = [&](std::optional<double> root, bool is_max) {
        if (!root || !(*root > 0 && *root < 1)) return;
        any = true;
        const auto it = is_max ? std::max_element(values.begin(), values.end())
                               : std::min_element(values.begin(), values.end());
        const double located = x_at(it - values.begin());
        const double err = std::abs(located - *root);
        rep.worst_margin = std::min(rep.worst_margin, 1.0 - err / 1e-4);
        Witness w{located, p.a, p.b, false,
                  std::string(is_max ? "grid argmax" : "grid argmin") + " vs closed form " + fmt("%.10f", *root)};
        if (err > 1e-4) {
            add_violation(rep, std::move(w));
        } else {
            rep.witnesses.push_back(std::move(w));
        }
    };
    compare(ex.x1, true);
    compare(ex.x2, false);
    if (!any) add_violation(rep, {{}, p.a, p.b, true, "no extremum point in (0, 1)"});
    return rep;
}

std::vector<VerificationReport> run_suite(const VerifyOptions& opts) {
    std::vector<VerificationReport> out;
    std::uint64_t stream = 0;
    auto next = [&] {
        VerifyOptions o = opts;
        o.seed = opts.seed * 1000003ULL + ++stream;
        return o;
    };

    for (const auto& fam : {BoundFamily::carlson(), BoundFamily::thm2_threshold(), BoundFamily::thm2(0.2),
                            BoundFamily::thm2(0.5), BoundFamily::thm2_reversed_threshold(),
                            BoundFamily::thm2_reversed(0.0), BoundFamily::thm3()}) {
        out.push_back(check_double_inequality(fam, 10000, 10, next()));
    }
    out.push_back(check_sharpness(SharpnessKind::BUpperOneSixth, 1e-3, next()));
    out.push_back(check_sharpness(SharpnessKind::BLowerTwoOverPi, 1e-3, next()));
    out.push_back(check_sharpness(SharpnessKind::Thm3Constants, 1e-6, next()));
    out.push_back(check_sign_chain(1000, next()));
    out.push_back(check_identities(10000, next()));

    const std::array<std::pair<Params, RegionClass>, 6> classes{{
        {{0.0, 0.0}, RegionClass::StrictlyDecreasing},
        {{0.6, 0.3}, RegionClass::StrictlyIncreasing},
        {{0.5, 0.14}, RegionClass::UniqueMax},
        {{0.51, 0.12}, RegionClass::UniqueMin},
        {{0.503, 0.14}, RegionClass::MaxThenMin},
        {{0.9, 0.1}, RegionClass::StrictlyIncreasing},
    }};
    for (const auto& [p, cls] : classes) out.push_back(check_class(p, cls, 2048, next()));

    out.push_back(check_coefficient_bound(BoundFamily::max_coef({0.5, 0.14}), 2000, next()));
    out.push_back(check_coefficient_bound(BoundFamily::min_coef({0.51, 0.12}), 2000, next()));
    out.push_back(check_envelope_extremum({0.5, 0.14}, 100000, next()));
    return out;
}

}  // namespace carlson
