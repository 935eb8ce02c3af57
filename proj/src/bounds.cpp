#include "carlson/bounds.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <numbers>

namespace carlson {

namespace {

constexpr double kTwoOverPiMinusHalf = 2.0 / std::numbers::pi - 0.5;
constexpr double kInf = std::numeric_limits<double>::infinity();
// Relative slack covering the rounding error of the double-precision family expressions.
constexpr double kSlack = 32 * std::numeric_limits<double>::epsilon();
// pi = kPiHead + kPiTail to about 2^-107.
constexpr double kPiHead = std::numbers::pi;
constexpr double kPiTail = 1.2246467991473532e-16;

double round_down(double v) {
    if (v == 0.0) return 0.0;
    return std::nextafter(v - std::abs(v) * kSlack, -kInf);
}

double round_up(double v) {
    if (v == 0.0) return 0.0;
    return std::nextafter(v + std::abs(v) * kSlack, kInf);
}

// Error-free transformation: a + b = s + e exactly.
void two_sum(double a, double b, double& s, double& e) {
    s = a + b;
    const double bb = s - a;
    e = (a - (s - bb)) + (b - bb);
}

// pi - v rounded toward -inf (down = true) or +inf, for v in [0, pi].
double pi_minus(double v, bool down) {
    double s = 0.0, e1 = 0.0;
    two_sum(kPiHead, -v, s, e1);
    double u = 0.0, e2 = 0.0;
    two_sum(s, e1 + kPiTail, u, e2);
    // Residual below this is swamped by the tail's own representation error.
    constexpr double kTiny = 1e-30;
    if (down) return e2 > kTiny ? u : std::nextafter(u, -kInf);
    return e2 < -kTiny ? u : std::nextafter(u, kInf);
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    if (std::strtod(buf, nullptr) != v) std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_number(std::string_view s, std::string_view text) {
    const std::string str(s);
    char* end = nullptr;
    const double v = std::strtod(str.c_str(), &end);
    if (str.empty() || *end != '\0' || !std::isfinite(v)) {
        throw ArgumentError("bad number in family '" + std::string(text) + "'");
    }
    return v;
}

// Splits "name(arg1,arg2)" into name and args.
void split_call(std::string_view text, std::string_view& name, std::vector<std::string_view>& args) {
    const auto open = text.find('(');
    if (open == std::string_view::npos) {
        name = text;
        return;
    }
    if (text.back() != ')') throw ArgumentError("malformed family '" + std::string(text) + "'");
    name = text.substr(0, open);
    std::string_view inner = text.substr(open + 1, text.size() - open - 2);
    while (true) {
        const auto comma = inner.find(',');
        args.push_back(inner.substr(0, comma));
        if (comma == std::string_view::npos) break;
        inner.remove_prefix(comma + 1);
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

void require_valid(const BoundFamily& fam) {
    if (!fam.valid()) throw InvalidFamily("family " + fam.id() + " is not valid for its parameters");
}

// Envelope on [0, 1) from rounded double family sides plus the trivial bounds 0 and pi/2.
BoundInterval envelope_nonneg(double x, std::span<const BoundFamily> enabled) {
    BoundInterval out{0.0, round_up(std::numbers::pi / 2), "trivial", "trivial"};
    for (const auto& fam : enabled) {
        const auto sides = bounds::family_sides<double>(fam, x);
        if (sides.lower) {
            const double lo = round_down(*sides.lower);
            if (lo > *out.lower) {
                out.lower = lo;
                out.lower_family = fam.id();
            }
        }
        if (sides.upper) {
            const double hi = round_up(*sides.upper);
            if (hi < *out.upper) {
                out.upper = hi;
                out.upper_family = fam.id();
            }
        }
    }
    return out;
}

}  // namespace

BoundFamily BoundFamily::carlson() { return {FamilyKind::Carlson, Params{0.5, 1.0 / 6.0}, false}; }
BoundFamily BoundFamily::thm3() { return {FamilyKind::Thm3, Params{0.5, 0.5}, false}; }
BoundFamily BoundFamily::thm2(double b) { return {FamilyKind::Thm2, Params{0.5, b}, false}; }
BoundFamily BoundFamily::thm2_threshold() { return {FamilyKind::Thm2, Params{0.5, 1.0 / 6.0}, true}; }
BoundFamily BoundFamily::thm2_reversed(double b) { return {FamilyKind::Thm2Reversed, Params{0.5, b}, false}; }
BoundFamily BoundFamily::thm2_reversed_threshold() {
    return {FamilyKind::Thm2Reversed, Params{0.5, kTwoOverPiMinusHalf}, true};
}
BoundFamily BoundFamily::max_coef(const Params& p) { return {FamilyKind::Thm2MaxCoef, p, false}; }
BoundFamily BoundFamily::min_coef(const Params& p) { return {FamilyKind::Thm2MinCoef, p, false}; }

std::string BoundFamily::id() const {
    switch (kind_) {
    case FamilyKind::Carlson: return "carlson";
    case FamilyKind::Thm3: return "thm3";
    case FamilyKind::Thm2: return threshold_ ? "thm2(1/6)" : "thm2(" + format_number(params_.b) + ")";
    case FamilyKind::Thm2Reversed:
        return threshold_ ? "thm2_reversed(2/pi-1/2)" : "thm2_reversed(" + format_number(params_.b) + ")";
    case FamilyKind::Thm2MaxCoef:
        return "thm2_maxcoef(" + format_number(params_.a) + "," + format_number(params_.b) + ")";
    case FamilyKind::Thm2MinCoef:
        return "thm2_mincoef(" + format_number(params_.a) + "," + format_number(params_.b) + ")";
    }
    return "?";
}

bool BoundFamily::valid() const {
    switch (kind_) {
    case FamilyKind::Carlson:
    case FamilyKind::Thm3: return true;
    case FamilyKind::Thm2: return threshold_ || params_.b >= 1.0 / 6.0;
    case FamilyKind::Thm2Reversed: return threshold_ || params_.b <= kTwoOverPiMinusHalf;
    case FamilyKind::Thm2MaxCoef: {
        if (!conditions::unique_max(params_)) return false;
        const auto r = extrema_points(params_);
        return r.disc_closed > 0 && r.max_coeff.has_value();
    }
    case FamilyKind::Thm2MinCoef: {
        if (!conditions::unique_min(params_)) return false;
        const auto r = extrema_points(params_);
        return r.disc_closed > 0 && r.min_coeff.has_value();
    }
    }
    return false;
}

BoundFamily parse_family(std::string_view text) {
    text = trim(text);
    std::string_view name;
    std::vector<std::string_view> args;
    split_call(text, name, args);
    auto arity = [&](std::size_t n) {
        if (args.size() != n) throw ArgumentError("family '" + std::string(text) + "' expects " + std::to_string(n) + " argument(s)");
    };
    if (name == "carlson") {
        arity(0);
        return BoundFamily::carlson();
    }
    if (name == "thm3") {
        arity(0);
        return BoundFamily::thm3();
    }
    if (name == "thm2") {
        if (args.empty() || (args.size() == 1 && trim(args[0]) == "1/6")) return BoundFamily::thm2_threshold();
        arity(1);
        return BoundFamily::thm2(parse_number(trim(args[0]), text));
    }
    if (name == "thm2_reversed") {
        if (args.empty() || (args.size() == 1 && trim(args[0]) == "2/pi-1/2")) {
            return BoundFamily::thm2_reversed_threshold();
        }
        arity(1);
        return BoundFamily::thm2_reversed(parse_number(trim(args[0]), text));
    }
    if (name == "thm2_maxcoef" || name == "thm2_mincoef") {
        arity(2);
        const Params p{parse_number(trim(args[0]), text), parse_number(trim(args[1]), text)};
        return name == "thm2_maxcoef" ? BoundFamily::max_coef(p) : BoundFamily::min_coef(p);
    }
    throw ArgumentError("unknown family '" + std::string(text) + "'");
}

std::vector<BoundFamily> parse_families(std::string_view list) {
    std::vector<BoundFamily> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= list.size(); ++i) {
        if (i == list.size() || (list[i] == ',' && depth == 0)) {
            const auto item = trim(list.substr(start, i - start));
            if (!item.empty()) out.push_back(parse_family(item));
            start = i + 1;
        } else if (list[i] == '(') {
            ++depth;
        } else if (list[i] == ')') {
            --depth;
        }
    }
    return out;
}

std::vector<BoundFamily> default_families() {
    return {BoundFamily::carlson(), BoundFamily::thm2_threshold(), BoundFamily::thm2_reversed_threshold(),
            BoundFamily::thm3()};
}

double BoundInterval::width() const {
    if (!lower || !upper) return kInf;
    return *upper - *lower;
}

BoundInterval family_bounds(const BoundFamily& fam, double x) {
    require_valid(fam);
    if (!(x > 0.0 && x < 1.0)) throw DomainError("family_bounds: x must lie in (0, 1)");
    BoundInterval out;
    const auto sides = bounds::family_sides<double>(fam, x);
    if (sides.lower) {
        out.lower = round_down(*sides.lower);
        out.lower_family = fam.id();
    }
    if (sides.upper) {
        out.upper = round_up(*sides.upper);
        out.upper_family = fam.id();
    }
    return out;
}

BoundInterval best_envelope(double x, std::span<const BoundFamily> enabled) {
    if (enabled.empty()) throw ArgumentError("best_envelope: no families enabled");
    for (const auto& fam : enabled) require_valid(fam);
    if (!(x > -1.0 && x <= 1.0)) throw DomainError("best_envelope: x must lie in (-1, 1]");
    if (x == 1.0) return {0.0, 0.0, "exact", "exact"};
    if (x >= 0.0) return envelope_nonneg(x, enabled);

    const BoundInterval mirror = envelope_nonneg(-x, enabled);
    return {pi_minus(*mirror.upper, true), pi_minus(*mirror.lower, false), mirror.upper_family,
            mirror.lower_family};
}

Approximation approx_arccos(double x) {
    static const std::vector<BoundFamily> families = default_families();
    const BoundInterval env = best_envelope(x, families);
    const double lo = *env.lower;
    const double hi = *env.upper;
    if (lo == hi) return {lo, 0.0};
    const double mid = lo + (hi - lo) / 2;
    const double radius = std::nextafter(std::max(mid - lo, hi - mid), kInf);
    return {mid, radius};
}

std::vector<TableRow> bound_table(std::span<const double> grid, std::span<const BoundFamily> enabled) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] > 0.0 && grid[i] < 1.0)) throw DomainError("bound_table: grid points must lie in (0, 1)");
        if (i > 0 && !(grid[i] > grid[i - 1])) throw ArgumentError("bound_table: grid must be strictly increasing");
    }
    std::vector<TableRow> rows;
    rows.reserve(grid.size());
    for (const double x : grid) {
        const BoundInterval env = best_envelope(x, enabled);
        TableRow row;
        row.x = x;
        row.lower = *env.lower;
        row.upper = *env.upper;
        row.reference = static_cast<double>(oracle::arccos<hp_t>(hp_t(x)));
        row.width = row.upper - row.lower;
        row.lower_family = env.lower_family;
        row.upper_family = env.upper_family;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace carlson
