#pragma once

#include "carlson/bounds.hpp"
#include "carlson/classifier.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace carlson {

/// A sample point attached to a report: a violation, or a demonstration (sharpness, extremum).
struct Witness {
    std::optional<double> x;
    std::optional<double> a;
    std::optional<double> b;
    bool violation = false;
    std::string detail;
};

/// passed == no violation witnesses; worst_margin is the smallest signed margin seen (positive = healthy).
struct VerificationReport {
    std::string check_id;
    std::uint64_t samples = 0;
    double worst_margin = 0.0;
    bool passed = false;
    std::vector<Witness> witnesses;
};

struct VerifyOptions {
    std::uint64_t seed = 7;
    unsigned digits = kDefaultDigits;
};

/// Strict-inequality threshold for margins computed at 40 digits.
inline constexpr double kStrictMargin = 1e-30;

/// Samples n uniform x in (0,1) plus x = 10^-k and 1 - 10^-k, k = 1..endpoint_depth, and checks
/// lower < arccos x < upper with relative margin > kStrictMargin. The family's validity predicate
/// is not consulted, so uncertified parameters can be probed.
VerificationReport check_double_inequality(const BoundFamily& fam, std::size_t n, unsigned endpoint_depth,
                                           const VerifyOptions& opts = {});

/// Scans f_{a,b} on an n-point grid and compares the sign pattern of consecutive differences with
/// the pattern of `expected`.
VerificationReport check_class(const Params& p, RegionClass expected, std::size_t n,
                               const VerifyOptions& opts = {});

/// q < 0, h > 0, g'' > 0 on [0, 1 - 1e-8]; q increasing, h decreasing; q, h -> 0 at 1.
VerificationReport check_sign_chain(std::size_t n, const VerifyOptions& opts = {});

enum class SharpnessKind { BUpperOneSixth, BLowerTwoOverPi, Thm3Constants };

std::string_view to_string(SharpnessKind k);
SharpnessKind sharpness_kind_from_name(std::string_view name);

/// Demonstrates that a threshold constant cannot be moved by `epsilon` via geometric sweeps
/// x = 1 - 10^-k or x = 10^-k, k = 1..12. Passing requires a witness.
VerificationReport check_sharpness(SharpnessKind kind, double epsilon, const VerifyOptions& opts = {});

/// Discriminant identity over n random (a, b), the two coincidences between the concrete double
/// inequalities, the one stated domination, and two-way witnesses for every other pair.
VerificationReport check_identities(std::size_t n, const VerifyOptions& opts = {});

/// Checks a thm2_maxcoef / thm2_mincoef family bound on n samples.
VerificationReport check_coefficient_bound(const BoundFamily& fam, std::size_t n, const VerifyOptions& opts = {});

/// Grid argmax (argmin) of the envelope on n points against the closed-form x1 (x2), within 1e-4.
VerificationReport check_envelope_extremum(const Params& p, std::size_t n, const VerifyOptions& opts = {});

/// Every check at default sizes.
std::vector<VerificationReport> run_suite(const VerifyOptions& opts = {});

/// Grid x_k = sin^2(pi k / (2(n+1))), k = 1..n: dense near both endpoints.
std::vector<double> scan_grid(std::size_t n);

/// Run-length compressed signs of f(x_{k+1}) - f(x_k), e.g. "+", "-+", "+-+". Differences that are
/// small relative to f, and points within 1e-3 of x = 1, are evaluated at 40 digits.
std::string sign_pattern(const Params& p, std::span<const double> grid);

/// "-", "+", "+-", "-+", "+-+" for the five determinate classes; empty for Indeterminate.
std::string_view expected_pattern(RegionClass c);

}  // namespace carlson
