#include <doctest.h>

#include "carlson/bounds.hpp"
#include "reference.hpp"

#include <numbers>
#include <random>

using namespace carlson;
using std::numbers::pi;

namespace {

hp_t acos_hp(double x) { return oracle::arccos<hp_t>(hp_t(x)); }

std::vector<double> containment_points(std::uint64_t seed, int n_uniform, int n_edge) {
    std::mt19937_64 rng(seed);
    std::vector<double> xs;
    for (int i = 0; i < n_uniform; ++i) {
        double u = 0;
        while (u == 0) u = ref::unit(rng);
        xs.push_back(u);
    }
    for (int i = 0; i < n_edge; ++i) {
        const double t = (1 - ref::unit(rng)) * 1e-10;  // (0, 1e-10]
        xs.push_back(t);
        xs.push_back(1 - t);
    }
    return xs;
}

// Relative margin required for strictness. The carlson lower side touches arccos to second order at
// x = 1 (margin ~ 1.4e-3 (1-x)^2), so within 1e-10 of an endpoint the bar drops to the 40-digit noise floor.
hp_t strict_margin(double x) { return hp_t(x < 1e-10 || 1 - x <= 1e-10 ? 1e-40 : 1e-30); }

void check_contains(const BoundFamily& fam, const std::vector<double>& xs) {
    INFO(fam.id());
    std::size_t bad = 0;
    for (const double x : xs) {
        const BoundInterval iv = family_bounds(fam, x);
        const hp_t t = acos_hp(x);
        if (iv.lower && !(hp_t(*iv.lower) < t)) ++bad;
        if (iv.upper && !(hp_t(*iv.upper) > t)) ++bad;
        const auto raw = bounds::family_sides<hp_t>(fam, hp_t(x));
        if (fam.kind() == FamilyKind::Thm2MaxCoef || fam.kind() == FamilyKind::Thm2MinCoef) continue;
        if (raw.lower && !((t - *raw.lower) / t > strict_margin(x))) ++bad;
        if (raw.upper && !((*raw.upper - t) / t > strict_margin(x))) ++bad;
    }
    CHECK(bad == 0);
}

}  // namespace

TEST_CASE("family ids, parsing and validity") {
    CHECK(BoundFamily::carlson().id() == "carlson");
    CHECK(BoundFamily::thm2_threshold().id() == "thm2(1/6)");
    CHECK(BoundFamily::thm2(0.2).id() == "thm2(0.2)");
    CHECK(BoundFamily::thm2_reversed_threshold().id() == "thm2_reversed(2/pi-1/2)");
    CHECK(BoundFamily::max_coef({0.5, 0.14}).id() == "thm2_maxcoef(0.5,0.14)");
    for (const auto& fam : {BoundFamily::carlson(), BoundFamily::thm3(), BoundFamily::thm2_threshold(), BoundFamily::thm2(0.2),
                            BoundFamily::thm2_reversed(0.0), BoundFamily::thm2_reversed_threshold(),
                            BoundFamily::max_coef({0.5, 0.14}), BoundFamily::min_coef({0.51, 0.12})}) {
        const BoundFamily back = parse_family(fam.id());
        CHECK(back.id() == fam.id());
        CHECK(back.kind() == fam.kind());
        CHECK(back.is_threshold() == fam.is_threshold());
    }
    CHECK(parse_family("thm2").is_threshold());
    CHECK(parse_families("carlson, thm2(0.3),thm2_maxcoef(0.5,0.14)").size() == 3);
    CHECK_THROWS_AS(parse_family("thm4"), ArgumentError);
    CHECK_THROWS_AS(parse_family("thm2(x)"), ArgumentError);
    CHECK_THROWS_AS(parse_family("thm2(0.2"), ArgumentError);
    CHECK_THROWS_AS(parse_family("carlson(1)"), ArgumentError);

    CHECK(BoundFamily::thm2(1.0 / 6).valid());
    CHECK_FALSE(BoundFamily::thm2(0.16).valid());
    CHECK(BoundFamily::thm2_reversed(0.13).valid());
    CHECK_FALSE(BoundFamily::thm2_reversed(0.14).valid());
    CHECK(BoundFamily::max_coef({0.5, 0.14}).valid());
    CHECK_FALSE(BoundFamily::max_coef({0.51, 0.12}).valid());
    CHECK(BoundFamily::min_coef({0.51, 0.12}).valid());
    CHECK_FALSE(BoundFamily::min_coef({0.5, 0.14}).valid());  // x2 = 1 is not inside (0, 1)
}

TEST_CASE("family_bounds examples") {
    // Limits at x = 0 of the carlson expressions bracket pi/2.
    const auto at0 = bounds::family_sides<hp_t>(BoundFamily::carlson(), hp_t(0));
    CHECK(static_cast<double>(*at0.lower) == doctest::Approx(6 / (2 * std::sqrt(2.0) + 1)).epsilon(1e-15));
    CHECK(static_cast<double>(*at0.lower) == doctest::Approx(1.5674).epsilon(1e-4));
    CHECK(static_cast<double>(*at0.upper) == doctest::Approx(std::cbrt(4.0)).epsilon(1e-15));
    CHECK(*at0.lower < oracle::pi<hp_t>() / 2);
    CHECK(*at0.upper > oracle::pi<hp_t>() / 2);

    // thm2 at 1/6 is the pi/2 and cbrt4 pair; the reversed threshold uses 4^(1/pi).
    std::mt19937_64 rng(41);
    for (int i = 0; i < 200; ++i) {
        const hp_t x(ref::unit(rng));
        const hp_t pi_hp = oracle::pi<hp_t>();
        const hp_t root = sqrt(1 - x);
        const auto t2 = bounds::family_sides<hp_t>(BoundFamily::thm2_threshold(), x);
        const hp_t sixth = pow(1 + x, hp_t(1) / 6);
        CHECK(static_cast<double>(abs(*t2.lower - pi_hp * root / (2 * sixth))) < 1e-45);
        CHECK(static_cast<double>(abs(*t2.upper - cbrt(hp_t(4)) * root / sixth)) < 1e-45);
        const auto rv = bounds::family_sides<hp_t>(BoundFamily::thm2_reversed_threshold(), x);
        const hp_t e = 2 / pi_hp - hp_t(1) / 2;
        CHECK(static_cast<double>(abs(*rv.lower - pow(hp_t(4), 1 / pi_hp) * root / pow(1 + x, e))) < 1e-45);
        CHECK(static_cast<double>(abs(*rv.upper - pi_hp / 2 * root / pow(1 + x, e))) < 1e-45);
    }

    const BoundInterval mx = family_bounds(BoundFamily::max_coef({0.5, 0.14}), 0.3);
    CHECK_FALSE(mx.lower.has_value());
    CHECK(mx.upper.has_value());
    CHECK(std::isinf(mx.width()));
    const BoundInterval mn = family_bounds(BoundFamily::min_coef({0.51, 0.12}), 0.3);
    CHECK(mn.lower.has_value());
    CHECK_FALSE(mn.upper.has_value());

    CHECK_THROWS_AS(family_bounds(BoundFamily::thm2(0.1), 0.5), InvalidFamily);
    CHECK_THROWS_AS(family_bounds(BoundFamily::carlson(), 0.0), DomainError);
    CHECK_THROWS_AS(family_bounds(BoundFamily::carlson(), 1.0), DomainError);
}

TEST_CASE("best_envelope examples") {
    const auto all = default_families();
    const BoundInterval one = best_envelope(1.0, all);
    CHECK(*one.lower == 0.0);
    CHECK(*one.upper == 0.0);

    const std::vector<BoundFamily> three{BoundFamily::carlson(), BoundFamily::thm2_threshold(), BoundFamily::thm3()};
    const BoundInterval half = best_envelope(0.5, three);
    CHECK(hp_t(*half.lower) < oracle::pi<hp_t>() / 3);
    CHECK(hp_t(*half.upper) > oracle::pi<hp_t>() / 3);

    const BoundInterval neg = best_envelope(-0.5, all);
    CHECK(hp_t(*neg.lower) < 2 * oracle::pi<hp_t>() / 3);
    CHECK(hp_t(*neg.upper) > 2 * oracle::pi<hp_t>() / 3);

    const BoundInterval zero = best_envelope(0.0, all);
    CHECK(hp_t(*zero.lower) < oracle::pi<hp_t>() / 2);
    CHECK(hp_t(*zero.upper) > oracle::pi<hp_t>() / 2);
    CHECK(zero.width() < 1e-12);  // the thm2 pair collapses onto pi/2 at 0

    CHECK_THROWS_AS(best_envelope(0.5, std::vector<BoundFamily>{}), ArgumentError);
    CHECK_THROWS_AS(best_envelope(0.5, std::vector<BoundFamily>{BoundFamily::thm2(0.1)}), InvalidFamily);
    CHECK_THROWS_AS(best_envelope(1.5, all), DomainError);
    CHECK_THROWS_AS(best_envelope(-1.0, all), DomainError);

    // One-sided family alone: the other side falls back to the trivial bound.
    const std::vector<BoundFamily> only_max{BoundFamily::max_coef({0.5, 0.14})};
    const BoundInterval fb = best_envelope(0.3, only_max);
    CHECK(*fb.lower == 0.0);
    CHECK(fb.lower_family == "trivial");
    CHECK(fb.upper_family == "thm2_maxcoef(0.5,0.14)");
}

TEST_CASE("approx_arccos examples") {
    const Approximation at1 = approx_arccos(1.0);
    CHECK(at1.value == 0.0);
    CHECK(at1.radius == 0.0);
    const Approximation a = approx_arccos(0.9);
    CHECK(a.radius < family_bounds(BoundFamily::carlson(), 0.9).width());
    const Approximation h = approx_arccos(0.5);
    CHECK(abs(hp_t(h.value) - oracle::pi<hp_t>() / 3) <= hp_t(h.radius));
    CHECK_THROWS_AS(approx_arccos(2.0), DomainError);
}

TEST_CASE("bound_table examples") {
    const std::vector<BoundFamily> carlson{BoundFamily::carlson()};
    const std::vector<double> g1{0.5};
    const auto one = bound_table(g1, carlson);
    REQUIRE(one.size() == 1);
    CHECK(one[0].lower < one[0].reference);
    CHECK(one[0].reference < one[0].upper);
    CHECK(one[0].reference == static_cast<double>(oracle::pi<hp_t>() / 3));

    const std::vector<double> g3{0.25, 0.5, 0.75};
    const auto three = bound_table(g3, default_families());
    CHECK(three.size() == 3);
    for (const auto& r : three) CHECK(r.width > 0);

    const std::vector<double> near1{1 - 1e-6};
    CHECK(bound_table(near1, default_families())[0].width < 1e-2);

    const std::vector<double> unordered{0.5, 0.25};
    CHECK_THROWS_AS(bound_table(unordered, carlson), ArgumentError);
    const std::vector<double> outside{0.5, 1.0};
    CHECK_THROWS_AS(bound_table(outside, carlson), DomainError);
}

TEST_CASE("containment of every valid family, strict at 40 digits") {
    const auto xs = containment_points(42, 100000, 1000);
    for (const auto& fam : default_families()) check_contains(fam, xs);
    const auto fewer = containment_points(43, 10000, 1000);
    for (const auto& fam : {BoundFamily::thm2(0.2), BoundFamily::thm2(0.5), BoundFamily::thm2_reversed(0.0),
                            BoundFamily::thm2_reversed(-0.3), BoundFamily::max_coef({0.5, 0.14}),
                            BoundFamily::min_coef({0.51, 0.12})}) {
        check_contains(fam, fewer);
    }
}

TEST_CASE("envelope never wider than any member, intervals ordered and nonnegative") {
    std::mt19937_64 rng(44);
    const auto fams = default_families();
    for (int i = 0; i < 20000; ++i) {
        const double x = ref::unit(rng);
        if (x == 0) continue;
        const BoundInterval env = best_envelope(x, fams);
        CHECK(*env.lower <= *env.upper);
        CHECK(*env.lower >= 0);
        for (const auto& fam : fams) CHECK(env.width() <= family_bounds(fam, x).width());
    }
}

TEST_CASE("reflection consistency within 2 ulp") {
    std::mt19937_64 rng(45);
    const auto fams = default_families();
    std::uint64_t worst = 0;
    for (int i = 0; i < 50000; ++i) {
        const double x = ref::unit(rng);
        if (x == 0) continue;
        const BoundInterval pos = best_envelope(x, fams);
        const BoundInterval neg = best_envelope(-x, fams);
        const hp_t pi_hp = oracle::pi<hp_t>();
        const double want_lower = static_cast<double>(pi_hp - hp_t(*pos.upper));
        const double want_upper = static_cast<double>(pi_hp - hp_t(*pos.lower));
        worst = std::max({worst, ref::ulp_distance(*neg.lower, want_lower), ref::ulp_distance(*neg.upper, want_upper)});
        CHECK(neg.lower_family == pos.upper_family);
        CHECK(neg.upper_family == pos.lower_family);
    }
    CHECK(worst <= 2);
}

TEST_CASE("width decays towards x = 1") {
    for (const auto& fam : {BoundFamily::carlson(), BoundFamily::thm2_threshold(), BoundFamily::thm2(0.2), BoundFamily::thm2(0.5)}) {
        INFO(fam.id());
        double prev = INFINITY;
        for (int k = 2; k <= 10; ++k) {
            const double w = family_bounds(fam, 1 - std::pow(10.0, -k)).width();
            CHECK(w < prev);
            prev = w;
        }
    }
}

TEST_CASE("coefficient bounds for random admissible parameters") {
    std::mt19937_64 rng(46);
    int max_done = 0, min_done = 0;
    for (int tries = 0; tries < 100000 && (max_done < 30 || min_done < 30); ++tries) {
        const Params p{0.4 + 0.2 * ref::unit(rng), 0.05 + 0.15 * ref::unit(rng)};
        for (const auto& fam : {BoundFamily::max_coef(p), BoundFamily::min_coef(p)}) {
            if (!fam.valid()) continue;
            int& done = fam.kind() == FamilyKind::Thm2MaxCoef ? max_done : min_done;
            if (done >= 30) continue;
            ++done;
            INFO(fam.id());
            for (int k = 0; k < 300; ++k) {
                const hp_t x(ref::unit(rng));
                const auto s = bounds::family_sides<hp_t>(fam, x);
                const hp_t t = oracle::arccos<hp_t>(x);
                if (s.upper) CHECK(*s.upper >= t);
                if (s.lower) CHECK(*s.lower <= t);
            }
        }
    }
    CHECK(max_done == 30);
    CHECK(min_done == 30);
}
