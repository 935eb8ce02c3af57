#include <doctest.h>

#include "carlson/oracle.hpp"
#include "reference.hpp"

#include <cstdlib>
#include <random>
#include <vector>

using namespace carlson;
using oracle::arccos_hp;
using oracle::arccos_stable;
using oracle::const_hp;

namespace {

ref::dec value(const oracle::HPValue& v) { return ref::dec(v.decimal); }

}  // namespace

TEST_CASE("arccos_hp at the trivial points") {
    const auto half_pi = arccos_hp("0", 50);
    CHECK(half_pi.digits == 50);
    CHECK(ref::rel_err(value(half_pi), ref::pi() / 2) < 1e-49);
    CHECK(value(arccos_hp("1", 50)) == 0);
    CHECK(ref::rel_err(value(arccos_hp("-1", 50)), ref::pi()) < 1e-49);
    CHECK(ref::rel_err(value(arccos_hp(-1.0, 50)), ref::pi()) < 1e-49);
}

TEST_CASE("arccos_hp near 1 follows the endpoint series") {
    const ref::dec t("1e-20");
    const auto got = value(arccos_hp("0.99999999999999999999", 50));
    CHECK(ref::rel_err(got, ref::acos_one_minus(t)) < 1e-48);
    // Leading order sqrt(2t) = sqrt2 * 1e-10.
    CHECK(ref::rel_err(got, sqrt(ref::dec(2)) * ref::dec("1e-10")) < 1e-20);

    for (const char* s : {"1e-5", "1e-12", "3e-30", "1e-60"}) {
        const ref::dec tt(s);
        const std::string x = (1 - tt).str(120, std::ios_base::fixed);
        CHECK(ref::rel_err(value(arccos_hp(x, 60)), ref::acos_one_minus(tt)) < 1e-58);
    }
}

TEST_CASE("arccos_hp agrees with an independent decimal acos") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        const double x = 2 * ref::unit(rng) - 1;
        for (const unsigned d : {17u, 40u, 90u}) {
            CHECK(ref::rel_err(value(arccos_hp(x, d)), ref::acos(x)) <= std::pow(10.0, 1.0 - d));
        }
    }
}

TEST_CASE("arccos_hp reflection identity") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 500; ++i) {
        const double x = ref::unit(rng);
        for (const unsigned d : {20u, 40u, 80u}) {
            const ref::dec sum = value(arccos_hp(x, d)) + value(arccos_hp(-x, d));
            CHECK(ref::rel_err(sum, ref::pi()) <= std::pow(10.0, 2.0 - d));
        }
    }
}

TEST_CASE("arccos_hp is strictly decreasing along a grid") {
    ref::dec prev = 4;
    for (int k = -1000; k <= 1000; ++k) {
        const ref::dec v = value(arccos_hp(k / 1000.0, 40));
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("arccos_hp errors") {
    CHECK_THROWS_AS(arccos_hp("1.0000000001", 40), DomainError);
    CHECK_THROWS_AS(arccos_hp(-1.5, 40), DomainError);
    CHECK_THROWS_AS(arccos_hp("0.5", 16), PrecisionError);
    CHECK_THROWS_AS(arccos_hp("0.5", 201), PrecisionError);
    CHECK_THROWS_AS(arccos_hp("abc", 40), ArgumentError);
    CHECK_THROWS_AS(arccos_hp("0.5x", 40), ArgumentError);
    CHECK_NOTHROW(arccos_hp("0.5", 200));
}

TEST_CASE("arccos_stable examples") {
    CHECK(arccos_stable(0.0) == 1.5707963267948966);
    CHECK(arccos_stable(-1.0) == std::numbers::pi);
    CHECK(arccos_stable(1.0) == 0.0);
    const double x = 0.99999999;
    CHECK(ref::ulp_distance(arccos_stable(x), arccos_hp(x, 30).to_double()) <= 4);
    CHECK_THROWS_AS(arccos_stable(1.0000000000000002), DomainError);
}

TEST_CASE("arccos_stable within 4 ulp everywhere, including near the endpoints") {
    std::mt19937_64 rng(13);
    std::vector<double> xs;
    for (int i = 0; i < 100000; ++i) xs.push_back(2 * ref::unit(rng) - 1);
    for (int i = 0; i < 1000; ++i) {
        const double t = ref::unit(rng) * 1e-12;
        xs.push_back(1.0 - t);
        xs.push_back(-1.0 + t);
    }
    std::uint64_t worst = 0;
    for (const double x : xs) {
        const double want = ref::acos_mpfr(x);
        worst = std::max(worst, ref::ulp_distance(arccos_stable(x), want));
    }
    CHECK(worst <= 4);
}

TEST_CASE("const_hp values") {
    CHECK(const_hp("TWO_OVER_PI", 20).decimal.rfind("0.63661977236758134308", 0) == 0);
    CHECK(const_hp("CBRT4", 20).decimal.rfind("1.587401051968199474", 0) == 0);
    CHECK(const_hp("BEST_UPPER_THM3", 20).decimal.rfind("6.0136792649532628662", 0) == 0);
    CHECK(ref::rel_err(value(const_hp("BEST_UPPER_THM3", 60)), (ref::dec(1) / 2 + sqrt(ref::dec(2))) * ref::pi()) < 1e-59);
    CHECK(ref::rel_err(value(const_hp("FOUR_OVER_PI_SQ", 60)), 4 / (ref::pi() * ref::pi())) < 1e-59);
    CHECK(ref::rel_err(value(const_hp("ONE_THIRD", 60)), ref::dec(1) / 3) < 1e-59);
    CHECK(ref::rel_err(value(const_hp("TWO_SQRT2", 60)), 2 * sqrt(ref::dec(2))) < 1e-59);
    CHECK(ref::rel_err(value(const_hp("PI", 200)), ref::pi()) < 1e-98);
    // CBRT4 is 2^(1/6 + 1/2).
    CHECK(ref::rel_err(value(const_hp(oracle::Constant::Cbrt4, 60)), pow(ref::dec(2), ref::dec(2) / 3)) < 1e-59);
    CHECK_THROWS_AS(const_hp("E", 20), ArgumentError);
    CHECK_THROWS_AS(const_hp("PI", 5), PrecisionError);
}

TEST_CASE("default precision honours CARLSON_PRECISION") {
    ::unsetenv("CARLSON_PRECISION");
    CHECK(default_digits() == 40);
    ::setenv("CARLSON_PRECISION", "60", 1);
    CHECK(default_digits() == 60);
    ::setenv("CARLSON_PRECISION", "7", 1);
    CHECK_THROWS_AS(default_digits(), PrecisionError);
    ::setenv("CARLSON_PRECISION", "many", 1);
    CHECK_THROWS_AS(default_digits(), PrecisionError);
    ::unsetenv("CARLSON_PRECISION");
}

TEST_CASE("Precision value type") {
    CHECK(Precision::Double().is_double());
    CHECK(Precision::Digits(40).digits() == 40);
    CHECK_THROWS_AS(Precision::Digits(10), PrecisionError);
    CHECK_THROWS_AS(Precision::Digits(201), PrecisionError);
}
