#include <doctest.h>

#include <cmath>

#include "geomhop/rounding.hpp"

using namespace geomhop;

TEST_CASE("plain nearest-cent rounding") {
    CHECK(round2(1.234) == 1.23);
    CHECK(round2(1.236) == 1.24);
    CHECK(round2(0.0) == 0.0);
    CHECK(round2(44.0) == 44.0);
    CHECK(round2(-1.236) == -1.24);
    CHECK(round2(0.6594) == 0.66);
    CHECK(round2(237.87878787878788) == 237.88);
    CHECK(round2(0.4325) == 0.43);
    CHECK(round2(15.142857142857142) == 15.14);
}

TEST_CASE("decimal ties contaminated by representation noise resolve half-even") {
    // quotients of stored 2-dp values that are exact decimal ties
    CHECK(round2(16.01 / 2) == 8.00);    // 8.005 -> even cent 800
    CHECK(round2(7.1 / 4) == 1.78);      // 1.775 -> even cent 178
    CHECK(round2(12.01 / 2) == 6.00);    // 6.005 -> 600
    CHECK(round2(0.03 / 2) == 0.02);     // 0.015 -> 2
    CHECK(round2(-16.01 / 2) == -8.00);  // symmetric
}

TEST_CASE("near-tie quotients outside the noise window round to nearest") {
    CHECK(round2(87.87 / 6) == 14.65);  // 14.645000000000001350
    CHECK(round2(92.13 / 6) == 15.35);  // 15.354999999999998650
}

TEST_CASE("worked-derivation chain values") {
    CHECK(round2(3.14 * 36) == 113.04);
    CHECK(round2(113.04 / 8) == 14.13);
    CHECK(round2(102 - 14.13) == 87.87);
    CHECK(round2(7.0 / 14.65) == 0.48);
    CHECK(round2(std::asin(0.48) * 180.0 / M_PI) == 28.69);
    CHECK(round2(1519.76 / 3.14) == 484.0);
    CHECK(round2(std::sqrt(484.0)) == 22.0);
    CHECK(round2(36.3 / 2) == 18.15);
    CHECK(round2(std::sqrt(237.88)) == 15.42);
    CHECK(round2(std::sqrt(85.64)) == 9.25);
    CHECK(round2(2.26 * 3.14) == 7.1);
    CHECK(round2(0.79 * 345.96) == 273.31);
    CHECK(round2(98.52 / 6) == 16.42);
}

TEST_CASE("round2 is idempotent on a dense grid") {
    for (int c = -2500; c <= 2500; c++) {
        double v = static_cast<double>(c) / 100.0;
        CHECK(round2(v) == v);
        CHECK(round2_cents(v) == c);
    }
}

TEST_CASE("number formatting trims trailing zeros") {
    CHECK(format_number(44.0) == "44");
    CHECK(format_number(8.0) == "8");
    CHECK(format_number(10.5) == "10.5");
    CHECK(format_number(28.69) == "28.69");
    CHECK(format_number(484.0) == "484");
    CHECK(format_number(0.48) == "0.48");
    CHECK(format_number(15.7) == "15.7");
    CHECK(format_number(-3.25) == "-3.25");
}

TEST_CASE("parse_number accepts plain decimals only") {
    double v = 0;
    CHECK(parse_number("57.7", v));
    CHECK(v == 57.7);
    CHECK(parse_number("-12", v));
    CHECK(v == -12.0);
    CHECK_FALSE(parse_number("twelve", v));
    CHECK_FALSE(parse_number("", v));
    CHECK_FALSE(parse_number("1.2.3", v));
}

TEST_CASE("integrality test") {
    CHECK(is_integral_2dp(44.0));
    CHECK(is_integral_2dp(484.00000000000006));
    CHECK_FALSE(is_integral_2dp(28.69));
}
