#pragma once

#include <cstdint>
#include <string>

namespace geomhop {

// Fixed-point decimal arithmetic contract shared by generation, solving and
// solution-text rendering.
//
// Every intermediate value is a binary double carrying a 2-decimal quantity.
// round2() maps a raw double onto the nearest cent. A raw value that sits
// within half an ulp of a half-cent boundary is binary representation noise
// on an exact decimal tie (e.g. 16.01/2 -> 8.005000000000000781); such ties
// are resolved half-even on the cents. Genuine non-tie values are never
// that close to a boundary, so the window never misclassifies them.
struct RoundingPolicy {
    double pi = 3.14;  // substituted for the pi symbol inside formulas
    int decimals = 2;
};

// nearest cent count for x (ties-to-even inside the noise window)
int64_t round2_cents(double x);

// x rounded to 2 decimals under the policy above
double round2(double x);

// true iff x is a 2-dp value that is a whole number
bool is_integral_2dp(double x);

// Canonical number formatting: integers print without a decimal point,
// everything else prints with up to 2 decimals, trailing zeros trimmed
// ("44", "8", "10.5", "28.69").
std::string format_number(double x);

// parse a decimal number; returns false when s is not a plain number
bool parse_number(const std::string& s, double& out);

}  // namespace geomhop
