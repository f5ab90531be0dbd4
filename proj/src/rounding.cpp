#include "geomhop/rounding.hpp"

#include <cfloat>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <stdexcept>

static_assert(LDBL_MANT_DIG >= 64, "round2 needs an extended-precision long double");

namespace geomhop {

int64_t round2_cents(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("round2 on non-finite value");
    bool neg = std::signbit(x);
    if (neg) x = -x;
    // x*100 and x*200 are exact in a 64-bit-mantissa long double
    long double y = static_cast<long double>(x) * 100.0L;
    long double y2 = y * 2.0L;
    long long half_cents = llroundl(y2);
    if (half_cents % 2 != 0) {
        long double dist = fabsl(y2 - static_cast<long double>(half_cents));
        double ulp = std::nextafter(x, std::numeric_limits<double>::infinity()) - x;
        if (dist <= 100.0L * static_cast<long double>(ulp)) {
            // representation noise on an exact decimal tie: half-even
            long long lo = (half_cents - 1) / 2;
            long long n = (lo % 2 == 0) ? lo : lo + 1;
            return neg ? -n : n;
        }
    }
    long long n = llroundl(y);
    return neg ? -n : n;
}

double round2(double x) {
    return static_cast<double>(round2_cents(x)) / 100.0;
}

bool is_integral_2dp(double x) {
    return round2_cents(x) % 100 == 0;
}

std::string format_number(double x) {
    int64_t cents = round2_cents(x);
    bool neg = cents < 0;
    uint64_t c = static_cast<uint64_t>(neg ? -cents : cents);
    uint64_t whole = c / 100;
    uint64_t frac = c % 100;
    char buf[48];
    if (frac == 0) {
        snprintf(buf, sizeof(buf), "%s%llu", neg ? "-" : "", (unsigned long long)whole);
    } else if (frac % 10 == 0) {
        snprintf(buf, sizeof(buf), "%s%llu.%llu", neg ? "-" : "", (unsigned long long)whole,
                 (unsigned long long)(frac / 10));
    } else {
        snprintf(buf, sizeof(buf), "%s%llu.%02llu", neg ? "-" : "", (unsigned long long)whole,
                 (unsigned long long)frac);
    }
    return buf;
}

bool parse_number(const std::string& s, double& out) {
    if (s.empty()) return false;
    const char* p = s.c_str();
    char* end = nullptr;
    double v = std::strtod(p, &end);
    if (end == p || end != p + s.size()) return false;
    if (!std::isfinite(v)) return false;
    out = v;
    return true;
}

}  // namespace geomhop
