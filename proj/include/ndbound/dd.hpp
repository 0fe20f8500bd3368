#pragma once

#include <cmath>

// Double-double arithmetic (unevaluated sum hi + lo, |lo| <= ulp(hi)/2).
// Used to carry subset sums and alternating-series accumulators with about
// 106 bits of precision.
namespace ndbound::dd {

struct DD {
    double hi = 0.0;
    double lo = 0.0;

    double value() const noexcept { return hi + lo; }
};

inline DD two_sum(double a, double b) noexcept {
    const double s = a + b;
    const double bb = s - a;
    const double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline DD fast_two_sum(double a, double b) noexcept {
    const double s = a + b;
    return {s, b - (s - a)};
}

inline DD add(DD a, double b) noexcept {
    DD s = two_sum(a.hi, b);
    s.lo += a.lo;
    return fast_two_sum(s.hi, s.lo);
}

inline DD add(DD a, DD b) noexcept {
    DD s = two_sum(a.hi, b.hi);
    DD t = two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = fast_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return fast_two_sum(s.hi, s.lo);
}

inline DD neg(DD a) noexcept { return {-a.hi, -a.lo}; }

inline DD mul(DD a, DD b) noexcept {
    const double p = a.hi * b.hi;
    double e = std::fma(a.hi, b.hi, -p);
    e += a.hi * b.lo + a.lo * b.hi;
    return fast_two_sum(p, e);
}

inline DD scale(DD a, double b) noexcept { return mul(a, DD{b, 0.0}); }

// 1 / a, one Newton correction on top of the double reciprocal.
inline DD reciprocal(DD a) noexcept {
    const double r = 1.0 / a.hi;
    const double residual = std::fma(-r, a.hi, 1.0) - r * a.lo;
    return fast_two_sum(r, residual * r);
}

inline DD reciprocal(double a) noexcept { return reciprocal(DD{a, 0.0}); }

}  // namespace ndbound::dd
