#pragma once

// Quadratic extension Q(i,sqrt2)[s]/(s^2 - NUM/DEN): exact arithmetic with a
// formal square root of a rational, used to evaluate half-integer exponential
// rates (q^{1/2} = s) at a concrete rational q without leaving exact land.

#include "ckq/exppoly.hpp"

namespace ckq {

template <long long NUM, long long DEN>
struct QuadExt {
    CRootTwo a; // rational-part coefficient
    CRootTwo b; // coefficient of s

    static Rat mod() { return Rat(NUM, DEN); }

    QuadExt() = default;
    QuadExt(CRootTwo a_, CRootTwo b_ = CRootTwo()) : a(a_), b(b_) {}

    static QuadExt from_exp_poly(const ExpPoly& p) {
        auto [x, y] = p.eval_exp_pair(mod());
        return {x, y};
    }

    bool is_zero() const { return a.is_zero() && b.is_zero(); }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        return {x.a + y.a, x.b + y.b};
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        return {x.a - y.a, x.b - y.b};
    }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        CRootTwo r{QRootTwo(mod())};
        return {x.a * y.a + r * (x.b * y.b), x.a * y.b + x.b * y.a};
    }
    QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
    QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a == y.a && x.b == y.b;
    }
};

} // namespace ckq
