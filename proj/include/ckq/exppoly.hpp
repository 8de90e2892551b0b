#pragma once

// Exact exponential polynomials in one formal variable v: finite sums of
// terms c * v^m * exp(e*v) where c lies in Q(i,sqrt2), m >= 0, and the rate e
// is a half-integer stored doubled (e2 = 2e).  This ring is an integral
// domain (isomorphic to C[v] tensor the Laurent ring C[s, s^-1] with
// s = exp(v/2)), so cancellation and proportionality tests are exact.

#include "ckq/field.hpp"

#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace ckq {

struct ExpKey {
    int m = 0;  // power of v
    int e2 = 0; // doubled exponential rate: term carries exp((e2/2) * v)
    auto operator<=>(const ExpKey&) const = default;
};

class ExpPoly {
public:
    ExpPoly() = default;
    ExpPoly(CRootTwo c) { add_term(c, 0, 0); }
    ExpPoly(Rat r) { add_term(CRootTwo(r), 0, 0); }
    ExpPoly(long long n) { add_term(CRootTwo(n), 0, 0); }

    static ExpPoly term(CRootTwo c, int m, int e2) {
        ExpPoly p;
        p.add_term(c, m, e2);
        return p;
    }
    static ExpPoly one() { return ExpPoly(CRootTwo::one()); }
    static ExpPoly var() { return term(CRootTwo::one(), 1, 0); } // the variable v
    static ExpPoly exp_rate(int e2) { return term(CRootTwo::one(), 0, e2); }

    const std::map<ExpKey, CRootTwo>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const CRootTwo& c, int m, int e2) {
        if (c.is_zero()) return;
        ExpKey k{m, e2};
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    ExpPoly operator-() const {
        ExpPoly r;
        for (auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }

    friend ExpPoly operator+(const ExpPoly& x, const ExpPoly& y) {
        ExpPoly r = x;
        for (auto& [k, c] : y.terms_) r.add_term(c, k.m, k.e2);
        return r;
    }
    friend ExpPoly operator-(const ExpPoly& x, const ExpPoly& y) { return x + (-y); }
    friend ExpPoly operator*(const ExpPoly& x, const ExpPoly& y) {
        ExpPoly r;
        for (auto& [ka, ca] : x.terms_)
            for (auto& [kb, cb] : y.terms_)
                r.add_term(ca * cb, ka.m + kb.m, ka.e2 + kb.e2);
        return r;
    }
    ExpPoly& operator+=(const ExpPoly& o) { return *this = *this + o; }
    ExpPoly& operator-=(const ExpPoly& o) { return *this = *this - o; }
    ExpPoly& operator*=(const ExpPoly& o) { return *this = *this * o; }

    friend bool operator==(const ExpPoly& x, const ExpPoly& y) { return x.terms_ == y.terms_; }

    // Units of the ring are single terms c * exp(e*v) with no polynomial part.
    bool is_invertible() const {
        return terms_.size() == 1 && terms_.begin()->first.m == 0;
    }
    ExpPoly inverse() const {
        if (!is_invertible()) throw std::domain_error("non-unit exponential polynomial");
        auto& [k, c] = *terms_.begin();
        return term(c.inverse(), 0, -k.e2);
    }

    // Set v -> 0 and every exp(e*v) -> 1 simultaneously: only m == 0 terms survive.
    CRootTwo drop_exponentials() const {
        CRootTwo acc;
        for (auto& [k, c] : terms_)
            if (k.m == 0) acc += c;
        return acc;
    }

    // Evaluate exactly at exp(v/2) = s with s^2 = r, inside the quadratic
    // extension Q(i,sqrt2)[s]/(s^2 - r).  Result is the pair (A, B) meaning
    // A + B*s.  Only legal when no term carries a power of v.
    std::pair<CRootTwo, CRootTwo> eval_exp_pair(const Rat& r) const {
        CRootTwo a, b;
        for (auto& [k, c] : terms_) {
            if (k.m != 0)
                throw std::domain_error("eval_exp_pair on polynomial-in-v term");
            if (k.e2 % 2 == 0) {
                a += c * CRootTwo(r.pow(k.e2 / 2));
            } else {
                // s^e2 = r^((e2-1)/2) * s, exact for odd e2 of either sign
                b += c * CRootTwo(r.pow((k.e2 - 1) / 2));
            }
        }
        return {a, b};
    }

    std::complex<double> eval_double(double v) const {
        std::complex<double> acc;
        for (auto& [k, c] : terms_) {
            double mag = std::exp(0.5 * k.e2 * v);
            double pw = 1.0;
            for (int t = 0; t < k.m; ++t) pw *= v;
            acc += c.to_complex() * (mag * pw);
        }
        return acc;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (auto& [k, c] : terms_) {
            if (!first) s += " + ";
            first = false;
            s += "(" + c.str() + ")";
            if (k.m == 1) s += "*v";
            if (k.m > 1) s += "*v^" + std::to_string(k.m);
            if (k.e2 != 0) {
                s += "*e^(";
                if (k.e2 % 2 == 0)
                    s += std::to_string(k.e2 / 2);
                else
                    s += std::to_string(k.e2) + "/2";
                s += "v)";
            }
        }
        return s;
    }

private:
    std::map<ExpKey, CRootTwo> terms_;
};

} // namespace ckq
