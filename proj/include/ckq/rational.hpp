#pragma once

// Exact rational arithmetic over 128-bit integers with overflow detection.
// All intermediate products are guarded; an overflow throws std::overflow_error
// instead of silently wrapping.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ckq {

using i128 = __int128;

inline i128 checked_add(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("i128 add overflow");
    return r;
}

inline i128 checked_sub(i128 a, i128 b) {
    i128 r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("i128 sub overflow");
    return r;
}

inline i128 checked_mul(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("i128 mul overflow");
    return r;
}

inline i128 i128_abs(i128 a) { return a < 0 ? -a : a; }

inline i128 i128_gcd(i128 a, i128 b) {
    a = i128_abs(a);
    b = i128_abs(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline std::string i128_to_string(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    std::string s;
    while (v != 0) {
        int d = static_cast<int>(neg ? -(v % 10) : (v % 10));
        s.push_back(static_cast<char>('0' + d));
        v /= 10;
    }
    if (neg) s.push_back('-');
    return {s.rbegin(), s.rend()};
}

// Normalized rational: den > 0, gcd(num, den) == 1.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(i128 n, i128 d) : num_(n), den_(d) { normalize(); }

    i128 num() const { return num_; }
    i128 den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rat operator-() const { return Rat(-num_, den_, already_normal{}); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        i128 g = i128_gcd(a.den_, b.den_);
        i128 da = a.den_ / g;
        i128 db = b.den_ / g;
        i128 n = checked_add(checked_mul(a.num_, db), checked_mul(b.num_, da));
        i128 d = checked_mul(checked_mul(da, g), db);
        return Rat(n, d);
    }
    friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
    friend Rat operator*(const Rat& a, const Rat& b) {
        i128 g1 = i128_gcd(i128_abs(a.num_), b.den_);
        i128 g2 = i128_gcd(i128_abs(b.num_), a.den_);
        i128 n = checked_mul(a.num_ / g1, b.num_ / g2);
        i128 d = checked_mul(a.den_ / g2, b.den_ / g1);
        return Rat(n, d, already_normal{});
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return a * Rat(b.den_, b.num_);
    }

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        i128 lhs = checked_mul(a.num_, b.den_);
        i128 rhs = checked_mul(b.num_, a.den_);
        return lhs <=> rhs;
    }

    Rat inverse() const {
        if (num_ == 0) throw std::domain_error("inverse of zero rational");
        return Rat(den_, num_);
    }

    // Integer power with negative exponents allowed for nonzero base.
    Rat pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        Rat base = *this;
        Rat acc(1);
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    std::string str() const {
        if (den_ == 1) return i128_to_string(num_);
        return i128_to_string(num_) + "/" + i128_to_string(den_);
    }

private:
    struct already_normal {};
    Rat(i128 n, i128 d, already_normal) : num_(n), den_(d) {}

    void normalize() {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        i128 g = i128_gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    i128 num_;
    i128 den_;
};

} // namespace ckq
