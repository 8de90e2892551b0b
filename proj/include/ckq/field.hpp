#pragma once

// Exact coefficient field Q(i, sqrt(2)): complex numbers whose real and
// imaginary parts live in the quadratic extension Q(sqrt(2)).  Every nonzero
// element is invertible, so matrix similarity transforms with 1/sqrt(2)
// prefactors and factors of i stay exact.

#include "ckq/rational.hpp"

#include <complex>
#include <string>

namespace ckq {

// a + b*sqrt(2) with a, b rational.
class QRootTwo {
public:
    QRootTwo() = default;
    QRootTwo(Rat a) : a_(a) {}
    QRootTwo(Rat a, Rat b) : a_(a), b_(b) {}
    QRootTwo(long long n) : a_(Rat(n)) {}

    const Rat& rat_part() const { return a_; }
    const Rat& root_part() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    QRootTwo operator-() const { return {-a_, -b_}; }

    friend QRootTwo operator+(const QRootTwo& x, const QRootTwo& y) {
        return {x.a_ + y.a_, x.b_ + y.b_};
    }
    friend QRootTwo operator-(const QRootTwo& x, const QRootTwo& y) {
        return {x.a_ - y.a_, x.b_ - y.b_};
    }
    friend QRootTwo operator*(const QRootTwo& x, const QRootTwo& y) {
        return {x.a_ * y.a_ + Rat(2) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
    }
    QRootTwo& operator+=(const QRootTwo& o) { return *this = *this + o; }
    QRootTwo& operator-=(const QRootTwo& o) { return *this = *this - o; }
    QRootTwo& operator*=(const QRootTwo& o) { return *this = *this * o; }

    friend bool operator==(const QRootTwo& x, const QRootTwo& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }

    QRootTwo inverse() const {
        // 1/(a + b*sqrt2) = (a - b*sqrt2)/(a^2 - 2 b^2); denominator vanishes
        // only for a = b = 0 because sqrt(2) is irrational.
        Rat norm = a_ * a_ - Rat(2) * b_ * b_;
        if (norm.is_zero()) throw std::domain_error("inverse of zero in Q(sqrt2)");
        Rat inv = norm.inverse();
        return {a_ * inv, -b_ * inv};
    }

    static QRootTwo sqrt2() { return {Rat(0), Rat(1)}; }
    static QRootTwo half_sqrt2() { return {Rat(0), Rat(1, 2)}; }

    double to_double() const { return a_.to_double() + b_.to_double() * 1.4142135623730950488; }

    std::string str() const {
        if (b_.is_zero()) return a_.str();
        std::string s;
        if (!a_.is_zero()) s = a_.str() + "+";
        return s + b_.str() + "*r2";
    }

private:
    Rat a_;
    Rat b_;
};

// re + i*im with re, im in Q(sqrt(2)).
class CRootTwo {
public:
    CRootTwo() = default;
    CRootTwo(QRootTwo re) : re_(re) {}
    CRootTwo(QRootTwo re, QRootTwo im) : re_(re), im_(im) {}
    CRootTwo(Rat r) : re_(r) {}
    CRootTwo(long long n) : re_(Rat(n)) {}

    const QRootTwo& real() const { return re_; }
    const QRootTwo& imag() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    CRootTwo operator-() const { return {-re_, -im_}; }

    friend CRootTwo operator+(const CRootTwo& x, const CRootTwo& y) {
        return {x.re_ + y.re_, x.im_ + y.im_};
    }
    friend CRootTwo operator-(const CRootTwo& x, const CRootTwo& y) {
        return {x.re_ - y.re_, x.im_ - y.im_};
    }
    friend CRootTwo operator*(const CRootTwo& x, const CRootTwo& y) {
        return {x.re_ * y.re_ - x.im_ * y.im_, x.re_ * y.im_ + x.im_ * y.re_};
    }
    CRootTwo& operator+=(const CRootTwo& o) { return *this = *this + o; }
    CRootTwo& operator-=(const CRootTwo& o) { return *this = *this - o; }
    CRootTwo& operator*=(const CRootTwo& o) { return *this = *this * o; }

    friend bool operator==(const CRootTwo& x, const CRootTwo& y) {
        return x.re_ == y.re_ && x.im_ == y.im_;
    }

    CRootTwo conj() const { return {re_, -im_}; }

    CRootTwo inverse() const {
        // Norm re^2 + im^2 lies in Q(sqrt2) and vanishes only at zero
        // (-1 is not a square in the real field Q(sqrt2)).
        QRootTwo norm = re_ * re_ + im_ * im_;
        if (norm.is_zero()) throw std::domain_error("inverse of zero in Q(i,sqrt2)");
        QRootTwo inv = norm.inverse();
        return {re_ * inv, -im_ * inv};
    }

    friend CRootTwo operator/(const CRootTwo& x, const CRootTwo& y) { return x * y.inverse(); }

    static CRootTwo zero() { return {}; }
    static CRootTwo one() { return {QRootTwo(Rat(1))}; }
    static CRootTwo i_unit() { return {QRootTwo(), QRootTwo(Rat(1))}; }
    static CRootTwo sqrt2() { return {QRootTwo::sqrt2()}; }
    static CRootTwo inv_sqrt2() { return {QRootTwo::half_sqrt2()}; }

    std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

    std::string str() const {
        if (im_.is_zero()) return re_.str();
        if (re_.is_zero()) return "(" + im_.str() + ")*i";
        return "(" + re_.str() + ")+(" + im_.str() + ")*i";
    }

private:
    QRootTwo re_;
    QRootTwo im_;
};

inline CRootTwo operator*(const Rat& r, const CRootTwo& c) { return CRootTwo(r) * c; }

} // namespace ckq
