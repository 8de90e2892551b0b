#pragma once

// Minimal dense matrix over an arbitrary commutative-ring-like value type.
// Indices are 1-based throughout, matching the natural conventions of
// orthogonal-group index pairs (k, k') with k' = N+1-k.

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace ckq {

template <typename T>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int k) { return a_[idx(i, k)]; }
    const T& operator()(int i, int k) const { return a_[idx(i, k)]; }

    static Mat identity(int n, T one) {
        Mat m(n, n);
        for (int i = 1; i <= n; ++i) m(i, i) = one;
        return m;
    }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (int i = 1; i <= rows_; ++i)
            for (int k = 1; k <= cols_; ++k) r(k, i) = (*this)(i, k);
        return r;
    }

    friend Mat operator*(const Mat& x, const Mat& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("matrix shape mismatch");
        Mat r(x.rows_, y.cols_);
        for (int i = 1; i <= x.rows_; ++i)
            for (int a = 1; a <= x.cols_; ++a) {
                const T& xia = x(i, a);
                for (int k = 1; k <= y.cols_; ++k) r(i, k) += xia * y(a, k);
            }
        return r;
    }

    friend Mat operator+(const Mat& x, const Mat& y) {
        Mat r = x;
        for (size_t t = 0; t < r.a_.size(); ++t) r.a_[t] += y.a_[t];
        return r;
    }
    friend Mat operator-(const Mat& x, const Mat& y) {
        Mat r = x;
        for (size_t t = 0; t < r.a_.size(); ++t) r.a_[t] -= y.a_[t];
        return r;
    }

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    // Kronecker product with 1-based block layout: index (i1,i2) -> (i1-1)*n2 + i2.
    friend Mat kron(const Mat& x, const Mat& y) {
        Mat r(x.rows_ * y.rows_, x.cols_ * y.cols_);
        for (int i1 = 1; i1 <= x.rows_; ++i1)
            for (int k1 = 1; k1 <= x.cols_; ++k1)
                for (int i2 = 1; i2 <= y.rows_; ++i2)
                    for (int k2 = 1; k2 <= y.cols_; ++k2)
                        r((i1 - 1) * y.rows_ + i2, (k1 - 1) * y.cols_ + k2) =
                            x(i1, k1) * y(i2, k2);
        return r;
    }

private:
    size_t idx(int i, int k) const {
        if (i < 1 || i > rows_ || k < 1 || k > cols_)
            throw std::out_of_range("matrix index");
        return static_cast<size_t>(i - 1) * cols_ + (k - 1);
    }

    int rows_;
    int cols_;
    std::vector<T> a_;
};

} // namespace ckq
