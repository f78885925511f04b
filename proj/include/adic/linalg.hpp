#pragma once

#include <vector>

#include "adic/errors.hpp"
#include "adic/numbers.hpp"
#include "adic/scalar.hpp"

namespace adic {

/// Dense row-major matrix over an exact scalar type. Levels are tiny
/// (C(n) is bounded for linearly recurrent systems), so no sparsity.
template <class T>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<T> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, T(0)) {}

    T& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const T& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    Mat transposed() const {
        Mat t(cols, rows);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    bool operator==(const Mat& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

template <class T>
Mat<T> operator*(const Mat<T>& x, const Mat<T>& y) {
    if (x.cols != y.rows) throw Error("matrix dimension mismatch");
    Mat<T> z(x.rows, y.cols);
    for (int r = 0; r < x.rows; ++r)
        for (int k = 0; k < x.cols; ++k) {
            const T& xv = x.at(r, k);
            for (int c = 0; c < y.cols; ++c) z.at(r, c) += xv * y.at(k, c);
        }
    return z;
}

template <class T>
std::vector<T> operator*(const Mat<T>& x, const std::vector<T>& v) {
    if (x.cols != static_cast<int>(v.size())) throw Error("matrix/vector dimension mismatch");
    std::vector<T> out(x.rows, T(0));
    for (int r = 0; r < x.rows; ++r)
        for (int c = 0; c < x.cols; ++c) out[r] += x.at(r, c) * v[c];
    return out;
}

template <class T>
T dot(const std::vector<T>& x, const std::vector<T>& y) {
    if (x.size() != y.size()) throw Error("dot dimension mismatch");
    T s(0);
    for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

inline Mat<Scalar> to_scalar(const Mat<BigInt>& m) {
    Mat<Scalar> s(m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i) s.a[i] = Scalar(m.a[i]);
    return s;
}

inline ScalarVec to_scalar(const std::vector<BigInt>& v) {
    ScalarVec s;
    s.reserve(v.size());
    for (const auto& x : v) s.emplace_back(x);
    return s;
}

inline Mat<BigRational> to_rational(const Mat<BigInt>& m) {
    Mat<BigRational> s(m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i) s.a[i] = BigRational(m.a[i]);
    return s;
}

// Gauss-Jordan inverse over exact rationals; throws SingularMatrixError.
Mat<BigRational> inverse(const Mat<BigRational>& m);

// Max-abs (sup) norm of a scalar vector.
Scalar sup_norm(const ScalarVec& v);

// Componentwise distance to the nearest integer, then max.
Scalar frac_sup_norm(const ScalarVec& v);

}  // namespace adic
