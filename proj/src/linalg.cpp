#include "adic/linalg.hpp"

namespace adic {

Mat<BigRational> inverse(const Mat<BigRational>& m) {
    if (m.rows != m.cols) throw Error("inverse of non-square matrix");
    int n = m.rows;
    Mat<BigRational> a = m;
    Mat<BigRational> inv = Mat<BigRational>::identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (a.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw SingularMatrixError("singular matrix");
        if (pivot != col)
            for (int c = 0; c < n; ++c) {
                std::swap(a.at(pivot, c), a.at(col, c));
                std::swap(inv.at(pivot, c), inv.at(col, c));
            }
        BigRational p = a.at(col, col);
        for (int c = 0; c < n; ++c) {
            a.at(col, c) /= p;
            inv.at(col, c) /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a.at(r, col) == 0) continue;
            BigRational f = a.at(r, col);
            for (int c = 0; c < n; ++c) {
                a.at(r, c) -= f * a.at(col, c);
                inv.at(r, c) -= f * inv.at(col, c);
            }
        }
    }
    return inv;
}

Scalar sup_norm(const ScalarVec& v) {
    if (v.empty()) throw Error("sup norm of empty vector");
    Scalar best = v[0].abs();
    for (size_t i = 1; i < v.size(); ++i) {
        Scalar c = v[i].abs();
        if (c > best) best = c;
    }
    return best;
}

Scalar frac_sup_norm(const ScalarVec& v) {
    if (v.empty()) throw Error("frac sup norm of empty vector");
    Scalar best = v[0].frac_distance();
    for (size_t i = 1; i < v.size(); ++i) {
        Scalar c = v[i].frac_distance();
        if (c > best) best = c;
    }
    return best;
}

}  // namespace adic
