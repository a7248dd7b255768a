#include "sl22/numkit/linalg.hpp"

#include <limits>
#include <stdexcept>

namespace sl22 {

template <class R>
CMatrix<R> matmul(const CMatrix<R>& a, const CMatrix<R>& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matmul: shape mismatch");
    CMatrix<R> c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const auto& aik = a(i, k);
            if (aik.re == 0 && aik.im == 0) continue;
            for (int j = 0; j < b.cols; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

template <class R>
R max_abs_entry(const CMatrix<R>& a) {
    R m(0);
    for (const auto& z : a.data) {
        R v = abs(z);
        if (v > m) m = v;
    }
    return m;
}

template <class R>
std::optional<CMatrix<R>> inverse(const CMatrix<R>& a) {
    if (a.rows != a.cols) throw std::invalid_argument("inverse: matrix not square");
    const int n = a.rows;
    CMatrix<R> m = a;
    CMatrix<R> inv = CMatrix<R>::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = col;
        R best = abs(m(col, col));
        for (int r = col + 1; r < n; ++r) {
            R v = abs(m(r, col));
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (best == 0) return std::nullopt;
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(m(piv, j), m(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        PrecComplex<R> d = m(col, col);
        for (int j = 0; j < n; ++j) {
            m(col, j) /= d;
            inv(col, j) /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            PrecComplex<R> f = m(r, col);
            if (f.re == 0 && f.im == 0) continue;
            for (int j = 0; j < n; ++j) {
                m(r, j) -= f * m(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

namespace {

template <class R>
R inf_norm(const CMatrix<R>& a) {
    R best(0);
    for (int i = 0; i < a.rows; ++i) {
        R s(0);
        for (int j = 0; j < a.cols; ++j) s += abs(a(i, j));
        if (s > best) best = s;
    }
    return best;
}

}  // namespace

template <class R>
double condition_estimate(const CMatrix<R>& a) {
    auto inv = inverse(a);
    if (!inv) return std::numeric_limits<double>::infinity();
    return to_double(inf_norm(a) * inf_norm(*inv));
}

#define SL22_INST(R)                                                     \
    template CMatrix<R> matmul(const CMatrix<R>&, const CMatrix<R>&);    \
    template R max_abs_entry(const CMatrix<R>&);                         \
    template std::optional<CMatrix<R>> inverse(const CMatrix<R>&);       \
    template double condition_estimate(const CMatrix<R>&);
SL22_FOR_EACH_REAL(SL22_INST)
#undef SL22_INST

}  // namespace sl22
