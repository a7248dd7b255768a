#pragma once

#include "sl22/numkit/complex.hpp"

#include <optional>
#include <vector>

namespace sl22 {

// Dense row-major complex matrix.
template <class R>
struct CMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<PrecComplex<R>> data;

    CMatrix() = default;
    CMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c) {}
    static CMatrix identity(int n) {
        CMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = PrecComplex<R>(1);
        return m;
    }
    PrecComplex<R>& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
    const PrecComplex<R>& operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }
};

template <class R>
CMatrix<R> matmul(const CMatrix<R>& a, const CMatrix<R>& b);

template <class R>
R max_abs_entry(const CMatrix<R>& a);

// Inverse by Gauss-Jordan with partial pivoting; nullopt when a pivot vanishes.
template <class R>
std::optional<CMatrix<R>> inverse(const CMatrix<R>& a);

// Infinity-norm condition number; +inf for singular input.
template <class R>
double condition_estimate(const CMatrix<R>& a);

}  // namespace sl22
