#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace mdslab {

using cplx = std::complex<double>;

inline constexpr cplx iu{0.0, 1.0};

/// Complex square root on the branch with Im >= 0; a purely real
/// non-negative radicand maps to the non-negative real root.
inline cplx sqrt_upper(cplx z) {
    cplx s = std::sqrt(z);
    if (s.imag() < 0.0) s = -s;
    return s;
}

/// Dense 3x3 complex matrix, row-major. Value type, no allocation.
struct Mat3 {
    std::array<cplx, 9> a{};

    cplx& operator()(int r, int c) { return a[static_cast<std::size_t>(3 * r + c)]; }
    const cplx& operator()(int r, int c) const { return a[static_cast<std::size_t>(3 * r + c)]; }

    static Mat3 identity() {
        Mat3 m;
        m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
        return m;
    }

    static Mat3 diagonal(cplx x, cplx y, cplx z) {
        Mat3 m;
        m(0, 0) = x;
        m(1, 1) = y;
        m(2, 2) = z;
        return m;
    }

    Mat3 adjoint() const {
        Mat3 m;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) m(r, c) = std::conj((*this)(c, r));
        return m;
    }

    friend Mat3 operator*(const Mat3& lhs, const Mat3& rhs) {
        Mat3 m;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                cplx s = 0.0;
                for (int k = 0; k < 3; ++k) s += lhs(r, k) * rhs(k, c);
                m(r, c) = s;
            }
        return m;
    }

    friend Mat3 operator*(cplx s, const Mat3& rhs) {
        Mat3 m = rhs;
        for (auto& v : m.a) v *= s;
        return m;
    }

    friend Mat3 operator+(const Mat3& lhs, const Mat3& rhs) {
        Mat3 m;
        for (std::size_t i = 0; i < 9; ++i) m.a[i] = lhs.a[i] + rhs.a[i];
        return m;
    }

    friend Mat3 operator-(const Mat3& lhs, const Mat3& rhs) {
        Mat3 m;
        for (std::size_t i = 0; i < 9; ++i) m.a[i] = lhs.a[i] - rhs.a[i];
        return m;
    }

    Mat3 operator-() const {
        Mat3 m = *this;
        for (auto& v : m.a) v = -v;
        return m;
    }

    cplx det() const {
        const Mat3& m = *this;
        return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
               m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
               m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    }

    Mat3 inverse() const {
        const Mat3& m = *this;
        const cplx d = det();
        Mat3 r;
        r(0, 0) = (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) / d;
        r(0, 1) = (m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2)) / d;
        r(0, 2) = (m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1)) / d;
        r(1, 0) = (m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2)) / d;
        r(1, 1) = (m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0)) / d;
        r(1, 2) = (m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2)) / d;
        r(2, 0) = (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0)) / d;
        r(2, 1) = (m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1)) / d;
        r(2, 2) = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) / d;
        return r;
    }
};

inline double max_abs(const Mat3& m) {
    double v = 0.0;
    for (const auto& x : m.a) v = std::max(v, std::abs(x));
    return v;
}

inline double max_abs_diff(const Mat3& lhs, const Mat3& rhs) { return max_abs(lhs - rhs); }

/// 2x2 complex matrix for the interface/propagation composition.
struct Mat2 {
    std::array<cplx, 4> a{};

    cplx& operator()(int r, int c) { return a[static_cast<std::size_t>(2 * r + c)]; }
    const cplx& operator()(int r, int c) const { return a[static_cast<std::size_t>(2 * r + c)]; }

    friend Mat2 operator*(const Mat2& lhs, const Mat2& rhs) {
        Mat2 m;
        m(0, 0) = lhs(0, 0) * rhs(0, 0) + lhs(0, 1) * rhs(1, 0);
        m(0, 1) = lhs(0, 0) * rhs(0, 1) + lhs(0, 1) * rhs(1, 1);
        m(1, 0) = lhs(1, 0) * rhs(0, 0) + lhs(1, 1) * rhs(1, 0);
        m(1, 1) = lhs(1, 0) * rhs(0, 1) + lhs(1, 1) * rhs(1, 1);
        return m;
    }

    cplx det() const { return a[0] * a[3] - a[1] * a[2]; }
};

}  // namespace mdslab
