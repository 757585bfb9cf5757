// mat2.hpp — 2x2 complex matrices with value semantics.
//
// Everything the Lax-pair side of the library touches is 2x2, so a tiny
// fixed-size type beats a general matrix library here.  Entries are stored
// row-major: a(0,0)=a11, a(0,1)=a12, a(1,0)=a21, a(1,1)=a22.

#pragma once

#include <array>
#include <complex>

namespace nmkdv {

using Complex = std::complex<double>;

struct Mat2 {
    std::array<Complex, 4> e{};  // {a11, a12, a21, a22}

    constexpr Complex& operator()(int r, int c) { return e[2 * r + c]; }
    constexpr const Complex& operator()(int r, int c) const { return e[2 * r + c]; }

    static constexpr Mat2 identity() { return Mat2{{Complex(1), Complex(0), Complex(0), Complex(1)}}; }
    static constexpr Mat2 zero() { return Mat2{}; }

    friend Mat2 operator+(const Mat2& a, const Mat2& b) {
        return Mat2{{a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2], a.e[3] + b.e[3]}};
    }
    friend Mat2 operator-(const Mat2& a, const Mat2& b) {
        return Mat2{{a.e[0] - b.e[0], a.e[1] - b.e[1], a.e[2] - b.e[2], a.e[3] - b.e[3]}};
    }
    friend Mat2 operator*(const Mat2& a, const Mat2& b) {
        return Mat2{{a.e[0] * b.e[0] + a.e[1] * b.e[2], a.e[0] * b.e[1] + a.e[1] * b.e[3],
                     a.e[2] * b.e[0] + a.e[3] * b.e[2], a.e[2] * b.e[1] + a.e[3] * b.e[3]}};
    }
    friend Mat2 operator*(Complex s, const Mat2& a) {
        return Mat2{{s * a.e[0], s * a.e[1], s * a.e[2], s * a.e[3]}};
    }
    friend Mat2 operator*(const Mat2& a, Complex s) { return s * a; }

    Mat2& operator+=(const Mat2& b) { return *this = *this + b; }
    Mat2& operator-=(const Mat2& b) { return *this = *this - b; }

    Complex det() const { return e[0] * e[3] - e[1] * e[2]; }
    Complex trace() const { return e[0] + e[3]; }

    // adj(A) satisfies A * adj(A) = det(A) * I.
    Mat2 adjugate() const { return Mat2{{e[3], -e[1], -e[2], e[0]}}; }

    Mat2 inverse() const {
        const Complex d = det();
        return (Complex(1.0) / d) * adjugate();
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& v : e) m = std::max(m, std::abs(v));
        return m;
    }
};

inline Mat2 pauli1() { return Mat2{{Complex(0), Complex(1), Complex(1), Complex(0)}}; }
inline Mat2 pauli2() { return Mat2{{Complex(0), Complex(0, -1), Complex(0, 1), Complex(0)}}; }
inline Mat2 pauli3() { return Mat2{{Complex(1), Complex(0), Complex(0), Complex(-1)}}; }

// Frobenius-style max-entry distance, handy in tests and diagnostics.
inline double max_entry_diff(const Mat2& a, const Mat2& b) { return (a - b).max_abs(); }

}  // namespace nmkdv
