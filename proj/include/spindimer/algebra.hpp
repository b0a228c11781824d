#pragma once
#include <array>
#include <complex>

#include "spindimer/errors.hpp"

// Minimal dense complex linear algebra for the 2- and 4-dimensional spaces
// this project lives in. Everything is a stack value type.
//
// Frozen basis contract (referenced by every other module):
//   4-dim basis order is {|++>, |+->, |-+>, |-->}, i.e. slot 0 = |++>,
//   slot 1 = |+->, slot 2 = |-+>, slot 3 = |-->, where the first label is
//   spin 1 and the second is spin 2. Matrices are row-major in this order.

namespace spindimer {

using cplx = std::complex<double>;

struct CMat2 {
    std::array<cplx, 4> e{};
    cplx& operator()(int r, int c) { return e[2 * r + c]; }
    const cplx& operator()(int r, int c) const { return e[2 * r + c]; }
    static CMat2 identity();
    static CMat2 zero() { return {}; }
};

struct CMat4 {
    std::array<cplx, 16> e{};
    cplx& operator()(int r, int c) { return e[4 * r + c]; }
    const cplx& operator()(int r, int c) const { return e[4 * r + c]; }
    static CMat4 identity();
    static CMat4 zero() { return {}; }
};

struct StateVec2 {
    std::array<cplx, 2> a{};
};

struct StateVec4 {
    std::array<cplx, 4> a{};
};

CMat2 operator+(const CMat2& x, const CMat2& y);
CMat2 operator-(const CMat2& x, const CMat2& y);
CMat2 operator*(const CMat2& x, const CMat2& y);
CMat2 operator*(cplx s, const CMat2& x);
CMat4 operator+(const CMat4& x, const CMat4& y);
CMat4 operator-(const CMat4& x, const CMat4& y);
CMat4 operator*(const CMat4& x, const CMat4& y);
CMat4 operator*(cplx s, const CMat4& x);

CMat2 adjoint(const CMat2& m);
CMat4 adjoint(const CMat4& m);

// largest entry magnitude
double max_abs(const CMat2& m);
double max_abs(const CMat4& m);
double max_abs_diff(const CMat2& x, const CMat2& y);
double max_abs_diff(const CMat4& x, const CMat4& y);

StateVec2 apply(const CMat2& m, const StateVec2& v);
StateVec4 apply(const CMat4& m, const StateVec4& v);

cplx inner(const StateVec2& x, const StateVec2& y); // <x|y>
cplx inner(const StateVec4& x, const StateVec4& y);
double norm(const StateVec2& v);
double norm(const StateVec4& v);
StateVec4 normalized(const StateVec4& v);

enum class Axis { x, y, z };

// single-spin Pauli matrix
CMat2 pauli2(Axis axis);

// Pauli operator on the named site (1 or 2) tensored with identity on the other
CMat4 pauli(Axis axis, int site);

// tensor product; kron(a, b) acts as a on spin 1 and b on spin 2
CMat4 kron(const CMat2& a, const CMat2& b);

bool is_unitary(const CMat2& m, double tol);
bool is_unitary(const CMat4& m, double tol);

// <state|obs|state> for Hermitian obs; throws NonHermitian if max|obs - obs^dag|
// entry exceeds 1e-12. The (rounding-level) imaginary part is discarded.
double expectation(const StateVec4& state, const CMat4& obs);

} // namespace spindimer
