#include "spindimer/algebra.hpp"

#include <cassert>
#include <cmath>

namespace spindimer {

CMat2 CMat2::identity() {
    CMat2 m;
    m(0, 0) = 1.0;
    m(1, 1) = 1.0;
    return m;
}

CMat4 CMat4::identity() {
    CMat4 m;
    for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
    return m;
}

CMat2 operator+(const CMat2& x, const CMat2& y) {
    CMat2 r;
    for (int i = 0; i < 4; ++i) r.e[i] = x.e[i] + y.e[i];
    return r;
}

CMat2 operator-(const CMat2& x, const CMat2& y) {
    CMat2 r;
    for (int i = 0; i < 4; ++i) r.e[i] = x.e[i] - y.e[i];
    return r;
}

CMat2 operator*(const CMat2& x, const CMat2& y) {
    CMat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r(i, j) = x(i, 0) * y(0, j) + x(i, 1) * y(1, j);
    return r;
}

CMat2 operator*(cplx s, const CMat2& x) {
    CMat2 r;
    for (int i = 0; i < 4; ++i) r.e[i] = s * x.e[i];
    return r;
}

CMat4 operator+(const CMat4& x, const CMat4& y) {
    CMat4 r;
    for (int i = 0; i < 16; ++i) r.e[i] = x.e[i] + y.e[i];
    return r;
}

CMat4 operator-(const CMat4& x, const CMat4& y) {
    CMat4 r;
    for (int i = 0; i < 16; ++i) r.e[i] = x.e[i] - y.e[i];
    return r;
}

CMat4 operator*(const CMat4& x, const CMat4& y) {
    CMat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            cplx s = 0.0;
            for (int k = 0; k < 4; ++k) s += x(i, k) * y(k, j);
            r(i, j) = s;
        }
    return r;
}

CMat4 operator*(cplx s, const CMat4& x) {
    CMat4 r;
    for (int i = 0; i < 16; ++i) r.e[i] = s * x.e[i];
    return r;
}

CMat2 adjoint(const CMat2& m) {
    CMat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = std::conj(m(j, i));
    return r;
}

CMat4 adjoint(const CMat4& m) {
    CMat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = std::conj(m(j, i));
    return r;
}

double max_abs(const CMat2& m) {
    double r = 0.0;
    for (const cplx& z : m.e) r = std::max(r, std::abs(z));
    return r;
}

double max_abs(const CMat4& m) {
    double r = 0.0;
    for (const cplx& z : m.e) r = std::max(r, std::abs(z));
    return r;
}

double max_abs_diff(const CMat2& x, const CMat2& y) { return max_abs(x - y); }
double max_abs_diff(const CMat4& x, const CMat4& y) { return max_abs(x - y); }

StateVec2 apply(const CMat2& m, const StateVec2& v) {
    StateVec2 r;
    for (int i = 0; i < 2; ++i) r.a[i] = m(i, 0) * v.a[0] + m(i, 1) * v.a[1];
    return r;
}

StateVec4 apply(const CMat4& m, const StateVec4& v) {
    StateVec4 r;
    for (int i = 0; i < 4; ++i) {
        cplx s = 0.0;
        for (int j = 0; j < 4; ++j) s += m(i, j) * v.a[j];
        r.a[i] = s;
    }
    return r;
}

cplx inner(const StateVec2& x, const StateVec2& y) {
    return std::conj(x.a[0]) * y.a[0] + std::conj(x.a[1]) * y.a[1];
}

cplx inner(const StateVec4& x, const StateVec4& y) {
    cplx s = 0.0;
    for (int i = 0; i < 4; ++i) s += std::conj(x.a[i]) * y.a[i];
    return s;
}

double norm(const StateVec2& v) { return std::sqrt(std::real(inner(v, v))); }
double norm(const StateVec4& v) { return std::sqrt(std::real(inner(v, v))); }

StateVec4 normalized(const StateVec4& v) {
    double n = norm(v);
    assert(n > 0.0);
    StateVec4 r = v;
    for (cplx& z : r.a) z /= n;
    return r;
}

CMat2 pauli2(Axis axis) {
    CMat2 m;
    switch (axis) {
        case Axis::x:
            m(0, 1) = 1.0;
            m(1, 0) = 1.0;
            break;
        case Axis::y:
            m(0, 1) = cplx(0.0, -1.0);
            m(1, 0) = cplx(0.0, 1.0);
            break;
        case Axis::z:
            m(0, 0) = 1.0;
            m(1, 1) = -1.0;
            break;
    }
    return m;
}

CMat4 kron(const CMat2& a, const CMat2& b) {
    CMat4 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return r;
}

CMat4 pauli(Axis axis, int site) {
    if (site != 1 && site != 2) throw std::invalid_argument("pauli: site must be 1 or 2");
    return site == 1 ? kron(pauli2(axis), CMat2::identity())
                     : kron(CMat2::identity(), pauli2(axis));
}

bool is_unitary(const CMat2& m, double tol) {
    return max_abs_diff(adjoint(m) * m, CMat2::identity()) <= tol;
}

bool is_unitary(const CMat4& m, double tol) {
    return max_abs_diff(adjoint(m) * m, CMat4::identity()) <= tol;
}

double expectation(const StateVec4& state, const CMat4& obs) {
    if (max_abs_diff(obs, adjoint(obs)) > 1e-12)
        throw NonHermitian("expectation: observable is not Hermitian within 1e-12");
    cplx v = inner(state, apply(obs, state));
    assert(std::abs(v.imag()) <= 1e-10);
    return v.real();
}

} // namespace spindimer
