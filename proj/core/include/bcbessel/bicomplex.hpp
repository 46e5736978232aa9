#pragma once

#include <complex>
#include <iosfwd>

#include "bcbessel/errors.hpp"

namespace bcbessel {

using cplx = std::complex<double>;

// Hyperbolic number a1*e1 + a2*e2 with real coefficients.
struct Hyperbolic {
    double a1 = 0.0;
    double a2 = 0.0;

    constexpr Hyperbolic() = default;
    constexpr Hyperbolic(double x) : a1(x), a2(x) {}
    constexpr Hyperbolic(double x1, double x2) : a1(x1), a2(x2) {}

    constexpr bool in_d_plus() const { return a1 >= 0.0 && a2 >= 0.0; }
    constexpr bool in_d_minus() const { return a1 <= 0.0 && a2 <= 0.0; }
    constexpr double max() const { return a1 > a2 ? a1 : a2; }

    friend constexpr Hyperbolic operator+(Hyperbolic a, Hyperbolic b) { return {a.a1 + b.a1, a.a2 + b.a2}; }
    friend constexpr Hyperbolic operator-(Hyperbolic a, Hyperbolic b) { return {a.a1 - b.a1, a.a2 - b.a2}; }
    friend constexpr Hyperbolic operator*(Hyperbolic a, Hyperbolic b) { return {a.a1 * b.a1, a.a2 * b.a2}; }
    friend constexpr Hyperbolic operator-(Hyperbolic a) { return {-a.a1, -a.a2}; }
    friend constexpr bool operator==(Hyperbolic a, Hyperbolic b) = default;
};

enum class HOrder { less, less_or_equal, greater, greater_or_equal, incomparable };

// Componentwise partial order on D. Equal arguments report less_or_equal.
HOrder compare_h(Hyperbolic a, Hyperbolic b);
constexpr bool leq_h(Hyperbolic a, Hyperbolic b) { return a.a1 <= b.a1 && a.a2 <= b.a2; }
constexpr bool lt_h(Hyperbolic a, Hyperbolic b) { return a.a1 < b.a1 && a.a2 < b.a2; }
const char* to_string(HOrder o);

// Bicomplex number stored in idempotent form z1*e1 + z2*e2.
class Bicomplex {
public:
    constexpr Bicomplex() = default;
    constexpr Bicomplex(double x) : z1_(x), z2_(x) {}
    constexpr Bicomplex(cplx z) : z1_(z), z2_(z) {}
    constexpr Bicomplex(cplx z1, cplx z2) : z1_(z1), z2_(z2) {}
    constexpr Bicomplex(Hyperbolic h) : z1_(h.a1), z2_(h.a2) {}

    // Z = lambda1 + j*lambda2.
    static constexpr Bicomplex from_canonical(cplx lambda1, cplx lambda2) {
        const cplx il2{-lambda2.imag(), lambda2.real()};
        return {lambda1 - il2, lambda1 + il2};
    }
    static constexpr Bicomplex e1() { return {cplx{1.0}, cplx{0.0}}; }
    static constexpr Bicomplex e2() { return {cplx{0.0}, cplx{1.0}}; }
    static constexpr Bicomplex i() { return {cplx{0.0, 1.0}, cplx{0.0, 1.0}}; }
    static constexpr Bicomplex j() { return {cplx{0.0, -1.0}, cplx{0.0, 1.0}}; }
    static constexpr Bicomplex k() { return {cplx{1.0}, cplx{-1.0}}; }

    constexpr cplx z1() const { return z1_; }
    constexpr cplx z2() const { return z2_; }
    constexpr cplx operator[](int l) const { return l == 0 ? z1_ : z2_; }

    cplx lambda1() const { return 0.5 * (z1_ + z2_); }
    cplx lambda2() const { return cplx{0.0, 0.5} * (z1_ - z2_); }

    // The three conjugations: conj(l1) + j conj(l2), l1 - j l2, conj(l1) - j conj(l2).
    constexpr Bicomplex bar() const { return {std::conj(z2_), std::conj(z1_)}; }
    constexpr Bicomplex tilde() const { return {z2_, z1_}; }
    constexpr Bicomplex star() const { return {std::conj(z1_), std::conj(z2_)}; }

    constexpr bool is_zero() const { return z1_ == cplx{} && z2_ == cplx{}; }
    constexpr bool is_zero_divisor() const { return (z1_ == cplx{}) != (z2_ == cplx{}); }
    constexpr bool is_invertible() const { return z1_ != cplx{} && z2_ != cplx{}; }
    constexpr bool is_hyperbolic() const { return z1_.imag() == 0.0 && z2_.imag() == 0.0; }
    constexpr bool is_real() const { return is_hyperbolic() && z1_.real() == z2_.real(); }

    Hyperbolic abs_h() const { return {std::abs(z1_), std::abs(z2_)}; }
    Hyperbolic real_h() const { return {z1_.real(), z2_.real()}; }

    constexpr Bicomplex& operator+=(const Bicomplex& b) { z1_ += b.z1_; z2_ += b.z2_; return *this; }
    constexpr Bicomplex& operator-=(const Bicomplex& b) { z1_ -= b.z1_; z2_ -= b.z2_; return *this; }
    constexpr Bicomplex& operator*=(const Bicomplex& b) { z1_ *= b.z1_; z2_ *= b.z2_; return *this; }
    Bicomplex& operator/=(const Bicomplex& b);

    friend constexpr Bicomplex operator+(Bicomplex a, const Bicomplex& b) { return a += b; }
    friend constexpr Bicomplex operator-(Bicomplex a, const Bicomplex& b) { return a -= b; }
    friend constexpr Bicomplex operator*(Bicomplex a, const Bicomplex& b) { return a *= b; }
    friend Bicomplex operator/(Bicomplex a, const Bicomplex& b) { return a /= b; }
    friend constexpr Bicomplex operator-(const Bicomplex& a) { return {-a.z1_, -a.z2_}; }
    friend constexpr bool operator==(const Bicomplex& a, const Bicomplex& b) = default;

private:
    cplx z1_{};
    cplx z2_{};
};

std::ostream& operator<<(std::ostream& os, const Bicomplex& z);
std::ostream& operator<<(std::ostream& os, Hyperbolic h);

inline Hyperbolic abs_h(const Bicomplex& z) { return z.abs_h(); }
inline double max_abs(const Bicomplex& z) { return z.abs_h().max(); }

// Tolerance equality: |a - b|_h <_h (eps, eps).
bool approx_equal(const Bicomplex& a, const Bicomplex& b, double eps);

// Componentwise principal power; see the error contract in the implementation.
Bicomplex pow(const Bicomplex& z, const Bicomplex& v);
Bicomplex pow(const Bicomplex& z, int n);
Bicomplex exp(const Bicomplex& z);
Bicomplex log(const Bicomplex& z);
Bicomplex sqrt(const Bicomplex& z);
Bicomplex cos(const Bicomplex& z);
Bicomplex sin(const Bicomplex& z);

// Complex principal power with the library's zero/branch conventions.
cplx cpow(cplx z, cplx v);

}  // namespace bcbessel
