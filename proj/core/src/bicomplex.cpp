#include "bcbessel/bicomplex.hpp"

#include <cmath>
#include <ostream>

namespace bcbessel {

HOrder compare_h(Hyperbolic a, Hyperbolic b) {
    if (a.a1 < b.a1 && a.a2 < b.a2) return HOrder::less;
    if (a.a1 <= b.a1 && a.a2 <= b.a2) return HOrder::less_or_equal;
    if (a.a1 > b.a1 && a.a2 > b.a2) return HOrder::greater;
    if (a.a1 >= b.a1 && a.a2 >= b.a2) return HOrder::greater_or_equal;
    return HOrder::incomparable;
}

const char* to_string(HOrder o) {
    switch (o) {
    case HOrder::less: return "LESS";
    case HOrder::less_or_equal: return "LESS-OR-EQUAL";
    case HOrder::greater: return "GREATER";
    case HOrder::greater_or_equal: return "GREATER-OR-EQUAL";
    case HOrder::incomparable: return "INCOMPARABLE";
    }
    return "?";
}

Bicomplex& Bicomplex::operator/=(const Bicomplex& b) {
    if (!b.is_invertible()) throw ZeroDivisorError("division by a zero divisor or zero");
    z1_ /= b.z1_;
    z2_ /= b.z2_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Bicomplex& z) {
    return os << '(' << z.z1() << ", " << z.z2() << ')';
}

std::ostream& operator<<(std::ostream& os, Hyperbolic h) {
    return os << '(' << h.a1 << ", " << h.a2 << ')';
}

bool approx_equal(const Bicomplex& a, const Bicomplex& b, double eps) {
    return lt_h(abs_h(a - b), Hyperbolic{eps});
}

namespace {

bool is_integer(cplx v) {
    return v.imag() == 0.0 && std::isfinite(v.real()) && std::floor(v.real()) == v.real();
}

cplx ipow(cplx z, long long n) {
    if (n < 0) return 1.0 / ipow(z, -n);
    cplx r{1.0};
    while (n) {
        if (n & 1) r *= z;
        z *= z;
        n >>= 1;
    }
    return r;
}

}  // namespace

cplx cpow(cplx z, cplx v) {
    if (v == cplx{}) return 1.0;
    if (z == cplx{}) {
        if (v.real() > 0.0) return 0.0;
        throw ZeroDivisorError("0 raised to an exponent with nonpositive real part");
    }
    if (is_integer(v) && std::abs(v.real()) < 1 << 20) return ipow(z, static_cast<long long>(v.real()));
    if (z.imag() == 0.0 && z.real() < 0.0)
        throw BranchError("nonpositive real base with non-integer exponent");
    return std::exp(v * std::log(z));
}

Bicomplex pow(const Bicomplex& z, const Bicomplex& v) {
    return {cpow(z.z1(), v.z1()), cpow(z.z2(), v.z2())};
}

Bicomplex pow(const Bicomplex& z, int n) {
    if (n < 0 && !z.is_invertible()) throw ZeroDivisorError("negative power of a zero divisor");
    return {ipow(z.z1(), n), ipow(z.z2(), n)};
}

Bicomplex exp(const Bicomplex& z) { return {std::exp(z.z1()), std::exp(z.z2())}; }

Bicomplex log(const Bicomplex& z) {
    if (!z.is_invertible()) throw ZeroDivisorError("logarithm of a zero divisor");
    return {std::log(z.z1()), std::log(z.z2())};
}

Bicomplex sqrt(const Bicomplex& z) { return {std::sqrt(z.z1()), std::sqrt(z.z2())}; }
Bicomplex cos(const Bicomplex& z) { return {std::cos(z.z1()), std::cos(z.z2())}; }
Bicomplex sin(const Bicomplex& z) { return {std::sin(z.z1()), std::sin(z.z2())}; }

}  // namespace bcbessel
