#pragma once

#include "golden/rat.hpp"

#include <ostream>
#include <string>

namespace golden {

/**
 * Element of the real quadratic field Q(sqrt5) in the golden-ratio basis:
 * the real number u + v*phi with phi = (1 + sqrt5)/2 and rational u, v.
 *
 * The representation is unique (1 and phi are linearly independent over Q),
 * so equality is componentwise.  Multiplication reduces with phi^2 = phi + 1
 * and every operation is exact.  In this basis the integer powers of phi
 * have Fibonacci coordinates: phi^k = F_k * phi + F_{k-1}.
 */
class GoldenNum {
public:
    GoldenNum() = default;
    GoldenNum(long n) : u_(n) {}
    GoldenNum(const Rat& u) : u_(u) {}
    GoldenNum(const Rat& u, const Rat& v) : u_(u), v_(v) {}

    static GoldenNum phi() { return {Rat(0), Rat(1)}; }
    static GoldenNum sqrt5() { return {Rat(-1), Rat(2)}; }  // sqrt5 = 2*phi - 1

    const Rat& u() const { return u_; }
    const Rat& v() const { return v_; }

    bool is_zero() const { return u_.is_zero() && v_.is_zero(); }
    bool is_rational() const { return v_.is_zero(); }

    friend GoldenNum operator+(const GoldenNum& x, const GoldenNum& y) {
        return {x.u_ + y.u_, x.v_ + y.v_};
    }
    friend GoldenNum operator-(const GoldenNum& x, const GoldenNum& y) {
        return {x.u_ - y.u_, x.v_ - y.v_};
    }
    // (u1 + v1 phi)(u2 + v2 phi) = (u1 u2 + v1 v2) + (u1 v2 + u2 v1 + v1 v2) phi
    friend GoldenNum operator*(const GoldenNum& x, const GoldenNum& y) {
        Rat vv = x.v_ * y.v_;
        return {x.u_ * y.u_ + vv, x.u_ * y.v_ + y.u_ * x.v_ + vv};
    }
    friend GoldenNum operator/(const GoldenNum& x, const GoldenNum& y);
    GoldenNum operator-() const { return {-u_, -v_}; }

    friend bool operator==(const GoldenNum& x, const GoldenNum& y) {
        return x.u_ == y.u_ && x.v_ == y.v_;
    }
    friend bool operator!=(const GoldenNum& x, const GoldenNum& y) { return !(x == y); }

private:
    Rat u_, v_;
};

// The field automorphism sqrt5 -> -sqrt5.  In basis terms
// conj(u + v phi) = (u + v) - v phi, since conj(phi) = 1 - phi.
GoldenNum conj(const GoldenNum& x);

// x * conj(x).  Always rational; zero exactly at x = 0.
Rat norm(const GoldenNum& x);

// Multiplicative inverse, conj(x)/norm(x).  Throws std::domain_error at 0.
GoldenNum inv(const GoldenNum& x);

// Exact phi^k for any integer k, O(log |k|) multiplications.
GoldenNum phi_pow(long k);

// Exact sign of the real number u + v phi, decided with rational arithmetic
// only: when u and v disagree in sign, -u/v is compared against phi through
// the sign of 2(-u/v) - 1 and the comparison of its square with 5.
int sign(const GoldenNum& x);

// Decimal expansion truncated toward zero, with exactly `digits` fractional
// digits (digits >= 1).  The truncation is computed exactly via an integer
// square root, so the printed string is the true expansion cut off.
std::string to_decimal(const GoldenNum& x, long digits);

// Human-readable basis form, e.g. "-3 + 3·φ" or "-1/4 + (1/2)·φ".
std::string to_basis_string(const GoldenNum& x);

std::ostream& operator<<(std::ostream& os, const GoldenNum& x);

}  // namespace golden
