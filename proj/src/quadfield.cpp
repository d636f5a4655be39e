#include "golden/quadfield.hpp"

#include <stdexcept>

namespace golden {

GoldenNum operator/(const GoldenNum& x, const GoldenNum& y) {
    return x * inv(y);
}

GoldenNum conj(const GoldenNum& x) {
    return {x.u() + x.v(), -x.v()};
}

Rat norm(const GoldenNum& x) {
    // (u + v phi)((u + v) - v phi) = u^2 + uv - v^2
    return x.u() * x.u() + x.u() * x.v() - x.v() * x.v();
}

GoldenNum inv(const GoldenNum& x) {
    Rat n = norm(x);
    if (n.is_zero()) throw std::domain_error("division by zero in Q(sqrt5)");
    GoldenNum c = conj(x);
    return {c.u() / n, c.v() / n};
}

GoldenNum phi_pow(long k) {
    GoldenNum base = k >= 0 ? GoldenNum::phi() : inv(GoldenNum::phi());  // phi^-1 = phi - 1
    unsigned long e = k >= 0 ? static_cast<unsigned long>(k)
                             : static_cast<unsigned long>(-(k + 1)) + 1;
    GoldenNum acc(1);
    while (e != 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e != 0) base = base * base;
    }
    return acc;
}

int sign(const GoldenNum& x) {
    int su = x.u().sign();
    int sv = x.v().sign();
    if (sv == 0) return su;
    if (su == 0) return sv;
    if (su == sv) return su;
    // Mixed signs: x = v (phi - t) with t = -u/v > 0.  Compare phi with t
    // through s = 2t - 1 against sqrt5: phi > t iff s < 0 or s^2 < 5.
    // s^2 = 5 cannot happen for rational s.
    Rat t = -x.u() / x.v();
    Rat s = Rat(2) * t - Rat(1);
    int phi_minus_t;
    if (s.sign() < 0) {
        phi_minus_t = 1;
    } else {
        phi_minus_t = s * s < Rat(5) ? 1 : -1;
    }
    return sv > 0 ? phi_minus_t : -phi_minus_t;
}

std::string to_decimal(const GoldenNum& x, long digits) {
    if (digits < 1) throw std::invalid_argument("to_decimal needs digits >= 1");
    int sgn_x = sign(x);
    GoldenNum y = sgn_x < 0 ? -x : x;

    // y 10^d = (P + Q sqrt5) / D with integers P, Q and D > 0, from
    // y = (u + v/2) + (v/2) sqrt5.
    Int scale = pow10(static_cast<unsigned long>(digits));
    Rat a = (y.u() + y.v() / Rat(2)) * Rat(scale);
    Rat b = (y.v() / Rat(2)) * Rat(scale);
    Int D = a.den() * b.den();
    Int P = a.num() * b.den();
    Int Q = b.num() * a.den();

    // floor(P + Q sqrt5): Q sqrt5 is irrational for Q != 0, so its floor is
    // exactly +-isqrt(5 Q^2) (minus one more on the negative side).
    Int f;
    if (sgn(Q) == 0) {
        f = P;
    } else if (sgn(Q) > 0) {
        f = P + isqrt(5 * Q * Q);
    } else {
        f = P - isqrt(5 * Q * Q) - 1;
    }

    // floor(real/D) = floor(floor(real)/D) for integer D > 0; y >= 0 makes
    // this the truncation toward zero of |x| 10^d.
    Int n;
    mpz_fdiv_q(n.get_mpz_t(), f.get_mpz_t(), D.get_mpz_t());

    Int ip = n / scale;
    Int fp = n % scale;
    std::string frac = fp.get_str();
    frac.insert(0, static_cast<size_t>(digits) - frac.size(), '0');
    std::string out;
    if (sgn_x < 0 && sgn(n) != 0) out += '-';
    out += ip.get_str();
    out += '.';
    out += frac;
    return out;
}

std::string to_basis_string(const GoldenNum& x) {
    std::string s = x.u().str();
    Rat av = x.v().abs();
    s += x.v().sign() < 0 ? " - " : " + ";
    s += av.is_integer() ? av.str() : "(" + av.str() + ")";
    s += "·φ";  // "·φ"
    return s;
}

std::ostream& operator<<(std::ostream& os, const GoldenNum& x) {
    return os << to_basis_string(x);
}

}  // namespace golden
