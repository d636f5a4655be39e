#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace golden {

// Arbitrary-precision integer.
using Int = mpz_class;

// floor(sqrt(n)) for n >= 0.
inline Int isqrt(const Int& n) {
    if (sgn(n) < 0) throw std::domain_error("isqrt of a negative integer");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline Int pow10(unsigned long k) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
    return r;
}

inline Int ipow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/**
 * Exact rational number, always in lowest terms with a positive denominator.
 * Equality is therefore structural.  Division by zero throws
 * std::domain_error.
 */
class Rat {
public:
    Rat() : q_(0) {}
    Rat(int n) : q_(n) {}
    Rat(long n) : q_(n) {}
    Rat(const Int& n) : q_(n) {}
    Rat(const Int& num, const Int& den) : q_(num, den) {
        if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
        q_.canonicalize();
    }
    Rat(long num, long den) : Rat(Int(num), Int(den)) {}

    Int num() const { return q_.get_num(); }
    Int den() const { return q_.get_den(); }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rat abs() const { return sign() < 0 ? Rat(mpq_class(-q_)) : *this; }

    Rat reciprocal() const {
        if (is_zero()) throw std::domain_error("reciprocal of zero");
        Rat r;
        mpq_inv(r.q_.get_mpq_t(), q_.get_mpq_t());
        return r;
    }

    // "p/q", or just "p" when the denominator is 1.
    std::string str() const { return q_.get_str(); }

    friend Rat operator+(const Rat& x, const Rat& y) { return Rat(mpq_class(x.q_ + y.q_)); }
    friend Rat operator-(const Rat& x, const Rat& y) { return Rat(mpq_class(x.q_ - y.q_)); }
    friend Rat operator*(const Rat& x, const Rat& y) { return Rat(mpq_class(x.q_ * y.q_)); }
    friend Rat operator/(const Rat& x, const Rat& y) {
        if (y.is_zero()) throw std::domain_error("division by zero");
        return Rat(mpq_class(x.q_ / y.q_));
    }
    Rat operator-() const { return Rat(mpq_class(-q_)); }

    Rat& operator+=(const Rat& y) { q_ += y.q_; return *this; }
    Rat& operator-=(const Rat& y) { q_ -= y.q_; return *this; }
    Rat& operator*=(const Rat& y) { q_ *= y.q_; return *this; }
    Rat& operator/=(const Rat& y) {
        if (y.is_zero()) throw std::domain_error("division by zero");
        q_ /= y.q_;
        return *this;
    }

    friend bool operator==(const Rat& x, const Rat& y) { return x.q_ == y.q_; }
    friend bool operator!=(const Rat& x, const Rat& y) { return !(x == y); }
    friend bool operator<(const Rat& x, const Rat& y) { return x.q_ < y.q_; }
    friend bool operator<=(const Rat& x, const Rat& y) { return x.q_ <= y.q_; }
    friend bool operator>(const Rat& x, const Rat& y) { return x.q_ > y.q_; }
    friend bool operator>=(const Rat& x, const Rat& y) { return x.q_ >= y.q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rat& x) { return os << x.q_; }

private:
    explicit Rat(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

}  // namespace golden
