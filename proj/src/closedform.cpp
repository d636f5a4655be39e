#include "golden/closedform.hpp"

#include "golden/fiblucas.hpp"

#include <stdexcept>
#include <string>

namespace golden {

namespace {

void check_ab(long a, long b) {
    if (a < 1) throw std::invalid_argument("closed form requires a >= 1");
    if (b < 0) throw std::invalid_argument("closed form requires b >= 0");
}

// a * 2^start as a machine index, overflow-checked.
long doubling_index(long a, long start) {
    Int k = Int(a) << static_cast<unsigned long>(start);
    if (!k.fits_slong_p()) throw std::overflow_error("a * 2^start does not fit an index");
    return k.get_si();
}

long checked_exponent(const Int& e) {
    if (!e.fits_slong_p()) throw std::overflow_error("phi exponent out of range");
    return e.get_si();
}

// (1 + s phi^{-K-2b}) / (1 - phi^{-K}) with K = a 2^start and
// s = -(-1)^b for Fibonacci, +(-1)^b for Lucas.
GoldenNum telescoped(long a, long b, long start, Family family) {
    long k = doubling_index(a, start);
    int sb = b % 2 == 0 ? 1 : -1;
    int s = family == Family::fibonacci ? -sb : sb;
    GoldenNum inner = phi_pow(checked_exponent(-Int(k) - 2 * Int(b)));
    GoldenNum top = s > 0 ? GoldenNum(1) + inner : GoldenNum(1) - inner;
    GoldenNum bottom = GoldenNum(1) - phi_pow(-k);
    return top * inv(bottom);
}

ClosedForm telescoped_closed(long a, long b, long start, Family family) {
    check_ab(a, b);
    if (start < 0) throw std::invalid_argument("closed form requires start >= 0");
    if (start == 0 && a % 2 != 0) {
        const char* hint = family == Family::fibonacci ? "fib_closed_from_zero"
                                                       : "lucas_closed_from_zero";
        throw std::invalid_argument(
            std::string("telescoping from n = 0 needs 2^n a even for all n, i.e. a even; use ") +
            hint);
    }
    Derivation d = family == Family::fibonacci ? Derivation::fib_telescoping
                                               : Derivation::lucas_telescoping;
    return {telescoped(a, b, start, family), a % 2 == 0 ? 0L : 1L, d};
}

ClosedForm from_zero(long a, long b, Family family) {
    check_ab(a, b);
    ClosedForm tail = telescoped_closed(a, b, 1, family);
    Int w_ab = seq_value(family, static_cast<unsigned long>(a) + static_cast<unsigned long>(b));
    Int w_b = seq_value(family, static_cast<unsigned long>(b));
    tail.value = GoldenNum(Rat(w_ab + w_b, w_ab)) * tail.value;
    tail.valid_from = 0;
    return tail;
}

}  // namespace

ClosedForm fib_closed(long a, long b, long start) {
    return telescoped_closed(a, b, start, Family::fibonacci);
}

ClosedForm lucas_closed(long a, long b, long start) {
    return telescoped_closed(a, b, start, Family::lucas);
}

ClosedForm fib_closed_from_zero(long a, long b) {
    return from_zero(a, b, Family::fibonacci);
}

ClosedForm lucas_closed_from_zero(long a, long b) {
    return from_zero(a, b, Family::lucas);
}

ClosedForm lucas_unity_constant(long c) {
    if (c == -1) return {GoldenNum(Rat(-1, 4), Rat(1, 2)), 1, Derivation::lucas_constant};  // sqrt5/4
    if (c == 2) return {GoldenNum::sqrt5(), 1, Derivation::lucas_constant};
    throw std::invalid_argument("no stored constant for c = " + std::to_string(c) +
                                " (only c = -1 and c = 2 are algebraic here)");
}

bool per_factor_identity_check(long a, long b, long n, Family family) {
    check_ab(a, b);
    if (n < 1) throw std::invalid_argument("per-factor identity needs n >= 1");
    long m = doubling_index(a, n);

    Int w_mb = seq_value(family, static_cast<unsigned long>(m) + static_cast<unsigned long>(b));
    Int w_b = seq_value(family, static_cast<unsigned long>(b));
    GoldenNum lhs{Rat(w_mb + w_b, w_mb)};

    int sb = b % 2 == 0 ? 1 : -1;
    int s = family == Family::fibonacci ? -sb : sb;
    auto signed_one_plus = [&](const Int& e) {
        GoldenNum p = phi_pow(checked_exponent(e));
        return s > 0 ? GoldenNum(1) + p : GoldenNum(1) - p;
    };
    GoldenNum rhs = (GoldenNum(1) + phi_pow(-m)) * signed_one_plus(-Int(m) - 2 * Int(b)) *
                    inv(signed_one_plus(-2 * Int(m) - 2 * Int(b)));
    return lhs == rhs;
}

bool finite_telescope_check(const Rat& x, long N) {
    if (N < 1) throw std::invalid_argument("finite telescope needs N >= 1");
    Rat one(1);
    if (x == one || x == -one) throw std::invalid_argument("x must differ from +-1");

    Rat t = x * x;  // x^{2^n}, starting at n = 1
    Rat lhs = one;
    for (long n = 1; n <= N; ++n) {
        lhs *= one + t;
        t *= t;
    }
    // loop leaves t = x^{2^{N+1}}
    return lhs == (one - t) / (one - x * x);
}

}  // namespace golden
