#include "golden/fiblucas.hpp"

#include "golden/quadfield.hpp"

#include <bit>
#include <utility>

namespace golden {

std::pair<Int, Int> fib_pair(unsigned long k) {
    Int a = 0, b = 1;  // (F_0, F_1)
    if (k == 0) return {a, b};
    for (int i = std::bit_width(k) - 1; i >= 0; --i) {
        // (F_j, F_{j+1}) -> (F_{2j}, F_{2j+1})
        Int c = a * (2 * b - a);
        Int d = a * a + b * b;
        if ((k >> i) & 1UL) {
            b = c + d;
            a = std::move(d);
        } else {
            a = std::move(c);
            b = std::move(d);
        }
    }
    return {a, b};
}

Int fib(long k) {
    if (k >= 0) return fib_pair(static_cast<unsigned long>(k)).first;
    unsigned long n = static_cast<unsigned long>(-(k + 1)) + 1;
    Int f = fib_pair(n).first;
    return n % 2 == 0 ? Int(-f) : f;  // F_{-n} = (-1)^{n+1} F_n
}

Int lucas(unsigned long k) {
    auto [fk, fk1] = fib_pair(k);
    return 2 * fk1 - fk;
}

namespace {

// L_{-n} = (-1)^n L_n
Int lucas_ext(long k) {
    if (k >= 0) return lucas(static_cast<unsigned long>(k));
    unsigned long n = static_cast<unsigned long>(-(k + 1)) + 1;
    Int l = lucas(n);
    return n % 2 == 0 ? l : Int(-l);
}

}  // namespace

bool binet_check(long k) {
    GoldenNum phi = GoldenNum::phi();
    GoldenNum pk = phi_pow(k);
    GoldenNum pmk = phi_pow(-k);
    bool even = k % 2 == 0;
    GoldenNum alt = even ? pmk : -pmk;  // (-phi^{-1})^k = (-1)^k phi^{-k}

    GoldenNum fib_lhs = (phi + inv(phi)) * GoldenNum(Rat(fib(k)));
    if (fib_lhs != pk - alt) return false;
    return GoldenNum(Rat(lucas_ext(k))) == pk + alt;
}

}  // namespace golden
