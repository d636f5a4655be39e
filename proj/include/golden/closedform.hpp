#pragma once

#include "golden/products.hpp"
#include "golden/quadfield.hpp"

namespace golden {

enum class Derivation { fib_telescoping, lucas_telescoping, lucas_constant };

struct ClosedForm {
    GoldenNum value;
    long valid_from = 1;  // smallest admissible start index for this (a, b)
    Derivation derivation = Derivation::fib_telescoping;
};

// Exact value of  prod_{n >= start} (1 + F_b / F_{a 2^n + b}):
//   (1 - (-1)^b phi^{-K-2b}) / (1 - phi^{-K})   with K = a 2^start.
// The telescoping needs (-1)^{2^n a + b} = (-1)^b for all n >= start, i.e.
// 2^start a even; start = 0 with odd a is rejected (use the _from_zero
// variant, which peels the n = 0 factor off as an exact rational).
ClosedForm fib_closed(long a, long b, long start);

// Lucas analogue:  (1 + (-1)^b phi^{-K-2b}) / (1 - phi^{-K}).
ClosedForm lucas_closed(long a, long b, long start);

// Full product from n = 0: the exact rational factor 1 + W_b / W_{a+b}
// times the closed form from n = 1.
ClosedForm fib_closed_from_zero(long a, long b);
ClosedForm lucas_closed_from_zero(long a, long b);

// Stored algebraic constants for  prod_{n >= 1} (1 + c / L_{2^n}):
// sqrt5/4 for c = -1 and sqrt5 for c = 2 (the root-of-unity cases).
// Other c are rejected.
ClosedForm lucas_unity_constant(long c);

// Exact check of the single-factor identity behind the telescoping, with
// m = 2^n a (n >= 1):
//   Fibonacci: 1 + F_b/F_{m+b} = (1+phi^{-m}) (1-(-1)^b phi^{-m-2b}) / (1-(-1)^b phi^{-2m-2b})
//   Lucas:     same with both interior signs flipped to +(-1)^b.
bool per_factor_identity_check(long a, long b, long n, Family family);

// Exact rational check of the finite doubling identity
//   prod_{n=1}^{N} (1 + x^{2^n}) = (1 - x^{2^{N+1}}) / (1 - x^2),  x != +-1.
bool finite_telescope_check(const Rat& x, long N);

}  // namespace golden
