#pragma once

#include "golden/errors.hpp"
#include "golden/rat.hpp"

#include <string>
#include <vector>

namespace golden {

enum class Family { fibonacci, lucas };

const char* family_name(Family family);

// W_k for the chosen family (F_k or L_k).
Int seq_value(Family family, unsigned long k);

/**
 * One infinite product  prod_{n >= start} (1 + c / W_{a r^n + b})  with
 * W = F or L.  The constraints a >= 1, b >= 0, r >= 2 keep every index
 * a r^n + b >= 1, so no factor ever has a zero denominator.
 */
struct ProductSpec {
    Family family = Family::fibonacci;
    long a = 1;      // >= 1
    long b = 0;      // >= 0
    long r = 2;      // >= 2
    long c = 0;
    long start = 1;  // lowest n in the product, >= 0

    void validate() const;  // throws std::invalid_argument
};

/**
 * Exact truncation of the product.  `value` is the reduced rational product
 * of the included factors; `skipped` lists the positions n whose factor is
 * exactly zero (omitted from the product under the skip policy, included
 * under strict).  skipped is empty whenever c >= 0.
 */
struct PartialProductReport {
    Rat value;
    long last_n = 0;
    long factors_included = 0;
    std::vector<long> skipped;
};

// Rigorous upper bound on the relative truncation error |P_inf/P_N - 1|.
struct TailBound {
    Rat bound;
};

// F at index 2^22 already has ~876k digits; beyond that partial products
// stop being desk-scale.  Configurable per call and via the CLI.
inline constexpr long default_index_cap = 1L << 22;

// a * r^n + b, exact.
Int term_index(const ProductSpec& spec, long n);

// 1 + c / W_{a r^n + b}.  May be zero (c = -W) or negative.
Rat factor(const ProductSpec& spec, long n);

enum class ZeroPolicy { skip, strict };

// Product of factor(spec, n) for start <= n <= upto_n.  Zero factors are
// omitted (and recorded) under ZeroPolicy::skip, multiplied in under strict.
// Throws IndexCapExceeded when term_index(upto_n) exceeds index_cap.
PartialProductReport partial_product(const ProductSpec& spec, long upto_n,
                                     long index_cap = default_index_cap,
                                     ZeroPolicy policy = ZeroPolicy::skip);

/**
 * Rational B >= 0 with |P_inf/P_N - 1| <= B, where P_N is the partial
 * product through after_n and P_inf the full product under the skip
 * convention.  Derivation, entirely in rational arithmetic with a rational
 * lower bound for phi:
 *
 *   |log(1 + c/W_m)| <= 2|c|/W_m <= 2|c| phi^{-(m-2)}   (needs W_m >= 2|c|)
 *   sum over omitted indices <= twice its first term     (term ratio < 1/2)
 *   exp(S) - 1 <= 2S                                     (needs S <= 1/2)
 *
 * Throws TailBoundUnavailable when the first omitted factor violates either
 * precondition.
 */
TailBound tail_bound(const ProductSpec& spec, long after_n);

// The rational lower bound for phi used by tail_bound: F_30/F_29.
const Rat& phi_lower_bound();

}  // namespace golden
