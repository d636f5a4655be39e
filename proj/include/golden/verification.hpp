#pragma once

#include "golden/classify.hpp"
#include "golden/products.hpp"
#include "golden/quadfield.hpp"

#include <string>
#include <vector>

namespace golden {

/**
 * Outcome of checking a partial product against its closed form.
 * `pass` is the exact rational test
 *
 *     |partial - closed| <= bound * |partial|
 *
 * evaluated in Q(sqrt5); the decimal strings are display only.
 */
struct VerificationReport {
    ProductSpec spec;
    long terms = 0;             // N: partial product runs over start..N
    long digits = 0;            // rendering precision used below
    std::string partial;        // decimal of the exact partial product
    std::string closed;         // decimal of the exact closed form
    long agreement_digits = 0;  // leading decimal digits on which they agree
    long tail_bound_digits = 0; // largest d with bound <= 10^-d; -1 if bound = 0
    bool pass = false;

    Rat partial_value;
    GoldenNum closed_value;
    Rat bound;
    std::vector<long> skipped;
};

// Computes the partial product through N, the tail bound after N, and the
// exact closed form, then evaluates the pass condition.  Throws NoClosedForm
// when the product has no known closed form (including "algebraic, value
// unknown": the root-of-unity case with a > 1).
VerificationReport run_verification(const ProductSpec& spec, long N, long digits,
                                    long index_cap = default_index_cap);

// 0 on pass, 1 on fail.
int exit_code_for(const VerificationReport& report);

// Number of leading digit characters (sign and decimal point excluded) on
// which two decimal strings agree; 0 when the signs differ.
long agreement_digit_count(const std::string& a, const std::string& b);

// Largest d >= 0 with value <= 10^-d, or -1 when value is exactly zero.
// value must be >= 0; values above 1 report 0.
long guaranteed_digits(const Rat& value);

}  // namespace golden
