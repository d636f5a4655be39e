#pragma once

#include "golden/closedform.hpp"
#include "golden/products.hpp"
#include "golden/quadfield.hpp"

#include <optional>
#include <set>
#include <vector>

namespace golden {

enum class Status { algebraic, transcendental };

enum class AlgebraicCase { i_c_zero, ii_c_matches, iii_root_of_unity, none };

const char* status_name(Status s);
const char* case_name(AlgebraicCase c);

struct Verdict {
    Status status = Status::transcendental;
    AlgebraicCase which = AlgebraicCase::none;
    std::optional<GoldenNum> closed_form;  // present implies algebraic
    std::vector<long> degenerate_factors;  // n with W_{a r^n + b} = -c
};

// Positions n <= this horizon are scanned for zero factors.
inline constexpr long degenerate_scan_horizon = 30;

/**
 * All integer values of omega^e + omega^{-e} = 2 cos(2 pi e / m) that are
 * constant on the eventual cycle of the squaring map e -> 2e (mod m),
 * collected over every order m <= max_order.  Integrality is decided
 * exactly: 2 cos(2 pi e/m) is a rational integer iff e/m reduces to one of
 * 0, 1/6, 1/4, 1/3, 1/2, 2/3, 3/4, 5/6 (mod 1).  No floating point.
 *
 * The result stabilizes at {2, -1} from max_order = 6 on.
 */
std::set<long> unity_trace_cycles(long max_order);

/**
 * Tachiya's criterion for the product defined by spec.
 *
 *   Fibonacci: algebraic iff c = 0, or r = 2 and c = F_b.
 *   Lucas:     algebraic iff c = 0, or r = 2 and c = L_b, or r = 2, b = 0
 *              and c is a constant-trace root-of-unity value ({2, -1}).
 *
 * When both Lucas conditions hold (b = 0, c = 2) the verdict reports the
 * c-matches case, whose closed form is derived rather than stored.  The
 * closed form is filled in whenever one is known: always for the first two
 * cases, and for the root-of-unity case when a = 1.  Zero factors never
 * change the verdict; they are reported in degenerate_factors.
 *
 * The root-of-unity value set is recomputed by unity_trace_cycles(100) on
 * first use and asserted to be {2, -1}; a mismatch throws std::logic_error.
 */
Verdict classify(const ProductSpec& spec);

}  // namespace golden
