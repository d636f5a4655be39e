#include "golden/classify.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace golden {

const char* status_name(Status s) {
    return s == Status::algebraic ? "algebraic" : "transcendental";
}

const char* case_name(AlgebraicCase c) {
    switch (c) {
        case AlgebraicCase::i_c_zero: return "i_c_zero";
        case AlgebraicCase::ii_c_matches: return "ii_c_matches";
        case AlgebraicCase::iii_root_of_unity: return "iii_root_of_unity";
        case AlgebraicCase::none: return "none";
    }
    return "none";
}

namespace {

// 2 cos(2 pi e / m) when it is a rational integer.  With e/m = p/q in lowest
// terms the only integer traces are q in {1, 2, 3, 4, 6}.
bool integer_trace(long e, long m, long& out) {
    long q = m / std::gcd(e, m);
    switch (q) {
        case 1: out = 2; return true;   // e/m = 0
        case 2: out = -2; return true;  // 1/2
        case 3: out = -1; return true;  // 1/3, 2/3
        case 4: out = 0; return true;   // 1/4, 3/4
        case 6: out = 1; return true;   // 1/6, 5/6
        default: return false;
    }
}

}  // namespace

std::set<long> unity_trace_cycles(long max_order) {
    if (max_order < 1) throw std::invalid_argument("max_order must be >= 1");
    std::set<long> traces;
    for (long m = 1; m <= max_order; ++m) {
        // Exponents of omega^{2^n}: walk e -> 2e (mod m) from e = 1 until a
        // repeat; only the eventual cycle matters ("for all large n").
        std::vector<long> seen_at(static_cast<size_t>(m), -1);
        std::vector<long> path;
        long e = 1 % m;
        while (seen_at[static_cast<size_t>(e)] < 0) {
            seen_at[static_cast<size_t>(e)] = static_cast<long>(path.size());
            path.push_back(e);
            e = (2 * e) % m;
        }
        size_t cycle_begin = static_cast<size_t>(seen_at[static_cast<size_t>(e)]);

        bool constant_integer = true;
        long value = 0;
        for (size_t i = cycle_begin; i < path.size(); ++i) {
            long t;
            if (!integer_trace(path[i], m, t) || (i > cycle_begin && t != value)) {
                constant_integer = false;
                break;
            }
            value = t;
        }
        if (constant_integer) traces.insert(value);
    }
    return traces;
}

namespace {

const std::set<long>& stable_trace_set() {
    static const std::set<long> traces = [] {
        std::set<long> t = unity_trace_cycles(100);
        if (t != std::set<long>{-1, 2})
            throw std::logic_error("unity trace set is not {2, -1}; classification rules "
                                   "need review");
        return t;
    }();
    return traces;
}

// Closed form for the c-matches case, honoring the start index.
GoldenNum matched_closed_form(const ProductSpec& spec) {
    if (spec.start == 0 && spec.a % 2 != 0) {
        return spec.family == Family::fibonacci ? fib_closed_from_zero(spec.a, spec.b).value
                                                : lucas_closed_from_zero(spec.a, spec.b).value;
    }
    return spec.family == Family::fibonacci ? fib_closed(spec.a, spec.b, spec.start).value
                                            : lucas_closed(spec.a, spec.b, spec.start).value;
}

// Closed form for the root-of-unity case with a = 1: the stored constant is
// the product from n = 1; other start positions differ by finitely many
// exact rational factors (zero factors stay skipped).
GoldenNum unity_closed_form(const ProductSpec& spec) {
    GoldenNum value = lucas_unity_constant(spec.c).value;
    if (spec.start == 0) {
        Rat f0 = factor(spec, 0);
        if (!f0.is_zero()) value = GoldenNum(f0) * value;
    } else {
        for (long n = 1; n < spec.start; ++n) value = value / GoldenNum(factor(spec, n));
    }
    return value;
}

}  // namespace

Verdict classify(const ProductSpec& spec) {
    spec.validate();
    const std::set<long>& traces = stable_trace_set();

    Verdict verdict;

    // Zero factors: W_{a r^n + b} = -c needs c < 0, and the values at the
    // (strictly increasing, >= 1) indices are nondecreasing, so the scan can
    // stop once W exceeds |c|.
    if (spec.c < 0) {
        Int target = -Int(spec.c);
        for (long n = spec.start; n <= degenerate_scan_horizon; ++n) {
            Int idx = term_index(spec, n);
            if (!idx.fits_ulong_p()) break;
            Int w = seq_value(spec.family, idx.get_ui());
            if (w == target) verdict.degenerate_factors.push_back(n);
            if (w > target) break;
        }
    }

    if (spec.c == 0) {
        verdict.status = Status::algebraic;
        verdict.which = AlgebraicCase::i_c_zero;
        verdict.closed_form = GoldenNum(1);
        return verdict;
    }

    if (spec.r == 2 && Int(spec.c) == seq_value(spec.family, static_cast<unsigned long>(spec.b))) {
        verdict.status = Status::algebraic;
        verdict.which = AlgebraicCase::ii_c_matches;
        verdict.closed_form = matched_closed_form(spec);
        return verdict;
    }

    if (spec.family == Family::lucas && spec.r == 2 && spec.b == 0 && traces.count(spec.c) != 0) {
        verdict.status = Status::algebraic;
        verdict.which = AlgebraicCase::iii_root_of_unity;
        if (spec.a == 1) verdict.closed_form = unity_closed_form(spec);
        return verdict;
    }

    verdict.status = Status::transcendental;
    verdict.which = AlgebraicCase::none;
    return verdict;
}

}  // namespace golden
