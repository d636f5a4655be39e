#include "golden/products.hpp"

#include "golden/fiblucas.hpp"

#include <stdexcept>

namespace golden {

const char* family_name(Family family) {
    return family == Family::fibonacci ? "fibonacci" : "lucas";
}

Int seq_value(Family family, unsigned long k) {
    return family == Family::fibonacci ? fib_pair(k).first : lucas(k);
}

void ProductSpec::validate() const {
    if (a < 1) throw std::invalid_argument("product spec requires a >= 1");
    if (b < 0) throw std::invalid_argument("product spec requires b >= 0");
    if (r < 2) throw std::invalid_argument("product spec requires r >= 2");
    if (start < 0) throw std::invalid_argument("product spec requires start >= 0");
}

Int term_index(const ProductSpec& spec, long n) {
    spec.validate();
    if (n < 0) throw std::invalid_argument("term position must be >= 0");
    return Int(spec.a) * ipow(Int(spec.r), static_cast<unsigned long>(n)) + spec.b;
}

namespace {

unsigned long index_as_ui(const Int& idx) {
    if (!idx.fits_ulong_p())
        throw IndexCapExceeded("sequence index " + idx.get_str() + " is not computable");
    return idx.get_ui();
}

}  // namespace

Rat factor(const ProductSpec& spec, long n) {
    Int w = seq_value(spec.family, index_as_ui(term_index(spec, n)));
    return Rat(w + spec.c, w);
}

PartialProductReport partial_product(const ProductSpec& spec, long upto_n,
                                     long index_cap, ZeroPolicy policy) {
    spec.validate();
    if (upto_n < spec.start) throw std::invalid_argument("upto_n must be >= start");
    if (index_cap < 1) throw std::invalid_argument("index cap must be >= 1");
    Int last = term_index(spec, upto_n);
    if (last > index_cap)
        throw IndexCapExceeded("index " + last.get_str() + " exceeds the cap " +
                               std::to_string(index_cap));

    PartialProductReport rep;
    rep.value = Rat(1);
    rep.last_n = upto_n;
    for (long n = spec.start; n <= upto_n; ++n) {
        Rat f = factor(spec, n);
        if (f.is_zero()) {
            rep.skipped.push_back(n);
            if (policy == ZeroPolicy::skip) continue;
        }
        rep.value = rep.value * f;
        ++rep.factors_included;
    }
    return rep;
}

const Rat& phi_lower_bound() {
    static const Rat lb(Int(832040), Int(514229));  // F_30/F_29 < phi
    return lb;
}

TailBound tail_bound(const ProductSpec& spec, long after_n) {
    spec.validate();
    if (after_n < spec.start) throw std::invalid_argument("tail bound needs after_n >= start");
    if (spec.c == 0) return {Rat(0)};

    Int first_omitted = term_index(spec, after_n + 1);
    Int threshold = 2 * abs(Int(spec.c));

    // Smallest index m with F_m >= 2|c|; every omitted index must be at
    // least that for the per-factor log bound (factors stay in [1/2, 3/2]).
    Int fa = 0, fb = 1;
    long m = 0;
    while (fa < threshold) {
        Int t = fa + fb;
        fa = fb;
        fb = t;
        ++m;
    }
    if (first_omitted < m)
        throw TailBoundUnavailable("first omitted factor at index " + first_omitted.get_str() +
                                   " is too large for the log bound (needs F >= 2|c|)");

    Int e = first_omitted - 2;
    if (!e.fits_ulong_p())
        throw IndexCapExceeded("tail bound exponent " + e.get_str() + " too large to evaluate");

    // First omitted term of the log sum: 2|c| phi^{-(m-2)}, with phi replaced
    // by its rational lower bound.  Successive omitted indices grow by at
    // least a r^n (r-1) >= 2, so the ratio is below phi^{-2} < 1/2 and the
    // whole sum is at most twice the first term.
    const Rat& lb = phi_lower_bound();
    unsigned long eu = e.get_ui();
    Rat first_term = Rat(threshold * ipow(lb.den(), eu), ipow(lb.num(), eu));
    Rat log_sum = Rat(2) * first_term;
    if (Rat(1, 2) < log_sum)
        throw TailBoundUnavailable("tail log-sum bound exceeds 1/2; truncate later");

    // exp(S) - 1 <= 2S for 0 <= S <= 1/2.
    return {Rat(2) * log_sum};
}

}  // namespace golden
