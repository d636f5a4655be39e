#include "golden/verification.hpp"

#include <cstddef>

namespace golden {

long agreement_digit_count(const std::string& a, const std::string& b) {
    bool neg_a = !a.empty() && a[0] == '-';
    bool neg_b = !b.empty() && b[0] == '-';
    if (neg_a != neg_b) return 0;
    size_t i = neg_a ? 1 : 0;
    long count = 0;
    for (size_t j = i; j < a.size() && j < b.size(); ++j) {
        if (a[j] != b[j]) break;
        if (a[j] >= '0' && a[j] <= '9') ++count;
    }
    return count;
}

long guaranteed_digits(const Rat& value) {
    if (value.sign() < 0) throw std::invalid_argument("guaranteed_digits needs a value >= 0");
    if (value.is_zero()) return -1;
    Int p = value.num(), q = value.den();
    if (p > q) return 0;
    // size estimate first (may be off by one either way), then exact fixup
    long d = static_cast<long>(mpz_sizeinbase(q.get_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(p.get_mpz_t(), 10)) - 1;
    if (d < 0) d = 0;
    while (p * pow10(static_cast<unsigned long>(d) + 1) <= q) ++d;
    while (d > 0 && p * pow10(static_cast<unsigned long>(d)) > q) --d;
    return d;
}

VerificationReport run_verification(const ProductSpec& spec, long N, long digits,
                                    long index_cap) {
    Verdict verdict = classify(spec);
    if (!verdict.closed_form) {
        if (verdict.status == Status::algebraic)
            throw NoClosedForm("algebraic, value unknown (root-of-unity case with a > 1)");
        throw NoClosedForm("no closed form: transcendental by Tachiya's criterion");
    }

    VerificationReport report;
    report.spec = spec;
    report.terms = N;
    report.digits = digits;
    report.closed_value = *verdict.closed_form;

    PartialProductReport part = partial_product(spec, N, index_cap);
    report.partial_value = part.value;
    report.skipped = part.skipped;
    report.bound = tail_bound(spec, N).bound;

    // pass iff |partial - closed| <= bound * |partial|, exactly in Q(sqrt5)
    GoldenNum diff = GoldenNum(report.partial_value) - report.closed_value;
    if (sign(diff) < 0) diff = -diff;
    GoldenNum allowance{report.bound * report.partial_value.abs()};
    report.pass = sign(allowance - diff) >= 0;

    report.partial = to_decimal(GoldenNum(report.partial_value), digits);
    report.closed = to_decimal(report.closed_value, digits);
    report.agreement_digits = agreement_digit_count(report.partial, report.closed);
    report.tail_bound_digits = guaranteed_digits(report.bound);
    return report;
}

int exit_code_for(const VerificationReport& report) {
    return report.pass ? 0 : 1;
}

}  // namespace golden
