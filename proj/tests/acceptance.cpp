// Acceptance suite: end-to-end checks of the flagship identities, the
// generalized closed forms, the exact proof-step identities, the classifier,
// the orbit oracle, and tail-bound soundness.  Prints one PASS/FAIL line per
// criterion and exits nonzero when anything fails.

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "golden/classify.hpp"
#include "golden/closedform.hpp"
#include "golden/fiblucas.hpp"
#include "golden/products.hpp"
#include "golden/quadfield.hpp"
#include "golden/verification.hpp"
#include "support.hpp"

using namespace golden;
using nlohmann::json;
using testsupport::CliResult;

namespace {

const std::string cli = GOLDEN_CLI_PATH;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

// One CLI verification, checked both through the stated command line and
// through the JSON report.
void check_cli_verify(Outcome& out, const std::string& args, long min_agreement,
                      long min_bound_digits, const std::string& oracle_decimal) {
    CliResult plain = testsupport::run_cli(cli, args);
    out.require(plain.exit_code == 0, "exit code " + std::to_string(plain.exit_code) +
                                          " for: " + args);
    out.require(plain.out.find("pass: true") != std::string::npos, "no pass line for: " + args);

    CliResult with_json = testsupport::run_cli(cli, args + " --json");
    out.require(with_json.exit_code == 0, "json run failed for: " + args);
    if (!out.pass) return;
    json report = json::parse(with_json.out, nullptr, false);
    out.require(!report.is_discarded(), "unparseable json for: " + args);
    if (!out.pass) return;
    out.require(report["pass"] == true, "json pass flag false for: " + args);
    out.require(report["agreement_digits"].get<long>() >= min_agreement,
                "agreement " + report["agreement_digits"].dump() + " below " +
                    std::to_string(min_agreement) + " for: " + args);
    out.require(report["tail_bound_digits"].get<long>() >= min_bound_digits,
                "tail bound digits " + report["tail_bound_digits"].dump() + " below " +
                    std::to_string(min_bound_digits) + " for: " + args);
    std::string closed = report["closed"].get<std::string>();
    out.require(closed == oracle_decimal,
                "closed decimal disagrees with the independent oracle for: " + args);
}

Outcome criterion_1() {
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();
    std::string oracle = testsupport::decimal_oracle(-3, 3, 2, 100);  // 3/phi = (-3 + 3 sqrt5)/2
    out.require(oracle.substr(0, 12) == "1.8541019662", "oracle prefix " + oracle.substr(0, 12));
    check_cli_verify(out, "verify fib -a 1 -b 1 -c 1 --start 1 -N 10 --digits 100", 100, 400,
                     oracle);
    out.require(seconds_since(t0) < 5.0, "runtime exceeded 5 s");
    return out;
}

Outcome criterion_2() {
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();
    std::string oracle = testsupport::decimal_oracle(5, -1, 2, 100);  // 3 - phi = (5 - sqrt5)/2
    out.require(oracle.substr(0, 12) == "1.3819660112", "oracle prefix " + oracle.substr(0, 12));
    check_cli_verify(out, "verify lucas -a 1 -b 1 -c 1 --start 1 -N 10 --digits 100", 100, 400,
                     oracle);
    out.require(seconds_since(t0) < 5.0, "runtime exceeded 5 s");
    return out;
}

Outcome criterion_3() {
    Outcome out;
    std::string sqrt5 = testsupport::decimal_oracle(0, 1, 1, 100);
    out.require(sqrt5.substr(0, 12) == "2.2360679774", "sqrt5 oracle prefix");
    check_cli_verify(out, "verify lucas -a 1 -b 0 -c 2 --start 1 -N 10 --digits 100", 100, 400,
                     sqrt5);
    std::string quarter = testsupport::decimal_oracle(0, 1, 4, 100);
    out.require(quarter.substr(0, 12) == "0.5590169943", "sqrt5/4 oracle prefix");
    check_cli_verify(out, "verify lucas -a 1 -b 0 -c -1 --start 1 -N 10 --digits 100", 100, 400,
                     quarter);
    return out;
}

Outcome criterion_4() {
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();
    for (long a = 1; a <= 4 && out.pass; ++a)
        for (long b = 0; b <= 4 && out.pass; ++b)
            for (long start : {1L, 2L})
                for (Family family : {Family::fibonacci, Family::lucas}) {
                    long c = static_cast<long>(
                        seq_value(family, static_cast<unsigned long>(b)).get_si());
                    ProductSpec spec{family, a, b, 2, c, start};
                    VerificationReport report = run_verification(spec, 10, 60);
                    std::string tag = std::string(family_name(family)) + " a=" +
                                      std::to_string(a) + " b=" + std::to_string(b) +
                                      " start=" + std::to_string(start);
                    out.require(report.pass, "verification failed for " + tag);
                    out.require(report.agreement_digits >= 60,
                                "agreement below 60 digits for " + tag);
                }
    out.require(seconds_since(t0) < 60.0, "grid runtime exceeded 60 s");
    return out;
}

Outcome criterion_5() {
    Outcome out;
    for (long a = 1; a <= 6; ++a)
        for (long b = 0; b <= 6; ++b)
            for (long n = 1; n <= 8; ++n)
                for (Family family : {Family::fibonacci, Family::lucas})
                    out.require(per_factor_identity_check(a, b, n, family),
                                "per-factor identity failed at a=" + std::to_string(a) +
                                    " b=" + std::to_string(b) + " n=" + std::to_string(n));

    std::mt19937_64 rng(20110807);
    std::uniform_int_distribution<long> n_dist(1, 12);
    int checked = 0;
    while (checked < 100) {
        Rat x = testsupport::random_rat(rng, 50, 50);
        if (x == Rat(1) || x == Rat(-1)) continue;
        long n = n_dist(rng);
        out.require(finite_telescope_check(x, n),
                    "finite telescope failed at x=" + x.str() + " N=" + std::to_string(n));
        ++checked;
    }
    return out;
}

Outcome criterion_6() {
    Outcome out;
    for (long k = -300; k <= 300; ++k) {
        GoldenNum expected{Rat(fib(k - 1)), Rat(fib(k))};
        out.require(phi_pow(k) == expected, "phi_pow mismatch at k=" + std::to_string(k));
        out.require(binet_check(k), "binet check failed at k=" + std::to_string(k));
    }
    mpz_class a = 0, b = 1;
    for (long k = 0; k <= 5000; ++k) {
        auto [fk, fk1] = fib_pair(static_cast<unsigned long>(k));
        if (fk != a || fk1 != b) {
            out.require(false, "fast doubling disagrees with the recurrence at k=" +
                                   std::to_string(k));
            break;
        }
        mpz_class t = a + b;
        a = b;
        b = t;
    }
    return out;
}

Outcome criterion_7() {
    Outcome out;
    for (Family family : {Family::fibonacci, Family::lucas})
        for (long a = 1; a <= 3; ++a)
            for (long b = 0; b <= 3; ++b)
                for (long r : {2L, 3L})
                    for (long c = -4; c <= 4; ++c) {
                        Verdict v = classify({family, a, b, r, c, 1});
                        bool algebraic;  // restated conditions, iterative oracle
                        if (c == 0) {
                            algebraic = true;
                        } else if (family == Family::fibonacci) {
                            algebraic = r == 2 && mpz_class(c) == testsupport::fib_iter(b);
                        } else {
                            algebraic = (r == 2 && mpz_class(c) == testsupport::lucas_iter(b)) ||
                                        (r == 2 && b == 0 && (c == 2 || c == -1));
                        }
                        out.require((v.status == Status::algebraic) == algebraic,
                                    "classifier disagrees at family=" +
                                        std::string(family_name(family)) +
                                        " a=" + std::to_string(a) + " b=" + std::to_string(b) +
                                        " r=" + std::to_string(r) + " c=" + std::to_string(c));
                    }
    for (long c = -8; c <= 8; ++c) {
        Verdict v = classify({Family::lucas, 1, 0, 2, c, 1});
        bool expected = c == 0 || c == 2 || c == -1;
        out.require((v.status == Status::algebraic) == expected,
                    "lucas b=0 set wrong at c=" + std::to_string(c));
    }
    return out;
}

Outcome criterion_8() {
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();
    std::set<long> traces = unity_trace_cycles(200);
    out.require(seconds_since(t0) < 1.0, "orbit oracle exceeded 1 s");
    out.require(traces == std::set<long>{-1, 2}, "trace set is not {2, -1}");
    return out;
}

Outcome criterion_9() {
    Outcome out;
    for (long a = 1; a <= 4 && out.pass; ++a)
        for (long b = 0; b <= 4 && out.pass; ++b)
            for (long start : {1L, 2L})
                for (Family family : {Family::fibonacci, Family::lucas})
                    for (long n = 3; n <= 8; ++n) {
                        long c = static_cast<long>(
                            seq_value(family, static_cast<unsigned long>(b)).get_si());
                        ProductSpec spec{family, a, b, 2, c, start};
                        Rat bound = tail_bound(spec, n).bound;
                        Rat pn = partial_product(spec, n).value;
                        Rat pm = partial_product(spec, n + 4).value;
                        out.require((pm - pn).abs() <= bound * pn.abs(),
                                    "tail bound violated at " +
                                        std::string(family_name(family)) +
                                        " a=" + std::to_string(a) + " b=" + std::to_string(b) +
                                        " start=" + std::to_string(start) +
                                        " N=" + std::to_string(n));
                    }
    return out;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* label;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria = {
        {1, "3/phi product reproduced to 100 digits through the CLI", criterion_1},
        {2, "3 - phi product reproduced to 100 digits through the CLI", criterion_2},
        {3, "sqrt5 and sqrt5/4 constants reproduced to 100 digits", criterion_3},
        {4, "generalized closed forms verify on the (a, b, start) grid", criterion_4},
        {5, "per-factor and finite telescoping identities hold exactly", criterion_5},
        {6, "phi powers, Binet identities, fast doubling vs recurrence", criterion_6},
        {7, "classifier matches the restated decision conditions", criterion_7},
        {8, "orbit oracle stabilizes at {2, -1} within 1 s", criterion_8},
        {9, "tail bounds dominate observed truncation error on the grid", criterion_9},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        Outcome out;
        try {
            out = criterion.run();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail = std::string("exception: ") + e.what();
        }
        if (out.pass) {
            std::printf("PASS criterion %d: %s\n", criterion.id, criterion.label);
        } else {
            std::printf("FAIL criterion %d: %s (%s)\n", criterion.id, criterion.label,
                        out.detail.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
