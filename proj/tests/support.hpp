#pragma once

// Test-side oracles and helpers.  Everything here is deliberately written
// against the definitions (iterative recurrences, guard-digit square roots)
// rather than against the library's own code paths.

#include <gmpxx.h>

#include <cstdio>
#include <random>
#include <string>
#include <sys/wait.h>

#include "golden/quadfield.hpp"
#include "golden/rat.hpp"

namespace testsupport {

// F_k by the plain recurrence.
inline mpz_class fib_iter(long k) {
    if (k < 0) throw std::invalid_argument("fib_iter needs k >= 0");
    mpz_class a = 0, b = 1;
    for (long i = 0; i < k; ++i) {
        mpz_class t = a + b;
        a = b;
        b = t;
    }
    return a;
}

// L_k by the plain recurrence.
inline mpz_class lucas_iter(long k) {
    if (k < 0) throw std::invalid_argument("lucas_iter needs k >= 0");
    mpz_class a = 2, b = 1;
    for (long i = 0; i < k; ++i) {
        mpz_class t = a + b;
        a = b;
        b = t;
    }
    return a;
}

// Truncated decimal expansion of (A + B sqrt5) / C for a positive value,
// using guard digits and one big integer square root.  Independent of the
// library's exact-floor renderer.
inline std::string decimal_oracle(const mpz_class& A, const mpz_class& B, const mpz_class& C,
                                  long digits) {
    const long guard = 10;
    mpz_class big = 1;
    mpz_pow_ui(big.get_mpz_t(), mpz_class(10).get_mpz_t(),
               static_cast<unsigned long>(digits + guard));
    mpz_class sqrt5_scaled;
    mpz_class five_scaled = 5 * big * big;
    mpz_sqrt(sqrt5_scaled.get_mpz_t(), five_scaled.get_mpz_t());

    mpz_class scaled = A * big + B * sqrt5_scaled;
    mpz_class num;
    mpz_fdiv_q(num.get_mpz_t(), scaled.get_mpz_t(), C.get_mpz_t());
    mpz_class g = 1;
    mpz_pow_ui(g.get_mpz_t(), mpz_class(10).get_mpz_t(), static_cast<unsigned long>(guard));
    mpz_class n = num / g;

    mpz_class d = 1;
    mpz_pow_ui(d.get_mpz_t(), mpz_class(10).get_mpz_t(), static_cast<unsigned long>(digits));
    mpz_class ip = n / d, fp = n % d;
    std::string frac = fp.get_str();
    frac.insert(0, static_cast<size_t>(digits) - frac.size(), '0');
    return ip.get_str() + "." + frac;
}

inline golden::Rat random_rat(std::mt19937_64& rng, long max_abs_num = 50, long max_den = 50) {
    std::uniform_int_distribution<long> num_dist(-max_abs_num, max_abs_num);
    std::uniform_int_distribution<long> den_dist(1, max_den);
    return golden::Rat(num_dist(rng), den_dist(rng));
}

inline golden::GoldenNum random_golden(std::mt19937_64& rng) {
    return golden::GoldenNum(random_rat(rng), random_rat(rng));
}

struct CliResult {
    int exit_code = -1;
    std::string out;
};

// Runs the CLI through the shell; `env_prefix` may carry VAR=value pairs.
inline CliResult run_cli(const std::string& cli_path, const std::string& args,
                         const std::string& env_prefix = "", bool merge_stderr = false) {
    std::string cmd = env_prefix.empty() ? "" : env_prefix + " ";
    cmd += cli_path + " " + args;
    cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    CliResult result;
    if (pipe == nullptr) return result;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) result.out.append(buf, got);
    int status = pclose(pipe);
    if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    return result;
}

}  // namespace testsupport
