// golden: exact evaluation, verification, and classification of the
// Fibonacci/Lucas infinite products  prod (1 + c / W_{a r^n + b})  over
// Q(sqrt5).  All arithmetic is exact; output is deterministic byte for byte.

#include <CLI11.hpp>
#include <json.hpp>

#include "golden/classify.hpp"
#include "golden/fiblucas.hpp"
#include "golden/verification.hpp"

#include <cstdlib>
#include <cstring>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace golden;
using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_verify_fail = 1;
constexpr int exit_argument = 2;
constexpr int exit_resource = 3;

long resolve_cap(const std::optional<long>& flag) {
    if (flag) {
        if (*flag < 1) throw std::invalid_argument("--cap must be a positive integer");
        return *flag;
    }
    const char* env = std::getenv("GOLDEN_INDEX_CAP");
    if (env == nullptr || *env == '\0') return default_index_cap;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1)
        throw std::invalid_argument(std::string("GOLDEN_INDEX_CAP is not a positive integer: ") +
                                    env);
    return v;
}

Family parse_family(const std::string& s) {
    if (s == "fib" || s == "fibonacci") return Family::fibonacci;
    if (s == "lucas") return Family::lucas;
    throw std::invalid_argument("family must be fib or lucas, got '" + s + "'");
}

std::string join(const std::vector<long>& xs) {
    if (xs.empty()) return "none";
    std::string out;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(xs[i]);
    }
    return out;
}

json golden_num_json(const GoldenNum& g) {
    return {{"u_num", g.u().num().get_str()},
            {"u_den", g.u().den().get_str()},
            {"v_num", g.v().num().get_str()},
            {"v_den", g.v().den().get_str()}};
}

std::string spec_line(const ProductSpec& spec) {
    return std::string(family_name(spec.family)) + " a=" + std::to_string(spec.a) +
           " b=" + std::to_string(spec.b) + " r=" + std::to_string(spec.r) +
           " c=" + std::to_string(spec.c) + " start=" + std::to_string(spec.start);
}

// Options shared by eval/classify/verify.
struct SpecArgs {
    std::string family_str;
    ProductSpec spec;

    void attach(CLI::App* cmd, bool with_r = true) {
        cmd->add_option("family", family_str, "sequence family: fib or lucas")->required();
        cmd->add_option("-a", spec.a, "index coefficient a >= 1")->capture_default_str();
        cmd->add_option("-b", spec.b, "index offset b >= 0")->capture_default_str();
        if (with_r) cmd->add_option("-r", spec.r, "index ratio r >= 2")->capture_default_str();
        cmd->add_option("-c", spec.c, "numerator constant c")->required();
        cmd->add_option("--start", spec.start, "lowest n in the product")->capture_default_str();
    }

    ProductSpec resolve() {
        spec.family = parse_family(family_str);
        spec.validate();
        return spec;
    }
};

int run_seq(Family family, unsigned long k, const std::optional<long>& cap_flag) {
    long cap = resolve_cap(cap_flag);
    if (k > static_cast<unsigned long>(cap))
        throw IndexCapExceeded("index " + std::to_string(k) + " exceeds the cap " +
                               std::to_string(cap));
    std::cout << seq_value(family, k).get_str() << "\n";
    return exit_ok;
}

int run_eval(SpecArgs& args, bool closed, const std::optional<long>& partial_n, long digits,
             bool strict_zero, const std::optional<long>& cap_flag) {
    ProductSpec spec = args.resolve();
    if (closed == partial_n.has_value())
        throw std::invalid_argument("choose exactly one of --closed and --partial N");
    if (digits < 1) throw std::invalid_argument("--digits must be >= 1");

    if (closed) {
        Int matching = seq_value(spec.family, static_cast<unsigned long>(spec.b));
        if (spec.r != 2 || Int(spec.c) != matching) {
            std::string w = spec.family == Family::fibonacci ? "F_b" : "L_b";
            throw std::invalid_argument(
                "no closed form: Tachiya's criterion gives one only for r = 2 and c = " + w +
                " = " + matching.get_str());
        }
        GoldenNum value;
        if (spec.start == 0 && spec.a % 2 != 0) {
            value = spec.family == Family::fibonacci ? fib_closed_from_zero(spec.a, spec.b).value
                                                     : lucas_closed_from_zero(spec.a, spec.b).value;
        } else {
            value = spec.family == Family::fibonacci ? fib_closed(spec.a, spec.b, spec.start).value
                                                     : lucas_closed(spec.a, spec.b, spec.start).value;
        }
        std::cout << "value: " << to_basis_string(value) << "\n";
        std::cout << "decimal: " << to_decimal(value, digits) << "\n";
        return exit_ok;
    }

    long cap = resolve_cap(cap_flag);
    ZeroPolicy policy = strict_zero ? ZeroPolicy::strict : ZeroPolicy::skip;
    PartialProductReport rep = partial_product(spec, *partial_n, cap, policy);
    std::cout << "value: " << rep.value.str() << "\n";
    std::cout << "decimal: " << to_decimal(GoldenNum(rep.value), digits) << "\n";
    std::cout << "factors: " << rep.factors_included << "\n";
    std::cout << "skipped: " << join(rep.skipped) << "\n";
    return exit_ok;
}

int run_classify(SpecArgs& args, bool as_json) {
    ProductSpec spec = args.resolve();
    Verdict verdict = classify(spec);

    if (as_json) {
        json j;
        j["schema"] = "1";
        j["status"] = status_name(verdict.status);
        j["case"] = case_name(verdict.which);
        j["closed_form"] = verdict.closed_form ? golden_num_json(*verdict.closed_form)
                                               : json(nullptr);
        j["degenerate"] = verdict.degenerate_factors;
        std::cout << j.dump() << "\n";
        return exit_ok;
    }

    std::cout << "status: " << status_name(verdict.status) << "\n";
    std::cout << "case: " << case_name(verdict.which) << "\n";
    if (verdict.closed_form) {
        std::cout << "closed_form: " << to_basis_string(*verdict.closed_form) << "\n";
        std::cout << "decimal: " << to_decimal(*verdict.closed_form, 50) << "\n";
    } else if (verdict.status == Status::algebraic) {
        std::cout << "closed_form: unknown\n";
    }
    std::cout << "degenerate: " << join(verdict.degenerate_factors) << "\n";
    return exit_ok;
}

int run_verify(SpecArgs& args, long terms, long digits, bool as_json,
               const std::optional<long>& cap_flag) {
    ProductSpec spec = args.resolve();
    if (terms < spec.start) throw std::invalid_argument("-N must be >= start");
    if (digits < 1) throw std::invalid_argument("--digits must be >= 1");
    long cap = resolve_cap(cap_flag);

    VerificationReport report = run_verification(spec, terms, digits, cap);

    if (as_json) {
        json j;
        j["schema"] = "1";
        j["family"] = family_name(spec.family);
        j["a"] = spec.a;
        j["b"] = spec.b;
        j["r"] = spec.r;
        j["c"] = spec.c;
        j["start"] = spec.start;
        j["N"] = report.terms;
        j["digits"] = report.digits;
        j["partial"] = report.partial;
        j["closed"] = report.closed;
        j["agreement_digits"] = report.agreement_digits;
        j["tail_bound_digits"] = report.tail_bound_digits;
        j["pass"] = report.pass;
        std::cout << j.dump() << "\n";
        return exit_code_for(report);
    }

    std::cout << "spec: " << spec_line(spec) << "\n";
    std::cout << "N: " << report.terms << "\n";
    std::cout << "partial: " << report.partial << "\n";
    std::cout << "closed: " << report.closed << "\n";
    std::cout << "agreement_digits: " << report.agreement_digits << "\n";
    if (report.tail_bound_digits < 0)
        std::cout << "tail_bound_digits: exact\n";
    else
        std::cout << "tail_bound_digits: " << report.tail_bound_digits << "\n";
    if (!report.skipped.empty()) std::cout << "skipped: " << join(report.skipped) << "\n";
    std::cout << "pass: " << (report.pass ? "true" : "false") << "\n";
    return exit_code_for(report);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Fibonacci/Lucas infinite products over Q(sqrt5)"};
    app.require_subcommand(1);

    // fib / lucas
    unsigned long seq_k = 0;
    std::optional<long> seq_cap;
    auto* cmd_fib = app.add_subcommand("fib", "print F_k");
    cmd_fib->add_option("k", seq_k, "index k >= 0")->required();
    cmd_fib->add_option("--cap", seq_cap, "index safety cap (default 2^22)");
    auto* cmd_lucas = app.add_subcommand("lucas", "print L_k");
    cmd_lucas->add_option("k", seq_k, "index k >= 0")->required();
    cmd_lucas->add_option("--cap", seq_cap, "index safety cap (default 2^22)");

    // eval
    SpecArgs eval_args;
    bool eval_closed = false;
    std::optional<long> eval_partial;
    long eval_digits = 50;
    bool eval_strict_zero = false;
    std::optional<long> eval_cap;
    auto* cmd_eval = app.add_subcommand("eval", "evaluate a product (closed form or partial)");
    eval_args.attach(cmd_eval);
    cmd_eval->add_flag("--closed", eval_closed, "print the exact closed form");
    cmd_eval->add_option("--partial", eval_partial, "exact partial product through n = N");
    cmd_eval->add_option("--digits", eval_digits, "decimal digits to print")->capture_default_str();
    cmd_eval->add_flag("--strict-zero", eval_strict_zero,
                       "a zero factor makes the partial product 0 instead of being skipped");
    cmd_eval->add_option("--cap", eval_cap, "index safety cap (default 2^22)");

    // classify
    SpecArgs classify_args;
    bool classify_json = false;
    auto* cmd_classify = app.add_subcommand("classify", "algebraic or transcendental");
    classify_args.attach(cmd_classify);
    cmd_classify->add_flag("--json", classify_json, "single-line JSON verdict");

    // verify
    SpecArgs verify_args;
    long verify_terms = 10;
    long verify_digits = 50;
    bool verify_json = false;
    std::optional<long> verify_cap;
    auto* cmd_verify = app.add_subcommand("verify", "check a partial product against the closed form");
    verify_args.attach(cmd_verify);
    cmd_verify->add_option("-N", verify_terms, "partial product runs through n = N")
        ->capture_default_str();
    cmd_verify->add_option("--digits", verify_digits, "decimal digits to print")
        ->capture_default_str();
    cmd_verify->add_flag("--json", verify_json, "single-line JSON report");
    cmd_verify->add_option("--cap", verify_cap, "index safety cap (default 2^22)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_argument;
    }

    try {
        if (cmd_fib->parsed()) return run_seq(Family::fibonacci, seq_k, seq_cap);
        if (cmd_lucas->parsed()) return run_seq(Family::lucas, seq_k, seq_cap);
        if (cmd_eval->parsed())
            return run_eval(eval_args, eval_closed, eval_partial, eval_digits, eval_strict_zero,
                            eval_cap);
        if (cmd_classify->parsed()) return run_classify(classify_args, classify_json);
        if (cmd_verify->parsed())
            return run_verify(verify_args, verify_terms, verify_digits, verify_json, verify_cap);
    } catch (const IndexCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_resource;
    } catch (const NoClosedForm& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_argument;
    } catch (const TailBoundUnavailable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_argument;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_argument;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_argument;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_resource;
    }
    return exit_ok;
}
