#ifndef CLUSTER_A11_TOOLS_CLI_HPP
#define CLUSTER_A11_TOOLS_CLI_HPP

// Command-line front end. Exit codes: 0 success, 1 verification or internal
// failure, 2 usage or domain error.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "cluster_a11/cluster.hpp"
#include "cluster_a11/fibonacci.hpp"
#include "cluster_a11/laurent_io.hpp"

namespace cluster_a11::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char* kMaxIndexEnv = "CLUSTER_A11_MAX_INDEX";

/// The index bound, lowered (never raised) by CLUSTER_A11_MAX_INDEX.
inline std::int64_t effective_max_index() {
    const char* raw = std::getenv(kMaxIndexEnv);
    if (raw == nullptr) return kDefaultMaxIndex;
    try {
        std::size_t used = 0;
        const long long v = std::stoll(raw, &used);
        if (used == std::string(raw).size() && v >= 0 && v < kDefaultMaxIndex) return v;
    } catch (const std::exception&) {
    }
    return kDefaultMaxIndex;
}

class UsageError : public Error {
public:
    using Error::Error;
};

inline std::int64_t parse_int(const std::string& text, const char* what) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(text, &used);
        if (used == text.size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("invalid ") + what + ": '" + text + "'");
}

/// "a,b" with both integers nonzero.
inline std::pair<std::int64_t, std::int64_t> parse_eval_point(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw UsageError("--eval expects a,b");
    const auto a = parse_int(text.substr(0, comma), "--eval value");
    const auto b = parse_int(text.substr(comma + 1), "--eval value");
    if (a == 0 || b == 0) throw UsageError("--eval values must be nonzero");
    return {a, b};
}

/// "x:5", "s:1" or "f:7", optionally followed by ":<term index>".
inline std::pair<ElementId, std::size_t> parse_fault(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() < 2 || parts.size() > 3) throw UsageError("--inject-fault expects KIND:INDEX[:TERM]");
    const std::int64_t index = parse_int(parts[1], "fault index");
    ElementId id;
    if (parts[0] == "x") {
        id = ElementId::X(index);
    } else if (parts[0] == "s") {
        id = ElementId::S(index);
    } else if (parts[0] == "f") {
        id = ElementId::FLittle(index);
    } else {
        throw UsageError("fault kind must be x, s or f");
    }
    std::size_t term = 0;
    if (parts.size() == 3) {
        const auto t = parse_int(parts[2], "fault term");
        if (t < 0) throw UsageError("fault term must be nonnegative");
        term = static_cast<std::size_t>(t);
    }
    return {id, term};
}

inline std::string rational_text(const BigRational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_str();
}

struct ElementArgs {
    std::string index;
    std::string format = "human";
    std::string eval;
};

inline int cmd_element(ElementId::Kind kind, const ElementArgs& args, std::ostream& out) {
    Engine engine({effective_max_index()});
    const std::int64_t index = parse_int(args.index, "index");
    const LaurentPoly& value = engine.get({kind, index});
    if (!args.eval.empty()) {
        const auto [a, b] = parse_eval_point(args.eval);
        out << rational_text(eval_int(value, a, b)) << '\n';
    } else if (args.format == "json") {
        out << to_json(value) << '\n';
    } else {
        out << to_human(value) << '\n';
    }
    return kExitOk;
}

inline int cmd_fib(std::int64_t n, bool oracle, std::ostream& out) {
    if (n < 0) throw DomainError("N must be nonnegative");
    if (n > effective_max_index()) throw ScaleError("N exceeds the index limit");
    const auto vars = static_cast<std::int32_t>(n);
    out << to_json(oracle ? fib_enumerate(vars) : fib_recurrence(vars)) << '\n';
    return kExitOk;
}

inline int cmd_verify(std::int64_t max, const std::string& fault, std::ostream& out) {
    if (max < 0) throw DomainError("--max must be nonnegative");
    Engine engine({effective_max_index()});
    if (!fault.empty()) {
        const auto [id, term] = parse_fault(fault);
        engine.corrupt_coefficient(id, term);
    }
    VerifyReport report = engine.verify_identities(max);
    report.append(engine.positivity_scan(max));

    for (const auto& s : report.summary()) {
        out << std::left << std::setw(20) << s.identity << ' ' << s.passed << '/' << s.total;
        if (s.passed != s.total) {
            out << "  FAIL first at " << s.first_failure << ": " << s.first_detail;
        }
        out << '\n';
    }
    const bool ok = report.all_passed();
    out << (ok ? "PASS" : "FAIL") << '\n';
    return ok ? kExitOk : kExitFailure;
}

inline int cmd_bench(std::int64_t n, std::ostream& out) {
    if (n < 0) throw DomainError("--n must be nonnegative");
    using clock = std::chrono::steady_clock;
    auto report = [&](const char* name, std::int64_t index, auto&& compute) {
        const auto start = clock::now();
        const LaurentPoly& value = compute();
        const double ms = std::chrono::duration<double, std::milli>(clock::now() - start).count();
        out << name << '(' << index << "): " << std::fixed << std::setprecision(1) << ms << " ms, "
            << value.size() << " terms, " << value.max_coeff_bits() << "-bit max coefficient\n";
    };

    // Cold caches that keep only the requested element.
    Engine::Options opts{effective_max_index(), Engine::XRoute::linear, false};
    {
        Engine engine(opts);
        report("x", n + 3, [&]() -> const LaurentPoly& { return engine.x(n + 3); });
    }
    {
        Engine engine(opts);
        report("s", n, [&]() -> const LaurentPoly& { return engine.s(n); });
    }
    return kExitOk;
}

/// Runs the CLI on `args` (excluding the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Laurent expansions in the cluster algebra of type A_1^(1)", "cluster_a11"};
    app.require_subcommand(1);

    ElementArgs element_args;
    auto add_element = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("index", element_args.index, "Element index")->required();
        sub->add_option("--format", element_args.format, "Output format")
            ->check(CLI::IsMember({"human", "json"}));
        sub->add_option("--eval", element_args.eval, "Evaluate at x1=a, x2=b (nonzero integers)");
        return sub;
    };
    auto* x_cmd = add_element("x", "Cluster variable x_m, any integer m");
    auto* s_cmd = add_element("s", "Element s_n, n >= -1");
    auto* f_cmd = add_element("f", "Substituted Fibonacci polynomial f_N, N >= 0");

    std::int64_t fib_n = 0;
    bool oracle = false;
    auto* fib_cmd = app.add_subcommand("fib", "Subsets indexing the Fibonacci polynomial F(w_1..w_N)");
    fib_cmd->add_option("N", fib_n, "Number of variables")->required();
    fib_cmd->add_flag("--oracle", oracle, "Enumerate all 2^N subsets instead of using the recurrence");

    std::int64_t verify_max = 10;
    std::string fault;
    auto* verify_cmd = app.add_subcommand("verify", "Check the identities between x_m, s_n and f_N");
    verify_cmd->add_option("--max", verify_max, "Largest n checked")->capture_default_str();
    verify_cmd->add_option("--inject-fault", fault, "Corrupt one stored coefficient first (KIND:INDEX[:TERM])");

    std::int64_t bench_n = 100;
    auto* bench_cmd = app.add_subcommand("bench", "Time x_{n+3} and s_n from a cold cache");
    bench_cmd->add_option("--n", bench_n, "n")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (x_cmd->parsed()) return cmd_element(ElementId::Kind::x, element_args, out);
        if (s_cmd->parsed()) return cmd_element(ElementId::Kind::s, element_args, out);
        if (f_cmd->parsed()) return cmd_element(ElementId::Kind::f, element_args, out);
        if (fib_cmd->parsed()) return cmd_fib(fib_n, oracle, out);
        if (verify_cmd->parsed()) return cmd_verify(verify_max, fault, out);
        if (bench_cmd->parsed()) return cmd_bench(bench_n, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ScaleError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const EvalAtZeroError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace cluster_a11::cli

#endif  // CLUSTER_A11_TOOLS_CLI_HPP
