#ifndef CLUSTER_A11_CLUSTER_HPP
#define CLUSTER_A11_CLUSTER_HPP

// Elements of the coefficient-free cluster algebra of type A_1^(1) as Laurent
// polynomials in x1, x2:
//
//   cluster variables  x_{m-1} x_{m+1} = x_m^2 + 1            (m in Z)
//   s_n                s_0 = 1, s_1 = x_0 x_3 - x_1 x_2, s_n = s_1 s_{n-1} - s_{n-2}
//   f_N                see fibonacci.hpp
//
// plus closed binomial formulas for x_{n+3} and s_n, and a suite that checks
// the identities tying these families together.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cluster_a11/arithmetic.hpp"
#include "cluster_a11/errors.hpp"
#include "cluster_a11/fibonacci.hpp"
#include "cluster_a11/laurent_poly.hpp"

namespace cluster_a11 {

/// Which element of the algebra: x_m, s_n or f_N.
struct ElementId {
    enum class Kind : std::uint8_t { x, s, f };

    Kind kind = Kind::x;
    std::int64_t index = 0;

    static constexpr ElementId X(std::int64_t m) { return {Kind::x, m}; }
    static constexpr ElementId S(std::int64_t n) { return {Kind::s, n}; }
    static constexpr ElementId FLittle(std::int64_t n) { return {Kind::f, n}; }

    friend constexpr auto operator<=>(const ElementId&, const ElementId&) = default;

    std::string to_string() const {
        const char* name = kind == Kind::x ? "x" : kind == Kind::s ? "s" : "f";
        return std::string(name) + "(" + std::to_string(index) + ")";
    }
};

// ---------------------------------------------------------------------------
// Binomials and closed forms

/// C(a, b) by the multiplicative formula; zero when b < 0 or b > a.
inline BigCoeff binomial(std::int64_t a, std::int64_t b) {
    if (a < 0 || b < 0 || b > a) return 0;
    b = std::min(b, a - b);
    BigCoeff r = 1;
    for (std::int64_t i = 1; i <= b; ++i) {
        r *= static_cast<unsigned long>(a - b + i);
        mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(i));
    }
    return r;
}

/// Rows 0..max_row of Pascal's triangle, each row built with the
/// multiplicative step C(a, b+1) = C(a, b) (a - b) / (b + 1).
class BinomialTable {
public:
    explicit BinomialTable(std::int64_t max_row) {
        rows_.resize(static_cast<std::size_t>(std::max<std::int64_t>(max_row + 1, 0)));
        for (std::int64_t a = 0; a <= max_row; ++a) {
            auto& row = rows_[static_cast<std::size_t>(a)];
            row.resize(static_cast<std::size_t>(a + 1));
            row[0] = 1;
            for (std::int64_t b = 0; b < a; ++b) {
                row[b + 1] = row[b] * static_cast<unsigned long>(a - b);
                mpz_divexact_ui(row[b + 1].get_mpz_t(), row[b + 1].get_mpz_t(), static_cast<unsigned long>(b + 1));
            }
        }
    }

    const BigCoeff& operator()(std::int64_t a, std::int64_t b) const {
        static const BigCoeff zero = 0;
        if (a < 0 || b < 0 || b > a || a >= static_cast<std::int64_t>(rows_.size())) return zero;
        return rows_[a][b];
    }

private:
    std::vector<std::vector<BigCoeff>> rows_;
};

/// x_{n+3} = x1^{-n-1} x2^{-n} (x2^{2(n+1)} + sum_{q+r<=n} C(n-r,q) C(n+1-q,r) x1^{2q} x2^{2r}).
inline LaurentPoly x_closed(std::int64_t n) {
    if (n < 0) throw DomainError("x_closed is defined for n >= 0");
    const BinomialTable c(n + 1);
    std::vector<Term> terms;
    terms.push_back({{-n - 1, n + 2}, 1});
    for (std::int64_t q = 0; q <= n; ++q) {
        for (std::int64_t r = 0; q + r <= n; ++r) {
            terms.push_back({{2 * q - n - 1, 2 * r - n}, c(n - r, q) * c(n + 1 - q, r)});
        }
    }
    return LaurentPoly::make(std::move(terms));
}

/// s_n = x1^{-n} x2^{-n} sum_{q+r<=n} C(n-r,q) C(n-q,r) x1^{2q} x2^{2r}.
inline LaurentPoly s_closed(std::int64_t n) {
    if (n < 0) throw DomainError("s_closed is defined for n >= 0");
    const BinomialTable c(n);
    std::vector<Term> terms;
    for (std::int64_t q = 0; q <= n; ++q) {
        for (std::int64_t r = 0; q + r <= n; ++r) {
            terms.push_back({{2 * q - n, 2 * r - n}, c(n - r, q) * c(n - q, r)});
        }
    }
    return LaurentPoly::make(std::move(terms));
}

/// s_1 written out: (x1^2 + x2^2 + 1) / (x1 x2).
inline LaurentPoly s1_literal() { return LaurentPoly::make({{1, -1, 1}, {-1, 1, 1}, {-1, -1, 1}}); }

// ---------------------------------------------------------------------------
// Verification reports

struct CheckResult {
    std::string identity;
    std::int64_t parameter = 0;
    bool passed = false;
    std::string detail;
};

class VerifyReport {
public:
    struct Summary {
        std::string identity;
        std::size_t passed = 0;
        std::size_t total = 0;
        std::int64_t first_failure = 0;
        std::string first_detail;
    };

    void add(CheckResult r) { checks_.push_back(std::move(r)); }

    void append(const VerifyReport& other) {
        checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
    }

    const std::vector<CheckResult>& checks() const noexcept { return checks_; }

    bool all_passed() const {
        return std::all_of(checks_.begin(), checks_.end(), [](const CheckResult& c) { return c.passed; });
    }

    std::size_t failures() const {
        return static_cast<std::size_t>(
            std::count_if(checks_.begin(), checks_.end(), [](const CheckResult& c) { return !c.passed; }));
    }

    /// Per-identity tallies, in order of first appearance.
    std::vector<Summary> summary() const {
        std::vector<Summary> out;
        for (const auto& c : checks_) {
            auto it = std::find_if(out.begin(), out.end(), [&](const Summary& s) { return s.identity == c.identity; });
            if (it == out.end()) {
                out.push_back({c.identity, 0, 0, 0, {}});
                it = std::prev(out.end());
            }
            ++it->total;
            if (c.passed) {
                ++it->passed;
            } else if (it->total - it->passed == 1) {
                it->first_failure = c.parameter;
                it->first_detail = c.detail;
            }
        }
        return out;
    }

private:
    std::vector<CheckResult> checks_;
};

// ---------------------------------------------------------------------------
// Engine

inline constexpr std::int64_t kDefaultMaxIndex = 1'000'000;

/// Memoizing calculator for x_m, s_n and f_N.
///
/// One instance owns one cache; it is not safe for concurrent mutation, but
/// the returned references stay valid for the lifetime of the engine.
class Engine {
public:
    /// How x_m for m >= 4 is obtained from its predecessors. x_3 always
    /// comes from the exchange relation, since s_1 is defined through it.
    enum class XRoute {
        linear,    ///< x_{m+1} = s_1 x_m - x_{m-1}
        exchange,  ///< x_{m+1} = (x_m^2 + 1) / x_{m-1}, exact division
    };

    struct Options {
        std::int64_t max_index = kDefaultMaxIndex;
        XRoute x_route = XRoute::linear;
        /// When false, only requested elements are cached, not the chain leading to them.
        bool retain_intermediates = true;
    };

    Engine() : Engine(Options{}) {}

    explicit Engine(Options options) : options_(options) {
        const LaurentPoly& x1 = store(ElementId::X(1), LaurentPoly::x1());
        const LaurentPoly& x2 = store(ElementId::X(2), LaurentPoly::x2());
        const LaurentPoly& x3 = store(ElementId::X(3), exchange_step(x1, x2, 3));
        const LaurentPoly& x0 = store(ElementId::X(0), swap_vars(x3));

        store(ElementId::S(-1), LaurentPoly{});
        store(ElementId::S(0), LaurentPoly::one());
        const LaurentPoly& s1 = store(ElementId::S(1), x0 * x3 - x1 * x2);
        if (s1 != s1_literal()) throw InternalError("s_1 = x_0 x_3 - x_1 x_2 disagrees with its expanded form");

        store(ElementId::FLittle(0), f_base(0));
        store(ElementId::FLittle(1), f_base(1));
    }

    const Options& options() const noexcept { return options_; }

    const LaurentPoly& x(std::int64_t m) {
        check_scale(m);
        return x_unchecked(m);
    }

    const LaurentPoly& s(std::int64_t n) {
        if (n < -1) throw DomainError("s_n is defined for n >= -1");
        check_scale(n);
        if (const LaurentPoly* hit = find(ElementId::S(n))) return *hit;
        return walk(ElementId::Kind::s, n, 0, [this](const LaurentPoly& older, const LaurentPoly& prev, std::int64_t) {
            return s(1) * prev - older;
        });
    }

    const LaurentPoly& f(std::int64_t n) {
        if (n < 0) throw DomainError("f_N is defined for N >= 0");
        check_scale(n);
        if (const LaurentPoly* hit = find(ElementId::FLittle(n))) return *hit;
        return walk(ElementId::Kind::f, n, 0, [](const LaurentPoly& older, const LaurentPoly& prev, std::int64_t k) {
            return f_step(prev, older, k);
        });
    }

    const LaurentPoly& get(ElementId id) {
        switch (id.kind) {
            case ElementId::Kind::x: return x(id.index);
            case ElementId::Kind::s: return s(id.index);
            case ElementId::Kind::f: return f(id.index);
        }
        throw InternalError("unknown element kind");
    }

    /// x_m^p x_{m+1}^q.
    LaurentPoly cluster_monomial(std::int64_t m, std::int64_t p, std::int64_t q) {
        if (p < 0 || q < 0) throw DomainError("cluster monomial exponents must be nonnegative");
        LaurentPoly a = pow(x(m), static_cast<std::uint64_t>(p));
        return a * pow(x(m + 1), static_cast<std::uint64_t>(q));
    }

    /// Exact checks, for n = 0..n_max, of the identities linking x, s and f.
    /// Failures, including exceptions raised while computing, are recorded
    /// in the report rather than thrown.
    VerifyReport verify_identities(std::int64_t n_max) {
        if (n_max < 0) throw DomainError("n_max must be nonnegative");
        VerifyReport report;
        const LaurentPoly x1 = LaurentPoly::x1();
        const LaurentPoly x2 = LaurentPoly::x2();

        record(report, "s1_product_formula", 1, [&] { return x(0) * x(3) - x1 * x2 == s1_literal(); });

        // Exchange chains driven by exact division, compared with the cached
        // values on a sample of indices: forward z_{m+1} = (z_m^2 + 1) / z_{m-1}
        // and backward y_{j-1} = (y_j^2 + 1) / y_{j+1}.
        const std::int64_t sample_limit = std::min(n_max, kDivisionSample);
        LaurentPoly z_prev = x1, z_cur = x2;  // z_1, z_2
        LaurentPoly y_next = x2, y_cur = x1;  // y_2, y_1
        bool forward_ok = true, backward_ok = true;

        for (std::int64_t n = 0; n <= n_max; ++n) {
            record(report, "s_equals_f_even", n, [&] { return s(n) == f(2 * n); });
            record(report, "x_equals_f_odd", n, [&] { return x(n + 3) == f(2 * n + 1); });
            record(report, "x1_times_x", n, [&] { return x1 * x(n + 3) == s(n) + x2 * x(n + 2); });
            record(report, "x2_times_s", n, [&] { return x2 * s(n) == x(n + 2) + x1 * s(n - 1); });
            record(report, "s1_linear", n + 2, [&] { return x(n + 3) == s(1) * x(n + 2) - x(n + 1); });
            record(report, "s1_linear", 1 - n, [&] { return x(2 - n) == s(1) * x(1 - n) - x(-n); });
            record(report, "exchange", n + 2, [&] { return x(n + 1) * x(n + 3) == x(n + 2) * x(n + 2) + LaurentPoly::one(); });
            record(report, "exchange", 1 - n, [&] { return x(-n) * x(2 - n) == x(1 - n) * x(1 - n) + LaurentPoly::one(); });
            record(report, "x_closed_form", n, [&] { return x(n + 3) == x_closed(n); });
            record(report, "s_closed_form", n, [&] { return s(n) == s_closed(n); });
            record(report, "swap_symmetry", n, [&] { return x(-n) == swap_vars(x(3 + n)); });
            record(report, "s_swap_invariance", n, [&] { return swap_vars(s(n)) == s(n); });

            if (n <= sample_limit && forward_ok) {
                record(report, "forward_exchange", n + 3, [&] {
                    LaurentPoly z_up = div_exact(z_cur * z_cur + LaurentPoly::one(), z_prev);
                    z_prev = std::move(z_cur);
                    z_cur = std::move(z_up);
                    forward_ok = z_cur == x(n + 3);
                    return forward_ok;
                });
            }
            if (n <= sample_limit && backward_ok) {
                // y_cur holds y_{1-n}; step down to y_{-n}.
                record(report, "backward_exchange", -n, [&] {
                    LaurentPoly y_down = div_exact(y_cur * y_cur + LaurentPoly::one(), y_next);
                    y_next = std::move(y_cur);
                    y_cur = std::move(y_down);
                    backward_ok = y_cur == x(-n);
                    return backward_ok;
                });
            }
        }
        return report;
    }

    /// All coefficients of x_m (m in [-n_max, n_max + 3]) and s_n (n in [0, n_max])
    /// are positive, and the term counts match the lattice-point counts.
    VerifyReport positivity_scan(std::int64_t n_max) {
        if (n_max < 0) throw DomainError("n_max must be nonnegative");
        VerifyReport report;
        auto positive = [](const LaurentPoly& p) {
            return std::all_of(p.begin(), p.end(), [](const Term& t) { return t.coeff > 0; });
        };
        for (std::int64_t m = -n_max; m <= n_max + 3; ++m) {
            record(report, "x_positive", m, [&] { return positive(x(m)); });
        }
        for (std::int64_t n = 0; n <= n_max; ++n) {
            record(report, "s_positive", n, [&] { return positive(s(n)); });
            const std::uint64_t points = lattice_points(n);
            record(report, "s_term_count", n, [&] { return s(n).size() == points; });
            record(report, "x_term_count", n, [&] { return x(n + 3).size() == points + 1; });
        }
        return report;
    }

    /// Test hook: adds 1 to one stored coefficient of `id` (index taken modulo
    /// the term count), computing the element first if needed.
    void corrupt_coefficient(ElementId id, std::size_t term_index) {
        std::vector<Term> terms = get(id).terms();
        if (terms.empty()) {
            terms.push_back({{0, 0}, 1});
        } else {
            terms[term_index % terms.size()].coeff += 1;
        }
        cache_[id] = LaurentPoly::make(std::move(terms));
    }

    std::size_t cache_size() const noexcept { return cache_.size(); }

    /// Number of (q, r) with q, r >= 0 and q + r <= n, counted one by one.
    static std::uint64_t lattice_points(std::int64_t n) {
        std::uint64_t count = 0;
        for (std::int64_t q = 0; q <= n; ++q) {
            for (std::int64_t r = 0; r <= n; ++r) {
                if (q + r <= n) ++count;
            }
        }
        return count;
    }

private:
    static constexpr std::int64_t kDivisionSample = 50;

    template <typename Fn>
    static void record(VerifyReport& report, const char* name, std::int64_t parameter, Fn&& check) {
        CheckResult r{name, parameter, false, {}};
        try {
            r.passed = check();
            if (!r.passed) r.detail = "polynomials differ";
        } catch (const std::exception& e) {
            r.detail = e.what();
        }
        report.add(std::move(r));
    }

    // x_m for m <= 0 needs x_{3-m}, which may lie just past the scale limit.
    const LaurentPoly& x_unchecked(std::int64_t m) {
        if (const LaurentPoly* hit = find(ElementId::X(m))) return *hit;
        if (m <= 0) return store(ElementId::X(m), swap_vars(x_unchecked(3 - m)));
        return walk(ElementId::Kind::x, m, 1, [this](const LaurentPoly& older, const LaurentPoly& prev, std::int64_t k) {
            if (options_.x_route == XRoute::linear) return s(1) * prev - older;
            return exchange_step(older, prev, k);
        });
    }

    static LaurentPoly exchange_step(const LaurentPoly& older, const LaurentPoly& prev, std::int64_t m) {
        try {
            return div_exact(prev * prev + LaurentPoly::one(), older);
        } catch (const ExactDivisionError& e) {
            throw InternalError("exchange relation is not exact at x_" + std::to_string(m) + ": " + e.what());
        }
    }

    void check_scale(std::int64_t index) const {
        if (index > options_.max_index || index < -options_.max_index) {
            throw ScaleError("index " + std::to_string(index) + " exceeds the limit " +
                             std::to_string(options_.max_index));
        }
    }

    const LaurentPoly* find(ElementId id) const {
        const auto it = cache_.find(id);
        return it == cache_.end() ? nullptr : &it->second;
    }

    const LaurentPoly& store(ElementId id, LaurentPoly value) {
        auto [it, fresh] = cache_.insert_or_assign(id, std::move(value));
        return it->second;
    }

    /// Advances a two-term recurrence from the highest cached adjacent pair
    /// below `target`; `base` and `base + 1` are always cached.
    template <typename Step>
    const LaurentPoly& walk(ElementId::Kind kind, std::int64_t target, std::int64_t base, Step step) {
        std::int64_t j = target - 1;
        while (j > base + 1 && !(find({kind, j}) && find({kind, j - 1}))) --j;

        const LaurentPoly* older = find({kind, j - 1});
        const LaurentPoly* prev = find({kind, j});
        LaurentPoly window[2];
        for (std::int64_t k = j + 1; k < target; ++k) {
            LaurentPoly next = step(*older, *prev, k);
            older = prev;
            if (options_.retain_intermediates) {
                prev = &store({kind, k}, std::move(next));
            } else {
                auto& slot = window[k % 2];  // never aliases *older
                slot = std::move(next);
                prev = &slot;
            }
        }
        return store({kind, target}, step(*older, *prev, target));
    }

    Options options_;
    std::map<ElementId, LaurentPoly> cache_;
};

}  // namespace cluster_a11

#endif  // CLUSTER_A11_CLUSTER_HPP
