#pragma once

#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "polyspace.hpp"

namespace hilbertfn {

inline long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

/// Conic/line/point counts for P^3 when d = 0, 2, 4 (mod 8).
struct Lemma31Params {
    long long a = 0, b = 0, c = 0, x = 0;
    bool b_integral = false;
};

/// Sundial-based counts for P^3 when d is odd or d = 6 (mod 8).
struct Lemma32Params {
    long long b = 0, b_star = 0, c = 0, x = 0;
    bool c_integral = false;
};

/// Split used in the inductive step for plane + lines in P^n.
struct InductionSplit {
    long long e_rho = 0, rho = 0, e_t = 0;
};

struct CriticalParams {
    int n = 0, d = 0;
    long long e = 0, e_star = 0; // plane + s lines: floor/ceil((C(n+d,n) - C(d+2,2)) / (d+1))
    long long e_bar = 0;         // floor((C(d+n-1,n) - C(d+1,2)) / d)
    long long t = 0, t_star = 0; // s lines: floor/ceil(C(n+d,n) / (d+1))
    std::optional<long long> x_even; // d(d+2)/8 for even d
    std::optional<Lemma31Params> lemma31;
    std::optional<Lemma32Params> lemma32;
    InductionSplit thm5;
};

inline bool lemma31_applies(int d) { return d >= 2 && (d % 8 == 0 || d % 8 == 2 || d % 8 == 4); }

// Odd d = 1 would give b = -1, so the sundial lemma starts at d = 3.
inline bool lemma32_applies(int d) { return (d >= 3 && d % 2 == 1) || (d >= 6 && d % 8 == 6); }

inline Lemma31Params lemma31_params(int d) {
    if (!lemma31_applies(d)) throw Error(Errc::unsupported_degree, "conic lemma needs d = 0, 2, 4 mod 8");
    Lemma31Params p;
    const long long c4 = binomial_ll(d + 3, 4);
    p.c = c4 / d;
    p.a = c4 - d * p.c;
    const long long b_num = binomial_ll(d + 3, 3) - p.a * (2LL * d + 1) - p.c;
    p.b_integral = b_num % (d + 1) == 0;
    p.b = floor_div(b_num, d + 1);
    p.x = binomial_ll(d + 1, 3) - (p.a + p.b) * (d - 1);
    return p;
}

inline Lemma32Params lemma32_params(int d) {
    if (!lemma32_applies(d)) throw Error(Errc::unsupported_degree, "sundial lemma needs d odd >= 3 or d = 6 mod 8");
    Lemma32Params p;
    const long long c4 = binomial_ll(d + 3, 4);
    p.c_integral = c4 % d == 0;
    p.c = floor_div(c4, d);
    const long long top = binomial_ll(d + 4, 4);
    p.b = floor_div(top, d + 1) - p.c - 2;
    p.b_star = ceil_div(top, d + 1) - p.c - 2;
    p.x = binomial_ll(d + 1, 3) - p.b * (d - 1);
    return p;
}

inline InductionSplit induction_split(int n, int d) {
    if (d < 1) throw Error(Errc::unsupported_degree, "split needs d >= 1");
    const long long num = binomial_ll(d + n - 1, n) - binomial_ll(d + 1, 2);
    InductionSplit s;
    s.e_rho = floor_div(num, d);
    s.rho = num - s.e_rho * d;
    return s;
}

inline CriticalParams critical_params(int n, int d) {
    if (n < 3) throw Error(Errc::dimension_mismatch, "critical parameters need n >= 3");
    if (d < 1) throw Error(Errc::unsupported_degree, "critical parameters need d >= 1");
    CriticalParams p;
    p.n = n;
    p.d = d;
    const long long all = binomial_ll(n + d, n);
    const long long plane = binomial_ll(d + 2, 2);
    p.e = floor_div(all - plane, d + 1);
    p.e_star = ceil_div(all - plane, d + 1);
    p.t = floor_div(all, d + 1);
    p.t_star = ceil_div(all, d + 1);
    p.e_bar = floor_div(binomial_ll(d + n - 1, n) - binomial_ll(d + 1, 2), d);
    if (d % 2 == 0) p.x_even = d * (d + 2LL) / 8;
    if (lemma31_applies(d)) p.lemma31 = lemma31_params(d);
    if (lemma32_applies(d)) p.lemma32 = lemma32_params(d);
    p.thm5 = induction_split(n, d);
    p.thm5.e_t = p.e - p.thm5.e_rho - 2 * p.thm5.rho;
    return p;
}

struct ParamCheck {
    std::string name;
    int n = 0; // 3 for the P^3 lemmas
    int d = 0;
    bool holds = false;
    std::string detail;
};

struct LemmaParamReport {
    int d_max = 0;
    int n_max = 0;
    std::vector<ParamCheck> checks;

    std::vector<ParamCheck> violations() const {
        std::vector<ParamCheck> out;
        for (const auto& c : checks)
            if (!c.holds) out.push_back(c);
        return out;
    }
    bool all_hold() const { return violations().empty(); }
    std::vector<ParamCheck> named(const std::string& name) const {
        std::vector<ParamCheck> out;
        for (const auto& c : checks)
            if (c.name == name) out.push_back(c);
        return out;
    }
};

/// Evaluates every parameter identity and inequality for d <= d_max (and
/// 5 <= n <= n_max, d >= 2 for the P^n induction step). Check names:
///   lemma31.b_integral, lemma31.x_range, lemma31.closed_form,
///   lemma32.c_integral, lemma32.b_positive, lemma32.x_range,
///   s4.case1, s4.case2, sn.bounds, lines.t_bound,
///   thm5.e_t_nonneg, thm5.rho_lt_d, thm5.e_rho_le_rho, thm5.rho_le_e_rho.
inline LemmaParamReport verify_lemma_params(int d_max, int n_max = 10) {
    if (d_max < 2) throw Error(Errc::bound_violation, "d_max must be >= 2");
    LemmaParamReport rep;
    rep.d_max = d_max;
    rep.n_max = n_max;
    auto add = [&](const char* name, int n, int d, bool holds, std::string detail) {
        rep.checks.push_back({name, n, d, holds, std::move(detail)});
    };
    auto str = [](long long v) { return std::to_string(v); };

    for (int d = 1; d <= d_max; ++d) {
        if (lemma31_applies(d)) {
            const auto p = lemma31_params(d);
            add("lemma31.b_integral", 3, d, p.b_integral, "b=" + str(p.b));
            add("lemma31.x_range", 3, d, 0 <= p.x && p.x < p.c, "x=" + str(p.x) + " c=" + str(p.c));
            // closed forms for d = 8h + 2, 8h + 4, 8h + 8
            const long long h = (d - 2) / 8, r = ((d - 2) % 8) / 2;
            long long a = 0, b = 0, shift = 0;
            if (r == 0) { a = d / 2; b = 8 * h * h + h + 1; shift = 2; }
            else if (r == 1) { a = 3 * d / 4; b = 8 * h * h + h; shift = 3; }
            else { a = d / 4; b = 8 * h * h + 17 * h + 10; shift = 1; }
            const bool closed = p.a == a && p.b == b && 4 * p.c == binomial_ll(d + 3, 3) - shift;
            add("lemma31.closed_form", 3, d, closed,
                "a=" + str(p.a) + " b=" + str(p.b) + " c=" + str(p.c));
            const long long t = floor_div(binomial_ll(d + 4, 4), d + 1);
            const long long ts = ceil_div(binomial_ll(d + 4, 4), d + 1);
            const long long rest = t - 2 * p.a - p.c;
            add("s4.case1", 4, d,
                1 <= p.a && p.a <= d - 1 && 0 <= rest && rest <= t - 2 * (d - 1) && t == ts && rest == p.b,
                "t=" + str(t) + " t-2a-c=" + str(rest));
        }
        if (lemma32_applies(d)) {
            const auto p = lemma32_params(d);
            add("lemma32.c_integral", 3, d, p.c_integral, "c=" + str(p.c));
            add("lemma32.b_positive", 3, d, p.b > 0, "b=" + str(p.b));
            add("lemma32.x_range", 3, d, 0 <= p.x && p.x < p.c, "x=" + str(p.x) + " c=" + str(p.c));
            const long long t = floor_div(binomial_ll(d + 4, 4), d + 1);
            const long long ts = ceil_div(binomial_ll(d + 4, 4), d + 1);
            add("s4.case2", 4, d,
                0 < p.b && p.b <= t - 2 * (d - 1) && 0 < p.b_star && p.b_star <= ts - 2 * (d - 1),
                "b=" + str(p.b) + " b*=" + str(p.b_star) + " t=" + str(t));
        }
        for (int n = 3; n <= n_max; ++n) {
            const long long t = floor_div(binomial_ll(n + d, n), d + 1);
            add("lines.t_bound", n, d, t >= 2LL * (d - 1), "t=" + str(t));
        }
        for (int n = 5; n <= n_max && d >= 2; ++n) {
            // S(n,d) from S(n-1,d): a = remainder, c = quotient of C(d+n-1,n) by d
            const long long num = binomial_ll(d + n - 1, n);
            const long long c = num / d, a = num - d * c;
            const long long t = floor_div(binomial_ll(n + d, n), d + 1);
            const long long ts = ceil_div(binomial_ll(n + d, n), d + 1);
            const bool ok = 0 <= a && a <= d - 1 && a <= c && c <= t - 2LL * (d - 1) &&
                            ts - c <= floor_div(binomial_ll(d + n - 1, d), d + 1);
            add("sn.bounds", n, d, ok, "a=" + str(a) + " c=" + str(c) + " t=" + str(t));
        }
        for (int n = 5; n <= n_max && d >= 2; ++n) {
            const auto p = critical_params(n, d);
            const auto& s = p.thm5;
            const long long e_t_star = p.e_star - s.e_rho - 2 * s.rho;
            add("thm5.e_t_nonneg", n, d, s.e_t >= 0 && e_t_star >= 0,
                "e=" + str(p.e) + " e_rho=" + str(s.e_rho) + " rho=" + str(s.rho));
            add("thm5.rho_lt_d", n, d, s.rho <= d - 1, "rho=" + str(s.rho));
            add("thm5.e_rho_le_rho", n, d, s.e_rho <= s.rho, "e_rho=" + str(s.e_rho) + " rho=" + str(s.rho));
            add("thm5.rho_le_e_rho", n, d, s.rho <= s.e_rho, "e_rho=" + str(s.e_rho) + " rho=" + str(s.rho));
        }
    }
    return rep;
}

} // namespace hilbertfn
