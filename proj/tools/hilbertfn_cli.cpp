#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <hilbertfn/hilbertfn.hpp>

namespace hf = hilbertfn;

namespace {

constexpr const char* seed_env = "HILBERTFN_SEED";
constexpr std::uint64_t default_seed = 1;
// Rational arithmetic is exact but slow; keep matrices small.
constexpr long long rational_max_columns = 210;

struct Options {
    std::optional<std::uint64_t> seed;
    std::uint32_t modulus = 2147483647u;
    int trials = 3;
    std::string mode = "prime-field";
    std::string output = "table";

    std::string target; // configuration, suite id or instance
    std::optional<int> d;
    std::optional<int> d_max;
    std::optional<int> n;
    std::optional<int> n_max;
    std::string s_range;
    std::string budget = "default";
    std::string family = "plane-lines";
    bool no_expect = false;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t resolve_seed(const Options& o) {
    if (o.seed) return *o.seed;
    if (const char* env = std::getenv(seed_env)) {
        try {
            std::size_t used = 0;
            const auto v = std::stoull(env, &used, 0);
            if (used == std::string(env).size()) return v;
        } catch (const std::exception&) {
        }
        throw UsageError(std::string(seed_env) + " is not an unsigned integer");
    }
    return default_seed;
}

hf::OutputFormat output_format(const std::string& s) {
    if (s == "table") return hf::OutputFormat::table;
    if (s == "csv") return hf::OutputFormat::csv;
    return hf::OutputFormat::json;
}

std::vector<int> degree_list(const Options& o, int lowest) {
    if (!o.d && !o.d_max) throw UsageError("give --d or --d-max");
    const int lo = o.d ? *o.d : lowest;
    const int hi = o.d_max ? *o.d_max : lo;
    if (lo < lowest || hi < lo) throw UsageError("bad degree range");
    std::vector<int> out;
    for (int d = lo; d <= hi; ++d) out.push_back(d);
    return out;
}

hf::ConfigShape load_shape(const std::string& target) {
    if (target.empty()) throw UsageError("missing configuration");
    if (std::filesystem::is_regular_file(target)) return hf::shape_from_json(hf::load_json_file(target));
    return hf::parse_shorthand(target);
}

/// "P3: 2 pairs + triple" or a JSON instance file.
hf::InstanceSpec load_instance(const std::string& target) {
    if (target.empty()) throw UsageError("missing instance");
    if (std::filesystem::is_regular_file(target)) return hf::instance_from_json(hf::load_json_file(target));
    static const std::regex head(R"(^\s*[pP]\s*(\d+)\s*:(.*)$)");
    static const std::regex term(R"(^\s*(?:(\d+)\s*)?(pair|triple|(\d+)-group)s?\s*$)");
    std::smatch m;
    if (!std::regex_match(target, m, head)) throw hf::Error(hf::Errc::parse_error, "expected 'P<n>: ...'");
    hf::InstanceSpec spec;
    spec.instance.n = std::stoi(m[1].str());
    std::stringstream ss(m[2].str());
    std::string item;
    while (std::getline(ss, item, '+')) {
        std::smatch t;
        if (!std::regex_match(item, t, term)) throw hf::Error(hf::Errc::parse_error, "cannot parse group '" + item + "'");
        const int count = t[1].matched ? std::stoi(t[1].str()) : 1;
        const int size = t[3].matched ? std::stoi(t[3].str()) : (t[2].str() == "pair" ? 2 : 3);
        for (int i = 0; i < count; ++i) spec.instance.groups.push_back({size, {}});
    }
    return spec;
}

void check_rational_size(const Options& o, int n, int d) {
    if (o.mode == "rational" && hf::binomial(n + d, n) > rational_max_columns)
        throw UsageError("rational mode is limited to C(n+d,n) <= " + std::to_string(rational_max_columns));
}

hf::Budget budget_for(const Options& o) {
    hf::Budget b;
    if (o.budget == "small") b = {4, 3, o.trials, 3003};
    else if (o.budget == "default") b = {5, 4, o.trials, 3003};
    else if (o.budget == "full") b = {6, 6, o.trials, 3003};
    else throw UsageError("--budget must be small, default or full");
    if (o.n_max) b.n_max = *o.n_max;
    if (o.n) b.n_max = *o.n;
    if (o.d_max) b.d_max = *o.d_max;
    b.trials = o.trials;
    if (o.mode == "rational") b.max_columns = rational_max_columns;
    return b;
}

/// "3:7" (inclusive range) or "1,4,9".
std::vector<long long> parse_s_range(const std::string& s) {
    std::vector<long long> out;
    try {
        const auto colon = s.find(':');
        if (colon != std::string::npos) {
            const long long lo = std::stoll(s.substr(0, colon)), hi = std::stoll(s.substr(colon + 1));
            if (lo < 0 || hi < lo) throw UsageError("bad --s-range");
            for (long long v = lo; v <= hi; ++v) out.push_back(v);
        } else {
            std::stringstream ss(s);
            std::string item;
            while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
        }
    } catch (const std::logic_error&) {
        throw UsageError("bad --s-range '" + s + "'");
    }
    return out;
}

template <hf::ExactField F>
int cmd_hf(const Options& o, const F& f, const hf::RunInfo& info) {
    const auto start = std::chrono::steady_clock::now();
    const auto shape = load_shape(o.target);
    const auto degrees = degree_list(o, 0);
    for (int d : degrees) check_rational_size(o, shape.n, d);
    const hf::GenericSampler sampler(info.seed);
    const auto recs = hf::hilbert_table(hf::builder_for(shape, f), degrees, o.trials, sampler);
    const bool expect = !o.no_expect && !shape.empty();
    bool ok = true;
    std::vector<hf::ReportRow> rows;
    for (const auto& r : recs) {
        hf::ReportRow row{shape.n, r.d, shape.describe(), std::to_string(r.hf), std::to_string(r.ideal_dim), "", ""};
        if (expect) {
            const long long e = static_cast<long long>(hf::expected_ideal_dim(shape, r.d));
            row.expected = std::to_string(e);
            const bool pass = e == r.ideal_dim && r.trials_agreed;
            row.verdict = pass ? "pass" : "fail";
            ok = ok && pass;
        }
        if (!r.trials_agreed) std::cerr << "warning: trials disagree at d=" << r.d << "\n";
        rows.push_back(std::move(row));
    }
    hf::write_report(std::cout, output_format(o.output), rows, info,
                     std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    return ok ? 0 : 1;
}

template <hf::ExactField F>
int cmd_verify(const Options& o, const F& f, const hf::RunInfo& info) {
    const auto start = std::chrono::steady_clock::now();
    const auto budget = budget_for(o);
    std::vector<std::string> ids;
    if (o.target == "all") ids = hf::suite_ids();
    else if (std::find(hf::suite_ids().begin(), hf::suite_ids().end(), o.target) != hf::suite_ids().end()) ids = {o.target};
    else throw hf::Error(hf::Errc::unknown_suite, "unknown suite '" + o.target + "'");

    bool ok = true;
    std::vector<hf::ReportRow> rows;
    std::vector<std::string> notes;
    for (const auto& id : ids) {
        const auto res = hf::run_suite(id, budget, f, info.seed);
        for (auto& r : hf::suite_rows(res)) rows.push_back(std::move(r));
        for (const auto& n : res.notes) notes.push_back(id + ": " + n);
        for (const auto& c : res.failures())
            std::cerr << "FAIL " << id << ": " << c.inputs << " computed " << c.computed << ", expected " << c.expected << "\n";
        ok = ok && res.pass();
    }
    const auto fmt = output_format(o.output);
    hf::write_report(std::cout, fmt, rows, info,
                     std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    if (fmt == hf::OutputFormat::table)
        for (const auto& n : notes) std::cout << "note: " << n << "\n";
    return ok ? 0 : 1;
}

template <hf::ExactField F>
int cmd_apolar(const Options& o, const F& f, const hf::RunInfo& info) {
    const auto start = std::chrono::steady_clock::now();
    auto spec = load_instance(o.target);
    std::vector<int> degrees;
    if (o.d || o.d_max) degrees = degree_list(o, 1);
    else
        for (int d = spec.d_lo; d <= spec.d_hi; ++d) degrees.push_back(d);
    const hf::GenericSampler sampler(info.seed);
    bool ok = true;
    std::vector<hf::ReportRow> rows;
    for (int d : degrees) {
        check_rational_size(o, spec.instance.n, d);
        auto inst = spec.instance;
        inst.d = d;
        const auto a = hf::decomposable(inst, o.trials, f, sampler.split(static_cast<std::uint64_t>(d)));
        std::string label = std::to_string(inst.groups.size()) + " groups: " + (a.yes ? "yes" : "no") + ", " +
                            (a.certified ? "certified" : "computed, not certified");
        rows.push_back({inst.n, d, label, std::to_string(a.span_rank), std::to_string(a.defect), "",
                        a.duality_holds && a.trials_agreed ? "pass" : "fail"});
        ok = ok && a.duality_holds && a.trials_agreed;
    }
    hf::write_report(std::cout, output_format(o.output), rows, info,
                     std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    return ok ? 0 : 1;
}

template <hf::ExactField F>
int cmd_sweep(const Options& o, const F& f, const hf::RunInfo& info) {
    const auto start = std::chrono::steady_clock::now();
    if (!o.n) throw UsageError("sweep needs --n");
    const auto fam = o.family == "lines" ? hf::Family::lines_only
                     : o.family == "plane-lines" ? hf::Family::plane_lines
                                                 : throw UsageError("--family must be plane-lines or lines");
    const auto degrees = degree_list(o, 1);
    for (int d : degrees) check_rational_size(o, *o.n, d);
    std::optional<std::vector<long long>> ss;
    if (!o.s_range.empty()) ss = parse_s_range(o.s_range);
    const hf::GenericSampler sampler(info.seed);
    const auto table = hf::verify_bipolynomial(*o.n, degrees.front(), degrees.back(), fam, ss, o.trials, f, sampler);
    bool ok = true;
    std::vector<hf::ReportRow> rows;
    for (const auto& r : table) {
        const long long total = hf::binomial_ll(r.n + r.d, r.n);
        rows.push_back({r.n, r.d, std::to_string(r.s), std::to_string(total - r.computed), std::to_string(r.computed),
                        std::to_string(r.expected), r.pass ? "pass" : "fail"});
        ok = ok && r.pass;
    }
    hf::write_report(std::cout, output_format(o.output), rows, info,
                     std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    return ok ? 0 : 1;
}

int cmd_params(const Options& o) {
    if (!o.n) throw UsageError("params needs --n");
    const auto degrees = degree_list(o, 1);
    hf::json arr = hf::json::array();
    for (int d : degrees) {
        const auto p = hf::critical_params(*o.n, d);
        hf::json j{{"n", p.n}, {"d", p.d}, {"e", p.e}, {"e_star", p.e_star}, {"e_bar", p.e_bar},
                   {"t", p.t}, {"t_star", p.t_star},
                   {"thm5", {{"e_rho", p.thm5.e_rho}, {"rho", p.thm5.rho}, {"e_T", p.thm5.e_t}}}};
        if (p.x_even) j["x"] = *p.x_even;
        if (p.lemma31) j["lemma31"] = {{"a", p.lemma31->a}, {"b", p.lemma31->b}, {"c", p.lemma31->c}, {"x", p.lemma31->x}};
        if (p.lemma32)
            j["lemma32"] = {{"b", p.lemma32->b}, {"b_star", p.lemma32->b_star}, {"c", p.lemma32->c}, {"x", p.lemma32->x}};
        arr.push_back(std::move(j));
    }
    if (o.output == "json") {
        std::cout << arr.dump(2) << "\n";
        return 0;
    }
    const bool csv = o.output == "csv";
    std::cout << (csv ? "n,d,e,e_star,e_bar,t,t_star,e_rho,rho,e_T\n" : "n  d  e  e*  e_bar  t  t*  e_rho  rho  e_T\n");
    const char* sep = csv ? "," : "  ";
    for (const auto& j : arr)
        std::cout << j["n"] << sep << j["d"] << sep << j["e"] << sep << j["e_star"] << sep << j["e_bar"] << sep << j["t"]
                  << sep << j["t_star"] << sep << j["thm5"]["e_rho"] << sep << j["thm5"]["rho"] << sep << j["thm5"]["e_T"]
                  << "\n";
    return 0;
}

template <hf::ExactField F>
int cmd_profile(const Options& o, const F& f, const hf::RunInfo& info) {
    const auto start = std::chrono::steady_clock::now();
    const auto shape = load_shape(o.target);
    if (!o.d_max) throw UsageError("profile needs --d-max");
    check_rational_size(o, shape.n, *o.d_max);
    const hf::GenericSampler sampler(info.seed);
    const auto p = hf::transition_profile(shape, *o.d_max, o.trials, f, sampler);
    std::vector<hf::ReportRow> rows;
    for (const auto& r : p.rows) {
        const bool full = r.hf == r.ambient, poly = r.hf == r.polynomial;
        rows.push_back({shape.n, r.d, shape.describe(), std::to_string(r.hf), hf::BigInt(r.ambient - r.hf).str(), r.polynomial.str(),
                        full && poly ? "both" : full ? "full" : poly ? "polynomial" : "neither"});
    }
    const auto fmt = output_format(o.output);
    hf::write_report(std::cout, fmt, rows, info, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    if (fmt == hf::OutputFormat::table) {
        std::cout << "last degree with HF = C(n+d,n): " << p.last_full_degree << "\n";
        std::cout << "first degree with HF = sum of component polynomials: "
                  << (p.first_poly_degree ? std::to_string(*p.first_poly_degree) : "none") << "\n";
        std::cout << "regimes tile: " << (p.tiles ? "yes" : "no") << "\n";
    }
    return 0;
}

template <hf::ExactField F>
int dispatch(const std::string& cmd, const Options& o, const F& f, const hf::RunInfo& info) {
    if (cmd == "hf") return cmd_hf(o, f, info);
    if (cmd == "verify") return cmd_verify(o, f, info);
    if (cmd == "apolar") return cmd_apolar(o, f, info);
    if (cmd == "sweep") return cmd_sweep(o, f, info);
    if (cmd == "params") return cmd_params(o);
    return cmd_profile(o, f, info);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hilbert functions of generic configurations of linear spaces"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    Options o;
    std::uint64_t seed = 0;
    auto* seed_opt = app.add_option("--seed", seed, std::string("random seed (default: $") + seed_env + " or 1)");
    app.add_option("--modulus", o.modulus, "prime modulus for prime-field mode (< 2^32)");
    app.add_option("--trials", o.trials, "independent generic draws per value")->check(CLI::Range(1, 16));
    app.add_option("--mode", o.mode, "prime-field or rational")->check(CLI::IsMember({"prime-field", "rational"}));
    app.add_option("--output", o.output, "table, csv or json")->check(CLI::IsMember({"table", "csv", "json"}));
    app.add_option("--d", o.d, "degree (or first degree of a range)");
    app.add_option("--d-max", o.d_max, "last degree");
    app.add_option("--n", o.n, "ambient dimension (sweep, params) or n_max (verify)");
    app.add_option("--n-max", o.n_max, "largest ambient dimension for verify");
    app.add_option("--s-range", o.s_range, "line counts, 'lo:hi' or 'a,b,c'");
    app.add_option("--budget", o.budget, "verify budget preset: small, default, full");

    auto* hf_cmd = app.add_subcommand("hf", "Hilbert function of a configuration");
    hf_cmd->add_option("config", o.target, "shorthand such as 'P4: plane + 6 lines', or a JSON file")->required();
    hf_cmd->add_flag("--no-expect", o.no_expect, "skip the expected-dimension comparison");
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite, or 'all'");
    verify_cmd->add_option("suite", o.target, "suite id or 'all'")->required();
    auto* apolar_cmd = app.add_subcommand("apolar", "decomposition question for groups of linear forms");
    apolar_cmd->add_option("instance", o.target, "'P3: 2 pairs + triple' or a JSON file")->required();
    auto* sweep_cmd = app.add_subcommand("sweep", "plane + lines or lines-only sweep against the closed form");
    sweep_cmd->add_option("--family", o.family, "plane-lines or lines");
    app.add_subcommand("params", "critical counts and lemma parameters");
    auto* profile_cmd = app.add_subcommand("profile", "HF against C(n+d,n) and the component polynomials");
    profile_cmd->add_option("config", o.target, "shorthand or JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (*seed_opt) o.seed = seed;

    try {
        const std::string cmd = app.get_subcommands().front()->get_name();
        hf::RunInfo info{resolve_seed(o), o.trials, o.mode};
        if (o.mode == "rational") return dispatch(cmd, o, hf::RationalField{}, info);
        return dispatch(cmd, o, hf::PrimeField(o.modulus), info);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const hf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
