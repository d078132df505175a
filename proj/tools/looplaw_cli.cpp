#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "looplaw/anchors.hpp"
#include "looplaw/crrenewal.hpp"
#include "looplaw/eval.hpp"
#include "looplaw/levy.hpp"
#include "looplaw/looptree.hpp"
#include "looplaw/verify.hpp"

using json = nlohmann::ordered_json;
using namespace looplaw;

namespace {

constexpr const char* kVersion = "0.1.0";

enum Exit { ok = 0, check_failed = 1, usage = 2, domain = 3 };

struct Common {
    std::uint64_t seed = 1;
    std::size_t replicas = 0;
    double eps = 1e-3;
    std::string out;
    std::string format;
    unsigned threads = default_threads();
};

void add_common(CLI::App* sub, Common& c, const std::vector<std::string>& formats, const std::string& default_format) {
    c.format = default_format;
    sub->add_option("--seed", c.seed, "master seed")->capture_default_str();
    sub->add_option("--replicas", c.replicas, "Monte Carlo replicas (0: command default)");
    sub->add_option("--eps", c.eps, "small-jump cutoff")->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--out", c.out, "output file (default stdout)");
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember(formats))->capture_default_str();
    sub->add_option("--threads", c.threads, "worker threads; results do not depend on it")->check(CLI::PositiveNumber);
}

std::string number(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

struct Output {
    std::string command_line;
    json params = json::object();
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void write(const Common& c, const std::string& body) const {
        json m;
        m["command_line"] = command_line;
        m["seed"] = c.seed;
        m["replicas"] = c.replicas;
        m["params"] = params;
        m["code_version"] = kVersion;
        m["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.out.empty()) {
            std::cout << body;
            std::cerr << m.dump() << '\n';
            return;
        }
        std::ofstream f(c.out, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open " + c.out);
        f << body;
        std::ofstream mf(c.out + ".manifest.json", std::ios::binary);
        mf << m.dump(2) << '\n';
    }
};

// --key value or --key=value pairs left over after option parsing
ParamMap parse_params(const std::vector<std::string>& extras) {
    ParamMap m;
    for (std::size_t i = 0; i < extras.size(); ++i) {
        std::string key = extras[i], value;
        if (key.rfind("--", 0) != 0) throw CLI::ValidationError("eval", "unexpected argument '" + key + "'");
        key = key.substr(2);
        if (const auto eq = key.find('='); eq != std::string::npos) {
            value = key.substr(eq + 1);
            key = key.substr(0, eq);
        } else {
            if (i + 1 >= extras.size()) throw CLI::ValidationError("eval", "parameter --" + key + " needs a value");
            value = extras[++i];
        }
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(value, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != value.size()) throw CLI::ValidationError("eval", "parameter --" + key + " is not a number: " + value);
        m[key] = v;
    }
    return m;
}

int cmd_eval(const std::string& name, const std::vector<std::string>& extras, const Common& c, Output& o) {
    const auto* f = find_formula(name);
    if (!f) {
        std::cerr << "unknown formula '" << name << "'; known:";
        for (const auto& e : formula_registry()) std::cerr << ' ' << e.name;
        std::cerr << '\n';
        return usage;
    }
    const auto params = parse_params(extras);
    for (const auto& k : f->params) {
        const bool have = k == "lqg" ? params.count("kappa") + params.count("gamma") + params.count("gamma2") > 0
                                     : params.count(k) > 0;
        if (!have)
            throw CLI::ValidationError("eval", name + " needs --" + (k == "lqg" ? std::string("kappa, --gamma or --gamma2") : k));
    }
    const double v = f->fn(params);
    json j;
    j["formula"] = f->name;
    j["params"] = json::object();
    for (const auto& [k, x] : params) j["params"][k] = x;
    j["value"] = v;
    j["paper_anchor"] = f->anchor;
    o.params = j["params"];
    o.params["formula"] = f->name;
    o.write(c, j.dump() + '\n');
    return ok;
}

json row_json(const CheckRow& r) {
    json j;
    j["check"] = r.check;
    j["target"] = r.target;
    j["estimate"] = r.estimate;
    j["stderr"] = r.stderr;
    j["tolerance"] = r.tolerance;
    j["pass"] = r.pass;
    j["anchor"] = r.anchor;
    return j;
}

int cmd_verify(const std::string& suite, std::optional<double> kappa, const Common& c, Output& o) {
    VerifyOptions vo;
    vo.seed = c.seed;
    vo.replicas = c.replicas;
    vo.eps = c.eps;
    vo.kappa = kappa;
    vo.threads = c.threads;
    const auto rows = run_suite(suite, vo);
    std::ostringstream os;
    bool all = true;
    if (c.format == "csv") os << "check,target,estimate,stderr,tolerance,pass,anchor\n";
    for (const auto& r : rows) {
        all = all && r.pass;
        if (c.format == "csv")
            os << r.check << ',' << number(r.target) << ',' << number(r.estimate) << ',' << number(r.stderr) << ','
               << number(r.tolerance) << ',' << (r.pass ? "true" : "false") << ',' << r.anchor << '\n';
        else
            os << row_json(r).dump() << '\n';
    }
    o.params["suite"] = suite;
    o.params["eps"] = c.eps;
    if (kappa) o.params["kappa"] = *kappa;
    o.write(c, os.str());
    return all ? ok : check_failed;
}

int cmd_looptree(double nu, std::size_t steps, const Common& c, Output& o) {
    Rng rng(c.seed, 0);
    const auto e = sample_excursion(nu, steps, rng);
    const auto t = build_looptree(e);
    std::string body;
    if (c.format == "dot") {
        body = looptree_to_dot(t);
    } else {
        json j;
        j["nu"] = nu;
        j["steps"] = steps;
        j["seed"] = c.seed;
        j["total_boundary"] = t.total_boundary;
        j["loops"] = json::array();
        for (const auto& l : t.loops) j["loops"].push_back({{"length", l.length}, {"parent", l.parent}, {"position", l.position}});
        body = j.dump() + '\n';
    }
    o.params["nu"] = nu;
    o.params["steps"] = steps;
    o.write(c, body);
    return ok;
}

int cmd_levy_sim(double beta, double a, const Common& c, Output& o) {
    LevySimConfig cfg;
    cfg.beta = beta;
    cfg.jump_cutoff_eps = c.eps;
    cfg.rng_seed = c.seed;
    cfg.threads = c.threads;
    cfg.validate();
    const std::size_t n = c.replicas ? c.replicas : 1000;
    const double record = 10.0 * c.eps;
    struct Row {
        double tau, largest;
        std::size_t count;
    };
    const auto rows = run_replicas<Row>(
        n, cfg.rng_seed,
        [&](Rng& rng, std::size_t) {
            const auto p = simulate_to_hitting(a, cfg, rng, record);
            double big = 0.0;
            for (const auto& j : p.jumps) big = std::max(big, j.size);
            return Row{p.tau_a, big, p.jump_count};
        },
        cfg.threads);
    std::ostringstream os;
    if (c.format == "csv") os << "replica,tau,inverse_tau,jump_count,largest_jump\n";
    std::vector<double> inv;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& r = rows[i];
        inv.push_back(1.0 / r.tau);
        if (c.format == "csv")
            os << i << ',' << number(r.tau) << ',' << number(1.0 / r.tau) << ',' << r.count << ',' << number(r.largest) << '\n';
        else
            os << json{{"replica", i}, {"tau", r.tau}, {"inverse_tau", 1.0 / r.tau}, {"jump_count", r.count},
                       {"largest_jump", r.largest}}
                      .dump()
               << '\n';
    }
    o.params["beta"] = beta;
    o.params["a"] = a;
    o.params["eps"] = c.eps;
    o.params["replicas_used"] = n;
    if (n >= 2) {
        const auto e = summarize(inv);
        // E[1/tau_a] = a^-beta pi / sin(-pi beta)
        o.params["inverse_tau_mean"] = e.mean;
        o.params["inverse_tau_stderr"] = e.stderr;
        o.params["inverse_tau_target"] = inverse_mean_target(beta) * std::pow(a, -beta);
    }
    o.write(c, os.str());
    return ok;
}

int cmd_cr_law(double kappa, std::size_t nodes, const Common& c, Output& o) {
    CRGridConfig grid;
    grid.nodes = nodes;
    const auto law = build_cr_gap_law(from_kappa(kappa), grid);
    std::string body;
    if (c.format == "csv") {
        body = cr_law_to_csv(law);
    } else {
        json j;
        j["kappa"] = kappa;
        j["tail_rate"] = law.tail_rate;
        j["b"] = law.tabulated_cdf.abscissae;
        j["F"] = law.tabulated_cdf.values;
        body = j.dump() + '\n';
    }
    o.params["kappa"] = kappa;
    o.params["nodes"] = nodes;
    o.write(c, body);
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"looplaw: closed-form loop laws and Monte Carlo checks"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    Common ce, cv, ct, cl, cc;
    std::string formula, suite = "identities";
    std::optional<double> verify_kappa;
    double nu = 1.5, beta = 1.5, level = 1.0, cr_kappa = 6.0;
    std::size_t steps = 1000, nodes = 2048;

    auto* ev = app.add_subcommand("eval", "evaluate one closed form; parameters as --name value");
    ev->add_option("formula", formula, "formula name")->required();
    ev->allow_extras();
    add_common(ev, ce, {"json"}, "json");

    auto* ve = app.add_subcommand("verify", "run a check suite");
    ve->add_option("suite", suite, "suite")->check(CLI::IsMember(suite_names()))->capture_default_str();
    ve->add_option("--kappa", verify_kappa, "restrict the renewal checks to one kappa");
    add_common(ve, cv, {"csv", "json"}, "csv");

    auto* lt = app.add_subcommand("looptree", "sample one discrete looptree");
    lt->add_option("--nu", nu, "stable index in (1,2)")->capture_default_str();
    lt->add_option("--steps", steps, "excursion length (>= 100)")->capture_default_str();
    add_common(lt, ct, {"json", "dot"}, "json");

    auto* ls = app.add_subcommand("levy-sim", "first-passage paths of the stable process");
    ls->add_option("--beta", beta, "stable index in (1,2)")->capture_default_str();
    ls->add_option("--a", level, "target level -a")->check(CLI::PositiveNumber)->capture_default_str();
    add_common(ls, cl, {"csv", "json"}, "csv");

    auto* cr = app.add_subcommand("cr-law", "tabulated law of -log CR");
    cr->add_option("--kappa", cr_kappa, "loop parameter in (8/3,8)")->capture_default_str();
    cr->add_option("--nodes", nodes, "grid nodes")->capture_default_str();
    add_common(cr, cc, {"csv", "json"}, "csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    Output out;
    for (int i = 0; i < argc; ++i) out.command_line += (i ? " " : "") + std::string(argv[i]);
    try {
        if (*ev) return cmd_eval(formula, ev->remaining(), ce, out);
        if (*ve) return cmd_verify(suite, verify_kappa, cv, out);
        if (*lt) return cmd_looptree(nu, steps, ct, out);
        if (*ls) return cmd_levy_sim(beta, level, cl, out);
        if (*cr) return cmd_cr_law(cr_kappa, nodes, cc, out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << '\n';
        return usage;
    } catch (const domain_error& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return domain;
    } catch (const numeric_error& e) {
        std::cerr << "numeric error: " << e.what() << '\n';
        return domain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return domain;
    }
    return usage;
}
