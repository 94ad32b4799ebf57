#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mubkit/constructors.hpp"
#include "mubkit/designs.hpp"
#include "mubkit/io.hpp"
#include "mubkit/measures.hpp"
#include "mubkit/qkd.hpp"
#include "mubkit/verify.hpp"
#include "mubkit/version.hpp"

namespace mubkit::cli {

namespace {

using nlohmann::json;

// relative outputs land in $MUBKIT_OUT_DIR when it is set
std::string resolve_out(const std::string& path) {
    const char* dir = std::getenv("MUBKIT_OUT_DIR");
    if (!dir || !*dir) return path;
    std::filesystem::path p(path);
    if (p.is_absolute()) return path;
    return (std::filesystem::path(dir) / p).string();
}

struct ConstructArgs {
    std::string kind;
    int p = 0, q = 0, k = 0, s = 0;
    std::string design_file;
    bool real = false, strict_real = false, complex_only = false;
    double tol = 1e-9;
    std::string out;
    std::string save_design;
};

json run_config_json(const std::string& command, const json& params) {
    json j = params;
    j["command"] = command;
    return j;
}

void attach_metadata(json& payload, const json& config) {
    payload["run_config"] = config;
    payload["tool_version"] = mubkit::kVersion;
}

FlatPolicy policy_of(const ConstructArgs& a) {
    if (a.complex_only) return FlatPolicy::Complex;
    if (a.strict_real) return FlatPolicy::RequireReal;
    return FlatPolicy::PreferReal;
}

int cmd_construct(const ConstructArgs& a, std::ostream& out, std::ostream& err) {
    BasisSet set;
    std::optional<ConstructionResult> built;
    std::optional<ResolvableDesign> design;

    if (a.kind == "mub-prime") {
        set = prime_mubs(a.p);
    } else if (a.kind == "weak") {
        set = weak_mubs(a.p, a.q);
    } else if (a.kind == "rtd") {
        design = resolvable_transversal_design(a.k, a.s);
    } else if (a.kind == "q2m1") {
        design = q2_minus_1_design(a.q);
    } else if (a.kind == "kts15") {
        design = kirkman_kts15();
    } else if (a.kind == "from-design-file") {
        design = design_from_json(load_json(a.design_file));
        auto v = validate_design(*design);
        if (!v.ok) {
            err << "invalid design file: " << v.problems.front() << "\n";
            return 2;
        }
    } else {
        err << "unknown construction kind: " << a.kind << "\n";
        return 2;
    }

    if (design) {
        built = rbd_to_bases(*design, policy_of(a));
        set = built->set;
    }

    json params{{"kind", a.kind}, {"tol", a.tol}};
    if (a.p) params["p"] = a.p;
    if (a.q) params["q"] = a.q;
    if (a.k) params["k"] = a.k;
    if (a.s) params["s"] = a.s;
    if (!a.design_file.empty()) params["design"] = a.design_file;
    params["flat"] = a.complex_only ? "complex" : (a.strict_real ? "strict-real" : "prefer-real");
    if (!a.out.empty()) params["out"] = a.out;
    if (!a.save_design.empty()) params["save_design"] = a.save_design;
    const json config = run_config_json("construct", params);

    out << "constructed " << set.size() << " bases in dimension " << set.dim << " ("
        << set.provenance << ")\n";
    double predicted_beta = 1.0;  // exact MUBs
    if (built) predicted_beta = built->predicted_beta;
    else if (a.kind == "weak") predicted_beta = std::sqrt(static_cast<double>(std::max(a.p, a.q)));
    out << "predicted beta = " << predicted_beta << "\n";
    if (set.size() >= 2) {
        const auto cls = classify_set(set);
        out << "classification = " << to_string(cls.label) << ", beta = " << cls.beta << "\n";
        out << "delta = {";
        for (std::size_t i = 0; i < cls.delta.size(); ++i)
            out << (i ? ", " : "") << cls.delta[i];
        out << "}\n";
    } else {
        out << "classification = n/a (single basis)\n";
    }
    out << "sparsity = " << sparsity(set) << "\n";

    if (!a.out.empty()) {
        json payload = basis_set_to_json(set);
        attach_metadata(payload, config);
        const std::string path = resolve_out(a.out);
        save_json(payload, path);
        out << "wrote " << path << "\n";
    }
    if (!a.save_design.empty()) {
        if (!design) {
            err << "--save-design applies only to design-backed kinds\n";
            return 2;
        }
        json payload = design_to_json(*design);
        attach_metadata(payload, config);
        const std::string path = resolve_out(a.save_design);
        save_json(payload, path);
        out << "wrote " << path << "\n";
    }
    return 0;
}

struct MeasureArgs {
    std::string in;
    std::string json_out, csv_out;
    std::vector<double> exponents;
    double cluster_tol = 1e-7;
};

int cmd_measure(const MeasureArgs& a, std::ostream& out, std::ostream&) {
    BasisSet set = basis_set_from_json(load_json(a.in));
    const auto exps = a.exponents.empty() ? default_omega_exponents() : a.exponents;
    MeasureReport rep = measure_set(set, exps, a.cluster_tol);

    json params{{"in", a.in}, {"cluster_tol", a.cluster_tol}, {"t", exps}};
    if (!a.json_out.empty()) params["json"] = a.json_out;
    if (!a.csv_out.empty()) params["csv"] = a.csv_out;
    const json config = run_config_json("measure", params);

    out << "d = " << rep.dim << ", r = " << rep.basis_count << " ("
        << to_string(rep.classification.label) << ", beta = " << rep.classification.beta
        << ")\n";
    out << "tau = " << rep.tau << ", sigma = " << rep.sigma << ", ASD = " << rep.asd
        << ", Omega_2 = " << rep.omega_t.at(2.0) << ", epsilon = " << rep.epsilon << "\n";

    if (!a.json_out.empty()) {
        json payload = measure_report_to_json(rep);
        attach_metadata(payload, config);
        save_json(payload, resolve_out(a.json_out));
        out << "wrote " << resolve_out(a.json_out) << "\n";
    }
    if (!a.csv_out.empty()) {
        const std::string path = resolve_out(a.csv_out);
        std::ofstream f(path);
        if (!f) throw std::runtime_error("cannot open for writing: " + path);
        f << measure_report_to_csv(rep);
        f << "# run_config: " << config.dump() << "\n";
        f << "# tool_version: " << mubkit::kVersion << "\n";
        out << "wrote " << path << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& in, double tol, std::ostream& out, std::ostream&) {
    BasisSet set = basis_set_from_json(load_json(in));
    VerifyReport rep = verify_basis_set(set, tol);
    for (const auto& c : rep.checks) {
        out << (c.passed ? "[ok]   " : "[FAIL] ") << c.name << "\n";
        for (const auto& v : c.violations) out << "       " << v << "\n";
    }
    if (!rep.all_passed()) {
        out << "verification failed\n";
        return 1;
    }
    out << "all checks passed\n";
    return 0;
}

struct QkdArgs {
    std::string in;
    long long trials = 100000;
    std::uint64_t seed = 1;
    bool exact = false;
    std::string out;
};

int cmd_qkd(const QkdArgs& a, std::ostream& out, std::ostream&) {
    BasisSet set = basis_set_from_json(load_json(a.in));
    const int d = static_cast<int>(set.dim);
    const int r = static_cast<int>(set.size());

    QkdOutcome mc = intercept_resend_sift_error(set, a.trials, a.seed);
    out << "raw rate = " << mc.raw_rate << " bits/signal (d = " << d << ", k = " << r << ")\n";
    out << "monte carlo sift error = " << mc.sift_error << " +- " << mc.std_error << " ("
        << mc.trials << " trials, seed " << mc.seed << ")\n";
    out << "mub closed form        = " << mub_sift_error(d, r) << "\n";

    json payload = qkd_outcome_to_json(mc);
    if (a.exact) {
        const double exact = intercept_resend_exact(set);
        out << "exhaustive expectation = " << exact << "\n";
        payload["exact_sift_error"] = exact;
    }

    json params{{"in", a.in}, {"trials", a.trials}, {"seed", a.seed}, {"exact", a.exact}};
    if (!a.out.empty()) params["out"] = a.out;
    attach_metadata(payload, run_config_json("qkd", params));
    if (!a.out.empty()) {
        save_json(payload, resolve_out(a.out));
        out << "wrote " << resolve_out(a.out) << "\n";
    }
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"construction and closeness measures for (approximate) mutually unbiased bases"};
    app.set_version_flag("--version", mubkit::kVersion);
    app.require_subcommand(1);

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "build a basis set and write it as JSON");
    construct->add_option("--kind", ca.kind,
                          "mub-prime | weak | rtd | q2m1 | kts15 | from-design-file")
        ->required();
    construct->add_option("--p", ca.p, "prime (mub-prime, weak)");
    construct->add_option("--q", ca.q, "prime/prime power (weak, q2m1)");
    construct->add_option("--k", ca.k, "block size (rtd)");
    construct->add_option("--s", ca.s, "blocks per class (rtd)");
    construct->add_option("--design", ca.design_file, "design JSON (from-design-file)");
    construct->add_flag("--real", ca.real, "prefer a real Hadamard flat matrix");
    construct->add_flag("--strict-real", ca.strict_real, "require a real Hadamard flat matrix");
    construct->add_flag("--complex", ca.complex_only, "force the Fourier flat matrix");
    construct->add_option("--tol", ca.tol, "validation tolerance");
    construct->add_option("--out,-o", ca.out, "basis-set JSON output path");
    construct->add_option("--save-design", ca.save_design, "also write the design JSON");

    MeasureArgs ma;
    auto* measure = app.add_subcommand("measure", "evaluate all measures of a basis-set file");
    measure->add_option("--in,-i", ma.in, "basis-set JSON")->required();
    measure->add_option("--json", ma.json_out, "report JSON output path");
    measure->add_option("--csv", ma.csv_out, "flat CSV output path");
    measure->add_option("--t", ma.exponents, "coherence exponents (default 0.5 1 2 3 4)");
    measure->add_option("--cluster-tol", ma.cluster_tol, "overlap clustering tolerance");

    std::string vin;
    double vtol = 1e-9;
    auto* verify = app.add_subcommand("verify", "run the invariant suite on a basis-set file");
    verify->add_option("--in,-i", vin, "basis-set JSON")->required();
    verify->add_option("--tol", vtol, "absolute tolerance");

    QkdArgs qa;
    auto* qkd = app.add_subcommand("qkd", "intercept-resend simulation and closed forms");
    qkd->add_option("--in,-i", qa.in, "basis-set JSON")->required();
    qkd->add_option("--trials", qa.trials, "Monte Carlo trials");
    qkd->add_option("--seed", qa.seed, "RNG seed");
    qkd->add_flag("--exact", qa.exact, "also evaluate the exhaustive expectation");
    qkd->add_option("--out,-o", qa.out, "outcome JSON output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << mubkit::kVersion << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (construct->parsed()) return cmd_construct(ca, out, err);
        if (measure->parsed()) return cmd_measure(ma, out, err);
        if (verify->parsed()) return cmd_verify(vin, vtol, out, err);
        if (qkd->parsed()) return cmd_qkd(qa, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace mubkit::cli
