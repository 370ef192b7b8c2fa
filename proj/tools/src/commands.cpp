#include "qlogic_cli/commands.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qlogic_cli/json_io.hpp"

namespace qlogic::cli {

namespace {

Json tolerance_json(const Tolerance &tol) {
    return {{"eps_rank", tol.eps_rank}, {"eps_compare", tol.eps_compare}};
}

Json projection_report(const Projection &p) {
    return {{"value", matrix_to_json(p.matrix())},
            {"rank", p.rank()},
            {"is_zero", p.is_zero()},
            {"is_identity", p.is_identity()}};
}

ConditionalKind conditional_from_flag(const std::string &text) {
    const std::optional<ConditionalKind> k = parse_conditional_kind(text);
    if (!k) {
        throw ConfigError("unknown conditional \"" + text + "\"");
    }
    return *k;
}

std::uint64_t seed_from_env() {
    const char *env = std::getenv("QLOGIC_SEED");
    if (env == nullptr || *env == '\0') {
        return SelftestOptions{}.seed;
    }
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(env, &used);
        if (env[used] != '\0') {
            throw ConfigError("QLOGIC_SEED is not an unsigned integer");
        }
        return v;
    } catch (const std::logic_error &) {
        throw ConfigError("QLOGIC_SEED is not an unsigned integer");
    }
}

}  // namespace

int exit_code_for(const std::exception &e) {
    if (dynamic_cast<const ConfigError *>(&e) != nullptr) {
        return kConfigError;
    }
    if (dynamic_cast<const DimMismatch *>(&e) != nullptr) {
        return kDimensionError;
    }
    if (dynamic_cast<const UnboundedQuantifier *>(&e) != nullptr ||
        dynamic_cast<const SetTooLarge *>(&e) != nullptr ||
        dynamic_cast<const RankBudgetExceeded *>(&e) != nullptr) {
        return kUnsupported;
    }
    if (dynamic_cast<const Error *>(&e) != nullptr || dynamic_cast<const Json::exception *>(&e) != nullptr) {
        return kParseError;
    }
    return kSuiteFailure;
}

std::pair<int, int> parse_dims(const std::string &text) {
    const std::size_t sep = text.find("..");
    int lo = 0;
    int hi = 0;
    try {
        std::size_t used = 0;
        if (sep == std::string::npos) {
            lo = hi = std::stoi(text, &used);
            if (used != text.size()) {
                throw ConfigError("bad --dims");
            }
        } else {
            const std::string a = text.substr(0, sep);
            const std::string b = text.substr(sep + 2);
            lo = std::stoi(a, &used);
            if (used != a.size()) {
                throw ConfigError("bad --dims");
            }
            hi = std::stoi(b, &used);
            if (used != b.size()) {
                throw ConfigError("bad --dims");
            }
        }
    } catch (const std::logic_error &) {
        throw ConfigError("--dims expects \"lo..hi\" or a single dimension, got \"" + text + "\"");
    }
    if (lo < 2 || hi < lo || hi > 16) {
        throw ConfigError("--dims must satisfy 2 <= lo <= hi <= 16");
    }
    return {lo, hi};
}

int cmd_eval(const EvalOptions &opts, std::ostream &out, std::ostream &err) {
    opts.tol.validate();
    const Registry registry = registry_from_json(load_json_file(opts.registry_file), opts.tol);
    const Formula f = parse(load_text_file(opts.formula_file), registry);
    const TruthValue t = evaluate(f, opts.conditional, {}, opts.tol);
    Json line = {{"command", "eval"},
                 {"formula", to_string(f)},
                 {"conditional", to_string(opts.conditional)},
                 {"tolerance", tolerance_json(opts.tol)},
                 {"dim", t.value.dim()}};
    line.update(projection_report(t.value));
    line["strict"] = !t.value.is_identity();
    out << line.dump() << '\n';
    err << "eval [" << to_string(opts.conditional) << "]: rank " << t.value.rank() << " of " << t.value.dim()
        << (t.value.is_identity() ? ", truth value I" : t.value.is_zero() ? ", truth value 0 (strict)" : " (strict)")
        << '\n';
    return kOk;
}

int cmd_order(const OrderOptions &opts, std::ostream &out, std::ostream &err) {
    opts.tol.validate();
    const Observable x = observable_from_json(load_json_file(opts.x_file), opts.tol);
    const Observable y = observable_from_json(load_json_file(opts.y_file), opts.tol);
    const bool spectral = spectral_order_leq(x, y, opts.tol);
    bool consistent = true;
    Json values = Json::array();
    for (ConditionalKind j : opts.conditionals) {
        const Projection v = order_truth_value(x, y, j, opts.tol);
        consistent = consistent && v.is_identity() == spectral;
        Json item = {{"conditional", to_string(j)}};
        item.update(projection_report(v));
        values.push_back(std::move(item));
        err << "order [" << to_string(j) << "]: rank " << v.rank() << " of " << v.dim() << '\n';
    }
    Json line = {{"command", "order"},
                 {"tolerance", tolerance_json(opts.tol)},
                 {"dim", x.dim()},
                 {"spectral_order_leq", spectral},
                 {"truth_values", std::move(values)}};
    bool agree = true;
    if (opts.psi_file) {
        const StateVector psi = state_from_json(load_json_file(*opts.psi_file));
        const OrderMeasurementReport r = order_measurement_check(x, y, psi, opts.tol);
        Json verdicts = Json::array();
        for (const OrderVerdict &v : r.verdicts) {
            verdicts.push_back({{"conditional", to_string(v.kind)},
                                {"member", v.member},
                                {"membership_residual", v.membership_residual},
                                {"tail_zero", v.tail_zero},
                                {"tail_mass", v.tail_mass},
                                {"agrees", v.agrees()}});
            err << "measurement [" << to_string(v.kind) << "]: member " << (v.member ? "yes" : "no")
                << ", tail mass " << v.tail_mass << '\n';
        }
        line["measurement"] = {{"verdicts", std::move(verdicts)},
                               {"mass_x_exceeds_y", r.xy.mass_second_exceeds()},
                               {"all_agree", r.all_agree()}};
        agree = r.all_agree();
    }
    line["consistent"] = consistent && agree;
    out << line.dump() << '\n';
    err << "spectral order X <= Y: " << (spectral ? "yes" : "no") << '\n';
    return consistent && agree ? kOk : kSuiteFailure;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Quantum set theory and quantum reals workbench", "qlogic"};
    app.require_subcommand(1);

    double eps_rank = Tolerance{}.eps_rank;
    double eps_compare = Tolerance{}.eps_compare;
    std::string out_path;
    std::string conditional;
    auto common = [&](CLI::App *sub) {
        sub->add_option("--eps-rank", eps_rank, "Relative rank cutoff");
        sub->add_option("--eps-compare", eps_compare, "Comparison tolerance");
        sub->add_option("--out", out_path, "Write JSON lines to this file instead of stdout");
    };

    EvalOptions eval;
    CLI::App *eval_cmd = app.add_subcommand("eval", "Evaluate a formula over a registry of QSets");
    eval_cmd->add_option("formula", eval.formula_file, "Formula text file")->required();
    eval_cmd->add_option("registry", eval.registry_file, "Registry JSON file")->required();
    eval_cmd->add_option("--conditional", conditional, "sasaki | contrapositive | relevance");
    common(eval_cmd);

    SelftestOptions selftest;
    std::string dims = "2..6";
    std::optional<std::uint64_t> seed;
    CLI::App *self_cmd = app.add_subcommand("selftest", "Run the property suites on random instances");
    self_cmd->add_option("--dims", dims, "Dimension range lo..hi");
    self_cmd->add_option("--trials", selftest.trials, "Trials per check and dimension");
    self_cmd->add_option("--seed", seed, "Base seed (fallback: QLOGIC_SEED)");
    common(self_cmd);

    OrderOptions order;
    std::string psi;
    CLI::App *order_cmd = app.add_subcommand("order", "Order truth values of two observables");
    order_cmd->add_option("x", order.x_file, "Observable X JSON file")->required();
    order_cmd->add_option("y", order.y_file, "Observable Y JSON file")->required();
    order_cmd->add_option("psi", psi, "Optional state JSON file");
    order_cmd->add_option("--conditional", conditional, "Restrict to one conditional");
    common(order_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, err, err);
        return code == 0 ? kOk : kConfigError;
    }

    const auto start = std::chrono::steady_clock::now();
    int code = kOk;
    try {
        const Tolerance tol{eps_rank, eps_compare};
        tol.validate();
        std::ofstream file;
        if (!out_path.empty()) {
            file.open(out_path);
            if (!file) {
                throw ConfigError("cannot open --out file " + out_path);
            }
        }
        std::ostream &sink = out_path.empty() ? out : file;
        if (eval_cmd->parsed()) {
            eval.tol = tol;
            if (!conditional.empty()) {
                eval.conditional = conditional_from_flag(conditional);
            }
            code = cmd_eval(eval, sink, err);
        } else if (self_cmd->parsed()) {
            selftest.tol = tol;
            std::tie(selftest.dim_lo, selftest.dim_hi) = parse_dims(dims);
            if (selftest.trials < 0) {
                throw ConfigError("--trials must be nonnegative");
            }
            selftest.seed = seed ? *seed : seed_from_env();
            code = cmd_selftest(selftest, sink, err);
        } else {
            order.tol = tol;
            if (!psi.empty()) {
                order.psi_file = psi;
            }
            if (!conditional.empty()) {
                order.conditionals = {conditional_from_flag(conditional)};
            }
            code = cmd_order(order, sink, err);
        }
    } catch (const std::exception &e) {
        code = exit_code_for(e);
        err << "error: " << e.what() << '\n';
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    err << "wall time: " << seconds << " s\n";
    return code;
}

}  // namespace qlogic::cli
