#include <algorithm>
#include <functional>
#include <iomanip>
#include <iostream>

#include "qlogic_cli/commands.hpp"
#include "qlogic_cli/json_io.hpp"

namespace qlogic::cli {

namespace {

struct Trial {
    bool ok;
    double residual;
};

using CheckFn = std::function<Trial(RandomSource &, int, const Tolerance &)>;

struct Check {
    const char *suite;
    const char *name;
    CheckFn run;
};

double pdist(const Projection &p, const Projection &q) {
    return (p.matrix() - q.matrix()).norm();
}

double excess(const Projection &p, const Projection &q) {
    return (p.matrix() - q.matrix() * p.matrix()).norm();
}

Projection proper(RandomSource &rng, int d) {
    return rng.projection(d, rng.uniform_int(1, d - 1));
}

Trial within(double residual, const Tolerance &tol) {
    return {residual <= tol.eps_compare, residual};
}

Trial eig_reconstruction(RandomSource &rng, int d, const Tolerance &tol) {
    const ComplexMatrix a = rng.hermitian(d, rng.coin());
    const EigenDecomposition e = hermitian_eig(a, tol);
    const ComplexMatrix back = e.vectors * e.values.cast<Complex>().asDiagonal() * e.vectors.adjoint();
    const double orth = (e.vectors.adjoint() * e.vectors - ComplexMatrix::Identity(d, d)).norm();
    return within(std::max((back - a).norm() / std::max(1.0, a.norm()), orth), tol);
}

Trial nullspace_of_complement(RandomSource &rng, int d, const Tolerance &tol) {
    const Projection p = rng.projection(d);
    const ComplexMatrix c = ComplexMatrix::Identity(d, d) - p.matrix();
    return within(pdist(nullspace_projection(c, tol), p), tol);
}

Trial orthomodular(RandomSource &rng, int d, const Tolerance &tol) {
    const Projection p = proper(rng, d);
    const Projection q = join(p, rng.projection(d, 1), tol);
    return within(pdist(q, join(p, meet(ortho(p), q, tol), tol)), tol);
}

Trial de_morgan(RandomSource &rng, int d, const Tolerance &tol) {
    const Projection p = rng.projection(d);
    const Projection q = rng.projection(d);
    return within(pdist(ortho(meet(p, q, tol)), join(ortho(p), ortho(q), tol)), tol);
}

Trial hardegree(RandomSource &rng, int d, const Tolerance &tol) {
    const Projection p = proper(rng, d);
    const Projection q = rng.coin() ? join(p, rng.projection(d, 1), tol) : proper(rng, d);
    const bool ordered = leq(p, q, tol);
    const bool commuting = commutes(p, q, tol);
    double worst = 0.0;
    bool ok = true;
    for (ConditionalKind j : kAllConditionals) {
        const Projection c = conditional(j, p, q, tol);
        worst = std::max({worst, excess(meet(p, c, tol), q), excess(meet(ortho(q), c, tol), ortho(p))});
        if (commuting) {
            worst = std::max(worst, pdist(c, join(ortho(p), q, tol)));
        }
        ok = ok && c.is_identity() == ordered;
    }
    return {ok && worst <= tol.eps_compare, worst};
}

Trial conditional_ranges(RandomSource &rng, int d, const Tolerance &tol) {
    const Projection p = rng.projection(d);
    const Projection q = rng.projection(d);
    double worst = pdist(biconditional_polynomial(p, q, tol), biconditional_range(p, q, tol));
    for (ConditionalKind j : kAllConditionals) {
        worst = std::max(worst, pdist(conditional(j, p, q, tol), conditional_range(j, p, q, tol)));
        worst = std::max(worst, pdist(biconditional(j, p, q, tol), biconditional_range(p, q, tol)));
    }
    return within(worst, tol);
}

Trial commutator_forms(RandomSource &rng, int d, const Tolerance &tol) {
    const int n = rng.uniform_int(2, 3);
    std::vector<Projection> f = rng.coin() ? rng.block_pool(d, n) : std::vector<Projection>{};
    while (static_cast<int>(f.size()) < n) {
        f.push_back(proper(rng, d));
    }
    return within(pdist(commutator_set(f, tol), commutator_takeuti(f, tol)), tol);
}

std::vector<Projection> mixed_pool(RandomSource &rng, int d) {
    switch (rng.uniform_int(0, 2)) {
        case 0:
            return rng.generic_pool(d, 3);
        case 1:
            return rng.block_pool(d, 3);
        default:
            return rng.commuting_pool(d, 3);
    }
}

Trial equality_laws(RandomSource &rng, int d, const Tolerance &tol) {
    const std::vector<Projection> pool = mixed_pool(rng, d);
    const QSet u = rng.qset(d, 2, pool);
    const QSet v = rng.qset(d, 2, pool);
    double worst = 0.0;
    for (ConditionalKind j : kAllConditionals) {
        TruthEngine engine(j, tol);
        const Projection refl = engine.equal(u, u);
        worst = std::max({worst, (ComplexMatrix::Identity(d, d) - refl.matrix()).norm(),
                          pdist(engine.equal(u, v), engine.equal(v, u))});
    }
    return within(worst, tol);
}

Trial transfer_corpus(RandomSource &rng, int d, const Tolerance &tol) {
    static const std::vector<Formula> corpus = [] {
        std::vector<Formula> fs;
        for (const CorpusFormula &c : zfc_corpus()) {
            fs.push_back(parse_corpus_formula(c));
        }
        return fs;
    }();
    const std::vector<Projection> pool = mixed_pool(rng, d);
    Bindings env;
    for (std::string_view v : kCorpusVariables) {
        env.emplace(std::string(v), rng.qset(d, rng.uniform_int(0, d <= 4 ? 3 : 2), pool));
    }
    int violations = 0;
    for (const Formula &f : corpus) {
        for (ConditionalKind j : kAllConditionals) {
            violations += transfer_check(f, env, j, tol).holds ? 0 : 1;
        }
    }
    return {violations == 0, static_cast<double>(violations)};
}

Trial takeuti_round_trip(RandomSource &rng, int d, const Tolerance &tol) {
    const ComplexMatrix a = rng.hermitian(d, rng.coin());
    const Observable back = real_to_observable(observable_to_real(Observable(a, tol)), tol);
    return within((back.matrix() - a).norm(), tol);
}

Trial equality_equivalence(RandomSource &rng, int d, const Tolerance &tol) {
    auto [u, v] = rng.partially_equal_reals(d);
    if (rng.coin(0.25)) {
        v = rng.quantum_real(d, d);
    }
    const Projection e = equality_truth_value(u, v, tol);
    const StateVector psi = (rng.coin() && e.rank() > 0) ? rng.state_in(e) : rng.state(d);
    const EqualityEquivalents r = equality_equivalents(u, v, psi, tol);
    return {r.agree(), *std::max_element(std::begin(r.residuals), std::end(r.residuals))};
}

Trial correlation_equivalence(RandomSource &rng, int d, const Tolerance &tol) {
    CorrelationReport r;
    if (rng.coin()) {
        const CorrelatedTriple t = rng.correlated_triple(d);
        r = perfect_correlation(t.a, t.b, t.psi, tol);
        return {r.agree() && r.equality_range, 1.0 - r.diagonal_mass};
    }
    r = perfect_correlation(rng.observable(d, rng.coin()), rng.observable(d, rng.coin()), rng.state(d), tol);
    return {r.agree(), 1.0 - r.diagonal_mass};
}

Trial qborel(RandomSource &rng, int d, const Tolerance &tol) {
    const Observable x = rng.observable(d, rng.coin());
    const std::vector<double> &spec = x.spectrum();
    auto pick = [&] {
        return rng.coin() ? spec[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(spec.size()) - 1))]
                          : rng.uniform(spec.front() - 1.0, spec.back() + 1.0);
    };
    double s = pick();
    double t = pick();
    if (s == t) {
        t += 0.5;
    }
    if (s > t) {
        std::swap(s, t);
    }
    double worst = 0.0;
    bool ok = true;
    for (ConditionalKind j : kAllConditionals) {
        const QBorelReport r = qborel_identities(x, s, t, j, tol);
        ok = ok && r.all_hold();
        for (const IdentityCheck &c : r.items) {
            worst = std::max(worst, c.residual);
        }
    }
    return {ok, worst};
}

Trial spectral_order(RandomSource &rng, int d, const Tolerance &tol) {
    const Observable x = rng.observable(d, rng.coin());
    const Observable y = rng.coin() ? rng.observable_above(x) : rng.observable(d, rng.coin());
    const bool spec = spectral_order_leq(x, y, tol);
    bool ok = true;
    for (ConditionalKind j : kAllConditionals) {
        ok = ok && order_truth_value(x, y, j, tol).is_identity() == spec;
    }
    return {ok, 0.0};
}

Trial order_measurement(RandomSource &rng, int d, const Tolerance &tol) {
    const Observable x = rng.observable(d, rng.coin());
    const Observable y = rng.coin(0.2) ? rng.observable_above(x) : rng.observable(d, rng.coin());
    StateVector psi = rng.state(d);
    if (rng.coin()) {
        const Projection v = order_truth_value(x, y, kAllConditionals[rng.uniform_int(0, 2)], tol);
        if (v.rank() > 0) {
            psi = rng.state_in(v);
        }
    }
    const OrderMeasurementReport r = order_measurement_check(x, y, psi, tol);
    const double norm = std::max(std::abs(r.xy.total() - 1.0), std::abs(r.yx.total() - 1.0));
    return {r.all_agree() && norm <= 1e-9, norm};
}

const std::vector<Check> &checks() {
    static const std::vector<Check> all = {
        {"linalg", "eig_reconstruction", eig_reconstruction},
        {"linalg", "nullspace_of_complement", nullspace_of_complement},
        {"lattice", "orthomodular_law", orthomodular},
        {"lattice", "de_morgan", de_morgan},
        {"lattice", "hardegree_conditions", hardegree},
        {"lattice", "range_characterizations", conditional_ranges},
        {"lattice", "commutator_forms", commutator_forms},
        {"universe", "equality_reflexive_symmetric", equality_laws},
        {"formula", "transfer_corpus", transfer_corpus},
        {"reals", "takeuti_round_trip", takeuti_round_trip},
        {"reals", "equality_equivalents", equality_equivalence},
        {"reals", "perfect_correlation", correlation_equivalence},
        {"reals", "qborel_identities", qborel},
        {"reals", "order_iff_spectral_order", spectral_order},
        {"measurement", "order_biconditionals", order_measurement},
    };
    return all;
}

}  // namespace

std::vector<CheckSummary> run_selftest_suites(const SelftestOptions &opts) {
    opts.tol.validate();
    std::vector<CheckSummary> out;
    const std::vector<Check> &all = checks();
    for (std::size_t c = 0; c < all.size(); ++c) {
        for (int d = opts.dim_lo; d <= opts.dim_hi; ++d) {
            RandomSource rng(opts.seed * 1000003ULL + c * 1009ULL + static_cast<std::uint64_t>(d));
            CheckSummary s{all[c].suite, all[c].name, d, opts.trials, 0, 0.0};
            for (int t = 0; t < opts.trials; ++t) {
                Trial r{false, 0.0};
                try {
                    r = all[c].run(rng, d, opts.tol);
                } catch (const Error &) {
                    r = {false, 0.0};
                }
                s.failures += r.ok ? 0 : 1;
                s.max_residual = std::max(s.max_residual, r.residual);
            }
            out.push_back(s);
        }
    }
    return out;
}

int cmd_selftest(const SelftestOptions &opts, std::ostream &out, std::ostream &err) {
    if (opts.trials == 0) {
        err << "warning: --trials 0 runs no trials; the pass is vacuous\n";
    }
    const std::vector<CheckSummary> results = run_selftest_suites(opts);
    int failed = 0;
    for (const CheckSummary &s : results) {
        const bool pass = s.failures == 0;
        failed += pass ? 0 : 1;
        out << Json{{"suite", s.suite},
                    {"check", s.check},
                    {"dim", s.dim},
                    {"trials", s.trials},
                    {"failures", s.failures},
                    {"max_residual", s.max_residual},
                    {"pass", pass}}
                   .dump()
            << '\n';
        if (!pass) {
            err << "FAIL " << s.suite << "/" << s.check << " d=" << s.dim << ": " << s.failures << " of "
                << s.trials << " trials\n";
        }
    }
    out << Json{{"command", "selftest"},
                {"seed", opts.seed},
                {"dims", {opts.dim_lo, opts.dim_hi}},
                {"trials", opts.trials},
                {"tolerance", {{"eps_rank", opts.tol.eps_rank}, {"eps_compare", opts.tol.eps_compare}}},
                {"checks", results.size()},
                {"failed", failed},
                {"vacuous", opts.trials == 0},
                {"pass", failed == 0}}
               .dump()
        << '\n';
    err << "selftest: " << results.size() - static_cast<std::size_t>(failed) << "/" << results.size()
        << " checks passed (seed " << opts.seed << ", dims " << opts.dim_lo << ".." << opts.dim_hi << ", "
        << opts.trials << " trials each)\n";
    return failed == 0 ? kOk : kSuiteFailure;
}

}  // namespace qlogic::cli
