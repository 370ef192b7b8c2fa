// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "support.hpp"

using namespace qlogic;
using namespace qlogic::testing;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

double residual_leq(const Projection &p, const Projection &q) {
    return (p.matrix() - q.matrix() * p.matrix()).norm();
}

struct ProjectionPair {
    Projection p;
    Projection q;
};

Projection proper_projection(RandomSource &rng, int d) {
    return rng.projection(d, rng.uniform_int(1, d - 1));
}

std::vector<ProjectionPair> hardegree_instances() {
    RandomSource rng(1001);
    std::vector<ProjectionPair> out;
    for (int d : {2, 3, 4, 6}) {
        for (int trial = 0; trial < 500; ++trial) {
            const Projection p = proper_projection(rng, d);
            switch (trial % 4) {
                case 0:
                    out.push_back({p, join(p, rng.projection(d, 1))});
                    break;
                case 1: {
                    const std::vector<Projection> c = rng.commuting_pool(d, 2);
                    out.push_back({c[0], c[1]});
                    break;
                }
                case 2: {
                    const std::vector<Projection> b = rng.block_pool(d, 2);
                    out.push_back({b[0], b[1]});
                    break;
                }
                default:
                    out.push_back({p, proper_projection(rng, d)});
                    break;
            }
        }
    }
    return out;
}

Outcome criterion_hardegree(const std::vector<ProjectionPair> &pairs) {
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    int failures = 0;
    int commuting = 0;
    int ordered = 0;
    for (const ProjectionPair &pq : pairs) {
        const bool ord = leq(pq.p, pq.q);
        const bool com = commutes(pq.p, pq.q);
        ordered += ord ? 1 : 0;
        commuting += com ? 1 : 0;
        for (ConditionalKind j : kAllConditionals) {
            const Projection c = conditional(j, pq.p, pq.q);
            const double mp = residual_leq(meet(pq.p, c), pq.q);
            const double mt = residual_leq(meet(ortho(pq.q), c), ortho(pq.p));
            double e = 0.0;
            if (ord) {
                e = (ComplexMatrix::Identity(c.dim(), c.dim()) - c.matrix()).norm();
            } else if (c.is_identity()) {
                e = 1.0;
            }
            const double lb = com ? dist(c, join(ortho(pq.p), pq.q)) : 0.0;
            const double r = std::max({mp, mt, e, lb});
            worst = std::max(worst, r);
            failures += r <= 1e-8 ? 0 : 1;
        }
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char buf[256];
    std::snprintf(buf, sizeof buf, "%zu pairs x 3, %d ordered, %d commuting, max residual %.2e, %d failures, %.2f s",
                  pairs.size(), ordered, commuting, worst, failures, seconds);
    return {failures == 0 && seconds < 10.0, buf};
}

Outcome criterion_ranges(const std::vector<ProjectionPair> &pairs) {
    double worst = 0.0;
    for (const ProjectionPair &pq : pairs) {
        for (ConditionalKind j : kAllConditionals) {
            worst = std::max(worst, dist(conditional(j, pq.p, pq.q), conditional_range(j, pq.p, pq.q)));
            worst = std::max(worst, dist(biconditional(j, pq.p, pq.q), biconditional_range(pq.p, pq.q)));
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu pairs x 3, max residual %.2e", pairs.size(), worst);
    return {worst <= 1e-8, buf};
}

Outcome criterion_commutators() {
    RandomSource rng(1003);
    int mismatches = 0;
    int nontrivial = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int d = 2 + trial % 3;
        const int n = 2 + (trial / 3) % 2;
        std::vector<Projection> f;
        switch (trial % 4) {
            case 0:
                f = rng.block_pool(d, n);
                break;
            case 1:
                f = rng.commuting_pool(d, n);
                break;
            default:
                for (int k = 0; k < n; ++k) {
                    f.push_back(proper_projection(rng, d));
                }
                break;
        }
        const Projection bk = commutator_set(f);
        mismatches += dist(bk, commutator_takeuti(f)) <= 1e-8 ? 0 : 1;
        nontrivial += (!bk.is_zero() && !bk.is_identity()) ? 1 : 0;
    }
    return {mismatches == 0, "200 families, " + std::to_string(nontrivial) + " with a proper commutator, " +
                                 std::to_string(mismatches) + " mismatches"};
}

Outcome criterion_transfer() {
    RandomSource rng(1004);
    std::vector<Formula> corpus;
    for (const CorpusFormula &c : zfc_corpus()) {
        corpus.push_back(parse_corpus_formula(c));
    }
    int violations = 0;
    int checks = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int d = 2 + trial % 3;
        std::vector<Projection> pool;
        switch (trial % 3) {
            case 0:
                pool = rng.generic_pool(d, 3);
                break;
            case 1:
                pool = rng.block_pool(d, 3);
                break;
            default:
                pool = rng.commuting_pool(d, 3);
                break;
        }
        Bindings env;
        for (std::string_view v : kCorpusVariables) {
            env.emplace(std::string(v), rng.qset(d, rng.uniform_int(0, 3), pool));
        }
        for (const Formula &f : corpus) {
            for (ConditionalKind j : kAllConditionals) {
                ++checks;
                violations += transfer_check(f, env, j).holds ? 0 : 1;
            }
        }
    }
    return {violations == 0 && checks == 3000,
            std::to_string(checks) + " checks, " + std::to_string(violations) + " violations"};
}

Outcome criterion_converse() {
    RandomSource rng(1005);
    const Formula f = parse_corpus_formula(zfc_corpus()[8]);
    const QSet zero = QSet::empty(2);
    int instances = 0;
    int failures = 0;
    int max_rank = 0;
    for (int trial = 0; trial < 50; ++trial) {
        Projection p = pdiag({1, 0});
        Projection q = plus();
        if (trial > 0) {
            p = rng.projection(2, 1);
            q = rng.projection(2, 1);
        }
        if (commutes(p, q)) {
            continue;
        }
        ++instances;
        const Bindings env{{"z", zero},
                           {"x", QSet::make(2, {{zero, p}})},
                           {"y", QSet::make(2, {{zero, q}})},
                           {"w", zero}};
        for (ConditionalKind j : kAllConditionals) {
            const int r = evaluate(f, j, env).value.rank();
            max_rank = std::max(max_rank, r);
            failures += r < 2 ? 0 : 1;
        }
    }
    return {failures == 0 && instances > 0, std::to_string(instances) + " non-commuting pairs x 3, max rank " +
                                                std::to_string(max_rank)};
}

Outcome criterion_round_trip() {
    RandomSource rng(1006);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const int d = 1 + trial % 8;
        const ComplexMatrix a = rng.hermitian(d, trial % 3 == 0);
        worst = std::max(worst, dist(real_to_observable(observable_to_real(Observable(a))).matrix(), a));
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "200 Hermitians, max Frobenius error %.2e", worst);
    return {worst <= 1e-8, buf};
}

Outcome criterion_qborel() {
    RandomSource rng(1007);
    double worst = 0.0;
    int failures = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int d = 2 + trial % 4;
        const Observable x = rng.observable(d, trial % 2 == 0);
        const std::vector<double> &spec = x.spectrum();
        auto pick = [&]() {
            return rng.coin() ? spec[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(spec.size()) - 1))]
                              : rng.uniform(spec.front() - 1.0, spec.back() + 1.0);
        };
        double s = pick();
        double t = pick();
        if (s == t) {
            t = s + rng.uniform(0.25, 1.0);
        }
        if (s > t) {
            std::swap(s, t);
        }
        for (ConditionalKind j : kAllConditionals) {
            const QBorelReport r = qborel_identities(x, s, t, j);
            for (const IdentityCheck &c : r.items) {
                worst = std::max(worst, c.residual);
            }
            failures += r.all_hold() && r.items.size() == 6 ? 0 : 1;
        }
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "200 triples x 3, 6 items each, max residual %.2e, %d failures", worst, failures);
    return {failures == 0 && worst <= 1e-8, buf};
}

Outcome criterion_equality() {
    RandomSource rng(1008);
    int eq_disagree = 0;
    int eq_positive = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int d = 2 + trial % 5;
        auto [u, v] = rng.partially_equal_reals(d);
        if (trial % 4 == 0) {
            v = rng.quantum_real(d, d);
        } else if (trial % 4 == 1) {
            v = u;
        }
        const Projection e = equality_truth_value(u, v);
        const StateVector psi = (trial % 2 == 0 && e.rank() > 0) ? rng.state_in(e) : rng.state(d);
        const EqualityEquivalents r = equality_equivalents(u, v, psi);
        eq_disagree += r.agree() ? 0 : 1;
        eq_positive += r.in_range ? 1 : 0;
    }
    int pc_disagree = 0;
    int pc_positive = 0;
    int constructed_missed = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const int d = 2 + trial % 5;
        Observable a = rng.observable(d, trial % 2 == 0);
        Observable b = rng.observable(d, trial % 3 == 0);
        StateVector psi = rng.state(d);
        bool constructed = false;
        switch (trial % 4) {
            case 0: {
                CorrelatedTriple c = rng.correlated_triple(d);
                a = c.a;
                b = c.b;
                psi = c.psi;
                constructed = true;
                break;
            }
            case 1: {
                std::tie(a, b) = rng.partially_equal_observables(d);
                const Projection e = equality_truth_value(observable_to_real(a), observable_to_real(b));
                if (e.rank() > 0) {
                    psi = rng.state_in(e);
                    constructed = true;
                }
                break;
            }
            case 2:
                std::tie(a, b) = rng.partially_equal_observables(d);
                break;
            default:
                break;
        }
        const CorrelationReport r = perfect_correlation(a, b, psi);
        pc_disagree += r.agree() ? 0 : 1;
        pc_positive += r.equality_range ? 1 : 0;
        constructed_missed += (constructed && !r.equality_range) ? 1 : 0;
    }
    const std::string detail = "equality: 1000 triples, " + std::to_string(eq_positive) + " in range, " +
                               std::to_string(eq_disagree) + " disagreements; correlation: 500 triples, " +
                               std::to_string(pc_positive) + " correlated, " + std::to_string(pc_disagree) +
                               " disagreements, " + std::to_string(constructed_missed) + " constructed pairs missed";
    return {eq_disagree == 0 && pc_disagree == 0 && constructed_missed == 0, detail};
}

Outcome criterion_order() {
    RandomSource rng(1009);
    int failures = 0;
    int ordered = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const int d = 2 + trial % 5;
        const Observable x = rng.observable(d, trial % 3 == 0);
        Observable y = rng.observable(d, trial % 3 == 1);
        if (trial % 4 == 0) {
            y = rng.observable_above(x);
        } else if (trial % 4 == 1) {
            y = borel_apply([](double t) { return t + std::max(0.0, t) * 0.5; }, x);
        }
        const bool spec = spectral_order_leq(x, y);
        ordered += spec ? 1 : 0;
        for (ConditionalKind j : kAllConditionals) {
            failures += order_truth_value(x, y, j).is_identity() == spec ? 0 : 1;
        }
    }
    const double worked =
        dist(order_truth_value(Observable(plus().matrix()), Observable(diag({0, 1})), ConditionalKind::Sasaki),
             pdiag({0, 1}));
    char buf[200];
    std::snprintf(buf, sizeof buf, "500 pairs x 3, %d ordered, %d mismatches; C^2 example error %.2e", ordered,
                  failures, worked);
    return {failures == 0 && worked <= 1e-10, buf};
}

Outcome criterion_measurement() {
    RandomSource rng(1010);
    int failures = 0;
    int members = 0;
    int degenerate = 0;
    double worst_norm = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int d = 2 + trial % 5;
        const Observable x = rng.observable(d, trial % 2 == 0);
        Observable y = rng.observable(d, trial % 3 == 0);
        if (trial % 5 == 0) {
            y = rng.observable_above(x);
        }
        const bool multiple = static_cast<int>(x.spectrum().size()) < d || static_cast<int>(y.spectrum().size()) < d;
        degenerate += multiple ? 1 : 0;
        StateVector psi = rng.state(d);
        if (trial % 2 == 1) {
            const Projection value = order_truth_value(x, y, kAllConditionals[(trial / 2) % 3]);
            if (value.rank() > 0) {
                psi = rng.state_in(value);
            }
        }
        const OrderMeasurementReport r = order_measurement_check(x, y, psi);
        worst_norm = std::max({worst_norm, std::abs(r.xy.total() - 1.0), std::abs(r.yx.total() - 1.0)});
        failures += r.all_agree() ? 0 : 1;
        for (const OrderVerdict &v : r.verdicts) {
            members += v.member ? 1 : 0;
        }
    }
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "1000 triples x 3, %d with multiplicity, %d memberships, %d disagreements, max normalization "
                  "error %.2e",
                  degenerate, members, failures, worst_norm);
    return {failures == 0 && worst_norm <= 1e-9, buf};
}

}  // namespace

int main() {
    const std::vector<ProjectionPair> pairs = hardegree_instances();
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"hardegree", [&] { return criterion_hardegree(pairs); }},
        {"range-forms", [&] { return criterion_ranges(pairs); }},
        {"commutators", criterion_commutators},
        {"transfer", criterion_transfer},
        {"converse-witness", criterion_converse},
        {"takeuti-round-trip", criterion_round_trip},
        {"qborel", criterion_qborel},
        {"equality", criterion_equality},
        {"spectral-order", criterion_order},
        {"measurement", criterion_measurement},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += o.pass ? 0 : 1;
        std::printf("%s criterion %zu (%s): %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                    o.detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
