#include "qlogic/reals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qlogic/hfset.hpp"
#include "qlogic/linalg.hpp"

namespace qlogic {

namespace {

struct Cluster {
    double lo;
    double hi;
};

double cluster_threshold(std::span<const double> values, const Tolerance &tol) {
    double scale = 1.0;
    for (double v : values) {
        scale = std::max(scale, std::abs(v));
    }
    return tol.eps_compare * scale;
}

// Groups sorted values into runs whose consecutive gaps are within the threshold.
std::vector<Cluster> cluster_sorted(const std::vector<double> &sorted, const Tolerance &tol) {
    std::vector<Cluster> out;
    const double thr = cluster_threshold(sorted, tol);
    for (double v : sorted) {
        if (!out.empty() && v - out.back().hi <= thr) {
            out.back().hi = v;
        } else {
            out.push_back({v, v});
        }
    }
    return out;
}

std::vector<Cluster> merged_clusters(std::span<const std::vector<double>> sets, const Tolerance &tol) {
    std::vector<double> all;
    for (const auto &s : sets) {
        all.insert(all.end(), s.begin(), s.end());
    }
    std::sort(all.begin(), all.end());
    return cluster_sorted(all, tol);
}

Projection sum_of(std::span<const Projection> parts, int dim) {
    ComplexMatrix acc = ComplexMatrix::Zero(dim, dim);
    for (const Projection &p : parts) {
        acc += p.matrix();
    }
    return Projection::from_trusted(std::move(acc));
}

void require_dims(int a, int b) {
    if (a != b) {
        throw DimMismatch("operands act on C^" + std::to_string(a) + " and C^" + std::to_string(b));
    }
}

std::vector<double> pair_grid(const std::vector<double> &a, const std::vector<double> &b, const Tolerance &tol) {
    const std::vector<double> sets[] = {a, b};
    return evaluation_grid(sets, tol);
}

double vector_norm(const ComplexVector &v) {
    return v.norm();
}

}  // namespace

// ---------------------------------------------------------------------------
// Observable

Observable::Observable(const ComplexMatrix &m, const Tolerance &tol) {
    tol.validate();
    const EigenDecomposition eig = hermitian_eig(m, tol);
    const int d = static_cast<int>(m.rows());
    matrix_ = (m + m.adjoint()) / 2.0;

    std::vector<double> values(eig.values.data(), eig.values.data() + eig.values.size());
    const double thr = cluster_threshold(values, tol);
    int start = 0;
    while (start < d) {
        int end = start + 1;
        while (end < d && values[end] - values[end - 1] <= thr) {
            ++end;
        }
        double mean = 0.0;
        for (int k = start; k < end; ++k) {
            mean += values[k];
        }
        mean /= (end - start);
        const ComplexMatrix cols = eig.vectors.middleCols(start, end - start);
        spectrum_.push_back(mean);
        eigenprojections_.push_back(Projection::from_trusted(cols * cols.adjoint()));
        start = end;
    }
}

Observable Observable::from_atoms(std::vector<std::pair<double, Projection>> atoms, const Tolerance &tol) {
    tol.validate();
    if (atoms.empty()) {
        throw PreconditionViolated("an observable needs at least one spectral atom");
    }
    const int d = atoms.front().second.dim();
    for (const auto &[value, p] : atoms) {
        require_dims(d, p.dim());
        if (!std::isfinite(value)) {
            throw NonFinite("spectral value is not finite");
        }
    }
    std::stable_sort(atoms.begin(), atoms.end(), [](const auto &a, const auto &b) { return a.first < b.first; });

    ComplexMatrix total = ComplexMatrix::Zero(d, d);
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        total += atoms[i].second.matrix();
        for (std::size_t k = i + 1; k < atoms.size(); ++k) {
            if ((atoms[i].second.matrix() * atoms[k].second.matrix()).norm() > tol.eps_compare) {
                throw PreconditionViolated("spectral atoms are not pairwise orthogonal");
            }
        }
    }
    if ((total - ComplexMatrix::Identity(d, d)).norm() > tol.eps_compare) {
        throw PreconditionViolated("spectral atoms do not sum to the identity");
    }

    std::vector<double> values;
    for (const auto &a : atoms) {
        values.push_back(a.first);
    }
    const double thr = cluster_threshold(values, tol);

    Observable out;
    out.matrix_ = ComplexMatrix::Zero(d, d);
    std::size_t i = 0;
    while (i < atoms.size()) {
        std::size_t end = i + 1;
        while (end < atoms.size() && atoms[end].first - atoms[end - 1].first <= thr) {
            ++end;
        }
        ComplexMatrix block = ComplexMatrix::Zero(d, d);
        double mean = 0.0;
        for (std::size_t k = i; k < end; ++k) {
            block += atoms[k].second.matrix();
            mean += atoms[k].first;
        }
        mean /= static_cast<double>(end - i);
        Projection e = Projection::from_trusted(std::move(block));
        if (!e.is_zero(tol)) {
            out.matrix_ += mean * e.matrix();
            out.spectrum_.push_back(mean);
            out.eigenprojections_.push_back(std::move(e));
        }
        i = end;
    }
    return out;
}

Observable Observable::scalar(double r, int dim) {
    return from_atoms({{r, Projection::identity(dim)}});
}

Projection Observable::spectral_projection(double lambda) const {
    return interval_projection(-std::numeric_limits<double>::infinity(), lambda);
}

Projection Observable::atom_projection(double lo, double hi) const {
    std::vector<Projection> parts;
    for (std::size_t k = 0; k < spectrum_.size(); ++k) {
        if (spectrum_[k] >= lo && spectrum_[k] <= hi) {
            parts.push_back(eigenprojections_[k]);
        }
    }
    return sum_of(parts, dim());
}

Projection Observable::interval_projection(double a, double b) const {
    std::vector<Projection> parts;
    for (std::size_t k = 0; k < spectrum_.size(); ++k) {
        if (spectrum_[k] > a && spectrum_[k] <= b) {
            parts.push_back(eigenprojections_[k]);
        }
    }
    return sum_of(parts, dim());
}

// ---------------------------------------------------------------------------
// QuantumReal

QuantumReal::QuantumReal(std::vector<double> jumps, std::vector<Projection> levels, const Tolerance &tol) {
    tol.validate();
    if (jumps.empty() || jumps.size() != levels.size()) {
        throw ChainNotMonotone("a quantum real needs one level per jump and at least one jump");
    }
    const int d = levels.front().dim();
    for (std::size_t k = 0; k < jumps.size(); ++k) {
        require_dims(d, levels[k].dim());
        if (!std::isfinite(jumps[k])) {
            throw NonFinite("jump point is not finite");
        }
        if (k > 0 && !(jumps[k - 1] < jumps[k])) {
            throw ChainNotMonotone("jump points are not strictly ascending");
        }
        if (k > 0 && !leq(levels[k - 1], levels[k], tol)) {
            throw ChainNotMonotone("levels do not form an increasing chain");
        }
    }
    if (!levels.back().is_identity(tol)) {
        throw ChainNotMonotone("top level is not the identity");
    }
    Projection previous = Projection::zero(d);
    for (std::size_t k = 0; k < jumps.size(); ++k) {
        if (subspace_equal(levels[k], previous, tol)) {
            continue;
        }
        jumps_.push_back(jumps[k]);
        levels_.push_back(levels[k]);
        previous = levels[k];
    }
}

QuantumReal QuantumReal::scalar(double r, int dim) {
    return QuantumReal({r}, {Projection::identity(dim)});
}

Projection QuantumReal::level_at(double r) const {
    const auto it = std::upper_bound(jumps_.begin(), jumps_.end(), r);
    if (it == jumps_.begin()) {
        return Projection::zero(dim());
    }
    return levels_[static_cast<std::size_t>(it - jumps_.begin()) - 1];
}

QuantumReal observable_to_real(const Observable &x) {
    std::vector<Projection> levels;
    ComplexMatrix acc = ComplexMatrix::Zero(x.dim(), x.dim());
    for (const Projection &e : x.eigenprojections()) {
        acc += e.matrix();
        levels.push_back(Projection::from_trusted(acc));
    }
    levels.back() = Projection::identity(x.dim());
    return QuantumReal(x.spectrum(), std::move(levels));
}

Observable real_to_observable(const QuantumReal &u, const Tolerance &tol) {
    std::vector<std::pair<double, Projection>> atoms;
    ComplexMatrix previous = ComplexMatrix::Zero(u.dim(), u.dim());
    for (std::size_t k = 0; k < u.jumps().size(); ++k) {
        const ComplexMatrix &level = u.levels()[k].matrix();
        atoms.emplace_back(u.jumps()[k], Projection::from_trusted(level - previous));
        previous = level;
    }
    return Observable::from_atoms(std::move(atoms), tol);
}

std::vector<double> evaluation_grid(std::span<const std::vector<double>> jump_sets, const Tolerance &tol) {
    const std::vector<Cluster> clusters = merged_clusters(jump_sets, tol);
    if (clusters.empty()) {
        return {0.0};
    }
    std::vector<double> grid{clusters.front().lo - 1.0};
    for (const Cluster &c : clusters) {
        grid.push_back(c.hi);
    }
    return grid;
}

// ---------------------------------------------------------------------------
// Codes and induced elements

QSet RationalCodebook::code(double r) {
    if (auto it = codes_.find(r); it != codes_.end()) {
        return it->second;
    }
    QSet c = check_embed(HFSet::ackermann(static_cast<std::uint64_t>(codes_.size())), dim_);
    codes_.emplace(r, c);
    return c;
}

QSet induced_qset(const QuantumReal &u, std::span<const double> grid, RationalCodebook &codes) {
    require_dims(u.dim(), codes.dim());
    std::vector<QEntry> entries;
    for (double r : grid) {
        entries.push_back({codes.code(r), u.level_at(r)});
    }
    return QSet::make(u.dim(), std::move(entries));
}

// ---------------------------------------------------------------------------
// Reality predicate

RealCandidate RealCandidate::from_real(const QuantumReal &u) {
    return step(u.jumps(), u.levels(), Projection::zero(u.dim()));
}

RealCandidate RealCandidate::step(std::vector<double> points, std::vector<Projection> levels, Projection below) {
    if (points.size() != levels.size()) {
        throw PreconditionViolated("step candidate needs one level per point");
    }
    if (!std::is_sorted(points.begin(), points.end()) ||
        std::adjacent_find(points.begin(), points.end()) != points.end()) {
        throw PreconditionViolated("step candidate points must be strictly ascending");
    }
    RealCandidate c;
    c.points = std::move(points);
    c.at_points = levels;
    c.on_intervals.push_back(std::move(below));
    for (Projection &p : levels) {
        c.on_intervals.push_back(std::move(p));
    }
    return c;
}

Projection reality_truth_value(const RealCandidate &u, ConditionalKind kind, const Tolerance &tol) {
    const std::size_t n = u.points.size();
    if (u.at_points.size() != n || u.on_intervals.size() != n + 1) {
        throw PreconditionViolated("candidate needs one value per point and per open interval");
    }
    const int d = u.on_intervals.front().dim();

    // Pieces in ascending order: (−∞,r_1), r_1, (r_1,r_2), ..., r_n, (r_n,∞). Rationals are
    // dense, so an open interval also lies strictly above part of itself.
    std::vector<Projection> values;
    std::vector<bool> open;
    for (std::size_t k = 0; k <= n; ++k) {
        values.push_back(u.on_intervals[k]);
        open.push_back(true);
        if (k < n) {
            values.push_back(u.at_points[k]);
            open.push_back(false);
        }
    }
    for (const Projection &p : values) {
        require_dims(d, p.dim());
    }
    const Projection some = join_all(values, d, tol);
    const Projection not_all = ortho(meet_all(values, d, tol));

    const Projection one = Projection::identity(d);
    const Projection zero = Projection::zero(d);
    std::vector<Projection> if_less;
    std::vector<Projection> if_not_less;
    for (const Projection &v : values) {
        if_less.push_back(conditional(kind, one, v, tol));
        if_not_less.push_back(conditional(kind, zero, v, tol));
    }

    std::vector<Projection> cut;
    for (std::size_t y = 0; y < values.size(); ++y) {
        std::vector<Projection> above;
        for (std::size_t z = 0; z < values.size(); ++z) {
            const bool less_somewhere = z > y || (z == y && open[y]);
            const bool not_less_somewhere = z <= y;
            if (less_somewhere) {
                above.push_back(if_less[z]);
            }
            if (not_less_somewhere) {
                above.push_back(if_not_less[z]);
            }
        }
        cut.push_back(biconditional(kind, values[y], meet_all(above, d, tol), tol));
    }
    return meet(meet(some, not_all, tol), meet_all(cut, d, tol), tol);
}

// ---------------------------------------------------------------------------
// Equality

Projection equality_truth_value(const QuantumReal &u, const QuantumReal &v, const Tolerance &tol) {
    require_dims(u.dim(), v.dim());
    const int d = u.dim();
    ComplexMatrix gram = ComplexMatrix::Zero(d, d);
    for (double r : pair_grid(u.jumps(), v.jumps(), tol)) {
        const ComplexMatrix diff = u.level_at(r).matrix() - v.level_at(r).matrix();
        gram += diff.adjoint() * diff;
    }
    return nullspace_projection(gram, tol);
}

EqualityEquivalents equality_equivalents(const QuantumReal &u, const QuantumReal &v, const StateVector &psi,
                                         const Tolerance &tol) {
    require_dims(u.dim(), v.dim());
    require_dims(u.dim(), psi.dim());
    const ComplexVector &x = psi.amplitudes();
    const std::vector<double> grid = pair_grid(u.jumps(), v.jumps(), tol);

    EqualityEquivalents out;
    const Projection eq = equality_truth_value(u, v, tol);
    out.residuals[0] = vector_norm(eq.matrix() * x - x);

    for (double r : grid) {
        out.residuals[1] = std::max(out.residuals[1], vector_norm((u.level_at(r).matrix() - v.level_at(r).matrix()) * x));
    }
    for (double a : grid) {
        const ComplexVector ua = u.level_at(a).matrix() * x;
        for (double b : grid) {
            const ComplexVector vb = v.level_at(b).matrix() * x;
            const ComplexVector vmin = v.level_at(std::min(a, b)).matrix() * x;
            out.residuals[2] = std::max(out.residuals[2], vector_norm(u.level_at(a).matrix() * vb - vmin));
            out.residuals[3] = std::max(out.residuals[3], std::abs(ua.dot(vb) - vmin.squaredNorm()));
        }
    }
    out.in_range = out.residuals[0] <= tol.eps_compare;
    out.pointwise = out.residuals[1] <= tol.eps_compare;
    out.products = out.residuals[2] <= tol.eps_compare;
    out.inner_products = out.residuals[3] <= tol.eps_compare;
    return out;
}

// ---------------------------------------------------------------------------
// Borel calculus

Observable borel_apply(const std::function<double(double)> &f, const Observable &a, const Tolerance &tol) {
    std::vector<std::pair<double, Projection>> atoms;
    for (std::size_t k = 0; k < a.spectrum().size(); ++k) {
        atoms.emplace_back(f(a.spectrum()[k]), a.eigenprojections()[k]);
    }
    return Observable::from_atoms(std::move(atoms), tol);
}

Observable borel_apply_complex(const std::function<Complex(double)> &f, const Observable &a, const Tolerance &tol) {
    return borel_apply(
        [&](double x) {
            const Complex value = f(x);
            if (std::abs(value.imag()) > tol.eps_compare * std::max(1.0, std::abs(value))) {
                throw NonRealOutput("Borel function is not real at spectral point " + std::to_string(x));
            }
            return value.real();
        },
        a, tol);
}

// ---------------------------------------------------------------------------
// Perfect correlation

CorrelationReport perfect_correlation(const Observable &a, const Observable &b, const StateVector &psi,
                                      const Tolerance &tol) {
    require_dims(a.dim(), b.dim());
    require_dims(a.dim(), psi.dim());
    const ComplexVector &x = psi.amplitudes();
    const double eps = tol.eps_compare;

    CorrelationReport out;
    const Projection eq = equality_truth_value(observable_to_real(a), observable_to_real(b), tol);
    out.equality_range = vector_norm(eq.matrix() * x - x) <= eps;

    double pointwise = 0.0;
    for (double r : pair_grid(a.spectrum(), b.spectrum(), tol)) {
        pointwise = std::max(pointwise,
                             vector_norm((a.spectral_projection(r).matrix() - b.spectral_projection(r).matrix()) * x));
    }
    out.spectral_pointwise = pointwise <= eps;

    const std::vector<double> sets[] = {a.spectrum(), b.spectrum()};
    const std::vector<Cluster> atoms = merged_clusters(sets, tol);
    std::vector<ComplexMatrix> ea;
    std::vector<ComplexMatrix> eb;
    for (const Cluster &c : atoms) {
        ea.push_back(a.atom_projection(c.lo, c.hi).matrix());
        eb.push_back(b.atom_projection(c.lo, c.hi).matrix());
    }

    double indicator = 0.0;
    double cross = 0.0;
    double gudder = 0.0;
    double diagonal = 0.0;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        const ComplexVector ai = ea[i] * x;
        indicator = std::max(indicator, vector_norm(ai - eb[i] * x));
        for (std::size_t k = 0; k < atoms.size(); ++k) {
            const ComplexVector bk = eb[k] * x;
            if (i != k) {
                cross = std::max(cross, std::abs(ai.dot(bk)));
            }
            gudder = std::max(gudder, vector_norm(ea[i] * bk - eb[k] * ai));
        }
        const Projection both =
            meet(Projection::from_trusted(ea[i]), Projection::from_trusted(eb[i]), tol);
        diagonal += x.dot(both.matrix() * x).real();
    }
    out.borel_functions = indicator <= eps;
    out.disjoint_orthogonal = cross <= eps;
    out.gudder = gudder <= eps;
    out.diagonal_mass = diagonal;
    out.joint_distribution = out.gudder && std::abs(1.0 - diagonal) <= eps;
    return out;
}

// ---------------------------------------------------------------------------
// Order

bool spectral_order_leq(const Observable &x, const Observable &y, const Tolerance &tol) {
    require_dims(x.dim(), y.dim());
    for (double r : pair_grid(x.spectrum(), y.spectrum(), tol)) {
        if (!leq(y.spectral_projection(r), x.spectral_projection(r), tol)) {
            return false;
        }
    }
    return true;
}

Projection order_truth_value(const Observable &x, const Observable &y, ConditionalKind kind, const Tolerance &tol) {
    require_dims(x.dim(), y.dim());
    std::vector<Projection> parts;
    for (double r : pair_grid(x.spectrum(), y.spectrum(), tol)) {
        parts.push_back(conditional(kind, y.spectral_projection(r), x.spectral_projection(r), tol));
    }
    return meet_all(parts, x.dim(), tol);
}

Projection strict_order_truth_value(const Observable &x, const Observable &y, ConditionalKind kind,
                                    const Tolerance &tol) {
    return ortho(order_truth_value(y, x, kind, tol));
}

bool QBorelReport::all_hold() const {
    return std::all_of(items.begin(), items.end(), [](const IdentityCheck &c) { return c.holds; });
}

QBorelReport qborel_identities(const Observable &x, double s, double t, ConditionalKind kind, const Tolerance &tol) {
    if (!(s < t)) {
        throw PreconditionViolated("qborel_identities needs s < t");
    }
    const int d = x.dim();
    const double inf = std::numeric_limits<double>::infinity();
    const Observable s1 = Observable::scalar(s, d);
    const Observable t1 = Observable::scalar(t, d);

    QBorelReport report;
    auto check = [&](std::string name, const Projection &lhs, const Projection &rhs) {
        const double residual = frobenius_distance(lhs.matrix(), rhs.matrix());
        report.items.push_back({std::move(name), residual <= tol.eps_compare, residual});
    };

    // (i) [[ř ∈ s̃]] = E^{s1}(r), with s̃ realized as an element of the universe.
    {
        const double probes[] = {s - 1.0, s, (s + t) / 2.0, t};
        std::vector<double> jumps = {s};
        jumps.insert(jumps.end(), std::begin(probes), std::end(probes));
        std::sort(jumps.begin(), jumps.end());
        jumps.erase(std::unique(jumps.begin(), jumps.end()), jumps.end());
        RationalCodebook codes(d);
        const QSet s_tilde = induced_qset(QuantumReal::scalar(s, d), jumps, codes);
        TruthEngine engine(kind, tol);
        double worst = 0.0;
        for (double r : probes) {
            const Projection lhs = engine.member(codes.code(r), s_tilde);
            worst = std::max(worst, frobenius_distance(lhs.matrix(), s1.spectral_projection(r).matrix()));
        }
        report.items.push_back({"member_scalar", worst <= tol.eps_compare, worst});
    }

    // (ii) [[s̃ ≤ t̃]] = E^{s1}(t), and the reversed comparison.
    {
        const Projection forward = order_truth_value(s1, t1, kind, tol);
        const Projection backward = order_truth_value(t1, s1, kind, tol);
        const double residual = std::max(frobenius_distance(forward.matrix(), s1.spectral_projection(t).matrix()),
                                         frobenius_distance(backward.matrix(), t1.spectral_projection(s).matrix()));
        report.items.push_back({"order_scalars", residual <= tol.eps_compare, residual});
    }

    // (iii) [[X̃ ≤ t̃]] = E^X(t).
    const Projection at_most_t = order_truth_value(x, t1, kind, tol);
    check("order_below", at_most_t, x.spectral_projection(t));

    // (iv) [[t̃ < X̃]] = E^X((t, ∞)).
    check("order_strict_above", strict_order_truth_value(t1, x, kind, tol), x.interval_projection(t, inf));

    // (v) [[s̃ < X̃ ≤ t̃]] = E^X((s, t]).
    check("order_interval", meet(strict_order_truth_value(s1, x, kind, tol), at_most_t, tol),
          x.interval_projection(s, t));

    // (vi) [[X̃ = t̃]] = E^X(t) − ⋁_{r<t} E^X(r) = E^X({t}).
    {
        const Projection eq = equality_truth_value(observable_to_real(x), QuantumReal::scalar(t, d), tol);
        std::vector<Projection> below;
        for (double r : pair_grid(x.spectrum(), {t}, tol)) {
            if (r < t) {
                below.push_back(x.spectral_projection(r));
            }
        }
        const Projection lower = join_all(below, d, tol);
        const Projection difference = Projection::from_trusted(x.spectral_projection(t).matrix() - lower.matrix());
        const Projection atom = x.atom_projection(t, t);
        const double residual = std::max(frobenius_distance(eq.matrix(), difference.matrix()),
                                         frobenius_distance(eq.matrix(), atom.matrix()));
        report.items.push_back({"equality_atom", residual <= tol.eps_compare, residual});
    }
    return report;
}

}  // namespace qlogic
