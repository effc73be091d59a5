#include <hypat/pipeline.hpp>

#include <algorithm>
#include <array>
#include <numeric>

#include <hypat/errors.hpp>

namespace hypat {

namespace {

std::vector<int> position_map(const std::vector<int>& order, int n) {
    require(order.size() == static_cast<std::size_t>(n), "order must list every vertex");
    std::vector<int> pos(static_cast<std::size_t>(n) + 1, -1);
    for (int i = 0; i < n; ++i) {
        int v = order[static_cast<std::size_t>(i)];
        require(v >= 1 && v <= n && pos[static_cast<std::size_t>(v)] < 0,
                "order is not a permutation of the vertices");
        pos[static_cast<std::size_t>(v)] = i;
    }
    return pos;
}

// One bracket step of the target-dominated coefficient DP.
SparsePoly dp_step(const SparsePoly& state, const std::vector<int>& edge,
                   const std::vector<Scalar>& row, const Monomial& target) {
    SparsePoly next;
    next.field = state.field;
    for (const auto& [m, c] : state.terms) {
        for (std::size_t j = 0; j < edge.size(); ++j) {
            int v = edge[j];
            if (m.exponent(v) + 1 > target.exponent(v)) continue;
            next.add_term(m.times(v), c * row[j]);
        }
    }
    return next;
}

}  // namespace

PeelCertificate degeneracy_certificate_detail(const LinearSystem& sys) {
    sys.validate();
    const Hypergraph& h = sys.hypergraph;
    PeelCertificate out;
    out.peel = degeneracy(h);
    std::vector<int> pos = position_map(out.peel.order, h.n);

    Scalar coeff = Scalar::one(sys.field);
    std::vector<int> counts(static_cast<std::size_t>(h.n), 0);
    out.chosen.reserve(h.edges.size());
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
        const auto& e = h.edges[i];
        int first = e[0];
        for (int v : e)
            if (pos[static_cast<std::size_t>(v)] < pos[static_cast<std::size_t>(first)]) first = v;
        out.chosen.push_back(first);
        counts[static_cast<std::size_t>(first - 1)] += 1;
        coeff *= sys.coeff(static_cast<int>(i), first);
    }
    out.certificate.exponents = Monomial::from_dense(counts);
    out.certificate.coefficient = coeff;
    out.certificate.at_value = out.certificate.exponents.max_exponent() + 1;
    check_internal(out.certificate.at_value <= out.peel.value + 1,
                   "peel certificate exceeded the degeneracy bound");
    return out;
}

ATCertificate degeneracy_certificate(const LinearSystem& sys) {
    return degeneracy_certificate_detail(sys).certificate;
}

std::pair<int, int> claim1_pair(const std::function<Scalar(int)>& f,
                                const std::function<Scalar(int)>& g, int a, int b, int c,
                                int d) {
    require(f(a) != f(b), "need f(a) != f(b)");
    require(g(c) != g(d), "need g(c) != g(d)");
    const std::array<std::pair<int, int>, 6> candidates{
        {{a, b}, {c, d}, {a, c}, {a, d}, {b, c}, {b, d}}};
    for (auto [x, y] : candidates)
        if (f(x) != f(y) && g(x) != g(y)) return {x, y};
    throw internal_error("no pair separates both maps; the hypotheses exclude this");
}

SearchResult permutation_search(const LinearSystem& sys, const RepresentativeSystem& r,
                                const std::vector<int>& order) {
    sys.validate();
    const Hypergraph& h = sys.hypergraph;
    const std::size_t m = h.edges.size();
    require(r.rep.size() == m, "one representative per edge required");
    const UnbalancedReport unbal = fully_unbalanced_check(sys);
    require(unbal.fully_unbalanced, "system must be fully unbalanced");
    std::vector<int> pos = position_map(order, h.n);

    std::vector<int> latest(m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& e = h.edges[i];
        int best = e[0];
        for (int v : e)
            if (pos[static_cast<std::size_t>(v)] > pos[static_cast<std::size_t>(best)]) best = v;
        latest[i] = best;
        int rep = r.rep[i];
        require(sys.vertex_position(static_cast<int>(i), rep) >= 0,
                "representative must lie in its edge");
        require(pos[static_cast<std::size_t>(rep)] < pos[static_cast<std::size_t>(best)],
                "representative must precede the edge's latest vertex");
    }

    std::vector<int> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) {
        return pos[static_cast<std::size_t>(latest[static_cast<std::size_t>(x)])] <
               pos[static_cast<std::size_t>(latest[static_cast<std::size_t>(y)])];
    });

    PermutationAssignment perms = PermutationAssignment::identity(sys);
    LinearSystem partial;
    partial.hypergraph.n = h.n;
    partial.field = sys.field;
    Monomial running;  // product of representatives committed so far
    Scalar prev = Scalar::one(sys.field);

    for (std::size_t t = 0; t < m; ++t) {
        const int ei = idx[t];
        const auto& e = h.edges[static_cast<std::size_t>(ei)];
        const auto& row = sys.coeffs[static_cast<std::size_t>(ei)];
        const int rep = r.rep[static_cast<std::size_t>(ei)];
        running = running.times(rep);

        std::vector<Scalar> b(e.size(), Scalar::zero(sys.field));
        for (std::size_t j = 0; j < e.size(); ++j) {
            auto quotient = running.divided_by(e[j]);
            if (quotient) b[j] = coefficient_of(partial, *quotient);
        }
        const int rep_pos = sys.vertex_position(ei, rep);
        const int latest_pos = sys.vertex_position(ei, latest[static_cast<std::size_t>(ei)]);
        check_internal(b[static_cast<std::size_t>(rep_pos)] == prev,
                       "memoized coefficient diverged from the recomputed one");
        check_internal(b[static_cast<std::size_t>(latest_pos)].is_zero(),
                       "the edge's latest vertex cannot divide the running monomial");

        Scalar c = Scalar::zero(sys.field);
        for (std::size_t j = 0; j < e.size(); ++j) c += row[j] * b[j];

        std::vector<Scalar> committed = row;
        if (c.is_zero()) {
            auto f = [&](int v) { return sys.coeff(ei, v); };
            auto g = [&](int v) {
                return b[static_cast<std::size_t>(sys.vertex_position(ei, v))];
            };
            const auto& wit = *unbal.witnesses[static_cast<std::size_t>(ei)];
            auto [k, l] =
                claim1_pair(f, g, wit.first, wit.second, rep, latest[static_cast<std::size_t>(ei)]);
            const int kp = sys.vertex_position(ei, k);
            const int lp = sys.vertex_position(ei, l);
            perms.apply_transposition(ei, kp, lp);
            std::swap(committed[static_cast<std::size_t>(kp)],
                      committed[static_cast<std::size_t>(lp)]);
            Scalar after = Scalar::zero(sys.field);
            for (std::size_t j = 0; j < e.size(); ++j) after += committed[j] * b[j];
            Scalar identity = (f(k) - f(l)) * (g(l) - g(k));
            check_internal(after == identity,
                           "transposed step coefficient must equal (a_k - a_l)(b_l - b_k)");
            check_internal(!after.is_zero(), "transposition left the coefficient zero");
            prev = after;
        } else {
            prev = c;
        }
        partial.hypergraph.edges.push_back(e);
        partial.coeffs.push_back(std::move(committed));
    }

    SearchResult out;
    out.perms = perms;
    out.certificate.exponents = running;
    out.certificate.coefficient = prev;
    out.certificate.at_value = running.max_exponent() + 1;
    check_internal(coefficient_of(apply_permutations(sys, perms), running) == prev,
                   "certificate coefficient failed the recheck on the permuted system");
    check_internal(!prev.is_zero(), "certificate coefficient is zero");
    return out;
}

MainResult theorem_main(const LinearSystem& sys) {
    sys.validate();
    require(fully_unbalanced_check(sys).fully_unbalanced, "system must be fully unbalanced");
    const Hypergraph& h = sys.hypergraph;

    MainResult res;
    res.reduction.g.n = h.n;
    if (h.edges.empty()) {
        res.perms = PermutationAssignment::identity(sys);
        res.certificate.coefficient = Scalar::one(sys.field);
        res.peel = degeneracy(res.reduction.g);
        return res;
    }

    auto density = edge_density_flow(h);
    const int k = static_cast<int>(ceil_rational(density.density).get_si());
    res.capacity = k;
    res.bound = 2 * k + 1;
    res.reduction = multigraph_reduction(h, k, /*trusted_density=*/true);
    res.peel = degeneracy(res.reduction.g);
    check_internal(res.peel.value <= 2 * k,
                   "reduced multigraph degeneracy exceeded twice the capacity");

    std::vector<int> pos = position_map(res.peel.order, h.n);
    RepresentativeSystem reps;
    reps.rep.reserve(h.edges.size());
    for (const auto& f : res.reduction.g.edges) {
        int earlier = pos[static_cast<std::size_t>(f[0])] < pos[static_cast<std::size_t>(f[1])]
                          ? f[0]
                          : f[1];
        reps.rep.push_back(earlier);
    }

    auto found = permutation_search(sys, reps, res.peel.order);
    res.perms = std::move(found.perms);
    res.certificate = std::move(found.certificate);
    check_internal(res.certificate.exponents.max_exponent() <= 2 * k,
                   "certificate exponent exceeded twice the capacity");
    return res;
}

ATCertificate fully_balanced_at(const Hypergraph& h, const FieldDescriptor& field) {
    h.validate();
    require(field.characteristic_zero(),
            "all-ones certificates need characteristic zero; the bound can fail otherwise");
    ATCertificate cert;
    cert.coefficient = Scalar::one(field);
    if (h.edges.empty()) return cert;

    auto density = edge_density_flow(h);
    const int k = static_cast<int>(ceil_rational(density.density).get_si());
    auto res = hall_representatives(h, k);
    auto* reps = std::get_if<RepresentativeSystem>(&res);
    check_internal(reps != nullptr, "representatives must exist at the density ceiling");

    Monomial monomial;
    for (int rep : reps->rep) monomial = monomial.times(rep);
    cert.exponents = monomial;
    cert.coefficient = coefficient_of(all_ones_system(h, field), monomial);
    cert.at_value = monomial.max_exponent() + 1;
    check_internal(!cert.coefficient.is_zero(), "all-ones certificate coefficient vanished");
    if (field.kind() == FieldKind::Rational)
        check_internal(cert.coefficient.rational_value() > 0,
                       "all-ones certificate coefficient must be a positive count");
    check_internal(cert.at_value == k + 1,
                   "every representative system at the ceiling saturates some vertex");
    return cert;
}

SpanDecomposition difference_decomposition(const LinearSystem& sys, int edge, int u, int w) {
    sys.validate();
    require(edge >= 0 && static_cast<std::size_t>(edge) < sys.hypergraph.edges.size(),
            "edge index out of range");
    require(sys.vertex_position(edge, u) >= 0 && sys.vertex_position(edge, w) >= 0,
            "both endpoints must lie in the edge");
    SpanDecomposition dec;
    dec.edge = edge;
    if (u == w) return dec;

    auto two_terms = [&](int from, int to) {
        Scalar diff = sys.coeff(edge, from) - sys.coeff(edge, to);
        Scalar weight = Scalar::one(sys.field) / diff;
        PermutationAssignment id = PermutationAssignment::identity(sys);
        dec.terms.emplace_back(id, weight);
        PermutationAssignment swap = PermutationAssignment::identity(sys);
        swap.apply_transposition(edge, sys.vertex_position(edge, from),
                                 sys.vertex_position(edge, to));
        dec.terms.emplace_back(swap, Scalar::zero(sys.field) - weight);
    };

    if (sys.coeff(edge, u) != sys.coeff(edge, w)) {
        two_terms(u, w);
        return dec;
    }
    int via = -1;
    for (int v : sys.hypergraph.edges[static_cast<std::size_t>(edge)]) {
        if (sys.coeff(edge, v) != sys.coeff(edge, u)) {
            via = v;
            break;
        }
    }
    require(via != -1, "edge coefficients are all equal; no decomposition exists");
    two_terms(u, via);
    two_terms(via, w);
    return dec;
}

SpanRouteResult span_route(const LinearSystem& sys) {
    sys.validate();
    require(fully_unbalanced_check(sys).fully_unbalanced, "system must be fully unbalanced");
    const Hypergraph& h = sys.hypergraph;
    const std::size_t m = h.edges.size();

    SpanRouteResult res;
    res.perms = PermutationAssignment::identity(sys);
    res.certificate.coefficient = Scalar::one(sys.field);
    if (m == 0) return res;

    auto density = edge_density_flow(h);
    const int k = static_cast<int>(ceil_rational(density.density).get_si());
    res.capacity = k;
    res.bound = 2 * k + 1;
    auto reduction = multigraph_reduction(h, k, /*trusted_density=*/true);

    // Certificate monomial of the product of endpoint differences over the
    // reduced pairs; max exponent bounded by the pair multigraph's degeneracy.
    LinearSystem diff_sys;
    diff_sys.hypergraph = reduction.g;
    diff_sys.field = sys.field;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& f = reduction.g.edges[i];
        Scalar plus = Scalar::one(sys.field);
        Scalar minus = Scalar::zero(sys.field) - plus;
        if (reduction.reps.rep[i] == f[0])
            diff_sys.coeffs.push_back({plus, minus});
        else
            diff_sys.coeffs.push_back({minus, plus});
    }
    diff_sys.validate();
    auto peel_cert = degeneracy_certificate_detail(diff_sys);
    const Monomial target = peel_cert.certificate.exponents;
    check_internal(target.max_exponent() <= 2 * k,
                   "difference-product certificate exceeded twice the capacity");

    std::vector<SpanDecomposition> decs;
    decs.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& f = reduction.g.edges[i];
        int rep = reduction.reps.rep[i];
        int other = f[0] == rep ? f[1] : f[0];
        decs.push_back(difference_decomposition(sys, static_cast<int>(i), rep, other));
    }

    // Depth-first search over per-edge decomposition choices, sharing the
    // coefficient DP prefix and pruning branches whose state dies out.
    std::vector<SparsePoly> states(m + 1);
    states[0].field = sys.field;
    states[0].add_term(Monomial(), Scalar::one(sys.field));
    std::vector<int> choice(m, -1);
    bool found = false;
    Scalar found_coeff = Scalar::zero(sys.field);

    auto rec = [&](auto&& self, std::size_t depth) -> void {
        if (found) return;
        if (depth == m) {
            auto it = states[m].terms.find(target);
            if (it != states[m].terms.end() && !it->second.is_zero()) {
                found = true;
                found_coeff = it->second;
            }
            return;
        }
        const auto& e = h.edges[depth];
        const auto& row = sys.coeffs[depth];
        for (std::size_t t = 0; t < decs[depth].terms.size() && !found; ++t) {
            const auto& sigma = decs[depth].terms[t].first.local[depth];
            std::vector<Scalar> permuted(row.size(), Scalar::zero(sys.field));
            for (std::size_t j = 0; j < row.size(); ++j)
                permuted[j] = row[static_cast<std::size_t>(sigma[j])];
            states[depth + 1] = dp_step(states[depth], e, permuted, target);
            if (states[depth + 1].terms.empty()) continue;
            choice[depth] = static_cast<int>(t);
            self(self, depth + 1);
        }
    };
    rec(rec, 0);
    check_internal(found, "some decomposition choice must hit the certificate monomial");

    for (std::size_t i = 0; i < m; ++i)
        res.perms.local[i] = decs[i].terms[static_cast<std::size_t>(choice[i])].first.local[i];
    res.certificate.exponents = target;
    res.certificate.coefficient = found_coeff;
    res.certificate.at_value = target.max_exponent() + 1;
    check_internal(coefficient_of(apply_permutations(sys, res.perms), target) == found_coeff,
                   "span certificate coefficient failed the recheck");
    return res;
}

}  // namespace hypat
