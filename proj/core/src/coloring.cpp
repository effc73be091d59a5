#include "hypat/coloring.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "hypat/errors.hpp"

namespace hypat {

namespace {

// Edge indices grouped by their largest vertex: coloring vertices in increasing
// order, an edge can be tested exactly when its largest vertex is reached.
std::vector<std::vector<int>> edges_closing_at(const Hypergraph& h) {
    std::vector<std::vector<int>> closing(static_cast<std::size_t>(h.n) + 1);
    for (std::size_t i = 0; i < h.edges.size(); ++i)
        closing[static_cast<std::size_t>(h.edges[i].back())].push_back(static_cast<int>(i));
    return closing;
}

bool monochromatic(const std::vector<int>& edge, const std::vector<int>& colors) {
    for (int v : edge)
        if (colors[static_cast<std::size_t>(v)] != colors[static_cast<std::size_t>(edge[0])])
            return false;
    return true;
}

} // namespace

bool Coloring::proper(const Hypergraph& h) const {
    h.validate();
    require(colors.size() >= static_cast<std::size_t>(h.n) + 1,
            "coloring must cover every vertex");
    for (const auto& e : h.edges)
        if (monochromatic(e, colors)) return false;
    return true;
}

ChromaticReport chromatic_number(const Hypergraph& h, int max_colors) {
    h.validate();
    require(max_colors >= 0, "negative palette size");
    if (h.n > 20) throw budget_error("chromatic backtracking is limited to 20 vertices");

    ChromaticReport rep;
    if (h.n == 0) {
        rep.value = 0;
        rep.coloring.colors = {0};
        return rep;
    }
    auto closing = edges_closing_at(h);
    std::vector<int> colors(static_cast<std::size_t>(h.n) + 1, 0);

    // First-fit palette growth: vertex v may open at most one fresh color, which
    // kills palette-permutation symmetry.
    std::function<bool(int, int, int)> fill = [&](int c, int v, int used) {
        if (v > h.n) return true;
        int limit = std::min(c, used + 1);
        for (int col = 1; col <= limit; ++col) {
            colors[static_cast<std::size_t>(v)] = col;
            bool ok = true;
            for (int ei : closing[static_cast<std::size_t>(v)])
                ok = ok && !monochromatic(h.edges[static_cast<std::size_t>(ei)], colors);
            if (ok && fill(c, v + 1, std::max(used, col))) return true;
        }
        colors[static_cast<std::size_t>(v)] = 0;
        return false;
    };

    for (int c = 1; c <= max_colors; ++c) {
        if (fill(c, 1, 0)) {
            rep.value = c;
            rep.coloring.colors = colors;
            return rep;
        }
    }
    return rep;
}

LinearSystem unbalanced_linear_system(const Hypergraph& h, unsigned s) {
    h.validate();
    LinearSystem sys;
    sys.hypergraph = h;
    sys.field = FieldDescriptor::cyclotomic(s);
    for (const auto& e : h.edges) {
        std::vector<Scalar> row(e.size(), Scalar::one(sys.field));
        row.back() = Scalar::from_integer(1 - static_cast<long>(e.size()), sys.field);
        sys.coeffs.push_back(std::move(row));
    }
    sys.validate();
    return sys;
}

std::optional<Coloring> cn_coloring(const LinearSystem& sys, unsigned s) {
    sys.validate();
    require(s >= 2, "need at least two roots of unity");
    const FieldDescriptor target = FieldDescriptor::cyclotomic(s);

    LinearSystem work = sys;
    if (sys.field.kind() == FieldKind::Rational) {
        work.field = target;
        for (auto& row : work.coeffs)
            for (auto& c : row) c = Scalar::from_rational(c.rational_value(), target);
    } else {
        require(sys.field == target, "system field must be Rational or Cyclotomic of order s");
    }

    std::vector<Scalar> roots;
    for (unsigned j = 0; j < s; ++j) roots.push_back(Scalar::root_of_unity(s, j));

    const Hypergraph& h = work.hypergraph;
    auto closing = edges_closing_at(h);
    std::vector<int> colors(static_cast<std::size_t>(h.n) + 1, -1);
    std::size_t visited = 0;

    std::function<bool(int)> fill = [&](int v) {
        if (v > h.n) return true;
        if (++visited > 5'000'000) throw budget_error("root-of-unity search budget exceeded");
        for (unsigned j = 0; j < s; ++j) {
            colors[static_cast<std::size_t>(v)] = static_cast<int>(j);
            bool ok = true;
            for (int ei : closing[static_cast<std::size_t>(v)]) {
                const auto& e = h.edges[static_cast<std::size_t>(ei)];
                Scalar bracket = Scalar::zero(target);
                for (std::size_t p = 0; p < e.size(); ++p)
                    bracket += work.coeffs[static_cast<std::size_t>(ei)][p] *
                               roots[static_cast<std::size_t>(
                                   colors[static_cast<std::size_t>(e[p])])];
                if (bracket.is_zero()) {
                    ok = false;
                    break;
                }
            }
            if (ok && fill(v + 1)) return true;
        }
        colors[static_cast<std::size_t>(v)] = -1;
        return false;
    };

    if (!fill(1)) return std::nullopt;
    Coloring out;
    out.colors = colors;
    return out;
}

ListColorReport list_colorable(const Hypergraph& h, const std::vector<std::vector<int>>& lists) {
    h.validate();
    require(lists.size() >= static_cast<std::size_t>(h.n) + 1, "one list per vertex required");
    double log_product = 0;
    for (int v = 1; v <= h.n; ++v) {
        require(!lists[static_cast<std::size_t>(v)].empty(), "empty color list");
        log_product += std::log2(static_cast<double>(lists[static_cast<std::size_t>(v)].size()));
    }
    if (log_product > 30) throw budget_error("list assignment space exceeds the search budget");

    auto closing = edges_closing_at(h);
    std::vector<int> colors(static_cast<std::size_t>(h.n) + 1, 0);

    std::function<bool(int)> fill = [&](int v) {
        if (v > h.n) return true;
        for (int col : lists[static_cast<std::size_t>(v)]) {
            colors[static_cast<std::size_t>(v)] = col;
            bool ok = true;
            for (int ei : closing[static_cast<std::size_t>(v)])
                ok = ok && !monochromatic(h.edges[static_cast<std::size_t>(ei)], colors);
            if (ok && fill(v + 1)) return true;
        }
        colors[static_cast<std::size_t>(v)] = 0;
        return false;
    };

    ListColorReport rep;
    rep.colorable = fill(1);
    if (rep.colorable) rep.coloring.colors = colors;
    return rep;
}

bool is_coloring_polynomial(const LinearSystem& sys) {
    sys.validate();
    for (const auto& row : sys.coeffs) {
        Scalar sum = Scalar::zero(sys.field);
        for (const auto& c : row) sum += c;
        if (!sum.is_zero()) return false;
    }
    return true;
}

bool f_paintable(const Hypergraph& h, const std::vector<int>& f) {
    h.validate();
    if (h.n > 7) throw budget_error("paint game is limited to 7 vertices");
    require(f.size() >= static_cast<std::size_t>(h.n) + 1, "one token count per vertex");
    for (int v = 1; v <= h.n; ++v)
        require(f[static_cast<std::size_t>(v)] >= 0, "negative token count");

    std::vector<unsigned> edge_masks;
    for (const auto& e : h.edges) {
        unsigned mask = 0;
        for (int v : e) mask |= 1u << (v - 1);
        edge_masks.push_back(mask);
    }
    auto independent = [&](unsigned xp) {
        for (unsigned em : edge_masks)
            if ((em & ~xp) == 0) return false;
        return true;
    };

    std::map<std::vector<int>, bool> memo;
    std::function<bool(unsigned, const std::vector<int>&)> win =
        [&](unsigned u, const std::vector<int>& tok) -> bool {
        if (u == 0) return true;
        for (int v = 1; v <= h.n; ++v)
            if ((u >> (v - 1) & 1u) && tok[static_cast<std::size_t>(v)] == 0) return false;

        std::vector<int> key = {static_cast<int>(u)};
        for (int v = 1; v <= h.n; ++v)
            if (u >> (v - 1) & 1u) key.push_back(tok[static_cast<std::size_t>(v)]);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        if (memo.size() > 2'000'000) throw budget_error("paint game memo budget exceeded");

        bool result = true;
        for (unsigned x = u; x != 0 && result; x = (x - 1) & u) {
            bool exists = false;
            unsigned xp = x;
            while (!exists) {
                if (independent(xp)) {
                    std::vector<int> next = tok;
                    for (int v = 1; v <= h.n; ++v)
                        if ((x & ~xp) >> (v - 1) & 1u) --next[static_cast<std::size_t>(v)];
                    exists = win(u & ~xp, next);
                }
                if (xp == 0) break;
                xp = (xp - 1) & x;
            }
            result = exists;
        }
        memo[key] = result;
        return result;
    };

    unsigned all = h.n == 0 ? 0u : (1u << h.n) - 1u;
    return win(all, f);
}

PainterStrategy::PainterStrategy(const LinearSystem& sys, const Monomial& alpha) {
    sys.validate();
    require(is_coloring_polynomial(sys), "strategy needs a coloring polynomial");
    require(!coefficient_of(sys, alpha).is_zero(), "certificate coefficient must be nonzero");
    residual_ = sys;
    const int n = sys.hypergraph.n;
    budget_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (auto [v, e] : alpha.pairs()) budget_[static_cast<std::size_t>(v)] = e;
    for (int v = 1; v <= n; ++v) uncolored_.push_back(v);
}

bool PainterStrategy::viable(const LinearSystem& candidate, const std::vector<int>& caps) const {
    return !expand_variable_capped(candidate, caps).terms.empty();
}

std::vector<int> PainterStrategy::move(const std::vector<int>& lister_set) {
    require(!finished(), "all vertices are already colored");
    require(!lister_set.empty(), "reveal set must be nonempty");
    std::vector<int> x(lister_set);
    std::sort(x.begin(), x.end());
    x.erase(std::unique(x.begin(), x.end()), x.end());
    for (int v : x)
        require(std::binary_search(uncolored_.begin(), uncolored_.end(), v),
                "reveal set must consist of uncolored vertices");

    const int n = residual_.hypergraph.n;
    const std::size_t k = x.size();
    for (std::size_t size = k + 1; size-- > 0;) {
        for (unsigned mask = 0; mask < (1u << k); ++mask) {
            if (static_cast<std::size_t>(__builtin_popcount(mask)) != size) continue;
            std::vector<int> chosen;
            for (std::size_t j = 0; j < k; ++j)
                if (mask >> j & 1u) chosen.push_back(x[j]);

            // Tokens must survive on the revealed vertices left uncolored.
            bool affordable = true;
            for (std::size_t j = 0; j < k; ++j)
                if (!(mask >> j & 1u) && budget_[static_cast<std::size_t>(x[j])] < 1)
                    affordable = false;
            if (!affordable) continue;

            // The committed set may not swallow a surviving edge.
            bool indep = true;
            for (const auto& e : residual_.hypergraph.edges) {
                bool inside = true;
                for (int v : e)
                    inside = inside && std::binary_search(chosen.begin(), chosen.end(), v);
                if (inside) {
                    indep = false;
                    break;
                }
            }
            if (!indep) continue;

            LinearSystem candidate;
            candidate.hypergraph.n = n;
            candidate.field = residual_.field;
            for (std::size_t i = 0; i < residual_.hypergraph.edges.size(); ++i) {
                const auto& e = residual_.hypergraph.edges[i];
                bool touches = false;
                for (int v : e)
                    touches = touches || std::binary_search(chosen.begin(), chosen.end(), v);
                if (touches) continue;
                candidate.hypergraph.edges.push_back(e);
                candidate.coeffs.push_back(residual_.coeffs[i]);
            }

            std::vector<int> caps(static_cast<std::size_t>(n) + 1, 0);
            for (int v : uncolored_) caps[static_cast<std::size_t>(v)] = budget_[static_cast<std::size_t>(v)];
            for (std::size_t j = 0; j < k; ++j)
                if (!(mask >> j & 1u)) --caps[static_cast<std::size_t>(x[j])];
            for (int v : chosen) caps[static_cast<std::size_t>(v)] = 0;
            if (!viable(candidate, caps)) continue;

            // Commit.
            for (std::size_t j = 0; j < k; ++j) {
                if (mask >> j & 1u)
                    budget_[static_cast<std::size_t>(x[j])] = -1;
                else
                    --budget_[static_cast<std::size_t>(x[j])];
            }
            std::vector<int> remaining;
            for (int v : uncolored_)
                if (!std::binary_search(chosen.begin(), chosen.end(), v)) remaining.push_back(v);
            uncolored_ = std::move(remaining);
            residual_ = std::move(candidate);

            ++round_;
            std::ostringstream line;
            line << "round " << round_ << " | lister";
            for (int v : x) line << ' ' << v;
            line << " | painter";
            if (chosen.empty()) line << " -";
            for (int v : chosen) line << ' ' << v;
            line << " | tokens";
            if (uncolored_.empty()) line << " -";
            for (int v : uncolored_)
                line << ' ' << v << '=' << budget_[static_cast<std::size_t>(v)];
            transcript_.push_back(line.str());
            return chosen;
        }
    }
    throw internal_error("no independent subset keeps a certificate monomial in budget");
}

PainterStrategy painter_from_certificate(const LinearSystem& sys, const Monomial& alpha) {
    return PainterStrategy(sys, alpha);
}

bool unbalanceable_game(const SimpleGraph& g, const std::vector<std::optional<Scalar>>& w0,
                        const std::vector<int>& f, const std::vector<Scalar>& pool,
                        const UnbalanceableConfig& cfg) {
    g.validate();
    const std::size_t m = g.edges.size();
    require(m <= 5, "weighting game is limited to 5 edges");
    require(w0.size() == m && f.size() == m, "per-edge weights and tokens required");

    FieldDescriptor field = FieldDescriptor::rational();
    bool field_seen = false;
    auto absorb = [&](const Scalar& s) {
        if (!field_seen) {
            field = s.field();
            field_seen = true;
        } else {
            require(s.field() == field, "all weights must share one field");
        }
    };
    for (const auto& w : w0)
        if (w) absorb(*w);
    for (const auto& a : pool) absorb(a);
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = i + 1; j < pool.size(); ++j)
            require(pool[i] != pool[j], "pool values must be pairwise distinct");
    require(pool.size() <= 16, "pool is limited to 16 values");

    // One table of every scalar a state can mention, so states pack into ints.
    std::vector<Scalar> table;
    auto intern = [&](const Scalar& s) {
        for (std::size_t i = 0; i < table.size(); ++i)
            if (table[i] == s) return static_cast<int>(i);
        table.push_back(s);
        return static_cast<int>(table.size() - 1);
    };

    // state[e] = weight id, or -(tokens + 1) while unweighted.
    std::vector<int> state(m, 0);
    for (std::size_t e = 0; e < m; ++e) {
        if (w0[e]) {
            state[e] = intern(*w0[e]);
        } else {
            require(f[e] >= 0, "negative token count");
            state[e] = -(f[e] + 1);
        }
    }
    std::vector<int> pool_id;
    for (const auto& a : pool) pool_id.push_back(intern(a));

    auto separated = [&](const std::vector<int>& st) {
        std::vector<Scalar> sums(static_cast<std::size_t>(g.n) + 1, Scalar::zero(field));
        for (std::size_t e = 0; e < m; ++e) {
            auto [u, v] = g.edges[e];
            sums[static_cast<std::size_t>(u)] += table[static_cast<std::size_t>(st[e])];
            sums[static_cast<std::size_t>(v)] += table[static_cast<std::size_t>(st[e])];
        }
        if (cfg.scope == SumScope::AdjacentOnly) {
            for (auto [u, v] : g.edges)
                if (sums[static_cast<std::size_t>(u)] == sums[static_cast<std::size_t>(v)])
                    return false;
            return true;
        }
        for (int u = 1; u <= g.n; ++u)
            for (int v = u + 1; v <= g.n; ++v)
                if (sums[static_cast<std::size_t>(u)] == sums[static_cast<std::size_t>(v)])
                    return false;
        return true;
    };

    std::map<std::pair<std::vector<int>, unsigned>, bool> memo;
    std::function<bool(const std::vector<int>&, unsigned)> rec =
        [&](const std::vector<int>& st, unsigned amask) -> bool {
        if (amask == 0) return false;
        std::vector<int> open;
        for (std::size_t e = 0; e < m; ++e)
            if (st[e] < 0) open.push_back(static_cast<int>(e));
        for (int e : open)
            if (st[static_cast<std::size_t>(e)] == -1) return false;
        if (open.empty()) return separated(st);

        auto key = std::make_pair(st, amask);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        if (memo.size() > cfg.memo_budget) throw budget_error("weighting game memo budget exceeded");

        bool result = true;
        const unsigned full = (1u << open.size()) - 1u;
        for (unsigned x = full; x != 0 && result; --x) {
            for (std::size_t a = 0; a < pool.size() && result; ++a) {
                if (!(amask >> a & 1u)) continue;
                bool exists = false;
                unsigned xp = x;
                while (!exists) {
                    std::vector<int> next = st;
                    for (std::size_t j = 0; j < open.size(); ++j) {
                        std::size_t e = static_cast<std::size_t>(open[j]);
                        if (xp >> j & 1u)
                            next[e] = pool_id[a];
                        else if (x >> j & 1u)
                            next[e] += 1; // one token burned (stored as -(tok + 1))
                    }
                    exists = rec(next, amask & ~(1u << a));
                    if (xp == 0) break;
                    xp = (xp - 1) & x;
                }
                result = exists;
            }
        }
        memo[key] = result;
        return result;
    };

    return rec(state, pool.empty() ? 0u : (1u << pool.size()) - 1u);
}

} // namespace hypat
