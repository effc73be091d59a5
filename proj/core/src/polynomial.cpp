#include "hypat/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>

#include "hypat/errors.hpp"

namespace hypat {

Monomial Monomial::from_pairs(std::vector<std::pair<int, int>> pairs) {
    std::sort(pairs.begin(), pairs.end());
    Monomial m;
    for (const auto& [v, e] : pairs) {
        require(v >= 1, "monomial vertex must be positive");
        require(e >= 0, "monomial exponent must be nonnegative");
        if (e == 0) continue;
        require(m.pairs_.empty() || m.pairs_.back().first != v, "duplicate monomial vertex");
        m.pairs_.emplace_back(v, e);
    }
    return m;
}

Monomial Monomial::from_dense(const std::vector<int>& exps) {
    Monomial m;
    for (std::size_t i = 0; i < exps.size(); ++i)
        if (exps[i] > 0) m.pairs_.emplace_back(static_cast<int>(i) + 1, exps[i]);
    return m;
}

int Monomial::exponent(int v) const {
    auto it = std::lower_bound(pairs_.begin(), pairs_.end(), std::make_pair(v, 0));
    if (it != pairs_.end() && it->first == v) return it->second;
    return 0;
}

int Monomial::max_exponent() const {
    int best = 0;
    for (const auto& [v, e] : pairs_) best = std::max(best, e);
    return best;
}

long long Monomial::total_degree() const {
    long long d = 0;
    for (const auto& [v, e] : pairs_) d += e;
    return d;
}

Monomial Monomial::times(int v) const {
    Monomial m = *this;
    auto it = std::lower_bound(m.pairs_.begin(), m.pairs_.end(), std::make_pair(v, 0));
    if (it != m.pairs_.end() && it->first == v)
        ++it->second;
    else
        m.pairs_.insert(it, {v, 1});
    return m;
}

std::optional<Monomial> Monomial::divided_by(int v) const {
    Monomial m = *this;
    auto it = std::lower_bound(m.pairs_.begin(), m.pairs_.end(), std::make_pair(v, 0));
    if (it == m.pairs_.end() || it->first != v) return std::nullopt;
    if (--it->second == 0) m.pairs_.erase(it);
    return m;
}

bool Monomial::lex_less(const Monomial& a, const Monomial& b) {
    constexpr int kEnd = std::numeric_limits<int>::max();
    std::size_t i = 0, j = 0;
    while (i < a.pairs_.size() || j < b.pairs_.size()) {
        int va = i < a.pairs_.size() ? a.pairs_[i].first : kEnd;
        int vb = j < b.pairs_.size() ? b.pairs_[j].first : kEnd;
        int v = std::min(va, vb);
        int ea = va == v ? a.pairs_[i].second : 0;
        int eb = vb == v ? b.pairs_[j].second : 0;
        if (ea != eb) return ea < eb;
        if (va == v) ++i;
        if (vb == v) ++j;
    }
    return false;
}

std::string Monomial::to_string() const {
    if (pairs_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : pairs_) {
        if (!first) os << '*';
        first = false;
        os << 'x' << v;
        if (e > 1) os << '^' << e;
    }
    return os.str();
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (const auto& [v, e] : m.pairs()) {
        h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
        h = (h ^ static_cast<std::size_t>(e)) * 1099511628211ull;
    }
    return h;
}

void LinearSystem::validate() const {
    hypergraph.validate();
    require(coeffs.size() == hypergraph.edges.size(), "coefficient rows != edge count");
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        require(coeffs[i].size() == hypergraph.edges[i].size(),
                "coefficient row length != edge size");
        for (const Scalar& a : coeffs[i]) {
            require(a.field() == field, "coefficient field mismatch");
            require(!a.is_zero(), "zero coefficient in linear system");
        }
    }
}

int LinearSystem::vertex_position(int edge_idx, int vertex) const {
    const auto& e = hypergraph.edges[static_cast<std::size_t>(edge_idx)];
    auto it = std::lower_bound(e.begin(), e.end(), vertex);
    if (it == e.end() || *it != vertex) return -1;
    return static_cast<int>(it - e.begin());
}

Scalar LinearSystem::coeff(int edge_idx, int vertex) const {
    int pos = vertex_position(edge_idx, vertex);
    require(pos >= 0, "vertex not in edge");
    return coeffs[static_cast<std::size_t>(edge_idx)][static_cast<std::size_t>(pos)];
}

LinearSystem all_ones_system(const Hypergraph& h, const FieldDescriptor& f) {
    h.validate();
    LinearSystem sys;
    sys.hypergraph = h;
    sys.field = f;
    sys.coeffs.reserve(h.edges.size());
    for (const auto& e : h.edges)
        sys.coeffs.emplace_back(e.size(), Scalar::one(f));
    return sys;
}

LinearSystem parse_linear_system(std::istream& in) {
    std::string line;
    // field line
    std::string field_text;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        std::string kw;
        ls >> kw;
        if (kw != "field") throw parse_error("expected 'field <descriptor>' first");
        if (!(ls >> field_text)) throw parse_error("missing field descriptor");
        break;
    }
    if (field_text.empty()) throw parse_error("empty linear-system input");

    LinearSystem sys;
    sys.field = FieldDescriptor::parse(field_text);
    sys.hypergraph = parse_hypergraph(in);

    auto strip = [](std::string s) {
        auto b = s.find_first_not_of(" \t\r");
        auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };

    for (std::size_t i = 0; i < sys.hypergraph.edges.size(); ++i) {
        std::string row;
        do {
            if (!std::getline(in, row)) throw parse_error("missing coefficient rows");
        } while (row.find_first_not_of(" \t\r") == std::string::npos);
        std::string body = strip(row);
        if (body.rfind("coeffs", 0) != 0)
            throw parse_error("expected 'coeffs ...' row for edge " + std::to_string(i + 1));
        body = strip(body.substr(6));
        std::vector<Scalar> row_coeffs;
        std::size_t start = 0;
        while (start <= body.size()) {
            auto bar = body.find('|', start);
            std::string piece =
                strip(bar == std::string::npos ? body.substr(start) : body.substr(start, bar - start));
            if (piece.empty()) throw parse_error("empty coefficient in row " + std::to_string(i + 1));
            Scalar s = Scalar::parse(piece);
            if (!(s.field() == sys.field)) {
                // rationals embed into any field; anything else must match
                if (s.field().kind() == FieldKind::Rational)
                    s = Scalar::from_rational(s.rational_value(), sys.field);
                else
                    throw parse_error("coefficient field mismatch in row " + std::to_string(i + 1));
            }
            row_coeffs.push_back(std::move(s));
            if (bar == std::string::npos) break;
            start = bar + 1;
        }
        if (row_coeffs.size() != sys.hypergraph.edges[i].size())
            throw parse_error("row " + std::to_string(i + 1) + " has " +
                              std::to_string(row_coeffs.size()) + " coefficients, edge has " +
                              std::to_string(sys.hypergraph.edges[i].size()) + " vertices");
        sys.coeffs.push_back(std::move(row_coeffs));
    }
    try {
        sys.validate();
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    }
    return sys;
}

LinearSystem parse_linear_system(const std::string& text) {
    std::istringstream is(text);
    return parse_linear_system(is);
}

std::string format_linear_system(const LinearSystem& sys) {
    std::ostringstream os;
    os << "field " << sys.field.to_string() << '\n';
    os << format_hypergraph(sys.hypergraph);
    for (const auto& row : sys.coeffs) {
        os << "coeffs ";
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) os << " | ";
            os << row[j].to_string();
        }
        os << '\n';
    }
    return os.str();
}

void SparsePoly::add_term(const Monomial& m, const Scalar& c) {
    auto it = terms.find(m);
    if (it == terms.end()) {
        if (!c.is_zero()) terms.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

namespace {

SparsePoly expand_impl(const LinearSystem& sys,
                       const std::function<bool(const Monomial&, int)>& admit_after_times,
                       std::size_t term_budget) {
    sys.validate();
    SparsePoly acc;
    acc.field = sys.field;
    acc.terms.emplace(Monomial(), Scalar::one(sys.field));
    for (std::size_t i = 0; i < sys.hypergraph.edges.size(); ++i) {
        SparsePoly next;
        next.field = sys.field;
        const auto& edge = sys.hypergraph.edges[i];
        for (const auto& [mono, c] : acc.terms) {
            for (std::size_t j = 0; j < edge.size(); ++j) {
                int v = edge[j];
                if (!admit_after_times(mono, v)) continue;
                next.add_term(mono.times(v), c * sys.coeffs[i][j]);
                if (next.terms.size() > term_budget)
                    throw budget_error("expansion exceeded the term budget");
            }
        }
        acc = std::move(next);
        if (acc.terms.empty()) break;
    }
    return acc;
}

} // namespace

SparsePoly expand_truncated(const LinearSystem& sys, std::optional<int> cap,
                            std::size_t term_budget) {
    if (cap) require(*cap >= 1, "cap must be positive");
    return expand_impl(
        sys,
        [&](const Monomial& m, int v) { return !cap || m.exponent(v) + 1 <= *cap - 1; },
        term_budget);
}

SparsePoly expand_variable_capped(const LinearSystem& sys, const std::vector<int>& caps,
                                  std::size_t term_budget) {
    require(caps.size() >= static_cast<std::size_t>(sys.hypergraph.n) + 1,
            "caps vector must cover all vertices");
    return expand_impl(
        sys,
        [&](const Monomial& m, int v) {
            return m.exponent(v) + 1 <= caps[static_cast<std::size_t>(v)];
        },
        term_budget);
}

Scalar coefficient_of(const LinearSystem& sys, const Monomial& target) {
    sys.validate();
    const std::size_t m = sys.hypergraph.edges.size();
    if (target.total_degree() != static_cast<long long>(m))
        return Scalar::zero(sys.field); // homogeneity
    std::unordered_map<Monomial, Scalar, MonomialHash> state;
    state.emplace(Monomial(), Scalar::one(sys.field));
    for (std::size_t i = 0; i < m && !state.empty(); ++i) {
        std::unordered_map<Monomial, Scalar, MonomialHash> next;
        const auto& edge = sys.hypergraph.edges[i];
        for (const auto& [mono, c] : state) {
            for (std::size_t j = 0; j < edge.size(); ++j) {
                int v = edge[j];
                if (mono.exponent(v) >= target.exponent(v)) continue;
                Monomial grown = mono.times(v);
                Scalar add = c * sys.coeffs[i][j];
                auto it = next.find(grown);
                if (it == next.end()) {
                    if (!add.is_zero()) next.emplace(std::move(grown), std::move(add));
                } else {
                    it->second += add;
                    if (it->second.is_zero()) next.erase(it);
                }
            }
        }
        state = std::move(next);
    }
    auto it = state.find(target);
    return it == state.end() ? Scalar::zero(sys.field) : it->second;
}

std::string ATCertificate::to_string() const {
    return "AT = " + std::to_string(at_value) + ", certificate " + exponents.to_string() +
           ", coeff " + coefficient.to_string();
}

ATCertificate alon_tarsi_number(const LinearSystem& sys, std::size_t term_budget) {
    sys.validate();
    const int max_cap = static_cast<int>(sys.hypergraph.edges.size()) + 1;
    for (int cap = 1;; ++cap) {
        check_internal(cap <= max_cap, "AT search ran past the total degree");
        SparsePoly p = expand_truncated(sys, cap, term_budget);
        if (p.terms.empty()) continue;
        const Monomial* best = nullptr;
        for (const auto& [mono, c] : p.terms)
            if (!best || Monomial::lex_less(mono, *best)) best = &mono;
        ATCertificate cert;
        cert.exponents = *best;
        cert.coefficient = p.terms.at(*best);
        cert.at_value = cap; // all survivors of the first nonempty cap peak at cap - 1
        check_internal(cert.exponents.max_exponent() == cap - 1 || sys.hypergraph.edges.empty(),
                       "survivor of the first nonempty cap has unexpected max exponent");
        return cert;
    }
}

PermutationAssignment PermutationAssignment::identity(const LinearSystem& sys) {
    PermutationAssignment p;
    p.local.reserve(sys.hypergraph.edges.size());
    for (const auto& e : sys.hypergraph.edges) {
        std::vector<int> id(e.size());
        for (std::size_t j = 0; j < e.size(); ++j) id[j] = static_cast<int>(j);
        p.local.push_back(std::move(id));
    }
    return p;
}

void PermutationAssignment::apply_transposition(int edge_idx, int pos_a, int pos_b) {
    auto& sigma = local[static_cast<std::size_t>(edge_idx)];
    std::swap(sigma[static_cast<std::size_t>(pos_a)], sigma[static_cast<std::size_t>(pos_b)]);
}

std::string PermutationAssignment::edge_cycles(const LinearSystem& sys, int edge_idx) const {
    const auto& sigma = local[static_cast<std::size_t>(edge_idx)];
    const auto& edge = sys.hypergraph.edges[static_cast<std::size_t>(edge_idx)];
    std::vector<char> seen(sigma.size(), 0);
    std::ostringstream os;
    bool any = false;
    for (std::size_t start = 0; start < sigma.size(); ++start) {
        if (seen[start] || sigma[start] == static_cast<int>(start)) continue;
        os << '(';
        std::size_t cur = start;
        bool first = true;
        while (!seen[cur]) {
            seen[cur] = 1;
            if (!first) os << ' ';
            first = false;
            os << edge[cur];
            cur = static_cast<std::size_t>(sigma[cur]);
        }
        os << ')';
        any = true;
    }
    return any ? os.str() : "id";
}

LinearSystem apply_permutations(const LinearSystem& sys, const PermutationAssignment& perms) {
    sys.validate();
    require(perms.local.size() == sys.hypergraph.edges.size(), "permutation count != edge count");
    LinearSystem out = sys;
    for (std::size_t i = 0; i < sys.coeffs.size(); ++i) {
        const auto& sigma = perms.local[i];
        require(sigma.size() == sys.coeffs[i].size(), "permutation domain mismatch");
        std::vector<char> hit(sigma.size(), 0);
        for (int p : sigma) {
            require(p >= 0 && static_cast<std::size_t>(p) < sigma.size() && !hit[static_cast<std::size_t>(p)],
                    "not a bijection");
            hit[static_cast<std::size_t>(p)] = 1;
        }
        for (std::size_t j = 0; j < sigma.size(); ++j)
            out.coeffs[i][j] = sys.coeffs[i][static_cast<std::size_t>(sigma[j])];
    }
    return out;
}

UnbalancedReport fully_unbalanced_check(const LinearSystem& sys) {
    sys.validate();
    UnbalancedReport rep;
    rep.fully_unbalanced = true;
    rep.witnesses.reserve(sys.coeffs.size());
    for (std::size_t i = 0; i < sys.coeffs.size(); ++i) {
        // A witness is a pair of vertices whose coefficients differ in this edge;
        // an edge with no witness is balanced (all coefficients equal).
        std::optional<std::pair<int, int>> w;
        const auto& edge = sys.hypergraph.edges[i];
        for (std::size_t j = 0; j < sys.coeffs[i].size() && !w; ++j)
            for (std::size_t k = j + 1; k < sys.coeffs[i].size() && !w; ++k)
                if (sys.coeffs[i][j] != sys.coeffs[i][k]) w = std::make_pair(edge[j], edge[k]);
        if (!w) rep.fully_unbalanced = false;
        rep.witnesses.push_back(w);
    }
    return rep;
}

Scalar evaluate(const LinearSystem& sys, const std::vector<Scalar>& point) {
    sys.validate();
    require(point.size() >= static_cast<std::size_t>(sys.hypergraph.n) + 1,
            "point must assign a value to every vertex");
    Scalar prod = Scalar::one(sys.field);
    for (std::size_t i = 0; i < sys.hypergraph.edges.size(); ++i) {
        Scalar bracket = Scalar::zero(sys.field);
        const auto& edge = sys.hypergraph.edges[i];
        for (std::size_t j = 0; j < edge.size(); ++j) {
            const Scalar& x = point[static_cast<std::size_t>(edge[j])];
            require(x.field() == sys.field, "evaluation point field mismatch");
            bracket += sys.coeffs[i][j] * x;
        }
        prod *= bracket;
    }
    return prod;
}

} // namespace hypat
