#include "hopfchrom/graph_alg.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>

namespace hopfchrom {

std::vector<Graph> all_graphs_up_to_iso(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    std::set<Graph> reps;
    for (std::uint64_t mask = 0; mask < (1ull << slots.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (size_t t = 0; t < slots.size(); ++t)
            if ((mask >> t) & 1) edges.push_back(slots[t]);
        reps.insert(canonical_form(Graph(n, std::move(edges))).canonical);
    }
    return {reps.begin(), reps.end()};
}

ColouringSet enumerate_colourings(const Graph& g, const IntComposition& alpha, int vertex_cap) {
    if (vertex_cap <= 0) vertex_cap = global_caps().vertex_cap;
    if (g.vertex_count() > vertex_cap)
        throw resource_error("colourings: vertex count exceeds cap");
    if (weight(alpha) != g.vertex_count())
        throw consistency_error("colourings: composition weight != vertex count");
    int n = g.vertex_count();
    int ell = (int)alpha.size();

    // Backtracking over vertices in degree-descending order with class budgets.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree_of(a) > g.degree_of(b); });
    std::vector<int> budget(alpha.begin(), alpha.end());
    std::vector<int> colour(n, 0);
    std::vector<std::vector<int>> found;
    std::function<void(int)> rec = [&](int pos) {
        if (pos == n) {
            found.push_back(colour);
            return;
        }
        int v = order[pos];
        for (int c = 1; c <= ell; ++c) {
            if (budget[c - 1] == 0) continue;
            bool ok = true;
            std::uint64_t m = g.adjacency_mask(v);
            while (m && ok) {
                int w = __builtin_ctzll(m);
                m &= m - 1;
                if (colour[w] == c) ok = false;
            }
            if (!ok) continue;
            colour[v] = c;
            --budget[c - 1];
            rec(pos + 1);
            ++budget[c - 1];
            colour[v] = 0;
        }
    };
    rec(0);
    std::sort(found.begin(), found.end());
    return ColouringSet{g, alpha, std::move(found)};
}

GraphAlgebra::GraphAlgebra(Caps caps)
    : caps_(caps), inst_(young_subsets(2), AbelianGroup::cyclic(2), caps) {}

int GraphAlgebra::key_of(const Graph& g) const {
    if (g.vertex_count() > caps_.degree_cap)
        throw resource_error("graph algebra: vertex count exceeds the degree cap");
    Graph canon = canonical_form(g, caps_.vertex_cap).canonical;
    std::map<YPoint, int> labels;
    for (auto [i, j] : canon.edges()) labels.emplace(YPoint{j, i}, 1);  // descending encoding
    FunctionF f = inst_.make_function(canon.vertex_count(), std::move(labels));
    auto [id, w] = inst_.canonicalize(f);
    // The wreath-side canonical representative must be the canonical graph,
    // otherwise the two canonicalizations have drifted apart.
    if (!(inst_.function_of(id) == f))
        throw consistency_error("graph and function canonical forms disagree for " + canon.str());
    (void)w;
    return id;
}

const Graph& GraphAlgebra::graph_of(int id) const {
    {
        std::lock_guard<std::mutex> lock(graph_mu_);
        auto it = graphs_.find(id);
        if (it != graphs_.end()) return it->second;
    }
    const FunctionF& f = inst_.function_of(id);
    std::vector<std::pair<int, int>> edges;
    for (const auto& [p, lab] : f.labels) edges.emplace_back(p[0], p[1]);
    Graph g(f.n, std::move(edges));
    std::lock_guard<std::mutex> lock(graph_mu_);
    return graphs_.emplace(id, std::move(g)).first->second;
}

SymFunc GraphAlgebra::X_gamma_direct(int id, int irrep) const {
    const Graph& g = graph_of(id);
    const GroupRef& aut_data = inst_.aut_of(id);
    const auto* aut = dynamic_cast<const PermGroup*>(aut_data->group.get());
    const CharacterTable& table = inst_.table_of(id);
    int n = g.vertex_count();

    std::map<IntComposition, long long> coeffs;
    for (const auto& alpha : enumerate_compositions(n)) {
        ColouringSet cols = enumerate_colourings(g, alpha, caps_.vertex_cap);
        ClassFunction rho = permutation_character(
            aut_data, (int)cols.colourings.size(), [&](int e, int point) {
                const Perm& u = aut->element(e);
                const auto& kappa = cols.colourings[point];
                // w.kappa(v) = kappa(w^-1 v); fixed iff kappa(u(v)) == kappa(v).
                for (int v = 0; v < n; ++v)
                    if (kappa[u(v)] != kappa[v]) return -1;
                return point;
            });
        Cyclotomic ip = inner_product(rho, table.rows[irrep]);
        long long c = ip.as_integer();
        if (c < 0) throw consistency_error("X_gamma: negative intertwining number");
        coeffs[alpha] = c;
    }
    return assemble_from_quasi(coeffs);
}

SymFunc GraphAlgebra::X_gamma(const Graph& g, int irrep, XMethod method) const {
    int id = key_of(g);
    const CharacterTable& table = inst_.table_of(id);
    if (irrep < 0 || irrep >= table.count())
        throw consistency_error("X_gamma: irrep index out of range");
    if (method == XMethod::direct) return X_gamma_direct(id, irrep);
    return psi_key(inst_, MBasisKey{id, irrep});
}

std::vector<SymFunc> GraphAlgebra::X_gamma_all(const Graph& g, XMethod method) const {
    int id = key_of(g);
    if (method == XMethod::wreath) return psi_all_irreps(inst_, id);
    const Graph& canon = graph_of(id);
    const GroupRef& aut_data = inst_.aut_of(id);
    const auto* aut = dynamic_cast<const PermGroup*>(aut_data->group.get());
    const CharacterTable& table = inst_.table_of(id);
    int n = canon.vertex_count();

    std::vector<std::map<IntComposition, long long>> coeffs(table.count());
    for (const auto& alpha : enumerate_compositions(n)) {
        ColouringSet cols = enumerate_colourings(canon, alpha, caps_.vertex_cap);
        ClassFunction rho = permutation_character(
            aut_data, (int)cols.colourings.size(), [&](int e, int point) {
                const Perm& u = aut->element(e);
                const auto& kappa = cols.colourings[point];
                for (int v = 0; v < n; ++v)
                    if (kappa[u(v)] != kappa[v]) return -1;
                return point;
            });
        for (int r = 0; r < table.count(); ++r) {
            Cyclotomic ip = inner_product(rho, table.rows[r]);
            long long c = ip.as_integer();
            if (c < 0) throw consistency_error("X_gamma: negative intertwining number");
            coeffs[r][alpha] = c;
        }
    }
    std::vector<SymFunc> out;
    out.reserve(table.count());
    for (int r = 0; r < table.count(); ++r) out.push_back(assemble_from_quasi(coeffs[r]));
    return out;
}

SymFunc GraphAlgebra::X_chromatic(const Graph& g) const {
    int id = key_of(g);
    const Graph& canon = graph_of(id);
    int n = canon.vertex_count();
    std::map<IntComposition, long long> coeffs;
    for (const auto& alpha : enumerate_compositions(n))
        coeffs[alpha] =
            (long long)enumerate_colourings(canon, alpha, caps_.vertex_cap).colourings.size();
    return assemble_from_quasi(coeffs);
}

IntPolynomial GraphAlgebra::chi_poly(const Graph& g, int irrep, XMethod method) const {
    return specialize_polynomial(X_gamma(g, irrep, method));
}

IntPolynomial GraphAlgebra::orbital_chromatic(const Graph& g) const {
    return chi_poly(g, 0, XMethod::direct);
}

IntPolynomial GraphAlgebra::chromatic_polynomial(const Graph& g) const {
    return specialize_polynomial(X_chromatic(g));
}

long long GraphAlgebra::orbit_count_direct(const Graph& g, int m) const {
    int id = key_of(g);
    const Graph& canon = graph_of(id);
    const auto* aut = dynamic_cast<const PermGroup*>(inst_.aut_of(id)->group.get());
    int n = canon.vertex_count();
    // All proper m-colourings, then Burnside over the whole group.
    std::vector<std::vector<int>> cols;
    std::vector<int> colour(n, 0);
    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            cols.push_back(colour);
            return;
        }
        for (int c = 1; c <= m; ++c) {
            bool ok = true;
            std::uint64_t mask = canon.adjacency_mask(v);
            while (mask && ok) {
                int w = __builtin_ctzll(mask);
                mask &= mask - 1;
                if (w < v && colour[w] == c) ok = false;
            }
            if (!ok) continue;
            colour[v] = c;
            rec(v + 1);
            colour[v] = 0;
        }
    };
    rec(0);
    long long total = 0;
    for (const auto& u : aut->elements()) {
        for (const auto& kappa : cols) {
            bool fixed = true;
            for (int v = 0; v < n && fixed; ++v)
                if (kappa[u(v)] != kappa[v]) fixed = false;
            if (fixed) ++total;
        }
    }
    if (total % aut->order() != 0) throw consistency_error("burnside count is not integral");
    return total / aut->order();
}

FreeActionReport GraphAlgebra::free_action_report(const Graph& g) const {
    int id = key_of(g);
    const Graph& canon = graph_of(id);
    const auto* aut = dynamic_cast<const PermGroup*>(inst_.aut_of(id)->group.get());
    const CharacterTable& table = inst_.table_of(id);
    int n = canon.vertex_count();
    long long aut_order = aut->order();

    FreeActionReport report;

    // (a) every alpha-colouring has trivial isotropy.
    report.action_free = true;
    for (const auto& alpha : enumerate_compositions(n)) {
        ColouringSet cols = enumerate_colourings(canon, alpha, caps_.vertex_cap);
        for (const auto& u : aut->elements()) {
            if (u.is_identity()) continue;
            for (const auto& kappa : cols.colourings) {
                bool fixed = true;
                for (int v = 0; v < n && fixed; ++v)
                    if (kappa[u(v)] != kappa[v]) fixed = false;
                if (fixed) {
                    report.action_free = false;
                    break;
                }
            }
            if (!report.action_free) break;
        }
        if (!report.action_free) break;
    }

    SymFunc x = X_chromatic(canon);
    SymFunc x_triv = X_gamma(canon, 0, XMethod::direct);
    report.stanley_multiple = (x == x_triv.scaled(aut_order));
    report.chromatic_multiple =
        (specialize_polynomial(x) == specialize_polynomial(x_triv).scaled(Rational(aut_order)));

    report.all_sym_multiples = true;
    report.all_poly_multiples = true;
    for (int r = 0; r < table.count(); ++r) {
        SymFunc xg = X_gamma(canon, r, XMethod::direct);
        if (!(xg == x_triv.scaled(table.degrees[r]))) report.all_sym_multiples = false;
        if (!(specialize_polynomial(xg) ==
              specialize_polynomial(x_triv).scaled(Rational(table.degrees[r]))))
            report.all_poly_multiples = false;
    }

    if (!report.consistent())
        throw consistency_error("free-action conditions (a)-(e) disagree on " + canon.str());
    return report;
}

HopfElement GraphAlgebra::element(const Graph& g, int irrep, long long coeff) const {
    int id = key_of(g);
    if (irrep < 0 || irrep >= inst_.table_of(id).count())
        throw consistency_error("graph element: irrep index out of range");
    return {{MBasisKey{id, irrep}, coeff}};
}

HopfElement GraphAlgebra::product(const HopfElement& a, const HopfElement& b) const {
    return hopf_product(inst_, a, b);
}

TensorElement GraphAlgebra::Delta(const HopfElement& a) const { return coproduct_Delta(inst_, a); }

TensorElement GraphAlgebra::delta_small(const HopfElement& a) const {
    return coproduct_delta(inst_, a);
}

long long GraphAlgebra::zeta(const HopfElement& a) const { return zeta_M(inst_, a); }

HopfElement GraphAlgebra::reg_embed_graph(const Graph& g) const {
    return reg_embed_key(inst_, key_of(g));
}

}  // namespace hopfchrom
