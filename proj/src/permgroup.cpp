#include "hopfchrom/permgroup.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace hopfchrom {

PermGroup PermGroup::from_elements(int degree, std::vector<Perm> elements) {
    if (elements.empty()) throw consistency_error("a permutation group needs at least the identity");
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    for (const auto& p : elements)
        if (p.degree() != degree) throw consistency_error("permutation degree mismatch");
    if (!elements[0].is_identity())
        throw consistency_error("element set does not contain the identity");
    PermGroup g;
    g.degree_ = degree;
    g.elems_ = std::move(elements);
    return g;
}

PermGroup PermGroup::trivial(int degree) {
    return from_elements(degree, {Perm::identity(degree)});
}

PermGroup PermGroup::symmetric(int degree, long long order_cap) {
    std::vector<Perm> gens;
    if (degree >= 2) {
        std::vector<int> cyc(degree);
        std::iota(cyc.begin(), cyc.end(), 0);
        std::rotate(cyc.begin(), cyc.begin() + 1, cyc.end());
        gens.emplace_back(cyc);
        std::vector<int> tr(degree);
        std::iota(tr.begin(), tr.end(), 0);
        std::swap(tr[0], tr[1]);
        gens.emplace_back(tr);
    }
    return close_generators(gens, degree, order_cap);
}

int PermGroup::index_of(const Perm& p) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), p);
    if (it == elems_.end() || !(*it == p)) return -1;
    return (int)(it - elems_.begin());
}

int PermGroup::index_of_checked(const Perm& p) const {
    int i = index_of(p);
    if (i < 0) throw consistency_error("permutation group is not closed");
    return i;
}

PermGroup close_generators(const std::vector<Perm>& gens, int degree, long long order_cap) {
    for (const auto& g : gens)
        if (g.degree() != degree) throw consistency_error("generator degree mismatch");
    std::set<Perm> seen;
    std::deque<Perm> queue;
    seen.insert(Perm::identity(degree));
    queue.push_back(Perm::identity(degree));
    while (!queue.empty()) {
        Perm cur = queue.front();
        queue.pop_front();
        for (const auto& g : gens) {
            Perm next = g.compose(cur);
            if (seen.insert(next).second) {
                if ((long long)seen.size() > order_cap)
                    throw resource_error("group closure exceeds order cap " + std::to_string(order_cap));
                queue.push_back(std::move(next));
            }
        }
    }
    return PermGroup::from_elements(degree, std::vector<Perm>(seen.begin(), seen.end()));
}

PermGroup set_stabilizer(const PermGroup& g, const std::vector<int>& u) {
    std::vector<bool> in_u(g.degree(), false);
    for (int v : u) {
        if (v < 0 || v >= g.degree()) throw consistency_error("set_stabilizer: point out of range");
        in_u[v] = true;
    }
    std::vector<Perm> elems;
    for (const auto& p : g.elements()) {
        bool ok = true;
        for (int v = 0; v < g.degree() && ok; ++v)
            if (in_u[v] && !in_u[p(v)]) ok = false;
        if (ok) elems.push_back(p);
    }
    return PermGroup::from_elements(g.degree(), std::move(elems));
}

std::vector<Perm> small_generating_set(const PermGroup& g) {
    std::vector<Perm> gens;
    std::set<Perm> have{Perm::identity(g.degree())};
    for (const auto& p : g.elements()) {
        if (have.count(p)) continue;
        gens.push_back(p);
        auto closed = close_generators(gens, g.degree(), g.order());
        have = std::set<Perm>(closed.elements().begin(), closed.elements().end());
        if ((long long)have.size() == g.order()) break;
    }
    return gens;
}

PermGroup YoungEmbedding::image(long long order_cap) const {
    PermGroup sk = PermGroup::symmetric(k, order_cap);
    PermGroup sl = PermGroup::symmetric(l, order_cap);
    if (sk.order() * sl.order() > order_cap)
        throw resource_error("young embedding image exceeds order cap");
    std::vector<Perm> elems;
    elems.reserve((size_t)(sk.order() * sl.order()));
    for (const auto& a : sk.elements())
        for (const auto& b : sl.elements()) elems.push_back(Perm::block(a, b));
    return PermGroup::from_elements(k + l, std::move(elems));
}

}  // namespace hopfchrom
