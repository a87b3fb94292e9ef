#include "hopfchrom/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace hopfchrom {

int Group::element_order(int a) const {
    int e = id();
    int x = a;
    int ord = 1;
    while (x != e) {
        x = mul(x, a);
        ++ord;
    }
    return ord;
}

ConjClasses compute_conjugacy_classes(const Group& g, long long order_cap) {
    long long n = g.order();
    if (n > order_cap) throw resource_error("group order " + std::to_string(n) + " exceeds cap");
    std::vector<int> class_of((size_t)n, -1);
    std::vector<std::vector<int>> members;
    for (int x = 0; x < n; ++x) {
        if (class_of[x] >= 0) continue;
        int c = (int)members.size();
        std::vector<int> cls;
        for (int h = 0; h < n; ++h) {
            int y = g.conjugate(h, x);
            if (class_of[y] < 0) {
                class_of[y] = c;
                cls.push_back(y);
            }
        }
        std::sort(cls.begin(), cls.end());
        members.push_back(std::move(cls));
    }

    // Canonical order: (element order, class size, minimal element index).
    std::vector<int> idx(members.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<int> ords(members.size());
    for (size_t c = 0; c < members.size(); ++c) ords[c] = g.element_order(members[c][0]);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (ords[a] != ords[b]) return ords[a] < ords[b];
        if (members[a].size() != members[b].size()) return members[a].size() < members[b].size();
        return members[a][0] < members[b][0];
    });

    ConjClasses out;
    out.class_of.assign((size_t)n, -1);
    for (size_t newc = 0; newc < idx.size(); ++newc) {
        const auto& cls = members[idx[newc]];
        out.reps.push_back(cls[0]);
        out.sizes.push_back((long long)cls.size());
        out.rep_order.push_back(ords[idx[newc]]);
        for (int e : cls) out.class_of[e] = (int)newc;
        out.members.push_back(cls);
    }
    out.inverse_class.resize(out.reps.size());
    for (size_t c = 0; c < out.reps.size(); ++c)
        out.inverse_class[c] = out.class_of[g.inv(out.reps[c])];
    return out;
}

GroupRef make_group_data(std::shared_ptr<const Group> g, long long order_cap) {
    auto data = std::make_shared<GroupData>();
    data->classes = compute_conjugacy_classes(*g, order_cap);
    data->group = std::move(g);
    return data;
}

FiniteGroup::FiniteGroup(long long order, std::vector<std::int32_t> table,
                         std::vector<std::string> labels)
    : order_(order), table_(std::move(table)), labels_(std::move(labels)) {
    if ((long long)table_.size() != order_ * order_)
        throw consistency_error("multiplication table has wrong size");
    validate();
}

const std::string& FiniteGroup::label(int a) const {
    static const std::string empty;
    return (size_t)a < labels_.size() ? labels_[a] : empty;
}

void FiniteGroup::validate() {
    long long n = order_;
    for (auto v : table_)
        if (v < 0 || v >= n) throw consistency_error("multiplication table entry out of range");
    // Identity: the unique e with e*x = x*e = x for all x.
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            ok = mul(e, x) == x && mul(x, e) == x;
        if (ok) { id_ = e; break; }
    }
    if (id_ < 0) throw consistency_error("multiplication table has no identity");
    inv_.assign((size_t)n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (mul(a, b) == id_ && mul(b, a) == id_) { inv_[a] = b; break; }
        if (inv_[a] < 0) throw consistency_error("multiplication table element without inverse");
    }
    // Associativity: exhaustive for small orders, sampled above.
    if (n <= 200) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                        throw consistency_error("multiplication table is not associative");
    } else {
        std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
        std::uniform_int_distribution<int> pick(0, (int)n - 1);
        for (int t = 0; t < 20000; ++t) {
            int a = pick(rng), b = pick(rng), c = pick(rng);
            if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                throw consistency_error("multiplication table is not associative");
        }
    }
}

GroupRef make_product_group_data(const GroupRef& a, const GroupRef& b) {
    auto pg = std::make_shared<ProductGroup>(a->group, b->group);
    long long ob = b->group->order();
    const auto& ca = a->classes;
    const auto& cb = b->classes;

    struct PairClass { int ia, ib; };
    std::vector<PairClass> pairs;
    for (int i = 0; i < ca.count(); ++i)
        for (int j = 0; j < cb.count(); ++j) pairs.push_back({i, j});

    ConjClasses cls;
    cls.class_of.assign((size_t)(a->group->order() * ob), -1);
    std::vector<int> idx(pairs.size());
    std::iota(idx.begin(), idx.end(), 0);
    auto order_of = [&](const PairClass& p) {
        return (int)std::lcm(ca.rep_order[p.ia], cb.rep_order[p.ib]);
    };
    auto min_elem = [&](const PairClass& p) {
        return (long long)ca.members[p.ia][0] * ob + cb.members[p.ib][0];
    };
    std::sort(idx.begin(), idx.end(), [&](int x, int y) {
        int ox = order_of(pairs[x]), oy = order_of(pairs[y]);
        if (ox != oy) return ox < oy;
        long long sx = ca.sizes[pairs[x].ia] * cb.sizes[pairs[x].ib];
        long long sy = ca.sizes[pairs[y].ia] * cb.sizes[pairs[y].ib];
        if (sx != sy) return sx < sy;
        return min_elem(pairs[x]) < min_elem(pairs[y]);
    });
    for (size_t newc = 0; newc < idx.size(); ++newc) {
        const auto& p = pairs[idx[newc]];
        std::vector<int> mem;
        mem.reserve(ca.members[p.ia].size() * cb.members[p.ib].size());
        for (int x : ca.members[p.ia])
            for (int y : cb.members[p.ib]) mem.push_back((int)((long long)x * ob + y));
        std::sort(mem.begin(), mem.end());
        cls.reps.push_back(mem[0]);
        cls.sizes.push_back((long long)mem.size());
        cls.rep_order.push_back(order_of(p));
        for (int e : mem) cls.class_of[e] = (int)newc;
        cls.members.push_back(std::move(mem));
    }
    cls.inverse_class.resize(cls.reps.size());
    for (size_t c = 0; c < cls.reps.size(); ++c)
        cls.inverse_class[c] = cls.class_of[pg->inv(cls.reps[c])];

    auto data = std::make_shared<GroupData>();
    data->group = std::move(pg);
    data->classes = std::move(cls);
    return data;
}

}  // namespace hopfchrom
