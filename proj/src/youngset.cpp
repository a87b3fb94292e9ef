#include "hopfchrom/youngset.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace hopfchrom {

Injection Injection::identity(int n) {
    Injection w{n, n, std::vector<int>(n)};
    std::iota(w.img.begin(), w.img.end(), 0);
    return w;
}

Injection Injection::from_perm(const Perm& p) {
    return Injection{p.degree(), p.degree(), p.images()};
}

Injection Injection::of_subset(const std::vector<int>& subset, int m) {
    std::vector<int> s = subset;
    std::sort(s.begin(), s.end());
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= m) throw consistency_error("injection subset out of range");
        if (i && s[i] == s[i - 1]) throw consistency_error("injection subset has duplicates");
    }
    return Injection{(int)s.size(), m, std::move(s)};
}

Injection Injection::shift(int n, int offset, int m) {
    if (offset + n > m) throw consistency_error("injection shift out of range");
    Injection w{n, m, std::vector<int>(n)};
    std::iota(w.img.begin(), w.img.end(), offset);
    return w;
}

Injection Injection::compose(const Injection& inner) const {
    if (inner.m != n) throw consistency_error("injection composition mismatch");
    Injection w{inner.n, m, std::vector<int>(inner.n)};
    for (int i = 0; i < inner.n; ++i) w.img[i] = img[inner.img[i]];
    return w;
}

namespace {

struct EmptyYS final : YoungSet {
    std::string name() const override { return "empty"; }
    std::vector<YPoint> points(int) const override { return {}; }
    YPoint map_point(const Injection&, const YPoint&) const override {
        throw consistency_error("empty young set has no points");
    }
};

struct IdentityYS final : YoungSet {
    std::string name() const override { return "id"; }
    std::vector<YPoint> points(int n) const override {
        std::vector<YPoint> out;
        out.reserve(n);
        for (int i = 0; i < n; ++i) out.push_back({i});
        return out;
    }
    YPoint map_point(const Injection& w, const YPoint& p) const override {
        return {w.img[p[0]]};
    }
};

// Subsets are encoded as descending-sorted tuples, so the ascending point
// order is the colex order on sets; for 2-subsets that is exactly the graph6
// upper-triangle bit order, which keeps the canonical representative of an
// edge-labelling aligned with the graph canonical form.
struct SubsetsYS final : YoungSet {
    int r;
    bool all_nonempty;
    SubsetsYS(int rr, bool all) : r(rr), all_nonempty(all) {}
    std::string name() const override {
        return all_nonempty ? "nonempty" : "subsets:" + std::to_string(r);
    }
    std::vector<YPoint> points(int n) const override {
        std::vector<YPoint> out;
        for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
            int pc = __builtin_popcountll(mask);
            if (!all_nonempty && pc != r) continue;
            YPoint p;
            for (int i = n - 1; i >= 0; --i)
                if ((mask >> i) & 1) p.push_back(i);
            out.push_back(std::move(p));
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    YPoint map_point(const Injection& w, const YPoint& p) const override {
        YPoint q;
        q.reserve(p.size());
        for (int i : p) q.push_back(w.img[i]);
        std::sort(q.begin(), q.end(), std::greater<>());
        return q;
    }
};

struct TuplesYS final : YoungSet {
    int m;
    explicit TuplesYS(int mm) : m(mm) {}
    std::string name() const override { return "tuples:" + std::to_string(m); }
    std::vector<YPoint> points(int n) const override {
        std::vector<YPoint> out;
        if (n == 0) return out;
        YPoint cur(m, 0);
        while (true) {
            out.push_back(cur);
            int i = m - 1;
            while (i >= 0 && cur[i] == n - 1) cur[i--] = 0;
            if (i < 0) break;
            ++cur[i];
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    YPoint map_point(const Injection& w, const YPoint& p) const override {
        YPoint q;
        q.reserve(p.size());
        for (int i : p) q.push_back(w.img[i]);
        return q;
    }
};

struct NontrivialPermsYS final : YoungSet {
    std::string name() const override { return "perms"; }
    std::vector<YPoint> points(int n) const override {
        std::vector<YPoint> out;
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 0);
        while (std::next_permutation(img.begin(), img.end())) out.push_back(img);
        std::sort(out.begin(), out.end());
        return out;
    }
    // w_* g fixes everything outside the image of w and transports g inside it.
    YPoint map_point(const Injection& w, const YPoint& p) const override {
        YPoint q(w.m);
        std::iota(q.begin(), q.end(), 0);
        for (int k = 0; k < w.n; ++k) q[w.img[k]] = w.img[p[k]];
        return q;
    }
};

struct ProductYS final : YoungSet {
    YoungSetPtr a, b;
    ProductYS(YoungSetPtr aa, YoungSetPtr bb) : a(std::move(aa)), b(std::move(bb)) {}
    std::string name() const override { return "prod(" + a->name() + "," + b->name() + ")"; }
    std::vector<YPoint> points(int n) const override {
        std::vector<YPoint> out;
        for (const auto& pa : a->points(n))
            for (const auto& pb : b->points(n)) {
                YPoint p;
                p.push_back((int)pa.size());
                p.insert(p.end(), pa.begin(), pa.end());
                p.insert(p.end(), pb.begin(), pb.end());
                out.push_back(std::move(p));
            }
        std::sort(out.begin(), out.end());
        return out;
    }
    YPoint map_point(const Injection& w, const YPoint& p) const override {
        YPoint pa(p.begin() + 1, p.begin() + 1 + p[0]);
        YPoint pb(p.begin() + 1 + p[0], p.end());
        YPoint qa = a->map_point(w, pa), qb = b->map_point(w, pb);
        YPoint q;
        q.push_back((int)qa.size());
        q.insert(q.end(), qa.begin(), qa.end());
        q.insert(q.end(), qb.begin(), qb.end());
        return q;
    }
};

struct CoproductYS final : YoungSet {
    YoungSetPtr a, b;
    CoproductYS(YoungSetPtr aa, YoungSetPtr bb) : a(std::move(aa)), b(std::move(bb)) {}
    std::string name() const override { return "coprod(" + a->name() + "," + b->name() + ")"; }
    std::vector<YPoint> points(int n) const override {
        std::vector<YPoint> out;
        for (int tag = 0; tag < 2; ++tag)
            for (const auto& p : (tag == 0 ? a : b)->points(n)) {
                YPoint q{tag};
                q.insert(q.end(), p.begin(), p.end());
                out.push_back(std::move(q));
            }
        std::sort(out.begin(), out.end());
        return out;
    }
    YPoint map_point(const Injection& w, const YPoint& p) const override {
        YPoint inner(p.begin() + 1, p.end());
        YPoint q{p[0]};
        YPoint mapped = (p[0] == 0 ? a : b)->map_point(w, inner);
        q.insert(q.end(), mapped.begin(), mapped.end());
        return q;
    }
};

}  // namespace

YoungSetPtr young_empty() { return std::make_shared<EmptyYS>(); }
YoungSetPtr young_identity() { return std::make_shared<IdentityYS>(); }
YoungSetPtr young_subsets(int r) {
    if (r < 1) throw parse_error("subsets:r needs r >= 1");
    return std::make_shared<SubsetsYS>(r, false);
}
YoungSetPtr young_nonempty_subsets() { return std::make_shared<SubsetsYS>(0, true); }
YoungSetPtr young_tuples(int m) {
    if (m < 1) throw parse_error("tuples:m needs m >= 1");
    return std::make_shared<TuplesYS>(m);
}
YoungSetPtr young_nontrivial_permutations() { return std::make_shared<NontrivialPermsYS>(); }
YoungSetPtr young_product(YoungSetPtr a, YoungSetPtr b) {
    return std::make_shared<ProductYS>(std::move(a), std::move(b));
}
YoungSetPtr young_coproduct(YoungSetPtr a, YoungSetPtr b) {
    return std::make_shared<CoproductYS>(std::move(a), std::move(b));
}

YoungSetPtr builtin_young_set(const std::string& selector) {
    if (selector == "empty") return young_empty();
    if (selector == "id" || selector == "identity") return young_identity();
    if (selector == "nonempty" || selector == "nonempty_subsets") return young_nonempty_subsets();
    if (selector == "perms" || selector == "nontrivial_permutations")
        return young_nontrivial_permutations();
    auto colon = selector.find(':');
    if (colon != std::string::npos) {
        std::string base = selector.substr(0, colon);
        int arg;
        try {
            arg = std::stoi(selector.substr(colon + 1));
        } catch (const std::exception&) {
            throw parse_error("young set selector '" + selector + "': bad parameter");
        }
        if (base == "subsets" || base == "subsets_r") return young_subsets(arg);
        if (base == "tuples" || base == "ordered_tuples") return young_tuples(arg);
    }
    throw parse_error("unknown young set '" + selector + "'");
}

std::vector<YPoint> young_image(const YoungSet& y, const std::vector<int>& subset, int n) {
    Injection inc = Injection::of_subset(subset, n);
    std::vector<YPoint> out;
    for (const auto& p : y.points(inc.n)) out.push_back(y.map_point(inc, p));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<YPoint> y_lambda(const YoungSet& y, int n,
                             const std::vector<std::vector<int>>& blocks) {
    std::vector<bool> seen_vertex(n, false);
    for (const auto& b : blocks)
        for (int v : b) {
            if (v < 0 || v >= n) throw consistency_error("y_lambda: block entry out of range");
            if (seen_vertex[v]) throw consistency_error("y_lambda: blocks overlap");
            seen_vertex[v] = true;
        }
    std::vector<YPoint> out;
    for (const auto& b : blocks) {
        auto img = young_image(y, b, n);
        out.insert(out.end(), img.begin(), img.end());
    }
    std::sort(out.begin(), out.end());
    for (size_t i = 1; i < out.size(); ++i)
        if (out[i] == out[i - 1])
            throw consistency_error("y_lambda: block images overlap (intersection axiom violated)");
    return out;
}

namespace {

std::string point_str(const YPoint& p) {
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) out << ",";
        out << p[i];
    }
    out << ")";
    return out.str();
}

std::vector<std::vector<int>> all_subsets(int n) {
    std::vector<std::vector<int>> out;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1) s.push_back(i);
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace

AxiomReport verify_axioms(const YoungSet& y, int n_max) {
    AxiomReport report;

    AxiomCheck empt{"Y_empty = empty", true, ""};
    if (!y.points(0).empty()) {
        empt.pass = false;
        empt.witness = "points(0) is nonempty";
    }
    report.checks.push_back(empt);

    AxiomCheck fun_id{"functoriality: identity", true, ""};
    for (int n = 0; n <= n_max && fun_id.pass; ++n) {
        auto idw = Injection::identity(n);
        for (const auto& p : y.points(n))
            if (y.map_point(idw, p) != p) {
                fun_id.pass = false;
                fun_id.witness = "n=" + std::to_string(n) + ", point " + point_str(p);
                break;
            }
    }
    report.checks.push_back(fun_id);

    AxiomCheck fun_inj{"functoriality: injective with image Y_K", true, ""};
    AxiomCheck fun_comp{"functoriality: composition", true, ""};
    for (int n = 0; n <= n_max; ++n) {
        for (const auto& k : all_subsets(n)) {
            Injection inc = Injection::of_subset(k, n);
            auto pts = y.points((int)k.size());
            std::set<YPoint> image;
            auto target = y.points(n);
            std::set<YPoint> target_set(target.begin(), target.end());
            for (const auto& p : pts) {
                YPoint q = y.map_point(inc, p);
                if (!target_set.count(q)) {
                    fun_inj.pass = false;
                    fun_inj.witness = "image point " + point_str(q) + " not in points(" +
                                      std::to_string(n) + ")";
                }
                if (!image.insert(q).second) {
                    fun_inj.pass = false;
                    fun_inj.witness = "point map not injective at " + point_str(q);
                }
            }
            // Composition [|K'|] -> K' inside K -> K inside [n] vs direct.
            if (k.size() >= 1 && fun_comp.pass) {
                std::vector<int> kp(k.begin(), k.end() - 1);
                Injection inc2 = Injection::of_subset(kp, n);
                std::vector<int> positions(kp.size());
                std::iota(positions.begin(), positions.end(), 0);
                Injection inner = Injection::of_subset(positions, (int)k.size());
                for (const auto& p : y.points((int)kp.size())) {
                    YPoint via = y.map_point(inc, y.map_point(inner, p));
                    YPoint direct = y.map_point(inc2, p);
                    if (via != direct) {
                        fun_comp.pass = false;
                        fun_comp.witness = "n=" + std::to_string(n) + ", point " + point_str(p);
                        break;
                    }
                }
            }
        }
    }
    report.checks.push_back(fun_inj);
    report.checks.push_back(fun_comp);

    AxiomCheck inter{"intersection: Y_K ^ Y_L = Y_(K^L)", true, ""};
    for (int n = 0; n <= n_max && inter.pass; ++n) {
        auto subsets = all_subsets(n);
        std::vector<std::set<YPoint>> images;
        images.reserve(subsets.size());
        for (const auto& s : subsets) {
            auto img = young_image(y, s, n);
            images.emplace_back(img.begin(), img.end());
        }
        for (size_t a = 0; a < subsets.size() && inter.pass; ++a)
            for (size_t b = 0; b < subsets.size(); ++b) {
                std::vector<int> kl;
                std::set_intersection(subsets[a].begin(), subsets[a].end(), subsets[b].begin(),
                                      subsets[b].end(), std::back_inserter(kl));
                std::set<YPoint> expect;
                std::set_intersection(images[a].begin(), images[a].end(), images[b].begin(),
                                      images[b].end(), std::inserter(expect, expect.begin()));
                std::uint64_t kl_mask = 0;
                for (int v : kl) kl_mask |= 1ull << v;
                size_t kl_index = 0;
                for (size_t i = 0; i < subsets.size(); ++i) {
                    std::uint64_t m = 0;
                    for (int v : subsets[i]) m |= 1ull << v;
                    if (m == kl_mask) { kl_index = i; break; }
                }
                if (expect != images[kl_index]) {
                    inter.pass = false;
                    inter.witness = "n=" + std::to_string(n) + ", |K|=" +
                                    std::to_string(subsets[a].size()) + ", |L|=" +
                                    std::to_string(subsets[b].size());
                    break;
                }
            }
    }
    report.checks.push_back(inter);
    return report;
}

}  // namespace hopfchrom
