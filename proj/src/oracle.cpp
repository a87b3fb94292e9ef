#include "hopfchrom/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace hopfchrom {

namespace {

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

WreathGroup::WreathGroup(const HopfInstance& inst, int n, long long oracle_cap)
    : inst_(inst), n_(n) {
    if (oracle_cap <= 0) oracle_cap = inst.caps().oracle_cap;
    sn_ = PermGroup::symmetric(n, oracle_cap);
    points_ = inst.young().points(n);
    long long hsize = inst.H().order();
    base_order_ = ipow(hsize, (int)points_.size());
    long long order = sn_.order() * base_order_;
    if (order > oracle_cap)
        throw resource_error("wreath group order " + std::to_string(order) +
                             " exceeds oracle cap " + std::to_string(oracle_cap));

    point_map_.assign(sn_.order(), std::vector<int>(points_.size()));
    for (int s = 0; s < sn_.order(); ++s) {
        Injection w = Injection::from_perm(sn_.element(s));
        for (size_t i = 0; i < points_.size(); ++i) {
            YPoint q = inst.young().map_point(w, points_[i]);
            auto it = std::lower_bound(points_.begin(), points_.end(), q);
            point_map_[s][i] = (int)(it - points_.begin());
        }
    }
    h_add_.assign(hsize, std::vector<int>((size_t)hsize));
    for (int a = 0; a < hsize; ++a) {
        auto ta = inst.H().decode(a);
        for (int b = 0; b < hsize; ++b) {
            auto tb = inst.H().decode(b);
            std::vector<int> tc(ta.size());
            for (size_t i = 0; i < ta.size(); ++i)
                tc[i] = (ta[i] + tb[i]) % inst.H().factors[i];
            h_add_[a][b] = inst.H().encode(tc);
        }
    }

    // Materialized multiplication table; FiniteGroup validation double-checks
    // that (w1,f1)(w2,f2) = (w1 w2, (w2^-1 f1) f2) really is a group law.
    int npts = (int)points_.size();
    auto digits_of = [&](long long f) {
        std::vector<int> d(npts);
        for (int i = 0; i < npts; ++i) {
            d[i] = (int)(f % hsize);
            f /= hsize;
        }
        return d;
    };
    std::vector<std::int32_t> table((size_t)order * order);
    std::vector<std::string> labels;
    if (order <= 256) labels.resize((size_t)order);
    for (long long e1 = 0; e1 < order; ++e1) {
        int s1 = (int)(e1 / base_order_);
        auto f1 = digits_of(e1 % base_order_);
        for (long long e2 = 0; e2 < order; ++e2) {
            int s2 = (int)(e2 / base_order_);
            auto f2 = digits_of(e2 % base_order_);
            int s = sn_.mul(s1, s2);
            long long f = 0;
            for (int i = npts - 1; i >= 0; --i)
                f = f * hsize + h_add_[f1[point_map_[s2][i]]][f2[i]];
            table[(size_t)e1 * order + e2] = (std::int32_t)((long long)s * base_order_ + f);
        }
        if (order <= 256) {
            std::ostringstream lab;
            lab << sn_.element(s1).cycle_str() << ";";
            for (int i = 0; i < npts; ++i) lab << (i ? "," : "") << f1[i];
            labels[e1] = lab.str();
        }
    }
    auto fg = std::make_shared<FiniteGroup>(order, std::move(table), std::move(labels));
    data_ = make_group_data(fg, oracle_cap);
}

int WreathGroup::func_digit(long long f, int point_idx) const {
    long long hsize = inst_.H().order();
    for (int i = 0; i < point_idx; ++i) f /= hsize;
    return (int)(f % hsize);
}

int WreathGroup::encode(int perm_idx, const std::vector<int>& digits) const {
    long long hsize = inst_.H().order();
    long long f = 0;
    for (size_t i = digits.size(); i-- > 0;) f = f * hsize + digits[i];
    return (int)((long long)perm_idx * base_order_ + f);
}

std::vector<int> WreathGroup::base_elements() const {
    std::vector<int> out;
    int id_perm = sn_.id();
    for (long long f = 0; f < base_order_; ++f)
        out.push_back((int)(id_perm * base_order_ + f));
    return out;
}

std::vector<int> WreathGroup::image_points(const std::vector<int>& subset) const {
    auto img = young_image(inst_.young(), subset, n_);
    std::vector<int> idx;
    for (const auto& p : img) {
        auto it = std::lower_bound(points_.begin(), points_.end(), p);
        idx.push_back((int)(it - points_.begin()));
    }
    return idx;
}

std::vector<int> WreathGroup::point_embedding(const std::vector<int>& subset,
                                              const WreathGroup& small) const {
    Injection inc = Injection::of_subset(subset, n_);
    std::vector<int> target(small.points().size());
    for (size_t i = 0; i < small.points().size(); ++i) {
        YPoint q = inst_.young().map_point(inc, small.points()[i]);
        auto it = std::lower_bound(points_.begin(), points_.end(), q);
        if (it == points_.end() || *it != q)
            throw consistency_error("point embedding left the point list");
        target[i] = (int)(it - points_.begin());
    }
    return target;
}

namespace {

std::vector<std::vector<int>> drop_empty(std::vector<std::vector<int>> blocks) {
    std::vector<std::vector<int>> out;
    for (auto& b : blocks)
        if (!b.empty()) out.push_back(std::move(b));
    return out;
}

}  // namespace

std::vector<int> WreathGroup::g_lambda(std::vector<std::vector<int>> blocks) const {
    blocks = drop_empty(std::move(blocks));
    std::vector<int> block_of(n_, -1);
    for (size_t b = 0; b < blocks.size(); ++b)
        for (int v : blocks[b]) block_of[v] = (int)b;
    for (int v = 0; v < n_; ++v)
        if (block_of[v] < 0) throw consistency_error("g_lambda: blocks do not cover [n]");
    std::vector<char> allowed(points_.size(), 0);
    for (const auto& b : blocks)
        for (int i : image_points(b)) allowed[i] = 1;
    std::vector<int> out;
    for (long long e = 0; e < order(); ++e) {
        const Perm& sigma = sn_.element(perm_part((int)e));
        bool ok = true;
        for (int v = 0; v < n_ && ok; ++v)
            if (block_of[sigma(v)] != block_of[v]) ok = false;
        if (!ok) continue;
        long long f = func_part((int)e);
        for (size_t i = 0; i < points_.size() && ok; ++i)
            if (!allowed[i] && func_digit(f, (int)i) != 0) ok = false;
        if (ok) out.push_back((int)e);
    }
    return out;
}

std::vector<int> WreathGroup::p_lambda(std::vector<std::vector<int>> blocks) const {
    blocks = drop_empty(std::move(blocks));
    std::vector<int> block_of(n_, -1);
    for (size_t b = 0; b < blocks.size(); ++b)
        for (int v : blocks[b]) block_of[v] = (int)b;
    for (int v = 0; v < n_; ++v)
        if (block_of[v] < 0) throw consistency_error("p_lambda: blocks do not cover [n]");
    std::vector<int> out;
    for (long long e = 0; e < order(); ++e) {
        const Perm& sigma = sn_.element(perm_part((int)e));
        bool ok = true;
        for (int v = 0; v < n_ && ok; ++v)
            if (block_of[sigma(v)] != block_of[v]) ok = false;
        if (ok) out.push_back((int)e);
    }
    return out;
}

std::vector<int> WreathGroup::u_lambda(std::vector<std::vector<int>> blocks) const {
    blocks = drop_empty(std::move(blocks));
    std::vector<char> inside(points_.size(), 0);
    for (const auto& b : blocks)
        for (int i : image_points(b)) inside[i] = 1;
    std::vector<int> out;
    int id_perm = sn_.id();
    for (long long f = 0; f < base_order_; ++f) {
        bool ok = true;
        for (size_t i = 0; i < points_.size() && ok; ++i)
            if (inside[i] && func_digit(f, (int)i) != 0) ok = false;
        if (ok) out.push_back((int)(id_perm * base_order_ + f));
    }
    return out;
}

Cyclotomic WreathGroup::pi_F_value(const FunctionF& f, long long func_index) const {
    Cyclotomic v(1);
    for (const auto& [p, lab] : f.labels) {
        auto it = std::lower_bound(points_.begin(), points_.end(), p);
        int digit = func_digit(func_index, (int)(it - points_.begin()));
        v *= inst_.H().pairing(lab, digit);
    }
    return v;
}

// ---------------------------------------------------------------------------

OracleContext::OracleContext(YoungSetPtr y, const AbelianGroup& h, int n_max, Caps caps) {
    hopf_ = std::make_shared<HopfInstance>(std::move(y), h, caps);
    for (int n = 0; n <= n_max; ++n)
        wreath_.push_back(std::make_shared<WreathGroup>(*hopf_, n, caps.oracle_cap));
}

int OracleContext::degree_of(const ClassFunction& chi) const {
    for (int d = 0; d <= n_max(); ++d)
        if (chi.G.get() == wreath_[d]->data().get()) return d;
    throw consistency_error("class function does not live on an oracle wreath group");
}

ClassFunction OracleContext::clifford_phi(const MBasisKey& key) const {
    const FunctionF& f = hopf_->function_of(key.f_id);
    const WreathGroup& wg = wreath(f.n);
    const Group& g = *wg.data()->group;
    const auto& cls = wg.data()->classes;
    const auto* aut = dynamic_cast<const PermGroup*>(hopf_->aut_of(key.f_id)->group.get());
    const CharacterTable& aut_table = hopf_->table_of(key.f_id);
    const ClassFunction& gamma = aut_table.rows[key.irrep];
    const auto& aut_cls = hopf_->aut_of(key.f_id)->classes;

    // chi(sigma, f') = gamma(sigma) pi_F(f') on G_F = Aut F x| Map(Y_n, H),
    // induced up to the whole wreath product.
    long long gf_order = aut->order() * wg.base_order();
    long long n = g.order();
    std::vector<Cyclotomic> values(cls.count(), Cyclotomic(0));
    for (int c = 0; c < cls.count(); ++c) {
        int rep = cls.reps[c];
        Cyclotomic sum(0);
        for (int x = 0; x < n; ++x) {
            int yel = g.mul(g.mul(g.inv(x), rep), x);
            int aut_idx = aut->index_of(wg.sn().element(wg.perm_part(yel)));
            if (aut_idx < 0) continue;
            sum += gamma.values[aut_cls.class_of[aut_idx]] * wg.pi_F_value(f, wg.func_part(yel));
        }
        values[c] = sum / Rational(gf_order);
    }
    ClassFunction phi{wg.data(), std::move(values)};
    if (!(inner_product(phi, phi) == Cyclotomic(1)))
        throw consistency_error("clifford_phi: induced character is not irreducible");
    return phi;
}

ClassFunction OracleContext::phi_of_element(const HopfElement& a, int degree) const {
    const WreathGroup& wg = wreath(degree);
    ClassFunction out{wg.data(),
                      std::vector<Cyclotomic>(wg.data()->classes.count(), Cyclotomic(0))};
    for (const auto& [k, c] : a) {
        if (hopf_->function_of(k.f_id).n != degree)
            throw consistency_error("phi_of_element: mixed degrees");
        out += clifford_phi(k).scaled(Rational(c));
    }
    return out;
}

GroupRef OracleContext::product_data(int k, int l) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = products_.find({k, l});
    if (it != products_.end()) return it->second;
    GroupRef p = make_product_group_data(wreath(k).data(), wreath(l).data());
    products_.emplace(std::make_pair(k, l), p);
    return p;
}

namespace {

// Embedding data of G_K x G_K^c into G_n for a subset K of [n].
struct PairEmbedding {
    std::vector<int> k, kc;
    std::vector<int> k_points, kc_points;  // wreath(k) point i -> G_n point index
    const WreathGroup* wk;
    const WreathGroup* wl;
    const WreathGroup* wn;

    int embed(int a, int b) const {
        const Perm& pa = wk->sn().element(wk->perm_part(a));
        const Perm& pb = wl->sn().element(wl->perm_part(b));
        std::vector<int> img(wn->degree());
        std::iota(img.begin(), img.end(), 0);
        for (size_t i = 0; i < k.size(); ++i) img[k[i]] = k[pa((int)i)];
        for (size_t i = 0; i < kc.size(); ++i) img[kc[i]] = kc[pb((int)i)];
        int s = wn->sn().index_of(Perm(img));
        std::vector<int> digits(wn->points().size(), 0);
        long long fa = wk->func_part(a), fb = wl->func_part(b);
        for (size_t i = 0; i < k_points.size(); ++i) digits[k_points[i]] = wk->func_digit(fa, (int)i);
        for (size_t i = 0; i < kc_points.size(); ++i)
            digits[kc_points[i]] = wl->func_digit(fb, (int)i);
        return wn->encode(s, digits);
    }
};

PairEmbedding make_pair_embedding(const OracleContext& ctx, int n,
                                  const std::vector<int>& k_subset) {
    PairEmbedding pe;
    pe.k = k_subset;
    std::sort(pe.k.begin(), pe.k.end());
    for (int v = 0; v < n; ++v)
        if (!std::binary_search(pe.k.begin(), pe.k.end(), v)) pe.kc.push_back(v);
    pe.wk = &ctx.wreath((int)pe.k.size());
    pe.wl = &ctx.wreath((int)pe.kc.size());
    pe.wn = &ctx.wreath(n);
    pe.k_points = pe.wn->point_embedding(pe.k, *pe.wk);
    pe.kc_points = pe.wn->point_embedding(pe.kc, *pe.wl);
    return pe;
}

}  // namespace

ClassFunction OracleContext::pind_character(const ClassFunction& chi_k,
                                            const ClassFunction& chi_l,
                                            const std::vector<int>& k_subset) const {
    int dk = degree_of(chi_k), dl = degree_of(chi_l);
    if ((int)k_subset.size() != dk)
        throw consistency_error("pind: subset size does not match the first factor");
    int n = dk + dl;
    const WreathGroup& wn = wreath(n);
    PairEmbedding pe = make_pair_embedding(*this, n, k_subset);

    const Group& g = *wn.data()->group;
    const auto& cls = wn.data()->classes;
    std::vector<int> block_of(n, 0);
    for (int v : pe.kc) block_of[v] = 1;
    std::vector<int> pos_in_k(n, -1), pos_in_kc(n, -1);
    for (size_t i = 0; i < pe.k.size(); ++i) pos_in_k[pe.k[i]] = (int)i;
    for (size_t i = 0; i < pe.kc.size(); ++i) pos_in_kc[pe.kc[i]] = (int)i;

    // chi~ on P = S_(K,K^c) x| Map(Y_n, H); the function values outside
    // Y_K + Y_K^c are ignored, which is exactly the inflation across U.
    auto chi_tilde = [&](int e) -> Cyclotomic {
        const Perm& sigma = wn.sn().element(wn.perm_part(e));
        for (int v = 0; v < n; ++v)
            if (block_of[sigma(v)] != block_of[v]) return Cyclotomic(0);  // outside P
        std::vector<int> ra(pe.k.size()), rb(pe.kc.size());
        for (size_t i = 0; i < pe.k.size(); ++i) ra[i] = pos_in_k[sigma(pe.k[i])];
        for (size_t i = 0; i < pe.kc.size(); ++i) rb[i] = pos_in_kc[sigma(pe.kc[i])];
        long long f = wn.func_part(e);
        std::vector<int> da(pe.k_points.size()), db(pe.kc_points.size());
        for (size_t i = 0; i < pe.k_points.size(); ++i) da[i] = wn.func_digit(f, pe.k_points[i]);
        for (size_t i = 0; i < pe.kc_points.size(); ++i)
            db[i] = wn.func_digit(f, pe.kc_points[i]);
        int ea = pe.wk->encode(pe.wk->sn().index_of(Perm(ra)), da);
        int eb = pe.wl->encode(pe.wl->sn().index_of(Perm(rb)), db);
        return chi_k.at_element(ea) * chi_l.at_element(eb);
    };
    long long sk = 1, sl = 1;
    for (int i = 2; i <= dk; ++i) sk *= i;
    for (int i = 2; i <= dl; ++i) sl *= i;
    long long p_order = sk * sl * wn.base_order();

    std::vector<Cyclotomic> values(cls.count(), Cyclotomic(0));
    for (int c = 0; c < cls.count(); ++c) {
        Cyclotomic sum(0);
        int rep = cls.reps[c];
        for (int x = 0; x < g.order(); ++x)
            sum += chi_tilde(g.mul(g.mul(g.inv(x), rep), x));
        values[c] = sum / Rational(p_order);
    }
    return {wn.data(), std::move(values)};
}

ClassFunction OracleContext::pres_character(const ClassFunction& chi,
                                            const std::vector<int>& k_subset) const {
    int n = degree_of(chi);
    PairEmbedding pe = make_pair_embedding(*this, n, k_subset);
    const WreathGroup& wn = wreath(n);
    GroupRef prod = product_data((int)pe.k.size(), (int)pe.kc.size());
    const auto* pg = dynamic_cast<const ProductGroup*>(prod->group.get());

    std::vector<int> u = wn.u_lambda({pe.k, pe.kc});
    const Group& g = *wn.data()->group;
    std::vector<Cyclotomic> values(prod->classes.count(), Cyclotomic(0));
    for (int c = 0; c < prod->classes.count(); ++c) {
        int rep = prod->classes.reps[c];
        int base = pe.embed(pg->left(rep), pg->right(rep));
        Cyclotomic sum(0);
        for (int ue : u) sum += chi.at_element(g.mul(base, ue));
        values[c] = sum / Rational((long long)u.size());
    }
    return {prod, std::move(values)};
}

ClassFunction OracleContext::res_character(const ClassFunction& chi,
                                           const std::vector<int>& k_subset) const {
    int n = degree_of(chi);
    PairEmbedding pe = make_pair_embedding(*this, n, k_subset);
    GroupRef prod = product_data((int)pe.k.size(), (int)pe.kc.size());
    const auto* pg = dynamic_cast<const ProductGroup*>(prod->group.get());
    std::vector<Cyclotomic> values(prod->classes.count(), Cyclotomic(0));
    for (int c = 0; c < prod->classes.count(); ++c) {
        int rep = prod->classes.reps[c];
        values[c] = chi.at_element(pe.embed(pg->left(rep), pg->right(rep)));
    }
    return {prod, std::move(values)};
}

// ---------------------------------------------------------------------------

std::vector<OracleCheck> verify_clifford_bijection(const OracleContext& ctx) {
    std::vector<OracleCheck> out;
    for (int n = 0; n <= ctx.n_max(); ++n) {
        OracleCheck check;
        check.name = "clifford bijection at degree " + std::to_string(n);
        try {
            auto keys = ctx.hopf().all_basis_keys(n);
            const CharacterTable& table = character_table(ctx.wreath(n).data());
            std::vector<int> hit(table.count(), 0);
            for (const auto& key : keys) {
                ClassFunction phi = ctx.clifford_phi(key);  // norm checked inside
                int row = table.find_row(phi);
                if (row < 0) throw consistency_error("phi image is not an irreducible row");
                ++hit[row];
            }
            bool ok = (int)keys.size() == table.count();
            for (int h : hit) ok = ok && h == 1;
            check.pass = ok;
            check.detail = std::to_string(keys.size()) + " keys onto " +
                           std::to_string(table.count()) + " irreducibles";
        } catch (const hopf_error& err) {
            check.pass = false;
            check.detail = err.what();
        }
        out.push_back(std::move(check));
    }
    return out;
}

std::vector<OracleCheck> verify_clifford_product(const OracleContext& ctx, int n) {
    std::vector<OracleCheck> out;
    for (int k = 0; k <= n; ++k) {
        int l = n - k;
        std::vector<int> k_subset(k);
        std::iota(k_subset.begin(), k_subset.end(), 0);
        auto keys_k = ctx.hopf().all_basis_keys(k);
        auto keys_l = ctx.hopf().all_basis_keys(l);
        OracleCheck check;
        check.name = "product vs pind at split " + std::to_string(k) + "+" + std::to_string(l);
        check.pass = true;
        int tested = 0;
        try {
            for (const auto& a : keys_k)
                for (const auto& b : keys_l) {
                    HopfElement prod = hopf_product(ctx.hopf(), {{a, 1}}, {{b, 1}});
                    ClassFunction lhs = ctx.phi_of_element(prod, n);
                    ClassFunction rhs = ctx.pind_character(ctx.clifford_phi(a),
                                                           ctx.clifford_phi(b), k_subset);
                    ++tested;
                    if (!(lhs == rhs)) {
                        check.pass = false;
                        check.detail = "mismatch at pair " + key_str(ctx.hopf(), a) + " * " +
                                       key_str(ctx.hopf(), b);
                    }
                }
            if (check.pass) check.detail = std::to_string(tested) + " pairs";
        } catch (const hopf_error& err) {
            check.pass = false;
            check.detail = err.what();
        }
        out.push_back(std::move(check));
    }
    return out;
}

std::vector<OracleCheck> verify_coproduct_clifford(const OracleContext& ctx, int n) {
    std::vector<OracleCheck> out;
    auto keys = ctx.hopf().all_basis_keys(n);
    for (bool small_delta : {false, true}) {
        OracleCheck check;
        check.name = std::string(small_delta ? "small delta" : "Delta") +
                     " vs R-side at degree " + std::to_string(n);
        check.pass = true;
        int tested = 0;
        try {
            for (const auto& key : keys) {
                ClassFunction phi = ctx.clifford_phi(key);
                TensorElement cop = small_delta ? coproduct_delta(ctx.hopf(), {{key, 1}})
                                                : coproduct_Delta(ctx.hopf(), {{key, 1}});
                for (int k = 0; k <= n; ++k) {
                    std::vector<int> k_subset(k);
                    std::iota(k_subset.begin(), k_subset.end(), 0);
                    ClassFunction rside = small_delta ? ctx.pres_character(phi, k_subset)
                                                      : ctx.res_character(phi, k_subset);
                    GroupRef prod = ctx.product_data(k, n - k);
                    const auto* pg = dynamic_cast<const ProductGroup*>(prod->group.get());
                    ClassFunction mside{prod, std::vector<Cyclotomic>(prod->classes.count(),
                                                                      Cyclotomic(0))};
                    for (const auto& [pair, coeff] : cop) {
                        if (ctx.hopf().function_of(pair.first.f_id).n != k) continue;
                        ClassFunction pa = ctx.clifford_phi(pair.first);
                        ClassFunction pb = ctx.clifford_phi(pair.second);
                        for (int c = 0; c < prod->classes.count(); ++c) {
                            int rep = prod->classes.reps[c];
                            mside.values[c] += pa.at_element(pg->left(rep)) *
                                               pb.at_element(pg->right(rep)) *
                                               Cyclotomic(Rational(coeff));
                        }
                    }
                    ++tested;
                    if (!(rside == mside)) {
                        check.pass = false;
                        check.detail = "mismatch at key " + key_str(ctx.hopf(), key) +
                                       ", split " + std::to_string(k);
                    }
                }
            }
            if (check.pass) check.detail = std::to_string(tested) + " key/split combinations";
        } catch (const hopf_error& err) {
            check.pass = false;
            check.detail = err.what();
        }
        out.push_back(std::move(check));
    }
    return out;
}

std::vector<OracleCheck> verify_pind_pres(const OracleContext& ctx, int n, int samples) {
    std::vector<OracleCheck> out;
    std::mt19937_64 rng(0x5eedULL + n);
    bool y_is_identity = ctx.hopf().young().name() == "id";
    for (int k = 0; k <= n; ++k) {
        int l = n - k;
        std::vector<int> k_subset(k);
        std::iota(k_subset.begin(), k_subset.end(), 0);
        const CharacterTable& tk = character_table(ctx.wreath(k).data());
        const CharacterTable& tl = character_table(ctx.wreath(l).data());
        const CharacterTable& tn = character_table(ctx.wreath(n).data());
        GroupRef prod = ctx.product_data(k, l);
        const auto* pg = dynamic_cast<const ProductGroup*>(prod->group.get());

        OracleCheck check;
        check.name = "pind/pres adjointness at split " + std::to_string(k) + "+" +
                     std::to_string(l);
        check.pass = true;
        try {
            for (int trial = 0; trial < samples; ++trial) {
                auto random_char = [&](const CharacterTable& t) {
                    std::uniform_int_distribution<int> mult(0, 2);
                    std::vector<long long> m(t.count());
                    for (auto& v : m) v = mult(rng);
                    return recompose(t, m);
                };
                ClassFunction a = random_char(tk);
                ClassFunction b = random_char(tl);
                ClassFunction psi_big = random_char(tn);
                ClassFunction ind = ctx.pind_character(a, b, k_subset);
                std::vector<Cyclotomic> ab(prod->classes.count());
                for (int c = 0; c < prod->classes.count(); ++c) {
                    int rep = prod->classes.reps[c];
                    ab[c] = a.at_element(pg->left(rep)) * b.at_element(pg->right(rep));
                }
                ClassFunction tens{prod, std::move(ab)};
                ClassFunction pres = ctx.pres_character(psi_big, k_subset);
                // Two-sided: pind left-adjoint and right-adjoint to pres.
                if (!(inner_product(ind, psi_big) == inner_product(tens, pres)) ||
                    !(inner_product(psi_big, ind) == inner_product(pres, tens))) {
                    check.pass = false;
                    check.detail = "adjointness failed on trial " + std::to_string(trial);
                }
                if (y_is_identity && !(pres == ctx.res_character(psi_big, k_subset))) {
                    check.pass = false;
                    check.detail = "pres != res on the identity young set";
                }
            }
            if (check.pass)
                check.detail = std::to_string(samples) + " random character triples" +
                               (y_is_identity ? ", pres == res" : "");
        } catch (const hopf_error& err) {
            check.pass = false;
            check.detail = err.what();
        }
        out.push_back(std::move(check));
    }
    return out;
}

}  // namespace hopfchrom
