#include "hopfchrom/wreath_hopf.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace hopfchrom {

AbelianGroup AbelianGroup::cyclic(int d) {
    AbelianGroup h;
    if (d >= 2) h.factors = {d};
    return h;
}

AbelianGroup AbelianGroup::parse(const std::string& text) {
    if (text == "1" || text == "S1" || text.empty()) return trivial();
    AbelianGroup h;
    size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] == 'x' || text[pos] == 'X') { ++pos; continue; }
        if (text[pos] != 'Z' && text[pos] != 'z')
            throw parse_error("abelian group selector '" + text + "': expected Z<d>");
        ++pos;
        if (pos >= text.size() || !std::isdigit((unsigned char)text[pos]))
            throw parse_error("abelian group selector '" + text + "': missing order");
        int d = 0;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos]))
            d = d * 10 + (text[pos++] - '0');
        if (d < 1) throw parse_error("abelian group factor must be >= 1");
        if (d >= 2) h.factors.push_back(d);
    }
    return h;
}

long long AbelianGroup::order() const {
    long long o = 1;
    for (int d : factors) o *= d;
    return o;
}

std::vector<int> AbelianGroup::decode(int x) const {
    std::vector<int> t(factors.size());
    for (size_t i = factors.size(); i-- > 0;) {
        t[i] = x % factors[i];
        x /= factors[i];
    }
    return t;
}

int AbelianGroup::encode(const std::vector<int>& tuple) const {
    int x = 0;
    for (size_t i = 0; i < factors.size(); ++i) x = x * factors[i] + tuple[i];
    return x;
}

Cyclotomic AbelianGroup::pairing(int chi, int elem) const {
    auto a = decode(chi), b = decode(elem);
    Cyclotomic v(1);
    for (size_t i = 0; i < factors.size(); ++i)
        v *= Cyclotomic::root_of_unity(factors[i], (long long)a[i] * b[i]);
    return v;
}

std::string AbelianGroup::str() const {
    if (factors.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) out += "x";
        out += "Z" + std::to_string(factors[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------

HopfInstance::HopfInstance(YoungSetPtr y, AbelianGroup h, Caps caps)
    : Y_(std::move(y)), H_(std::move(h)), caps_(caps) {}

std::string HopfInstance::selector() const {
    return "young=" + Y_->name() + ",H=" + H_.str();
}

FunctionF HopfInstance::make_function(int n, std::map<YPoint, int> labels) const {
    if (n < 0) throw consistency_error("function degree must be nonnegative");
    auto pts = Y_->points(n);
    long long hsize = H_.order();
    for (const auto& [p, lab] : labels) {
        if (!std::binary_search(pts.begin(), pts.end(), p))
            throw consistency_error("function labels a non-point");
        if (lab < 1 || lab >= hsize)
            throw consistency_error("function label out of range (nontrivial characters only)");
    }
    return FunctionF{n, std::move(labels)};
}

std::vector<int> HopfInstance::label_vector(const FunctionF& f) const {
    auto pts = Y_->points(f.n);
    std::vector<int> vec(pts.size(), 0);
    for (const auto& [p, lab] : f.labels) {
        auto it = std::lower_bound(pts.begin(), pts.end(), p);
        if (it == pts.end() || *it != p) throw consistency_error("label on unknown point");
        vec[it - pts.begin()] = lab;
    }
    return vec;
}

FunctionF apply_perm(const HopfInstance& inst, const Perm& w, const FunctionF& f) {
    Injection wi = Injection::from_perm(w);
    std::map<YPoint, int> labels;
    for (const auto& [p, lab] : f.labels) labels.emplace(inst.young().map_point(wi, p), lab);
    return FunctionF{f.n, std::move(labels)};
}

PermGroup aut_F(const HopfInstance& inst, const FunctionF& f) {
    if (f.n > inst.caps().degree_cap)
        throw resource_error("aut_F: degree exceeds cap");
    // Stabilizer by full scan; degrees are capped small and results interned.
    std::vector<int> img(f.n);
    std::iota(img.begin(), img.end(), 0);
    auto base = inst.label_vector(f);
    std::vector<Perm> elems;
    do {
        Perm w(img);
        if (inst.label_vector(apply_perm(inst, w, f)) == base) elems.push_back(w);
    } while (std::next_permutation(img.begin(), img.end()));
    return PermGroup::from_elements(f.n, std::move(elems));
}

std::pair<int, Perm> HopfInstance::canonicalize(const FunctionF& f) const {
    if (f.n > caps_.degree_cap) throw resource_error("canonicalize: degree exceeds cap");
    auto base = label_vector(f);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = canon_cache_.find({f.n, base});
        if (it != canon_cache_.end()) return it->second;
    }
    auto pts = Y_->points(f.n);
    std::vector<int> img(f.n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<int> best;
    Perm best_w = Perm::identity(f.n);
    bool have_best = false;
    do {
        Perm w(img);
        Injection wi = Injection::from_perm(w);
        std::vector<int> vec(pts.size(), 0);
        for (const auto& [p, lab] : f.labels) {
            YPoint q = Y_->map_point(wi, p);
            auto it = std::lower_bound(pts.begin(), pts.end(), q);
            vec[it - pts.begin()] = lab;
        }
        if (!have_best || vec < best) {
            have_best = true;
            best = std::move(vec);
            best_w = w;
        }
    } while (std::next_permutation(img.begin(), img.end()));

    FunctionF canonical = apply_perm(*this, best_w, f);
    int id = intern_canonical(canonical);
    std::pair<int, Perm> result{id, best_w};
    std::lock_guard<std::mutex> lock(mu_);
    canon_cache_.emplace(std::make_pair(f.n, std::move(base)), result);
    return result;
}

int HopfInstance::intern_canonical(const FunctionF& canonical) const {
    auto vec = label_vector(canonical);
    std::pair<int, std::vector<int>> key{canonical.n, vec};
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = intern_.find(key);
        if (it != intern_.end()) return it->second;
    }
    auto entry = std::make_shared<CanonEntry>();
    entry->f = canonical;
    entry->aut = make_group_data(std::make_shared<PermGroup>(aut_F(*this, canonical)),
                                 caps_.group_cap);
    std::lock_guard<std::mutex> lock(mu_);
    auto it = intern_.find(key);
    if (it != intern_.end()) return it->second;
    int id = (int)entries_.size();
    entries_.push_back(std::move(entry));
    intern_.emplace(std::move(key), id);
    return id;
}

int HopfInstance::intern_degree_zero() const { return canonicalize(FunctionF{0, {}}).first; }

const FunctionF& HopfInstance::function_of(int f_id) const {
    std::lock_guard<std::mutex> lock(mu_);
    return entries_.at(f_id)->f;
}

const GroupRef& HopfInstance::aut_of(int f_id) const {
    std::lock_guard<std::mutex> lock(mu_);
    return entries_.at(f_id)->aut;
}

const CharacterTable& HopfInstance::table_of(int f_id) const {
    return character_table(aut_of(f_id), caps_.group_cap);
}

const ProductTable& HopfInstance::product_of(int fa, int fb) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = products_.find({fa, fb});
        if (it != products_.end()) return *it->second;
    }
    auto pt = std::make_shared<ProductTable>(
        product_table(aut_of(fa), aut_of(fb), caps_.group_cap));
    std::lock_guard<std::mutex> lock(mu_);
    return *products_.emplace(std::make_pair(fa, fb), std::move(pt)).first->second;
}

std::vector<int> HopfInstance::all_canonical_ids(int degree) const {
    auto pts = Y_->points(degree);
    long long hsize = H_.order();
    double total = std::pow((double)hsize, (double)pts.size());
    if (total > 2e6) throw resource_error("all_canonical_ids: function space too large");
    std::vector<int> ids;
    std::vector<int> vec(pts.size(), 0);
    auto emit = [&]() {
        std::map<YPoint, int> labels;
        for (size_t i = 0; i < pts.size(); ++i)
            if (vec[i]) labels.emplace(pts[i], vec[i]);
        ids.push_back(canonicalize(FunctionF{degree, std::move(labels)}).first);
    };
    if (pts.empty()) {
        emit();
    } else {
        while (true) {
            emit();
            size_t i = 0;
            while (i < vec.size() && vec[i] == hsize - 1) vec[i++] = 0;
            if (i == vec.size()) break;
            ++vec[i];
        }
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

std::vector<MBasisKey> HopfInstance::all_basis_keys(int degree) const {
    std::vector<MBasisKey> keys;
    for (int id : all_canonical_ids(degree))
        for (int r = 0; r < table_of(id).count(); ++r) keys.push_back({id, r});
    return keys;
}

// ---------------------------------------------------------------------------

FunctionF restrict_to_subset(const HopfInstance& inst, const FunctionF& f,
                             const std::vector<int>& subset) {
    Injection inc = Injection::of_subset(subset, f.n);
    std::map<YPoint, int> labels;
    for (const auto& q : inst.young().points(inc.n)) {
        YPoint y = inst.young().map_point(inc, q);
        auto it = f.labels.find(y);
        if (it != f.labels.end()) labels.emplace(q, it->second);
    }
    return FunctionF{inc.n, std::move(labels)};
}

FunctionF union_F(const HopfInstance& inst, const FunctionF& a, const FunctionF& b) {
    int n = a.n + b.n;
    Injection left = Injection::of_subset([&] {
        std::vector<int> s(a.n);
        std::iota(s.begin(), s.end(), 0);
        return s;
    }(), n);
    Injection right = Injection::shift(b.n, a.n, n);
    std::map<YPoint, int> labels;
    for (const auto& [p, lab] : a.labels) labels.emplace(inst.young().map_point(left, p), lab);
    for (const auto& [p, lab] : b.labels) labels.emplace(inst.young().map_point(right, p), lab);
    return FunctionF{n, std::move(labels)};
}

namespace {

std::vector<int> mask_to_subset(std::uint64_t mask, int n) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
        if ((mask >> i) & 1) s.push_back(i);
    return s;
}

// Is supp F inside Y_K + Y_K^c for the subset given by `mask`?
bool supp_splits(const HopfInstance& inst, const FunctionF& f, std::uint64_t mask) {
    if (f.labels.empty()) return true;
    auto k = mask_to_subset(mask, f.n);
    auto kc = mask_to_subset(~mask & ((f.n == 64 ? ~0ull : (1ull << f.n) - 1)), f.n);
    auto img_k = young_image(inst.young(), k, f.n);
    auto img_kc = young_image(inst.young(), kc, f.n);
    for (const auto& [p, lab] : f.labels) {
        if (std::binary_search(img_k.begin(), img_k.end(), p)) continue;
        if (std::binary_search(img_kc.begin(), img_kc.end(), p)) continue;
        return false;
    }
    return true;
}

}  // namespace

bool is_primitive(const HopfInstance& inst, const FunctionF& f) {
    if (f.n == 0) return false;
    for (std::uint64_t mask = 1; mask + 1 < (1ull << f.n); ++mask)
        if (supp_splits(inst, f, mask)) return false;
    return true;
}

// ---------------------------------------------------------------------------

MBasisKey unit_key(const HopfInstance& inst) { return {inst.intern_degree_zero(), 0}; }

HopfElement hopf_unit(const HopfInstance& inst) { return {{unit_key(inst), 1}}; }

long long counit(const HopfInstance& inst, const HopfElement& a) {
    auto it = a.find(unit_key(inst));
    return it == a.end() ? 0 : it->second;
}

namespace {

void add_element(HopfElement& out, const MBasisKey& k, long long c) {
    if (c == 0) return;
    auto [it, fresh] = out.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) out.erase(it);
    }
}

void add_tensor(TensorElement& out, const MBasisKey& k1, const MBasisKey& k2, long long c) {
    if (c == 0) return;
    auto key = std::make_pair(k1, k2);
    auto [it, fresh] = out.emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) out.erase(it);
    }
}

HopfElement product_of_keys(const HopfInstance& inst, const MBasisKey& a, const MBasisKey& b) {
    const FunctionF& fa = inst.function_of(a.f_id);
    const FunctionF& fb = inst.function_of(b.f_id);
    if (fa.n + fb.n > inst.caps().degree_cap)
        throw resource_error("hopf_product: degree exceeds cap");

    FunctionF f = union_F(inst, fa, fb);
    auto [fc, w] = inst.canonicalize(f);
    const GroupRef& big = inst.aut_of(fc);
    const auto* bigpg = dynamic_cast<const PermGroup*>(big->group.get());
    const CharacterTable& big_table = inst.table_of(fc);

    const ProductTable& pt = inst.product_of(a.f_id, b.f_id);
    const auto* prod = dynamic_cast<const ProductGroup*>(pt.G->group.get());
    const auto* pa = dynamic_cast<const PermGroup*>(inst.aut_of(a.f_id)->group.get());
    const auto* pb = dynamic_cast<const PermGroup*>(inst.aut_of(b.f_id)->group.get());

    std::vector<int> image((size_t)pt.G->group->order());
    for (long long e = 0; e < pt.G->group->order(); ++e) {
        const Perm& px = pa->element(prod->left((int)e));
        const Perm& py = pb->element(prod->right((int)e));
        Perm mapped = w.compose(Perm::block(px, py)).compose(w.inverse());
        int idx = bigpg->index_of(mapped);
        if (idx < 0) throw consistency_error("hopf_product: block embedding left Aut F");
        image[e] = idx;
    }
    Embedding emb = make_embedding(pt.G, big, std::move(image));
    const ClassFunction& tensor_row = pt.table.rows[pt.row_of_pair(a.irrep, b.irrep)];
    ClassFunction ind = induce(tensor_row, emb);
    auto mults = decompose(ind, big_table);

    HopfElement out;
    for (size_t j = 0; j < mults.size(); ++j)
        add_element(out, MBasisKey{fc, (int)j}, mults[j]);
    return out;
}

// Orbit representatives (as sorted subsets) of the Aut F action on P([n]).
std::vector<std::uint64_t> subset_orbit_reps(const PermGroup& aut, int n, bool lex_max) {
    std::vector<char> seen(std::size_t(1) << n, 0);
    std::vector<std::uint64_t> reps;
    auto better = [&](const std::uint64_t lhs, const std::uint64_t rhs) {
        auto ls = mask_to_subset(lhs, n), rs = mask_to_subset(rhs, n);
        return lex_max ? ls > rs : ls < rs;
    };
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        if (seen[mask]) continue;
        std::uint64_t best = mask;
        std::vector<std::uint64_t> stack{mask};
        seen[mask] = 1;
        std::vector<std::uint64_t> orbit{mask};
        while (!stack.empty()) {
            std::uint64_t cur = stack.back();
            stack.pop_back();
            for (const auto& p : aut.elements()) {
                std::uint64_t img = 0;
                for (int i = 0; i < n; ++i)
                    if ((cur >> i) & 1) img |= 1ull << p(i);
                if (!seen[img]) {
                    seen[img] = 1;
                    stack.push_back(img);
                    orbit.push_back(img);
                }
            }
        }
        for (auto m : orbit)
            if (better(m, best)) best = m;
        reps.push_back(best);
    }
    return reps;
}

TensorElement coproduct_of_key(const HopfInstance& inst, const MBasisKey& key, bool small_delta,
                               bool lex_max_reps) {
    const FunctionF& f = inst.function_of(key.f_id);
    const GroupRef& aut_data = inst.aut_of(key.f_id);
    const auto* aut = dynamic_cast<const PermGroup*>(aut_data->group.get());
    const CharacterTable& table = inst.table_of(key.f_id);
    int n = f.n;

    TensorElement out;
    for (std::uint64_t mask : subset_orbit_reps(*aut, n, lex_max_reps)) {
        if (small_delta && !supp_splits(inst, f, mask)) continue;
        auto k = mask_to_subset(mask, n);
        auto kc = mask_to_subset(~mask & ((1ull << n) - 1), n);

        auto f1 = restrict_to_subset(inst, f, k);
        auto f2 = restrict_to_subset(inst, f, kc);
        auto [id1, w1] = inst.canonicalize(f1);
        auto [id2, w2] = inst.canonicalize(f2);
        const ProductTable& pt = inst.product_of(id1, id2);
        const auto* prod = dynamic_cast<const ProductGroup*>(pt.G->group.get());
        const auto* a1 = dynamic_cast<const PermGroup*>(inst.aut_of(id1)->group.get());
        const auto* a2 = dynamic_cast<const PermGroup*>(inst.aut_of(id2)->group.get());

        PermGroup stab = set_stabilizer(*aut, k);
        GroupRef stab_data = make_group_data(std::make_shared<PermGroup>(stab),
                                             inst.caps().group_cap);
        Embedding stab_in_aut = perm_inclusion(stab_data, aut_data);
        ClassFunction res = restrict_along(table.rows[key.irrep], stab_in_aut);

        // w |-> (w1 (w|_K) w1^-1, w2 (w|_K^c) w2^-1) into Aut F1* x Aut F2*.
        std::vector<int> pos_in_k(n, -1), pos_in_kc(n, -1);
        for (size_t i = 0; i < k.size(); ++i) pos_in_k[k[i]] = (int)i;
        for (size_t i = 0; i < kc.size(); ++i) pos_in_kc[kc[i]] = (int)i;
        std::vector<int> image((size_t)stab.order());
        for (int e = 0; e < stab.order(); ++e) {
            const Perm& u = stab.element(e);
            std::vector<int> r1(k.size()), r2(kc.size());
            for (size_t i = 0; i < k.size(); ++i) r1[i] = pos_in_k[u(k[i])];
            for (size_t i = 0; i < kc.size(); ++i) r2[i] = pos_in_kc[u(kc[i])];
            Perm m1 = w1.compose(Perm(r1)).compose(w1.inverse());
            Perm m2 = w2.compose(Perm(r2)).compose(w2.inverse());
            int i1 = a1->index_of(m1), i2 = a2->index_of(m2);
            if (i1 < 0 || i2 < 0)
                throw consistency_error("coproduct: stabilizer image left Aut(F|K) x Aut(F|K^c)");
            image[e] = prod->pair(i1, i2);
        }
        Embedding emb = make_embedding(stab_data, pt.G, std::move(image));
        ClassFunction ind = induce(res, emb);
        auto mults = decompose(ind, pt.table);
        for (size_t r = 0; r < mults.size(); ++r) {
            if (mults[r] == 0) continue;
            auto [i1, i2] = pt.pair_of_row((int)r);
            add_tensor(out, MBasisKey{id1, i1}, MBasisKey{id2, i2}, mults[r]);
        }
    }
    return out;
}

}  // namespace

HopfElement hopf_product(const HopfInstance& inst, const HopfElement& a, const HopfElement& b) {
    HopfElement out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b)
            for (const auto& [k, c] : product_of_keys(inst, ka, kb))
                add_element(out, k, c * ca * cb);
    return out;
}

TensorElement coproduct_Delta(const HopfInstance& inst, const HopfElement& a, bool lex_max_reps) {
    TensorElement out;
    for (const auto& [k, c] : a)
        for (const auto& [kk, cc] : coproduct_of_key(inst, k, false, lex_max_reps))
            add_tensor(out, kk.first, kk.second, c * cc);
    return out;
}

TensorElement coproduct_delta(const HopfInstance& inst, const HopfElement& a, bool lex_max_reps) {
    TensorElement out;
    for (const auto& [k, c] : a)
        for (const auto& [kk, cc] : coproduct_of_key(inst, k, true, lex_max_reps))
            add_tensor(out, kk.first, kk.second, c * cc);
    return out;
}

long long zeta_M(const HopfInstance& inst, const HopfElement& a) {
    long long total = 0;
    for (const auto& [k, c] : a)
        if (inst.function_of(k.f_id).empty_support() && k.irrep == 0) total += c;
    return total;
}

namespace {

// Set compositions of [n] with block sizes alpha and supp F disjoint from
// Y_kappa; blocks are encoded as sorted masks in order.
std::vector<std::vector<std::uint64_t>> admissible_compositions(const HopfInstance& inst,
                                                                const FunctionF& f,
                                                                const IntComposition& alpha) {
    int n = f.n;
    std::map<std::uint64_t, bool> block_ok;  // mask -> Y_mask disjoint from supp
    auto ok = [&](std::uint64_t mask) {
        auto it = block_ok.find(mask);
        if (it != block_ok.end()) return it->second;
        auto img = young_image(inst.young(), mask_to_subset(mask, n), n);
        bool good = true;
        for (const auto& [p, lab] : f.labels)
            if (std::binary_search(img.begin(), img.end(), p)) { good = false; break; }
        block_ok.emplace(mask, good);
        return good;
    };
    std::vector<std::vector<std::uint64_t>> out;
    std::vector<std::uint64_t> cur;
    std::function<void(std::uint64_t)> rec = [&](std::uint64_t used) {
        size_t depth = cur.size();
        if (depth == alpha.size()) {
            out.push_back(cur);
            return;
        }
        int size = alpha[depth];
        std::uint64_t avail = ~used & ((1ull << n) - 1);
        // Enumerate all `size`-subsets of the available vertices.
        std::vector<int> verts = mask_to_subset(avail, n);
        std::vector<int> pick(size);
        std::function<void(int, int)> choose = [&](int start, int got) {
            if (got == size) {
                std::uint64_t mask = 0;
                for (int i = 0; i < size; ++i) mask |= 1ull << pick[i];
                if (!ok(mask)) return;
                cur.push_back(mask);
                rec(used | mask);
                cur.pop_back();
                return;
            }
            for (int i = start; i <= (int)verts.size() - (size - got); ++i) {
                pick[got] = verts[i];
                choose(i + 1, got + 1);
            }
        };
        choose(0, 0);
    };
    rec(0);
    return out;
}

}  // namespace

std::vector<SymFunc> psi_all_irreps(const HopfInstance& inst, int f_id) {
    const FunctionF& f = inst.function_of(f_id);
    const GroupRef& aut_data = inst.aut_of(f_id);
    const auto* aut = dynamic_cast<const PermGroup*>(aut_data->group.get());
    const CharacterTable& table = inst.table_of(f_id);
    int n = f.n;

    std::vector<std::map<IntComposition, long long>> coeffs(table.count());
    for (const auto& alpha : enumerate_compositions(n)) {
        auto comps = admissible_compositions(inst, f, alpha);
        ClassFunction rho =
            permutation_character(aut_data, (int)comps.size(), [&](int e, int point) {
                const Perm& u = aut->element(e);
                std::vector<std::uint64_t> mapped;
                mapped.reserve(comps[point].size());
                for (auto mask : comps[point]) {
                    std::uint64_t img = 0;
                    for (int i = 0; i < n; ++i)
                        if ((mask >> i) & 1) img |= 1ull << u(i);
                    mapped.push_back(img);
                }
                // Fixed-point test only needs identity-or-not.
                return mapped == comps[point] ? point : -1;
            });
        for (int r = 0; r < table.count(); ++r) {
            Cyclotomic ip = inner_product(rho, table.rows[r]);
            long long c = ip.as_integer();
            if (c < 0) throw consistency_error("psi: negative intertwining number");
            coeffs[r][alpha] = c;
        }
    }
    std::vector<SymFunc> out;
    out.reserve(table.count());
    for (int r = 0; r < table.count(); ++r) out.push_back(assemble_from_quasi(coeffs[r]));
    return out;
}

SymFunc psi_key(const HopfInstance& inst, const MBasisKey& key) {
    const FunctionF& f = inst.function_of(key.f_id);
    const GroupRef& aut_data = inst.aut_of(key.f_id);
    const auto* aut = dynamic_cast<const PermGroup*>(aut_data->group.get());
    const CharacterTable& table = inst.table_of(key.f_id);
    int n = f.n;

    std::map<IntComposition, long long> coeffs;
    for (const auto& alpha : enumerate_compositions(n)) {
        auto comps = admissible_compositions(inst, f, alpha);
        ClassFunction rho =
            permutation_character(aut_data, (int)comps.size(), [&](int e, int point) {
                const Perm& u = aut->element(e);
                std::vector<std::uint64_t> mapped;
                mapped.reserve(comps[point].size());
                for (auto mask : comps[point]) {
                    std::uint64_t img = 0;
                    for (int i = 0; i < n; ++i)
                        if ((mask >> i) & 1) img |= 1ull << u(i);
                    mapped.push_back(img);
                }
                return mapped == comps[point] ? point : -1;
            });
        Cyclotomic ip = inner_product(rho, table.rows[key.irrep]);
        long long c = ip.as_integer();
        if (c < 0) throw consistency_error("psi: negative intertwining number");
        coeffs[alpha] = c;
    }
    return assemble_from_quasi(coeffs);
}

SymFunc psi(const HopfInstance& inst, const HopfElement& a) {
    SymFunc out;
    for (const auto& [k, c] : a) out += psi_key(inst, k).scaled(c);
    return out;
}

// ---------------------------------------------------------------------------

BElement b_unit(const HopfInstance& inst) { return {{inst.intern_degree_zero(), 1}}; }

BElement b_product(const HopfInstance& inst, const BElement& a, const BElement& b) {
    BElement out;
    for (const auto& [fa, ca] : a)
        for (const auto& [fb, cb] : b) {
            FunctionF f = union_F(inst, inst.function_of(fa), inst.function_of(fb));
            int id = inst.canonicalize(f).first;
            out[id] += ca * cb;
            if (out[id] == 0) out.erase(id);
        }
    return out;
}

namespace {

BTensorElement b_coproduct(const HopfInstance& inst, const BElement& a, bool small_delta) {
    BTensorElement out;
    for (const auto& [fid, c] : a) {
        const FunctionF& f = inst.function_of(fid);
        int n = f.n;
        for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
            if (small_delta && !supp_splits(inst, f, mask)) continue;
            auto k = mask_to_subset(mask, n);
            auto kc = mask_to_subset(~mask & ((1ull << n) - 1), n);
            int id1 = inst.canonicalize(restrict_to_subset(inst, f, k)).first;
            int id2 = inst.canonicalize(restrict_to_subset(inst, f, kc)).first;
            out[{id1, id2}] += c;
            if (out[{id1, id2}] == 0) out.erase({id1, id2});
        }
    }
    return out;
}

}  // namespace

BTensorElement b_coproduct_Delta(const HopfInstance& inst, const BElement& a) {
    return b_coproduct(inst, a, false);
}

BTensorElement b_coproduct_delta(const HopfInstance& inst, const BElement& a) {
    return b_coproduct(inst, a, true);
}

long long zeta_B(const HopfInstance& inst, const BElement& a) {
    long long total = 0;
    for (const auto& [fid, c] : a)
        if (inst.function_of(fid).empty_support()) total += c;
    return total;
}

SymFunc psi_B_key(const HopfInstance& inst, int f_id) {
    const FunctionF& f = inst.function_of(f_id);
    std::map<IntComposition, long long> coeffs;
    for (const auto& alpha : enumerate_compositions(f.n))
        coeffs[alpha] = (long long)admissible_compositions(inst, f, alpha).size();
    return assemble_from_quasi(coeffs);
}

SymFunc psi_B(const HopfInstance& inst, const BElement& a) {
    SymFunc out;
    for (const auto& [fid, c] : a) out += psi_B_key(inst, fid).scaled(c);
    return out;
}

HopfElement reg_embed_key(const HopfInstance& inst, int f_id) {
    const CharacterTable& table = inst.table_of(f_id);
    HopfElement out;
    for (int r = 0; r < table.count(); ++r)
        add_element(out, MBasisKey{f_id, r}, table.degrees[r]);
    return out;
}

HopfElement reg_embed(const HopfInstance& inst, const BElement& a) {
    HopfElement out;
    for (const auto& [fid, c] : a)
        for (const auto& [k, d] : reg_embed_key(inst, fid)) add_element(out, k, c * d);
    return out;
}

// ---------------------------------------------------------------------------

long long basis_inner(const HopfElement& a, const HopfElement& b) {
    long long total = 0;
    for (const auto& [k, c] : a) {
        auto it = b.find(k);
        if (it != b.end()) total += c * it->second;
    }
    return total;
}

long long tensor_inner(const TensorElement& a, const TensorElement& b) {
    long long total = 0;
    for (const auto& [k, c] : a) {
        auto it = b.find(k);
        if (it != b.end()) total += c * it->second;
    }
    return total;
}

TensorElement tensor_product_elements(const HopfInstance& inst, const TensorElement& a,
                                      const TensorElement& b) {
    TensorElement out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            HopfElement left = hopf_product(inst, {{ka.first, 1}}, {{kb.first, 1}});
            HopfElement right = hopf_product(inst, {{ka.second, 1}}, {{kb.second, 1}});
            for (const auto& [kl, cl] : left)
                for (const auto& [kr, cr] : right)
                    add_tensor(out, kl, kr, ca * cb * cl * cr);
        }
    return out;
}

TensorElement flip(const TensorElement& a) {
    TensorElement out;
    for (const auto& [k, c] : a) out[{k.second, k.first}] = c;
    return out;
}

std::string key_str(const HopfInstance& inst, const MBasisKey& key) {
    const FunctionF& f = inst.function_of(key.f_id);
    std::ostringstream out;
    out << "(n=" << f.n << ", supp={";
    bool first = true;
    for (const auto& [p, lab] : f.labels) {
        if (!first) out << ",";
        first = false;
        out << "(";
        for (size_t i = 0; i < p.size(); ++i) {
            if (i) out << " ";
            out << p[i];
        }
        out << ")";
        if (inst.H().order() > 2) out << ":" << lab;
    }
    out << "}, irrep=" << key.irrep << ")";
    return out.str();
}

std::string element_str(const HopfInstance& inst, const HopfElement& a) {
    if (a.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : a) {
        if (!first) out << " + ";
        first = false;
        if (c != 1) out << c << "*";
        out << key_str(inst, k);
    }
    return out.str();
}

}  // namespace hopfchrom
