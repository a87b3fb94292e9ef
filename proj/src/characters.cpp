#include "hopfchrom/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <random>

namespace hopfchrom {

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
    if (G.get() != o.G.get()) throw consistency_error("class function group mismatch");
    for (size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
    return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
    if (G.get() != o.G.get()) throw consistency_error("class function group mismatch");
    for (size_t i = 0; i < values.size(); ++i) values[i] -= o.values[i];
    return *this;
}

ClassFunction ClassFunction::scaled(const Rational& r) const {
    ClassFunction out = *this;
    for (auto& v : out.values) v *= Cyclotomic(r);
    return out;
}

ClassFunction trivial_character(const GroupRef& g) {
    return {g, std::vector<Cyclotomic>(g->classes.count(), Cyclotomic(1))};
}

ClassFunction regular_character(const GroupRef& g) {
    std::vector<Cyclotomic> vals(g->classes.count(), Cyclotomic(0));
    vals[0] = Cyclotomic(Rational(g->group->order()));
    return {g, std::move(vals)};
}

Embedding make_embedding(GroupRef sub, GroupRef big, std::vector<int> image) {
    long long ns = sub->group->order();
    long long nb = big->group->order();
    if ((long long)image.size() != ns) throw consistency_error("embedding image has wrong size");
    Embedding e{std::move(sub), std::move(big), std::move(image), std::vector<int>((size_t)nb, -1)};
    for (int i = 0; i < ns; ++i) {
        int im = e.image[i];
        if (im < 0 || im >= nb) throw consistency_error("embedding image out of range");
        if (e.preimage[im] >= 0) throw consistency_error("embedding is not injective");
        e.preimage[im] = i;
    }
    if (e.image[e.sub->group->id()] != e.big->group->id())
        throw consistency_error("embedding does not preserve the identity");
    auto check = [&](int a, int b) {
        if (e.image[e.sub->group->mul(a, b)] != e.big->group->mul(e.image[a], e.image[b]))
            throw consistency_error("embedding is not a homomorphism");
    };
    if (ns <= 360) {
        for (int a = 0; a < ns; ++a)
            for (int b = 0; b < ns; ++b) check(a, b);
    } else {
        std::mt19937_64 rng(0x1234abcdULL);
        std::uniform_int_distribution<int> pick(0, (int)ns - 1);
        for (int t = 0; t < 20000; ++t) check(pick(rng), pick(rng));
    }
    return e;
}

Embedding perm_inclusion(const GroupRef& sub, const GroupRef& big) {
    auto* ps = dynamic_cast<const PermGroup*>(sub->group.get());
    auto* pb = dynamic_cast<const PermGroup*>(big->group.get());
    if (!ps || !pb) throw consistency_error("perm_inclusion requires permutation groups");
    std::vector<int> image(ps->order());
    for (int i = 0; i < ps->order(); ++i) {
        int idx = pb->index_of(ps->element(i));
        if (idx < 0) throw consistency_error("perm_inclusion: not a subgroup");
        image[i] = idx;
    }
    return make_embedding(sub, big, std::move(image));
}

Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b) {
    if (a.G.get() != b.G.get()) throw consistency_error("inner product group mismatch");
    const auto& cls = a.G->classes;
    Cyclotomic sum(0);
    for (int c = 0; c < cls.count(); ++c) {
        if (a.values[c].is_zero() || b.values[c].is_zero()) continue;
        sum += Cyclotomic(Rational(cls.sizes[c])) * a.values[c] * b.values[c].conj();
    }
    return sum / Rational(a.G->group->order());
}

ClassFunction induce(const ClassFunction& chi, const Embedding& e) {
    if (chi.G.get() != e.sub.get()) throw consistency_error("induce: character lives elsewhere");
    const Group& big = *e.big->group;
    const auto& cls = e.big->classes;
    const auto& subcls = e.sub->classes;
    std::vector<Cyclotomic> out(cls.count(), Cyclotomic(0));
    long long n = big.order();
    for (int c = 0; c < cls.count(); ++c) {
        int rep = cls.reps[c];
        Cyclotomic sum(0);
        for (int x = 0; x < n; ++x) {
            int y = big.mul(big.mul(big.inv(x), rep), x);
            int pre = e.preimage[y];
            if (pre >= 0) sum += chi.values[subcls.class_of[pre]];
        }
        out[c] = sum / Rational(e.sub->group->order());
    }
    return {e.big, std::move(out)};
}

ClassFunction restrict_along(const ClassFunction& chi, const Embedding& e) {
    if (chi.G.get() != e.big.get()) throw consistency_error("restrict: character lives elsewhere");
    const auto& subcls = e.sub->classes;
    const auto& bigcls = e.big->classes;
    std::vector<Cyclotomic> out(subcls.count(), Cyclotomic(0));
    for (int c = 0; c < subcls.count(); ++c)
        out[c] = chi.values[bigcls.class_of[e.image[subcls.reps[c]]]];
    return {e.sub, std::move(out)};
}

ClassFunction permutation_character(const GroupRef& g, int npoints,
                                    const std::function<int(int, int)>& act) {
    const auto& cls = g->classes;
    std::vector<Cyclotomic> out(cls.count(), Cyclotomic(0));
    for (int c = 0; c < cls.count(); ++c) {
        int rep = cls.reps[c];
        long long fixed = 0;
        for (int p = 0; p < npoints; ++p)
            if (act(rep, p) == p) ++fixed;
        out[c] = Cyclotomic(Rational(fixed));
    }
    return {g, std::move(out)};
}

long long fixed_dim(const ClassFunction& chi, const std::vector<int>& subgroup_elements) {
    if (subgroup_elements.empty()) throw consistency_error("fixed_dim: empty subgroup");
    Cyclotomic sum(0);
    for (int u : subgroup_elements) sum += chi.at_element(u);
    Cyclotomic avg = sum / Rational((long long)subgroup_elements.size());
    long long d = avg.as_integer();
    if (d < 0) throw consistency_error("fixed_dim: negative dimension, not a character");
    return d;
}

int CharacterTable::find_row(const ClassFunction& chi) const {
    for (int i = 0; i < count(); ++i)
        if (rows[i].values == chi.values) return i;
    return -1;
}

std::vector<long long> decompose(const ClassFunction& chi, const CharacterTable& table) {
    if (chi.G.get() != table.G.get()) throw consistency_error("decompose group mismatch");
    std::vector<long long> mults(table.count());
    for (int i = 0; i < table.count(); ++i) {
        Cyclotomic m = inner_product(chi, table.rows[i]);
        if (!m.is_rational() || !m.as_rational().is_integer() || m.as_rational().num() < 0)
            throw consistency_error("decompose: multiplicity " + m.str() + " — not a character");
        mults[i] = m.as_integer();
    }
    return mults;
}

ClassFunction recompose(const CharacterTable& table, const std::vector<long long>& mults) {
    ClassFunction out{table.G, std::vector<Cyclotomic>(table.G->classes.count(), Cyclotomic(0))};
    for (size_t i = 0; i < mults.size(); ++i) {
        if (mults[i] == 0) continue;
        out += table.rows[i].scaled(Rational(mults[i]));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Dixon-Schneider
// ---------------------------------------------------------------------------

namespace {

using ll = long long;

ll mod_pow(ll b, ll e, ll p) {
    ll r = 1 % p;
    b %= p;
    while (e > 0) {
        if (e & 1) r = (__int128)r * b % p;
        b = (__int128)b * b % p;
        e >>= 1;
    }
    return r;
}

ll mod_inv(ll a, ll p) { return mod_pow(((a % p) + p) % p, p - 2, p); }

bool is_prime(ll n) {
    if (n < 2) return false;
    for (ll d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<ll> prime_factors(ll n) {
    std::vector<ll> fs;
    for (ll d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) fs.push_back(n);
    return fs;
}

ll primitive_root(ll p) {
    auto fs = prime_factors(p - 1);
    for (ll g = 2; g < p; ++g) {
        bool ok = true;
        for (ll f : fs)
            if (mod_pow(g, (p - 1) / f, p) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw consistency_error("no primitive root found");
}

// Tonelli-Shanks square root mod an odd prime.
ll mod_sqrt(ll a, ll p) {
    a = ((a % p) + p) % p;
    if (a == 0) return 0;
    if (mod_pow(a, (p - 1) / 2, p) != 1)
        throw consistency_error("mod_sqrt: value is not a quadratic residue");
    if (p % 4 == 3) return mod_pow(a, (p + 1) / 4, p);
    ll q = p - 1, s = 0;
    while (q % 2 == 0) { q /= 2; ++s; }
    ll z = 2;
    while (mod_pow(z, (p - 1) / 2, p) != p - 1) ++z;
    ll m = s, c = mod_pow(z, q, p), t = mod_pow(a, q, p), r = mod_pow(a, (q + 1) / 2, p);
    while (t != 1) {
        ll i = 0, tt = t;
        while (tt != 1) { tt = (__int128)tt * tt % p; ++i; }
        ll b = mod_pow(c, 1LL << (m - i - 1), p);
        m = i;
        c = (__int128)b * b % p;
        t = (__int128)t * c % p;
        r = (__int128)r * b % p;
    }
    return r;
}

using Vec = std::vector<ll>;
using Mat = std::vector<Vec>;

Vec mat_apply(const Mat& m, const Vec& v, ll p) {
    Vec out(m.size(), 0);
    for (size_t i = 0; i < m.size(); ++i) {
        __int128 acc = 0;
        for (size_t j = 0; j < v.size(); ++j) acc += (__int128)m[i][j] * v[j];
        out[i] = (ll)(acc % p);
    }
    return out;
}

// Characteristic polynomial by Faddeev-LeVerrier; valid since p > dim.
Vec char_poly(const Mat& a, ll p) {
    size_t n = a.size();
    Mat m(n, Vec(n, 0));
    Vec coeffs(n + 1, 0);
    coeffs[n] = 1;
    Mat ak = a;
    for (size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            // ak = a * (ak_prev + c I)
            Mat tmp(n, Vec(n, 0));
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) {
                    __int128 acc = 0;
                    for (size_t t = 0; t < n; ++t) acc += (__int128)a[i][t] * m[t][j];
                    tmp[i][j] = (ll)(acc % p);
                }
            ak = tmp;
        }
        ll tr = 0;
        for (size_t i = 0; i < n; ++i) tr = (tr + ak[i][i]) % p;
        ll c = (__int128)tr % p * mod_inv(k % p, p) % p;
        c = (p - c) % p;
        coeffs[n - k] = c;
        m = ak;
        for (size_t i = 0; i < n; ++i) m[i][i] = (m[i][i] + c) % p;
    }
    return coeffs;
}

ll poly_eval(const Vec& c, ll x, ll p) {
    ll r = 0;
    for (size_t i = c.size(); i-- > 0;) r = ((__int128)r * x + c[i]) % p;
    return r;
}

// Kernel basis of (m - lambda I) over F_p.
std::vector<Vec> eigen_kernel(Mat m, ll lambda, ll p) {
    size_t n = m.size();
    for (size_t i = 0; i < n; ++i) m[i][i] = ((m[i][i] - lambda) % p + p) % p;
    std::vector<int> pivot_of_col(n, -1);
    size_t rank = 0;
    for (size_t col = 0; col < n && rank < n; ++col) {
        size_t sel = rank;
        while (sel < n && m[sel][col] == 0) ++sel;
        if (sel == n) continue;
        std::swap(m[sel], m[rank]);
        ll inv = mod_inv(m[rank][col], p);
        for (auto& v : m[rank]) v = (__int128)v * inv % p;
        for (size_t r = 0; r < n; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            ll f = m[r][col];
            for (size_t j = 0; j < n; ++j)
                m[r][j] = ((m[r][j] - (__int128)f * m[rank][j]) % p + p) % p;
        }
        pivot_of_col[col] = (int)rank;
        ++rank;
    }
    std::vector<Vec> kernel;
    for (size_t col = 0; col < n; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        Vec v(n, 0);
        v[col] = 1;
        for (size_t c2 = 0; c2 < n; ++c2)
            if (pivot_of_col[c2] >= 0) v[c2] = (p - m[pivot_of_col[c2]][col]) % p;
        kernel.push_back(std::move(v));
    }
    return kernel;
}

// Express B*b_j in the subspace basis: returns the restricted matrix.
Mat restrict_matrix(const std::vector<Vec>& basis, const Mat& b, ll p) {
    size_t d = basis.size(), k = basis[0].size();
    // Row-reduce [basis^T | images^T] columnwise: solve basis^T x = image.
    std::vector<Vec> images(d);
    for (size_t j = 0; j < d; ++j) images[j] = mat_apply(b, basis[j], p);
    // Build augmented k x (d + d) system.
    Mat m(k, Vec(2 * d, 0));
    for (size_t r = 0; r < k; ++r) {
        for (size_t j = 0; j < d; ++j) m[r][j] = basis[j][r];
        for (size_t j = 0; j < d; ++j) m[r][d + j] = images[j][r];
    }
    size_t rank = 0;
    std::vector<int> pivcol(k, -1);
    for (size_t col = 0; col < d && rank < k; ++col) {
        size_t sel = rank;
        while (sel < k && m[sel][col] == 0) ++sel;
        if (sel == k) throw consistency_error("dixon: subspace basis is degenerate");
        std::swap(m[sel], m[rank]);
        ll inv = mod_inv(m[rank][col], p);
        for (auto& v : m[rank]) v = (__int128)v * inv % p;
        for (size_t r = 0; r < k; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            ll f = m[r][col];
            for (size_t j = 0; j < 2 * d; ++j)
                m[r][j] = ((m[r][j] - (__int128)f * m[rank][j]) % p + p) % p;
        }
        pivcol[rank] = (int)col;
        ++rank;
    }
    for (size_t r = rank; r < k; ++r)
        for (size_t j = d; j < 2 * d; ++j)
            if (m[r][j] != 0) throw consistency_error("dixon: class matrix leaves subspace");
    Mat out(d, Vec(d, 0));
    for (size_t r = 0; r < rank; ++r)
        for (size_t j = 0; j < d; ++j) out[pivcol[r]][j] = m[r][d + j];
    return out;
}

CharacterTable dixon_schneider(const GroupRef& gref) {
    const Group& g = *gref->group;
    const ConjClasses& cls = gref->classes;
    int k = cls.count();
    ll n = g.order();

    ll exponent = 1;
    for (int c = 0; c < k; ++c) exponent = std::lcm(exponent, (ll)cls.rep_order[c]);

    ll sqrt_n = (ll)std::sqrt((double)n);
    while (sqrt_n * sqrt_n < n) ++sqrt_n;
    ll p = exponent + 1;
    while (!is_prime(p) || p <= 2 * sqrt_n || p <= (ll)k) p += exponent;

    // Class-multiplication matrices: B_i[j][t] = #{x in C_i : x^-1 z_t in C_j}.
    std::vector<Mat> mats(k, Mat(k, Vec(k, 0)));
    for (int t = 0; t < k; ++t) {
        int zt = cls.reps[t];
        for (int x = 0; x < n; ++x) {
            int y = g.mul(g.inv(x), zt);
            ++mats[cls.class_of[x]][cls.class_of[y]][t];
        }
    }

    // Split the joint eigenspaces until every one is a line.
    std::vector<std::vector<Vec>> spaces;
    {
        std::vector<Vec> full;
        for (int i = 0; i < k; ++i) {
            Vec e(k, 0);
            e[i] = 1;
            full.push_back(std::move(e));
        }
        spaces.push_back(std::move(full));
    }
    for (int i = 1; i < k; ++i) {
        bool all_lines = true;
        for (const auto& s : spaces)
            if (s.size() > 1) { all_lines = false; break; }
        if (all_lines) break;
        std::vector<std::vector<Vec>> next;
        for (auto& s : spaces) {
            if (s.size() == 1) {
                next.push_back(std::move(s));
                continue;
            }
            Mat a = restrict_matrix(s, mats[i], p);
            Vec cp = char_poly(a, p);
            for (ll lambda = 0; lambda < p; ++lambda) {
                if (poly_eval(cp, lambda, p) != 0) continue;
                auto kern = eigen_kernel(a, lambda, p);
                if (kern.empty()) continue;
                std::vector<Vec> sub;
                for (const auto& coeffs : kern) {
                    Vec v(k, 0);
                    for (size_t j = 0; j < s.size(); ++j)
                        for (int t = 0; t < k; ++t)
                            v[t] = (v[t] + (__int128)coeffs[j] * s[j][t]) % p;
                    sub.push_back(std::move(v));
                }
                next.push_back(std::move(sub));
            }
        }
        spaces = std::move(next);
    }
    if ((int)spaces.size() != k)
        throw consistency_error("dixon: failed to isolate " + std::to_string(k) + " eigenlines");

    ll gen = primitive_root(p);
    ll ze = mod_pow(gen, (p - 1) / exponent, p);

    // Powers of class representatives, for the root-of-unity multiplicity lift.
    std::vector<std::vector<int>> power_class(k);
    for (int c = 0; c < k; ++c) {
        int ord = cls.rep_order[c];
        power_class[c].resize(ord);
        int x = g.id();
        for (int s = 0; s < ord; ++s) {
            power_class[c][s] = cls.class_of[x];
            x = g.mul(x, cls.reps[c]);
        }
    }

    std::vector<ClassFunction> rows;
    for (const auto& s : spaces) {
        const Vec& raw = s[0];
        if (raw[0] == 0) throw consistency_error("dixon: eigenvector vanishes at identity");
        ll scale = mod_inv(raw[0], p);
        Vec omega(k);
        for (int t = 0; t < k; ++t) omega[t] = (__int128)raw[t] * scale % p;

        ll ssum = 0;
        for (int t = 0; t < k; ++t) {
            ll term = (__int128)omega[t] * omega[cls.inverse_class[t]] % p;
            ssum = (ssum + (__int128)term * mod_inv(cls.sizes[t] % p, p)) % p;
        }
        if (ssum == 0) throw consistency_error("dixon: degenerate norm sum");
        ll deg2 = (__int128)(n % p) * mod_inv(ssum, p) % p;
        ll deg = mod_sqrt(deg2, p);
        if (deg > p - deg) deg = p - deg;

        Vec chi_mod(k);
        for (int t = 0; t < k; ++t)
            chi_mod[t] = (__int128)deg * omega[t] % p * mod_inv(cls.sizes[t] % p, p) % p;

        std::vector<Cyclotomic> values(k);
        for (int t = 0; t < k; ++t) {
            int m = cls.rep_order[t];
            ll zm = mod_pow(ze, exponent / m, p);
            ll zm_inv = mod_inv(zm, p);
            std::vector<Rational> coeffs(m, Rational(0));
            ll m_inv = mod_inv(m % p, p);
            for (int a = 0; a < m; ++a) {
                ll acc = 0;
                for (int sdx = 0; sdx < m; ++sdx) {
                    ll w = mod_pow(zm_inv, (ll)a * sdx % m, p);
                    acc = (acc + (__int128)chi_mod[power_class[t][sdx]] * w) % p;
                }
                ll na = (__int128)acc * m_inv % p;
                if (na > deg)
                    throw consistency_error("dixon: eigenvalue multiplicity exceeds degree");
                coeffs[a] = Rational(na);
            }
            values[t] = Cyclotomic::from_coeffs(m, std::move(coeffs));
        }
        rows.push_back(ClassFunction{gref, std::move(values)});
    }

    // Canonical row order: trivial first, then (degree, value vector).
    auto is_trivial = [&](const ClassFunction& cf) {
        for (const auto& v : cf.values)
            if (!(v == Cyclotomic(1))) return false;
        return true;
    };
    std::stable_sort(rows.begin(), rows.end(), [&](const ClassFunction& a, const ClassFunction& b) {
        bool ta = is_trivial(a), tb = is_trivial(b);
        if (ta != tb) return ta;
        Rational da = a.values[0].as_rational(), db = b.values[0].as_rational();
        if (!(da == db)) return da < db;
        return std::lexicographical_compare(a.values.begin(), a.values.end(),
                                            b.values.begin(), b.values.end());
    });

    CharacterTable table;
    table.G = gref;
    table.rows = std::move(rows);
    if (table.rows.empty() || !is_trivial(table.rows[0]))
        throw consistency_error("character table: trivial character missing");
    ll degsum = 0;
    for (const auto& r : table.rows) {
        ll d = r.values[0].as_integer();
        if (d <= 0) throw consistency_error("character table: nonpositive degree");
        table.degrees.push_back(d);
        degsum += d * d;
    }
    if (degsum != n) throw consistency_error("character table: degree squares do not sum to |G|");
    for (int i = 0; i < table.count(); ++i)
        for (int j = i; j < table.count(); ++j) {
            Cyclotomic ip = inner_product(table.rows[i], table.rows[j]);
            if (!(ip == Cyclotomic(i == j ? 1 : 0)))
                throw consistency_error("character table: row orthogonality violated");
        }
    return table;
}

struct TableCache {
    std::mutex mu;
    std::map<const GroupData*, std::shared_ptr<const CharacterTable>> map;
};

TableCache& table_cache() {
    static TableCache cache;
    return cache;
}

}  // namespace

const CharacterTable& character_table(const GroupRef& g, long long order_cap) {
    if (g->group->order() > order_cap)
        throw resource_error("character_table: group order exceeds cap");
    auto& cache = table_cache();
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        auto it = cache.map.find(g.get());
        if (it != cache.map.end()) return *it->second;
    }
    auto table = std::make_shared<CharacterTable>(dixon_schneider(g));
    std::lock_guard<std::mutex> lock(cache.mu);
    return *cache.map.emplace(g.get(), table).first->second;
}

int ProductTable::row_of_pair(int i, int j) const {
    for (size_t r = 0; r < row_pairs.size(); ++r)
        if (row_pairs[r] == std::make_pair(i, j)) return (int)r;
    throw consistency_error("product table: pair not found");
}

ProductTable product_table(const GroupRef& a, const GroupRef& b, long long order_cap) {
    if (a->group->order() * b->group->order() > order_cap)
        throw resource_error("product_table: product order exceeds cap");
    const CharacterTable& ta = character_table(a, order_cap);
    const CharacterTable& tb = character_table(b, order_cap);
    GroupRef prod = make_product_group_data(a, b);
    const auto* pg = dynamic_cast<const ProductGroup*>(prod->group.get());
    const auto& cls = prod->classes;
    const auto& acls = a->classes;
    const auto& bcls = b->classes;

    struct RowWithPair {
        ClassFunction row;
        std::pair<int, int> pair;
    };
    std::vector<RowWithPair> rows;
    for (int i = 0; i < ta.count(); ++i)
        for (int j = 0; j < tb.count(); ++j) {
            std::vector<Cyclotomic> vals(cls.count());
            for (int c = 0; c < cls.count(); ++c) {
                int rep = cls.reps[c];
                int ca = acls.class_of[pg->left(rep)];
                int cb = bcls.class_of[pg->right(rep)];
                vals[c] = ta.rows[i].values[ca] * tb.rows[j].values[cb];
            }
            rows.push_back({ClassFunction{prod, std::move(vals)}, {i, j}});
        }
    auto is_trivial = [&](const ClassFunction& cf) {
        for (const auto& v : cf.values)
            if (!(v == Cyclotomic(1))) return false;
        return true;
    };
    std::stable_sort(rows.begin(), rows.end(), [&](const RowWithPair& x, const RowWithPair& y) {
        bool tx = is_trivial(x.row), ty = is_trivial(y.row);
        if (tx != ty) return tx;
        Rational dx = x.row.values[0].as_rational(), dy = y.row.values[0].as_rational();
        if (!(dx == dy)) return dx < dy;
        return std::lexicographical_compare(x.row.values.begin(), x.row.values.end(),
                                            y.row.values.begin(), y.row.values.end());
    });

    ProductTable out;
    out.G = prod;
    out.table.G = prod;
    for (auto& r : rows) {
        out.table.degrees.push_back(r.row.values[0].as_integer());
        out.table.rows.push_back(std::move(r.row));
        out.row_pairs.push_back(r.pair);
    }
    return out;
}

std::vector<std::pair<std::vector<int>, int>> symmetric_group_partition_rows(
    const GroupRef& sn, const CharacterTable& table) {
    const auto* pg = dynamic_cast<const PermGroup*>(sn->group.get());
    if (!pg) throw consistency_error("expected a symmetric permutation group");
    int n = pg->degree();

    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    std::function<void(int, int)> gen = [&](int rest, int maxpart) {
        if (rest == 0) {
            parts.push_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            gen(rest - p, p);
            cur.pop_back();
        }
    };
    gen(n, n > 0 ? n : 1);
    if (n == 0) parts = {{}};
    // Descending lex order lists every partition after all partitions that
    // dominate it, which makes the Kostka peeling below triangular.
    std::sort(parts.begin(), parts.end(), std::greater<>());

    std::vector<std::pair<std::vector<int>, int>> result;
    std::vector<ClassFunction> known;
    for (const auto& lambda : parts) {
        // Permutation character on cosets of the Young subgroup S_lambda.
        std::vector<Perm> gens;
        int offset = 0;
        for (int part : lambda) {
            for (int i = 0; i + 1 < part; ++i) {
                auto img = Perm::identity(n).images();
                std::swap(img[offset + i], img[offset + i + 1]);
                gens.emplace_back(img);
            }
            offset += part;
        }
        PermGroup ysub = close_generators(gens, n);
        auto sub = make_group_data(std::make_shared<PermGroup>(ysub));
        Embedding emb = perm_inclusion(sub, sn);
        ClassFunction eta = induce(trivial_character(sub), emb);
        for (const auto& chi : known) {
            Cyclotomic m = inner_product(eta, chi);
            eta -= chi.scaled(m.as_rational());
        }
        int row = table.find_row(eta);
        if (row < 0) throw consistency_error("partition labelling: remainder is not irreducible");
        result.emplace_back(lambda, row);
        known.push_back(table.rows[row]);
    }
    return result;
}

}  // namespace hopfchrom
