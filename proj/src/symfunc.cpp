#include "hopfchrom/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "hopfchrom/errors.hpp"

namespace hopfchrom {

bool is_partition(const IntPartition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1) return false;
        if (i && p[i] > p[i - 1]) return false;
    }
    return true;
}

int weight(const std::vector<int>& parts) {
    int w = 0;
    for (int x : parts) w += x;
    return w;
}

IntPartition sorted_partition(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    if (!is_partition(parts)) throw consistency_error("invalid partition parts");
    return parts;
}

std::vector<IntPartition> enumerate_partitions(int n) {
    std::vector<IntPartition> out;
    IntPartition cur;
    std::function<void(int, int)> gen = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            gen(rest - p, p);
            cur.pop_back();
        }
    };
    gen(n, std::max(n, 1));
    if (n == 0) out = {{}};
    return out;
}

std::vector<IntComposition> enumerate_compositions(int n) {
    std::vector<IntComposition> out;
    IntComposition cur;
    std::function<void(int)> gen = [&](int rest) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = rest; p >= 1; --p) {
            cur.push_back(p);
            gen(rest - p);
            cur.pop_back();
        }
    };
    gen(n);
    if (n == 0) out = {{}};
    return out;
}

std::vector<IntComposition> rearrangements(const IntPartition& p) {
    IntComposition cur = p;  // descending = lex-greatest
    std::vector<IntComposition> out;
    do {
        out.push_back(cur);
    } while (std::prev_permutation(cur.begin(), cur.end()));
    return out;
}

SymFunc SymFunc::monomial(const IntPartition& p, long long coeff) {
    if (!is_partition(p)) throw consistency_error("monomial index is not a partition");
    SymFunc f;
    f.add_term(p, coeff);
    return f;
}

long long SymFunc::coeff(const IntPartition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? 0 : it->second;
}

void SymFunc::add_term(const IntPartition& p, long long coeff) {
    if (coeff == 0) return;
    auto [it, fresh] = terms_.emplace(p, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
    for (const auto& [p, c] : o.terms_) add_term(p, -c);
    return *this;
}

SymFunc SymFunc::scaled(long long c) const {
    SymFunc out;
    if (c == 0) return out;
    for (const auto& [p, v] : terms_) out.add_term(p, v * c);
    return out;
}

std::string SymFunc::str() const {
    if (terms_.empty()) return "0";
    std::vector<IntPartition> keys;
    for (const auto& [p, c] : terms_) keys.push_back(p);
    std::sort(keys.begin(), keys.end(), [](const IntPartition& a, const IntPartition& b) {
        int wa = weight(a), wb = weight(b);
        if (wa != wb) return wa < wb;
        return a > b;  // descending lex within a degree
    });
    std::ostringstream out;
    bool first = true;
    for (const auto& p : keys) {
        long long c = coeff(p);
        if (!first) out << (c < 0 ? " - " : " + ");
        else if (c < 0) out << "-";
        first = false;
        long long a = c < 0 ? -c : c;
        if (a != 1 || p.empty()) out << a;
        if (!p.empty()) {
            if (a != 1) out << "*";
            out << "m[";
            for (size_t i = 0; i < p.size(); ++i) {
                if (i) out << ",";
                out << p[i];
            }
            out << "]";
        }
    }
    return out.str();
}

SymFunc assemble_from_quasi(const std::map<IntComposition, long long>& coeff_by_composition) {
    SymFunc out;
    std::map<IntPartition, long long> seen;
    for (const auto& [comp, c] : coeff_by_composition) {
        IntPartition p = comp;
        std::sort(p.begin(), p.end(), std::greater<>());
        auto it = seen.find(p);
        if (it == seen.end()) seen.emplace(p, c);
    }
    auto lookup = [&](const IntComposition& comp) -> long long {
        auto it = coeff_by_composition.find(comp);
        return it == coeff_by_composition.end() ? 0 : it->second;
    };
    for (const auto& [p, c] : seen) {
        for (const auto& comp : rearrangements(p)) {
            long long v = lookup(comp);
            if (v != c)
                throw consistency_error(
                    "quasisymmetric coefficients are not constant on a rearrangement class "
                    "(the Psi image left Sym)");
        }
        out.add_term(p, c);
    }
    return out;
}

namespace {

// Distinct ways of placing the parts of p into `nvars` slots (zeros allowed),
// enumerated as exponent vectors.
std::vector<std::vector<int>> arrangements(const IntPartition& p, int nvars) {
    std::vector<int> v(nvars, 0);
    for (size_t i = 0; i < p.size(); ++i) v[i] = p[i];
    std::sort(v.begin(), v.end());
    std::vector<std::vector<int>> out;
    do {
        out.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace

SymFunc multiply(const SymFunc& a, const SymFunc& b, int degree_cap) {
    if (degree_cap <= 0) degree_cap = global_caps().symfunc_degree_cap;
    SymFunc out;
    for (const auto& [pa, ca] : a.terms()) {
        for (const auto& [pb, cb] : b.terms()) {
            if (weight(pa) + weight(pb) > degree_cap)
                throw resource_error("symmetric function product exceeds degree cap");
            int nvars = (int)(pa.size() + pb.size());
            if (nvars == 0) {
                out.add_term({}, ca * cb);
                continue;
            }
            // Coefficient of m_nu = #{(x, y) : x + y equals nu's leading
            // monomial}, with x, y running over the monomials of m_pa, m_pb.
            std::map<IntPartition, long long> counts;
            auto arrs_b = arrangements(pb, nvars);
            for (const auto& x : arrangements(pa, nvars)) {
                for (const auto& y : arrs_b) {
                    std::vector<int> s(nvars);
                    bool sorted_desc = true;
                    for (int i = 0; i < nvars; ++i) {
                        s[i] = x[i] + y[i];
                        if (i && s[i] > s[i - 1]) sorted_desc = false;
                    }
                    if (!sorted_desc) continue;
                    while (!s.empty() && s.back() == 0) s.pop_back();
                    ++counts[s];
                }
            }
            for (const auto& [nu, cnt] : counts) out.add_term(nu, ca * cb * cnt);
        }
    }
    return out;
}

SymFunc schur(const IntPartition& lambda, int degree_cap) {
    if (degree_cap <= 0) degree_cap = global_caps().symfunc_degree_cap;
    if (!is_partition(lambda)) throw consistency_error("schur: not a partition");
    int n = weight(lambda);
    if (n > degree_cap) throw resource_error("schur: weight exceeds degree cap");
    if (n == 0) return SymFunc::one();

    SymFunc out;
    for (const auto& mu : enumerate_partitions(n)) {
        // Kostka number: semistandard tableaux of shape lambda, content mu.
        std::vector<int> budget(mu.begin(), mu.end());
        std::vector<std::vector<int>> fill(lambda.size());
        for (size_t r = 0; r < lambda.size(); ++r) fill[r].assign(lambda[r], 0);
        long long count = 0;
        // Fill cells row by row; rows weakly increase, columns strictly.
        std::function<void(int, int)> rec = [&](int r, int c) {
            if (r == (int)lambda.size()) {
                ++count;
                return;
            }
            int nr = r, nc = c + 1;
            if (nc == lambda[r]) { nr = r + 1; nc = 0; }
            int lo = 1;
            if (c > 0) lo = std::max(lo, fill[r][c - 1]);
            if (r > 0) lo = std::max(lo, fill[r - 1][c] + 1);
            for (int v = lo; v <= (int)budget.size(); ++v) {
                if (budget[v - 1] == 0) continue;
                --budget[v - 1];
                fill[r][c] = v;
                rec(nr, nc);
                ++budget[v - 1];
            }
        };
        rec(0, 0);
        out.add_term(mu, count);
    }
    return out;
}

namespace {

// m_lambda(1^m) = m(m-1)...(m-len+1) / prod_j mult_j! .
Rational monomial_ones(const IntPartition& p, long long m) {
    long long len = (long long)p.size();
    Rational num(1);
    for (long long i = 0; i < len; ++i) num *= Rational(m - i);
    long long den = 1;
    long long run = 1;
    for (size_t i = 1; i <= p.size(); ++i) {
        if (i < p.size() && p[i] == p[i - 1]) {
            ++run;
        } else {
            for (long long j = 2; j <= run; ++j) den *= j;
            run = 1;
        }
    }
    return num / Rational(den);
}

}  // namespace

long long specialize_ones(const SymFunc& f, long long m) {
    Rational total(0);
    for (const auto& [p, c] : f.terms()) total += Rational(c) * monomial_ones(p, m);
    return total.as_integer();
}

IntPolynomial::IntPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational IntPolynomial::eval(long long m) const {
    Rational r(0);
    for (size_t i = coeffs_.size(); i-- > 0;) r = r * Rational(m) + coeffs_[i];
    return r;
}

long long IntPolynomial::eval_integer(long long m) const { return eval(m).as_integer(); }

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial IntPolynomial::scaled(const Rational& r) const {
    if (r.is_zero()) return IntPolynomial();
    IntPolynomial out = *this;
    for (auto& c : out.coeffs_) c *= r;
    return out;
}

std::string IntPolynomial::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i].is_zero()) continue;
        Rational c = coeffs_[i];
        if (!first) out << (c < Rational(0) ? " - " : " + ");
        else if (c < Rational(0)) out << "-";
        first = false;
        Rational a = c < Rational(0) ? -c : c;
        if (!(a == Rational(1)) || i == 0) out << a.str();
        if (i > 0) {
            if (!(a == Rational(1))) out << "*";
            out << "m";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

IntPolynomial specialize_polynomial(const SymFunc& f) {
    IntPolynomial out;
    for (const auto& [p, c] : f.terms()) {
        // Expand fallfact(m, len) = m(m-1)...(m-len+1) exactly.
        std::vector<Rational> ff{Rational(1)};
        for (long long i = 0; i < (long long)p.size(); ++i) {
            std::vector<Rational> next(ff.size() + 1, Rational(0));
            for (size_t j = 0; j < ff.size(); ++j) {
                next[j + 1] += ff[j];
                next[j] += ff[j] * Rational(-i);
            }
            ff = std::move(next);
        }
        long long den = 1, run = 1;
        for (size_t i = 1; i <= p.size(); ++i) {
            if (i < p.size() && p[i] == p[i - 1]) {
                ++run;
            } else {
                for (long long j = 2; j <= run; ++j) den *= j;
                run = 1;
            }
        }
        out += IntPolynomial(std::move(ff)).scaled(Rational(c, den));
    }
    return out;
}

}  // namespace hopfchrom
