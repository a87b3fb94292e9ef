#include "hopfchrom/cyclotomic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>

namespace hopfchrom {

long long euler_phi(long long n) {
    long long result = n;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// Exact division of integer polynomials (divisor monic up to sign is not
// assumed; cyclotomic factors always divide exactly over Z).
std::vector<std::int64_t> poly_divide_exact(std::vector<std::int64_t> num,
                                            const std::vector<std::int64_t>& den) {
    std::vector<std::int64_t> quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, 0);
    for (int i = (int)quot.size() - 1; i >= 0; --i) {
        std::int64_t lead = num[i + den.size() - 1];
        if (lead % den.back() != 0) throw consistency_error("cyclotomic polynomial division failed");
        std::int64_t q = lead / den.back();
        quot[i] = q;
        for (size_t j = 0; j < den.size(); ++j)
            num[i + j] = detail::narrow128((__int128)num[i + j] - (__int128)q * den[j],
                                           "cyclotomic polynomial division");
    }
    for (auto c : num)
        if (c != 0) throw consistency_error("cyclotomic polynomial division remainder");
    return quot;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(int n) {
    static std::map<int, std::vector<std::int64_t>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, built bottom-up.
    std::function<const std::vector<std::int64_t>&(int)> get = [&](int m) -> const std::vector<std::int64_t>& {
        auto jt = cache.find(m);
        if (jt != cache.end()) return jt->second;
        std::vector<std::int64_t> num(m + 1, 0);
        num[0] = -1;
        num[m] = 1;
        for (int d = 1; d < m; ++d)
            if (m % d == 0) num = poly_divide_exact(std::move(num), get(d));
        return cache.emplace(m, std::move(num)).first->second;
    };
    return get(n);
}

namespace {

// Reduce a coefficient vector (ascending powers of zeta_n, any length <= n+something)
// modulo Phi_n, returning exactly phi(n) coefficients.
std::vector<Rational> reduce_mod_phi(int n, std::vector<Rational> c) {
    const auto& phi_poly = cyclotomic_polynomial(n);
    size_t deg = phi_poly.size() - 1;  // = phi(n)
    while (c.size() > deg) {
        Rational lead = c.back();
        size_t top = c.size() - 1;
        c.pop_back();
        if (lead.is_zero()) continue;
        // zeta^top = -lead-free tail: subtract lead * x^(top-deg) * Phi_n
        for (size_t j = 0; j < deg; ++j)
            c[top - deg + j] -= lead * Rational(phi_poly[j]);
    }
    c.resize(deg, Rational(0));
    return c;
}

}  // namespace

Cyclotomic Cyclotomic::from_coeffs(int n, std::vector<Rational> coeffs) {
    if (n < 1) throw consistency_error("cyclotomic conductor must be positive");
    Cyclotomic x(n, reduce_mod_phi(n, std::move(coeffs)));
    x.canonicalize();
    return x;
}

Cyclotomic Cyclotomic::root_of_unity(int n, long long k) {
    k %= n;
    if (k < 0) k += n;
    std::vector<Rational> c(k + 1, Rational(0));
    c[k] = Rational(1);
    return from_coeffs(n, std::move(c));
}

Rational Cyclotomic::as_rational() const {
    if (conductor_ != 1) throw consistency_error("cyclotomic value " + str() + " is not rational");
    return coeffs_[0];
}

Cyclotomic Cyclotomic::galois(long long a) const {
    if (conductor_ == 1) return *this;
    long long n = conductor_;
    a %= n;
    if (a < 0) a += n;
    if (std::gcd(a, n) != 1) throw consistency_error("galois exponent not coprime to conductor");
    std::vector<Rational> out(n, Rational(0));
    for (size_t j = 0; j < coeffs_.size(); ++j)
        out[(a * j) % n] += coeffs_[j];
    return from_coeffs(conductor_, std::move(out));
}

Cyclotomic Cyclotomic::conj() const { return galois(conductor_ - 1); }

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic x = *this;
    for (auto& c : x.coeffs_) c = -c;
    return x;
}

namespace {

std::vector<Rational> lift_coeffs(const Cyclotomic& x, int n) {
    // Embed Q(zeta_m) into Q(zeta_n) via zeta_m = zeta_n^(n/m); caller reduces.
    int m = x.conductor();
    int step = n / m;
    std::vector<Rational> out((size_t)(x.coeffs().size() - 1) * step + 1, Rational(0));
    for (size_t j = 0; j < x.coeffs().size(); ++j) out[j * step] = x.coeffs()[j];
    return out;
}

}  // namespace

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    int n = (int)std::lcm((long long)a.conductor_, (long long)b.conductor_);
    auto ca = lift_coeffs(a, n);
    auto cb = lift_coeffs(b, n);
    if (cb.size() > ca.size()) ca.resize(cb.size(), Rational(0));
    for (size_t i = 0; i < cb.size(); ++i) ca[i] += cb[i];
    return Cyclotomic::from_coeffs(n, std::move(ca));
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.is_rational()) {
        Cyclotomic x = b;
        for (auto& c : x.coeffs_) c *= a.coeffs_[0];
        if (a.coeffs_[0].is_zero()) return Cyclotomic();
        return x;
    }
    if (b.is_rational()) return b * a;
    int n = (int)std::lcm((long long)a.conductor_, (long long)b.conductor_);
    auto ca = lift_coeffs(a, n);
    auto cb = lift_coeffs(b, n);
    std::vector<Rational> prod(ca.size() + cb.size() - 1, Rational(0));
    for (size_t i = 0; i < ca.size(); ++i) {
        if (ca[i].is_zero()) continue;
        for (size_t j = 0; j < cb.size(); ++j)
            if (!cb[j].is_zero()) prod[i + j] += ca[i] * cb[j];
    }
    return Cyclotomic::from_coeffs(n, std::move(prod));
}

Cyclotomic Cyclotomic::operator/(const Rational& r) const {
    if (r.is_zero()) throw consistency_error("cyclotomic division by zero");
    Cyclotomic x = *this;
    for (auto& c : x.coeffs_) c /= r;
    return x;
}

bool operator<(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.conductor_ != b.conductor_) return a.conductor_ < b.conductor_;
    return std::lexicographical_compare(a.coeffs_.begin(), a.coeffs_.end(),
                                        b.coeffs_.begin(), b.coeffs_.end());
}

void Cyclotomic::canonicalize() {
    // Quick path: rational values.
    bool higher_zero = true;
    for (size_t j = 1; j < coeffs_.size(); ++j)
        if (!coeffs_[j].is_zero()) { higher_zero = false; break; }
    if (higher_zero) {
        Rational c0 = coeffs_[0];
        conductor_ = 1;
        coeffs_ = {c0};
        return;
    }

    // Smallest divisor d of n with x in Q(zeta_d). Divisors d == 2 (mod 4)
    // give the same field as d/2 and are skipped.
    int n = conductor_;
    for (int d = 2; d < n; ++d) {
        if (n % d != 0) continue;
        if (d % 4 == 2) continue;
        size_t phid = (size_t)euler_phi(d);
        // Solve sum_j c_j * zeta_n^((n/d) j) = x over the power basis of Q(zeta_n).
        size_t phin = coeffs_.size();
        std::vector<std::vector<Rational>> cols(phid);
        for (size_t j = 0; j < phid; ++j) {
            std::vector<Rational> v((size_t)(n / d) * j + 1, Rational(0));
            v.back() = Rational(1);
            cols[j] = reduce_mod_phi(n, std::move(v));
        }
        // Gaussian elimination on the phin x (phid + 1) system.
        std::vector<std::vector<Rational>> m(phin, std::vector<Rational>(phid + 1, Rational(0)));
        for (size_t r = 0; r < phin; ++r) {
            for (size_t j = 0; j < phid; ++j) m[r][j] = cols[j][r];
            m[r][phid] = coeffs_[r];
        }
        size_t rank = 0;
        std::vector<int> pivot_col(phin, -1);
        for (size_t col = 0; col < phid && rank < phin; ++col) {
            size_t sel = rank;
            while (sel < phin && m[sel][col].is_zero()) ++sel;
            if (sel == phin) continue;
            std::swap(m[sel], m[rank]);
            Rational inv = Rational(1) / m[rank][col];
            for (auto& v : m[rank]) v *= inv;
            for (size_t r = 0; r < phin; ++r) {
                if (r == rank || m[r][col].is_zero()) continue;
                Rational f = m[r][col];
                for (size_t j = col; j <= phid; ++j) m[r][j] -= f * m[rank][j];
            }
            pivot_col[rank] = (int)col;
            ++rank;
        }
        bool solvable = true;
        for (size_t r = rank; r < phin; ++r)
            if (!m[r][phid].is_zero()) { solvable = false; break; }
        if (!solvable) continue;
        std::vector<Rational> sol(phid, Rational(0));
        for (size_t r = 0; r < rank; ++r) sol[pivot_col[r]] = m[r][phid];
        conductor_ = d;
        coeffs_ = std::move(sol);
        return;
    }
}

std::string Cyclotomic::str() const {
    if (conductor_ == 1) return coeffs_[0].str();
    std::string out;
    bool first = true;
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j].is_zero()) continue;
        if (!first) out += " + ";
        first = false;
        if (j == 0) {
            out += coeffs_[j].str();
        } else {
            if (!(coeffs_[j] == Rational(1))) out += coeffs_[j].str() + "*";
            out += "z" + std::to_string(conductor_);
            if (j > 1) out += "^" + std::to_string(j);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace hopfchrom
