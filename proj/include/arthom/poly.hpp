// Univariate polynomials over a coefficient field. Used for minimal
// polynomials of module endomorphisms and the coprime splittings that
// drive direct sum decomposition (Fitting / primary decomposition).

#pragma once

#include <algorithm>
#include <vector>

#include "arthom/matrix.hpp"

namespace arthom {

template <class F>
class Poly {
public:
    using Elem = typename F::Elem;

    explicit Poly(F f) : f_(f) {}
    Poly(F f, std::vector<Elem> coeffs) : f_(f), c_(std::move(coeffs)) { trim(); }

    static Poly zero(F f) { return Poly(f); }
    static Poly constant(F f, const Elem& e) { return Poly(f, {e}); }
    static Poly x(F f) { return Poly(f, {f.zero(), f.one()}); }
    // x - a
    static Poly linear_root(F f, const Elem& a) { return Poly(f, {f.neg(a), f.one()}); }

    const F& field() const { return f_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Elem& coeff(int i) const { return c_[i]; }
    const std::vector<Elem>& coeffs() const { return c_; }
    const Elem& lead() const { return c_.back(); }

    Elem eval(const Elem& v) const
    {
        Elem acc = f_.zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = f_.add(f_.mul(acc, v), *it);
        return acc;
    }

    Poly operator+(const Poly& o) const
    {
        std::vector<Elem> r(std::max(c_.size(), o.c_.size()), f_.zero());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] = f_.add(r[i], o.c_[i]);
        return Poly(f_, std::move(r));
    }
    Poly operator-(const Poly& o) const
    {
        std::vector<Elem> r(std::max(c_.size(), o.c_.size()), f_.zero());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] = f_.sub(r[i], o.c_[i]);
        return Poly(f_, std::move(r));
    }
    Poly operator*(const Poly& o) const
    {
        if (is_zero() || o.is_zero()) return Poly(f_);
        std::vector<Elem> r(c_.size() + o.c_.size() - 1, f_.zero());
        for (size_t i = 0; i < c_.size(); ++i) {
            if (f_.is_zero(c_[i])) continue;
            for (size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] = f_.add(r[i + j], f_.mul(c_[i], o.c_[j]));
        }
        return Poly(f_, std::move(r));
    }
    Poly scaled(const Elem& s) const
    {
        std::vector<Elem> r = c_;
        for (auto& e : r) e = f_.mul(e, s);
        return Poly(f_, std::move(r));
    }
    Poly monic() const
    {
        if (is_zero()) return *this;
        return scaled(f_.inv(lead()));
    }

    // quotient and remainder
    std::pair<Poly, Poly> divmod(const Poly& d) const
    {
        if (d.is_zero()) throw error("polynomial division by zero");
        Poly rem = *this;
        std::vector<Elem> q(std::max<int>(degree() - d.degree() + 1, 0), f_.zero());
        Elem dlead_inv = f_.inv(d.lead());
        while (!rem.is_zero() && rem.degree() >= d.degree()) {
            int shift = rem.degree() - d.degree();
            Elem factor = f_.mul(rem.lead(), dlead_inv);
            q[shift] = factor;
            for (int i = 0; i <= d.degree(); ++i)
                rem.c_[i + shift] = f_.sub(rem.c_[i + shift], f_.mul(factor, d.c_[i]));
            rem.trim();
        }
        return {Poly(f_, std::move(q)), rem};
    }
    Poly operator/(const Poly& d) const { return divmod(d).first; }
    Poly operator%(const Poly& d) const { return divmod(d).second; }

    Poly derivative() const
    {
        if (c_.size() <= 1) return Poly(f_);
        std::vector<Elem> r(c_.size() - 1, f_.zero());
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = f_.mul(c_[i], f_.from_int(static_cast<long long>(i)));
        return Poly(f_, std::move(r));
    }

    std::string to_string() const
    {
        if (is_zero()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            if (f_.is_zero(c_[i])) continue;
            if (!s.empty()) s += " + ";
            s += f_.to_string(c_[i]);
            if (i > 0) s += "*x^" + std::to_string(i);
        }
        return s;
    }

private:
    void trim()
    {
        while (!c_.empty() && f_.is_zero(c_.back())) c_.pop_back();
    }

    F f_;
    std::vector<Elem> c_;
};

template <class F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b)
{
    while (!b.is_zero()) {
        Poly<F> r = a % b;
        a = b;
        b = r;
    }
    return a.is_zero() ? a : a.monic();
}

/// Yun squarefree decomposition: monic input = prod parts[i]^(i+1) with
/// the parts squarefree and pairwise coprime. Valid in characteristic 0
/// or characteristic exceeding the degree.
template <class F>
std::vector<Poly<F>> squarefree_parts(const Poly<F>& input)
{
    const F& f = input.field();
    Poly<F> p = input.monic();
    std::vector<Poly<F>> parts;
    if (p.degree() <= 0) return parts;
    Poly<F> g = poly_gcd(p, p.derivative());
    Poly<F> w = p / g;
    while (w.degree() > 0) {
        Poly<F> y = poly_gcd(w, g);
        parts.push_back(w / y);
        w = y;
        g = g / y;
    }
    (void)f;
    return parts;
}

/// Minimal polynomial of a square matrix: the first linear dependency among
/// I, A, A^2, ... found by incremental elimination on flattened powers.
template <class F>
Poly<F> min_poly(const Mat<F>& a)
{
    const F& f = a.field();
    int n = a.rows();
    if (n == 0) return Poly<F>::constant(f, f.one());  // every poly annihilates the empty space
    int dim = n * n;
    // rows of `ech`: echelonized flattened powers; `coords` tracks the
    // expression of each echelon row in terms of the original powers.
    std::vector<std::vector<typename F::Elem>> ech, coords;
    std::vector<int> lead_col;
    Mat<F> power = Mat<F>::identity(f, n);
    for (int k = 0;; ++k) {
        std::vector<typename F::Elem> v(dim, f.zero());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) v[i * n + j] = power.at(i, j);
        std::vector<typename F::Elem> expr(k + 1, f.zero());
        expr[k] = f.one();
        // reduce v against current echelon
        for (size_t r = 0; r < ech.size(); ++r) {
            const auto& pivot_val = v[lead_col[r]];
            if (f.is_zero(pivot_val)) continue;
            typename F::Elem factor = pivot_val;
            for (int j = 0; j < dim; ++j) v[j] = f.sub(v[j], f.mul(factor, ech[r][j]));
            for (size_t j = 0; j < coords[r].size() && j < expr.size(); ++j)
                expr[j] = f.sub(expr[j], f.mul(factor, coords[r][j]));
        }
        int lc = -1;
        for (int j = 0; j < dim; ++j)
            if (!f.is_zero(v[j])) {
                lc = j;
                break;
            }
        if (lc < 0) {
            // dependency found: expr gives the minimal polynomial coefficients
            return Poly<F>(f, std::move(expr)).monic();
        }
        typename F::Elem s = f.inv(v[lc]);
        for (int j = 0; j < dim; ++j) v[j] = f.mul(v[j], s);
        for (auto& e : expr) e = f.mul(e, s);
        ech.push_back(std::move(v));
        expr.resize(dim + 2, f.zero());
        coords.push_back(std::move(expr));
        lead_col.push_back(lc);
        power = power * a;
        if (k > dim) throw defect_error("min_poly: no dependency found");
    }
}

template <class F>
Poly<F> poly_lcm(const Poly<F>& a, const Poly<F>& b)
{
    if (a.is_zero() || b.is_zero()) return Poly<F>(a.field());
    return ((a * b) / poly_gcd(a, b)).monic();
}

namespace detail {

inline std::vector<mpz_class> bounded_divisors(const mpz_class& n_in, size_t budget = 200000)
{
    // All positive divisors when n factors within budget trial divisions;
    // otherwise the divisors assembled from the factors found so far.
    mpz_class n = abs(n_in);
    std::vector<std::pair<mpz_class, int>> factors;
    if (n == 0) return {};
    mpz_class d = 2;
    size_t steps = 0;
    while (d * d <= n && steps < budget) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            factors.emplace_back(d, e);
        }
        ++d;
        ++steps;
    }
    if (n > 1 && steps < budget) factors.emplace_back(n, 1);
    std::vector<mpz_class> divisors{1};
    for (auto& [p, e] : factors) {
        size_t base = divisors.size();
        mpz_class pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) divisors.push_back(divisors[i] * pk);
        }
    }
    std::sort(divisors.begin(), divisors.end());
    return divisors;
}

}  // namespace detail

/// Distinct rational roots of a polynomial over Q (rational root theorem).
inline std::vector<mpq_class> rational_roots(const Poly<Rationals>& p_in)
{
    std::vector<mpq_class> roots;
    if (p_in.degree() <= 0) return roots;
    Poly<Rationals> p = p_in;
    // strip powers of x
    Rationals f;
    while (p.degree() > 0 && f.is_zero(p.coeff(0))) {
        std::vector<mpq_class> shifted(p.coeffs().begin() + 1, p.coeffs().end());
        p = Poly<Rationals>(f, shifted);
        if (roots.empty()) roots.push_back(mpq_class(0));
    }
    if (p.degree() <= 0) return roots;
    // clear denominators to a primitive integer polynomial
    mpz_class den_lcm = 1;
    for (const auto& c : p.coeffs()) den_lcm = lcm(den_lcm, c.get_den());
    std::vector<mpz_class> ic;
    for (const auto& c : p.coeffs()) ic.push_back(mpz_class(c.get_num() * (den_lcm / c.get_den())));
    mpz_class g = 0;
    for (const auto& c : ic) g = gcd(g, c);
    if (g > 1)
        for (auto& c : ic) c /= g;
    auto nums = detail::bounded_divisors(ic.front());
    auto dens = detail::bounded_divisors(ic.back());
    for (const auto& num : nums)
        for (const auto& den : dens) {
            for (int sign = 0; sign < 2; ++sign) {
                mpq_class cand(sign ? -num : num, den);
                cand.canonicalize();
                if (f.is_zero(p.eval(cand))) {
                    if (std::find(roots.begin(), roots.end(), cand) == roots.end()) roots.push_back(cand);
                }
            }
        }
    std::sort(roots.begin(), roots.end());
    return roots;
}

/// Distinct roots in GF(p). Brute force scan for small p, otherwise the
/// gcd with x^p - x followed by Cantor-Zassenhaus style splitting with a
/// fixed seed (deterministic).
inline std::vector<long long> field_roots(const Poly<PrimeField>& p_in)
{
    const PrimeField f = p_in.field();
    long long p = f.modulus();
    std::vector<long long> roots;
    if (p_in.degree() <= 0) return roots;
    if (p <= (1 << 20)) {
        for (long long v = 0; v < p; ++v)
            if (f.is_zero(p_in.eval(v))) roots.push_back(v);
        return roots;
    }
    // x^p mod p_in via square-and-multiply on polynomials
    auto mulmod = [&](const Poly<PrimeField>& a, const Poly<PrimeField>& b) { return (a * b) % p_in; };
    Poly<PrimeField> xp = Poly<PrimeField>::constant(f, f.one());
    Poly<PrimeField> base = Poly<PrimeField>::x(f) % p_in;
    long long e = p;
    while (e > 0) {
        if (e & 1) xp = mulmod(xp, base);
        base = mulmod(base, base);
        e >>= 1;
    }
    Poly<PrimeField> lin = poly_gcd(xp - Poly<PrimeField>::x(f), p_in);
    // split the product of distinct linear factors
    std::vector<Poly<PrimeField>> work;
    if (lin.degree() >= 1) work.push_back(lin.monic());
    unsigned long long state = 0x9e3779b97f4a7c15ULL;
    auto next_rand = [&]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    while (!work.empty()) {
        Poly<PrimeField> g = work.back();
        work.pop_back();
        if (g.degree() == 1) {
            roots.push_back(f.neg(g.monic().coeff(0)));
            continue;
        }
        if (g.degree() == 0) continue;
        // (x + delta)^((p-1)/2) - 1 splits g with probability about 1/2
        long long delta = static_cast<long long>(next_rand() % static_cast<unsigned long long>(p));
        Poly<PrimeField> shift(f, {f.from_int(delta), f.one()});
        Poly<PrimeField> acc = Poly<PrimeField>::constant(f, f.one());
        Poly<PrimeField> b2 = shift % g;
        long long ee = (p - 1) / 2;
        auto mm = [&](const Poly<PrimeField>& a, const Poly<PrimeField>& b) { return (a * b) % g; };
        while (ee > 0) {
            if (ee & 1) acc = mm(acc, b2);
            b2 = mm(b2, b2);
            ee >>= 1;
        }
        Poly<PrimeField> h = poly_gcd(acc - Poly<PrimeField>::constant(f, f.one()), g);
        if (h.degree() <= 0 || h.degree() >= g.degree()) {
            work.push_back(g);  // retry with another delta
            continue;
        }
        work.push_back(h);
        work.push_back(g / h);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace arthom
