// Direct sum decomposition into indecomposables with certificates.
//
// The endomorphism ring radical is the kernel of the trace bilinear form
// tr(f.g), valid over Q and over GF(p) with p > dim X + dim A (enforced).
// Splitting proceeds by primary decomposition along coprime factors of
// minimal polynomials of endomorphisms (Fitting); a module is certified
// indecomposable when End/rad is one-dimensional. Endomorphism rings whose
// semisimple quotient is a nontrivial division algebra are out of scope
// and reported as an error rather than guessed at.

#pragma once

#include "arthom/poly.hpp"
#include "arthom/repmod.hpp"

namespace arthom {

template <class F>
void check_decompose_precondition(const Rep<F>& x)
{
    long long p = x.alg->field().characteristic();
    if (p != 0 && p <= x.total_dim() + x.alg->dim())
        throw precondition_error("decompose requires characteristic 0 or p > dim X + dim A (p=" +
                                 std::to_string(p) + ", dim X=" + std::to_string(x.total_dim()) +
                                 ", dim A=" + std::to_string(x.alg->dim()) + ")");
}

/// Coordinates (w.r.t. the given End basis) spanning rad End(X).
template <class F>
Mat<F> trace_form_radical(const Rep<F>& x, const std::vector<RepMap<F>>& end_basis)
{
    check_decompose_precondition(x);
    const auto& f = x.alg->field();
    int m = static_cast<int>(end_basis.size());
    Mat<F> gram(f, m, m);
    for (int s = 0; s < m; ++s)
        for (int t = 0; t < m; ++t) {
            typename F::Elem tr = f.zero();
            for (size_t i = 0; i < x.dims.size(); ++i) {
                const Mat<F>& a = end_basis[s].comps[i];
                const Mat<F>& b = end_basis[t].comps[i];
                for (int r = 0; r < a.rows(); ++r)
                    for (int c = 0; c < a.cols(); ++c) tr = f.add(tr, f.mul(a.at(r, c), b.at(c, r)));
            }
            gram.at(s, t) = tr;
        }
    return gram.kernel_basis();
}

template <class F>
Poly<F> min_poly_of_map(const RepMap<F>& f)
{
    const auto& field = f.src.alg->field();
    Poly<F> acc = Poly<F>::constant(field, field.one());
    for (const auto& m : f.comps) acc = poly_lcm(acc, min_poly(m));
    return acc;
}

template <class F>
RepMap<F> eval_poly_on_map(const Poly<F>& p, const RepMap<F>& f)
{
    const auto& field = f.src.alg->field();
    std::vector<Mat<F>> comps;
    for (const auto& m : f.comps) {
        Mat<F> acc(field, m.rows(), m.cols());
        Mat<F> power = Mat<F>::identity(field, m.rows());
        for (int i = 0; i <= p.degree(); ++i) {
            if (!field.is_zero(p.coeff(i))) acc = acc + power.scaled(p.coeff(i));
            if (i < p.degree()) power = power * m;
        }
        comps.push_back(std::move(acc));
    }
    return RepMap<F>{f.src, f.src, std::move(comps)};
}

namespace detail {

inline std::vector<mpq_class> distinct_roots(const Poly<Rationals>& p) { return rational_roots(p); }
inline std::vector<long long> distinct_roots(const Poly<PrimeField>& p) { return field_roots(p); }

/// A factorization of mu into two coprime nonconstant monic factors, if one
/// is visible through roots or the Yun squarefree decomposition.
template <class F>
std::optional<std::pair<Poly<F>, Poly<F>>> coprime_split(const Poly<F>& mu_in)
{
    const F& f = mu_in.field();
    Poly<F> mu = mu_in.monic();
    if (mu.degree() < 2) return std::nullopt;
    for (const auto& root : distinct_roots(mu)) {
        Poly<F> lin(f, {f.neg(typename F::Elem(root)), f.one()});
        Poly<F> h1 = Poly<F>::constant(f, f.one());
        Poly<F> rest = mu;
        while (true) {
            auto [q, r] = rest.divmod(lin);
            if (!r.is_zero()) break;
            h1 = h1 * lin;
            rest = q;
        }
        if (rest.degree() >= 1) return std::make_pair(h1, rest);
    }
    auto parts = squarefree_parts(mu);
    std::vector<std::pair<Poly<F>, int>> nontrivial;
    for (size_t i = 0; i < parts.size(); ++i)
        if (parts[i].degree() >= 1) nontrivial.emplace_back(parts[i], static_cast<int>(i) + 1);
    if (nontrivial.size() >= 2) {
        Poly<F> h1 = Poly<F>::constant(f, f.one());
        for (int e = 0; e < nontrivial[0].second; ++e) h1 = h1 * nontrivial[0].first;
        return std::make_pair(h1, mu / h1);
    }
    return std::nullopt;
}

}  // namespace detail

/// Indecomposable pieces of X with their inclusions, by recursive splitting.
template <class F>
std::vector<std::pair<Rep<F>, RepMap<F>>> split_into_indecomposables(const Rep<F>& x)
{
    check_decompose_precondition(x);
    std::vector<std::pair<Rep<F>, RepMap<F>>> out;
    if (x.is_zero()) return out;
    std::vector<RepMap<F>> endos = hom_space(x, x);
    bool indecomposable = false;
    if (endos.size() == 1) {
        indecomposable = true;
    } else {
        Mat<F> rad = trace_form_radical(x, endos);
        if (static_cast<int>(endos.size()) - rad.cols() == 1) indecomposable = true;
    }
    if (indecomposable) {
        out.emplace_back(x, identity_map(x));
        return out;
    }
    // find an endomorphism whose minimal polynomial splits into coprime parts
    const auto& field = x.alg->field();
    std::optional<std::pair<RepMap<F>, std::pair<Poly<F>, Poly<F>>>> found;
    auto try_candidate = [&](const RepMap<F>& cand) {
        if (found) return;
        Poly<F> mu = min_poly_of_map(cand);
        if (auto split = detail::coprime_split(mu)) found = std::make_pair(cand, *split);
    };
    for (const auto& e : endos) try_candidate(e);
    if (!found)
        for (size_t i = 0; i < endos.size() && !found; ++i)
            for (size_t j = 0; j < endos.size() && !found; ++j) try_candidate(compose(endos[i], endos[j]));
    if (!found) {
        unsigned long long state = 0x2545f4914f6cdd1dULL;
        auto next = [&]() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            return state;
        };
        for (int round = 0; round < 256 && !found; ++round) {
            RepMap<F> cand = zero_map(x, x);
            for (const auto& e : endos) {
                long long c = static_cast<long long>(next() % 7) - 3;
                if (c != 0) cand = map_add(cand, map_scale(e, field.from_int(c)));
            }
            try_candidate(cand);
        }
    }
    if (!found)
        throw error("decomposition stuck: End(X)/rad appears to be a nontrivial division algebra, "
                    "which this toolkit does not split");
    const auto& [elem, parts] = *found;
    auto k1 = kernel(eval_poly_on_map(parts.first, elem));
    auto k2 = kernel(eval_poly_on_map(parts.second, elem));
    if (k1.first.total_dim() + k2.first.total_dim() != x.total_dim() || k1.first.is_zero() || k2.first.is_zero())
        throw defect_error("primary decomposition did not split the module");
    for (auto& [sub, incl] : split_into_indecomposables(k1.first))
        out.emplace_back(sub, compose(k1.second, incl));
    for (auto& [sub, incl] : split_into_indecomposables(k2.first))
        out.emplace_back(sub, compose(k2.second, incl));
    return out;
}

/// Canonical sort key for summand lists: dims lexicographically, then the
/// serialized action matrices.
template <class F>
std::string canonical_key(const Rep<F>& x)
{
    std::string s = std::to_string(x.total_dim()) + "|" + x.dims_string() + "|";
    for (const auto& m : x.action) s += m.to_string() + ";";
    return s;
}

/// Isomorphism test for modules already known to be indecomposable: U and V
/// are isomorphic iff some composite U -> V -> U avoids rad End(U).
template <class F>
std::optional<RepMap<F>> iso_witness_indec(const Rep<F>& u, const Rep<F>& v)
{
    if (u.alg != v.alg) throw error("iso test: modules over different algebras");
    if (u.dims != v.dims) return std::nullopt;
    if (u.is_zero()) return identity_map(u);
    auto to_v = hom_space(u, v);
    if (to_v.empty()) return std::nullopt;
    auto from_v = hom_space(v, u);
    if (from_v.empty()) return std::nullopt;
    auto endos = hom_space(u, u);
    Mat<F> rad_coords = trace_form_radical(u, endos);
    // flatten rad End(U) into ambient coordinates
    const auto& f = u.alg->field();
    auto off = detail::hom_offsets(u, u);
    Mat<F> radflat(f, off.back(), rad_coords.cols());
    for (int c = 0; c < rad_coords.cols(); ++c) {
        RepMap<F> g = zero_map(u, u);
        for (size_t s = 0; s < endos.size(); ++s)
            g = map_add(g, map_scale(endos[s], rad_coords.at(static_cast<int>(s), c)));
        Mat<F> v2 = detail::flatten_map(g);
        for (int r = 0; r < v2.rows(); ++r) radflat.at(r, c) = v2.at(r, 0);
    }
    int rad_rank = radflat.rank();
    for (const auto& fi : to_v)
        for (const auto& gj : from_v) {
            RepMap<F> comp = compose(gj, fi);
            Mat<F> cand = hstack(radflat, detail::flatten_map(comp));
            if (cand.rank() > rad_rank) {
                if (!map_invertible(fi)) throw defect_error("indecomposable iso witness not invertible");
                return fi;
            }
        }
    return std::nullopt;
}

template <class F>
struct DecompositionCert {
    std::vector<std::pair<Rep<F>, int>> summands;  // canonical order, multiplicities
    RepMap<F> witness;                             // direct sum of summands -> X, invertible
};

template <class F>
DecompositionCert<F> decompose(const Rep<F>& x)
{
    auto leaves = split_into_indecomposables(x);
    std::sort(leaves.begin(), leaves.end(), [](const auto& a, const auto& b) {
        return canonical_key(a.first) < canonical_key(b.first);
    });
    // group leaves into isomorphism classes, keeping per-leaf isos to the representative
    struct Class {
        Rep<F> rep;
        std::vector<RepMap<F>> inclusions;  // rep -> X, one per leaf
    };
    std::vector<Class> classes;
    for (auto& [leaf, incl] : leaves) {
        bool placed = false;
        for (auto& cls : classes) {
            if (auto w = iso_witness_indec(cls.rep, leaf)) {
                cls.inclusions.push_back(compose(incl, *w));
                placed = true;
                break;
            }
        }
        if (!placed) classes.push_back(Class{leaf, {incl}});
    }
    DecompositionCert<F> cert{{}, identity_map(x)};
    std::vector<Rep<F>> order;
    for (auto& cls : classes) {
        cert.summands.emplace_back(cls.rep, static_cast<int>(cls.inclusions.size()));
        for (size_t k = 0; k < cls.inclusions.size(); ++k) order.push_back(cls.rep);
    }
    auto ds = direct_sum(order, x.alg);
    std::vector<Mat<F>> comps;
    for (size_t i = 0; i < x.dims.size(); ++i)
        comps.emplace_back(x.alg->field(), x.dims[i], ds.sum.dims[i]);
    int part = 0;
    for (auto& cls : classes)
        for (auto& incl : cls.inclusions) {
            for (size_t i = 0; i < x.dims.size(); ++i) {
                int col0 = 0;
                for (int pp = 0; pp < part; ++pp) col0 += order[pp].dims[i];
                for (int r = 0; r < x.dims[i]; ++r)
                    for (int c = 0; c < cls.rep.dims[i]; ++c)
                        comps[i].at(r, col0 + c) = incl.comps[i].at(r, c);
            }
            ++part;
        }
    cert.witness = RepMap<F>{ds.sum, x, std::move(comps)};
    validate_map(cert.witness);
    if (!map_invertible(cert.witness)) throw defect_error("decomposition witness is not invertible");
    return cert;
}

/// All indecomposable summands with multiplicity, canonical order.
template <class F>
std::vector<Rep<F>> summand_list(const Rep<F>& x)
{
    std::vector<Rep<F>> out;
    for (const auto& [rep, mult] : decompose(x).summands)
        for (int k = 0; k < mult; ++k) out.push_back(rep);
    return out;
}

template <class F>
std::optional<RepMap<F>> iso_witness(const Rep<F>& x, const Rep<F>& y)
{
    if (x.alg != y.alg) throw error("iso test: modules over different algebras");
    if (x.dims != y.dims) return std::nullopt;
    if (x.is_zero()) return identity_map(x);
    auto dx = decompose(x);
    auto dy = decompose(y);
    if (dx.summands.size() != dy.summands.size()) return std::nullopt;
    // witness: x -> y as W_y o P o W_x^{-1} where P maps summand blocks of
    // the one decomposition isomorphically onto blocks of the other
    auto rebuild_order = [&](const DecompositionCert<F>& d) {
        std::vector<Rep<F>> o;
        for (auto& [r, m] : d.summands)
            for (int k = 0; k < m; ++k) o.push_back(r);
        return o;
    };
    auto ox = rebuild_order(dx);
    auto oy = rebuild_order(dy);
    auto sx = direct_sum(ox, x.alg);
    auto sy = direct_sum(oy, x.alg);
    RepMap<F> perm = zero_map(sx.sum, sy.sum);
    std::vector<int> taken(oy.size(), 0);
    for (size_t bi = 0; bi < ox.size(); ++bi) {
        bool ok = false;
        for (size_t bj = 0; bj < oy.size(); ++bj) {
            if (taken[bj]) continue;
            if (auto w = iso_witness_indec(ox[bi], oy[bj])) {
                taken[bj] = 1;
                perm = map_add(perm, compose(sy.injections[bj], compose(*w, sx.projections[bi])));
                ok = true;
                break;
            }
        }
        if (!ok) return std::optional<RepMap<F>>{};
    }
    RepMap<F> wx_inv = map_inverse(dx.witness);
    RepMap<F> result = compose(dy.witness, compose(perm, wx_inv));
    if (!map_invertible(result)) throw defect_error("assembled iso witness not invertible");
    return result;
}

template <class F>
bool is_isomorphic(const Rep<F>& x, const Rep<F>& y)
{
    if (x.dims != y.dims) return false;
    return iso_witness(x, y).has_value();
}

}  // namespace arthom
