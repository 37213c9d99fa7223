// Finite-dimensional left modules as quiver representations: one vector
// space per vertex, one matrix per arrow (source space -> target space).
// Every constructed Rep is checked against the algebra's relations.

#pragma once

#include <functional>

#include "arthom/pathalg.hpp"

namespace arthom {

template <class F>
struct Rep {
    AlgebraPtr<F> alg;
    std::vector<int> dims;          // per vertex
    std::vector<Mat<F>> action;     // per arrow, dims[tgt] x dims[src]

    int total_dim() const
    {
        int t = 0;
        for (int d : dims) t += d;
        return t;
    }
    bool is_zero() const { return total_dim() == 0; }

    std::string dims_string() const
    {
        std::string s = "(";
        for (size_t i = 0; i < dims.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(dims[i]);
        }
        return s + ")";
    }
};

template <class F>
Mat<F> eval_word(const Rep<F>& x, const Word& w)
{
    const auto& f = x.alg->field();
    Mat<F> m = Mat<F>::identity(f, x.dims[w.source]);
    for (int a : w.arrows) m = x.action[a] * m;
    return m;
}

template <class F>
void validate_rep(const Rep<F>& x, bool check_relations = true)
{
    const auto& q = x.alg->quiver();
    if (static_cast<int>(x.dims.size()) != q.n_vertices()) throw error("Rep: wrong dims length");
    if (static_cast<int>(x.action.size()) != q.n_arrows()) throw error("Rep: wrong action length");
    for (int a = 0; a < q.n_arrows(); ++a) {
        if (x.action[a].rows() != x.dims[q.arrows[a].tgt] || x.action[a].cols() != x.dims[q.arrows[a].src])
            throw error("Rep: action matrix for arrow '" + q.arrows[a].name + "' has wrong shape");
    }
    if (!check_relations) return;
    for (const auto& rel : x.alg->relations()) {
        const Word& w0 = rel.terms.front().second;
        Mat<F> acc(x.alg->field(), x.dims[x.alg->word_target(w0)], x.dims[w0.source]);
        for (const auto& [c, w] : rel.terms) acc = acc + eval_word(x, w).scaled(c);
        if (!acc.is_zero()) {
            std::string txt;
            for (const auto& [c, w] : rel.terms)
                txt += (txt.empty() ? "" : " + ") + x.alg->field().to_string(c) + "*" + x.alg->word_to_string(w);
            throw error("module violates relation " + txt);
        }
    }
}

template <class F>
Rep<F> make_rep(AlgebraPtr<F> alg, std::vector<int> dims, std::vector<Mat<F>> action)
{
    Rep<F> x{std::move(alg), std::move(dims), std::move(action)};
    validate_rep(x);
    return x;
}

template <class F>
Rep<F> zero_rep(const AlgebraPtr<F>& alg)
{
    std::vector<int> dims(alg->n_vertices(), 0);
    std::vector<Mat<F>> action;
    for (int a = 0; a < alg->n_arrows(); ++a) {
        const auto& ar = alg->quiver().arrows[a];
        action.emplace_back(alg->field(), dims[ar.tgt], dims[ar.src]);
    }
    return Rep<F>{alg, std::move(dims), std::move(action)};
}

template <class F>
struct RepMap {
    Rep<F> src, dst;
    std::vector<Mat<F>> comps;  // per vertex

    bool is_zero() const
    {
        for (const auto& m : comps)
            if (!m.is_zero()) return false;
        return true;
    }
};

template <class F>
void validate_map(const RepMap<F>& f)
{
    if (f.src.alg != f.dst.alg) throw error("RepMap: modules over different algebras");
    const auto& q = f.src.alg->quiver();
    for (int i = 0; i < q.n_vertices(); ++i)
        if (f.comps[i].rows() != f.dst.dims[i] || f.comps[i].cols() != f.src.dims[i])
            throw error("RepMap: component shape mismatch at vertex " + q.vertices[i]);
    for (int a = 0; a < q.n_arrows(); ++a) {
        const auto& ar = q.arrows[a];
        if (!(f.comps[ar.tgt] * f.src.action[a] == f.dst.action[a] * f.comps[ar.src]))
            throw error("RepMap: does not commute with arrow '" + ar.name + "'");
    }
}

template <class F>
RepMap<F> make_map(Rep<F> src, Rep<F> dst, std::vector<Mat<F>> comps)
{
    RepMap<F> f{std::move(src), std::move(dst), std::move(comps)};
    validate_map(f);
    return f;
}

template <class F>
RepMap<F> identity_map(const Rep<F>& x)
{
    std::vector<Mat<F>> comps;
    for (int d : x.dims) comps.push_back(Mat<F>::identity(x.alg->field(), d));
    return RepMap<F>{x, x, std::move(comps)};
}

template <class F>
RepMap<F> zero_map(const Rep<F>& src, const Rep<F>& dst)
{
    std::vector<Mat<F>> comps;
    for (size_t i = 0; i < src.dims.size(); ++i)
        comps.emplace_back(src.alg->field(), dst.dims[i], src.dims[i]);
    return RepMap<F>{src, dst, std::move(comps)};
}

template <class F>
RepMap<F> compose(const RepMap<F>& g, const RepMap<F>& f)  // g after f
{
    std::vector<Mat<F>> comps;
    for (size_t i = 0; i < f.comps.size(); ++i) comps.push_back(g.comps[i] * f.comps[i]);
    return RepMap<F>{f.src, g.dst, std::move(comps)};
}

template <class F>
RepMap<F> map_add(const RepMap<F>& f, const RepMap<F>& g)
{
    std::vector<Mat<F>> comps;
    for (size_t i = 0; i < f.comps.size(); ++i) comps.push_back(f.comps[i] + g.comps[i]);
    return RepMap<F>{f.src, f.dst, std::move(comps)};
}

template <class F>
RepMap<F> map_scale(const RepMap<F>& f, const typename F::Elem& s)
{
    std::vector<Mat<F>> comps;
    for (const auto& m : f.comps) comps.push_back(m.scaled(s));
    return RepMap<F>{f.src, f.dst, std::move(comps)};
}

template <class F>
bool map_invertible(const RepMap<F>& f)
{
    for (const auto& m : f.comps)
        if (!m.is_invertible()) return false;
    return true;
}

template <class F>
RepMap<F> map_inverse(const RepMap<F>& f)
{
    std::vector<Mat<F>> comps;
    for (const auto& m : f.comps) {
        auto inv = m.inverse();
        if (!inv) throw error("RepMap is not invertible");
        comps.push_back(*inv);
    }
    return RepMap<F>{f.dst, f.src, std::move(comps)};
}

// ---------------------------------------------------------------------------
// Hom spaces

namespace detail {

template <class F>
std::vector<int> hom_offsets(const Rep<F>& x, const Rep<F>& y)
{
    std::vector<int> off(x.dims.size() + 1, 0);
    for (size_t i = 0; i < x.dims.size(); ++i) off[i + 1] = off[i] + y.dims[i] * x.dims[i];
    return off;
}

template <class F>
Mat<F> flatten_map(const RepMap<F>& f)
{
    auto off = hom_offsets(f.src, f.dst);
    Mat<F> v(f.src.alg->field(), off.back(), 1);
    for (size_t i = 0; i < f.comps.size(); ++i)
        for (int r = 0; r < f.comps[i].rows(); ++r)
            for (int c = 0; c < f.comps[i].cols(); ++c)
                v.at(off[i] + r * f.src.dims[i] + c, 0) = f.comps[i].at(r, c);
    return v;
}

template <class F>
RepMap<F> unflatten_map(const Rep<F>& x, const Rep<F>& y, const Mat<F>& v, int col)
{
    auto off = hom_offsets(x, y);
    std::vector<Mat<F>> comps;
    for (size_t i = 0; i < x.dims.size(); ++i) {
        Mat<F> m(x.alg->field(), y.dims[i], x.dims[i]);
        for (int r = 0; r < y.dims[i]; ++r)
            for (int c = 0; c < x.dims[i]; ++c) m.at(r, c) = v.at(off[i] + r * x.dims[i] + c, col);
        comps.push_back(std::move(m));
    }
    return RepMap<F>{x, y, std::move(comps)};
}

}  // namespace detail

/// Canonical basis of Hom(X, Y): the solution space of all commuting-square
/// constraints, in the deterministic form produced by kernel_basis.
template <class F>
std::vector<RepMap<F>> hom_space(const Rep<F>& x, const Rep<F>& y)
{
    if (x.alg != y.alg) throw error("hom_space: modules over different algebras");
    const auto& f = x.alg->field();
    const auto& q = x.alg->quiver();
    auto off = detail::hom_offsets(x, y);
    int unknowns = off.back();
    int rows = 0;
    for (int a = 0; a < q.n_arrows(); ++a) rows += y.dims[q.arrows[a].tgt] * x.dims[q.arrows[a].src];
    Mat<F> constraints(f, rows, unknowns);
    int row = 0;
    for (int a = 0; a < q.n_arrows(); ++a) {
        int i = q.arrows[a].src, j = q.arrows[a].tgt;
        // (phi_j * X_a - Y_a * phi_i)[r][c] = 0
        for (int r = 0; r < y.dims[j]; ++r)
            for (int c = 0; c < x.dims[i]; ++c) {
                for (int k = 0; k < x.dims[j]; ++k) {
                    const auto& xa = x.action[a].at(k, c);
                    if (!f.is_zero(xa))
                        constraints.at(row, off[j] + r * x.dims[j] + k) =
                            f.add(constraints.at(row, off[j] + r * x.dims[j] + k), xa);
                }
                for (int k = 0; k < y.dims[i]; ++k) {
                    const auto& ya = y.action[a].at(r, k);
                    if (!f.is_zero(ya))
                        constraints.at(row, off[i] + k * x.dims[i] + c) =
                            f.sub(constraints.at(row, off[i] + k * x.dims[i] + c), ya);
                }
                ++row;
            }
    }
    Mat<F> kernel = constraints.kernel_basis();
    std::vector<RepMap<F>> basis;
    for (int col = 0; col < kernel.cols(); ++col)
        basis.push_back(detail::unflatten_map(x, y, kernel, col));
    return basis;
}

template <class F>
int hom_dim(const Rep<F>& x, const Rep<F>& y)
{
    return static_cast<int>(hom_space(x, y).size());
}

/// Coordinates of f in the span of `basis` (flattened), if expressible.
template <class F>
std::optional<Mat<F>> expand_in_basis(const RepMap<F>& f, const std::vector<RepMap<F>>& basis)
{
    const auto& field = f.src.alg->field();
    auto off = detail::hom_offsets(f.src, f.dst);
    Mat<F> m(field, off.back(), static_cast<int>(basis.size()));
    for (size_t b = 0; b < basis.size(); ++b) {
        Mat<F> v = detail::flatten_map(basis[b]);
        for (int r = 0; r < v.rows(); ++r) m.at(r, static_cast<int>(b)) = v.at(r, 0);
    }
    return m.solve(detail::flatten_map(f));
}

// ---------------------------------------------------------------------------
// Kernels, images, cokernels, direct sums

/// Subrepresentation spanned by per-vertex column bases (each basis must be
/// arrow-stable); returns the subrep and its inclusion.
template <class F>
std::pair<Rep<F>, RepMap<F>> subrep_from_bases(const Rep<F>& y, std::vector<Mat<F>> bases)
{
    const auto& q = y.alg->quiver();
    std::vector<int> dims;
    for (const auto& b : bases) dims.push_back(b.cols());
    std::vector<Mat<F>> action;
    for (int a = 0; a < q.n_arrows(); ++a) {
        int i = q.arrows[a].src, j = q.arrows[a].tgt;
        auto coords = bases[j].solve(y.action[a] * bases[i]);
        if (!coords) throw defect_error("subrep_from_bases: span is not arrow-stable");
        action.push_back(std::move(*coords));
    }
    Rep<F> sub{y.alg, std::move(dims), std::move(action)};
    RepMap<F> incl{sub, y, std::move(bases)};
    return {std::move(sub), std::move(incl)};
}

template <class F>
std::pair<Rep<F>, RepMap<F>> kernel(const RepMap<F>& f)
{
    std::vector<Mat<F>> bases;
    for (const auto& m : f.comps) bases.push_back(m.kernel_basis());
    return subrep_from_bases(f.src, std::move(bases));
}

template <class F>
std::pair<Rep<F>, RepMap<F>> image(const RepMap<F>& f)
{
    std::vector<Mat<F>> bases;
    for (const auto& m : f.comps) bases.push_back(m.col_space_basis());
    return subrep_from_bases(f.dst, std::move(bases));
}

/// Quotient of Y by an included subrepresentation; returns quotient and
/// projection Y -> Q. The inclusion components must be in reduced column
/// echelon form (as produced by kernel/image/subrep bases).
template <class F>
std::pair<Rep<F>, RepMap<F>> quotient(const Rep<F>& y, const std::vector<Mat<F>>& sub_bases)
{
    const auto& q = y.alg->quiver();
    const auto& f = y.alg->field();
    std::vector<Mat<F>> projs, secs;
    std::vector<int> dims;
    for (size_t i = 0; i < sub_bases.size(); ++i) {
        auto qm = quotient_maps(sub_bases[i]);
        dims.push_back(qm.projection.rows());
        projs.push_back(qm.projection);
        secs.push_back(qm.section);
    }
    std::vector<Mat<F>> action;
    for (int a = 0; a < q.n_arrows(); ++a) {
        int i = q.arrows[a].src, j = q.arrows[a].tgt;
        action.push_back(projs[j] * y.action[a] * secs[i]);
    }
    (void)f;
    Rep<F> quo{y.alg, std::move(dims), std::move(action)};
    RepMap<F> proj{y, quo, std::move(projs)};
    return {std::move(quo), std::move(proj)};
}

template <class F>
std::pair<Rep<F>, RepMap<F>> cokernel(const RepMap<F>& f)
{
    std::vector<Mat<F>> bases;
    for (const auto& m : f.comps) bases.push_back(m.col_space_basis());
    return quotient(f.dst, bases);
}

template <class F>
struct DirectSum {
    Rep<F> sum;
    std::vector<RepMap<F>> injections;
    std::vector<RepMap<F>> projections;
};

template <class F>
DirectSum<F> direct_sum(const std::vector<Rep<F>>& parts, const AlgebraPtr<F>& alg_hint = nullptr)
{
    AlgebraPtr<F> alg = alg_hint;
    for (const auto& p : parts) {
        if (!alg) alg = p.alg;
        if (p.alg != alg) throw error("direct_sum: modules over different algebras");
    }
    if (!alg) throw error("direct_sum: empty list without algebra hint");
    const auto& q = alg->quiver();
    const auto& f = alg->field();
    std::vector<int> dims(q.n_vertices(), 0);
    for (const auto& p : parts)
        for (int i = 0; i < q.n_vertices(); ++i) dims[i] += p.dims[i];
    std::vector<Mat<F>> action;
    for (int a = 0; a < q.n_arrows(); ++a) {
        int i = q.arrows[a].src, j = q.arrows[a].tgt;
        Mat<F> m(f, dims[j], dims[i]);
        int ro = 0, co = 0;
        for (const auto& p : parts) {
            for (int r = 0; r < p.dims[j]; ++r)
                for (int c = 0; c < p.dims[i]; ++c) m.at(ro + r, co + c) = p.action[a].at(r, c);
            ro += p.dims[j];
            co += p.dims[i];
        }
        action.push_back(std::move(m));
    }
    Rep<F> sum{alg, dims, std::move(action)};
    DirectSum<F> out{sum, {}, {}};
    std::vector<int> off(q.n_vertices(), 0);
    for (const auto& p : parts) {
        std::vector<Mat<F>> inj, proj;
        for (int i = 0; i < q.n_vertices(); ++i) {
            Mat<F> in(f, dims[i], p.dims[i]), pr(f, p.dims[i], dims[i]);
            for (int r = 0; r < p.dims[i]; ++r) {
                in.at(off[i] + r, r) = f.one();
                pr.at(r, off[i] + r) = f.one();
            }
            inj.push_back(std::move(in));
            proj.push_back(std::move(pr));
        }
        out.injections.push_back(RepMap<F>{p, sum, std::move(inj)});
        out.projections.push_back(RepMap<F>{sum, p, std::move(proj)});
        for (int i = 0; i < q.n_vertices(); ++i) off[i] += p.dims[i];
    }
    return out;
}

// ---------------------------------------------------------------------------
// Standard modules

template <class F>
Rep<F> simple_module(const AlgebraPtr<F>& alg, int v)
{
    if (v < 0 || v >= alg->n_vertices()) throw error("unknown vertex index");
    Rep<F> x = zero_rep(alg);
    x.dims[v] = 1;
    const auto& q = alg->quiver();
    for (int a = 0; a < q.n_arrows(); ++a)
        x.action[a] = Mat<F>(alg->field(), x.dims[q.arrows[a].tgt], x.dims[q.arrows[a].src]);
    return x;
}

/// P(i) = (kQ/I) e_i, with basis the normal-form paths starting at i.
template <class F>
Rep<F> projective_module(const AlgebraPtr<F>& alg, int i)
{
    if (i < 0 || i >= alg->n_vertices()) throw error("unknown vertex index");
    const auto& q = alg->quiver();
    const auto& f = alg->field();
    // per-vertex ordered lists of basis paths i -> j
    std::vector<std::vector<Word>> paths(q.n_vertices());
    std::vector<std::map<Word, int>> index(q.n_vertices());
    for (int j = 0; j < q.n_vertices(); ++j) {
        paths[j] = alg->paths_from_to(i, j);
        for (size_t k = 0; k < paths[j].size(); ++k) index[j][paths[j][k]] = static_cast<int>(k);
    }
    std::vector<int> dims;
    for (int j = 0; j < q.n_vertices(); ++j) dims.push_back(static_cast<int>(paths[j].size()));
    std::vector<Mat<F>> action;
    for (int a = 0; a < q.n_arrows(); ++a) {
        int s = q.arrows[a].src, t = q.arrows[a].tgt;
        Mat<F> m(f, dims[t], dims[s]);
        for (int c = 0; c < dims[s]; ++c) {
            Word extended = paths[s][c];
            extended.arrows.push_back(a);
            Element<F> e;
            e[extended] = f.one();
            for (const auto& [w, coeff] : alg->normal_form(e)) {
                auto it = index[t].find(w);
                if (it == index[t].end()) throw defect_error("projective_module: normal form left the expected block");
                m.at(it->second, c) = coeff;
            }
        }
        action.push_back(std::move(m));
    }
    return make_rep(alg, std::move(dims), std::move(action));
}

/// Matlis dual: a module over the opposite algebra with transposed action.
/// dual(dual(X)) is X on the nose (same algebra object, same matrices).
template <class F>
Rep<F> dual_module(const Rep<F>& x)
{
    auto op = x.alg->opposite();
    std::vector<Mat<F>> action;
    for (size_t a = 0; a < x.action.size(); ++a) action.push_back(x.action[a].transpose());
    return Rep<F>{op, x.dims, std::move(action)};
}

template <class F>
RepMap<F> dual_map(const RepMap<F>& f)
{
    std::vector<Mat<F>> comps;
    for (const auto& m : f.comps) comps.push_back(m.transpose());
    return RepMap<F>{dual_module(f.dst), dual_module(f.src), std::move(comps)};
}

template <class F>
Rep<F> injective_module(const AlgebraPtr<F>& alg, int i)
{
    return dual_module(projective_module(alg->opposite(), i));
}

template <class F>
Rep<F> regular_module(const AlgebraPtr<F>& alg)
{
    std::vector<Rep<F>> parts;
    for (int i = 0; i < alg->n_vertices(); ++i) parts.push_back(projective_module(alg, i));
    return direct_sum(parts, alg).sum;
}

template <class F>
Rep<F> coregular_module(const AlgebraPtr<F>& alg)
{
    std::vector<Rep<F>> parts;
    for (int i = 0; i < alg->n_vertices(); ++i) parts.push_back(injective_module(alg, i));
    return direct_sum(parts, alg).sum;
}

// ---------------------------------------------------------------------------
// Radical, socle, top; covers and envelopes

/// rad X = (arrow ideal) . X, as a subrepresentation with inclusion.
template <class F>
std::pair<Rep<F>, RepMap<F>> radical(const Rep<F>& x)
{
    const auto& q = x.alg->quiver();
    const auto& f = x.alg->field();
    std::vector<Mat<F>> bases;
    for (int j = 0; j < q.n_vertices(); ++j) {
        Mat<F> stack(f, x.dims[j], 0);
        for (int a = 0; a < q.n_arrows(); ++a)
            if (q.arrows[a].tgt == j) stack = hstack(stack, x.action[a]);
        bases.push_back(stack.col_space_basis());
    }
    return subrep_from_bases(x, std::move(bases));
}

/// soc X = joint kernel of all arrow actions, a semisimple subrep.
template <class F>
std::pair<Rep<F>, RepMap<F>> socle(const Rep<F>& x)
{
    const auto& q = x.alg->quiver();
    const auto& f = x.alg->field();
    std::vector<Mat<F>> bases;
    for (int i = 0; i < q.n_vertices(); ++i) {
        Mat<F> stack(f, 0, x.dims[i]);
        for (int a = 0; a < q.n_arrows(); ++a)
            if (q.arrows[a].src == i) stack = vstack(stack, x.action[a]);
        bases.push_back(stack.kernel_basis());
    }
    return subrep_from_bases(x, std::move(bases));
}

template <class F>
std::pair<Rep<F>, RepMap<F>> top(const Rep<F>& x)
{
    auto [rad, incl] = radical(x);
    return quotient(x, incl.comps);
}

/// Projective cover P(top X) ->> X (kernel is superfluous: it lies in rad P).
template <class F>
RepMap<F> projective_cover(const Rep<F>& x)
{
    const auto& q = x.alg->quiver();
    auto [rad, incl] = radical(x);
    auto qm_parts = [&] {
        std::vector<QuotientMaps<F>> out;
        for (int i = 0; i < q.n_vertices(); ++i) out.push_back(quotient_maps(incl.comps[i]));
        return out;
    }();
    std::vector<Rep<F>> cover_parts;
    std::vector<std::pair<int, Mat<F>>> generators;  // (vertex, lifted top basis)
    for (int i = 0; i < q.n_vertices(); ++i) {
        int t = qm_parts[i].projection.rows();
        for (int c = 0; c < t; ++c) cover_parts.push_back(projective_module(x.alg, i));
        if (t > 0) generators.emplace_back(i, qm_parts[i].section);
    }
    auto ds = direct_sum(cover_parts, x.alg);
    // map each P(i) copy by sending the trivial path to the lifted generator
    std::vector<Mat<F>> comps;
    for (int j = 0; j < q.n_vertices(); ++j)
        comps.emplace_back(x.alg->field(), x.dims[j], ds.sum.dims[j]);
    int part = 0;
    for (int i = 0; i < q.n_vertices(); ++i) {
        int t = qm_parts[i].projection.rows();
        for (int c = 0; c < t; ++c) {
            // generator vector in X_i
            Mat<F> gen = qm_parts[i].section.submatrix(0, c, x.dims[i], 1);
            const Rep<F>& p = cover_parts[part];
            for (int j = 0; j < q.n_vertices(); ++j) {
                auto paths = x.alg->paths_from_to(i, j);
                for (size_t k = 0; k < paths.size(); ++k) {
                    Mat<F> img = eval_word(x, paths[k]) * gen;  // column in X_j
                    // column index inside the direct sum at vertex j
                    int col = 0;
                    for (int pp = 0; pp < part; ++pp) col += cover_parts[pp].dims[j];
                    col += static_cast<int>(k);
                    for (int r = 0; r < x.dims[j]; ++r) comps[j].at(r, col) = img.at(r, 0);
                }
            }
            (void)p;
            ++part;
        }
    }
    RepMap<F> cover{ds.sum, x, std::move(comps)};
    validate_map(cover);
    for (int j = 0; j < q.n_vertices(); ++j)
        if (cover.comps[j].rank() != x.dims[j])
            throw defect_error("projective cover failed to be surjective");
    return cover;
}

template <class F>
RepMap<F> injective_envelope(const Rep<F>& x)
{
    RepMap<F> cov = projective_cover(dual_module(x));
    RepMap<F> env = dual_map(cov);  // X = DD X -> D(cover source)
    return env;
}

template <class F>
bool is_projective_rep(const Rep<F>& x)
{
    if (x.is_zero()) return true;
    auto cov = projective_cover(x);
    auto [k, incl] = kernel(cov);
    return k.is_zero();
}

template <class F>
bool is_injective_rep(const Rep<F>& x)
{
    return is_projective_rep(dual_module(x));
}

}  // namespace arthom
