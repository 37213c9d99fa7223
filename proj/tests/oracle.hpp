// Test-only independent oracles. dim Ext^1(Z, X) is computed here from the
// middle-term construction: extensions are block upper triangular actions
// [[X_a, g_a], [0, Z_a]]; the relation constraints on g are linear, and
// equivalence is quotienting by the coboundaries g = X h - h Z. This route
// never touches resolutions, so it independently checks the Ext machinery.

#pragma once

#include "arthom/decompose.hpp"

namespace arthom::oracle {

template <class F>
struct CocycleSpace {
    std::vector<int> offsets;  // per arrow, into the flattened gamma space
    int total = 0;
    Mat<F> cocycles;           // basis of Z^1 (columns)
    Mat<F> boundaries;         // basis of B^1 as columns in gamma coordinates
};

template <class F>
CocycleSpace<F> extension_space(const Rep<F>& z, const Rep<F>& x)
{
    const auto& alg = z.alg;
    const auto& q = alg->quiver();
    const auto& f = alg->field();
    CocycleSpace<F> out;
    out.offsets.resize(q.n_arrows());
    for (int a = 0; a < q.n_arrows(); ++a) {
        out.offsets[a] = out.total;
        out.total += x.dims[q.arrows[a].tgt] * z.dims[q.arrows[a].src];
    }
    auto gamma_index = [&](int a, int r, int c) {
        return out.offsets[a] + r * z.dims[q.arrows[a].src] + c;
    };
    // relation constraints: the upper-right block of each relation evaluated
    // on the extension must vanish; it is linear in gamma
    int rows = 0;
    for (const auto& rel : alg->relations()) {
        const Word& w0 = rel.terms.front().second;
        rows += x.dims[alg->word_target(w0)] * z.dims[w0.source];
    }
    Mat<F> constraints(f, rows, out.total);
    int row0 = 0;
    for (const auto& rel : alg->relations()) {
        const Word& w0 = rel.terms.front().second;
        int nr = x.dims[alg->word_target(w0)], nc = z.dims[w0.source];
        for (const auto& [coeff, w] : rel.terms) {
            // U(w) = sum_j X_{a_k}..X_{a_{j+1}} G_{a_j} Z_{a_{j-1}}..Z_{a_1}
            int len = w.length();
            for (int j = 0; j < len; ++j) {
                int aj = w.arrows[j];
                Word prefix{w.source, std::vector<int>(w.arrows.begin(), w.arrows.begin() + j)};
                Word suffix{q.arrows[aj].tgt, std::vector<int>(w.arrows.begin() + j + 1, w.arrows.end())};
                Mat<F> zpre = eval_word(z, prefix);    // Z-side, applied first
                Mat<F> xpost = eval_word(x, suffix);   // X-side, applied after
                // contribution: xpost * G_{aj} * zpre
                for (int r = 0; r < nr; ++r)
                    for (int c = 0; c < nc; ++c)
                        for (int u = 0; u < x.dims[q.arrows[aj].tgt]; ++u)
                            for (int v = 0; v < z.dims[q.arrows[aj].src]; ++v) {
                                auto add = f.mul(coeff, f.mul(xpost.at(r, u), zpre.at(v, c)));
                                if (!f.is_zero(add)) {
                                    auto& cell = constraints.at(row0 + r * nc + c, gamma_index(aj, u, v));
                                    cell = f.add(cell, add);
                                }
                            }
            }
        }
        row0 += nr * nc;
    }
    out.cocycles = constraints.kernel_basis();
    // coboundaries: delta(h)_a = X_a h_{src} - h_{tgt} Z_a for vertexwise h
    std::vector<int> hoff(q.n_vertices() + 1, 0);
    for (int i = 0; i < q.n_vertices(); ++i) hoff[i + 1] = hoff[i] + x.dims[i] * z.dims[i];
    Mat<F> delta(f, out.total, hoff.back());
    for (int a = 0; a < q.n_arrows(); ++a) {
        int s = q.arrows[a].src, t = q.arrows[a].tgt;
        for (int r = 0; r < x.dims[t]; ++r)
            for (int c = 0; c < z.dims[s]; ++c) {
                int grow = gamma_index(a, r, c);
                for (int k = 0; k < x.dims[s]; ++k) {
                    auto v = x.action[a].at(r, k);
                    if (!f.is_zero(v))
                        delta.at(grow, hoff[s] + k * z.dims[s] + c) =
                            f.add(delta.at(grow, hoff[s] + k * z.dims[s] + c), v);
                }
                for (int k = 0; k < z.dims[t]; ++k) {
                    auto v = z.action[a].at(k, c);
                    if (!f.is_zero(v))
                        delta.at(grow, hoff[t] + r * z.dims[t] + k) =
                            f.sub(delta.at(grow, hoff[t] + r * z.dims[t] + k), v);
                }
            }
    }
    out.boundaries = delta.col_space_basis();
    return out;
}

/// dim Ext^1(Z, X) by brute force: cocycles modulo coboundaries.
template <class F>
int ext1_dim(const Rep<F>& z, const Rep<F>& x)
{
    auto space = extension_space(z, x);
    int z1 = space.cocycles.cols();
    int b1 = space.boundaries.cols();
    if (hstack(space.cocycles, space.boundaries).rank() != z1)
        throw defect_error("oracle: a coboundary violates the cocycle constraints");
    return z1 - b1;
}

/// dim F^M(Z, X) as a subspace of Ext^1(Z, X): classes whose pushout along
/// every map X -> N (N an indecomposable summand of M) splits.
template <class F>
int f_upper_dim(const Rep<F>& z, const Rep<F>& x, const std::vector<Rep<F>>& m_summands)
{
    const auto& alg = z.alg;
    const auto& q = alg->quiver();
    const auto& f = alg->field();
    auto space = extension_space(z, x);
    if (space.cocycles.cols() == 0) return 0;
    // stack, over all (N, h), the map Z^1(Z,X) -> Z^1(Z,N)/B^1(Z,N)
    Mat<F> stacked(f, 0, space.cocycles.cols());
    for (const auto& n : m_summands) {
        auto nspace = extension_space(z, n);
        Mat<F> qproj = nspace.boundaries.cols() == 0
                           ? Mat<F>::identity(f, nspace.total)
                           : quotient_maps(nspace.boundaries).projection;
        for (const auto& h : hom_space(x, n)) {
            // pushout on cocycle coordinates: gamma_a -> h_{tgt(a)} gamma_a
            Mat<F> push(f, nspace.total, space.total);
            for (int a = 0; a < q.n_arrows(); ++a) {
                int t = q.arrows[a].tgt, s = q.arrows[a].src;
                for (int r = 0; r < n.dims[t]; ++r)
                    for (int u = 0; u < x.dims[t]; ++u) {
                        auto hv = h.comps[t].at(r, u);
                        if (f.is_zero(hv)) continue;
                        for (int c = 0; c < z.dims[s]; ++c)
                            push.at(nspace.offsets[a] + r * z.dims[s] + c,
                                    space.offsets[a] + u * z.dims[s] + c) = hv;
                    }
            }
            stacked = vstack(stacked, qproj * push * space.cocycles);
        }
    }
    int admissible = stacked.cols() == 0 ? 0 : stacked.kernel_basis().cols();
    // subtract the boundaries of (Z, X), which always land in the kernel
    Mat<F> b_in_z1 = space.boundaries;
    int b1 = b_in_z1.rank();
    return admissible - b1;
}

}  // namespace arthom::oracle
