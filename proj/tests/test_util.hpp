// Shared helpers for the test suites.

#pragma once

#include "arthom/decompose.hpp"

namespace arthom::testutil {

/// All uniserial indecomposables of a Nakayama algebra, as quotients of the
/// projectives by radical powers (independent of the classify module).
template <class F>
std::vector<Rep<F>> uniserials(const AlgebraPtr<F>& alg)
{
    std::vector<Rep<F>> out;
    for (int v = 0; v < alg->n_vertices(); ++v) {
        Rep<F> p = projective_module(alg, v);
        auto [rad1, incl1] = radical(p);
        std::vector<Mat<F>> bases = incl1.comps;
        while (true) {
            out.push_back(quotient(p, bases).first);
            bool all_zero = true;
            for (auto& b : bases) all_zero = all_zero && b.cols() == 0;
            if (all_zero) break;
            auto sub = subrep_from_bases(p, bases);
            auto [r, rincl] = radical(sub.first);
            for (size_t i = 0; i < bases.size(); ++i)
                bases[i] = (bases[i] * rincl.comps[i]).col_space_basis();
        }
    }
    return out;
}

}  // namespace arthom::testutil
