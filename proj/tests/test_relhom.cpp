#include <catch2/catch_amalgamated.hpp>

#include "arthom/fixtures.hpp"
#include "arthom/relhom.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

using namespace arthom;

namespace {

struct C3Setup {
    AlgebraBundle<Rationals> bundle;
    Rep<Rationals> m;
    SubBifunctor<Rationals> fm;
    std::vector<Rep<Rationals>> universe;

    C3Setup()
        : bundle(fixtures::fix_c3()), m(bundle.module("M")), fm(f_upper(m)),
          universe(testutil::uniserials(bundle.algebra))
    {
    }
};

}  // namespace

TEST_CASE("split sequences are F-exact for every F")
{
    C3Setup s;
    auto x = s.bundle.module("N31");
    auto y = simple_module(s.bundle.algebra, 1);
    auto ds = direct_sum<Rationals>({x, y}, s.bundle.algebra);
    CHECK(is_F_exact(ds.injections[0], ds.projections[1], s.fm));
    CHECK(is_F_exact(ds.injections[0], ds.projections[1], f_lower(s.m)));
    CHECK(is_F_exact(ds.injections[0], ds.projections[1],
                     f_upper(coregular_module(s.bundle.algebra))));
}

TEST_CASE("with M = DA every exact sequence is F^M-exact")
{
    C3Setup s;
    auto fda = f_upper(coregular_module(s.bundle.algebra));
    // a non-split sequence: 0 -> rad P(1) -> P(1) -> S(1) -> 0
    auto p1 = projective_module(s.bundle.algebra, 0);
    auto [rad, incl] = radical(p1);
    auto [t, proj] = quotient(p1, incl.comps);
    CHECK(is_F_exact(incl, proj, fda));
    // and the spec's non-split example is F^M-exact for the Remark 4.4 M:
    // 0 -> P(1) -> I(3) + S(1) -> N31 -> 0
    RepMap<Rationals> f = minimal_left_approx(p1, s.fm.m_add);
    auto [cok, cproj] = cokernel(f);
    CHECK(is_F_exact(f, cproj, s.fm));
    // but it is not split (N31 is not a summand of the middle)
    CHECK(ext_dim(cok, p1, 1) > 0);
}

TEST_CASE("F-projectives and F-injectives")
{
    C3Setup s;
    const auto& alg = s.bundle.algebra;
    // absolute case
    auto fda = f_upper(coregular_module(alg));
    auto pi_abs = f_proj_inj(fda);
    CHECK(pi_abs.injectives.indecs.size() == 3);
    CHECK(pi_abs.projectives.indecs.size() == 3);
    for (const auto& n : pi_abs.injectives.indecs) CHECK(is_injective_rep(n));
    for (const auto& n : pi_abs.projectives.indecs) CHECK(is_projective_rep(n));

    // F^M on FIX_C3: I(F) = add M since DA | M
    auto pi = f_proj_inj(s.fm);
    CHECK(pi.injectives.indecs.size() == 5);
    for (const auto& n : pi.injectives.indecs) CHECK(in_add(n, s.fm.m_add));
    // P(F) = add(A + tau^- M): tau^- S(1) = S(3), tau^- N31 = rad P(1)
    auto radp1 = radical(projective_module(alg, 0)).first;
    std::vector<Rep<Rationals>> expected{projective_module(alg, 0), projective_module(alg, 1),
                                         projective_module(alg, 2), simple_module(alg, 2), radp1};
    CHECK(pi.projectives.indecs.size() == 5);
    for (const auto& n : pi.projectives.indecs) {
        bool found = false;
        for (const auto& e : expected) found = found || is_isomorphic(n, e);
        CHECK(found);
    }
}

TEST_CASE("F-injective coresolution of A has length 1 on FIX_C3")
{
    C3Setup s;
    auto a = regular_module(s.bundle.algebra);
    auto seq = f_resolution(a, s.fm, false, 8);
    CHECK(seq.terminated());
    CHECK(seq.length() == 1);
    CHECK(id_f(a, s.fm) == DimValue::finite(1));
    for (const auto& term : seq.terms) CHECK(in_add(term, s.fm.m_add));
    // members of P(F) have F-projective resolutions concentrated in degree 0
    auto pi = f_proj_inj(s.fm);
    for (const auto& p : pi.projectives.indecs) {
        CHECK(pd_f(p, s.fm) == DimValue::finite(0));
        for (int i = 1; i <= 2; ++i) CHECK(ext_f(p, s.m, i, s.fm) == 0);
    }
}

TEST_CASE("absolute case collapses to ordinary homological algebra")
{
    C3Setup s;
    const auto& alg = s.bundle.algebra;
    auto fda = f_upper(coregular_module(alg));
    for (size_t i = 0; i < s.universe.size(); i += 2)
        for (size_t j = 0; j < s.universe.size(); j += 3)
            for (int d = 1; d <= 2; ++d)
                CHECK(ext_f(s.universe[i], s.universe[j], d, fda) ==
                      ext_dim(s.universe[i], s.universe[j], d));
    // pd_F = pd on a few modules (finite cases)
    CHECK(pd_f(injective_module(alg, 1), fda, 16).value ==
          projective_dimension(injective_module(alg, 1), 16).value);

    // F^{DA}-resolution of a module is the minimal injective resolution
    auto x = simple_module(alg, 0);
    auto fres = f_resolution(x, fda, false, 6);
    auto ires = minimal_resolution(x, ResolutionSeq<Rationals>::Kind::injective, 6);
    REQUIRE(fres.terms.size() == ires.terms.size());
    for (size_t k = 0; k < fres.terms.size(); ++k)
        CHECK(is_isomorphic(fres.terms[k], ires.terms[k]));

    // gld_{F^{DA}} = gld on the hereditary FIX_A2
    auto a2 = fixtures::fix_a2();
    auto universe2 = testutil::uniserials(a2.algebra);
    REQUIRE(universe2.size() == 3);
    auto fda2 = f_upper(coregular_module(a2.algebra));
    CHECK(gld_f(fda2, universe2, 16) == DimValue::finite(1));
}

TEST_CASE("degree-1 relative ext equals the F-subspace of Ext^1 (oracle)")
{
    C3Setup s;
    for (const auto& z : s.universe)
        for (const auto& x : s.universe) {
            if (z.total_dim() + x.total_dim() > 6) continue;
            int viaf = ext_f(z, x, 1, s.fm);
            int brute = oracle::f_upper_dim(z, x, s.fm.m_add.indecs);
            CHECK(viaf == brute);
            CHECK(brute <= oracle::ext1_dim(z, x));
        }
}

TEST_CASE("ext_F via F-projective and F-injective routes agree")
{
    C3Setup s;
    for (size_t i = 0; i < s.universe.size(); i += 2)
        for (size_t j = 0; j < s.universe.size(); j += 3)
            for (int d = 1; d <= 2; ++d)
                CHECK(ext_f(s.universe[i], s.universe[j], d, s.fm) ==
                      ext_f_via_injective(s.universe[i], s.universe[j], d, s.fm));
}

TEST_CASE("relative ext against M matches absolute ext in low degrees")
{
    // Thm 4.13(2) ingredient: Ext_F^i(M, X) = Ext^i(M, X) for 1 <= i <= n-1
    C3Setup s;
    for (const auto& x : s.universe) CHECK(ext_f(s.m, x, 1, s.fm) == ext_dim(s.m, x, 1));
    CHECK(pd_f(s.m, s.fm).le(1));
}

TEST_CASE("M of Remark 4.4 is F-cotilting and F-tilting for F = F^M")
{
    C3Setup s;
    CHECK(id_f(s.m, s.fm) == DimValue::finite(0));
    CHECK(is_f_cotilting(s.m, s.fm));
    CHECK(is_f_tilting(s.m, s.fm));
    // a module whose add is I(F) is trivially F-cotilting
    auto fda = f_upper(coregular_module(s.bundle.algebra));
    CHECK(is_f_cotilting(coregular_module(s.bundle.algebra), fda));
    // S(2) alone is not F-cotilting for F = F^M
    CHECK_FALSE(is_f_cotilting(simple_module(s.bundle.algebra, 1), s.fm));
}

TEST_CASE("perp intersection: M-perp under F equals M-perp_1 on FIX_C3")
{
    C3Setup s;
    // pd_F M <= 1, so X in M^{perp_F} iff Ext_F^1(M, X) = 0; compare with
    // the absolute M^{perp_1}
    for (const auto& x : s.universe) {
        bool in_perp_f = ext_f(s.m, x, 1, s.fm) == 0;
        bool in_perp_1 = ext_dim(s.m, x, 1) == 0;
        CHECK(in_perp_f == in_perp_1);
    }
}
