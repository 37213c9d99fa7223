#include <catch2/catch_amalgamated.hpp>

#include "arthom/approx.hpp"
#include "arthom/fixtures.hpp"

using namespace arthom;

TEST_CASE("in_add")
{
    auto c3 = fixtures::fix_c3();
    auto m_add = AddClosure<Rationals>::of(c3.module("M"));
    CHECK(in_add(zero_rep(c3.algebra), m_add));
    // P(2) = I(1) lies in add DA
    auto da_add = AddClosure<Rationals>::of(coregular_module(c3.algebra));
    CHECK(in_add(projective_module(c3.algebra, 1), da_add));
    CHECK_FALSE(in_add(projective_module(c3.algebra, 0), da_add));

    auto g = fixtures::fix_g();
    auto i_add = AddClosure<Rationals>::of(g.module("I"));
    CHECK_FALSE(in_add(injective_module(g.algebra, 0), i_add));
}

TEST_CASE("minimal left approximation of P(1) by add M on FIX_C3")
{
    auto c3 = fixtures::fix_c3();
    auto m_add = AddClosure<Rationals>::of(c3.module("M"));
    auto p1 = projective_module(c3.algebra, 0);
    RepMap<Rationals> f = minimal_left_approx(p1, m_add);
    // target is I(3) + S(1): dims (1,1,2) + (1,0,0) = (2,1,2)
    CHECK(f.dst.dims == std::vector<int>{2, 1, 2});
    auto i3 = injective_module(c3.algebra, 2);
    auto s1 = simple_module(c3.algebra, 0);
    CHECK(is_isomorphic(f.dst, direct_sum<Rationals>({i3, s1}, c3.algebra).sum));
    // injective with cokernel N31 (dims (1,0,1))
    for (int v = 0; v < 3; ++v) CHECK(f.comps[v].rank() == p1.dims[v]);
    auto [cok, proj] = cokernel(f);
    CHECK(cok.dims == std::vector<int>{1, 0, 1});
    CHECK(is_isomorphic(cok, c3.module("N31")));
    // minimality: deleting either summand breaks the property (certified by
    // the greedy construction; spot-check the rank certificates)
    CHECK(detail::is_left_approximation(f, m_add));
}

TEST_CASE("approximation of members and of zero")
{
    auto c3 = fixtures::fix_c3();
    auto m_add = AddClosure<Rationals>::of(c3.module("M"));
    auto i3 = injective_module(c3.algebra, 2);
    RepMap<Rationals> f = minimal_left_approx(i3, m_add);
    CHECK(map_invertible(f));
    RepMap<Rationals> z = minimal_left_approx(zero_rep(c3.algebra), m_add);
    CHECK(z.dst.is_zero());
}

TEST_CASE("coresolution of A by add M on FIX_C3 and M-codim")
{
    auto c3 = fixtures::fix_c3();
    auto m_add = AddClosure<Rationals>::of(c3.module("M"));
    auto a = regular_module(c3.algebra);
    auto seq = coresolution(a, m_add, 8);
    CHECK(seq.terminated());
    CHECK(seq.length() == 1);
    CHECK(m_codim(a, m_add) == DimValue::finite(1));
    // M_0 = P(2) + P(3) + I(3) + S(1), M_1 = N31
    CHECK(seq.terms[0].total_dim() == 3 + 4 + 4 + 1);
    CHECK(is_isomorphic(seq.terms[1], c3.module("N31")));
    verify_resolution(seq);

    // members have codim 0
    CHECK(m_codim(c3.module("N31"), m_add) == DimValue::finite(0));
    // with C = add DA the coresolution is the injective one: m_codim = id
    auto da_add = AddClosure<Rationals>::of(coregular_module(c3.algebra));
    for (int v = 0; v < 3; ++v) {
        auto x = projective_module(c3.algebra, v);
        CHECK(m_codim(x, da_add, 16).value == injective_dimension(x, 16).value);
    }
}

TEST_CASE("coresolution error when C is not a cogenerator closure")
{
    auto c3 = fixtures::fix_c3();
    auto bad = AddClosure<Rationals>::of(simple_module(c3.algebra, 1));
    CHECK_THROWS_AS(coresolution(simple_module(c3.algebra, 0), bad, 4), error);
}

TEST_CASE("dualizing summands")
{
    auto c3 = fixtures::fix_c3();
    auto m = c3.module("M");
    CHECK(is_dualizing_summand(m, m));
    // not a summand: precondition violation
    CHECK_THROWS_AS(is_dualizing_summand(projective_module(c3.algebra, 0), m), precondition_error);
    // DA is a dualizing summand of M (approximation by injectives embeds)
    CHECK(is_dualizing_summand(coregular_module(c3.algebra), m));
    // S(1) is a summand of M but does not dualize it
    CHECK_FALSE(is_dualizing_summand(simple_module(c3.algebra, 0), m));
}

TEST_CASE("tilting and cotilting")
{
    auto c3 = fixtures::fix_c3();
    CHECK(is_tilting_cotilting(regular_module(c3.algebra), false));
    CHECK(is_tilting_cotilting(coregular_module(c3.algebra), true));
    CHECK_FALSE(is_tilting_cotilting(simple_module(c3.algebra, 0), false, 8));

    auto a2 = fixtures::fix_a2();
    CHECK(is_tilting_cotilting(regular_module(a2.algebra), false));
    CHECK(is_tilting_cotilting(coregular_module(a2.algebra), true));
    // over the hereditary A2, T = S(1) + P(1) is tilting (the APR tilt)
    auto t = direct_sum<Rationals>({a2.module("S1"), projective_module(a2.algebra, 0)}, a2.algebra).sum;
    CHECK(is_tilting_cotilting(t, false));
    // and S(2) + P(1) = DA is cotilting; a simple alone is not
    CHECK_FALSE(is_tilting_cotilting(a2.module("S1"), true));
}
