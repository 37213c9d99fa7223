#include <catch2/catch_amalgamated.hpp>

#include "arthom/endocat.hpp"
#include "arthom/fixtures.hpp"
#include "test_util.hpp"

using namespace arthom;

TEST_CASE("endomorphism algebra of the regular module")
{
    auto c3 = fixtures::fix_c3();
    auto pres = endo_algebra(regular_module(c3.algebra));
    CHECK(pres.lambda->n_vertices() == 3);
    CHECK(pres.lambda->n_arrows() == 3);
    CHECK(pres.lambda->dim() == 10);
    // round trip through the file format
    auto rt = parse_algebra_text(serialize_algebra(*pres.lambda));
    CHECK(std::get<AlgebraBundle<Rationals>>(rt).algebra->dim() == 10);
}

TEST_CASE("endomorphism algebra of a semisimple module is a product of fields")
{
    auto a2 = fixtures::fix_a2();
    auto ss = direct_sum<Rationals>({a2.module("S1"), a2.module("S2")}, a2.algebra).sum;
    auto pres = endo_algebra(ss);
    CHECK(pres.lambda->n_vertices() == 2);
    CHECK(pres.lambda->n_arrows() == 0);
    CHECK(pres.lambda->dim() == 2);
}

TEST_CASE("endomorphism algebra of the Remark 4.4 module")
{
    auto c3 = fixtures::fix_c3();
    auto m = c3.module("M");
    auto pres = endo_algebra(m);
    CHECK(pres.lambda->n_vertices() == 5);
    // dim lambda = sum of the 25 pairwise hom dimensions
    int expect = 0;
    auto parts = summand_list(m);
    REQUIRE(parts.size() == 5);
    for (const auto& a : parts)
        for (const auto& b : parts) expect += hom_dim(a, b);
    CHECK(pres.lambda->dim() == expect);
    CHECK(pres.hom_dim_total == expect);

    // transport(M) is the left regular module of lambda
    auto tm = hom_transport(m, pres);
    CHECK(tm.total_dim() == pres.lambda->dim());
    CHECK(is_isomorphic(tm, regular_module(pres.lambda)));

    // transport is additive and kills nothing it should not
    CHECK(hom_transport(zero_rep(c3.algebra), pres).is_zero());
    auto x = simple_module(c3.algebra, 0);
    auto y = c3.module("N31");
    auto txy = hom_transport(direct_sum<Rationals>({x, y}, c3.algebra).sum, pres);
    auto tx = hom_transport(x, pres);
    auto ty = hom_transport(y, pres);
    CHECK(is_isomorphic(txy, direct_sum<Rationals>({tx, ty}, pres.lambda).sum));
    CHECK(tx.total_dim() == hom_dim(x, m));
}

TEST_CASE("transport of the regular module is injective of pd <= 1 (Thm 3.3 shape)")
{
    auto c3 = fixtures::fix_c3();
    auto pres = endo_algebra(c3.module("M"));
    auto i_lambda = hom_transport(regular_module(c3.algebra), pres);
    CHECK(is_injective_rep(i_lambda));
    CHECK(projective_dimension(i_lambda, 16).le(1));
}

TEST_CASE("natural evaluation is bijective on the FIX_C3 round trip")
{
    auto c3 = fixtures::fix_c3();
    auto pres = endo_algebra(c3.module("M"));
    auto ev = natural_eval_iso(pres);
    CHECK(ev.dim_base == 10);
    CHECK(ev.dim_end == 10);
    CHECK(ev.bijective);

    // evaluation respects multiplication on a sample of basis pairs
    const auto& alg = c3.algebra;
    for (int s = 0; s < alg->dim(); s += 3)
        for (int t = 0; t < alg->dim(); t += 4) {
            Element<Rationals> prod;
            prod[alg->basis()[s]] = alg->field().one();
            Element<Rationals> other;
            other[alg->basis()[t]] = alg->field().one();
            auto combo = alg->mul(prod, other);
            // ev(prod * other) = ev(prod) o ev(other)
            RepMap<Rationals> lhs = zero_map(ev.transported_regular, ev.transported_regular);
            for (const auto& [w, c] : combo)
                lhs = map_add(lhs, map_scale(ev.ev_images[alg->basis_index(w)], c));
            RepMap<Rationals> rhs = compose(ev.ev_images[s], ev.ev_images[t]);
            bool equal = true;
            for (size_t v = 0; v < lhs.comps.size(); ++v) equal = equal && lhs.comps[v] == rhs.comps[v];
            CHECK(equal);
        }

    // pulling Hom_Lambda(Lambda, I) back along the evaluation recovers add M
    auto back = pullback_along_eval(ev, pres);
    CHECK(is_isomorphic(back, c3.module("M")));
}

TEST_CASE("evaluation for M = DA")
{
    auto a2 = fixtures::fix_a2();
    auto pres = endo_algebra(coregular_module(a2.algebra));
    auto ev = natural_eval_iso(pres);
    CHECK(ev.bijective);
    CHECK(ev.dim_base == 3);
}

TEST_CASE("transport is exact on F^M-exact sequences")
{
    auto c3 = fixtures::fix_c3();
    auto m = c3.module("M");
    auto pres = endo_algebra(m);
    auto fm = f_upper(m);
    // the F^M-exact sequence 0 -> P(1) -> I(3) + S(1) -> N31 -> 0
    auto p1 = projective_module(c3.algebra, 0);
    RepMap<Rationals> f = minimal_left_approx(p1, fm.m_add);
    auto [cok, proj] = cokernel(f);
    REQUIRE(is_F_exact(f, proj, fm));
    RepMap<Rationals> tf = hom_transport_map(f, pres);       // t(mid) -> t(P1)
    RepMap<Rationals> tp = hom_transport_map(proj, pres);    // t(cok) -> t(mid)
    // 0 -> t(cok) -> t(mid) -> t(P1) -> 0 must be exact
    CHECK(compose(tf, tp).is_zero());
    for (size_t v = 0; v < tf.comps.size(); ++v) {
        CHECK(tp.comps[v].rank() == tp.comps[v].cols());                    // injective
        CHECK(tf.comps[v].rank() == tf.comps[v].rows());                    // surjective
        CHECK(tp.comps[v].cols() + tf.comps[v].rows() == tf.comps[v].cols());
    }
}

TEST_CASE("FIX_G pipeline: End of the injective slice and back (Thm 3.6)")
{
    auto g = fixtures::fix_g();
    auto i_mod = g.module("I");
    auto pres = endo_algebra(i_mod);
    CHECK(pres.lambda->n_vertices() == 5);
    CHECK(pres.lambda->dim() == 11);
    // M = Hom_Gamma(Gamma, I) over A = End(I); then End_A(M) has dim 14 and
    // the natural evaluation Gamma -> End_A(M) is bijective
    auto ev = natural_eval_iso(pres);
    CHECK(ev.dim_base == 14);
    CHECK(ev.dim_end == 14);
    CHECK(ev.bijective);
    // M is a cogenerator over A with M-codim A <= 2 (m = 2 here)
    auto m_over_a = ev.transported_regular;
    auto m_add = AddClosure<Rationals>::of(m_over_a);
    CHECK(in_add(coregular_module(pres.lambda), m_add));
    CHECK(m_codim(regular_module(pres.lambda), m_add, 8).le(2));
}

TEST_CASE("six-term exactness (Lemma 4.5 shape)")
{
    auto c3 = fixtures::fix_c3();
    CHECK(six_term_exact_dims(c3.module("M"), 2));
    // also for the absolute cogenerator DA, any n
    CHECK(six_term_exact_dims(coregular_module(c3.algebra), 1));
    CHECK(six_term_exact_dims(coregular_module(c3.algebra), 2));
    // a module with Ext^1(M,M) != 0 fails the n = 2 bookkeeping
    auto bad = direct_sum<Rationals>({simple_module(c3.algebra, 0), simple_module(c3.algebra, 1),
                                      coregular_module(c3.algebra)},
                                     c3.algebra)
                   .sum;
    REQUIRE(ext_dim(bad, bad, 1) > 0);
    CHECK_FALSE(six_term_exact_dims(bad, 2));
}

TEST_CASE("Prop 3.5 on a sample: I-domdim of transports")
{
    auto c3 = fixtures::fix_c3();
    auto m = c3.module("M");
    auto pres = endo_algebra(m);
    auto i_lambda = hom_transport(regular_module(c3.algebra), pres);
    for (const auto& x : testutil::uniserials(c3.algebra)) {
        if (x.total_dim() > 3) continue;  // sample; the acceptance suite is exhaustive
        int inf = -1;
        for (int i = 1; i <= 8; ++i)
            if (ext_dim(x, m, i) != 0) {
                inf = i;
                break;
            }
        auto dd = rel_domdim(hom_transport(x, pres), i_lambda, 8);
        if (inf < 0)
            CHECK_FALSE(dd.is_finite());
        else
            CHECK(dd == DimValue::finite(inf + 1));
    }
}
