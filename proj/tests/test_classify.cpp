#include <catch2/catch_amalgamated.hpp>

#include "arthom/classify.hpp"
#include "arthom/fixtures.hpp"

using namespace arthom;

TEST_CASE("indecomposable enumeration: Nakayama census")
{
    auto a2 = fixtures::fix_a2();
    auto list = enumerate_indecomposables(a2.algebra);
    CHECK(list.method == IndecList<Rationals>::Method::nakayama);
    CHECK(list.complete);
    CHECK(list.items.size() == 3);

    auto c3 = fixtures::fix_c3();
    auto list3 = enumerate_indecomposables(c3.algebra);
    CHECK(list3.complete);
    CHECK(list3.items.size() == 10);
    // pairwise non-isomorphic
    for (size_t i = 0; i < list3.items.size(); ++i)
        for (size_t j = i + 1; j < list3.items.size(); ++j)
            CHECK_FALSE(is_isomorphic(list3.items[i], list3.items[j]));

    // semisimple algebra: just the simples
    auto ss = std::get<AlgebraBundle<Rationals>>(parse_algebra_text("field Q\nvertices 1 2 3\n"));
    CHECK(enumerate_indecomposables(ss.algebra).items.size() == 3);
}

TEST_CASE("indecomposable enumeration: knitting on FIX_G")
{
    auto g = fixtures::fix_g();
    auto list = enumerate_indecomposables(g.algebra);
    CHECK(list.method == IndecList<Rationals>::Method::knitting);
    CHECK(list.complete);
    // type A_6 intervals minus the three containing the dead path 1->2->3->4
    CHECK(list.items.size() == 18);
    for (size_t i = 0; i < list.items.size(); ++i)
        for (size_t j = i + 1; j < list.items.size(); ++j)
            CHECK_FALSE(is_isomorphic(list.items[i], list.items[j]));
}

TEST_CASE("knitting reports incompleteness on a representation-infinite algebra")
{
    auto kron = std::get<AlgebraBundle<Rationals>>(
        parse_algebra_text("field Q\nvertices 1 2\narrow a : 1 -> 2\narrow b : 1 -> 2\n"));
    Caps caps;
    caps.enumeration = 24;
    auto list = enumerate_indecomposables(kron.algebra, caps);
    CHECK_FALSE(list.complete);
}

TEST_CASE("perp categories")
{
    auto c3 = fixtures::fix_c3();
    auto universe = enumerate_indecomposables(c3.algebra);
    auto m = c3.module("M");
    // n = 0: no condition
    CHECK(perp_category(m, 0, true, universe).size() == universe.items.size());
    // M = DA: the left perp is everything (maps into injectives never extend)
    CHECK(perp_category(coregular_module(c3.algebra), 3, false, universe).size() ==
          universe.items.size());
    // Prop 4.15(2) on FIX_C3: M^{perp_1} is contained in ^{perp_1}M
    auto right = perp_category(m, 1, true, universe);
    for (const auto& x : right) CHECK(ext_dim(x, m, 1) == 0);
}

TEST_CASE("Remark 4.4: almost 2-precluster but not 2-precluster")
{
    auto c3 = fixtures::fix_c3();
    auto m = c3.module("M");
    auto rep = is_almost_precluster(m, 2);
    CHECK(rep.verdict == ClassifierReport::Verdict::yes);
    REQUIRE(rep.conditions.size() == 4);
    for (const auto& c : rep.conditions) CHECK(c.ok);

    auto pre = is_precluster(m, 2);
    CHECK(pre.verdict == ClassifierReport::Verdict::no);

    // tau_2^- M escapes add M (Remark 4.4(1))
    auto closure = AddClosure<Rationals>::of(m);
    CHECK_FALSE(in_add(tau_n_minus(simple_module(c3.algebra, 0), 2), closure));
}

TEST_CASE("DA over a self-injective algebra is almost n-precluster for every n")
{
    auto si = std::get<AlgebraBundle<Rationals>>(
        parse_algebra_text("field Q\nvertices 1\narrow x : 1 -> 1\nrelation x*x\n"));
    auto da = coregular_module(si.algebra);
    for (int n = 1; n <= 3; ++n)
        CHECK(is_almost_precluster(da, n).verdict == ClassifierReport::Verdict::yes);
}

TEST_CASE("almost 1-cluster tilting is the whole module category")
{
    auto c3 = fixtures::fix_c3();
    auto universe = enumerate_indecomposables(c3.algebra);
    auto all = direct_sum(universe.items, c3.algebra).sum;
    auto rep = is_almost_cluster(all, 1);
    CHECK(rep.verdict == ClassifierReport::Verdict::yes);
    // while M of Remark 4.4 is not almost 2-cluster iff perp exceeds add M;
    // record whichever way the computation decides, consistently with Cor 4.14
    auto m = c3.module("M");
    auto rep2 = is_almost_cluster(m, 2);
    auto gld = classify_algebra(endo_algebra(m).lambda, 2).parameters.at("gld");
    bool lambda_gld_finite = gld.find("infinity") == std::string::npos;
    CHECK((rep2.verdict == ClassifierReport::Verdict::yes) == lambda_gld_finite);
}

TEST_CASE("classify_algebra verdicts")
{
    // self-injective: 1-Gorenstein, almost m-minimal Auslander-Gorenstein for all m
    auto si = std::get<AlgebraBundle<Rationals>>(
        parse_algebra_text("field Q\nvertices 1\narrow x : 1 -> 1\nrelation x*x\n"));
    for (int m = 0; m <= 2; ++m) {
        auto rep = classify_algebra(si.algebra, m);
        CHECK(rep.verdict == ClassifierReport::Verdict::yes);
    }

    // FIX_A2 is hereditary with gld 1: almost 0-Auslander (I-domdim >= 1)
    auto a2 = fixtures::fix_a2();
    auto rep = classify_algebra(a2.algebra, 0);
    CHECK(rep.parameters.at("gld") == "1");
    bool almost_auslander = false;
    for (const auto& c : rep.conditions)
        if (c.label == "almost-n-auslander") almost_auslander = c.ok;
    CHECK(almost_auslander);

    // Lambda = End(M) for the Remark 4.4 module: id = 3 = I-domdim,
    // almost 2-minimal Auslander-Gorenstein (Thm 4.8)
    auto c3 = fixtures::fix_c3();
    auto pres = endo_algebra(c3.module("M"));
    auto lrep = classify_algebra(pres.lambda, 2);
    CHECK(lrep.parameters.at("id-left") == "3");
    CHECK(lrep.parameters.at("I-domdim") == "3");
    CHECK(lrep.verdict == ClassifierReport::Verdict::yes);
    bool gor = false;
    for (const auto& c : lrep.conditions)
        if (c.label == "gorenstein") gor = c.ok;
    CHECK(gor);
}

TEST_CASE("gorenstein projectives")
{
    auto c3 = fixtures::fix_c3();
    auto pres = endo_algebra(c3.module("M"));
    // projectives are Gorenstein projective
    for (int v = 0; v < pres.lambda->n_vertices(); ++v)
        CHECK(is_gorenstein_projective(projective_module(pres.lambda, v)));
    // over a self-injective algebra everything is
    auto si = std::get<AlgebraBundle<Rationals>>(
        parse_algebra_text("field Q\nvertices 1\narrow x : 1 -> 1\nrelation x*x\n"));
    CHECK(is_gorenstein_projective(simple_module(si.algebra, 0)));
    // refused over non-Gorenstein input within the cap
    auto c3_alg = c3.algebra;
    Caps tight;
    tight.resolution = 6;
    // FIX_C3 itself is self-injective? No: P(1) is not injective, but id may
    // still be finite; simply check the call completes or raises cleanly.
    try {
        is_gorenstein_projective(simple_module(c3_alg, 0), tight);
    } catch (const precondition_error&) {
    }
}

TEST_CASE("remark 4.10 conditions report")
{
    auto si = std::get<AlgebraBundle<Rationals>>(
        parse_algebra_text("field Q\nvertices 1\narrow x : 1 -> 1\nrelation x*x\n"));
    auto rep = remark_410_conditions(coregular_module(si.algebra));
    CHECK(rep.verdict == ClassifierReport::Verdict::yes);
}

TEST_CASE("nakayama family enumeration")
{
    auto family = nakayama_family(Rationals{}, 3, 4);
    CHECK(!family.empty());
    for (const auto& alg : family) {
        CHECK(is_nakayama_presentation(alg));
        CHECK(enumerate_indecomposables(alg).complete);
    }
    // the family contains the commutative truncated polynomial algebras
    bool has_kx2 = false;
    for (const auto& alg : family)
        has_kx2 = has_kx2 || (alg->n_vertices() == 1 && alg->dim() == 2);
    CHECK(has_kx2);
}

TEST_CASE("sweep on FIX_C3 finds the Remark 4.4 module")
{
    auto c3 = fixtures::fix_c3();
    auto found = sweep_almost_precluster(c3.algebra, 2);
    REQUIRE(!found.empty());
    auto m = c3.module("M");
    bool has_m = false;
    for (const auto& inst : found) has_m = has_m || is_isomorphic(inst.module, m);
    CHECK(has_m);
    // every found instance really passes the definition-level classifier,
    // and satisfies Prop 4.6: add M = add(tau_n M + DA)
    for (const auto& inst : found) {
        auto rep = is_almost_precluster(inst.module, 2);
        CHECK(rep.verdict == ClassifierReport::Verdict::yes);
        auto closure = AddClosure<Rationals>::of(inst.module);
        auto tn = tau_n(inst.module, 2);
        auto gen = direct_sum<Rationals>({tn, coregular_module(c3.algebra)}, c3.algebra).sum;
        auto gen_closure = AddClosure<Rationals>::of(gen);
        CHECK(gen_closure.indecs.size() == closure.indecs.size());
        for (const auto& x : gen_closure.indecs) CHECK(in_add(x, closure));
    }
}
