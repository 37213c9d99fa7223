#include <catch2/catch_amalgamated.hpp>

#include "arthom/matrix.hpp"
#include "arthom/poly.hpp"

using namespace arthom;

namespace {

Mat<Rationals> qmat(std::initializer_list<std::initializer_list<long>> rows)
{
    Rationals f;
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows.begin()->size()) : 0;
    Mat<Rationals> m(f, r, c);
    int i = 0;
    for (auto& row : rows) {
        int j = 0;
        for (auto v : row) m.at(i, j++) = mpq_class(v);
        ++i;
    }
    return m;
}

}  // namespace

TEST_CASE("rank basics")
{
    Rationals q;
    CHECK(Mat<Rationals>(q, 0, 0).rank() == 0);

    PrimeField f7(7);
    CHECK(Mat<PrimeField>::identity(f7, 2).rank() == 2);

    // [[1,2],[2,4]] has rank 1 over Q (rows proportional)
    CHECK(qmat({{1, 2}, {2, 4}}).rank() == 1);
}

TEST_CASE("kernel basis")
{
    Rationals q;
    CHECK(Mat<Rationals>::identity(q, 3).kernel_basis().cols() == 0);

    Mat<Rationals> z(q, 2, 3);
    Mat<Rationals> k = z.kernel_basis();
    CHECK(k == Mat<Rationals>::identity(q, 3));

    // [[1,1]] over GF(2): the kernel is spanned by (1,1)
    PrimeField f2(2);
    Mat<PrimeField> m(f2, 1, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 1;
    Mat<PrimeField> kb = m.kernel_basis();
    REQUIRE(kb.cols() == 1);
    CHECK(kb.at(0, 0) == 1);
    CHECK(kb.at(1, 0) == 1);
}

TEST_CASE("solve")
{
    Rationals q;
    Mat<Rationals> id = Mat<Rationals>::identity(q, 2);
    Mat<Rationals> b = qmat({{5}, {7}});
    auto x = id.solve(b);
    REQUIRE(x);
    CHECK(*x == b);

    Mat<Rationals> zero(q, 2, 2);
    auto xz = zero.solve(Mat<Rationals>(q, 2, 1));
    REQUIRE(xz);
    CHECK(xz->is_zero());

    // [[2]] x = [[3]] -> x = 3/2
    Mat<Rationals> two = qmat({{2}});
    auto half = two.solve(qmat({{3}}));
    REQUIRE(half);
    CHECK(half->at(0, 0) == mpq_class(3, 2));

    // inconsistent system
    Mat<Rationals> m = qmat({{1, 1}, {1, 1}});
    CHECK_FALSE(m.solve(qmat({{1}, {2}})).has_value());
}

TEST_CASE("rank-nullity and exact identities on random matrices")
{
    PrimeField f101(101);
    unsigned long long seed = 12345;
    auto rnd = [&]() {
        seed ^= seed << 13;
        seed ^= seed >> 7;
        seed ^= seed << 17;
        return static_cast<long long>(seed % 11) - 5;
    };
    for (int trial = 0; trial < 25; ++trial) {
        int r = 1 + trial % 5, c = 1 + (trial * 7) % 6;
        Mat<PrimeField> m(f101, r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m.at(i, j) = f101.from_int(rnd());
        Mat<PrimeField> k = m.kernel_basis();
        CHECK(m.rank() + k.cols() == c);
        CHECK((m * k).is_zero());
        // solve on a consistent right-hand side
        Mat<PrimeField> x(f101, c, 1);
        for (int j = 0; j < c; ++j) x.at(j, 0) = f101.from_int(rnd());
        auto sol = m.solve(m * x);
        REQUIRE(sol);
        CHECK(m * *sol == m * x);
    }
}

TEST_CASE("determinism: identical inputs give identical echelon outputs")
{
    Mat<Rationals> m = qmat({{2, 4, 1}, {1, 2, 3}, {3, 6, 4}});
    CHECK(m.kernel_basis().to_string() == m.kernel_basis().to_string());
    CHECK(m.col_space_basis().to_string() == m.col_space_basis().to_string());
}

TEST_CASE("quotient maps")
{
    Mat<Rationals> sub = qmat({{1, 0}, {0, 1}, {0, 0}});  // span(e1, e2) in k^3
    auto qm = quotient_maps(sub);
    CHECK(qm.projection.rows() == 1);
    CHECK((qm.projection * sub).is_zero());
    CHECK((qm.projection * qm.section) == Mat<Rationals>::identity(Rationals{}, 1));
}

TEST_CASE("min poly and rational roots")
{
    Rationals q;
    Mat<Rationals> m = qmat({{2, 0}, {0, 3}});
    Poly<Rationals> mu = min_poly(m);
    CHECK(mu.degree() == 2);
    CHECK(q.is_zero(mu.eval(mpq_class(2))));
    CHECK(q.is_zero(mu.eval(mpq_class(3))));
    auto roots = rational_roots(mu);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == 2);
    CHECK(roots[1] == 3);

    // nilpotent block: min poly x^2
    Mat<Rationals> n = qmat({{0, 1}, {0, 0}});
    CHECK(min_poly(n).degree() == 2);
    CHECK(rational_roots(min_poly(n)) == std::vector<mpq_class>{mpq_class(0)});
}

TEST_CASE("gf roots")
{
    PrimeField f7(7);
    // x^2 - 1 over GF(7): roots 1 and 6
    Poly<PrimeField> p(f7, {f7.from_int(-1), 0, 1});
    auto roots = field_roots(p);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == 1);
    CHECK(roots[1] == 6);
}

TEST_CASE("squarefree parts")
{
    Rationals q;
    // (x-1)^2 (x-2): parts are [x-2, x-1]
    Poly<Rationals> x = Poly<Rationals>::x(q);
    Poly<Rationals> one = Poly<Rationals>::constant(q, 1);
    Poly<Rationals> p = (x - one) * (x - one) * (x - one.scaled(2));
    auto parts = squarefree_parts(p);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].degree() == 1);  // multiplicity-1 part: x-2
    CHECK(parts[1].degree() == 1);  // multiplicity-2 part: x-1
}
