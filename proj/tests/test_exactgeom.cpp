#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "modcomb/exactgeom.hpp"

using namespace modcomb;
using namespace modcomb::geom;

namespace {

RatVec v(std::initializer_list<const char*> xs)
{
    RatVec out;
    for (auto x : xs)
        out.push_back(parse_rat(x));
    return out;
}

HPolytope hypersimplex(std::size_t n)
{
    HPolytope p(n, {});
    p.add(eq(RatVec(n, Rat(1)), Rat(2)));
    for (std::size_t i = 0; i < n; ++i) {
        RatVec e(n, Rat(0));
        e[i] = 1;
        p.add(ge(e, Rat(0)));
        p.add(le(e, Rat(1)));
    }
    return p;
}

} // namespace

TEST_CASE("rationals parse and print in lowest terms")
{
    CHECK(to_string(parse_rat("6/4")) == "3/2");
    CHECK(to_string(parse_rat(" -2/1 ")) == "-2");
    CHECK(to_string(parse_rat("+7")) == "7");
    CHECK_THROWS_AS(parse_rat("1/0"), InputError);
    CHECK_THROWS_AS(parse_rat("1/-2"), InputError);
    CHECK_THROWS_AS(parse_rat("0.5"), InputError);
    CHECK_THROWS_AS(parse_rat(""), InputError);
    CHECK(parse_rat_list("1/2,2/3,5/18").size() == 3);
    CHECK(binomial(7, 3) == 35);
    CHECK(factorial(5) == 120);
}

TEST_CASE("lp_feasible returns exact witnesses")
{
    const std::vector<LinConstraint> seg{eq(v({"1", "1"}), 1), ge(v({"1", "0"}), 0), ge(v({"0", "1"}), 0)};
    auto w = lp_feasible(seg, 2);
    REQUIRE(w);
    for (const auto& c : seg)
        CHECK(c.satisfied_by(*w));

    CHECK_FALSE(lp_feasible({ge(v({"1"}), 1), le(v({"1"}), 0)}, 1));

    auto d5 = lp_feasible(hypersimplex(5));
    REQUIRE(d5);
    CHECK(hypersimplex(5).contains(*d5));

    CHECK_THROWS_AS(lp_feasible({ge(v({"1", "0"}), 1), le(v({"1"}), 0)}, 2), InputError);
}

TEST_CASE("strict constraints are decided exactly")
{
    // 0 < x < 1 with x = 1 is infeasible; 0 < x <= 1 with x = 1 is not.
    CHECK_FALSE(lp_feasible({gt(v({"1"}), 0), lt(v({"1"}), 1), eq(v({"1"}), 1)}, 1));
    auto w = lp_feasible({gt(v({"1"}), 0), le(v({"1"}), 1), eq(v({"1"}), 1)}, 1);
    REQUIRE(w);
    CHECK((*w)[0] == 1);
    // x + y < 1, x > 1/2, y > 1/2 is empty.
    CHECK_FALSE(lp_feasible({lt(v({"1", "1"}), 1), gt(v({"1", "0"}), Rat(1, 2)), gt(v({"0", "1"}), Rat(1, 2))}, 2));
}

TEST_CASE("affine_dimension")
{
    const auto d5 = hypersimplex(5);
    CHECK(affine_dimension(d5) == 4);
    CHECK(affine_dimension(d5.with(eq(v({"1", "0", "1", "0", "0"}), 1))) == 3);
    CHECK(affine_dimension(HPolytope(1, {ge(v({"1"}), 1), le(v({"1"}), 0)})) == -1);
    // Implicit equality: x <= 0, x >= 0 inside a square gives a segment.
    HPolytope sq(2, {ge(v({"1", "0"}), 0), le(v({"1", "0"}), 0), ge(v({"0", "1"}), 0), le(v({"0", "1"}), 1)});
    CHECK(affine_dimension(sq) == 1);
    // Vertex of the hypersimplex.
    auto vtx = d5.with(eq(v({"1", "1", "0", "0", "0"}), 2));
    CHECK(affine_dimension(vtx) == 0);
    // Adding constraints never raises dimension.
    CHECK(affine_dimension(d5.with(le(v({"1", "1", "0", "0", "0"}), 1))) == 4);
}

TEST_CASE("relative_interior_point")
{
    HPolytope sq(2, {ge(v({"1", "0"}), 0), le(v({"1", "0"}), 1), ge(v({"0", "1"}), 0), le(v({"0", "1"}), 1)});
    auto p = relative_interior_point(sq);
    REQUIRE(p);
    for (const auto& x : *p) {
        CHECK(x > 0);
        CHECK(x < 1);
    }

    HPolytope seg(2, {eq(v({"1", "1"}), 1), ge(v({"1", "0"}), 0), ge(v({"0", "1"}), 0)});
    auto q = relative_interior_point(seg);
    REQUIRE(q);
    CHECK((*q)[0] > 0);
    CHECK((*q)[0] < 1);
    CHECK((*q)[0] + (*q)[1] == 1);

    CHECK_FALSE(relative_interior_point(HPolytope(1, {ge(v({"1"}), 1), le(v({"1"}), 0)})));

    // A face of the hypersimplex: interior point is strictly inside all
    // non-implied inequalities.
    auto face = hypersimplex(5).with(eq(v({"1", "0", "1", "0", "0"}), 1));
    auto r = relative_interior_point(face);
    REQUIRE(r);
    CHECK((*r)[0] + (*r)[2] == 1);
    for (const auto& x : *r) {
        CHECK(x > 0);
        CHECK(x < 1);
    }
}

TEST_CASE("implies")
{
    const auto d5 = hypersimplex(5);
    CHECK(implies(d5, le(v({"1", "1", "1", "0", "0"}), 3)));
    CHECK_FALSE(implies(d5, le(v({"1", "1", "0", "0", "0"}), 1)));
    CHECK(implies(d5, le(v({"1", "1", "0", "0", "0"}), 2)));
    CHECK_FALSE(implies(d5, lt(v({"1", "1", "0", "0", "0"}), 2)));
    CHECK(implies(d5, eq(v({"1", "1", "1", "1", "1"}), 2)));
    CHECK(implies(HPolytope(1, {ge(v({"1"}), 1), le(v({"1"}), 0)}), eq(v({"1"}), 7)));
}

TEST_CASE("canonical form ignores order and scaling")
{
    HPolytope a(2, {le(v({"2", "4"}), 6), eq(v({"-1", "1"}), 0)});
    HPolytope b(2, {eq(v({"3", "-3"}), 0), le(v({"1", "2"}), 3)});
    CHECK(a == b);
    HPolytope c(2, {le(v({"1", "2"}), 4), eq(v({"1", "-1"}), 0)});
    CHECK_FALSE(a == c);
}

TEST_CASE("affine system rank and null space")
{
    AffineSystem s(3);
    CHECK(s.add(v({"1", "1", "0"}), 1));
    CHECK_FALSE(s.add(v({"2", "2", "0"}), 2));
    CHECK(s.consistent());
    CHECK(s.implies(v({"3", "3", "0"}), 3));
    CHECK(s.null_basis().size() == 2);
    s.add(v({"1", "1", "0"}), 2);
    CHECK_FALSE(s.consistent());
    CHECK(affine_rank({v({"0", "0"}), v({"1", "1"}), v({"2", "2"})}) == 1);
}
