#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "modcomb/series.hpp"

#include <random>

using namespace modcomb;
using namespace modcomb::series;

namespace {

Rat random_rat(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> num(-20, 20), den(1, 12);
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

ExpSeries random_mult(std::mt19937_64& rng, int order)
{
    ExpSeries f{{Rat(1)}};
    for (int k = 1; k <= order; ++k)
        f.coeffs.push_back(random_rat(rng));
    return f;
}

ExpSeries random_comp(std::mt19937_64& rng, int order)
{
    ExpSeries f{{Rat(0), Rat(1)}};
    for (int k = 2; k <= order; ++k)
        f.coeffs.push_back(random_rat(rng));
    return f;
}

Rat fact(int n) { return Rat(factorial(n)); }

} // namespace

TEST_CASE("multiplicative inverse, direct")
{
    const ExpSeries e{RatVec(9, Rat(1))};
    const auto g = mult_inverse_direct(e);
    for (int n = 0; n <= 8; ++n)
        CHECK(g.coeffs[n] == (n % 2 ? -1 : 1));

    const Rat a(3, 7);
    ExpSeries lin{RatVec(6, Rat(0))};
    lin.coeffs[0] = 1;
    lin.coeffs[1] = a;
    const auto h = mult_inverse_direct(lin);
    CHECK(h.coeffs[1] == -a);
    CHECK(h.coeffs[2] == 2 * a * a);
    CHECK(h.coeffs[3] == -6 * a * a * a);
    for (int n = 0; n <= 5; ++n) {
        Rat p = 1;
        for (int k = 0; k < n; ++k)
            p *= -a;
        CHECK(h.coeffs[n] == fact(n) * p);
    }

    ExpSeries one{RatVec(5, Rat(0))};
    one.coeffs[0] = 1;
    CHECK(mult_inverse_direct(one) == one);

    CHECK_THROWS_AS(mult_inverse_direct(ExpSeries{{Rat(2), Rat(1)}}), InputError);
    CHECK_THROWS_AS(mult_inverse_direct(ExpSeries{}), InputError);
    CHECK_THROWS_AS(mult_inverse_direct(ExpSeries{RatVec(14, Rat(1))}), InputError);
}

TEST_CASE("product with the inverse is one")
{
    std::mt19937_64 rng(1);
    for (int t = 0; t < 10; ++t) {
        const auto f = random_mult(rng, 8);
        const auto p = multiply(f, mult_inverse_direct(f));
        for (int n = 0; n <= 8; ++n)
            CHECK(p.coeffs[n] == (n == 0 ? 1 : 0));
    }
}

TEST_CASE("compositional inverse, direct")
{
    std::mt19937_64 rng(2);
    for (int t = 0; t < 20; ++t) {
        const auto f = random_comp(rng, 6);
        const auto g = comp_inverse_direct(f);
        const Rat &a2 = f.coeffs[2], &a3 = f.coeffs[3], &a4 = f.coeffs[4];
        CHECK(g.coeffs[2] == -a2);
        CHECK(g.coeffs[3] == -a3 + 3 * a2 * a2);
        CHECK(g.coeffs[4] == -a4 + 10 * a2 * a3 - 15 * a2 * a2 * a2);
        const auto x1 = compose(f, g), x2 = compose(g, f);
        for (int n = 0; n <= 6; ++n) {
            CHECK(x1.coeffs[n] == (n == 1 ? 1 : 0));
            CHECK(x2.coeffs[n] == (n == 1 ? 1 : 0));
        }
    }

    // e^x - 1 inverts to log(1 + x).
    ExpSeries em1{RatVec(10, Rat(1))};
    em1.coeffs[0] = 0;
    const auto lg = comp_inverse_direct(em1);
    for (int n = 1; n <= 9; ++n)
        CHECK(lg.coeffs[n] == (n % 2 ? 1 : -1) * fact(n - 1));

    ExpSeries x{RatVec(6, Rat(0))};
    x.coeffs[1] = 1;
    CHECK(comp_inverse_direct(x) == x);
    CHECK(comp_inverse_strata(x) == x);

    CHECK_THROWS_AS(comp_inverse_direct(ExpSeries{{Rat(0), Rat(2), Rat(1)}}), InputError);
    CHECK_THROWS_AS(comp_inverse_strata(ExpSeries{{Rat(1), Rat(1)}}), InputError);
}

TEST_CASE("permutohedral formula, low orders")
{
    std::mt19937_64 rng(3);
    for (int t = 0; t < 10; ++t) {
        const auto f = random_mult(rng, 3);
        const auto g = mult_inverse_permutohedral(f);
        const Rat &a1 = f.coeffs[1], &a2 = f.coeffs[2], &a3 = f.coeffs[3];
        CHECK(g.coeffs[1] == -a1);
        CHECK(g.coeffs[2] == -a2 + 2 * a1 * a1);
        CHECK(g.coeffs[3] == -a3 + 6 * a1 * a2 - 6 * a1 * a1 * a1);
    }
    CHECK_THROWS_AS(mult_inverse_permutohedral(ExpSeries{{Rat(0)}}), InputError);
}

TEST_CASE("strata formula in the minus-sign convention")
{
    // f = x - sum a_n x^n / n! gives b_n = sum over strata of prod a_{val-1}.
    std::mt19937_64 rng(4);
    for (int t = 0; t < 10; ++t) {
        auto f = random_comp(rng, 4);
        const Rat a2 = -f.coeffs[2], a3 = -f.coeffs[3], a4 = -f.coeffs[4];
        const auto g = comp_inverse_strata(f);
        CHECK(g.coeffs[3] == a3 + 3 * a2 * a2);
        CHECK(g.coeffs[4] == a4 + 10 * a2 * a3 + 15 * a2 * a2 * a2);
    }
}

TEST_CASE("strata-based inverses equal the direct ones")
{
    std::mt19937_64 rng(5);
    for (int t = 0; t < 30; ++t) {
        const auto f = random_mult(rng, 8);
        CHECK(mult_inverse_permutohedral(f) == mult_inverse_direct(f));
        const auto g = random_comp(rng, 8);
        CHECK(comp_inverse_strata(g) == comp_inverse_direct(g));
    }
    const auto f = random_mult(rng, max_order);
    CHECK(mult_inverse_permutohedral(f) == mult_inverse_direct(f));
    const auto g = random_comp(rng, max_order);
    CHECK(comp_inverse_strata(g) == comp_inverse_direct(g));
}

TEST_CASE("inverting twice returns the series")
{
    std::mt19937_64 rng(6);
    for (int t = 0; t < 10; ++t) {
        const auto f = random_mult(rng, 8);
        CHECK(mult_inverse_direct(mult_inverse_direct(f)) == f);
        const auto g = random_comp(rng, 8);
        CHECK(comp_inverse_direct(comp_inverse_direct(g)) == g);
    }
}

TEST_CASE("ordinary views")
{
    const ExpSeries f{{Rat(1), Rat(2), Rat(6)}};
    CHECK(f.ordinary() == RatVec{Rat(1), Rat(2), Rat(3)});
    CHECK(ExpSeries::from_ordinary(f.ordinary()) == f);
}

TEST_CASE("polytope algebra")
{
    CHECK(normalize({0, 2, 0, 1}) == Word{0, 1, 2});
    CHECK((generator(0) * generator(0)) == generator(0));
    CHECK((generator(1) * generator(0)).to_string() == "P0*P1");
    CHECK((generator(1) + generator(1)).to_string() == "2*P1");
    CHECK((generator(1) + PolySum({1}, -1)).terms().empty());
    CHECK_THROWS_AS(generator(-1), InputError);
}

TEST_CASE("differential")
{
    CHECK(differential(generator(1)) == PolySum({0}, 2));
    CHECK(differential(generator(2)) == PolySum({0, 1}, 6));
    CHECK(differential(generator(1) * generator(1)) == PolySum({0, 1}, 4));
    CHECK(differential(generator(0)).terms().empty());

    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> gen(0, 5), coef(-4, 4);
    for (int t = 0; t < 20; ++t) {
        PolySum p, q;
        for (int k = 0; k < 3; ++k) {
            p += PolySum({gen(rng), gen(rng)}, coef(rng));
            q += PolySum({gen(rng)}, coef(rng));
        }
        CHECK(differential(p * q) == differential(p) * q + p * differential(q));
    }
    for (int m = 1; m <= max_genfun_m; ++m)
        CHECK(differential(generator(m)) == generating_function(m).coeffs[1]);
}

TEST_CASE("face generating functions")
{
    const auto f1 = generating_function(1);
    CHECK(f1.coeffs[0] == generator(1));
    CHECK(f1.coeffs[1] == PolySum({0}, 2));
    CHECK(euler_interior(1) == -1);

    const auto f2 = generating_function(2);
    CHECK(evaluate(f2.coeffs[1]) == 6);
    CHECK(evaluate(f2.coeffs[2]) == 6);
    CHECK(euler_interior(2) == 1);

    const auto f3 = generating_function(3);
    CHECK(evaluate(f3.coeffs[1]) == 14);
    CHECK(evaluate(f3.coeffs[2]) == 36);
    CHECK(evaluate(f3.coeffs[3]) == 24);
    CHECK(euler_interior(3) == -1);

    for (int m = 0; m <= max_genfun_m; ++m)
        CHECK(euler_interior(m) == (m % 2 ? -1 : 1));
    CHECK_THROWS_AS(generating_function(9), InputError);
}
