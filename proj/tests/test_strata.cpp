#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "modcomb/strata.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

using namespace modcomb;
using namespace modcomb::strata;

namespace {

RatVec v(std::initializer_list<const char*> xs)
{
    RatVec out;
    for (auto x : xs)
        out.push_back(parse_rat(x));
    return out;
}

RatVec lm_weights(int n, const Rat& eps)
{
    RatVec b(n, eps);
    b[0] = b[1] = 1;
    return b;
}

// Rooted trees with k labelled leaves and no unary vertices, by summing over
// explicit set partitions of the leaves at the root.
BigInt schroeder(int k)
{
    static std::map<int, BigInt> memo;
    if (k == 1)
        return 1;
    if (auto it = memo.find(k); it != memo.end())
        return it->second;
    BigInt total = 0;
    std::vector<int> block(k, 0);
    std::function<void(int, int)> rec = [&](int i, int used) {
        if (i == k) {
            if (used < 2)
                return;
            std::vector<int> sizes(used, 0);
            for (int b : block)
                ++sizes[b];
            BigInt prod = 1;
            for (int s : sizes)
                prod *= schroeder(s);
            total += prod;
            return;
        }
        for (int b = 0; b <= used; ++b) {
            block[i] = b;
            rec(i + 1, std::max(used, b + 1));
        }
    };
    rec(0, 0);
    return memo[k] = total;
}

BigInt fubini_oracle(int n)
{
    std::vector<BigInt> f(n + 1, BigInt(0));
    f[0] = 1;
    for (int m = 1; m <= n; ++m)
        for (int k = 1; k <= m; ++k)
            f[m] += binomial(m, k) * f[m - k];
    return f[n];
}

} // namespace

TEST_CASE("product types and open Euler characteristics")
{
    CHECK(product_type({3, 4}) == "M04xM03");
    CHECK(product_type({3, 3, 3}) == "M03xM03xM03");
    CHECK(chi_open(3) == 1);
    CHECK(chi_open(4) == -1);
    CHECK(chi_open(5) == 2);
    CHECK(chi_open(6) == -6);
}

TEST_CASE("DM strata totals match the rooted-tree oracle")
{
    for (int n = 4; n <= 8; ++n) {
        const auto trees = dm_strata(n);
        CHECK(BigInt(static_cast<long>(trees.size())) == schroeder(n - 1));
        CHECK(census_of(n, trees).by_type == dm_census(n).by_type);
    }
    for (int n = 9; n <= 10; ++n)
        CHECK(dm_census(n).total == schroeder(n - 1));
    CHECK(dm_strata(6).size() == 236);
    CHECK_THROWS_AS(dm_strata(9), InputError);
    CHECK_THROWS_AS(dm_strata(3), InputError);
    CHECK_THROWS_AS(dm_census(14), InputError);
}

TEST_CASE("DM census for n = 4, 5")
{
    const auto c4 = dm_census(4);
    CHECK(c4.total == 4);
    CHECK(c4.by_codim.at(1) == 3);

    const auto c5 = dm_census(5);
    CHECK(c5.by_codim.at(1) == 10);
    CHECK(c5.by_codim.at(2) == 15);
    CHECK(c5.by_type.at("M04xM03") == 10);
    CHECK(c5.by_type.at("M03xM03xM03") == 15);
    CHECK(c5.by_type.at("M05") == 1);
}

TEST_CASE("stable trees are well formed")
{
    for (const auto& t : dm_strata(6)) {
        // valences sum to n + 2 * edges
        CHECK(std::accumulate(t.valences.begin(), t.valences.end(), 0) == 6 + 2 * t.codim());
        CHECK(static_cast<int>(t.valences.size()) == t.codim() + 1);
        CHECK(std::all_of(t.valences.begin(), t.valences.end(), [](int x) { return x >= 3; }));
        for (const auto& c : t.clusters) {
            CHECK(c.size() >= 2);
            CHECK(c.size() <= 4);
            CHECK(c.back() <= 5);
        }
    }
}

TEST_CASE("Euler characteristic identity")
{
    const std::vector<long> chi{2, 7, 34, 213, 1630};
    for (int n = 4; n <= 8; ++n)
        CHECK(chi_dm(n) == chi[n - 4]);
    for (int n = 4; n <= 13; ++n)
        CHECK(dm_census(n).euler_sum == chi_dm(n));
}

TEST_CASE("reduction divisors")
{
    SUBCASE("n = 5")
    {
        const auto d = reduction_divisors(RatVec(5, Rat(1)), lm_weights(5, Rat(1, 4)));
        REQUIRE(d.size() == 1);
        CHECK(d[0].I == Subset{3, 4, 5});
        CHECK(d[0].J == Subset{1, 2});
        CHECK(d[0].type() == "F4xF3");
        CHECK(d[0].b_sum_i == Rat(3, 4));
    }
    SUBCASE("n = 6, 7")
    {
        CHECK(reduction_divisors(RatVec(6, Rat(1)), lm_weights(6, Rat(1, 10))).size() == 5);
        const auto d7 = reduction_divisors(RatVec(7, Rat(1)), lm_weights(7, Rat(1, 20)));
        std::map<std::size_t, int> by_size;
        for (const auto& d : d7)
            ++by_size[d.I.size()];
        CHECK(d7.size() == 16);
        CHECK(by_size == std::map<std::size_t, int>{{3, 10}, {4, 5}, {5, 1}});
    }
    SUBCASE("heavier light points contract fewer divisors")
    {
        // 3 * 2/5 > 1: no triple of light points is contracted.
        CHECK(reduction_divisors(RatVec(6, Rat(1)), lm_weights(6, Rat(2, 5))).empty());
    }
    SUBCASE("errors")
    {
        CHECK_THROWS_AS(reduction_divisors(lm_weights(5, Rat(1, 4)), RatVec(5, Rat(1))), InputError);
        CHECK_THROWS_AS(reduction_divisors(RatVec(5, Rat(1)), lm_weights(6, Rat(1, 4))), InputError);
        CHECK_THROWS_AS(reduction_divisors(RatVec(5, Rat(1)), v({"1", "1", "0", "1/4", "1/4"})), InputError);
    }
}

TEST_CASE("Losev-Manin chains n = 4")
{
    const auto c = lm_census(4);
    CHECK(c.total == 4);
    CHECK(c.by_dim.at(1) == 1);
    CHECK(c.by_dim.at(0) == 3);
    CHECK(c.euler_sum == 2);
}

TEST_CASE("Losev-Manin chains n = 5")
{
    const auto c = lm_census(5);
    CHECK(c.by_dim.at(2) == 1);
    CHECK(c.by_dim.at(1) == 9);
    CHECK(c.by_dim.at(0) == 13);
    CHECK(c.euler_sum == 6);
    CHECK(c.extension_by_dim == std::map<int, long>{{0, 1}, {1, 3}});
    CHECK(c.toric_by_dim == std::map<int, long>{{0, 12}, {1, 6}});
    CHECK(c.orbits_by_dim == std::map<int, long>{{0, 6}, {1, 6}});

    int k1 = 0;
    for (const auto& ch : lm_strata(5)) {
        if (ch.open())
            continue;
        const auto o = classify_outgrowth(ch);
        CHECK((o == Outgrowth::EXTENSION) == (ch.k() == 1));
        k1 += ch.k() == 1;
    }
    CHECK(k1 == 4);
}

TEST_CASE("chain invariants")
{
    for (int n = 4; n <= 7; ++n) {
        CHECK(lm_census(n).euler_sum == factorial(n - 2));
        for (const auto& ch : lm_strata(n)) {
            int labels = 0;
            for (const auto& b : ch.blocks)
                for (const auto& cl : b)
                    labels += static_cast<int>(cl.size());
            CHECK(labels == n - 2);
            CHECK(ch.dim() <= n - 3);
        }
    }
    const LMChain c{{{{3}, {4, 5}}, {{6}}}};
    CHECK(c.to_string() == "({3},{4,5})|({6})");
    CHECK(c.dim() == 1);
    CHECK(c.type() == "M04xM03");
    CHECK_FALSE(c.coincidence_free());
    CHECK_THROWS_AS(lm_strata(9), InputError);
}

TEST_CASE("degeneration labels")
{
    const LMChain c{{{{3}}, {{4, 5}}}};
    const auto d = degeneration_label(c, 5);
    CHECK(d.to_string() == "001");
    CHECK(d.at(4, 3) == Degeneration::INF);
    CHECK(classify_outgrowth(d) == Outgrowth::TORIC);
    CHECK(multiplicatively_consistent(d));

    const DegenerationLabel bad{5, {Degeneration::ONE, Degeneration::GENERIC, Degeneration::ONE}};
    CHECK_FALSE(multiplicatively_consistent(bad));
    const DegenerationLabel zero_inf{5, {Degeneration::ZERO, Degeneration::ONE, Degeneration::INF}};
    CHECK(multiplicatively_consistent(zero_inf));

    const DegenerationLabel open{5, {Degeneration::GENERIC, Degeneration::GENERIC, Degeneration::GENERIC}};
    CHECK_THROWS_AS(classify_outgrowth(open), InputError);
    CHECK_THROWS_AS(classify_outgrowth(LMChain{{{{3}, {4}, {5}}}}), InputError);
    CHECK(classify_outgrowth(LMChain{{{{3, 4}, {5}}}}) == Outgrowth::EXTENSION);
}

TEST_CASE("closure oracle reproduces the chain model")
{
    std::map<std::string, int> chains;
    for (const auto& ch : lm_strata(5))
        chains[degeneration_label(ch, 5).to_string()] = ch.dim();
    std::map<std::string, int> closure;
    for (const auto& [label, dim] : closure_oracle_n5())
        if (dim >= 0)
            closure[label] = dim;
    CHECK(closure_oracle_n5().size() == 64);
    CHECK(closure.size() == 23);
    CHECK(closure == chains);
}

TEST_CASE("permutohedron faces")
{
    CHECK(permutohedron_faces(2) == std::vector<BigInt>{6, 6, 1});
    CHECK(permutohedron_faces(3) == std::vector<BigInt>{24, 36, 14, 1});
    for (int m = 0; m <= max_face_m; ++m)
        CHECK(fubini(m + 1) == fubini_oracle(m + 1));
    CHECK(fubini(4) == 75);
    for (int size = 1; size <= 6; ++size)
        CHECK(BigInt(static_cast<long>(ordered_set_partitions(size).size())) == fubini_oracle(size));
    const auto types = permutohedron_face_types(2);
    const auto edge = std::find_if(types.begin(), types.end(),
                                   [](const FaceType& t) { return t.composition == std::vector<int>{2, 1}; });
    REQUIRE(edge != types.end());
    CHECK(edge->dim == 1);
    CHECK(edge->count == 3);
}

TEST_CASE("coincidence-free chains are the faces of the permutohedron")
{
    for (int n = 4; n <= 7; ++n) {
        std::map<int, BigInt> free_by_dim;
        for (const auto& ch : lm_strata(n))
            if (ch.coincidence_free())
                free_by_dim[ch.dim()] += 1;
        const auto f = permutohedron_faces(n - 3);
        for (std::size_t d = 0; d < f.size(); ++d)
            CHECK(free_by_dim[static_cast<int>(d)] == f[d]);
    }
}

TEST_CASE("building set")
{
    SUBCASE("n = 6: every pair meets in the common point")
    {
        const auto w = wonderful_building_set(6);
        CHECK(w.generators.size() == 4);
        const Partition S{{3, 4, 5, 6}};
        for (const auto& [pair, e] : w.pair_meet)
            CHECK(w.elements[e] == S);
        CHECK(one_propagation(6, w.generators) == S);
    }
    SUBCASE("n = 7")
    {
        const auto w = wonderful_building_set(7);
        CHECK(w.generators.size() == 10);
        std::map<Partition, int> meets;
        for (const auto& [pair, e] : w.pair_meet)
            ++meets[w.elements[e]];
        CHECK(meets.size() == 6);
        CHECK(meets.at(Partition{{3, 4, 5, 6, 7}}) == 15);
        for (const auto& [p, count] : meets)
            if (p.size() == 2)
                CHECK(count == 6);
    }
    SUBCASE("one propagation")
    {
        CHECK(one_propagation(7, {{3, 4, 5}}) == Partition{{3, 4, 5}, {6}, {7}});
        CHECK(one_propagation(7, {{3, 4, 5}, {5, 6, 7}}) == Partition{{3, 4, 5, 6, 7}});
        CHECK_THROWS_AS(one_propagation(5, {{1, 3, 4}}), InputError);
    }
}

TEST_CASE("building-set divisors match the reduction divisors")
{
    for (int n = 5; n <= 7; ++n) {
        std::map<std::string, int> a, b;
        for (const auto& d : wonderful_divisor_census(n))
            ++a[d.type()];
        for (const auto& d : reduction_divisors(RatVec(n, Rat(1)), lm_weights(n, Rat(1, 2 * n))))
            ++b[d.type()];
        CHECK(a == b);
    }
    const auto w7 = wonderful_divisor_census(7);
    CHECK(w7.size() == 16);
    CHECK(std::count_if(w7.begin(), w7.end(), [](const auto& d) { return d.depth == 1; }) == 10);
    CHECK(std::count_if(w7.begin(), w7.end(), [](const auto& d) { return d.type() == "F4xF5"; }) == 10);
    CHECK_THROWS_AS(wonderful_divisor_census(8), InputError);
}
