#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "modcomb/hypersimplex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

using namespace modcomb;
using namespace modcomb::hyper;

namespace {

RatVec v(std::initializer_list<const char*> xs)
{
    RatVec out;
    for (auto x : xs)
        out.push_back(parse_rat(x));
    return out;
}

// Plane subsets in arrangement order, built from scratch.
std::vector<unsigned> oracle_planes(int n)
{
    std::vector<unsigned> out;
    for (int k = 2; 2 * k <= n; ++k) {
        std::vector<unsigned> level;
        for (unsigned m = 0; m < (1u << n); ++m)
            if (std::popcount(m) == k && (2 * k < n || (m & 1u)))
                level.push_back(m);
        // lexicographic order of the sorted element lists
        std::sort(level.begin(), level.end(), [&](unsigned a, unsigned b) {
            for (int i = 0; i < n; ++i) {
                const bool ia = a >> i & 1u, ib = b >> i & 1u;
                if (ia != ib)
                    return ia;
            }
            return false;
        });
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

// Rank of a 0/1 row set over Q by plain elimination on doubles-free rationals.
int oracle_rank(std::vector<RatVec> rows)
{
    int rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][c] == 0)
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != static_cast<std::size_t>(rank) && rows[r][c] != 0) {
                const Rat f = rows[r][c] / rows[rank][c];
                for (std::size_t k = 0; k < cols; ++k)
                    rows[r][k] -= f * rows[rank][k];
            }
        ++rank;
    }
    return rank;
}

// Sign vectors met by grid points k/D of the hypersimplex, with the face
// dimension of each, from the ranks of the vanishing rows.
std::map<std::string, int> grid_oracle(int n, int D)
{
    const auto planes = oracle_planes(n);
    std::map<std::string, int> seen;
    std::vector<int> k(n);
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == n - 1) {
            if (left > D)
                return;
            k[i] = left;
            std::string s;
            std::vector<RatVec> zero{RatVec(n, Rat(1))};
            for (unsigned m : planes) {
                int t = 0;
                for (int j = 0; j < n; ++j)
                    if (m >> j & 1u)
                        t += k[j];
                s += t < D ? '-' : t > D ? '+' : '0';
                if (t == D) {
                    RatVec row(n, Rat(0));
                    for (int j = 0; j < n; ++j)
                        row[j] = (m >> j) & 1u;
                    zero.push_back(row);
                }
            }
            for (int j = 0; j < n; ++j)
                s += k[j] == 0 ? '0' : '+';
            for (int j = 0; j < n; ++j)
                s += k[j] == D ? '0' : '-';
            if (seen.count(s))
                return;
            for (int j = 0; j < n; ++j)
                if (k[j] == 0 || k[j] == D) {
                    RatVec row(n, Rat(0));
                    row[j] = 1;
                    zero.push_back(row);
                }
            seen[s] = n - oracle_rank(zero);
            return;
        }
        for (int x = 0; x <= std::min(D, left); ++x) {
            k[i] = x;
            self(self, i + 1, left - x);
        }
    };
    rec(rec, 0, 2 * D);
    return seen;
}

std::map<std::string, int> engine_faces(int n)
{
    std::map<std::string, int> out;
    for (const auto& c : enumerate_chambers(n))
        out[c.signs] = c.dim;
    return out;
}

} // namespace

TEST_CASE("arrangement planes")
{
    const auto a = build_arrangement(5);
    CHECK(a.pi_count == 10);
    CHECK(a.hyperplanes.size() == 20);
    CHECK(a.hyperplanes[0].label() == "x12=1");
    const auto a6 = build_arrangement(6);
    CHECK(a6.pi_count == 15 + 10); // 3-subsets up to complement
    CHECK(a6.pi_index({4, 5, 6}) == a6.pi_index({1, 2, 3}));
    CHECK(a6.pi_sign({4, 5, 6}, a6.sign_vector(v({"1/2", "1/2", "1/2", "1/6", "1/6", "1/6"}))) == -1);
    CHECK_THROWS_AS(build_arrangement(9), InputError);
    CHECK_THROWS_AS(build_arrangement(2), InputError);
}

TEST_CASE("chamber census matches the grid oracle")
{
    SUBCASE("n = 4")
    {
        const auto grid = grid_oracle(4, 12);
        CHECK(engine_faces(4) == grid);
        CHECK(grid.size() == 53);
    }
    SUBCASE("n = 5")
    {
        const auto grid = grid_oracle(5, 12);
        CHECK(engine_faces(5) == grid);
        std::map<int, int> by_dim;
        for (const auto& [s, d] : grid)
            ++by_dim[d];
        CHECK(by_dim == std::map<int, int>{{0, 20}, {1, 110}, {2, 240}, {3, 225}, {4, 76}});
    }
}

TEST_CASE("chamber census n = 6")
{
    // Frozen from a denominator-60 grid sweep.
    const auto chambers = enumerate_chambers(6);
    CHECK(chambers.size() == 22887);
    long euler = 0;
    for (const auto& c : chambers)
        euler += c.dim % 2 ? -1 : 1;
    CHECK(euler == 1);
}

TEST_CASE("chambers are ordered and reproducible")
{
    const auto a = enumerate_chambers(5), b = enumerate_chambers(5);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].id == static_cast<int>(i));
        CHECK(a[i].signs == b[i].signs);
        CHECK(a[i].witness == b[i].witness);
        if (i)
            CHECK(std::make_pair(a[i - 1].dim, a[i - 1].signs) < std::make_pair(a[i].dim, a[i].signs));
    }
    const auto arr = build_arrangement(5);
    for (const auto& c : a) {
        CHECK(arr.sign_vector(c.witness) == c.signs);
        CHECK(chamber_region(arr, c.signs).contains(c.witness));
    }
}

TEST_CASE("example chamber on x1+x3=1")
{
    const auto a = build_arrangement(5);
    const auto chambers = enumerate_chambers(a);
    const auto id = locate(a, chambers, v({"3/5", "1/3", "2/5", "1/3", "1/3"}));
    REQUIRE(id);
    const auto& c = chambers[*id];
    CHECK(c.dim == 3);
    CHECK(c.interior());
    std::vector<std::string> on;
    for (std::size_t j = 0; j < a.hyperplanes.size(); ++j)
        if (c.signs[j] == '0')
            on.push_back(a.hyperplanes[j].label());
    CHECK(on == std::vector<std::string>{"x13=1"});
    CHECK(zero_pi_count(a, c) == 1);
    CHECK_THROWS_AS(locate(a, chambers, v({"1", "1", "1", "0", "0"})), InputError);
}

TEST_CASE("permutations act on the chamber set")
{
    const auto a = build_arrangement(4);
    const auto chambers = enumerate_chambers(a);
    std::set<std::string> signs;
    for (const auto& c : chambers)
        signs.insert(c.signs);
    std::vector<int> perm{0, 1, 2, 3};
    do {
        std::set<std::string> image;
        for (const auto& c : chambers)
            image.insert(a.sign_vector(permute(c.witness, perm)));
        CHECK(image == signs);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("admissible families follow the analytic feasibility rule")
{
    // A disjoint family {S_j} with union U cuts a nonempty open region iff
    // m + (n - |U|) > 2.
    for (int n = 4; n <= 6; ++n) {
        const auto census = admissible_census(n);
        long sections = 0, cuts = 0;
        for (const auto& p : census.polytopes) {
            if (p.kind == PolyKind::SECTION) {
                ++sections;
                CHECK(p.dim == n - 2);
            } else {
                CHECK(p.dim == n - 1);
            }
            if (p.kind == PolyKind::CUTS) {
                ++cuts;
                std::size_t u = 0;
                for (const auto& s : p.subsets)
                    u += s.size();
                CHECK(p.subsets.size() + (n - u) > 2);
            }
        }
        for (const auto& fam : census.rejected) {
            std::size_t u = 0;
            for (const auto& s : fam)
                u += s.size();
            CHECK(fam.size() + (n - u) <= 2);
        }
        CHECK(sections == static_cast<long>(build_arrangement(n).pi_count));
        if (n == 5) {
            CHECK(cuts == 35);
            CHECK(census.rejected.size() == 10);
        }
    }
}

TEST_CASE("omega sets")
{
    const auto a = build_arrangement(5);
    const auto chambers = enumerate_chambers(a);
    const auto polys = enumerate_admissible(5);

    SUBCASE("full-dimensional chambers: witness test decides membership")
    {
        for (const auto& c : chambers) {
            if (c.dim != 4)
                continue;
            std::vector<int> expect;
            for (const auto& p : polys)
                if (p.interior_contains(c.witness))
                    expect.push_back(p.id);
            CHECK(omega_set(a, c, polys).members == expect);
        }
    }
    SUBCASE("chamber with x1+x2 > 1")
    {
        const auto id = locate(a, chambers, v({"3/5", "3/5", "27/100", "27/100", "26/100"}));
        REQUIRE(id);
        const auto members = omega_set(a, chambers[*id], polys).members;
        std::set<std::string> labels;
        for (int m : members)
            labels.insert(polys[m].label());
        CHECK(labels.count("FULL"));
        for (const char* out : {"CUTS(12)", "CUTS(12,34)", "CUTS(12,35)", "CUTS(12,45)"})
            CHECK_FALSE(labels.count(out));
        for (const auto& p : polys)
            if (p.kind == PolyKind::CUTS && std::all_of(p.subsets.begin(), p.subsets.end(), [](const Subset& s) {
                    return s.size() == 2 && s != Subset{1, 2};
                }))
                CHECK(labels.count(p.label()));
    }
    SUBCASE("chamber on x1+x3=1")
    {
        const auto id = locate(a, chambers, v({"3/5", "1/3", "2/5", "1/3", "1/3"}));
        const auto members = omega_set(a, chambers[*id], polys).members;
        std::set<std::string> labels;
        for (int m : members)
            labels.insert(polys[m].label());
        CHECK(labels.count("SECTION(13)"));
        for (const auto& p : polys)
            if (p.kind == PolyKind::CUTS &&
                std::find(p.subsets.begin(), p.subsets.end(), Subset{1, 3}) != p.subsets.end())
                CHECK_FALSE(labels.count(p.label()));
    }
    SUBCASE("boundary chambers")
    {
        for (const auto& c : chambers)
            if (c.on_boundary)
                CHECK(omega_set(a, c, polys).members.empty());
    }
}

TEST_CASE("adjacency pairs differ by one dimension")
{
    const auto chambers = enumerate_chambers(4);
    const auto pairs = chamber_adjacency(chambers);
    CHECK_FALSE(pairs.empty());
    for (auto [c, d] : pairs)
        CHECK(chambers[d].dim == chambers[c].dim + 1);
}

TEST_CASE("sampling stays inside the chamber")
{
    std::mt19937_64 rng(7);
    const auto a = build_arrangement(5);
    const auto chambers = enumerate_chambers(a);
    const auto vertices = arrangement_vertices(a);
    CHECK(vertices.size() == 20);
    for (const auto& c : chambers) {
        const auto verts = chamber_vertices(a, vertices, c);
        REQUIRE_FALSE(verts.empty());
        CHECK(a.sign_vector(sample_hull(verts, rng)) == c.signs);
    }
    for (int s = 0; s < 50; ++s) {
        const RatVec x = sample_interior(6, rng);
        CHECK(sum(x) == 2);
        CHECK(std::all_of(x.begin(), x.end(), [](const Rat& t) { return t > 0 && t < 1; }));
    }
}

TEST_CASE("subset helpers")
{
    CHECK(subsets_of_size(4, 2).size() == 6);
    CHECK(complement({1, 3}, 4) == Subset{2, 4});
    CHECK(permute(Subset{1, 2}, {2, 0, 1}) == Subset{1, 3});
    CHECK(permute(v({"1", "2", "3"}), {2, 0, 1}) == v({"2", "3", "1"}));
}
