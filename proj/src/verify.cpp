#include "modcomb/cli.hpp"

#include "modcomb/hypersimplex.hpp"
#include "modcomb/series.hpp"
#include "modcomb/strata.hpp"
#include "modcomb/weights.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace modcomb::cli {

namespace {

using hyper::Chamber;

std::vector<int> random_perm(int n, std::mt19937_64& rng)
{
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

Rat random_rat(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> num(-12, 12), den(1, 9);
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

struct Recorder {
    std::vector<Check>& out;
    void operator()(std::string name, bool pass, std::string detail = {})
    {
        out.push_back({std::move(name), pass, std::move(detail)});
    }
};

void hypersimplex_checks(int n, std::mt19937_64& rng, Recorder& rec)
{
    const auto a = hyper::build_arrangement(n);
    const auto chambers = hyper::enumerate_chambers(a);
    std::map<std::string, int> by_signs;
    for (const auto& c : chambers)
        by_signs[c.signs] = c.id;

    long euler = 0;
    for (const auto& c : chambers)
        euler += c.dim % 2 ? -1 : 1;
    rec("hypersimplex.euler_characteristic", euler == 1, "sum of (-1)^dim = " + std::to_string(euler));

    bool relocate = std::all_of(chambers.begin(), chambers.end(),
                                [&](const Chamber& c) { return a.sign_vector(c.witness) == c.signs; });
    rec("hypersimplex.witness_relocation", relocate, std::to_string(chambers.size()) + " chambers");

    int covered = 0, samples = 200;
    for (int s = 0; s < samples; ++s) {
        const RatVec x = hyper::sample_interior(n, rng);
        const auto it = by_signs.find(a.sign_vector(x));
        if (it != by_signs.end() && hyper::chamber_region(a, it->first).contains(x))
            ++covered;
    }
    rec("hypersimplex.partition_coverage", covered == samples,
        std::to_string(covered) + "/" + std::to_string(samples) + " samples in exactly one chamber");

    const auto perm = random_perm(n, rng);
    std::set<std::string> image;
    for (const auto& c : chambers)
        image.insert(a.sign_vector(hyper::permute(c.witness, perm)));
    bool equivariant = image.size() == chambers.size();
    for (const auto& s : image)
        equivariant = equivariant && by_signs.count(s);
    rec("hypersimplex.chamber_equivariance", equivariant, "chamber set closed under a random permutation");

    // Polytopes keyed by kind and subset data; a section by S equals the one by S^c.
    const auto polys = hyper::enumerate_admissible(n);
    auto key = [&](hyper::PolyKind kind, const std::vector<hyper::Subset>& subsets) {
        std::vector<hyper::Subset> k;
        for (const auto& s : subsets)
            k.push_back(kind == hyper::PolyKind::SECTION ? std::min(s, hyper::complement(s, n)) : s);
        std::sort(k.begin(), k.end());
        return std::make_pair(static_cast<int>(kind), k);
    };
    std::set<std::pair<int, std::vector<hyper::Subset>>> before, after;
    for (const auto& p : polys) {
        before.insert(key(p.kind, p.subsets));
        std::vector<hyper::Subset> moved;
        for (const auto& s : p.subsets)
            moved.push_back(hyper::permute(s, perm));
        after.insert(key(p.kind, moved));
    }
    rec("hypersimplex.admissible_equivariance", before == after, std::to_string(polys.size()) + " polytopes");
}

void weights_checks(int n, std::mt19937_64& rng, Recorder& rec)
{
    const auto a = hyper::build_arrangement(n);
    const auto chambers = hyper::enumerate_chambers(a);
    std::vector<const Chamber*> interior;
    for (const auto& c : chambers)
        if (c.interior())
            interior.push_back(&c);

    bool dichotomy = true;
    for (const auto* c : interior) {
        const bool typical = weights::classify_linearisation(c->witness).typical;
        dichotomy = dichotomy && ((c->dim == n - 1) == typical);
        if (typical)
            dichotomy = dichotomy && weights::semistable_profile(c->witness) == weights::stable_profile(c->witness);
    }
    rec("weights.typicality_dichotomy", dichotomy, std::to_string(interior.size()) + " interior chambers");

    const auto vertices = hyper::arrangement_vertices(a);
    std::vector<const Chamber*> pool = interior;
    std::shuffle(pool.begin(), pool.end(), rng);
    if (pool.size() > 60)
        pool.resize(60);
    bool invariant = true;
    for (const auto* c : pool) {
        const auto verts = hyper::chamber_vertices(a, vertices, *c);
        const auto profile = weights::semistable_profile(c->witness);
        for (int s = 0; s < 3; ++s) {
            const RatVec x = hyper::sample_hull(verts, rng);
            invariant = invariant && a.sign_vector(x) == c->signs && weights::semistable_profile(x) == profile;
        }
    }
    rec("weights.profile_invariance", invariant, std::to_string(pool.size()) + " chambers, 3 samples each");

    bool singleton = true, xi_equivariant = true;
    std::map<std::string, const Chamber*> by_signs;
    for (const auto& c : chambers)
        by_signs[c.signs] = &c;
    int xi_tested = 0;
    for (const auto* c : pool) {
        const auto cells = weights::xi(a, *c);
        if (c->dim == n - 1)
            singleton = singleton && cells.size() == 1;
        if (xi_tested >= 20)
            continue;
        ++xi_tested;
        const auto perm = random_perm(n, rng);
        const auto* image = by_signs.at(a.sign_vector(hyper::permute(c->witness, perm)));
        std::set<std::string> moved, direct;
        for (const auto& f : cells)
            moved.insert(weights::fine_signs(hyper::permute(f.witness, perm)));
        for (const auto& f : weights::xi(a, *image))
            direct.insert(f.id);
        xi_equivariant = xi_equivariant && moved == direct;
    }
    rec("weights.xi_full_dimensional_singleton", singleton, "|xi| = 1 on open chambers");
    rec("weights.xi_equivariance", xi_equivariant, std::to_string(xi_tested) + " chambers under random permutations");

    // A light extra point of weight eps below every gap |sum_S t - 1|.
    bool shadow = true;
    int tested = 0;
    for (int s = 0; s < 20; ++s) {
        const RatVec lp = hyper::sample_interior(n - 1, rng);
        if (!weights::classify_linearisation(lp).typical)
            continue;
        ++tested;
        Rat eps(1, 2);
        for (unsigned mask = 1; mask + 1 < (1u << (n - 1)); ++mask) {
            Rat sub = 0;
            for (int i = 0; i < n - 1; ++i)
                if (mask >> i & 1u)
                    sub += lp[i];
            eps = std::min(eps, Rat(abs(sub - 1) / 4));
        }
        RatVec t;
        for (const auto& v : lp)
            t.push_back((1 - eps / 2) * v);
        t.push_back(eps);
        shadow = shadow && weights::forget_index(t, n) == lp &&
                 weights::forget_in_profile(weights::semistable_profile(t), n) == weights::semistable_profile(lp);
    }
    rec("weights.forgetful_shadow", shadow && tested > 0, std::to_string(tested) + " typical linearisations");
}

void strata_checks(int n, std::mt19937_64& rng, Recorder& rec)
{
    const auto dm = strata::dm_census(n);
    const BigInt chi = strata::chi_dm(n);
    rec("strata.dm_euler_identity", dm.euler_sum == chi, "sum = " + dm.euler_sum.get_str() + ", chi = " + chi.get_str());
    if (n <= strata::max_dm_list_n) {
        const auto listed = strata::census_of(n, strata::dm_strata(n));
        rec("strata.dm_enumeration_matches_recursion", listed.by_type == dm.by_type && listed.total == dm.total,
            "total " + dm.total.get_str());
    }
    if (n <= strata::max_lm_n) {
        const auto chains = strata::lm_strata(n);
        const auto lm = strata::lm_census(n);
        const BigInt expect = factorial(n - 2);
        rec("strata.lm_euler_identity", lm.euler_sum == expect,
            "sum = " + lm.euler_sum.get_str() + ", (n-2)! = " + expect.get_str());

        std::map<int, BigInt> free_by_dim;
        std::set<std::string> names;
        bool labels = true;
        for (const auto& c : chains) {
            names.insert(c.to_string());
            if (c.coincidence_free())
                free_by_dim[c.dim()] += 1;
            const auto label = strata::degeneration_label(c, n);
            labels = labels && strata::multiplicatively_consistent(label);
            if (!c.open())
                labels = labels && strata::classify_outgrowth(c) == strata::classify_outgrowth(label);
        }
        const auto faces = strata::permutohedron_faces(n - 3);
        bool face_match = true;
        for (std::size_t d = 0; d < faces.size(); ++d)
            face_match = face_match && free_by_dim[static_cast<int>(d)] == faces[d];
        rec("strata.lm_permutohedron_faces", face_match, "coincidence-free chains vs faces of P^" + std::to_string(n - 3));
        rec("strata.lm_label_consistency", labels, "chain and label classifications agree");

        // Relabel the black points {3..n}.
        std::vector<int> perm = random_perm(n - 2, rng);
        bool relabel = true;
        for (const auto& c : chains) {
            strata::LMChain moved;
            for (const auto& block : c.blocks) {
                strata::Partition p;
                for (const auto& cl : block) {
                    std::vector<int> m;
                    for (int i : cl)
                        m.push_back(perm[i - 3] + 3);
                    p.push_back(m);
                }
                moved.blocks.push_back(weights::canonical(p));
            }
            relabel = relabel && names.count(moved.to_string());
        }
        rec("strata.lm_relabel_equivariance", relabel, std::to_string(chains.size()) + " chains");
    }

    std::map<std::string, int> chain_dims;
    for (const auto& c : strata::lm_strata(5))
        chain_dims[strata::degeneration_label(c, 5).to_string()] = c.dim();
    std::map<std::string, int> oracle;
    for (const auto& [label, dim] : strata::closure_oracle_n5())
        if (dim >= 0)
            oracle[label] = dim;
    rec("strata.closure_oracle", oracle == chain_dims,
        std::to_string(oracle.size()) + " nonempty coordinate classes vs " + std::to_string(chain_dims.size()) + " chains");

    if (n >= 5 && n <= 7) {
        RatVec A(n, Rat(1)), B(n, Rat(1, 2 * n));
        B[0] = B[1] = 1;
        const auto red = strata::reduction_divisors(A, B);
        const auto won = strata::wonderful_divisor_census(n);
        std::map<std::string, int> rt, wt;
        for (const auto& d : red)
            ++rt[d.type()];
        for (const auto& d : won)
            ++wt[d.type()];
        rec("strata.divisors_match_building_set", rt == wt,
            std::to_string(red.size()) + " reduction divisors, " + std::to_string(won.size()) + " building-set divisors");
    }
}

void series_checks(std::mt19937_64& rng, Recorder& rec)
{
    using namespace series;
    bool mult = true, comp = true, involution = true;
    const int trials = 20, order = 8;
    for (int t = 0; t < trials; ++t) {
        ExpSeries f{{Rat(1)}}, g{{Rat(0), Rat(1)}};
        for (int k = 1; k <= order; ++k)
            f.coeffs.push_back(random_rat(rng));
        for (int k = 2; k <= order; ++k)
            g.coeffs.push_back(random_rat(rng));
        const auto fi = mult_inverse_direct(f);
        const auto gi = comp_inverse_direct(g);
        mult = mult && fi == mult_inverse_permutohedral(f);
        comp = comp && gi == comp_inverse_strata(g);
        involution = involution && mult_inverse_direct(fi) == f && comp_inverse_direct(gi) == g;
    }
    rec("series.permutohedral_matches_direct", mult, std::to_string(trials) + " random series to order 8");
    rec("series.strata_matches_direct", comp, std::to_string(trials) + " random series to order 8");
    rec("series.involution", involution, "both modes");

    bool leibniz = true;
    std::uniform_int_distribution<int> gen(0, 4), coef(-5, 5), len(1, 3);
    auto random_sum = [&] {
        PolySum p;
        for (int t = 0; t < 3; ++t) {
            Word w;
            for (int k = len(rng); k > 0; --k)
                w.push_back(gen(rng));
            p += PolySum(w, coef(rng));
        }
        return p;
    };
    for (int t = 0; t < 20; ++t) {
        const PolySum p = random_sum(), q = random_sum();
        leibniz = leibniz && differential(p * q) == differential(p) * q + p * differential(q);
    }
    rec("series.leibniz", leibniz, "20 random pairs");

    bool euler = true, facets = true;
    for (int m = 0; m <= max_genfun_m; ++m) {
        euler = euler && euler_interior(m) == (m % 2 ? -1 : 1);
        if (m >= 1)
            facets = facets && differential(generator(m)) == generating_function(m).coeffs[1];
    }
    rec("series.euler_interior_sign", euler, "m <= " + std::to_string(max_genfun_m));
    rec("series.differential_matches_facets", facets, "d P^m against codimension-1 faces");
}

} // namespace

std::vector<Check> verify(const std::string& suite, int n, std::uint64_t seed)
{
    static const std::set<std::string> suites{"all", "hypersimplex", "weights", "strata", "series"};
    if (!suites.count(suite))
        throw InputError("unknown suite '" + suite + "'");
    if (n < 4 || n > 6)
        throw InputError("verify supports 4 <= n <= 6");
    std::vector<Check> out;
    Recorder rec{out};
    std::mt19937_64 rng(seed);
    if (suite == "all" || suite == "hypersimplex")
        hypersimplex_checks(n, rng, rec);
    if (suite == "all" || suite == "weights")
        weights_checks(n, rng, rec);
    if (suite == "all" || suite == "strata")
        strata_checks(n, rng, rec);
    if (suite == "all" || suite == "series")
        series_checks(rng, rec);
    return out;
}

} // namespace modcomb::cli
