#pragma once

#include "modcomb/rational.hpp"
#include "modcomb/weights.hpp"

#include <map>
#include <string>
#include <vector>

// Boundary strata of M_{0,n}-bar (stable trees), Losev-Manin chains, reduction
// divisors between weight data, permutohedron faces and the building set of
// coincidence loci.
namespace modcomb::strata {

using hyper::Subset;
using weights::Partition;

// Type strings list moduli factors M_{0,v} by decreasing v: "M04xM03".
std::string product_type(std::vector<int> valences);

// chi(M_{0,m}) = (-1)^(m-3) (m-3)!
BigInt chi_open(int m);

// ------------------------------------------------------------------- DM

// A stable tree, encoded by its clusters: the leg sets of the subtrees cut
// off by each edge, taken on the side away from leg n.
struct StableTree {
    std::vector<Subset> clusters;
    std::vector<int> valences; // decreasing

    int codim() const { return static_cast<int>(clusters.size()); }
    std::string type() const { return product_type(valences); }
};

constexpr int max_dm_list_n = 8;
constexpr int max_dm_census_n = 13;

std::vector<StableTree> dm_strata(int n);

struct DMCensus {
    int n = 0;
    std::map<std::string, BigInt> by_type;
    std::map<int, BigInt> by_codim;
    std::map<int, std::map<std::string, BigInt>> by_codim_type;
    BigInt total;
    BigInt euler_sum; // sum over strata of prod chi(M_{0,val})
};

// From explicit enumeration (n <= 8).
DMCensus census_of(int n, const std::vector<StableTree>& trees);
// From the rooted-tree recursion (n <= 13); keyed by the same type strings.
DMCensus dm_census(int n);
// Valence multisets with counts, from the recursion.
std::map<std::vector<int>, BigInt> dm_valence_census(int n);

// chi(M_{0,n}-bar) by the recursion
// chi_{n+1} = 2 chi_n + 1/2 sum_{j=2}^{n-2} C(n,j) chi_{j+1} chi_{n-j+1}.
BigInt chi_dm(int n);

// ------------------------------------------------------------------- reduction

struct DivisorSpec {
    Subset I, J;
    int factor_i = 0; // |I| + 1
    int factor_j = 0; // |J| + 1
    Rat b_sum_i;      // sum_{i in I} b_i
    std::string type() const; // "F4xF3"
};

// Boundary divisors D_{I,J} of the A-space contracted by the reduction to B:
// 3 <= |I| <= n-2, sum_I b <= 1, and D_{I,J} present for A
// (sum_I a > 1 and sum_J a > 1).
std::vector<DivisorSpec> reduction_divisors(const RatVec& A, const RatVec& B);

// ------------------------------------------------------------------- LM

// Ordered blocks of the black labels {3..n}; each block split into clusters
// of coinciding points.
struct LMChain {
    std::vector<std::vector<std::vector<int>>> blocks;

    int k() const { return static_cast<int>(blocks.size()); }
    std::vector<int> cluster_counts() const;
    int dim() const;
    std::string type() const;
    bool open() const;
    bool coincidence_free() const;
    std::string to_string() const; // "({3},{4,5})|({6})"
};

constexpr int max_lm_n = 8;

std::vector<LMChain> lm_strata(int n);

struct LMCensus {
    int n = 0;
    std::map<std::string, long> by_type;
    std::map<int, long> by_dim;
    std::map<int, long> toric_by_dim;
    std::map<int, long> extension_by_dim;
    std::map<int, long> orbits_by_dim; // coincidence-free toric chains
    BigInt euler_sum;                  // sum of prod (-1)^(c-1) (c-1)!
    long total = 0;
};

LMCensus lm_census(int n);

enum class Degeneration { ZERO, INF, ONE, GENERIC };

// Values for the pairs (i, j), 3 <= i < j <= n, in lexicographic pair order.
struct DegenerationLabel {
    int n = 0;
    std::vector<Degeneration> values;

    static std::vector<std::pair<int, int>> pairs(int n);
    Degeneration at(int i, int j) const;
    std::string to_string() const; // one char per pair: 0, i, 1, g
    bool operator<(const DegenerationLabel& o) const { return values < o.values; }
    bool operator==(const DegenerationLabel& o) const = default;
};

DegenerationLabel degeneration_label(const LMChain& c, int n);

// Every triple i < j < k admits lambda_ij lambda_jk = lambda_ik, with
// ZERO * INF allowed to be anything.
bool multiplicatively_consistent(const DegenerationLabel& d);

enum class Outgrowth { TORIC, EXTENSION };
std::string to_string(Outgrowth o);

Outgrowth classify_outgrowth(const LMChain& c);
Outgrowth classify_outgrowth(const DegenerationLabel& d);

// Dimension of every coordinate-class locus on the surface
// c34 c'35 c45 = c'34 c35 c'45 in (P^1)^3 (-1 when empty), computed by direct
// elimination. Keys are DegenerationLabel strings for n = 5.
std::map<std::string, int> closure_oracle_n5();

// ------------------------------------------------------------------- permutohedron

using OrderedSetPartition = std::vector<std::vector<int>>;

// Explicit ordered set partitions of {0..size-1}; size <= 8.
std::vector<OrderedSetPartition> ordered_set_partitions(int size);

struct FaceType {
    std::vector<int> composition; // block sizes in order
    BigInt count;                 // ordered set partitions with these sizes
    int dim = 0;                  // sum (size - 1)
};

constexpr int max_face_m = 11;

// Faces of the permutohedron P^m on a ground set of m+1 elements, grouped by
// block-size composition.
std::vector<FaceType> permutohedron_face_types(int m);
// f-vector indexed by face dimension.
std::vector<BigInt> permutohedron_faces(int m);

BigInt fubini(int size);

// ------------------------------------------------------------------- building set

struct WonderfulLattice {
    int n = 0;
    std::vector<Subset> generators;       // 3-subsets of {3..n}
    std::vector<Partition> elements;      // coincidence partitions of {3..n}
    std::vector<Subset> building;         // supports K, |K| >= 3
    // For every unordered generator pair: index into elements.
    std::map<std::pair<int, int>, int> pair_meet;
};

// Coincidence partition forced by making every pair inside each given
// generator ONE (overlapping generators merge).
Partition one_propagation(int n, const std::vector<Subset>& generators);

WonderfulLattice wonderful_building_set(int n);

struct WonderfulDivisor {
    int n = 0;
    Subset support;
    int depth = 0; // generators needed to reach the support (|K| - 2)
    std::string type() const; // F_{|K|+1} x F_{n-|K|+1}
};

std::vector<WonderfulDivisor> wonderful_divisor_census(int n);

} // namespace modcomb::strata
