#pragma once

#include "modcomb/arrangement.hpp"
#include "modcomb/exactgeom.hpp"

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

// Chamber decomposition of the hypersimplex {x in [0,1]^n : sum x = 2} cut by
// the planes sum_S x = 1 (2 <= |S| <= n/2), x_i = 0 and x_i = 1.
namespace modcomb::hyper {

using Subset = std::vector<int>; // sorted, 1-based

constexpr int max_n = 8;

enum class PlaneKind { PI, ZERO, ONE };

struct Hyperplane {
    PlaneKind kind;
    Subset subset; // S for PI, {i} otherwise
    arr::Plane plane;
    std::string label() const;
};

struct Arrangement {
    int n = 0;
    std::vector<Hyperplane> hyperplanes; // PI planes by (|S|, lex), then x_i = 0, then x_i = 1
    geom::HPolytope carrier;
    std::size_t pi_count = 0;

    // Index of the PI plane cutting the carrier like sum_S x = 1 (S or its
    // complement); nullopt when |S| or |S^c| is outside [2, n-2].
    std::optional<std::size_t> pi_index(const Subset& s) const;
    // Sign of sum_S x - 1 on a chamber with the given sign vector.
    int pi_sign(const Subset& s, const std::string& signs) const;
    std::string sign_vector(const RatVec& x) const;
    arr::FaceQuery face_query() const;

    std::map<Subset, std::size_t> pi_lookup;
};

Arrangement build_arrangement(int n);

struct Chamber {
    int id = 0;
    std::string signs;
    RatVec witness;
    int dim = 0;
    bool on_boundary = false; // inside some facet x_i = 0 or x_i = 1

    bool interior() const { return !on_boundary; }
};

// Every nonempty face of the restricted arrangement, sorted by (dim, signs);
// the id is the position in that order.
std::vector<Chamber> enumerate_chambers(const Arrangement& a);
std::vector<Chamber> enumerate_chambers(int n);

// The closed-form region {carrier, signs}; strict rows for nonzero signs.
geom::HPolytope chamber_region(const Arrangement& a, const std::string& signs);

// Chamber containing x (x must lie in the hypersimplex).
std::optional<int> locate(const Arrangement& a, const std::vector<Chamber>& chambers, const RatVec& x);

int zero_pi_count(const Arrangement& a, const Chamber& c);

enum class PolyKind { FULL, SECTION, CUTS };

struct AdmissiblePolytope {
    int id = 0;
    PolyKind kind = PolyKind::FULL;
    std::vector<Subset> subsets; // {S} for SECTION, the family for CUTS
    geom::HPolytope hrep;        // closed polytope
    int dim = 0;
    std::string label() const;

    // Constraints of the relative interior (strict box and cut rows).
    std::vector<geom::LinConstraint> interior_constraints() const;
    bool interior_contains(const RatVec& x) const;
};

struct AdmissibleCensus {
    std::vector<AdmissiblePolytope> polytopes;
    std::vector<std::vector<Subset>> rejected; // disjoint families with empty interior
};

AdmissibleCensus admissible_census(int n);
std::vector<AdmissiblePolytope> enumerate_admissible(int n);

struct OmegaResult {
    std::vector<int> members;     // polytope ids with C inside the open polytope
    std::size_t lp_certified = 0; // members whose containment was proved by LP
};

// Boundary chambers lie in no admissible polytope interior; their omega is
// empty.
OmegaResult omega_set(const Arrangement& a, const Chamber& c, const std::vector<AdmissiblePolytope>& polys);

// Pairs (c, d) with dim d = dim c + 1 and c inside the closure of d.
std::vector<std::pair<int, int>> chamber_adjacency(const std::vector<Chamber>& chambers);

// Coordinate relabeling: result[perm[i]] = x[i], perm is 0-based.
RatVec permute(const RatVec& x, const std::vector<int>& perm);
Subset permute(const Subset& s, const std::vector<int>& perm);

// Random rational point of the open hypersimplex (positive combination of
// its vertices e_i + e_j).
RatVec sample_interior(int n, std::mt19937_64& rng);

// Random positive convex combination of the given points.
RatVec sample_hull(const std::vector<RatVec>& points, std::mt19937_64& rng);

std::vector<RatVec> arrangement_vertices(const Arrangement& a);

// Vertices of the closure of a chamber, selected from arrangement_vertices.
std::vector<RatVec> chamber_vertices(const Arrangement& a, const std::vector<RatVec>& vertices, const Chamber& c);

Subset complement(const Subset& s, int n);
// All k-subsets of {1..n} in lexicographic order.
std::vector<Subset> subsets_of_size(int n, int k);

} // namespace modcomb::hyper
