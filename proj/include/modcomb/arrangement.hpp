#pragma once

#include "modcomb/exactgeom.hpp"

#include <string>
#include <vector>

// Face enumeration for a finite hyperplane arrangement restricted to a
// bounded polytope Q.
//
// Every face of the restricted arrangement is the relative interior of a
// polytope whose vertices are vertices of the arrangement (planes plus the
// facets of Q). The engine enumerates those vertices once, precomputes their
// signs, and then splits faces plane by plane using only bit operations on
// vertex sets:
//   - R & {h > 0} is nonempty iff some closure vertex has h > 0;
//   - R & {h = 0} is nonempty iff h takes both signs on the closure, or
//     vanishes on all of it (R is relatively open).
// Witnesses are vertex barycenters, which lie in the relative interior.
namespace modcomb::arr {

// Signed plane: the sign of normal . x - offset.
struct Plane {
    RatVec normal;
    Rat offset;
};

int sign_of(const Plane& h, const RatVec& x);
char sign_char(int s);

struct FaceQuery {
    std::size_t dim = 0;
    // EQ and LE constraints only; must describe a nonempty bounded polytope.
    std::vector<geom::LinConstraint> carrier;
    std::vector<Plane> planes;
    // Only faces open in the affine hull of Q, avoiding every plane.
    bool full_dimensional_only = false;
};

struct Region {
    std::string signs;         // one of '-', '0', '+' per plane
    std::string carrier_tight; // '1' where the carrier inequality is tight
    RatVec witness;
    int dim = 0;
    std::size_t vertex_count = 0;
};

std::vector<RatVec> arrangement_vertices(const FaceQuery& q);

// Sorted by (dim, signs, carrier_tight).
std::vector<Region> enumerate_faces(const FaceQuery& q);

// Worker threads for enumeration: MODCOMB_THREADS, else hardware concurrency.
unsigned worker_count();

} // namespace modcomb::arr
