#pragma once

#include "modcomb/rational.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

/// Exact rational linear algebra, H-polytopes and LP feasibility.
///
/// Nothing in this namespace carries a tolerance: every comparison is an
/// exact comparison of rationals. Strict inequalities are decided by
/// maximizing a shared slack variable t (bounded by 1) and testing t > 0.
namespace modcomb::geom {

enum class Relation { EQ, LE, LT };

/// coefficients . x  REL  constant
struct LinConstraint {
    RatVec coeffs;
    Relation rel = Relation::LE;
    Rat constant;

    std::size_t dim() const { return coeffs.size(); }
    Rat lhs(const RatVec& x) const { return dot(coeffs, x); }
    bool satisfied_by(const RatVec& x) const;

    /// Scales to coprime integer coefficients. Equalities additionally get a
    /// positive leading coefficient; inequalities are only scaled by positive
    /// factors so the halfspace is unchanged.
    LinConstraint normalized() const;

    std::strong_ordering operator<=>(const LinConstraint& o) const;
    bool operator==(const LinConstraint& o) const;
};

LinConstraint eq(RatVec coeffs, Rat constant);
LinConstraint le(RatVec coeffs, Rat constant);
LinConstraint lt(RatVec coeffs, Rat constant);
/// coeffs . x >= constant, stored as -coeffs . x <= -constant.
LinConstraint ge(RatVec coeffs, Rat constant);
/// coeffs . x > constant, stored as -coeffs . x < -constant.
LinConstraint gt(RatVec coeffs, Rat constant);

/// Set of points satisfying a conjunction of constraints. Strict constraints
/// make the set non-closed; queries treat them exactly.
class HPolytope {
public:
    HPolytope() = default;
    HPolytope(std::size_t ambient_dim, std::vector<LinConstraint> constraints);

    std::size_t ambient_dim() const { return ambient_dim_; }
    const std::vector<LinConstraint>& constraints() const { return constraints_; }

    HPolytope& add(LinConstraint c);
    HPolytope with(LinConstraint c) const;
    bool contains(const RatVec& x) const;

    /// Normalized and sorted constraint list; equal iff structurally equal.
    HPolytope canonical() const;
    bool operator==(const HPolytope& o) const;

private:
    std::size_t ambient_dim_ = 0;
    std::vector<LinConstraint> constraints_;
};

/// Returns a witness satisfying every constraint exactly (strict ones
/// strictly), or nullopt when the system is infeasible.
std::optional<RatVec> lp_feasible(const std::vector<LinConstraint>& constraints, std::size_t ambient_dim);
std::optional<RatVec> lp_feasible(const HPolytope& p);

/// Dimension of the affine hull of the feasible set; -1 when empty.
int affine_dimension(const HPolytope& p);

/// A point satisfying equalities exactly and every inequality strictly, or
/// nullopt when the relative interior is empty.
std::optional<RatVec> relative_interior_point(const HPolytope& p);

/// True iff every point of p satisfies c (p empty implies everything).
bool implies(const HPolytope& p, const LinConstraint& c);

/// Result of maximizing the shared slack t over a system where the rows
/// flagged in `boosted` read a.x + t <= b (and t <= 1).
struct SlackResult {
    bool feasible = false; // non-strict system feasible
    Rat slack;             // optimal t (0 when no boosted rows)
    RatVec point;
};

SlackResult maximize_slack(const std::vector<LinConstraint>& constraints, std::size_t ambient_dim,
                           const std::vector<bool>& boosted);

/// Reduced row-echelon form of an affine equation system A x = b.
class AffineSystem {
public:
    explicit AffineSystem(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }
    bool consistent() const { return consistent_; }

    /// Adds a.x = b. Returns false when the equation was already implied or
    /// made the system inconsistent.
    bool add(const RatVec& a, const Rat& b);

    /// Reduces (a | b) against the current rows; the result is zero iff a.x = b
    /// is implied (or contradicts, when only the constant survives).
    std::pair<RatVec, Rat> reduce(const RatVec& a, const Rat& b) const;
    bool implies(const RatVec& a, const Rat& b) const;

    /// A particular solution plus a basis of the direction space; requires
    /// consistent().
    RatVec particular() const;
    std::vector<RatVec> null_basis() const;

private:
    std::size_t dim_;
    bool consistent_ = true;
    std::vector<RatVec> rows_; // each row: coeffs, pivot coefficient 1
    std::vector<Rat> rhs_;
    std::vector<std::size_t> pivots_;
};

/// Rank of a set of vectors over Q.
std::size_t rank(const std::vector<RatVec>& vectors);

/// Affine dimension of a finite point set (-1 when empty).
int affine_rank(const std::vector<RatVec>& points);

} // namespace modcomb::geom
