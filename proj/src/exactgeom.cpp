#include "modcomb/exactgeom.hpp"

#include <algorithm>
#include <numeric>

namespace modcomb::geom {

// ---------------------------------------------------------------- constraints

bool LinConstraint::satisfied_by(const RatVec& x) const
{
    const int s = sgn(lhs(x) - constant);
    switch (rel) {
    case Relation::EQ: return s == 0;
    case Relation::LE: return s <= 0;
    case Relation::LT: return s < 0;
    }
    return false;
}

LinConstraint LinConstraint::normalized() const
{
    BigInt den_lcm = 1;
    for (const auto& c : coeffs)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), constant.get_den_mpz_t());

    LinConstraint out{coeffs, rel, constant};
    BigInt g = 0;
    for (auto& c : out.coeffs) {
        c *= den_lcm;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    }
    out.constant *= den_lcm;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.constant.get_num_mpz_t());
    if (g == 0)
        return out;
    Rat scale(1, 1);
    scale /= Rat(g);
    if (rel == Relation::EQ) {
        auto lead = std::find_if(out.coeffs.begin(), out.coeffs.end(), [](const Rat& c) { return sgn(c) != 0; });
        if ((lead != out.coeffs.end() && sgn(*lead) < 0) || (lead == out.coeffs.end() && sgn(out.constant) < 0))
            scale = -scale;
    }
    for (auto& c : out.coeffs)
        c *= scale;
    out.constant *= scale;
    return out;
}

std::strong_ordering LinConstraint::operator<=>(const LinConstraint& o) const
{
    if (auto c = rel <=> o.rel; c != 0)
        return c;
    const std::size_t n = std::min(coeffs.size(), o.coeffs.size());
    for (std::size_t i = 0; i < n; ++i)
        if (coeffs[i] != o.coeffs[i])
            return coeffs[i] < o.coeffs[i] ? std::strong_ordering::less : std::strong_ordering::greater;
    if (auto c = coeffs.size() <=> o.coeffs.size(); c != 0)
        return c;
    if (constant != o.constant)
        return constant < o.constant ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

bool LinConstraint::operator==(const LinConstraint& o) const
{
    return rel == o.rel && coeffs == o.coeffs && constant == o.constant;
}

LinConstraint eq(RatVec coeffs, Rat constant) { return {std::move(coeffs), Relation::EQ, std::move(constant)}; }
LinConstraint le(RatVec coeffs, Rat constant) { return {std::move(coeffs), Relation::LE, std::move(constant)}; }
LinConstraint lt(RatVec coeffs, Rat constant) { return {std::move(coeffs), Relation::LT, std::move(constant)}; }

LinConstraint ge(RatVec coeffs, Rat constant)
{
    for (auto& c : coeffs)
        c = -c;
    return {std::move(coeffs), Relation::LE, -constant};
}

LinConstraint gt(RatVec coeffs, Rat constant)
{
    for (auto& c : coeffs)
        c = -c;
    return {std::move(coeffs), Relation::LT, -constant};
}

// ---------------------------------------------------------------- HPolytope

HPolytope::HPolytope(std::size_t ambient_dim, std::vector<LinConstraint> constraints)
    : ambient_dim_(ambient_dim), constraints_(std::move(constraints))
{
    for (const auto& c : constraints_)
        if (c.dim() != ambient_dim_)
            throw InputError("constraint dimension " + std::to_string(c.dim()) + " does not match ambient dimension " +
                             std::to_string(ambient_dim_));
}

HPolytope& HPolytope::add(LinConstraint c)
{
    if (c.dim() != ambient_dim_)
        throw InputError("constraint dimension mismatch");
    constraints_.push_back(std::move(c));
    return *this;
}

HPolytope HPolytope::with(LinConstraint c) const
{
    HPolytope p = *this;
    p.add(std::move(c));
    return p;
}

bool HPolytope::contains(const RatVec& x) const
{
    return std::all_of(constraints_.begin(), constraints_.end(), [&](const auto& c) { return c.satisfied_by(x); });
}

HPolytope HPolytope::canonical() const
{
    std::vector<LinConstraint> cs;
    cs.reserve(constraints_.size());
    for (const auto& c : constraints_)
        cs.push_back(c.normalized());
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    return HPolytope(ambient_dim_, std::move(cs));
}

bool HPolytope::operator==(const HPolytope& o) const
{
    const auto a = canonical();
    const auto b = o.canonical();
    return a.ambient_dim_ == b.ambient_dim_ && a.constraints_ == b.constraints_;
}

// ---------------------------------------------------------------- AffineSystem

std::pair<RatVec, Rat> AffineSystem::reduce(const RatVec& a, const Rat& b) const
{
    RatVec r = a;
    Rat c = b;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rat f = r[pivots_[i]];
        if (sgn(f) == 0)
            continue;
        for (std::size_t j = 0; j < dim_; ++j)
            if (sgn(rows_[i][j]) != 0)
                r[j] -= f * rows_[i][j];
        c -= f * rhs_[i];
    }
    return {std::move(r), std::move(c)};
}

bool AffineSystem::implies(const RatVec& a, const Rat& b) const
{
    auto [r, c] = reduce(a, b);
    return std::all_of(r.begin(), r.end(), [](const Rat& x) { return sgn(x) == 0; }) && sgn(c) == 0;
}

bool AffineSystem::add(const RatVec& a, const Rat& b)
{
    if (a.size() != dim_)
        throw InputError("equation dimension mismatch");
    auto [r, c] = reduce(a, b);
    const auto it = std::find_if(r.begin(), r.end(), [](const Rat& x) { return sgn(x) != 0; });
    if (it == r.end()) {
        if (sgn(c) != 0)
            consistent_ = false;
        return false;
    }
    const std::size_t p = static_cast<std::size_t>(it - r.begin());
    const Rat inv = 1 / r[p];
    for (auto& x : r)
        x *= inv;
    c *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rat f = rows_[i][p];
        if (sgn(f) == 0)
            continue;
        for (std::size_t j = 0; j < dim_; ++j)
            if (sgn(r[j]) != 0)
                rows_[i][j] -= f * r[j];
        rhs_[i] -= f * c;
    }
    rows_.push_back(std::move(r));
    rhs_.push_back(std::move(c));
    pivots_.push_back(p);
    return true;
}

RatVec AffineSystem::particular() const
{
    RatVec x(dim_, Rat(0));
    for (std::size_t i = 0; i < rows_.size(); ++i)
        x[pivots_[i]] = rhs_[i];
    return x;
}

std::vector<RatVec> AffineSystem::null_basis() const
{
    std::vector<bool> is_pivot(dim_, false);
    for (auto p : pivots_)
        is_pivot[p] = true;
    std::vector<RatVec> basis;
    for (std::size_t f = 0; f < dim_; ++f) {
        if (is_pivot[f])
            continue;
        RatVec v(dim_, Rat(0));
        v[f] = 1;
        for (std::size_t i = 0; i < rows_.size(); ++i)
            v[pivots_[i]] = -rows_[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(const std::vector<RatVec>& vectors)
{
    if (vectors.empty())
        return 0;
    AffineSystem sys(vectors.front().size());
    for (const auto& v : vectors)
        sys.add(v, Rat(0));
    return sys.rank();
}

int affine_rank(const std::vector<RatVec>& points)
{
    if (points.empty())
        return -1;
    std::vector<RatVec> diffs;
    for (std::size_t i = 1; i < points.size(); ++i) {
        RatVec d(points[i].size());
        for (std::size_t j = 0; j < d.size(); ++j)
            d[j] = points[i][j] - points[0][j];
        diffs.push_back(std::move(d));
    }
    return static_cast<int>(rank(diffs));
}

// ---------------------------------------------------------------- simplex

namespace {

// Dense simplex tableau for: minimize c.z subject to T z = rhs, z >= 0.
// Bland's rule throughout, so degenerate cycling cannot occur.
class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols)
        : cols_(cols), a_(rows, RatVec(cols + 1, Rat(0))), basis_(rows, 0)
    {
    }

    Rat& at(std::size_t r, std::size_t c) { return a_[r][c]; }
    Rat& rhs(std::size_t r) { return a_[r][cols_]; }
    void set_basic(std::size_t r, std::size_t c) { basis_[r] = c; }
    std::size_t basic(std::size_t r) const { return basis_[r]; }
    std::size_t rows() const { return a_.size(); }

    void pivot(std::size_t r, std::size_t c)
    {
        RatVec& pr = a_[r];
        const Rat inv = 1 / pr[c];
        for (auto& x : pr)
            if (sgn(x) != 0)
                x *= inv;
        std::vector<std::size_t> nz;
        for (std::size_t j = 0; j <= cols_; ++j)
            if (sgn(pr[j]) != 0)
                nz.push_back(j);
        auto eliminate = [&](RatVec& row) {
            const Rat f = row[c];
            if (sgn(f) == 0)
                return;
            for (auto j : nz)
                row[j] -= f * pr[j];
        };
        for (std::size_t i = 0; i < a_.size(); ++i)
            if (i != r)
                eliminate(a_[i]);
        eliminate(obj_);
        basis_[r] = c;
    }

    // Returns false when unbounded.
    bool minimize(const RatVec& cost, const std::vector<bool>& allowed)
    {
        obj_.assign(cols_ + 1, Rat(0));
        for (std::size_t j = 0; j < cols_; ++j)
            obj_[j] = cost[j];
        for (std::size_t i = 0; i < a_.size(); ++i) {
            const Rat cb = cost[basis_[i]];
            if (sgn(cb) == 0)
                continue;
            for (std::size_t j = 0; j <= cols_; ++j)
                if (sgn(a_[i][j]) != 0)
                    obj_[j] -= cb * a_[i][j];
        }
        while (true) {
            std::size_t enter = cols_;
            for (std::size_t j = 0; j < cols_; ++j)
                if (allowed[j] && sgn(obj_[j]) < 0) {
                    enter = j;
                    break;
                }
            if (enter == cols_)
                return true;
            std::size_t leave = a_.size();
            Rat best;
            for (std::size_t i = 0; i < a_.size(); ++i) {
                if (sgn(a_[i][enter]) <= 0)
                    continue;
                Rat ratio = a_[i][cols_] / a_[i][enter];
                if (leave == a_.size() || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = std::move(ratio);
                }
            }
            if (leave == a_.size())
                return false;
            pivot(leave, enter);
        }
    }

    RatVec solution() const
    {
        RatVec z(cols_, Rat(0));
        for (std::size_t i = 0; i < a_.size(); ++i)
            z[basis_[i]] = a_[i][cols_];
        return z;
    }

private:
    std::size_t cols_;
    std::vector<RatVec> a_;
    std::vector<std::size_t> basis_;
    RatVec obj_;
};

} // namespace

SlackResult maximize_slack(const std::vector<LinConstraint>& constraints, std::size_t ambient_dim,
                           const std::vector<bool>& boosted)
{
    SlackResult result;
    AffineSystem eqs(ambient_dim);
    for (const auto& c : constraints) {
        if (c.dim() != ambient_dim)
            throw InputError("constraint dimension " + std::to_string(c.dim()) + " does not match ambient dimension " +
                             std::to_string(ambient_dim));
        if (c.rel == Relation::EQ)
            eqs.add(c.coeffs, c.constant);
    }
    if (!eqs.consistent())
        return result;

    const RatVec x0 = eqs.particular();
    const std::vector<RatVec> basis = eqs.null_basis();
    const std::size_t d = basis.size();

    // Inequalities rewritten over the free parameters y: row . y <= beta.
    struct Row {
        RatVec coeffs;
        Rat beta;
        bool boost;
    };
    std::vector<Row> rows;
    bool any_boost = false;
    for (std::size_t k = 0; k < constraints.size(); ++k) {
        const auto& c = constraints[k];
        if (c.rel == Relation::EQ)
            continue;
        Row r{RatVec(d), c.constant - c.lhs(x0), k < boosted.size() && boosted[k]};
        for (std::size_t j = 0; j < d; ++j)
            r.coeffs[j] = dot(c.coeffs, basis[j]);
        any_boost = any_boost || r.boost;
        rows.push_back(std::move(r));
    }

    // Columns: y+ (d), y- (d), t (optional), one slack per row (+1 for t <= 1),
    // then one artificial per row whose right-hand side is negative.
    const std::size_t m = rows.size() + (any_boost ? 1 : 0);
    const std::size_t t_col = 2 * d;
    const std::size_t slack0 = 2 * d + (any_boost ? 1 : 0);
    std::size_t n_art = 0;
    for (const auto& r : rows)
        if (sgn(r.beta) < 0)
            ++n_art;
    const std::size_t art0 = slack0 + m;
    const std::size_t cols = art0 + n_art;

    if (m == 0) {
        result.feasible = true;
        result.point = x0;
        return result;
    }

    Tableau tab(m, cols);
    std::size_t art = art0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        const bool flip = sgn(r.beta) < 0;
        const Rat s = flip ? Rat(-1) : Rat(1);
        for (std::size_t j = 0; j < d; ++j) {
            if (sgn(r.coeffs[j]) == 0)
                continue;
            tab.at(i, j) = s * r.coeffs[j];
            tab.at(i, d + j) = -s * r.coeffs[j];
        }
        if (r.boost)
            tab.at(i, t_col) = s;
        tab.at(i, slack0 + i) = s;
        tab.rhs(i) = s * r.beta;
        if (flip) {
            tab.at(i, art) = 1;
            tab.set_basic(i, art++);
        } else {
            tab.set_basic(i, slack0 + i);
        }
    }
    if (any_boost) {
        const std::size_t i = rows.size();
        tab.at(i, t_col) = 1;
        tab.at(i, slack0 + i) = 1;
        tab.rhs(i) = 1;
        tab.set_basic(i, slack0 + i);
    }

    std::vector<bool> allowed(cols, true);
    if (n_art > 0) {
        RatVec cost(cols, Rat(0));
        for (std::size_t j = art0; j < cols; ++j)
            cost[j] = 1;
        tab.minimize(cost, allowed);
        const RatVec z = tab.solution();
        for (std::size_t j = art0; j < cols; ++j)
            if (sgn(z[j]) != 0)
                return result;
        for (std::size_t j = art0; j < cols; ++j)
            allowed[j] = false;
        // Drive zero-level artificials out of the basis where possible.
        for (std::size_t i = 0; i < m; ++i) {
            if (tab.basic(i) < art0)
                continue;
            for (std::size_t j = 0; j < art0; ++j)
                if (sgn(tab.at(i, j)) != 0) {
                    tab.pivot(i, j);
                    break;
                }
        }
    }
    result.feasible = true;

    if (any_boost) {
        RatVec cost(cols, Rat(0));
        cost[t_col] = -1;
        tab.minimize(cost, allowed);
    }
    const RatVec z = tab.solution();
    result.slack = any_boost ? z[t_col] : Rat(0);
    result.point = x0;
    for (std::size_t j = 0; j < d; ++j) {
        const Rat y = z[j] - z[d + j];
        if (sgn(y) == 0)
            continue;
        for (std::size_t i = 0; i < ambient_dim; ++i)
            if (sgn(basis[j][i]) != 0)
                result.point[i] += y * basis[j][i];
    }
    return result;
}

namespace {

std::vector<bool> strict_rows(const std::vector<LinConstraint>& cs)
{
    std::vector<bool> b(cs.size());
    for (std::size_t i = 0; i < cs.size(); ++i)
        b[i] = cs[i].rel == Relation::LT;
    return b;
}

// Indices of non-strict inequalities that hold with equality on the whole
// (nonempty) feasible set. Empty optional means the set itself is empty.
std::optional<std::vector<std::size_t>> implicit_equalities(const std::vector<LinConstraint>& cs, std::size_t n)
{
    const auto strict = strict_rows(cs);
    std::vector<bool> all(cs.size());
    for (std::size_t i = 0; i < cs.size(); ++i)
        all[i] = cs[i].rel != Relation::EQ;
    const auto everything = maximize_slack(cs, n, all);
    if (!everything.feasible)
        return std::nullopt;
    if (sgn(everything.slack) > 0)
        return std::vector<std::size_t>{};
    const bool has_strict = std::find(strict.begin(), strict.end(), true) != strict.end();
    if (has_strict) {
        const auto s = maximize_slack(cs, n, strict);
        if (sgn(s.slack) <= 0)
            return std::nullopt;
    }
    std::vector<std::size_t> implicit;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (cs[i].rel != Relation::LE)
            continue;
        auto b = strict;
        b[i] = true;
        if (sgn(maximize_slack(cs, n, b).slack) == 0)
            implicit.push_back(i);
    }
    return implicit;
}

} // namespace

std::optional<RatVec> lp_feasible(const std::vector<LinConstraint>& constraints, std::size_t ambient_dim)
{
    const auto strict = strict_rows(constraints);
    const auto r = maximize_slack(constraints, ambient_dim, strict);
    if (!r.feasible)
        return std::nullopt;
    const bool has_strict = std::find(strict.begin(), strict.end(), true) != strict.end();
    if (has_strict && sgn(r.slack) <= 0)
        return std::nullopt;
    return r.point;
}

std::optional<RatVec> lp_feasible(const HPolytope& p) { return lp_feasible(p.constraints(), p.ambient_dim()); }

int affine_dimension(const HPolytope& p)
{
    const auto& cs = p.constraints();
    const auto implicit = implicit_equalities(cs, p.ambient_dim());
    if (!implicit)
        return -1;
    AffineSystem sys(p.ambient_dim());
    for (const auto& c : cs)
        if (c.rel == Relation::EQ)
            sys.add(c.coeffs, c.constant);
    for (auto i : *implicit)
        sys.add(cs[i].coeffs, cs[i].constant);
    return static_cast<int>(p.ambient_dim() - sys.rank());
}

std::optional<RatVec> relative_interior_point(const HPolytope& p)
{
    auto cs = p.constraints();
    const auto implicit = implicit_equalities(cs, p.ambient_dim());
    if (!implicit)
        return std::nullopt;
    for (auto i : *implicit)
        cs[i].rel = Relation::EQ;
    std::vector<bool> all(cs.size());
    bool any = false;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        all[i] = cs[i].rel != Relation::EQ;
        any = any || all[i];
    }
    const auto r = maximize_slack(cs, p.ambient_dim(), all);
    if (!r.feasible || (any && sgn(r.slack) <= 0))
        return std::nullopt;
    return r.point;
}

bool implies(const HPolytope& p, const LinConstraint& c)
{
    RatVec neg = c.coeffs;
    for (auto& x : neg)
        x = -x;
    switch (c.rel) {
    case Relation::LE: // violation: a.x > b
        return !lp_feasible(p.with(lt(neg, -c.constant)));
    case Relation::LT: // violation: a.x >= b
        return !lp_feasible(p.with(le(neg, -c.constant)));
    case Relation::EQ:
        return !lp_feasible(p.with(lt(c.coeffs, c.constant))) && !lp_feasible(p.with(lt(neg, -c.constant)));
    }
    return false;
}

} // namespace modcomb::geom
