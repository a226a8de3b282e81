#include "modcomb/hypersimplex.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <stdexcept>

namespace modcomb::hyper {

using geom::LinConstraint;

namespace {

RatVec indicator(int n, const Subset& s)
{
    RatVec v(n, Rat(0));
    for (int i : s)
        v[i - 1] = 1;
    return v;
}

std::string subset_string(const Subset& s)
{
    std::string out;
    for (int i : s)
        out += std::to_string(i);
    return out;
}

void check_n(int n)
{
    if (n < 4 || n > max_n)
        throw InputError("n must lie in [4, " + std::to_string(max_n) + "], got " + std::to_string(n));
}

} // namespace

Subset complement(const Subset& s, int n)
{
    Subset c;
    for (int i = 1; i <= n; ++i)
        if (!std::binary_search(s.begin(), s.end(), i))
            c.push_back(i);
    return c;
}

std::vector<Subset> subsets_of_size(int n, int k)
{
    std::vector<Subset> out;
    if (k < 0 || k > n)
        return out;
    Subset s(k);
    for (int i = 0; i < k; ++i)
        s[i] = i + 1;
    while (true) {
        out.push_back(s);
        int i = k - 1;
        while (i >= 0 && s[i] == n - k + i + 1)
            --i;
        if (i < 0)
            break;
        ++s[i];
        for (int j = i + 1; j < k; ++j)
            s[j] = s[j - 1] + 1;
    }
    return out;
}

std::string Hyperplane::label() const
{
    switch (kind) {
    case PlaneKind::PI: return "x" + subset_string(subset) + "=1";
    case PlaneKind::ZERO: return "x" + std::to_string(subset[0]) + "=0";
    case PlaneKind::ONE: return "x" + std::to_string(subset[0]) + "=1";
    }
    return {};
}

std::optional<std::size_t> Arrangement::pi_index(const Subset& s) const
{
    if (auto it = pi_lookup.find(s); it != pi_lookup.end())
        return it->second;
    if (auto it = pi_lookup.find(complement(s, n)); it != pi_lookup.end())
        return it->second;
    return std::nullopt;
}

int Arrangement::pi_sign(const Subset& s, const std::string& signs) const
{
    const auto idx = pi_index(s);
    if (!idx)
        throw InputError("subset is not a plane of the arrangement");
    const int sg = signs[*idx] == '+' ? 1 : (signs[*idx] == '-' ? -1 : 0);
    return hyperplanes[*idx].subset == s ? sg : -sg;
}

std::string Arrangement::sign_vector(const RatVec& x) const
{
    if (x.size() != static_cast<std::size_t>(n))
        throw InputError("point dimension does not match n");
    std::string s;
    s.reserve(hyperplanes.size());
    for (const auto& h : hyperplanes)
        s.push_back(arr::sign_char(arr::sign_of(h.plane, x)));
    return s;
}

arr::FaceQuery Arrangement::face_query() const
{
    arr::FaceQuery q;
    q.dim = n;
    q.carrier = carrier.constraints();
    for (const auto& h : hyperplanes)
        q.planes.push_back(h.plane);
    return q;
}

Arrangement build_arrangement(int n)
{
    check_n(n);
    Arrangement a;
    a.n = n;
    for (int k = 2; 2 * k <= n; ++k)
        for (auto& s : subsets_of_size(n, k)) {
            if (2 * k == n && s.front() != 1)
                continue;
            a.pi_lookup[s] = a.hyperplanes.size();
            a.hyperplanes.push_back({PlaneKind::PI, s, {indicator(n, s), Rat(1)}});
        }
    a.pi_count = a.hyperplanes.size();
    for (int i = 1; i <= n; ++i)
        a.hyperplanes.push_back({PlaneKind::ZERO, {i}, {indicator(n, {i}), Rat(0)}});
    for (int i = 1; i <= n; ++i)
        a.hyperplanes.push_back({PlaneKind::ONE, {i}, {indicator(n, {i}), Rat(1)}});

    std::vector<LinConstraint> cs;
    cs.push_back(geom::eq(RatVec(n, Rat(1)), Rat(2)));
    for (int i = 1; i <= n; ++i) {
        cs.push_back(geom::ge(indicator(n, {i}), Rat(0)));
        cs.push_back(geom::le(indicator(n, {i}), Rat(1)));
    }
    a.carrier = geom::HPolytope(n, std::move(cs));
    return a;
}

std::vector<Chamber> enumerate_chambers(const Arrangement& a)
{
    const auto regions = arr::enumerate_faces(a.face_query());
    std::vector<Chamber> out;
    out.reserve(regions.size());
    for (const auto& r : regions) {
        Chamber c;
        c.id = static_cast<int>(out.size());
        c.signs = r.signs;
        c.witness = r.witness;
        c.dim = r.dim;
        for (std::size_t j = a.pi_count; j < a.hyperplanes.size(); ++j)
            if (r.signs[j] == '0')
                c.on_boundary = true;
        if (!out.empty() && out.back().signs == c.signs)
            throw std::logic_error("duplicate chamber sign vector");
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<Chamber> enumerate_chambers(int n) { return enumerate_chambers(build_arrangement(n)); }

geom::HPolytope chamber_region(const Arrangement& a, const std::string& signs)
{
    geom::HPolytope p = a.carrier;
    for (std::size_t j = 0; j < a.hyperplanes.size(); ++j) {
        const auto& h = a.hyperplanes[j].plane;
        switch (signs.at(j)) {
        case '+': p.add(geom::gt(h.normal, h.offset)); break;
        case '-': p.add(geom::lt(h.normal, h.offset)); break;
        default: p.add(geom::eq(h.normal, h.offset)); break;
        }
    }
    return p;
}

std::optional<int> locate(const Arrangement& a, const std::vector<Chamber>& chambers, const RatVec& x)
{
    if (!a.carrier.contains(x))
        throw InputError("point " + to_string(x) + " is not in the hypersimplex");
    const std::string s = a.sign_vector(x);
    for (const auto& c : chambers)
        if (c.signs == s)
            return c.id;
    return std::nullopt;
}

int zero_pi_count(const Arrangement& a, const Chamber& c)
{
    return static_cast<int>(std::count(c.signs.begin(), c.signs.begin() + a.pi_count, '0'));
}

// ---------------------------------------------------------------- admissible

std::string AdmissiblePolytope::label() const
{
    switch (kind) {
    case PolyKind::FULL: return "FULL";
    case PolyKind::SECTION: return "SECTION(" + subset_string(subsets[0]) + ")";
    case PolyKind::CUTS: {
        std::string s = "CUTS(";
        for (std::size_t i = 0; i < subsets.size(); ++i)
            s += (i ? "," : "") + subset_string(subsets[i]);
        return s + ")";
    }
    }
    return {};
}

std::vector<LinConstraint> AdmissiblePolytope::interior_constraints() const
{
    const std::size_t n = hrep.ambient_dim();
    std::vector<LinConstraint> cs;
    cs.push_back(geom::eq(RatVec(n, Rat(1)), Rat(2)));
    for (std::size_t i = 1; i <= n; ++i) {
        cs.push_back(geom::gt(indicator(n, {static_cast<int>(i)}), Rat(0)));
        cs.push_back(geom::lt(indicator(n, {static_cast<int>(i)}), Rat(1)));
    }
    if (kind == PolyKind::SECTION)
        cs.push_back(geom::eq(indicator(n, subsets[0]), Rat(1)));
    if (kind == PolyKind::CUTS)
        for (const auto& s : subsets)
            cs.push_back(geom::lt(indicator(n, s), Rat(1)));
    return cs;
}

bool AdmissiblePolytope::interior_contains(const RatVec& x) const
{
    const auto cs = interior_constraints();
    return std::all_of(cs.begin(), cs.end(), [&](const auto& c) { return c.satisfied_by(x); });
}

AdmissibleCensus admissible_census(int n)
{
    check_n(n);
    const Arrangement a = build_arrangement(n);
    AdmissibleCensus census;

    auto finish = [&](AdmissiblePolytope p) {
        p.id = static_cast<int>(census.polytopes.size());
        p.dim = geom::affine_dimension(p.hrep);
        census.polytopes.push_back(std::move(p));
    };

    finish({0, PolyKind::FULL, {}, a.carrier, 0});

    for (std::size_t j = 0; j < a.pi_count; ++j) {
        const Subset& s = a.hyperplanes[j].subset;
        AdmissiblePolytope p{0, PolyKind::SECTION, {s}, a.carrier.with(geom::eq(indicator(n, s), Rat(1))), 0};
        if (!geom::lp_feasible(p.interior_constraints(), n))
            throw std::logic_error("empty section polytope");
        finish(std::move(p));
    }

    std::vector<Subset> cut_sets;
    for (int k = 2; k <= n - 2; ++k)
        for (auto& s : subsets_of_size(n, k))
            cut_sets.push_back(std::move(s));

    std::vector<std::vector<Subset>> families;
    std::vector<Subset> current;
    auto grow = [&](auto&& self, std::size_t start, unsigned used) -> void {
        for (std::size_t i = start; i < cut_sets.size(); ++i) {
            unsigned mask = 0;
            for (int e : cut_sets[i])
                mask |= 1u << e;
            if (mask & used)
                continue;
            current.push_back(cut_sets[i]);
            families.push_back(current);
            self(self, i + 1, used | mask);
            current.pop_back();
        }
    };
    grow(grow, 0, 0);
    std::stable_sort(families.begin(), families.end(),
                     [](const auto& x, const auto& y) { return x.size() < y.size(); });

    for (auto& fam : families) {
        geom::HPolytope h = a.carrier;
        for (const auto& s : fam)
            h.add(geom::le(indicator(n, s), Rat(1)));
        AdmissiblePolytope p{0, PolyKind::CUTS, fam, std::move(h), 0};
        if (geom::lp_feasible(p.interior_constraints(), n))
            finish(std::move(p));
        else
            census.rejected.push_back(std::move(fam));
    }
    return census;
}

std::vector<AdmissiblePolytope> enumerate_admissible(int n) { return admissible_census(n).polytopes; }

OmegaResult omega_set(const Arrangement& a, const Chamber& c, const std::vector<AdmissiblePolytope>& polys)
{
    OmegaResult res;
    if (c.on_boundary)
        return res;
    const geom::HPolytope region = chamber_region(a, c.signs);
    const geom::HPolytope canon = region.canonical();
    auto syntactic = [&](const LinConstraint& k) {
        return std::binary_search(canon.constraints().begin(), canon.constraints().end(), k.normalized());
    };
    for (const auto& p : polys) {
        if (static_cast<std::size_t>(p.hrep.ambient_dim()) != static_cast<std::size_t>(a.n))
            throw InputError("admissible polytope built for a different n");
        if (!p.interior_contains(c.witness))
            continue; // the witness itself certifies C is not inside
        for (const auto& k : p.interior_constraints()) {
            if (syntactic(k))
                continue;
            ++res.lp_certified;
            if (!geom::implies(region, k))
                throw std::logic_error("chamber witness inside " + p.label() + " but containment fails");
        }
        res.members.push_back(p.id);
    }
    return res;
}

std::vector<std::pair<int, int>> chamber_adjacency(const std::vector<Chamber>& chambers)
{
    using Bits = boost::dynamic_bitset<>;
    if (chambers.empty())
        return {};
    const std::size_t m = chambers.front().signs.size();
    std::vector<Bits> pos(chambers.size(), Bits(m)), neg(chambers.size(), Bits(m));
    int max_dim = 0;
    for (std::size_t i = 0; i < chambers.size(); ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (chambers[i].signs[j] == '+')
                pos[i].set(j);
            else if (chambers[i].signs[j] == '-')
                neg[i].set(j);
        }
        max_dim = std::max(max_dim, chambers[i].dim);
    }
    std::vector<std::vector<std::size_t>> by_dim(max_dim + 2);
    for (std::size_t i = 0; i < chambers.size(); ++i)
        by_dim[chambers[i].dim].push_back(i);

    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < chambers.size(); ++i)
        for (std::size_t k : by_dim[chambers[i].dim + 1])
            if (pos[i].is_subset_of(pos[k]) && neg[i].is_subset_of(neg[k]))
                out.emplace_back(chambers[i].id, chambers[k].id);
    std::sort(out.begin(), out.end());
    return out;
}

RatVec permute(const RatVec& x, const std::vector<int>& perm)
{
    RatVec y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        y[perm[i]] = x[i];
    return y;
}

Subset permute(const Subset& s, const std::vector<int>& perm)
{
    Subset t;
    for (int i : s)
        t.push_back(perm[i - 1] + 1);
    std::sort(t.begin(), t.end());
    return t;
}

RatVec sample_interior(int n, std::mt19937_64& rng)
{
    std::vector<RatVec> verts;
    for (const auto& s : subsets_of_size(n, 2))
        verts.push_back(indicator(n, s));
    return sample_hull(verts, rng);
}

RatVec sample_hull(const std::vector<RatVec>& points, std::mt19937_64& rng)
{
    if (points.empty())
        throw InputError("cannot sample from an empty point set");
    std::uniform_int_distribution<long> dist(1, 1000);
    RatVec x(points.front().size(), Rat(0));
    Rat total = 0;
    for (const auto& p : points) {
        const long w = dist(rng);
        total += w;
        for (std::size_t i = 0; i < x.size(); ++i)
            x[i] += w * p[i];
    }
    for (auto& v : x)
        v /= total;
    return x;
}

std::vector<RatVec> arrangement_vertices(const Arrangement& a) { return arr::arrangement_vertices(a.face_query()); }

std::vector<RatVec> chamber_vertices(const Arrangement& a, const std::vector<RatVec>& vertices, const Chamber& c)
{
    std::vector<RatVec> out;
    for (const auto& v : vertices) {
        bool ok = true;
        for (std::size_t j = 0; j < a.hyperplanes.size() && ok; ++j) {
            const int s = arr::sign_of(a.hyperplanes[j].plane, v);
            const char ch = c.signs[j];
            ok = (ch == '0' && s == 0) || (ch == '+' && s >= 0) || (ch == '-' && s <= 0);
        }
        if (ok)
            out.push_back(v);
    }
    return out;
}

} // namespace modcomb::hyper
