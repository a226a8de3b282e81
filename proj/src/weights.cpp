#include "modcomb/weights.hpp"

#include "modcomb/arrangement.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace modcomb::weights {

using geom::LinConstraint;

namespace {

RatVec indicator(std::size_t n, const Subset& s)
{
    RatVec v(n, Rat(0));
    for (int i : s)
        v[i - 1] = 1;
    return v;
}

Rat subset_sum(const RatVec& t, const Subset& s)
{
    Rat r = 0;
    for (int i : s)
        r += t[i - 1];
    return r;
}

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos)
        return {};
    return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

} // namespace

Partition canonical(Partition p)
{
    for (auto& b : p)
        std::sort(b.begin(), b.end());
    p.erase(std::remove_if(p.begin(), p.end(), [](const auto& b) { return b.empty(); }), p.end());
    std::sort(p.begin(), p.end());
    return p;
}

Partition parse_partition(const std::string& text, int n)
{
    Partition p;
    std::vector<bool> seen(n + 1, false);
    std::stringstream ss(text);
    std::string block;
    while (std::getline(ss, block, '|')) {
        block = trim(block);
        if (block.size() < 2 || block.front() != '{' || block.back() != '}')
            throw InputError("malformed partition block '" + block + "'");
        std::vector<int> b;
        std::stringstream bs(block.substr(1, block.size() - 2));
        std::string item;
        while (std::getline(bs, item, ',')) {
            item = trim(item);
            if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit))
                throw InputError("malformed partition label '" + item + "'");
            const int i = std::stoi(item);
            if (i < 1 || i > n)
                throw InputError("partition label " + item + " outside 1.." + std::to_string(n));
            if (seen[i])
                throw InputError("partition label " + item + " repeated");
            seen[i] = true;
            b.push_back(i);
        }
        if (b.empty())
            throw InputError("empty partition block");
        p.push_back(std::move(b));
    }
    for (int i = 1; i <= n; ++i)
        if (!seen[i])
            throw InputError("partition misses label " + std::to_string(i));
    return canonical(std::move(p));
}

std::string to_string(const Partition& p)
{
    std::string s;
    for (std::size_t k = 0; k < p.size(); ++k) {
        s += k ? "|{" : "{";
        for (std::size_t i = 0; i < p[k].size(); ++i)
            s += (i ? "," : "") + std::to_string(p[k][i]);
        s += "}";
    }
    return s;
}

void validate_linearisation(const RatVec& t)
{
    if (t.empty())
        throw InputError("empty linearisation");
    for (const auto& x : t)
        if (sgn(x) <= 0)
            throw InputError("linearisation entries must be positive");
    if (sum(t) != 2)
        throw InputError("linearisation must sum to 2, got " + modcomb::to_string(sum(t)));
}

void validate_weight(const RatVec& a)
{
    if (a.empty())
        throw InputError("empty weight vector");
    for (const auto& x : a)
        if (sgn(x) <= 0 || x > 1)
            throw InputError("weights must lie in (0, 1], got " + modcomb::to_string(x));
    if (sum(a) <= 2)
        throw InputError("weights must sum to more than 2, got " + modcomb::to_string(sum(a)));
}

std::string to_string(Stability s)
{
    switch (s) {
    case Stability::STABLE: return "STABLE";
    case Stability::STRICTLY_SEMISTABLE: return "STRICTLY_SEMISTABLE";
    case Stability::UNSTABLE: return "UNSTABLE";
    }
    return {};
}

StabilityResult stability(const RatVec& t, const Partition& p)
{
    validate_linearisation(t);
    const int n = static_cast<int>(t.size());
    std::vector<bool> seen(n + 1, false);
    for (const auto& b : p)
        for (int i : b) {
            if (i < 1 || i > n || seen[i])
                throw InputError("partition does not match the linearisation");
            seen[i] = true;
        }
    if (std::count(seen.begin() + 1, seen.end(), true) != n)
        throw InputError("partition does not cover all labels");

    StabilityResult r{Stability::STABLE, Rat(-1), {}};
    for (const auto& b : p) {
        const Rat s = subset_sum(t, b);
        if (s > r.max_block_sum) {
            r.max_block_sum = s;
            r.heaviest_block = b;
        }
    }
    const int c = cmp(r.max_block_sum, 1);
    r.verdict = c > 0 ? Stability::UNSTABLE : (c == 0 ? Stability::STRICTLY_SEMISTABLE : Stability::STABLE);
    return r;
}

Typicality classify_linearisation(const RatVec& t)
{
    validate_linearisation(t);
    const int n = static_cast<int>(t.size());
    for (int k = 2; k <= n - 2; ++k)
        for (const auto& s : hyper::subsets_of_size(n, k))
            if (subset_sum(t, s) == 1)
                return {false, s};
    return {};
}

namespace {

std::vector<Partition> profile(const RatVec& t, bool strict)
{
    validate_linearisation(t);
    const int n = static_cast<int>(t.size());
    if (n > max_profile_n)
        throw InputError("semistable profile limited to n <= " + std::to_string(max_profile_n));
    std::vector<Partition> out;
    Partition cur;
    std::vector<Rat> sums;
    auto fits = [&](const Rat& s) { return strict ? s < 1 : s <= 1; };
    auto rec = [&](auto&& self, int i) -> void {
        if (i > n) {
            out.push_back(cur);
            return;
        }
        const Rat& w = t[i - 1];
        for (std::size_t b = 0; b < cur.size(); ++b) {
            Rat s = sums[b] + w;
            if (!fits(s))
                continue;
            std::swap(sums[b], s);
            cur[b].push_back(i);
            self(self, i + 1);
            cur[b].pop_back();
            std::swap(sums[b], s);
        }
        if (fits(w)) {
            cur.push_back({i});
            sums.push_back(w);
            self(self, i + 1);
            cur.pop_back();
            sums.pop_back();
        }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<Partition> semistable_profile(const RatVec& t) { return profile(t, false); }

std::vector<Partition> stable_profile(const RatVec& t) { return profile(t, true); }

RatVec rescale_to_carrier(const RatVec& a)
{
    if (a.empty())
        throw InputError("empty weight vector");
    for (const auto& x : a)
        if (sgn(x) <= 0 || x > 1)
            throw InputError("weights must lie in (0, 1]");
    const Rat total = sum(a);
    if (total < 2)
        throw InputError("weights must sum to at least 2");
    RatVec b(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        b[i] = 2 * a[i] / total;
    return b;
}

RatVec forget_index(const RatVec& t, int q)
{
    validate_linearisation(t);
    if (q < 1 || q > static_cast<int>(t.size()))
        throw InputError("index to forget is out of range");
    const Rat scale = Rat(2) / (2 - t[q - 1]);
    RatVec out;
    for (int i = 1; i <= static_cast<int>(t.size()); ++i)
        if (i != q)
            out.push_back(t[i - 1] * scale);
    return out;
}

std::vector<Partition> forget_in_profile(const std::vector<Partition>& prof, int q)
{
    std::set<Partition> image;
    for (const auto& p : prof) {
        Partition r;
        for (const auto& b : p) {
            std::vector<int> nb;
            for (int i : b)
                if (i != q)
                    nb.push_back(i > q ? i - 1 : i);
            r.push_back(std::move(nb));
        }
        image.insert(canonical(std::move(r)));
    }
    return {image.begin(), image.end()};
}

std::vector<Subset> fine_walls(int n)
{
    std::vector<Subset> out;
    for (int k = 2; k <= n - 2; ++k)
        for (auto& s : hyper::subsets_of_size(n, k))
            out.push_back(std::move(s));
    return out;
}

std::vector<Subset> coarse_walls(int n)
{
    std::vector<Subset> out;
    for (int k = 3; k < n - 2; ++k)
        for (auto& s : hyper::subsets_of_size(n, k))
            out.push_back(std::move(s));
    return out;
}

std::string fine_signs(const RatVec& a)
{
    std::string s;
    for (const auto& w : fine_walls(static_cast<int>(a.size())))
        s.push_back(arr::sign_char(cmp(subset_sum(a, w), 1)));
    return s;
}

namespace {

constexpr int max_fine_n = 6;

std::size_t wall_rank(std::size_t n, const std::vector<Subset>& walls, const std::string& signs)
{
    std::vector<RatVec> normals;
    for (std::size_t j = 0; j < walls.size(); ++j)
        if (signs[j] == '0')
            normals.push_back(indicator(n, walls[j]));
    return geom::rank(normals);
}

} // namespace

std::vector<FineCell> fine_chambers(int n)
{
    if (n < 4 || n > max_fine_n)
        throw InputError("fine chambers limited to 4 <= n <= " + std::to_string(max_fine_n));
    arr::FaceQuery q;
    q.dim = n;
    q.full_dimensional_only = true;
    q.carrier.push_back(geom::ge(RatVec(n, Rat(1)), Rat(2)));
    for (int i = 1; i <= n; ++i) {
        q.carrier.push_back(geom::ge(indicator(n, {i}), Rat(0)));
        q.carrier.push_back(geom::le(indicator(n, {i}), Rat(1)));
    }
    for (const auto& w : fine_walls(n))
        q.planes.push_back({indicator(n, w), Rat(1)});
    std::vector<FineCell> out;
    for (auto& r : arr::enumerate_faces(q))
        out.push_back({std::move(r.signs), std::move(r.witness), r.dim});
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.id < y.id; });
    return out;
}

WeightLocation locate_weight(const RatVec& a)
{
    validate_weight(a);
    const std::size_t n = a.size();
    WeightLocation loc;
    loc.id = fine_signs(a);
    loc.wall = loc.id.find('0') != std::string::npos;
    loc.dim = static_cast<int>(n - wall_rank(n, fine_walls(static_cast<int>(n)), loc.id));
    return loc;
}

std::vector<FineCell> xi(const hyper::Arrangement& arrangement, const hyper::Chamber& c)
{
    if (c.on_boundary)
        throw InputError("xi is defined for chambers inside the open hypersimplex");
    const std::size_t n = arrangement.n;
    const RatVec& w = c.witness;
    const auto walls = fine_walls(arrangement.n);
    const std::string base = fine_signs(w);
    std::vector<std::size_t> local;
    for (std::size_t j = 0; j < walls.size(); ++j)
        if (base[j] == '0')
            local.push_back(j);

    // Local sign patterns tau realized by directions d with sum d > 0. The
    // cone is scaled so that strict rows become >= 1 / <= -1.
    std::vector<LinConstraint> cone{geom::ge(RatVec(n, Rat(1)), Rat(1))};
    std::string pattern;
    std::vector<std::pair<std::string, RatVec>> found;
    auto rec = [&](auto&& self, std::size_t k) -> void {
        const auto direction = geom::lp_feasible(cone, n);
        if (!direction)
            return;
        if (k == local.size()) {
            found.emplace_back(pattern, *direction);
            return;
        }
        const RatVec normal = indicator(n, walls[local[k]]);
        for (char s : {'+', '0', '-'}) {
            cone.push_back(s == '+'   ? geom::ge(normal, Rat(1))
                           : s == '-' ? geom::le(normal, Rat(-1))
                                      : geom::eq(normal, Rat(0)));
            pattern.push_back(s);
            self(self, k + 1);
            pattern.pop_back();
            cone.pop_back();
        }
    };
    rec(rec, 0);

    std::vector<FineCell> out;
    for (const auto& [tau, d] : found) {
        std::string expect = base;
        for (std::size_t k = 0; k < local.size(); ++k)
            expect[local[k]] = tau[k];
        Rat step = 1;
        RatVec p;
        for (int iter = 0;; ++iter) {
            if (iter > 200)
                throw std::logic_error("no witness found for a local cell");
            p = w;
            for (std::size_t i = 0; i < n; ++i)
                p[i] += step * d[i];
            const bool in_domain = std::all_of(p.begin(), p.end(), [](const Rat& x) { return sgn(x) > 0 && x <= 1; });
            if (in_domain && sum(p) > 2 && fine_signs(p) == expect)
                break;
            step /= 2;
        }
        const int dim = static_cast<int>(n - wall_rank(n, walls, expect));
        out.push_back({expect, std::move(p), dim});
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.id < y.id; });
    return out;
}

int facet_cover_count(const hyper::Arrangement& a, const hyper::Chamber& c, int k)
{
    const int zeros = hyper::zero_pi_count(a, c);
    if (k != zeros)
        throw InputError("chamber lies on " + std::to_string(zeros) + " PI planes, not " + std::to_string(k));
    const auto cells = xi(a, c);
    return static_cast<int>(
        std::count_if(cells.begin(), cells.end(), [&](const FineCell& f) { return f.dim == c.dim + 1; }));
}

} // namespace modcomb::weights
