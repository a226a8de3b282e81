#include "modcomb/arrangement.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>
#include <unordered_set>

namespace modcomb::arr {

using geom::AffineSystem;
using geom::Relation;

int sign_of(const Plane& h, const RatVec& x) { return sgn(dot(h.normal, x) - h.offset); }

char sign_char(int s) { return s < 0 ? '-' : (s > 0 ? '+' : '0'); }

unsigned worker_count()
{
    if (const char* env = std::getenv("MODCOMB_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0)
            return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

using Bits = boost::dynamic_bitset<>;

void check_query(const FaceQuery& q)
{
    for (const auto& c : q.carrier) {
        if (c.dim() != q.dim)
            throw InputError("carrier constraint dimension mismatch");
        if (c.rel == Relation::LT)
            throw InputError("carrier must be closed");
    }
    for (const auto& h : q.planes)
        if (h.normal.size() != q.dim)
            throw InputError("plane dimension mismatch");
}

// Overflow-checked machine integers; the rational path takes over on throw.
std::int64_t mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("int64 overflow");
    return r;
}

std::int64_t sub(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("int64 overflow");
    return r;
}

using IntRow = std::vector<std::int64_t>; // coefficients then right-hand side

IntRow to_int_row(const RatVec& a, const Rat& b)
{
    BigInt l = 1;
    for (const auto& x : a)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), b.get_den_mpz_t());
    IntRow r;
    auto push = [&](const Rat& x) {
        const BigInt v = x.get_num() * (l / x.get_den());
        if (!v.fits_slong_p())
            throw std::overflow_error("coefficient too large");
        r.push_back(v.get_si());
    };
    for (const auto& x : a)
        push(x);
    push(b);
    return r;
}

void make_primitive(IntRow& r)
{
    std::int64_t g = 0;
    for (auto x : r)
        g = std::gcd(g, x < 0 ? -x : x);
    if (g > 1)
        for (auto& x : r)
            x /= g;
}

// Reduced echelon form over Q of integer rows, kept primitive.
class IntSystem {
public:
    explicit IntSystem(std::size_t dim) : dim_(dim) {}

    std::size_t rank() const { return rows_.size(); }
    bool consistent() const { return consistent_; }

    IntRow reduce(IntRow r) const
    {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const std::int64_t f = r[pivots_[i]];
            if (f == 0)
                continue;
            const std::int64_t p = rows_[i][pivots_[i]];
            for (std::size_t j = 0; j <= dim_; ++j)
                r[j] = sub(mul(r[j], p), mul(f, rows_[i][j]));
            make_primitive(r);
        }
        return r;
    }

    bool implies(const IntRow& r) const
    {
        const IntRow red = reduce(r);
        return std::all_of(red.begin(), red.end(), [](std::int64_t x) { return x == 0; });
    }

    void add(const IntRow& row)
    {
        IntRow r = reduce(row);
        std::size_t p = 0;
        while (p < dim_ && r[p] == 0)
            ++p;
        if (p == dim_) {
            if (r[dim_] != 0)
                consistent_ = false;
            return;
        }
        if (r[p] < 0)
            for (auto& x : r)
                x = -x;
        for (auto& other : rows_) {
            const std::int64_t f = other[p];
            if (f == 0)
                continue;
            for (std::size_t j = 0; j <= dim_; ++j)
                other[j] = sub(mul(other[j], r[p]), mul(f, r[j]));
            make_primitive(other);
        }
        rows_.push_back(std::move(r));
        pivots_.push_back(p);
    }

    // Unique solution; requires rank() == dim.
    RatVec point() const
    {
        RatVec x(dim_);
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            Rat v(rows_[i][dim_], rows_[i][pivots_[i]]);
            v.canonicalize();
            x[pivots_[i]] = std::move(v);
        }
        return x;
    }

private:
    std::size_t dim_;
    bool consistent_ = true;
    std::vector<IntRow> rows_;
    std::vector<std::size_t> pivots_;
};

// Rational twin of IntSystem for inputs that overflow machine integers.
class RatSystem {
public:
    explicit RatSystem(std::size_t dim) : sys_(dim) {}
    std::size_t rank() const { return sys_.rank(); }
    bool consistent() const { return sys_.consistent(); }
    bool implies(const std::pair<RatVec, Rat>& r) const { return sys_.implies(r.first, r.second); }
    void add(const std::pair<RatVec, Rat>& r) { sys_.add(r.first, r.second); }
    RatVec point() const { return sys_.particular(); }

private:
    AffineSystem sys_;
};

struct Equations {
    std::vector<std::pair<RatVec, Rat>> rat; // planes, then carrier inequalities
    std::vector<std::pair<RatVec, Rat>> base_rat;
};

Equations collect(const FaceQuery& q)
{
    Equations e;
    for (const auto& h : q.planes)
        e.rat.emplace_back(h.normal, h.offset);
    for (const auto& c : q.carrier) {
        if (c.rel == Relation::LE)
            e.rat.emplace_back(c.coeffs, c.constant);
        else
            e.base_rat.emplace_back(c.coeffs, c.constant);
    }
    return e;
}

// Depth-first walk over flats; a flat is identified by the set of equations
// containing it, so each is expanded once.
template <class System, class Row>
std::vector<RatVec> walk_flats(const FaceQuery& q, const std::vector<Row>& eqs, const std::vector<Row>& base_rows)
{
    System base(q.dim);
    for (const auto& r : base_rows)
        base.add(r);
    if (!base.consistent())
        return {};
    auto closure = [&](const System& s, const std::vector<bool>* parent) {
        std::vector<bool> cl(eqs.size());
        for (std::size_t i = 0; i < eqs.size(); ++i)
            cl[i] = (parent && (*parent)[i]) || s.implies(eqs[i]);
        return cl;
    };
    auto in_carrier = [&](const RatVec& x) {
        return std::all_of(q.carrier.begin(), q.carrier.end(), [&](const auto& c) { return c.satisfied_by(x); });
    };

    std::unordered_set<std::vector<bool>> seen;
    std::vector<std::pair<System, std::vector<bool>>> stack;
    stack.emplace_back(base, closure(base, nullptr));
    std::set<RatVec> vertices;
    while (!stack.empty()) {
        auto [sys, cl] = std::move(stack.back());
        stack.pop_back();
        if (sys.rank() == q.dim) {
            RatVec x = sys.point();
            if (in_carrier(x))
                vertices.insert(std::move(x));
            continue;
        }
        // Planes already inside an earlier child flat give the same child.
        std::vector<bool> covered = cl;
        for (std::size_t i = 0; i < eqs.size(); ++i) {
            if (covered[i])
                continue;
            System next = sys;
            next.add(eqs[i]);
            if (!next.consistent())
                continue;
            auto ncl = closure(next, &cl);
            for (std::size_t j = 0; j < eqs.size(); ++j)
                if (ncl[j])
                    covered[j] = true;
            if (seen.insert(ncl).second)
                stack.emplace_back(std::move(next), std::move(ncl));
        }
    }
    return {vertices.begin(), vertices.end()};
}

// Rank of the given equation subsets, memoized; integer path with fallback.
class RankCache {
public:
    RankCache(const std::vector<std::pair<RatVec, Rat>>& eqs, const std::vector<std::pair<RatVec, Rat>>& base)
        : eqs_(eqs), base_(base)
    {
        try {
            for (const auto& e : eqs)
                int_eqs_.push_back(to_int_row(e.first, e.second));
            for (const auto& e : base)
                int_base_.push_back(to_int_row(e.first, e.second));
            use_int_ = true;
        } catch (const std::overflow_error&) {
            use_int_ = false;
        }
    }

    std::size_t rank(const std::vector<std::size_t>& members)
    {
        if (auto it = memo_.find(members); it != memo_.end())
            return it->second;
        const std::size_t dim = eqs_.empty() ? (base_.empty() ? 0 : base_[0].first.size()) : eqs_[0].first.size();
        std::size_t r = 0;
        bool done = false;
        if (use_int_) {
            try {
                IntSystem s(dim);
                for (const auto& b : int_base_)
                    s.add(b);
                for (auto i : members)
                    s.add(int_eqs_[i]);
                r = s.rank();
                done = true;
            } catch (const std::overflow_error&) {
            }
        }
        if (!done) {
            AffineSystem s(dim);
            for (const auto& b : base_)
                s.add(b.first, b.second);
            for (auto i : members)
                s.add(eqs_[i].first, eqs_[i].second);
            r = s.rank();
        }
        memo_.emplace(members, r);
        return r;
    }

private:
    const std::vector<std::pair<RatVec, Rat>>& eqs_;
    const std::vector<std::pair<RatVec, Rat>>& base_;
    std::vector<IntRow> int_eqs_, int_base_;
    bool use_int_ = false;
    std::map<std::vector<std::size_t>, std::size_t> memo_;
};

} // namespace

std::vector<RatVec> arrangement_vertices(const FaceQuery& q)
{
    check_query(q);
    const Equations e = collect(q);
    try {
        std::vector<IntRow> eqs, base;
        for (const auto& r : e.rat)
            eqs.push_back(to_int_row(r.first, r.second));
        for (const auto& r : e.base_rat)
            base.push_back(to_int_row(r.first, r.second));
        return walk_flats<IntSystem>(q, eqs, base);
    } catch (const std::overflow_error&) {
        return walk_flats<RatSystem>(q, e.rat, e.base_rat);
    }
}

std::vector<Region> enumerate_faces(const FaceQuery& q)
{
    const std::vector<RatVec> verts = arrangement_vertices(q);
    const std::size_t nv = verts.size();
    if (nv == 0)
        return {};

    const std::size_t np = q.planes.size();
    std::vector<Bits> pos(np, Bits(nv)), neg(np, Bits(nv));
    for (std::size_t h = 0; h < np; ++h)
        for (std::size_t v = 0; v < nv; ++v) {
            const int s = sign_of(q.planes[h], verts[v]);
            if (s > 0)
                pos[h].set(v);
            else if (s < 0)
                neg[h].set(v);
        }

    std::vector<std::size_t> le;
    for (std::size_t i = 0; i < q.carrier.size(); ++i)
        if (q.carrier[i].rel == Relation::LE)
            le.push_back(i);
    std::vector<Bits> tight(le.size(), Bits(nv));
    for (std::size_t b = 0; b < le.size(); ++b) {
        const auto& c = q.carrier[le[b]];
        for (std::size_t v = 0; v < nv; ++v)
            if (c.lhs(verts[v]) == c.constant)
                tight[b].set(v);
    }

    // Faces of Q: tight sets closed under "tight on every remaining vertex".
    auto close = [&](const Bits& C) {
        std::vector<bool> T(le.size());
        for (std::size_t b = 0; b < le.size(); ++b)
            T[b] = C.is_subset_of(tight[b]);
        return T;
    };
    std::vector<std::pair<std::vector<bool>, Bits>> qfaces;
    {
        Bits all(nv);
        all.set();
        std::deque<std::pair<std::vector<bool>, Bits>> queue;
        std::set<std::vector<bool>> seen;
        queue.emplace_back(close(all), all);
        seen.insert(queue.front().first);
        while (!queue.empty()) {
            auto face = std::move(queue.front());
            queue.pop_front();
            if (!q.full_dimensional_only) {
                for (std::size_t b = 0; b < le.size(); ++b) {
                    if (face.first[b])
                        continue;
                    Bits C = face.second & tight[b];
                    if (C.none())
                        continue;
                    auto T = close(C);
                    if (seen.insert(T).second)
                        queue.emplace_back(std::move(T), std::move(C));
                }
            }
            qfaces.push_back(std::move(face));
        }
    }

    const Equations eqs = collect(q);

    // Vertices over a common denominator, so barycenters are integer sums.
    BigInt common = 1;
    for (const auto& v : verts)
        for (const auto& x : v)
            mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), x.get_den_mpz_t());
    std::vector<std::vector<BigInt>> scaled(nv);
    for (std::size_t v = 0; v < nv; ++v)
        for (const auto& x : verts[v])
            scaled[v].push_back(x.get_num() * (common / x.get_den()));

    auto refine = [&](const std::vector<bool>& T, const Bits& C0, std::vector<Region>& out, RankCache& ranks) {
        std::vector<std::size_t> members;
        std::string tight_str(le.size(), '0');
        for (std::size_t b = 0; b < le.size(); ++b)
            if (T[b]) {
                members.push_back(np + b);
                tight_str[b] = '1';
            }
        if (q.full_dimensional_only && ranks.rank(members) != ranks.rank({}))
            return;
        std::string signs;
        signs.reserve(np);

        auto emit = [&](const Bits& C) {
            Region r;
            r.signs = signs;
            r.carrier_tight = tight_str;
            r.dim = static_cast<int>(q.dim - ranks.rank(members));
            r.vertex_count = C.count();
            std::vector<BigInt> total(q.dim, BigInt(0));
            for (auto v = C.find_first(); v != Bits::npos; v = C.find_next(v))
                for (std::size_t i = 0; i < q.dim; ++i)
                    total[i] += scaled[v][i];
            const BigInt den = common * static_cast<unsigned long>(r.vertex_count);
            for (std::size_t i = 0; i < q.dim; ++i) {
                Rat x(total[i], den);
                x.canonicalize();
                r.witness.push_back(std::move(x));
            }
            out.push_back(std::move(r));
        };

        auto rec = [&](auto&& self, std::size_t k, const Bits& C) -> void {
            if (k == np) {
                emit(C);
                return;
            }
            const Bits P = C & pos[k];
            const Bits N = C & neg[k];
            const bool hp = P.any(), hn = N.any();
            if (hp) {
                signs.push_back('+');
                self(self, k + 1, C - N);
                signs.pop_back();
            }
            if (hn) {
                signs.push_back('-');
                self(self, k + 1, C - P);
                signs.pop_back();
            }
            if (!q.full_dimensional_only && hp == hn) {
                signs.push_back('0');
                members.push_back(k);
                self(self, k + 1, C - P - N);
                members.pop_back();
                signs.pop_back();
            }
        };
        rec(rec, 0, C0);
    };

    std::vector<Region> result;
    std::mutex mu;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        std::vector<Region> local;
        RankCache ranks(eqs.rat, eqs.base_rat);
        for (std::size_t i = next++; i < qfaces.size(); i = next++)
            refine(qfaces[i].first, qfaces[i].second, local, ranks);
        std::lock_guard lock(mu);
        for (auto& r : local)
            result.push_back(std::move(r));
    };
    const unsigned nthreads = std::min<std::size_t>(worker_count(), qfaces.size());
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nthreads; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }

    std::sort(result.begin(), result.end(), [](const Region& a, const Region& b) {
        if (a.dim != b.dim)
            return a.dim < b.dim;
        if (a.signs != b.signs)
            return a.signs < b.signs;
        return a.carrier_tight < b.carrier_tight;
    });
    return result;
}

} // namespace modcomb::arr
