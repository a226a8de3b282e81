#include "modcomb/strata.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace modcomb::strata {

std::string product_type(std::vector<int> valences)
{
    std::sort(valences.rbegin(), valences.rend());
    std::string s;
    for (std::size_t i = 0; i < valences.size(); ++i)
        s += (i ? "xM0" : "M0") + std::to_string(valences[i]);
    return s;
}

BigInt chi_open(int m)
{
    if (m < 3)
        throw InputError("M_{0,m} needs m >= 3");
    BigInt f = factorial(static_cast<unsigned>(m - 3));
    return (m - 3) % 2 ? BigInt(-f) : f;
}

namespace {

void check_range(int n, int lo, int hi, const char* what)
{
    if (n < lo || n > hi)
        throw InputError(std::string(what) + " requires " + std::to_string(lo) + " <= n <= " + std::to_string(hi) +
                         ", got " + std::to_string(n));
}

Subset from_mask(unsigned mask)
{
    Subset s;
    for (int i = 0; mask; ++i, mask >>= 1)
        if (mask & 1u)
            s.push_back(i + 1);
    return s;
}

// Integer partitions of k (non-increasing parts).
void integer_partitions(int k, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (k == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(k, max_part); p >= 1; --p) {
        cur.push_back(p);
        integer_partitions(k - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> compositions(int k)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int left) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = 1; p <= left; ++p) {
            cur.push_back(p);
            rec(left - p);
            cur.pop_back();
        }
    };
    rec(k);
    return out;
}

// All set partitions of the given labels, blocks ordered by least element.
std::vector<Partition> set_partitions(const std::vector<int>& labels)
{
    std::vector<Partition> out;
    Partition cur;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == labels.size()) {
            out.push_back(cur);
            return;
        }
        for (std::size_t b = 0; b < cur.size(); ++b) {
            cur[b].push_back(labels[i]);
            rec(i + 1);
            cur[b].pop_back();
        }
        cur.push_back({labels[i]});
        rec(i + 1);
        cur.pop_back();
    };
    rec(0);
    return out;
}

using Poly = std::map<std::vector<int>, BigInt>; // valence multiset -> count

Poly multiply(const Poly& a, const Poly& b)
{
    Poly out;
    for (const auto& [ka, va] : a)
        for (const auto& [kb, vb] : b) {
            std::vector<int> k;
            std::merge(ka.begin(), ka.end(), kb.begin(), kb.end(), std::back_inserter(k), std::greater<>());
            out[k] += va * vb;
        }
    return out;
}

DMCensus census_from(int n, const std::map<std::vector<int>, BigInt>& valence_counts)
{
    DMCensus c;
    c.n = n;
    c.total = 0;
    c.euler_sum = 0;
    for (const auto& [vals, count] : valence_counts) {
        const std::string t = product_type(vals);
        const int codim = static_cast<int>(vals.size()) - 1;
        c.by_type[t] += count;
        c.by_codim[codim] += count;
        c.by_codim_type[codim][t] += count;
        c.total += count;
        BigInt chi = 1;
        for (int v : vals)
            chi *= chi_open(v);
        c.euler_sum += count * chi;
    }
    return c;
}

} // namespace

std::vector<StableTree> dm_strata(int n)
{
    check_range(n, 4, max_dm_list_n, "dm_strata");
    // Clusters: subsets of {1..n-1} of size 2..n-2, as bitmasks over bit i-1.
    std::vector<unsigned> clusters;
    for (unsigned m = 1; m < (1u << (n - 1)); ++m) {
        const int k = std::popcount(m);
        if (k >= 2 && k <= n - 2)
            clusters.push_back(m);
    }
    std::sort(clusters.begin(), clusters.end(), [](unsigned a, unsigned b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : from_mask(a) < from_mask(b);
    });
    auto compatible = [](unsigned a, unsigned b) { return (a & b) == 0 || (a & b) == a || (a & b) == b; };

    std::vector<StableTree> out;
    std::vector<unsigned> chosen;
    const unsigned all = (1u << n) - 1;
    auto emit = [&] {
        StableTree t;
        std::vector<unsigned> cs = chosen;
        // Valence of each cluster vertex and of the root.
        auto valence = [&](unsigned region, bool root) {
            unsigned covered = 0;
            int children = 0;
            for (unsigned c : cs)
                if (c != region && (c & region) == c) {
                    bool maximal = true;
                    for (unsigned d : cs)
                        if (d != c && d != region && (d & region) == d && (c & d) == c)
                            maximal = false;
                    if (maximal) {
                        ++children;
                        covered |= c;
                    }
                }
            return children + std::popcount(region & ~covered) + (root ? 0 : 1);
        };
        for (unsigned c : cs) {
            t.clusters.push_back(from_mask(c));
            t.valences.push_back(valence(c, false));
        }
        t.valences.push_back(valence(all, true));
        std::sort(t.valences.rbegin(), t.valences.rend());
        out.push_back(std::move(t));
    };
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        emit();
        for (std::size_t i = start; i < clusters.size(); ++i) {
            if (!std::all_of(chosen.begin(), chosen.end(), [&](unsigned c) { return compatible(c, clusters[i]); }))
                continue;
            chosen.push_back(clusters[i]);
            rec(i + 1);
            chosen.pop_back();
        }
    };
    rec(0);
    std::sort(out.begin(), out.end(), [](const StableTree& a, const StableTree& b) {
        return a.codim() != b.codim() ? a.codim() < b.codim() : a.clusters < b.clusters;
    });
    return out;
}

DMCensus census_of(int n, const std::vector<StableTree>& trees)
{
    std::map<std::vector<int>, BigInt> counts;
    for (const auto& t : trees)
        counts[t.valences] += 1;
    return census_from(n, counts);
}

std::map<std::vector<int>, BigInt> dm_valence_census(int n)
{
    check_range(n, 3, max_dm_census_n, "dm_census");
    // T[k]: subtrees hanging below an edge with k legs.
    std::vector<Poly> T(n);
    T[1] = {{{}, BigInt(1)}};
    for (int k = 2; k <= n - 1; ++k) {
        std::vector<std::vector<int>> parts;
        std::vector<int> cur;
        integer_partitions(k, k - 1, cur, parts);
        for (const auto& lambda : parts) {
            // Set partitions of [k] with block sizes lambda.
            BigInt ways = factorial(k);
            std::map<int, int> mult;
            for (int p : lambda) {
                ways /= factorial(p);
                ++mult[p];
            }
            for (const auto& [p, m] : mult)
                ways /= factorial(m);
            Poly prod = {{{static_cast<int>(lambda.size()) + 1}, ways}};
            for (int p : lambda)
                prod = multiply(prod, T[p]);
            for (const auto& [key, v] : prod)
                T[k][key] += v;
        }
    }
    return T[n - 1];
}

DMCensus dm_census(int n) { return census_from(n, dm_valence_census(n)); }

BigInt chi_dm(int n)
{
    if (n < 3)
        throw InputError("chi_dm needs n >= 3");
    std::vector<BigInt> chi(n + 1, BigInt(0));
    chi[3] = 1;
    for (int m = 3; m < n; ++m) {
        BigInt s = 0;
        for (int j = 2; j <= m - 2; ++j)
            s += binomial(m, j) * chi[j + 1] * chi[m - j + 1];
        chi[m + 1] = 2 * chi[m] + s / 2;
    }
    return chi[n];
}

// ------------------------------------------------------------------- reduction

std::string DivisorSpec::type() const { return "F" + std::to_string(factor_i) + "xF" + std::to_string(factor_j); }

std::vector<DivisorSpec> reduction_divisors(const RatVec& A, const RatVec& B)
{
    weights::validate_weight(A);
    weights::validate_weight(B);
    if (A.size() != B.size())
        throw InputError("weight vectors have different lengths");
    for (std::size_t i = 0; i < A.size(); ++i)
        if (B[i] > A[i])
            throw InputError("weights not comparable: b_" + std::to_string(i + 1) + " > a_" + std::to_string(i + 1));
    const int n = static_cast<int>(A.size());
    std::vector<DivisorSpec> out;
    for (int r = 3; r <= n - 2; ++r)
        for (const auto& I : hyper::subsets_of_size(n, r)) {
            const Subset J = hyper::complement(I, n);
            Rat bi = 0, ai = 0, aj = 0;
            for (int i : I) {
                bi += B[i - 1];
                ai += A[i - 1];
            }
            for (int j : J)
                aj += A[j - 1];
            if (bi <= 1 && ai > 1 && aj > 1)
                out.push_back({I, J, r + 1, n - r + 1, bi});
        }
    return out;
}

// ------------------------------------------------------------------- LM

std::vector<int> LMChain::cluster_counts() const
{
    std::vector<int> c;
    for (const auto& b : blocks)
        c.push_back(static_cast<int>(b.size()));
    return c;
}

int LMChain::dim() const
{
    int d = 0;
    for (int c : cluster_counts())
        d += c - 1;
    return d;
}

std::string LMChain::type() const
{
    std::vector<int> v;
    for (int c : cluster_counts())
        v.push_back(c + 2);
    return product_type(v);
}

bool LMChain::coincidence_free() const
{
    for (const auto& b : blocks)
        for (const auto& cl : b)
            if (cl.size() > 1)
                return false;
    return true;
}

bool LMChain::open() const { return k() == 1 && coincidence_free(); }

std::string LMChain::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        s += i ? "|(" : "(";
        for (std::size_t j = 0; j < blocks[i].size(); ++j) {
            s += j ? ",{" : "{";
            for (std::size_t t = 0; t < blocks[i][j].size(); ++t)
                s += (t ? "," : "") + std::to_string(blocks[i][j][t]);
            s += "}";
        }
        s += ")";
    }
    return s;
}

std::vector<LMChain> lm_strata(int n)
{
    check_range(n, 4, max_lm_n, "lm_strata");
    std::vector<int> black;
    for (int i = 3; i <= n; ++i)
        black.push_back(i);
    std::vector<LMChain> out;
    for (const auto& osp : ordered_set_partitions(static_cast<int>(black.size()))) {
        std::vector<std::vector<Partition>> options;
        for (const auto& block : osp) {
            std::vector<int> labels;
            for (int i : block)
                labels.push_back(black[i]);
            std::sort(labels.begin(), labels.end());
            options.push_back(set_partitions(labels));
        }
        LMChain chain;
        std::function<void(std::size_t)> rec = [&](std::size_t b) {
            if (b == options.size()) {
                out.push_back(chain);
                return;
            }
            for (const auto& p : options[b]) {
                chain.blocks.push_back(p);
                rec(b + 1);
                chain.blocks.pop_back();
            }
        };
        rec(0);
    }
    std::sort(out.begin(), out.end(), [](const LMChain& a, const LMChain& b) {
        return a.dim() != b.dim() ? a.dim() > b.dim() : a.to_string() < b.to_string();
    });
    return out;
}

LMCensus lm_census(int n)
{
    LMCensus c;
    c.n = n;
    c.euler_sum = 0;
    for (const auto& ch : lm_strata(n)) {
        ++c.total;
        ++c.by_type[ch.type()];
        ++c.by_dim[ch.dim()];
        BigInt chi = 1;
        for (int k : ch.cluster_counts())
            chi *= chi_open(k + 2);
        c.euler_sum += chi;
        if (ch.open())
            continue;
        if (classify_outgrowth(ch) == Outgrowth::TORIC) {
            ++c.toric_by_dim[ch.dim()];
            if (ch.coincidence_free())
                ++c.orbits_by_dim[ch.dim()];
        } else {
            ++c.extension_by_dim[ch.dim()];
        }
    }
    return c;
}

std::vector<std::pair<int, int>> DegenerationLabel::pairs(int n)
{
    std::vector<std::pair<int, int>> p;
    for (int i = 3; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            p.emplace_back(i, j);
    return p;
}

Degeneration DegenerationLabel::at(int i, int j) const
{
    if (i > j) {
        const Degeneration d = at(j, i);
        return d == Degeneration::ZERO ? Degeneration::INF : (d == Degeneration::INF ? Degeneration::ZERO : d);
    }
    const auto ps = pairs(n);
    const auto it = std::find(ps.begin(), ps.end(), std::make_pair(i, j));
    if (it == ps.end())
        throw InputError("pair outside the black labels");
    return values[it - ps.begin()];
}

std::string DegenerationLabel::to_string() const
{
    std::string s;
    for (auto v : values)
        s.push_back(v == Degeneration::ZERO ? '0' : v == Degeneration::INF ? 'i' : v == Degeneration::ONE ? '1' : 'g');
    return s;
}

DegenerationLabel degeneration_label(const LMChain& c, int n)
{
    std::vector<int> block(n + 1, -1), cluster(n + 1, -1);
    int cid = 0;
    for (std::size_t b = 0; b < c.blocks.size(); ++b)
        for (const auto& cl : c.blocks[b]) {
            for (int i : cl) {
                block[i] = static_cast<int>(b);
                cluster[i] = cid;
            }
            ++cid;
        }
    DegenerationLabel d;
    d.n = n;
    for (auto [i, j] : DegenerationLabel::pairs(n)) {
        if (block[i] < 0 || block[j] < 0)
            throw InputError("chain does not cover the black labels");
        if (block[i] < block[j])
            d.values.push_back(Degeneration::ZERO);
        else if (block[i] > block[j])
            d.values.push_back(Degeneration::INF);
        else if (cluster[i] == cluster[j])
            d.values.push_back(Degeneration::ONE);
        else
            d.values.push_back(Degeneration::GENERIC);
    }
    return d;
}

bool multiplicatively_consistent(const DegenerationLabel& d)
{
    using D = Degeneration;
    auto products = [](D a, D b) -> std::set<D> {
        if (a == D::INF)
            std::swap(a, b);
        if (b == D::ZERO)
            std::swap(a, b);
        // Now a ZERO whenever either factor is ZERO.
        if (a == D::ZERO)
            return b == D::INF ? std::set<D>{D::ZERO, D::INF, D::ONE, D::GENERIC} : std::set<D>{D::ZERO};
        if (a == D::INF || b == D::INF)
            return {D::INF};
        if (a == D::ONE)
            return {b};
        if (b == D::ONE)
            return {a};
        return {D::ONE, D::GENERIC};
    };
    for (int i = 3; i <= d.n; ++i)
        for (int j = i + 1; j <= d.n; ++j)
            for (int k = j + 1; k <= d.n; ++k)
                if (!products(d.at(i, j), d.at(j, k)).count(d.at(i, k)))
                    return false;
    return true;
}

std::string to_string(Outgrowth o) { return o == Outgrowth::TORIC ? "TORIC" : "EXTENSION"; }

Outgrowth classify_outgrowth(const LMChain& c)
{
    if (c.open())
        throw InputError("the open stratum is not an outgrowth");
    return c.k() >= 2 ? Outgrowth::TORIC : Outgrowth::EXTENSION;
}

Outgrowth classify_outgrowth(const DegenerationLabel& d)
{
    bool degenerate = false, one = false;
    for (auto v : d.values) {
        degenerate = degenerate || v == Degeneration::ZERO || v == Degeneration::INF;
        one = one || v == Degeneration::ONE;
    }
    if (!degenerate && !one)
        throw InputError("the open stratum is not an outgrowth");
    return degenerate ? Outgrowth::TORIC : Outgrowth::EXTENSION;
}

// ------------------------------------------------------------------- n = 5 closure oracle

namespace {

// Polynomials in the affine coordinates lambda_34, lambda_35, lambda_45.
using Mono = std::array<int, 3>;
using MPoly = std::map<Mono, BigInt>;

MPoly clean(MPoly p)
{
    for (auto it = p.begin(); it != p.end();)
        it = it->second == 0 ? p.erase(it) : std::next(it);
    return p;
}

MPoly constant(long c) { return clean({{Mono{0, 0, 0}, BigInt(c)}}); }

MPoly variable(int v)
{
    Mono m{0, 0, 0};
    m[v] = 1;
    return {{m, BigInt(1)}};
}

MPoly add(const MPoly& a, const MPoly& b, long sb = 1)
{
    MPoly r = a;
    for (const auto& [m, c] : b)
        r[m] += sb * c;
    return clean(r);
}

MPoly mul(const MPoly& a, const MPoly& b)
{
    MPoly r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b)
            r[{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}] += ca * cb;
    return clean(r);
}

bool is_constant(const MPoly& p) { return p.empty() || (p.size() == 1 && p.begin()->first == Mono{0, 0, 0}); }

int degree_in(const MPoly& p, int v)
{
    int d = 0;
    for (const auto& [m, c] : p)
        d = std::max(d, m[v]);
    return d;
}

// Coefficient of y^k where y is variable v.
MPoly coefficient(const MPoly& p, int v, int k)
{
    MPoly r;
    for (const auto& [m, c] : p)
        if (m[v] == k) {
            Mono mm = m;
            mm[v] = 0;
            r[mm] += c;
        }
    return clean(r);
}

MPoly power(const MPoly& p, int k)
{
    MPoly r = constant(1);
    for (int i = 0; i < k; ++i)
        r = mul(r, p);
    return r;
}

// alpha^d q(-beta / alpha) for d = deg_v q.
MPoly substitute(const MPoly& q, int v, const MPoly& alpha, const MPoly& beta)
{
    const int d = degree_in(q, v);
    MPoly r;
    const MPoly neg_beta = add(MPoly{}, beta, -1);
    for (int i = 0; i <= d; ++i)
        r = add(r, mul(coefficient(q, v, i), mul(power(neg_beta, i), power(alpha, d - i))));
    return r;
}

// Dimension of {eqs = 0, neqs != 0} with the listed variables ranging over
// C minus {0, 1}; -1 when empty.
int locus_dim(std::vector<MPoly> eqs, std::vector<MPoly> neqs, std::vector<int> vars)
{
    std::vector<MPoly> e;
    for (auto& p : eqs) {
        if (p.empty())
            continue;
        if (is_constant(p))
            return -1;
        e.push_back(std::move(p));
    }
    std::vector<MPoly> ne;
    for (auto& p : neqs) {
        if (p.empty())
            return -1;
        if (!is_constant(p))
            ne.push_back(std::move(p));
    }
    if (e.empty())
        return static_cast<int>(vars.size());

    const MPoly p = e.front();
    int y = -1;
    for (int v : vars)
        if (degree_in(p, v) == 1) {
            y = v;
            break;
        }
    if (y < 0)
        throw std::logic_error("closure oracle needs an equation linear in some variable");
    const MPoly alpha = coefficient(p, y, 1);
    const MPoly beta = coefficient(p, y, 0);
    const std::vector<MPoly> rest(e.begin() + 1, e.end());

    // alpha != 0: y = -beta / alpha, which must avoid 0 and 1.
    std::vector<MPoly> ea, na;
    for (const auto& q : rest)
        ea.push_back(substitute(q, y, alpha, beta));
    for (const auto& q : ne)
        na.push_back(substitute(q, y, alpha, beta));
    na.push_back(alpha);
    na.push_back(beta);
    na.push_back(add(alpha, beta));
    std::vector<int> va;
    for (int v : vars)
        if (v != y)
            va.push_back(v);
    const int da = locus_dim(ea, na, va);

    // alpha = beta = 0: y unconstrained by p.
    std::vector<MPoly> eb = rest;
    eb.push_back(alpha);
    eb.push_back(beta);
    const int db = locus_dim(eb, ne, vars);
    return std::max(da, db);
}

} // namespace

std::map<std::string, int> closure_oracle_n5()
{
    using D = Degeneration;
    const std::array<D, 4> classes{D::ZERO, D::INF, D::ONE, D::GENERIC};
    std::map<std::string, int> out;
    for (D d34 : classes)
        for (D d35 : classes)
            for (D d45 : classes) {
                const std::array<D, 3> lab{d34, d35, d45};
                std::array<MPoly, 3> c, cp;
                std::vector<int> vars;
                for (int v = 0; v < 3; ++v) {
                    switch (lab[v]) {
                    case D::ZERO: c[v] = constant(0); cp[v] = constant(1); break;
                    case D::INF: c[v] = constant(1); cp[v] = constant(0); break;
                    case D::ONE: c[v] = constant(1); cp[v] = constant(1); break;
                    case D::GENERIC:
                        c[v] = variable(v);
                        cp[v] = constant(1);
                        vars.push_back(v);
                        break;
                    }
                }
                const MPoly e = add(mul(mul(c[0], cp[1]), c[2]), mul(mul(cp[0], c[1]), cp[2]), -1);
                DegenerationLabel label{5, {d34, d35, d45}};
                out[label.to_string()] = locus_dim({e}, {}, vars);
            }
    return out;
}

// ------------------------------------------------------------------- permutohedron

std::vector<OrderedSetPartition> ordered_set_partitions(int size)
{
    check_range(size, 1, 8, "ordered_set_partitions");
    std::vector<OrderedSetPartition> out;
    std::vector<int> labels(size);
    std::iota(labels.begin(), labels.end(), 0);
    for (const auto& p : set_partitions(labels)) {
        std::vector<int> order(p.size());
        std::iota(order.begin(), order.end(), 0);
        do {
            OrderedSetPartition o;
            for (int i : order)
                o.push_back(p[i]);
            out.push_back(std::move(o));
        } while (std::next_permutation(order.begin(), order.end()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FaceType> permutohedron_face_types(int m)
{
    check_range(m, 0, max_face_m, "permutohedron_faces");
    std::vector<FaceType> out;
    for (auto& comp : compositions(m + 1)) {
        BigInt count = factorial(m + 1);
        for (int s : comp)
            count /= factorial(s);
        const int dim = m + 1 - static_cast<int>(comp.size());
        out.push_back({std::move(comp), count, dim});
    }
    return out;
}

std::vector<BigInt> permutohedron_faces(int m)
{
    std::vector<BigInt> f(m + 1, BigInt(0));
    for (const auto& t : permutohedron_face_types(m))
        f[t.dim] += t.count;
    return f;
}

BigInt fubini(int size)
{
    if (size == 0)
        return 1;
    BigInt total = 0;
    for (const auto& f : permutohedron_faces(size - 1))
        total += f;
    return total;
}

// ------------------------------------------------------------------- building set

Partition one_propagation(int n, const std::vector<Subset>& generators)
{
    std::vector<int> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& g : generators)
        for (std::size_t i = 1; i < g.size(); ++i) {
            if (g[i] < 3 || g[i] > n || g[0] < 3)
                throw InputError("generator outside the black labels");
            parent[find(g[i])] = find(g[0]);
        }
    std::map<int, std::vector<int>> blocks;
    for (int i = 3; i <= n; ++i)
        blocks[find(i)].push_back(i);
    Partition p;
    for (auto& [root, b] : blocks)
        p.push_back(std::move(b));
    return weights::canonical(std::move(p));
}

WonderfulLattice wonderful_building_set(int n)
{
    check_range(n, 5, 8, "wonderful_building_set");
    WonderfulLattice w;
    w.n = n;
    std::vector<int> black;
    for (int i = 3; i <= n; ++i)
        black.push_back(i);
    for (const auto& s : hyper::subsets_of_size(n - 2, 3)) {
        Subset g;
        for (int i : s)
            g.push_back(i + 2);
        w.generators.push_back(std::move(g));
    }
    for (auto& p : set_partitions(black)) {
        auto c = weights::canonical(std::move(p));
        if (std::all_of(c.begin(), c.end(), [](const auto& b) { return b.size() == 1 || b.size() >= 3; }))
            w.elements.push_back(std::move(c));
    }
    std::sort(w.elements.begin(), w.elements.end());
    for (int r = 3; r <= n - 2; ++r)
        for (const auto& s : hyper::subsets_of_size(n - 2, r)) {
            Subset k;
            for (int i : s)
                k.push_back(i + 2);
            w.building.push_back(std::move(k));
        }
    for (std::size_t i = 0; i < w.generators.size(); ++i)
        for (std::size_t j = i + 1; j < w.generators.size(); ++j) {
            const auto meet = one_propagation(n, {w.generators[i], w.generators[j]});
            const auto it = std::lower_bound(w.elements.begin(), w.elements.end(), meet);
            if (it == w.elements.end() || *it != meet)
                throw std::logic_error("meet outside the intersection lattice");
            w.pair_meet[{static_cast<int>(i), static_cast<int>(j)}] = static_cast<int>(it - w.elements.begin());
        }
    return w;
}

std::string WonderfulDivisor::type() const
{
    const int r = static_cast<int>(support.size());
    return "F" + std::to_string(r + 1) + "xF" + std::to_string(n - r + 1);
}

std::vector<WonderfulDivisor> wonderful_divisor_census(int n)
{
    check_range(n, 5, 7, "wonderful_divisor_census");
    std::vector<WonderfulDivisor> out;
    for (const auto& k : wonderful_building_set(n).building)
        out.push_back({n, k, static_cast<int>(k.size()) - 2});
    return out;
}

} // namespace modcomb::strata
