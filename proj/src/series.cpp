#include "modcomb/series.hpp"

#include "modcomb/strata.hpp"

#include <algorithm>

namespace modcomb::series {

namespace {

void check_order(const ExpSeries& f, int min_order)
{
    if (f.order() < min_order)
        throw InputError("series needs at least " + std::to_string(min_order + 1) + " coefficients");
    if (f.order() > max_order)
        throw InputError("series order is capped at " + std::to_string(max_order));
}

void check_mult(const ExpSeries& f)
{
    check_order(f, 0);
    if (f.coeffs[0] != 1)
        throw InputError("multiplicative inversion needs a_0 = 1");
}

void check_comp(const ExpSeries& f)
{
    check_order(f, 1);
    if (f.coeffs[0] != 0 || f.coeffs[1] != 1)
        throw InputError("compositional inversion needs a_0 = 0 and a_1 = 1");
}

Rat fact(int n) { return Rat(factorial(static_cast<unsigned>(n))); }

RatVec ordinary_product(const RatVec& a, const RatVec& b, int order)
{
    RatVec c(order + 1, Rat(0));
    for (int i = 0; i <= order && i < static_cast<int>(a.size()); ++i)
        if (a[i] != 0)
            for (int j = 0; i + j <= order && j < static_cast<int>(b.size()); ++j)
                c[i + j] += a[i] * b[j];
    return c;
}

} // namespace

RatVec ExpSeries::ordinary() const
{
    RatVec c(coeffs.size());
    for (std::size_t n = 0; n < coeffs.size(); ++n)
        c[n] = coeffs[n] / fact(static_cast<int>(n));
    return c;
}

ExpSeries ExpSeries::from_ordinary(const RatVec& c)
{
    ExpSeries f;
    for (std::size_t n = 0; n < c.size(); ++n)
        f.coeffs.push_back(c[n] * fact(static_cast<int>(n)));
    return f;
}

ExpSeries multiply(const ExpSeries& f, const ExpSeries& g)
{
    const int order = std::min(f.order(), g.order());
    return ExpSeries::from_ordinary(ordinary_product(f.ordinary(), g.ordinary(), order));
}

ExpSeries compose(const ExpSeries& f, const ExpSeries& g)
{
    if (g.coeffs.empty() || g.coeffs[0] != 0)
        throw InputError("inner series must have zero constant term");
    const int order = std::min(f.order(), g.order());
    const RatVec a = f.ordinary(), b = g.ordinary();
    RatVec out(order + 1, Rat(0)), power(order + 1, Rat(0));
    power[0] = 1;
    for (int k = 0; k <= order; ++k) {
        for (int i = 0; i <= order; ++i)
            out[i] += a[k] * power[i];
        power = ordinary_product(power, b, order);
    }
    return ExpSeries::from_ordinary(out);
}

ExpSeries mult_inverse_direct(const ExpSeries& f)
{
    check_mult(f);
    const int N = f.order();
    ExpSeries g;
    g.coeffs.assign(N + 1, Rat(0));
    g.coeffs[0] = 1;
    for (int n = 1; n <= N; ++n)
        for (int k = 1; k <= n; ++k)
            g.coeffs[n] -= Rat(binomial(n, k)) * f.coeffs[k] * g.coeffs[n - k];
    return g;
}

ExpSeries mult_inverse_permutohedral(const ExpSeries& f)
{
    check_mult(f);
    const int N = f.order();
    ExpSeries g;
    g.coeffs.assign(N + 1, Rat(0));
    g.coeffs[0] = 1;
    for (int n = 1; n <= N; ++n)
        for (const auto& face : strata::permutohedron_face_types(n - 1)) {
            Rat term = face.composition.size() % 2 ? Rat(-face.count) : Rat(face.count);
            for (int s : face.composition)
                term *= f.coeffs[s];
            g.coeffs[n] += term;
        }
    return g;
}

ExpSeries comp_inverse_direct(const ExpSeries& f)
{
    check_comp(f);
    const int N = f.order();
    const RatVec a = f.ordinary();
    RatVec g(N + 1, Rat(0));
    g[1] = 1;
    // f(g(y)) = y determines g_n from g_1 .. g_{n-1}.
    for (int n = 2; n <= N; ++n) {
        RatVec power = g;
        for (int k = 2; k <= n; ++k) {
            power = ordinary_product(power, g, n);
            g[n] -= a[k] * power[n];
        }
    }
    return ExpSeries::from_ordinary(g);
}

ExpSeries comp_inverse_strata(const ExpSeries& f)
{
    check_comp(f);
    const int N = f.order();
    ExpSeries g;
    g.coeffs.assign(N + 1, Rat(0));
    g.coeffs[1] = 1;
    for (int n = 2; n <= N; ++n)
        for (const auto& [valences, count] : strata::dm_valence_census(n + 1)) {
            Rat term(count);
            for (int v : valences)
                term *= -f.coeffs[v - 1];
            g.coeffs[n] += term;
        }
    return g;
}

// ------------------------------------------------------------------- PolySum

Word normalize(Word w)
{
    std::sort(w.begin(), w.end());
    const auto zeros = std::count(w.begin(), w.end(), 0);
    if (zeros > 1)
        w.erase(w.begin(), w.begin() + (zeros - 1));
    return w;
}

PolySum::PolySum(Word w, BigInt c)
{
    if (c != 0)
        terms_.emplace(normalize(std::move(w)), std::move(c));
}

PolySum& PolySum::operator+=(const PolySum& o)
{
    for (const auto& [w, c] : o.terms_) {
        auto& slot = terms_[w];
        slot += c;
        if (slot == 0)
            terms_.erase(w);
    }
    return *this;
}

PolySum PolySum::operator+(const PolySum& o) const
{
    PolySum r = *this;
    r += o;
    return r;
}

PolySum PolySum::operator*(const PolySum& o) const
{
    PolySum r;
    for (const auto& [wa, ca] : terms_)
        for (const auto& [wb, cb] : o.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r += PolySum(std::move(w), ca * cb);
        }
    return r;
}

PolySum PolySum::scaled(const BigInt& c) const
{
    PolySum r;
    for (const auto& [w, v] : terms_)
        r += PolySum(w, v * c);
    return r;
}

std::string PolySum::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto& [w, c] : terms_) {
        if (!s.empty())
            s += c < 0 ? " - " : " + ";
        else if (c < 0)
            s += "-";
        const BigInt mag = abs(c);
        std::string word;
        for (int k : w)
            word += (word.empty() ? "P" : "*P") + std::to_string(k);
        if (word.empty())
            s += mag.get_str();
        else
            s += (mag == 1 ? "" : mag.get_str() + "*") + word;
    }
    return s;
}

PolySum generator(int m)
{
    if (m < 0)
        throw InputError("generator index must be >= 0");
    return PolySum({m}, 1);
}

namespace {

PolySum d_generator(int m)
{
    PolySum r;
    for (int s = 1; s <= m; ++s)
        r += PolySum({s - 1, m - s}, binomial(m + 1, s));
    return r;
}

} // namespace

PolySum differential(const PolySum& p)
{
    PolySum r;
    for (const auto& [w, c] : p.terms()) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            Word rest = w;
            rest.erase(rest.begin() + i);
            r += (d_generator(w[i]) * PolySum(rest, 1)).scaled(c);
        }
    }
    return r;
}

BigInt evaluate(const PolySum& p)
{
    BigInt s = 0;
    for (const auto& [w, c] : p.terms())
        s += c;
    return s;
}

PolySum FaceGenFun::at(const BigInt& t) const
{
    PolySum r;
    BigInt power = 1;
    for (const auto& c : coeffs) {
        r += c.scaled(power);
        power *= t;
    }
    return r;
}

FaceGenFun generating_function(int m)
{
    if (m < 0 || m > max_genfun_m)
        throw InputError("generating function needs 0 <= m <= " + std::to_string(max_genfun_m));
    FaceGenFun F;
    F.m = m;
    F.coeffs.assign(m + 1, PolySum());
    for (const auto& face : strata::permutohedron_face_types(m)) {
        Word w;
        for (int s : face.composition)
            w.push_back(s - 1);
        F.coeffs[face.composition.size() - 1] += PolySum(std::move(w), face.count);
    }
    return F;
}

BigInt euler_interior(int m) { return evaluate(generating_function(m).at(-1)); }

} // namespace modcomb::series
