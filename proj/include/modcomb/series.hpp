#pragma once

#include "modcomb/rational.hpp"

#include <map>
#include <string>
#include <vector>

// Truncated exponential power series sum a_n x^n / n! and their inverses, plus
// the differential algebra generated by the permutohedra P^m.
namespace modcomb::series {

constexpr int max_order = 12;

struct ExpSeries {
    RatVec coeffs; // a_0 .. a_N in exponential normalization

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    RatVec ordinary() const; // a_n / n!
    static ExpSeries from_ordinary(const RatVec& c);
    bool operator==(const ExpSeries&) const = default;
};

ExpSeries multiply(const ExpSeries& f, const ExpSeries& g);
// f(g(x)), g without constant term.
ExpSeries compose(const ExpSeries& f, const ExpSeries& g);

// Require a_0 = 1.
ExpSeries mult_inverse_direct(const ExpSeries& f);
ExpSeries mult_inverse_permutohedral(const ExpSeries& f);

// Require a_0 = 0, a_1 = 1.
ExpSeries comp_inverse_direct(const ExpSeries& f);
ExpSeries comp_inverse_strata(const ExpSeries& f);

// A commutative word in the generators P^k, stored as sorted exponents. P^0
// is idempotent, so 0 occurs at most once.
using Word = std::vector<int>;

class PolySum {
public:
    PolySum() = default;
    PolySum(Word w, BigInt c);

    const std::map<Word, BigInt>& terms() const { return terms_; }
    PolySum& operator+=(const PolySum& o);
    PolySum operator+(const PolySum& o) const;
    PolySum operator*(const PolySum& o) const;
    PolySum scaled(const BigInt& c) const;
    bool operator==(const PolySum& o) const = default;
    std::string to_string() const; // "6*P0*P1 + P2"

private:
    std::map<Word, BigInt> terms_;
};

Word normalize(Word w);
PolySum generator(int m);

// d P^m = sum_{s=1}^{m} C(m+1, s) P^{s-1} P^{m-s}, extended by Leibniz.
PolySum differential(const PolySum& p);

// Sends every generator to 1.
BigInt evaluate(const PolySum& p);

constexpr int max_genfun_m = 8;

struct FaceGenFun {
    int m = 0;
    std::vector<PolySum> coeffs; // t^j collects codimension-j faces of P^m

    PolySum at(const BigInt& t) const;
};

FaceGenFun generating_function(int m);
BigInt euler_interior(int m);

} // namespace modcomb::series
