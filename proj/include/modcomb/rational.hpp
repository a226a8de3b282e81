#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace modcomb {

// Arbitrary-precision rational, always kept in lowest terms with a positive
// denominator. gmpxx expression templates give exact +, -, *, / for free.
using Rat = mpq_class;
using RatVec = std::vector<Rat>;
using BigInt = mpz_class;

// Thrown for malformed user input: bad rationals, out-of-range n, violated
// preconditions. The CLI maps it to exit code 1.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Parses "p/q", "p", "-p/q" (whitespace around the token is ignored).
Rat parse_rat(std::string_view text);

// Comma-separated list of rationals, e.g. "1/2,2/3,5/18".
RatVec parse_rat_list(std::string_view text);

// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rat& r) { return r.get_str(); }

std::string to_string(const RatVec& v);

inline int sign(const Rat& r) { return sgn(r); }

Rat sum(const RatVec& v);

Rat dot(const RatVec& a, const RatVec& b);

BigInt factorial(unsigned n);

BigInt binomial(unsigned n, unsigned k);

} // namespace modcomb
