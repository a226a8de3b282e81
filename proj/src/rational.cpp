#include "modcomb/rational.hpp"

#include <cctype>

namespace modcomb {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

bool is_integer_token(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rat parse_rat(std::string_view text)
{
    const std::string_view t = trim(text);
    const auto slash = t.find('/');
    const std::string_view num = slash == std::string_view::npos ? t : t.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : t.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den) || den.front() == '-' || den.front() == '+')
        throw InputError("malformed rational: '" + std::string(text) + "'");
    BigInt p{std::string(num.front() == '+' ? num.substr(1) : num)};
    BigInt q{std::string(den)};
    if (q == 0)
        throw InputError("zero denominator in rational: '" + std::string(text) + "'");
    Rat r(p, q);
    r.canonicalize();
    return r;
}

RatVec parse_rat_list(std::string_view text)
{
    RatVec out;
    std::string_view rest = trim(text);
    if (rest.empty())
        throw InputError("empty rational list");
    while (true) {
        const auto comma = rest.find(',');
        out.push_back(parse_rat(rest.substr(0, comma)));
        if (comma == std::string_view::npos)
            break;
        rest.remove_prefix(comma + 1);
    }
    return out;
}

std::string to_string(const RatVec& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ", ";
        s += to_string(v[i]);
    }
    return s + ")";
}

Rat sum(const RatVec& v)
{
    Rat s = 0;
    for (const auto& x : v)
        s += x;
    return s;
}

Rat dot(const RatVec& a, const RatVec& b)
{
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0)
            s += a[i] * b[i];
    return s;
}

BigInt factorial(unsigned n)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(unsigned n, unsigned k)
{
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace modcomb
