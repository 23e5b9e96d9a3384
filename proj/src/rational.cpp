#include "supermonad/rational.hpp"

#include "supermonad/errors.hpp"

#include <cctype>

namespace supermonad {

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q)
{
    Rational c = q;
    c.canonicalize();
    if (c.get_den() == 1)
        return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole)
{
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+'))
        ++i;
    if (i == text.size())
        throw ValidationError("malformed rational '" + std::string(whole) + "'");
    for (std::size_t k = i; k < text.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(text[k])))
            throw ValidationError("malformed rational '" + std::string(whole) + "'");
    std::string s(text[0] == '+' ? text.substr(1) : text);
    return Integer(s, 10);
}

} // namespace

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text, text));
    Integer num = parse_integer(text.substr(0, slash), text);
    Integer den = parse_integer(text.substr(slash + 1), text);
    if (den == 0)
        throw ValidationError("zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

bool is_integral(const Rational& q)
{
    Rational c = q;
    c.canonicalize();
    return c.get_den() == 1;
}

Integer to_integer(const Rational& q, const char* what)
{
    if (!is_integral(q))
        throw InvariantBreach(std::string(what) + ": expected an integer, got " + to_string(q));
    Rational c = q;
    c.canonicalize();
    return c.get_num();
}

std::int64_t to_int64(const Integer& z, const char* what)
{
    if (!z.fits_slong_p())
        throw ValidationError(std::string(what) + ": value " + z.get_str() + " out of range");
    return z.get_si();
}

Integer factorial(unsigned long k)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), k);
    return r;
}

Integer binomial(const Integer& top, unsigned long k)
{
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), k);
    return r;
}

Integer binomial_poly(std::int64_t top, unsigned long k)
{
    // mpz_bin_ui already implements the negative-top extension.
    return binomial(Integer(static_cast<long>(top)), k);
}

} // namespace supermonad
