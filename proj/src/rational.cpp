#include <qmzv/rational.hpp>

#include <cctype>
#include <string>

#include <qmzv/errors.hpp>

namespace qmzv
{

Rational make_rational(long num, long den)
{
    return make_rational(Integer(num), Integer(den));
}

Rational make_rational(const Integer &num, const Integer &den)
{
    if (den == 0)
        throw DomainError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

namespace
{

bool is_integer_literal(std::string_view s)
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

std::string_view strip(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

Integer parse_integer(std::string_view s)
{
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const std::string_view s = strip(text);
    const auto slash = s.find('/');
    const std::string_view num = strip(s.substr(0, slash));
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : strip(s.substr(slash + 1));
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
        throw ParseError("malformed rational \"" + std::string(text) + "\"");
    const Integer d = parse_integer(den);
    if (d == 0)
        throw ParseError("zero denominator in \"" + std::string(text) + "\"");
    return make_rational(parse_integer(num), d);
}

std::string to_string(const Rational &value)
{
    if (value.get_den() == 1)
        return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool is_canonical(const Rational &value)
{
    if (value.get_den() <= 0)
        return false;
    Integer g;
    mpz_gcd(g.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
    return g == 1;
}

Integer binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer factorial(unsigned long n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Rational binomial(const Rational &x, unsigned long k)
{
    Rational r = 1;
    for (unsigned long i = 0; i < k; ++i)
        r *= x - Rational(i);
    r /= Rational(factorial(k));
    return r;
}

} // namespace qmzv
