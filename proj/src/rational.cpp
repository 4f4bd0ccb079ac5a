#include <wallcross/rational.hpp>

#include <wallcross/errors.hpp>

#include <cctype>

namespace wallcross {

Rational make_rational(long numerator, long denominator)
{
    if (denominator == 0) {
        throw InvalidArgument("rational with zero denominator");
    }
    Rational q(numerator, denominator);
    q.canonicalize();
    return q;
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

Integer parse_integer(std::string_view s)
{
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    return Integer(std::string(s));
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const auto s = trim(text);
    const auto slash = s.find('/');
    const auto num = trim(s.substr(0, slash));
    if (!is_integer_literal(num)) {
        throw InvalidArgument("malformed rational '" + std::string(text) + "'");
    }
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(num));
    }
    const auto den = trim(s.substr(slash + 1));
    if (!is_integer_literal(den)) {
        throw InvalidArgument("malformed rational '" + std::string(text) + "'");
    }
    const Integer d = parse_integer(den);
    if (d == 0) {
        throw InvalidArgument("rational with zero denominator '" + std::string(text) + "'");
    }
    Rational q(parse_integer(num), d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational &q)
{
    return q.get_str();
}

Integer factorial(unsigned n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(long n, long k)
{
    if (n < 0) {
        throw InvalidArgument("binomial with negative top index");
    }
    if (k < 0 || k > n) {
        return 0;
    }
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Rational dot(const IntVector &a, const std::vector<Rational> &b)
{
    if (a.size() != b.size()) {
        throw DimensionMismatch("inner product of vectors with lengths " + std::to_string(a.size()) + " and "
                                + std::to_string(b.size()));
    }
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += b[i] * a[i];
    }
    return s;
}

long dot(const IntVector &a, const IntVector &b)
{
    if (a.size() != b.size()) {
        throw DimensionMismatch("inner product of vectors with lengths " + std::to_string(a.size()) + " and "
                                + std::to_string(b.size()));
    }
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

} // namespace wallcross
