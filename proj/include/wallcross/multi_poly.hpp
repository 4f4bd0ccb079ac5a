#pragma once

#include <wallcross/rational.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace wallcross {

// One exponent unit is cohomological degree 2.
using Exponents = std::vector<std::uint32_t>;

unsigned total_exponent(const Exponents &e);

/// Sparse multivariate polynomial over Q in a fixed number of variables.
///
/// Terms are kept in a map keyed by exponent vector; zero coefficients are
/// never stored, so two polynomials are equal iff their term maps are equal.
/// A polynomial in zero variables is a rational constant.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, Rational>;

    explicit MultiPoly(std::size_t variable_count = 0) : variable_count_(variable_count) {}

    static MultiPoly constant(std::size_t variable_count, const Rational &c);
    static MultiPoly variable(std::size_t variable_count, std::size_t index);
    static MultiPoly monomial(const Exponents &e, const Rational &c = 1);
    // sum_i coefficients[i] * u_i
    static MultiPoly linear_form(const IntVector &coefficients);
    static MultiPoly linear_form(const std::vector<Rational> &coefficients);

    std::size_t variable_count() const noexcept { return variable_count_; }
    const TermMap &terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    Rational coefficient(const Exponents &e) const;
    Rational constant_term() const;
    // Largest total exponent present; -1 for the zero polynomial.
    int total_degree() const;
    bool is_homogeneous() const;

    // Adds c * x^e, erasing the term if it cancels.
    void add_term(const Exponents &e, const Rational &c);

    MultiPoly &operator+=(const MultiPoly &other);
    MultiPoly &operator-=(const MultiPoly &other);
    MultiPoly &operator*=(const MultiPoly &other);
    MultiPoly &operator*=(const Rational &c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly &b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly &b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly &a, const MultiPoly &b);
    friend MultiPoly operator*(MultiPoly a, const Rational &c) { return a *= c; }
    friend MultiPoly operator*(const Rational &c, MultiPoly a) { return a *= c; }
    friend MultiPoly operator-(MultiPoly a);

    friend bool operator==(const MultiPoly &, const MultiPoly &) = default;

private:
    void check_compatible(const MultiPoly &other) const;

    std::size_t variable_count_;
    TermMap terms_;
};

MultiPoly pow(const MultiPoly &p, unsigned exponent);

// Sum of the terms of total exponent exactly e.
MultiPoly homogeneous_part(const MultiPoly &p, unsigned e);

// Drops every term of total exponent > order.
MultiPoly truncate(const MultiPoly &p, unsigned order);

/// Ring homomorphism u_j -> sum_i basis[i][j] * u'_i.
///
/// `basis` holds d integer vectors of length d, where d is the variable count
/// of `p`; the result is again a polynomial in d variables.
MultiPoly linear_substitute(const MultiPoly &p, const std::vector<IntVector> &basis);

// p = sum_j coefficient_j * u_0^j with coefficient_j free of u_0; the
// coefficients live in the remaining variable_count - 1 variables.
std::map<unsigned, MultiPoly> split_leading_variable(const MultiPoly &p);

// Reinterprets p as a polynomial in `variable_count` variables whose own
// variables sit at positions offset .. offset + p.variable_count() - 1.
MultiPoly embed(const MultiPoly &p, std::size_t variable_count, std::size_t offset);

/// Truncated power series: a polynomial body with every term of total exponent
/// above `order` dropped.
struct TruncSeries {
    MultiPoly body;
    unsigned order = 0;

    MultiPoly piece(unsigned e) const { return homogeneous_part(body, e); }
};

// Multiplicative inverse of p modulo terms of total exponent > order.
// Throws ZeroConstantTerm when p(0) = 0.
TruncSeries series_invert(const MultiPoly &p, unsigned order);

/// Canonical text form.
///
/// Terms are ordered by decreasing total exponent, then lexicographically
/// decreasing exponent vector. Coefficients print as "p/q"; variables print as
/// "u" when there is a single variable and "u1".."ud" otherwise, unless
/// explicit names are given.
std::string to_string(const MultiPoly &p);
std::string to_string(const MultiPoly &p, const std::vector<std::string> &names);

std::vector<std::string> default_variable_names(std::size_t variable_count);

std::ostream &operator<<(std::ostream &os, const MultiPoly &p);

} // namespace wallcross
