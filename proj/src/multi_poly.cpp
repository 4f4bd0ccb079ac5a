#include <wallcross/multi_poly.hpp>

#include <wallcross/errors.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace wallcross {

unsigned total_exponent(const Exponents &e)
{
    return std::accumulate(e.begin(), e.end(), 0u);
}

MultiPoly MultiPoly::constant(std::size_t variable_count, const Rational &c)
{
    MultiPoly p(variable_count);
    p.add_term(Exponents(variable_count, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t variable_count, std::size_t index)
{
    if (index >= variable_count) {
        throw IndexOutOfRange("variable index " + std::to_string(index) + " out of range for "
                              + std::to_string(variable_count) + " variables");
    }
    Exponents e(variable_count, 0);
    e[index] = 1;
    return monomial(e);
}

MultiPoly MultiPoly::monomial(const Exponents &e, const Rational &c)
{
    MultiPoly p(e.size());
    p.add_term(e, c);
    return p;
}

MultiPoly MultiPoly::linear_form(const IntVector &coefficients)
{
    MultiPoly p(coefficients.size());
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        Exponents e(coefficients.size(), 0);
        e[i] = 1;
        p.add_term(e, Rational(coefficients[i]));
    }
    return p;
}

MultiPoly MultiPoly::linear_form(const std::vector<Rational> &coefficients)
{
    MultiPoly p(coefficients.size());
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        Exponents e(coefficients.size(), 0);
        e[i] = 1;
        p.add_term(e, coefficients[i]);
    }
    return p;
}

Rational MultiPoly::coefficient(const Exponents &e) const
{
    const auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::constant_term() const
{
    return coefficient(Exponents(variable_count_, 0));
}

int MultiPoly::total_degree() const
{
    int d = -1;
    for (const auto &[e, c] : terms_) {
        d = std::max(d, static_cast<int>(total_exponent(e)));
    }
    return d;
}

bool MultiPoly::is_homogeneous() const
{
    if (terms_.empty()) {
        return true;
    }
    const auto d = total_exponent(terms_.begin()->first);
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto &t) { return total_exponent(t.first) == d; });
}

void MultiPoly::add_term(const Exponents &e, const Rational &c)
{
    if (e.size() != variable_count_) {
        throw DimensionMismatch("exponent vector of length " + std::to_string(e.size()) + " in a polynomial of "
                                + std::to_string(variable_count_) + " variables");
    }
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

void MultiPoly::check_compatible(const MultiPoly &other) const
{
    if (other.variable_count_ != variable_count_) {
        throw DimensionMismatch("polynomials in " + std::to_string(variable_count_) + " and "
                                + std::to_string(other.variable_count_) + " variables");
    }
}

MultiPoly &MultiPoly::operator+=(const MultiPoly &other)
{
    check_compatible(other);
    for (const auto &[e, c] : other.terms_) {
        add_term(e, c);
    }
    return *this;
}

MultiPoly &MultiPoly::operator-=(const MultiPoly &other)
{
    check_compatible(other);
    for (const auto &[e, c] : other.terms_) {
        add_term(e, -c);
    }
    return *this;
}

MultiPoly operator*(const MultiPoly &a, const MultiPoly &b)
{
    a.check_compatible(b);
    MultiPoly r(a.variable_count_);
    Exponents e(a.variable_count_);
    for (const auto &[ea, ca] : a.terms_) {
        for (const auto &[eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
            }
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly &MultiPoly::operator*=(const MultiPoly &other)
{
    *this = *this * other;
    return *this;
}

MultiPoly &MultiPoly::operator*=(const Rational &c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[e, coeff] : terms_) {
        coeff *= c;
    }
    return *this;
}

MultiPoly operator-(MultiPoly a)
{
    for (auto &[e, c] : a.terms_) {
        c = -c;
    }
    return a;
}

MultiPoly pow(const MultiPoly &p, unsigned exponent)
{
    MultiPoly result = MultiPoly::constant(p.variable_count(), 1);
    MultiPoly base = p;
    while (exponent > 0) {
        if (exponent & 1u) {
            result *= base;
        }
        exponent >>= 1u;
        if (exponent > 0) {
            base *= base;
        }
    }
    return result;
}

MultiPoly homogeneous_part(const MultiPoly &p, unsigned e)
{
    MultiPoly r(p.variable_count());
    for (const auto &[ex, c] : p.terms()) {
        if (total_exponent(ex) == e) {
            r.add_term(ex, c);
        }
    }
    return r;
}

MultiPoly truncate(const MultiPoly &p, unsigned order)
{
    MultiPoly r(p.variable_count());
    for (const auto &[ex, c] : p.terms()) {
        if (total_exponent(ex) <= order) {
            r.add_term(ex, c);
        }
    }
    return r;
}

MultiPoly linear_substitute(const MultiPoly &p, const std::vector<IntVector> &basis)
{
    const auto d = p.variable_count();
    if (basis.size() != d) {
        throw DimensionMismatch("substitution basis has " + std::to_string(basis.size()) + " vectors for "
                                + std::to_string(d) + " variables");
    }
    for (const auto &v : basis) {
        if (v.size() != d) {
            throw DimensionMismatch("substitution basis vector of length " + std::to_string(v.size())
                                    + ", expected " + std::to_string(d));
        }
    }

    // images[j] = sum_i basis[i][j] u'_i, with cached powers.
    std::vector<std::vector<MultiPoly>> powers(d);
    for (std::size_t j = 0; j < d; ++j) {
        IntVector column(d);
        for (std::size_t i = 0; i < d; ++i) {
            column[i] = basis[i][j];
        }
        powers[j].push_back(MultiPoly::constant(d, 1));
        powers[j].push_back(MultiPoly::linear_form(column));
    }
    auto power_of = [&](std::size_t j, unsigned k) -> const MultiPoly & {
        while (powers[j].size() <= k) {
            powers[j].push_back(powers[j].back() * powers[j][1]);
        }
        return powers[j][k];
    };

    MultiPoly result(d);
    for (const auto &[e, c] : p.terms()) {
        MultiPoly term = MultiPoly::constant(d, c);
        for (std::size_t j = 0; j < d; ++j) {
            if (e[j] > 0) {
                term *= power_of(j, e[j]);
            }
        }
        result += term;
    }
    return result;
}

std::map<unsigned, MultiPoly> split_leading_variable(const MultiPoly &p)
{
    if (p.variable_count() == 0) {
        throw DimensionMismatch("cannot split the leading variable of a constant");
    }
    std::map<unsigned, MultiPoly> parts;
    const auto rest = p.variable_count() - 1;
    for (const auto &[e, c] : p.terms()) {
        auto [it, inserted] = parts.try_emplace(e[0], rest);
        it->second.add_term(Exponents(e.begin() + 1, e.end()), c);
    }
    return parts;
}

MultiPoly embed(const MultiPoly &p, std::size_t variable_count, std::size_t offset)
{
    if (offset + p.variable_count() > variable_count) {
        throw DimensionMismatch("cannot embed " + std::to_string(p.variable_count()) + " variables at offset "
                                + std::to_string(offset) + " into " + std::to_string(variable_count));
    }
    MultiPoly r(variable_count);
    Exponents e(variable_count, 0);
    for (const auto &[ex, c] : p.terms()) {
        std::copy(ex.begin(), ex.end(), e.begin() + static_cast<std::ptrdiff_t>(offset));
        r.add_term(e, c);
    }
    return r;
}

TruncSeries series_invert(const MultiPoly &p, unsigned order)
{
    const Rational c0 = p.constant_term();
    if (c0 == 0) {
        throw ZeroConstantTerm("cannot invert a series with zero constant term");
    }
    const auto d = p.variable_count();
    const Rational inv0 = 1 / c0;

    // q_m = -(1/p_0) * sum_{i=1..m} p_i q_{m-i}, one homogeneous piece at a time.
    std::vector<MultiPoly> p_parts;
    p_parts.reserve(order + 1);
    for (unsigned i = 0; i <= order; ++i) {
        p_parts.push_back(homogeneous_part(p, i));
    }
    std::vector<MultiPoly> q_parts;
    q_parts.reserve(order + 1);
    q_parts.push_back(MultiPoly::constant(d, inv0));
    for (unsigned m = 1; m <= order; ++m) {
        MultiPoly acc(d);
        for (unsigned i = 1; i <= m; ++i) {
            if (!p_parts[i].is_zero() && !q_parts[m - i].is_zero()) {
                acc += p_parts[i] * q_parts[m - i];
            }
        }
        acc *= -inv0;
        q_parts.push_back(std::move(acc));
    }

    TruncSeries s{MultiPoly(d), order};
    for (const auto &q : q_parts) {
        s.body += q;
    }
    return s;
}

std::vector<std::string> default_variable_names(std::size_t variable_count)
{
    if (variable_count == 1) {
        return {"u"};
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < variable_count; ++i) {
        names.push_back("u" + std::to_string(i + 1));
    }
    return names;
}

std::string to_string(const MultiPoly &p)
{
    return to_string(p, default_variable_names(p.variable_count()));
}

std::string to_string(const MultiPoly &p, const std::vector<std::string> &names)
{
    if (names.size() != p.variable_count()) {
        throw DimensionMismatch("need one name per variable");
    }
    if (p.is_zero()) {
        return "0";
    }
    std::vector<std::pair<Exponents, Rational>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto &a, const auto &b) {
        const auto da = total_exponent(a.first);
        const auto db = total_exponent(b.first);
        if (da != db) {
            return da > db;
        }
        return a.first > b.first;
    });

    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : terms) {
        const bool negative = c < 0;
        const Rational magnitude = negative ? Rational(-c) : c;
        if (first) {
            if (negative) {
                os << '-';
            }
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;

        std::string monomial;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            if (!monomial.empty()) {
                monomial += '*';
            }
            monomial += names[i];
            if (e[i] > 1) {
                monomial += '^' + std::to_string(e[i]);
            }
        }
        if (monomial.empty()) {
            os << to_string(magnitude);
        } else if (magnitude == 1) {
            os << monomial;
        } else {
            os << to_string(magnitude) << '*' << monomial;
        }
    }
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const MultiPoly &p)
{
    return os << to_string(p);
}

} // namespace wallcross
