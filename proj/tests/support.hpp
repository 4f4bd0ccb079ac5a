#pragma once

#include <wallcross/multi_poly.hpp>
#include <wallcross/weighted_classes.hpp>

#include <random>

namespace testing_support {

using namespace wallcross;

inline std::mt19937_64 &rng()
{
    static std::mt19937_64 engine(20261017);
    return engine;
}

inline long uniform(long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng());
}

inline Rational random_rational(long bound = 9)
{
    long num = uniform(-bound, bound);
    long den = uniform(1, bound);
    return make_rational(num, den);
}

inline Rational random_nonzero_rational(long bound = 9)
{
    Rational q = 0;
    while (q == 0) {
        q = random_rational(bound);
    }
    return q;
}

inline MultiPoly random_poly(std::size_t vars, unsigned max_exponent, int terms)
{
    MultiPoly p(vars);
    for (int t = 0; t < terms; ++t) {
        Exponents e(vars, 0);
        unsigned budget = static_cast<unsigned>(uniform(0, max_exponent));
        for (std::size_t i = 0; i < vars && budget > 0; ++i) {
            const auto take = static_cast<unsigned>(uniform(0, budget));
            e[i] = take;
            budget -= take;
        }
        p.add_term(e, random_rational());
    }
    return p;
}

// Homogeneous of total exponent `degree`.
inline MultiPoly random_homogeneous(std::size_t vars, unsigned degree, int terms)
{
    MultiPoly p(vars);
    for (int t = 0; t < terms; ++t) {
        Exponents e(vars, 0);
        unsigned budget = degree;
        for (std::size_t i = 0; i + 1 < vars; ++i) {
            const auto take = static_cast<unsigned>(uniform(0, budget));
            e[i] = take;
            budget -= take;
        }
        if (vars > 0) {
            e[vars - 1] += budget;
        }
        p.add_term(e, random_nonzero_rational());
    }
    return p;
}

inline WeightedSpace random_weighted_space(std::size_t max_lines = 5, std::size_t max_residuals = 2)
{
    const auto r = static_cast<std::size_t>(uniform(0, static_cast<long>(max_residuals)));
    WeightedSpace V(r);
    const auto lines = uniform(1, static_cast<long>(max_lines));
    for (long i = 0; i < lines; ++i) {
        long w = 0;
        while (w == 0) {
            w = uniform(-4, 4);
        }
        IntVector residual(r);
        for (auto &x : residual) {
            x = uniform(-3, 3);
        }
        V.add_line(w, residual);
    }
    return V;
}

} // namespace testing_support
