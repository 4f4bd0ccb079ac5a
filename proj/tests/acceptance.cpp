// Acceptance suite: one PASS/FAIL line per criterion.
// Usage: acceptance [1|2|3|4|5|6|7a|7b|8|9]   (no argument runs all)

#include "cp2_closed_forms.hpp"
#include "support.hpp"

#include <wallcross/class_expr.hpp>
#include <wallcross/localization.hpp>
#include <wallcross/plan_engine.hpp>
#include <wallcross/weighted_classes.hpp>

#include <functional>
#include <iostream>
#include <sstream>

using namespace wallcross;
using namespace testing_support;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string &what)
    {
        if (!ok && pass) {
            detail << "first failure: " << what << "; ";
        }
        pass = pass && ok;
    }
};

EquivariantClass prequantum_power(const TorusModel &m, unsigned e, const Rational &scale = 1)
{
    return make_class(m, [&](const FixedPoint &fp) {
        return pow(generator_restriction(m, fp, Generator::prequantum()), e) * scale;
    });
}

EquivariantClass sphere_monomial(const TorusModel &m, const std::vector<unsigned> &l)
{
    return make_class(m, [&](const FixedPoint &fp) {
        long sign = 1;
        unsigned total = 0;
        for (std::size_t i = 0; i < l.size(); ++i) {
            total += l[i];
            if (fp.factor_states[i] == 1 && l[i] % 2 == 1) {
                sign = -sign;
            }
        }
        return pow(MultiPoly::variable(1, 0), total) * Rational(sign);
    });
}

// All exponent vectors of length n summing to total.
void for_each_composition(unsigned n, unsigned total, const std::function<void(const std::vector<unsigned> &)> &f)
{
    std::vector<unsigned> l(n, 0);
    std::function<void(unsigned, unsigned)> rec = [&](unsigned i, unsigned left) {
        if (i + 1 == n) {
            l[i] = left;
            f(l);
            return;
        }
        for (unsigned x = 0; x <= left; ++x) {
            l[i] = x;
            rec(i + 1, left - x);
        }
    };
    rec(0, total);
}

Rational sphere_direct_sum(unsigned n)
{
    Rational s = 0;
    for (unsigned k = 0; k <= (n - 1) / 2; ++k) {
        Integer term = binomial(n, k);
        Integer base = static_cast<long>(n) - 2 * static_cast<long>(k);
        Integer power;
        mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), n - 1);
        term *= power;
        s += (k % 2 ? -1 : 1) * Rational(term);
    }
    return s;
}

Outcome criterion1()
{
    Outcome o;
    for (unsigned n : {3u, 5u, 7u, 9u}) {
        const auto m = build_sphere_product(n);
        const auto expr = parse_class_expr("L^" + std::to_string(n - 1));
        const auto got = evaluate_plan(m, rank1_plan(m, 0, 1), evaluate_class_expr(expr, m));
        const auto want = sphere_direct_sum(n);
        o.detail << "n=" << n << ": " << got << " vs " << want << "; ";
        o.require(got == want, "n=" + std::to_string(n));
    }
    return o;
}

Outcome criterion2()
{
    Outcome o;
    for (unsigned n : {3u, 5u, 7u, 9u}) {
        const auto m = build_sphere_product(n);
        const auto got = evaluate_plan(m, rank1_plan(m, 0, 1), prequantum_power(m, n - 1));
        const Rational oracle =
            Rational(Integer(1) << n) * Rational(factorial(n - 1)) * uniform_sum_density_at_zero(n);
        o.detail << "n=" << n << ": " << got << " vs oracle " << oracle << "; ";
        o.require(got == oracle, "n=" + std::to_string(n));
    }
    return o;
}

// -1/2 (-1)^h sum_{K in {1..n-1}, |K|=h} (-1)^{|K cap {1..m}|},  h = (n-1)/2
Rational so3_subset_form(unsigned n, unsigned m)
{
    const unsigned h = (n - 1) / 2;
    Integer total = 0;
    for (unsigned long mask = 0; mask < (1ul << (n - 1)); ++mask) {
        if (static_cast<unsigned>(__builtin_popcountl(mask)) != h) {
            continue;
        }
        const auto low = static_cast<unsigned>(__builtin_popcountl(mask & ((1ul << m) - 1)));
        total += low % 2 ? -1 : 1;
    }
    return Rational(h % 2 ? 1 : -1, 2) * Rational(total);
}

// 1/2 (-1)^h ( C(n-1,h) - 2 sum_{j=0}^{m/2} C(m,2j) C(n-1-m, h-2j) )
Rational so3_binomial_form(unsigned n, unsigned m)
{
    const long h = (n - 1) / 2;
    Integer inner = binomial(n - 1, h);
    for (long j = 0; j <= static_cast<long>(m) / 2; ++j) {
        inner -= 2 * binomial(m, 2 * j) * binomial(static_cast<long>(n - 1 - m), h - 2 * j);
    }
    return Rational(h % 2 ? -1 : 1, 2) * Rational(inner);
}

Outcome criterion3()
{
    Outcome o;
    std::size_t checked = 0;
    for (unsigned n : {3u, 5u, 7u}) {
        const auto m = build_sphere_product(n);
        const auto plan = rank1_plan(m, 0, 1);
        for_each_composition(n, n - 3, [&](const std::vector<unsigned> &l) {
            unsigned odd = 0;
            for (auto x : l) {
                odd += x % 2;
            }
            const auto got = evaluate_plan(m, plan, weyl_correct(m, sphere_monomial(m, l)));
            const auto a = so3_subset_form(n, odd);
            const auto b = so3_binomial_form(n, odd);
            ++checked;
            std::ostringstream what;
            what << "n=" << n << " m=" << odd << " got " << got << " forms " << a << ", " << b;
            o.require(got == a && got == b, what.str());
        });
    }
    {
        const auto m3 = build_sphere_product(3);
        const auto v = evaluate_plan(m3, rank1_plan(m3, 0, 1), weyl_correct(m3, sphere_monomial(m3, {0, 0, 0})));
        o.require(v == 1, "n=3 all l=0 should be 1");
        const auto m5 = build_sphere_product(5);
        const auto w =
            evaluate_plan(m5, rank1_plan(m5, 0, 1), weyl_correct(m5, sphere_monomial(m5, {2, 0, 0, 0, 0})));
        o.require(w == -3, "n=5 l=(2,0,0,0,0) should be -3");
    }
    o.detail << checked << " monomials against both closed forms";
    return o;
}

Outcome criterion4()
{
    Outcome o;
    std::size_t checked = 0;
    for (unsigned n : {5u, 7u}) {
        const auto m = build_sphere_product(n);
        const auto plan = rank1_plan(m, 0, 1);
        for_each_composition(n, n - 5, [&](const std::vector<unsigned> &l) {
            for (unsigned i = 0; i < n; ++i) {
                for (unsigned j = i + 1; j < n; ++j) {
                    auto li = l;
                    auto lj = l;
                    li[i] += 2;
                    lj[j] += 2;
                    auto diff = sphere_monomial(m, li) + Rational(-1) * sphere_monomial(m, lj);
                    const auto v = evaluate_plan(m, plan, weyl_correct(m, diff));
                    ++checked;
                    o.require(v == 0, "n=" + std::to_string(n) + " nonzero kernel pairing");
                }
            }
        });
    }
    o.detail << checked << " classes (v_i^2 - v_j^2) * monomial pair to 0";
    return o;
}

Outcome criterion5()
{
    Outcome o;
    std::size_t checked = 0;
    for (unsigned n : {3u, 5u, 7u}) {
        const auto m = build_sphere_product(n);
        const auto right = rank1_plan(m, 0, 1);
        const auto left = rank1_plan(m, 0, -1);
        for (int trial = 0; trial < 60; ++trial) {
            // random combination of monomials in L, v1..vn of degree n-1
            std::ostringstream text;
            const auto terms = uniform(1, 4);
            for (long t = 0; t < terms; ++t) {
                const auto q = random_nonzero_rational();
                text << (t == 0 ? (q < 0 ? "-" : "") : (q < 0 ? " - " : " + ")) << to_string(abs(q));
                for (unsigned k = 0; k + 1 < n; ++k) {
                    const auto g = uniform(0, static_cast<long>(n));
                    text << '*' << (g == 0 ? std::string("L") : "v" + std::to_string(g));
                }
            }
            const auto a = evaluate_class_expr(parse_class_expr(text.str()), m);
            ++checked;
            o.require(evaluate_plan(m, right, a) == evaluate_plan(m, left, a), "n=" + std::to_string(n) + " " + text.str());
        }
    }
    o.detail << checked << " random classes, rightward = leftward";
    return o;
}

Outcome criterion6()
{
    Outcome o;
    std::size_t checked = 0;
    std::size_t zeros = 0;
    for (unsigned n = 1; n <= 6; ++n) {
        const auto m = build_cp_product(3, n);
        for (const auto &fp : m.fixed_points()) {
            const auto [i1, i2, i3] = cp2_composition(fp);
            for (unsigned j1 = 0; j1 <= 2 * n - 2; ++j1) {
                const unsigned j2 = 2 * n - 2 - j1;
                const auto mono = pow(MultiPoly::variable(2, 0), j1) * pow(MultiPoly::variable(2, 1), j2);
                const Rational w1(cp2_closed::lambda_theta1(i1, i2, i3, j1, j2));
                const Rational w2(cp2_closed::lambda_theta2(i1, i2, i3, j1, j2));
                const auto g1 = lambda_flag(fp, cp2_theta1(), mono);
                const auto g2 = lambda_flag(fp, cp2_theta2(), mono);
                checked += 2;
                zeros += (w1 == 0) + (w2 == 0);
                std::ostringstream what;
                what << fp.id << " j=(" << j1 << "," << j2 << ")";
                o.require(g1 == w1 && g2 == w2, what.str());
            }
        }
    }
    o.detail << checked << " values (" << zeros << " required zeros) for n <= 6";
    return o;
}

// Final double-sum display for (2n-8)! vol / (2pi)^(2n-8).
Rational cp2_double_sum(long n)
{
    using cp2_closed::B;
    auto pw = [](long x, long e) -> Rational {
        if (e < 0) {
            return 0;
        }
        Integer r;
        Integer base = x;
        mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
        return Rational(r);
    };
    auto part = [&](long i1, long i3) -> Rational {
        const Rational t = Rational(factorial(static_cast<unsigned>(n)) * ((i1 + 1) % 2 ? -1 : 1))
                           / Rational(factorial(static_cast<unsigned>(i1)) * factorial(static_cast<unsigned>(i3))
                                      * factorial(static_cast<unsigned>(n - i1 - i3)));
        const long A = n - 3 * i1;
        const long Bq = 3 * i1 + 3 * i3 - n;
        const long s = i1 + i3;
        Rational val = Rational(B(2 * n - 8, s - 4)) * pw(A, s - 4) * pw(Bq, 2 * n - 4 - s) * (2 + i3 - n)
                       - Rational(B(2 * n - 8, s - 3)) * pw(A, s - 3) * pw(Bq, 2 * n - 5 - s);
        for (long j = 0; j <= s - 5; ++j) {
            val -= Rational(B(n + i1 - 6 - j, n - i3 - 3) * B(2 * n - 8, j)) * pw(A, j) * pw(Bq, 2 * n - 8 - j);
        }
        return t * val;
    };
    Rational total = 0;
    for (long i1 = 0; i1 <= n; ++i1) {
        for (long i3 = 0; i1 + i3 <= n; ++i3) {
            if (3 * i1 > n && 3 * i3 > n) {
                total += part(i1, i3);
            }
        }
    }
    // second sum, over (i1, i2) with the same summand shape
    for (long i1 = 0; i1 <= n; ++i1) {
        for (long i2 = 0; i1 + i2 <= n; ++i2) {
            if (3 * i1 < n && 3 * i2 < n) {
                total += part(i1, i2);
            }
        }
    }
    return total;
}

EquivariantClass cp2_volume_class(const TorusModel &m, unsigned n)
{
    return weyl_correct(m, prequantum_power(m, 2 * n - 8, Rational(1) / Rational(factorial(2 * n - 8))));
}

Outcome criterion7a()
{
    Outcome o;
    for (unsigned n : {4u, 5u, 7u, 8u}) {
        const auto m = build_cp_product(3, n);
        const auto vol = cp2_volume_class(m, n);
        const Rational scale(factorial(2 * n - 8));
        const auto want = cp2_double_sum(n);
        const Rational got = evaluate_plan(m, cp2_plan(n), vol) * scale;
        o.detail << "n=" << n << ": plan " << got << " vs double sum " << want;
        std::string matching;
        for (auto v : all_cp2_variants()) {
            if (evaluate_plan(m, cp2_plan(n, v), vol) * scale == want) {
                matching += " " + to_string(v);
            }
        }
        o.detail << " (variants matching:" << (matching.empty() ? " none" : matching) << "); ";
        o.require(got == want, "n=" + std::to_string(n));
    }
    return o;
}

Outcome criterion7b()
{
    Outcome o;
    for (unsigned n : {4u, 5u, 7u, 8u}) {
        const auto m = build_cp_product(3, n);
        const auto vol = cp2_volume_class(m, n);
        const auto a = evaluate_plan(m, cp2_plan(n, Cp2Variant::swapped), vol);
        const auto b = evaluate_plan(m, cp2_plan(n, Cp2Variant::mirror), vol);
        o.detail << "n=" << n << ": " << a << " / " << b << "; ";
        o.require(a == b, "n=" + std::to_string(n) + " swapped vs mirror");
        if (n == 4) {
            o.require(a == 1, "(CP^2)^4 // PU(3) is a single point");
        }
    }
    return o;
}

Outcome criterion8()
{
    Outcome o;
    std::size_t checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto V = random_weighted_space();
        const auto order = static_cast<unsigned>(uniform(0, 6));
        const auto s = weighted_segre(V, order);
        o.require(truncate(s.body * weighted_chern(V), order) == MultiPoly::constant(V.residual_count(), 1),
                  "s*c != 1");
        ++checked;
    }
    for (std::size_t r = 1; r <= 8; ++r) {
        WeightedSpace V(0);
        for (std::size_t i = 0; i < r; ++i) {
            V.add_line(1, {});
        }
        const auto rel = ring_relation(V);
        bool ok = rel.degree() == r && rel.coefficient_by_power[r] == MultiPoly::constant(0, 1);
        for (std::size_t i = 0; i < r; ++i) {
            ok = ok && rel.coefficient_by_power[i].is_zero();
        }
        o.require(ok, "weight-1 relation is not h^r for r=" + std::to_string(r));
    }
    for (int trial = 0; trial < 100; ++trial) {
        const auto V = random_weighted_space();
        const auto r = static_cast<unsigned>(V.rank());
        const Rational expected = Rational(weight_gcd(V)) / weighted_chern(V).constant_term();
        o.require(fiber_integrate_power(V, r - 1) == MultiPoly::constant(V.residual_count(), expected),
                  "pi_*(h^(r-1)) != k/c0");
        for (unsigned i = 0; i + 1 < r; ++i) {
            o.require(fiber_integrate_power(V, i).is_zero(), "below-threshold power is nonzero");
        }
        ++checked;
    }
    o.detail << checked << " random spaces";
    return o;
}

Outcome criterion9()
{
    Outcome o;
    std::size_t checked = 0;
    auto guard = [&](const TorusModel &m, const Plan &plan, const std::string &name) {
        const auto top = static_cast<long>(m.tangent_dimension() - m.rank());
        for (long e = 0; e <= top + 2; ++e) {
            if (e == top) {
                continue;
            }
            const auto a = make_class(m, [&](const FixedPoint &) {
                return random_homogeneous(m.rank(), static_cast<unsigned>(e), 3);
            });
            ++checked;
            o.require(evaluate_plan(m, plan, a) == 0, name + " degree " + std::to_string(e));
            // L^e is a genuine equivariant class
            ++checked;
            o.require(evaluate_plan(m, plan, prequantum_power(m, static_cast<unsigned>(e))) == 0,
                      name + " L^" + std::to_string(e));
        }
    };
    for (unsigned n = 1; n <= 7; ++n) {
        const auto m = build_sphere_product(n);
        const Rational p0 = n % 2 ? Rational(0) : make_rational(1, 2);
        guard(m, rank1_plan(m, p0, 1), "spheres:" + std::to_string(n));
        guard(m, rank1_plan(m, p0, -1), "spheres:" + std::to_string(n));
    }
    for (unsigned n : {1u, 2u, 4u, 5u, 7u}) {
        const auto m = build_cp_product(3, n);
        guard(m, cp2_plan(n), "cp2:" + std::to_string(n));
    }
    o.detail << checked << " off-degree pairings";
    return o;
}

} // namespace

int main(int argc, char **argv)
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1", criterion1},   {"2", criterion2},   {"3", criterion3}, {"4", criterion4}, {"5", criterion5},
        {"6", criterion6},   {"7a", criterion7a}, {"7b", criterion7b}, {"8", criterion8}, {"9", criterion9},
    };
    const std::string only = argc > 1 ? argv[1] : "";
    bool all_pass = true;
    bool ran = false;
    for (const auto &[id, run] : criteria) {
        if (!only.empty() && only != id) {
            continue;
        }
        ran = true;
        Outcome o;
        try {
            o = run();
        } catch (const std::exception &e) {
            o.pass = false;
            o.detail << "exception: " << e.what();
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << o.detail.str() << std::endl;
        all_pass = all_pass && o.pass;
    }
    if (!ran) {
        std::cerr << "unknown criterion '" << only << "'\n";
        return 2;
    }
    return all_pass ? 0 : 1;
}
