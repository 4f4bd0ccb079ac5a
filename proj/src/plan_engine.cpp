#include <wallcross/plan_engine.hpp>

#include <wallcross/errors.hpp>

#include <algorithm>
#include <map>

namespace wallcross {

WallList walls(const TorusModel &model, const IntVector &xi)
{
    if (xi.size() != model.rank()) {
        throw DimensionMismatch("direction of length " + std::to_string(xi.size()) + " for a rank "
                                + std::to_string(model.rank()) + " model");
    }
    std::map<Rational, std::vector<std::string>> grouped;
    for (const auto &fp : model.fixed_points()) {
        grouped[dot(xi, fp.moment)].push_back(fp.id);
    }
    WallList list;
    for (auto &[value, ids] : grouped) {
        list.push_back({value, std::move(ids)});
    }
    return list;
}

WallList walls(const TorusModel &model)
{
    if (model.rank() != 1) {
        throw DimensionMismatch("walls without a direction need a rank-1 model");
    }
    return walls(model, IntVector{1});
}

Plan rank1_plan(const TorusModel &model, const Rational &p0, int direction)
{
    if (model.rank() != 1) {
        throw Unsupported("rank1_plan needs a rank-1 model, got rank " + std::to_string(model.rank()));
    }
    if (direction != 1 && direction != -1) {
        throw InvalidArgument("direction must be +1 or -1");
    }
    if (!check_regular(model, {p0})) {
        throw NotRegular(to_string(p0) + " is a wall value");
    }
    const OrientedFlag flag(std::vector<IntVector>{IntVector{direction}});
    Plan plan;
    for (const auto &fp : model.fixed_points()) {
        const auto &m = fp.moment[0];
        if ((direction > 0 && m > p0) || (direction < 0 && m < p0)) {
            plan.terms.push_back({1, fp.id, flag});
        }
    }
    return plan;
}

Cp2Variant parse_cp2_variant(std::string_view token)
{
    for (auto v : all_cp2_variants()) {
        if (to_string(v) == token) {
            return v;
        }
    }
    throw InvalidArgument("unknown (CP^2)^n predicate variant '" + std::string(token)
                          + "' (expected swapped, general, final-display or mirror)");
}

std::string to_string(Cp2Variant v)
{
    switch (v) {
    case Cp2Variant::swapped:
        return "swapped";
    case Cp2Variant::general:
        return "general";
    case Cp2Variant::final_display:
        return "final-display";
    case Cp2Variant::mirror:
        return "mirror";
    }
    return "?";
}

std::vector<Cp2Variant> all_cp2_variants()
{
    return {Cp2Variant::swapped, Cp2Variant::general, Cp2Variant::final_display, Cp2Variant::mirror};
}

OrientedFlag cp2_theta1()
{
    return OrientedFlag({{0, 1}, {-1, 0}});
}

OrientedFlag cp2_theta2()
{
    return OrientedFlag({{-1, 0}, {0, 1}});
}

std::array<unsigned, 3> cp2_composition(const FixedPoint &fp)
{
    std::array<unsigned, 3> c{0, 0, 0};
    for (int j : fp.factor_states) {
        if (j < 1 || j > 3) {
            throw InvalidArgument("fixed point '" + fp.id + "' is not a (CP^2)^n fixed point");
        }
        ++c[static_cast<std::size_t>(j - 1)];
    }
    return c;
}

Plan cp2_plan(unsigned n, Cp2Variant variant)
{
    if (n == 0) {
        throw InvalidArgument("cp2_plan needs n >= 1");
    }
    if (n % 3 == 0) {
        throw NotRegular("0 is not a regular value for (CP^2)^" + std::to_string(n));
    }
    // Comparisons with n/3 done as 3*i vs n.
    const long N = n;
    auto above = [N](unsigned i) { return 3 * static_cast<long>(i) > N; };
    auto below = [N](unsigned i) { return 3 * static_cast<long>(i) < N; };

    const auto theta1 = cp2_theta1();
    const auto theta2 = cp2_theta2();
    const auto mirror1 = negated(theta1);
    const auto mirror2 = negated(theta2);

    Plan plan;
    std::vector<int> assignment(n, 1);
    while (true) {
        std::array<unsigned, 3> c{0, 0, 0};
        for (int j : assignment) {
            ++c[static_cast<std::size_t>(j - 1)];
        }
        const auto [i1, i2, i3] = c;
        const auto id = cp_point_id(assignment);
        switch (variant) {
        case Cp2Variant::swapped:
            if (below(i2) && below(i3)) {
                plan.terms.push_back({1, id, theta1});
            }
            if (above(i1) && above(i3)) {
                plan.terms.push_back({1, id, theta2});
            }
            break;
        case Cp2Variant::general:
            if (above(i1) && above(i3)) {
                plan.terms.push_back({1, id, theta1});
            }
            if (below(i2) && below(i3)) {
                plan.terms.push_back({1, id, theta2});
            }
            break;
        case Cp2Variant::final_display:
            if (above(i1) && above(i3)) {
                plan.terms.push_back({1, id, theta1});
            }
            if (below(i1) && below(i2)) {
                plan.terms.push_back({1, id, theta2});
            }
            break;
        case Cp2Variant::mirror:
            if (above(i2) && above(i3)) {
                plan.terms.push_back({1, id, mirror1});
            }
            if (below(i1) && below(i3)) {
                plan.terms.push_back({1, id, mirror2});
            }
            break;
        }

        int pos = static_cast<int>(n) - 1;
        while (pos >= 0 && assignment[static_cast<std::size_t>(pos)] == 3) {
            assignment[static_cast<std::size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) {
            break;
        }
        ++assignment[static_cast<std::size_t>(pos)];
    }
    return plan;
}

namespace {

// Dense univariate polynomial, coefficient i multiplies x^i.
using Univariate = std::vector<Rational>;

Rational evaluate(const Univariate &p, const Rational &x)
{
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

// p(x + shift)
Univariate shifted(const Univariate &p, long shift)
{
    Univariate r(p.size(), Rational(0));
    for (std::size_t k = 0; k < p.size(); ++k) {
        // (x + s)^k = sum_i C(k,i) s^{k-i} x^i
        Integer s_pow = 1;
        for (std::size_t i = k + 1; i-- > 0;) {
            r[i] += p[k] * Rational(binomial(static_cast<long>(k), static_cast<long>(i)) * s_pow);
            s_pow *= shift;
        }
    }
    return r;
}

Univariate antiderivative(const Univariate &p)
{
    Univariate r(p.size() + 1, Rational(0));
    for (std::size_t k = 0; k < p.size(); ++k) {
        r[k + 1] = p[k] / Rational(static_cast<long>(k + 1));
    }
    return r;
}

/// Piecewise polynomial with a piece on each unit interval [lo + i, lo + i + 1]
/// and zero outside [lo, lo + pieces.size()].
struct PiecewisePolynomial {
    long lo = 0;
    std::vector<Univariate> pieces;

    long hi() const { return lo + static_cast<long>(pieces.size()); }
};

/// Continuous antiderivative F with F(lo) = 0, extended by its final value
/// to the right. Pieces cover [lo, hi]; `tail` is F on [hi, inf).
struct Antiderivative {
    PiecewisePolynomial body;
    Rational tail;

    Univariate piece_on(long left) const
    {
        if (left < body.lo) {
            return {Rational(0)};
        }
        if (left >= body.hi()) {
            return {tail};
        }
        return body.pieces[static_cast<std::size_t>(left - body.lo)];
    }
};

Antiderivative integrate(const PiecewisePolynomial &f)
{
    Antiderivative F;
    F.body.lo = f.lo;
    Rational running = 0;
    for (std::size_t i = 0; i < f.pieces.size(); ++i) {
        const Rational left = f.lo + static_cast<long>(i);
        auto P = antiderivative(f.pieces[i]);
        P[0] += running - evaluate(P, left);
        running = evaluate(P, left + 1);
        F.body.pieces.push_back(std::move(P));
    }
    F.tail = running;
    return F;
}

// (f * uniform[-1,1])(x) = (F(x+1) - F(x-1)) / 2
PiecewisePolynomial convolve_with_uniform(const PiecewisePolynomial &f)
{
    const auto F = integrate(f);
    PiecewisePolynomial g;
    g.lo = f.lo - 1;
    for (long left = g.lo; left < f.hi() + 1; ++left) {
        const auto plus = shifted(F.piece_on(left + 1), 1);
        const auto minus = shifted(F.piece_on(left - 1), -1);
        Univariate piece(std::max(plus.size(), minus.size()), Rational(0));
        for (std::size_t k = 0; k < plus.size(); ++k) {
            piece[k] += plus[k] / 2;
        }
        for (std::size_t k = 0; k < minus.size(); ++k) {
            piece[k] -= minus[k] / 2;
        }
        g.pieces.push_back(std::move(piece));
    }
    return g;
}

} // namespace

Rational uniform_sum_density_at_zero(unsigned n)
{
    if (n == 0) {
        throw InvalidArgument("uniform_sum_density_at_zero needs n >= 1");
    }
    PiecewisePolynomial density{-1, {{Rational(1, 2)}, {Rational(1, 2)}}};
    for (unsigned i = 1; i < n; ++i) {
        density = convolve_with_uniform(density);
    }
    // 0 is a breakpoint; the pieces on [-1,0] and [0,1] must agree there.
    const auto left = density.pieces[static_cast<std::size_t>(-1 - density.lo)];
    const auto right = density.pieces[static_cast<std::size_t>(0 - density.lo)];
    const auto from_left = evaluate(left, 0);
    const auto from_right = evaluate(right, 0);
    if (from_left != from_right) {
        throw std::logic_error("convolved density is discontinuous at 0");
    }
    return from_right;
}

} // namespace wallcross
