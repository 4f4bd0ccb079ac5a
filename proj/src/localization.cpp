#include <wallcross/localization.hpp>

#include <wallcross/errors.hpp>

#include <algorithm>

namespace wallcross {

Integer determinant(const std::vector<IntVector> &rows)
{
    const auto n = rows.size();
    for (const auto &r : rows) {
        if (r.size() != n) {
            throw DimensionMismatch("determinant of a non-square matrix");
        }
    }
    if (n == 0) {
        return 1;
    }
    // Fraction-free Bareiss elimination.
    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = rows[i][j];
        }
    }
    Integer sign = 1;
    Integer previous = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m[swap][k] == 0) {
                ++swap;
            }
            if (swap == n) {
                return 0;
            }
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / previous;
            }
        }
        previous = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

OrientedFlag::OrientedFlag(std::vector<IntVector> stages) : stages_(std::move(stages))
{
    if (stages_.empty()) {
        throw NotUnimodular("flag has no stages");
    }
    for (const auto &s : stages_) {
        if (s.size() != stages_.size()) {
            throw DimensionMismatch("flag stage of length " + std::to_string(s.size()) + " in a rank "
                                    + std::to_string(stages_.size()) + " flag");
        }
    }
    const auto det = determinant(stages_);
    if (abs(det) != 1) {
        throw NotUnimodular("flag basis has determinant " + det.get_str() + ", expected +-1");
    }
}

OrientedFlag negated(const OrientedFlag &flag)
{
    auto stages = flag.stages();
    for (auto &s : stages) {
        for (auto &x : s) {
            x = -x;
        }
    }
    return OrientedFlag(std::move(stages));
}

FlagSplit flag_split(const FixedPoint &fp, const OrientedFlag &flag)
{
    const auto d = flag.rank();
    FlagSplit split;
    split.basis = flag.stages();
    for (std::size_t j = 0; j < d; ++j) {
        split.stages.emplace_back(d - j - 1);
    }
    for (const auto &alpha : fp.weights) {
        if (alpha.size() != d) {
            throw DimensionMismatch("weight at '" + fp.id + "' has length " + std::to_string(alpha.size())
                                    + ", flag rank is " + std::to_string(d));
        }
        IntVector coords(d);
        for (std::size_t i = 0; i < d; ++i) {
            coords[i] = dot(alpha, flag.stages()[i]);
        }
        const auto first = std::find_if(coords.begin(), coords.end(), [](long x) { return x != 0; });
        if (first == coords.end()) {
            // Unreachable for a unimodular basis and a nonzero weight.
            throw InvalidModel("zero tangent weight at '" + fp.id + "'");
        }
        const auto j = static_cast<std::size_t>(first - coords.begin());
        split.stages[j].add_line(*first, IntVector(first + 1, coords.end()));
    }
    return split;
}

MultiPoly stage_map(const MultiPoly &p, const WeightedSpace &V)
{
    if (V.empty()) {
        throw EmptyStage("localization stage with no moving weights");
    }
    if (p.variable_count() != V.residual_count() + 1) {
        throw DimensionMismatch("stage input has " + std::to_string(p.variable_count()) + " variables, expected "
                                + std::to_string(V.residual_count() + 1));
    }
    const auto r = static_cast<unsigned>(V.rank());
    const auto parts = split_leading_variable(p);
    MultiPoly out(V.residual_count());
    if (parts.empty() || parts.rbegin()->first + 1 < r) {
        return out;
    }
    const auto segre = weighted_segre(V, parts.rbegin()->first + 1 - r);
    for (const auto &[j, a] : parts) {
        if (j + 1 < r) {
            continue;
        }
        const auto s = segre.piece(j + 1 - r);
        if (!s.is_zero()) {
            out += a * s;
        }
    }
    out *= Rational(weight_gcd(V));
    return out;
}

Rational lambda_flag(const FixedPoint &fp, const OrientedFlag &flag, const MultiPoly &restriction,
                     long global_stabilizer_order)
{
    if (restriction.variable_count() != flag.rank()) {
        throw DimensionMismatch("restriction in " + std::to_string(restriction.variable_count())
                                + " variables for a rank " + std::to_string(flag.rank()) + " flag");
    }
    const auto split = flag_split(fp, flag);
    if (std::any_of(split.stages.begin(), split.stages.end(), [](const WeightedSpace &V) { return V.empty(); })) {
        return 0;
    }
    MultiPoly current = linear_substitute(restriction, split.basis);
    for (const auto &V : split.stages) {
        if (current.is_zero()) {
            return 0;
        }
        current = stage_map(current, V);
    }
    return current.constant_term() * global_stabilizer_order;
}

Rational lambda_flag(const TorusModel &model, std::string_view fixed_point_id, const OrientedFlag &flag,
                     const EquivariantClass &a)
{
    const auto &fp = model.at(fixed_point_id);
    return lambda_flag(fp, flag, a.at(fixed_point_id), model.global_stabilizer_order());
}

void validate_plan(const TorusModel &model, const Plan &plan)
{
    for (const auto &term : plan.terms) {
        model.at(term.fixed_point);
        if (term.flag.rank() != model.rank()) {
            throw DimensionMismatch("plan flag of rank " + std::to_string(term.flag.rank()) + " on a rank "
                                    + std::to_string(model.rank()) + " model");
        }
    }
}

Rational evaluate_plan(const TorusModel &model, const Plan &plan, const EquivariantClass &a)
{
    validate_plan(model, plan);
    Rational total = 0;
    for (const auto &term : plan.terms) {
        if (term.coefficient == 0) {
            continue;
        }
        total += lambda_flag(model, term.fixed_point, term.flag, a) * term.coefficient;
    }
    return total;
}

EquivariantClass weyl_correct(const TorusModel &model, const EquivariantClass &a)
{
    if (!model.roots() || !model.weyl_order()) {
        throw NoRootData("model carries no root system / Weyl group order");
    }
    MultiPoly product = MultiPoly::constant(model.rank(), make_rational(1, *model.weyl_order()));
    for (const auto &alpha : *model.roots()) {
        product *= MultiPoly::linear_form(alpha);
    }
    std::map<std::string, MultiPoly, std::less<>> r;
    for (const auto &[id, p] : a.restrictions()) {
        r.emplace(id, p * product);
    }
    return EquivariantClass(std::move(r));
}

} // namespace wallcross
