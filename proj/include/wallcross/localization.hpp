#pragma once

#include <wallcross/multi_poly.hpp>
#include <wallcross/torus_model.hpp>
#include <wallcross/weighted_classes.hpp>

#include <string>
#include <vector>

namespace wallcross {

/// Flag of oriented circle subgroups, encoded as an ordered lattice basis
/// xi_1..xi_d of the cocharacter lattice.
///
/// Stage i of the flag is the circle generated by xi_i acting on what the
/// earlier circles fix. Negating xi_i reverses that circle's orientation.
/// Construction throws NotUnimodular unless |det| = 1.
class OrientedFlag {
public:
    explicit OrientedFlag(std::vector<IntVector> stages);

    std::size_t rank() const noexcept { return stages_.size(); }
    const std::vector<IntVector> &stages() const noexcept { return stages_; }

    friend bool operator==(const OrientedFlag &, const OrientedFlag &) = default;

private:
    std::vector<IntVector> stages_;
};

// Exact determinant of a square integer matrix (rows as given).
Integer determinant(const std::vector<IntVector> &rows);

OrientedFlag negated(const OrientedFlag &flag);

struct FlagSplit {
    // stages[j] holds the weights first moved by xi_{j+1}; its residual
    // variables are those of xi_{j+2}..xi_d.
    std::vector<WeightedSpace> stages;
    // Basis for linear_substitute of classes into flag coordinates.
    std::vector<IntVector> basis;
};

FlagSplit flag_split(const FixedPoint &fp, const OrientedFlag &flag);

/// One localization stage: p is a polynomial whose variable 0 is the stage
/// variable and whose remaining variables are V's residual variables.
/// Returns weight_gcd(V) * sum_{j >= r-1} a_j s^w_{j-r+1}(V) where
/// p = sum_j a_j x_0^j and r = rank(V). Throws EmptyStage for empty V.
MultiPoly stage_map(const MultiPoly &p, const WeightedSpace &V);

// lambda_Theta at one fixed point applied to the restriction there.
Rational lambda_flag(const FixedPoint &fp, const OrientedFlag &flag, const MultiPoly &restriction,
                     long global_stabilizer_order = 1);

Rational lambda_flag(const TorusModel &model, std::string_view fixed_point_id, const OrientedFlag &flag,
                     const EquivariantClass &a);

struct PlanTerm {
    long coefficient = 1;
    std::string fixed_point;
    OrientedFlag flag;

    friend bool operator==(const PlanTerm &, const PlanTerm &) = default;
};

/// Formal integer combination of (fixed point, flag) pairs.
struct Plan {
    std::vector<PlanTerm> terms;

    friend bool operator==(const Plan &, const Plan &) = default;
};

// Throws UnknownFixedPoint / DimensionMismatch on terms that do not fit the model.
void validate_plan(const TorusModel &model, const Plan &plan);

// sum over terms of coefficient * lambda_flag; linear in a.
Rational evaluate_plan(const TorusModel &model, const Plan &plan, const EquivariantClass &a);

// Multiplies every restriction by prod_{alpha in roots} <alpha, u> / |W|.
// Throws NoRootData when the model carries no roots or Weyl order.
EquivariantClass weyl_correct(const TorusModel &model, const EquivariantClass &a);

} // namespace wallcross
