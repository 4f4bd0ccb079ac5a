#pragma once

#include <wallcross/localization.hpp>
#include <wallcross/torus_model.hpp>

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace wallcross {

struct Wall {
    Rational value;
    std::vector<std::string> fixed_points;
};

// Values strictly increasing; every fixed point appears exactly once.
using WallList = std::vector<Wall>;

// Fixed points grouped by <mu(F), xi>. For rank-1 models xi defaults to (1).
WallList walls(const TorusModel &model, const IntVector &xi);
WallList walls(const TorusModel &model);

/// Transverse path from p0 to infinity in a rank-1 model.
///
/// direction +1 collects every fixed point with moment > p0 under flag (+1);
/// direction -1 collects those with moment < p0 under flag (-1). Throws
/// NotRegular when p0 is a wall value.
Plan rank1_plan(const TorusModel &model, const Rational &p0, int direction);

/// Predicate pairs for the (CP^2)^n recipe. Each assigns flag Theta1 =
/// [(0,1),(-1,0)] or Theta2 = [(-1,0),(0,1)] by the composition (i1,i2,i3).
///
///   swapped        Theta1: i2<n/3 & i3<n/3      Theta2: i1>n/3 & i3>n/3
///   general        Theta1: i1>n/3 & i3>n/3      Theta2: i2<n/3 & i3<n/3
///   final_display  Theta1: i1>n/3 & i3>n/3      Theta2: i1<n/3 & i2<n/3
///   mirror        -Theta1: i2>n/3 & i3>n/3     -Theta2: i1<n/3 & i3<n/3
///
/// `swapped` follows the straight path from the origin along (-1,1) and is
/// the default; `mirror` is the reflected path along (1,-1). See README.
enum class Cp2Variant { swapped, general, final_display, mirror };

Cp2Variant parse_cp2_variant(std::string_view token);
std::string to_string(Cp2Variant v);
std::vector<Cp2Variant> all_cp2_variants();

OrientedFlag cp2_theta1();
OrientedFlag cp2_theta2();

/// Plan over all partitions (I1,I2,I3) of {1..n}, with ids matching
/// build_cp_product(3, n). Throws NotRegular when 3 divides n.
Plan cp2_plan(unsigned n, Cp2Variant variant = Cp2Variant::swapped);

// Composition (|I1|,|I2|,|I3|) of a (CP^2)^n fixed point.
std::array<unsigned, 3> cp2_composition(const FixedPoint &fp);

/// Exact density at 0 of a sum of n independent uniform[-1,1] variables,
/// computed by repeated piecewise-polynomial convolution.
Rational uniform_sum_density_at_zero(unsigned n);

} // namespace wallcross
