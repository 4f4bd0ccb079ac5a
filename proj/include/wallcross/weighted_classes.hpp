#pragma once

#include <wallcross/multi_poly.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace wallcross {

/// One isotypic line of a circle representation: the circle weight and the
/// weight of the residual torus acting on the same line.
struct WeightedLine {
    long circle_weight;
    IntVector residual;

    friend bool operator==(const WeightedLine &, const WeightedLine &) = default;
};

/// A circle representation over a point, equivariant for a residual torus of
/// rank `residual_count`. Every circle weight is nonzero.
class WeightedSpace {
public:
    explicit WeightedSpace(std::size_t residual_count = 0) : residual_count_(residual_count) {}
    WeightedSpace(std::size_t residual_count, std::vector<WeightedLine> lines);

    std::size_t residual_count() const noexcept { return residual_count_; }
    const std::vector<WeightedLine> &lines() const noexcept { return lines_; }
    // Complex rank.
    std::size_t rank() const noexcept { return lines_.size(); }
    bool empty() const noexcept { return lines_.empty(); }

    void add_line(long circle_weight, IntVector residual);

    // Direct sum.
    friend WeightedSpace operator+(const WeightedSpace &a, const WeightedSpace &b);
    friend bool operator==(const WeightedSpace &, const WeightedSpace &) = default;

private:
    std::size_t residual_count_;
    std::vector<WeightedLine> lines_;
};

// Parses "w:r1,r2,...;w:...". A line without residuals may be written "w".
WeightedSpace parse_weighted_space(std::string_view text);

// prod over lines of (circle_weight + <residual, u>), in residual_count variables.
MultiPoly weighted_chern(const WeightedSpace &V);

// Inverse series of weighted_chern up to total exponent `order`.
TruncSeries weighted_segre(const WeightedSpace &V, unsigned order);

// gcd of |circle_weight| over all lines (1 for the empty space).
long weight_gcd(const WeightedSpace &V);

/// c_0^w h^r + c_1^w h^{r-1} + ... + c_r^w, stored by power of h:
/// coefficient_by_power[i] multiplies h^i.
struct HRelation {
    std::vector<MultiPoly> coefficient_by_power;

    std::size_t degree() const noexcept { return coefficient_by_power.empty() ? 0 : coefficient_by_power.size() - 1; }
};

HRelation ring_relation(const WeightedSpace &V);

std::string to_string(const HRelation &relation);

// sum_i c_i^w u_0^{r-i} with the circle variable appended after the residuals.
MultiPoly equivariant_euler(const WeightedSpace &V);

// Fiber integral of h^i over S(V)/S^1: zero below rank-1, otherwise
// weight_gcd(V) * s^w_{i-rank+1}(V).
MultiPoly fiber_integrate_power(const WeightedSpace &V, unsigned i);

} // namespace wallcross
