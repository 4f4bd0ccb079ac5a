#pragma once

#include <wallcross/multi_poly.hpp>
#include <wallcross/rational.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wallcross {

// Element of the weight lattice of the torus (length = rank).
using Weight = IntVector;

/// Isolated fixed point: moment image and tangent weights.
///
/// `factor_states` is filled in for the built-in product models and records,
/// per factor, which fixed point of the factor the product point sits at
/// (0 = north / 1 = south for spheres; the 1-based index j of F_j for
/// projective spaces). Loaded models leave it empty.
struct FixedPoint {
    std::string id;
    std::vector<Rational> moment;
    std::vector<Weight> weights;
    std::vector<int> factor_states;
};

enum class BuiltinKind { sphere_product, projective_product };

struct BuiltinTag {
    BuiltinKind kind;
    unsigned factor_rank; // k for (CP^{k-1})^n, 2 for spheres
    unsigned factors;     // n
};

/// Hamiltonian T-space described by its isolated fixed points.
///
/// The constructor enforces every invariant (nonzero weights of the right
/// length, equal weight counts, unique ids, negation-closed root list) and
/// throws InvalidModel naming the first offending fixed point.
class TorusModel {
public:
    TorusModel(std::size_t rank, std::vector<FixedPoint> fixed_points, std::optional<std::vector<Weight>> roots = {},
               std::optional<long> weyl_order = {}, long global_stabilizer_order = 1,
               std::optional<BuiltinTag> builtin = {});

    std::size_t rank() const noexcept { return rank_; }
    const std::vector<FixedPoint> &fixed_points() const noexcept { return fixed_points_; }
    const std::optional<std::vector<Weight>> &roots() const noexcept { return roots_; }
    const std::optional<long> &weyl_order() const noexcept { return weyl_order_; }
    long global_stabilizer_order() const noexcept { return global_stabilizer_order_; }
    const std::optional<BuiltinTag> &builtin() const noexcept { return builtin_; }

    // Complex dimension n of X (weights per fixed point).
    std::size_t tangent_dimension() const noexcept;

    // Throws UnknownFixedPoint.
    const FixedPoint &at(std::string_view id) const;
    const FixedPoint *find(std::string_view id) const noexcept;

private:
    std::size_t rank_;
    std::vector<FixedPoint> fixed_points_;
    std::map<std::string, std::size_t, std::less<>> index_;
    std::optional<std::vector<Weight>> roots_;
    std::optional<long> weyl_order_;
    long global_stabilizer_order_;
    std::optional<BuiltinTag> builtin_;
};

/// A class in H_T^*(X) stored as one polynomial in u_1..u_d per fixed point.
class EquivariantClass {
public:
    EquivariantClass() = default;
    explicit EquivariantClass(std::map<std::string, MultiPoly, std::less<>> restrictions);

    const std::map<std::string, MultiPoly, std::less<>> &restrictions() const noexcept { return restrictions_; }

    // Throws UnknownFixedPoint.
    const MultiPoly &at(std::string_view id) const;

    // Common total exponent when every restriction is homogeneous of the same
    // exponent (zero restrictions are ignored); nullopt otherwise or if all
    // restrictions vanish.
    std::optional<unsigned> homogeneous_exponent() const;

    // Throws InvalidArgument if a fixed point of the model has no entry or a
    // restriction has the wrong variable count.
    void check_against(const TorusModel &model) const;

    EquivariantClass &operator+=(const EquivariantClass &other);
    EquivariantClass &operator*=(const Rational &c);
    friend EquivariantClass operator+(EquivariantClass a, const EquivariantClass &b) { return a += b; }
    friend EquivariantClass operator*(const Rational &c, EquivariantClass a) { return a *= c; }
    // Pointwise product.
    friend EquivariantClass operator*(const EquivariantClass &a, const EquivariantClass &b);

private:
    std::map<std::string, MultiPoly, std::less<>> restrictions_;
};

// Applies f(fixed point) at every fixed point.
template <typename F>
EquivariantClass make_class(const TorusModel &model, F &&f)
{
    std::map<std::string, MultiPoly, std::less<>> r;
    for (const auto &fp : model.fixed_points()) {
        r.emplace(fp.id, f(fp));
    }
    return EquivariantClass(std::move(r));
}

/// (S^2)^n with the diagonal circle action: 2^n fixed points f_I, moment
/// n - 2|I|, weights (+1) x (n-|I|) and (-1) x |I|, SO(3) roots {+1,-1}
/// with Weyl order 2. Fixed points are named "f{}" and "f{1,3}" (1-based
/// members of I).
TorusModel build_sphere_product(unsigned n);

/// (CP^{k-1})^n with the maximal torus of PU(k) (rank k-1). Fixed points are
/// indexed by the assignment of each factor to one of F_1..F_k and named
/// "F(j_1,...,j_n)". PU(k) roots and Weyl order k! are attached.
TorusModel build_cp_product(unsigned k, unsigned n);

// Tangent weights and moment of the fixed point F_j (1-based) of CP^{k-1}.
std::vector<Weight> cp_factor_weights(unsigned k, unsigned j);
std::vector<Rational> cp_factor_moment(unsigned k, unsigned j);

std::string sphere_point_id(const std::vector<int> &south_members);
std::string cp_point_id(const std::vector<int> &assignment);

/// Which generator class_generator builds.
struct Generator {
    enum class Kind { prequantum, sphere_factor, line };
    Kind kind = Kind::prequantum;
    unsigned index = 0; // 1-based factor for sphere_factor
    Weight weight;      // for line

    static Generator prequantum() { return {Kind::prequantum, 0, {}}; }
    static Generator sphere_factor(unsigned i) { return {Kind::sphere_factor, i, {}}; }
    static Generator line(Weight w) { return {Kind::line, 0, std::move(w)}; }

    friend bool operator==(const Generator &, const Generator &) = default;
};

// Parses "L", "v<i>" or "line(a1,...,ad)"; throws UnknownGenerator.
Generator parse_generator(std::string_view name);

/// prequantum: <mu(F), u> at each F; line(alpha): <alpha, u> everywhere;
/// v(i): sigma(i) u at f_I with sigma(i) = -1 iff i in I (sphere products only).
EquivariantClass class_generator(const TorusModel &model, const Generator &kind);

// Restriction of a generator at one fixed point.
MultiPoly generator_restriction(const TorusModel &model, const FixedPoint &fp, const Generator &kind);

/// Regularity of p0 for the moment map. Rank one: p0 differs from every
/// fixed-point moment. Built-in (CP^2)^n at the origin: n mod 3 != 0.
/// Everything else throws Unsupported.
bool check_regular(const TorusModel &model, const std::vector<Rational> &p0);

} // namespace wallcross
