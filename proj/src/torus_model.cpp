#include <wallcross/torus_model.hpp>

#include <wallcross/errors.hpp>

#include <algorithm>
#include <cctype>

namespace wallcross {

namespace {

bool is_zero_vector(const Weight &w)
{
    return std::all_of(w.begin(), w.end(), [](long x) { return x == 0; });
}

Weight negated(Weight w)
{
    for (auto &x : w) {
        x = -x;
    }
    return w;
}

} // namespace

TorusModel::TorusModel(std::size_t rank, std::vector<FixedPoint> fixed_points, std::optional<std::vector<Weight>> roots,
                       std::optional<long> weyl_order, long global_stabilizer_order, std::optional<BuiltinTag> builtin)
    : rank_(rank), fixed_points_(std::move(fixed_points)), roots_(std::move(roots)), weyl_order_(weyl_order),
      global_stabilizer_order_(global_stabilizer_order), builtin_(builtin)
{
    if (rank_ == 0) {
        throw InvalidModel("model rank must be positive");
    }
    if (fixed_points_.empty()) {
        throw InvalidModel("model has no fixed points");
    }
    if (global_stabilizer_order_ <= 0) {
        throw InvalidModel("global_stabilizer_order must be positive");
    }
    if (weyl_order_ && *weyl_order_ <= 0) {
        throw InvalidModel("weyl_order must be positive");
    }

    const auto n = fixed_points_.front().weights.size();
    for (std::size_t i = 0; i < fixed_points_.size(); ++i) {
        const auto &fp = fixed_points_[i];
        if (fp.id.empty()) {
            throw InvalidModel("fixed point #" + std::to_string(i) + " has an empty id");
        }
        if (!index_.emplace(fp.id, i).second) {
            throw InvalidModel("duplicate fixed point id '" + fp.id + "'");
        }
        if (fp.moment.size() != rank_) {
            throw InvalidModel("fixed point '" + fp.id + "': moment has length " + std::to_string(fp.moment.size())
                               + ", expected " + std::to_string(rank_));
        }
        if (fp.weights.size() != n) {
            throw InvalidModel("fixed point '" + fp.id + "': has " + std::to_string(fp.weights.size())
                               + " weights, expected " + std::to_string(n));
        }
        for (const auto &w : fp.weights) {
            if (w.size() != rank_) {
                throw InvalidModel("fixed point '" + fp.id + "': weight of length " + std::to_string(w.size())
                                   + ", expected " + std::to_string(rank_));
            }
            if (is_zero_vector(w)) {
                throw InvalidModel("fixed point '" + fp.id
                                   + "': zero tangent weight (fixed point is not isolated)");
            }
        }
    }

    if (roots_) {
        const auto &rs = *roots_;
        if (rs.size() % 2 != 0) {
            throw InvalidModel("root list has odd length " + std::to_string(rs.size()));
        }
        for (const auto &r : rs) {
            if (r.size() != rank_) {
                throw InvalidModel("root of length " + std::to_string(r.size()) + ", expected "
                                   + std::to_string(rank_));
            }
            if (is_zero_vector(r)) {
                throw InvalidModel("zero root");
            }
            if (std::count(rs.begin(), rs.end(), negated(r)) != std::count(rs.begin(), rs.end(), r)) {
                throw InvalidModel("root list is not closed under negation");
            }
        }
    }
}

std::size_t TorusModel::tangent_dimension() const noexcept
{
    return fixed_points_.front().weights.size();
}

const FixedPoint *TorusModel::find(std::string_view id) const noexcept
{
    const auto it = index_.find(id);
    return it == index_.end() ? nullptr : &fixed_points_[it->second];
}

const FixedPoint &TorusModel::at(std::string_view id) const
{
    if (const auto *fp = find(id)) {
        return *fp;
    }
    throw UnknownFixedPoint("unknown fixed point '" + std::string(id) + "'");
}

EquivariantClass::EquivariantClass(std::map<std::string, MultiPoly, std::less<>> restrictions)
    : restrictions_(std::move(restrictions))
{
}

const MultiPoly &EquivariantClass::at(std::string_view id) const
{
    const auto it = restrictions_.find(id);
    if (it == restrictions_.end()) {
        throw UnknownFixedPoint("class has no restriction at fixed point '" + std::string(id) + "'");
    }
    return it->second;
}

std::optional<unsigned> EquivariantClass::homogeneous_exponent() const
{
    std::optional<unsigned> degree;
    for (const auto &[id, p] : restrictions_) {
        if (p.is_zero()) {
            continue;
        }
        if (!p.is_homogeneous()) {
            return std::nullopt;
        }
        const auto d = static_cast<unsigned>(p.total_degree());
        if (degree && *degree != d) {
            return std::nullopt;
        }
        degree = d;
    }
    return degree;
}

void EquivariantClass::check_against(const TorusModel &model) const
{
    for (const auto &fp : model.fixed_points()) {
        const auto it = restrictions_.find(fp.id);
        if (it == restrictions_.end()) {
            throw InvalidArgument("class has no restriction at fixed point '" + fp.id + "'");
        }
        if (it->second.variable_count() != model.rank()) {
            throw DimensionMismatch("restriction at '" + fp.id + "' is in " + std::to_string(it->second.variable_count())
                                    + " variables, model rank is " + std::to_string(model.rank()));
        }
    }
}

EquivariantClass &EquivariantClass::operator+=(const EquivariantClass &other)
{
    for (const auto &[id, p] : other.restrictions_) {
        auto it = restrictions_.find(id);
        if (it == restrictions_.end()) {
            restrictions_.emplace(id, p);
        } else {
            it->second += p;
        }
    }
    return *this;
}

EquivariantClass &EquivariantClass::operator*=(const Rational &c)
{
    for (auto &[id, p] : restrictions_) {
        p *= c;
    }
    return *this;
}

EquivariantClass operator*(const EquivariantClass &a, const EquivariantClass &b)
{
    std::map<std::string, MultiPoly, std::less<>> r;
    for (const auto &[id, p] : a.restrictions_) {
        r.emplace(id, p * b.at(id));
    }
    return EquivariantClass(std::move(r));
}

std::string sphere_point_id(const std::vector<int> &south_members)
{
    std::string id = "f{";
    for (std::size_t i = 0; i < south_members.size(); ++i) {
        if (i > 0) {
            id += ',';
        }
        id += std::to_string(south_members[i]);
    }
    return id + "}";
}

std::string cp_point_id(const std::vector<int> &assignment)
{
    std::string id = "F(";
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        if (i > 0) {
            id += ',';
        }
        id += std::to_string(assignment[i]);
    }
    return id + ")";
}

TorusModel build_sphere_product(unsigned n)
{
    if (n == 0 || n > 24) {
        throw InvalidArgument("sphere product needs 1 <= n <= 24, got " + std::to_string(n));
    }
    std::vector<FixedPoint> points;
    points.reserve(std::size_t{1} << n);
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        FixedPoint fp;
        std::vector<int> members;
        for (unsigned i = 0; i < n; ++i) {
            const bool south = (mask >> i) & 1ul;
            fp.factor_states.push_back(south ? 1 : 0);
            fp.weights.push_back({south ? -1L : 1L});
            if (south) {
                members.push_back(static_cast<int>(i + 1));
            }
        }
        fp.moment = {Rational(static_cast<long>(n) - 2 * static_cast<long>(members.size()))};
        fp.id = sphere_point_id(members);
        points.push_back(std::move(fp));
    }
    return TorusModel(1, std::move(points), std::vector<Weight>{{1}, {-1}}, 2, 1,
                      BuiltinTag{BuiltinKind::sphere_product, 2, n});
}

std::vector<Weight> cp_factor_weights(unsigned k, unsigned j)
{
    if (k < 2 || j < 1 || j > k) {
        throw IndexOutOfRange("fixed point F_" + std::to_string(j) + " of CP^" + std::to_string(k - 1));
    }
    const auto d = k - 1;
    auto unit = [d](unsigned i) {
        Weight e(d, 0);
        e[i - 1] = 1;
        return e;
    };
    std::vector<Weight> weights;
    if (j < k) {
        for (unsigned i = 1; i <= d; ++i) {
            if (i == j) {
                continue;
            }
            Weight w = unit(i);
            w[j - 1] -= 1;
            weights.push_back(w);
        }
        weights.push_back(negated(unit(j)));
    } else {
        for (unsigned i = 1; i <= d; ++i) {
            weights.push_back(unit(i));
        }
    }
    return weights;
}

std::vector<Rational> cp_factor_moment(unsigned k, unsigned j)
{
    if (k < 2 || j < 1 || j > k) {
        throw IndexOutOfRange("fixed point F_" + std::to_string(j) + " of CP^" + std::to_string(k - 1));
    }
    std::vector<Rational> m(k - 1, Rational(1));
    if (j < k) {
        m[j - 1] -= static_cast<long>(k);
    }
    return m;
}

TorusModel build_cp_product(unsigned k, unsigned n)
{
    if (k < 2) {
        throw InvalidArgument("projective product needs k >= 2, got " + std::to_string(k));
    }
    if (n == 0) {
        throw InvalidArgument("projective product needs n >= 1");
    }
    double count = 1;
    for (unsigned i = 0; i < n; ++i) {
        count *= k;
    }
    if (count > 5e6) {
        throw InvalidArgument("(CP^" + std::to_string(k - 1) + ")^" + std::to_string(n) + " has too many fixed points");
    }
    const auto d = k - 1;

    std::vector<std::vector<Weight>> factor_weights;
    std::vector<std::vector<Rational>> factor_moments;
    for (unsigned j = 1; j <= k; ++j) {
        factor_weights.push_back(cp_factor_weights(k, j));
        factor_moments.push_back(cp_factor_moment(k, j));
    }

    std::vector<FixedPoint> points;
    std::vector<int> assignment(n, 1);
    while (true) {
        FixedPoint fp;
        fp.moment.assign(d, Rational(0));
        for (unsigned f = 0; f < n; ++f) {
            const auto j = static_cast<unsigned>(assignment[f]);
            const auto &w = factor_weights[j - 1];
            fp.weights.insert(fp.weights.end(), w.begin(), w.end());
            for (unsigned c = 0; c < d; ++c) {
                fp.moment[c] += factor_moments[j - 1][c];
            }
        }
        fp.factor_states = assignment;
        fp.id = cp_point_id(assignment);
        points.push_back(std::move(fp));

        // Next assignment in lexicographic order.
        int pos = static_cast<int>(n) - 1;
        while (pos >= 0 && assignment[static_cast<std::size_t>(pos)] == static_cast<int>(k)) {
            assignment[static_cast<std::size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) {
            break;
        }
        ++assignment[static_cast<std::size_t>(pos)];
    }

    std::vector<Weight> roots;
    for (unsigned i = 1; i <= d; ++i) {
        Weight e(d, 0);
        e[i - 1] = 1;
        roots.push_back(e);
        roots.push_back(negated(e));
        for (unsigned j = i + 1; j <= d; ++j) {
            Weight r(d, 0);
            r[i - 1] = 1;
            r[j - 1] = -1;
            roots.push_back(r);
            roots.push_back(negated(r));
        }
    }
    const long weyl = factorial(k).get_si();
    return TorusModel(d, std::move(points), std::move(roots), weyl, 1,
                      BuiltinTag{BuiltinKind::projective_product, k, n});
}

Generator parse_generator(std::string_view name)
{
    if (name == "L") {
        return Generator::prequantum();
    }
    if (name.size() > 1 && name.front() == 'v'
        && std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        return Generator::sphere_factor(static_cast<unsigned>(std::stoul(std::string(name.substr(1)))));
    }
    if (name.starts_with("line(") && name.ends_with(")")) {
        Weight w;
        auto body = name.substr(5, name.size() - 6);
        while (!body.empty()) {
            const auto comma = body.find(',');
            const auto item = body.substr(0, comma);
            try {
                std::size_t used = 0;
                const std::string s(item);
                w.push_back(std::stol(s, &used));
                if (used != s.size()) {
                    throw UnknownGenerator("bad line weight in '" + std::string(name) + "'");
                }
            } catch (const std::logic_error &) {
                throw UnknownGenerator("bad line weight in '" + std::string(name) + "'");
            }
            if (comma == std::string_view::npos) {
                break;
            }
            body.remove_prefix(comma + 1);
        }
        return Generator::line(std::move(w));
    }
    throw UnknownGenerator("unknown generator '" + std::string(name) + "'");
}

MultiPoly generator_restriction(const TorusModel &model, const FixedPoint &fp, const Generator &kind)
{
    switch (kind.kind) {
    case Generator::Kind::prequantum:
        return MultiPoly::linear_form(fp.moment);
    case Generator::Kind::line:
        if (kind.weight.size() != model.rank()) {
            throw DimensionMismatch("line weight of length " + std::to_string(kind.weight.size()) + " on a rank "
                                    + std::to_string(model.rank()) + " model");
        }
        return MultiPoly::linear_form(kind.weight);
    case Generator::Kind::sphere_factor: {
        const auto &tag = model.builtin();
        if (!tag || tag->kind != BuiltinKind::sphere_product) {
            throw UnknownGenerator("v<i> generators are only defined on sphere-product models");
        }
        if (kind.index < 1 || kind.index > tag->factors) {
            throw IndexOutOfRange("v" + std::to_string(kind.index) + " on a product of " + std::to_string(tag->factors)
                                  + " spheres");
        }
        const long sigma = fp.factor_states[kind.index - 1] == 0 ? 1 : -1;
        return MultiPoly::linear_form(IntVector{sigma});
    }
    }
    throw UnknownGenerator("unknown generator kind");
}

EquivariantClass class_generator(const TorusModel &model, const Generator &kind)
{
    return make_class(model, [&](const FixedPoint &fp) { return generator_restriction(model, fp, kind); });
}

bool check_regular(const TorusModel &model, const std::vector<Rational> &p0)
{
    if (p0.size() != model.rank()) {
        throw DimensionMismatch("point of length " + std::to_string(p0.size()) + " for a rank "
                                + std::to_string(model.rank()) + " model");
    }
    if (model.rank() == 1) {
        return std::none_of(model.fixed_points().begin(), model.fixed_points().end(),
                            [&](const FixedPoint &fp) { return fp.moment[0] == p0[0]; });
    }
    const auto &tag = model.builtin();
    const bool origin = std::all_of(p0.begin(), p0.end(), [](const Rational &x) { return x == 0; });
    if (tag && tag->kind == BuiltinKind::projective_product && tag->factor_rank == 3 && origin) {
        return tag->factors % 3 != 0;
    }
    throw Unsupported("regularity testing is only implemented for rank-1 models and (CP^2)^n at the origin");
}

} // namespace wallcross
