#include <wallcross/weighted_classes.hpp>

#include <wallcross/errors.hpp>

#include <numeric>
#include <sstream>

namespace wallcross {

WeightedSpace::WeightedSpace(std::size_t residual_count, std::vector<WeightedLine> lines)
    : residual_count_(residual_count)
{
    for (auto &line : lines) {
        add_line(line.circle_weight, std::move(line.residual));
    }
}

void WeightedSpace::add_line(long circle_weight, IntVector residual)
{
    if (circle_weight == 0) {
        throw InvalidArgument("weighted space line with zero circle weight");
    }
    if (residual.size() != residual_count_) {
        throw DimensionMismatch("residual weight of length " + std::to_string(residual.size()) + ", expected "
                                + std::to_string(residual_count_));
    }
    lines_.push_back({circle_weight, std::move(residual)});
}

WeightedSpace operator+(const WeightedSpace &a, const WeightedSpace &b)
{
    if (a.residual_count_ != b.residual_count_) {
        throw DimensionMismatch("direct sum of weighted spaces with different residual ranks");
    }
    WeightedSpace s = a;
    s.lines_.insert(s.lines_.end(), b.lines_.begin(), b.lines_.end());
    return s;
}

namespace {

long parse_long(std::string_view text, std::string_view context)
{
    std::string s(text);
    while (!s.empty() && s.front() == ' ') {
        s.erase(s.begin());
    }
    while (!s.empty() && s.back() == ' ') {
        s.pop_back();
    }
    try {
        std::size_t used = 0;
        const long v = std::stol(s, &used);
        if (used == s.size()) {
            return v;
        }
    } catch (const std::logic_error &) {
    }
    throw InvalidArgument("malformed integer '" + s + "' in weighted space '" + std::string(context) + "'");
}

} // namespace

WeightedSpace parse_weighted_space(std::string_view text)
{
    std::vector<std::pair<long, IntVector>> parsed;
    std::string_view rest = text;
    while (!rest.empty()) {
        const auto semi = rest.find(';');
        const auto item = rest.substr(0, semi);
        const auto colon = item.find(':');
        const long w = parse_long(item.substr(0, colon), text);
        IntVector residual;
        if (colon != std::string_view::npos) {
            auto r = item.substr(colon + 1);
            while (!r.empty()) {
                const auto comma = r.find(',');
                residual.push_back(parse_long(r.substr(0, comma), text));
                if (comma == std::string_view::npos) {
                    break;
                }
                r.remove_prefix(comma + 1);
            }
        }
        parsed.emplace_back(w, std::move(residual));
        if (semi == std::string_view::npos) {
            break;
        }
        rest.remove_prefix(semi + 1);
    }
    const std::size_t r = parsed.empty() ? 0 : parsed.front().second.size();
    WeightedSpace V(r);
    for (auto &[w, res] : parsed) {
        V.add_line(w, std::move(res));
    }
    return V;
}

MultiPoly weighted_chern(const WeightedSpace &V)
{
    const auto r = V.residual_count();
    MultiPoly c = MultiPoly::constant(r, 1);
    for (const auto &line : V.lines()) {
        c *= MultiPoly::linear_form(line.residual) + MultiPoly::constant(r, Rational(line.circle_weight));
    }
    return c;
}

TruncSeries weighted_segre(const WeightedSpace &V, unsigned order)
{
    return series_invert(weighted_chern(V), order);
}

long weight_gcd(const WeightedSpace &V)
{
    long g = 0;
    for (const auto &line : V.lines()) {
        g = std::gcd(g, line.circle_weight);
    }
    return g == 0 ? 1 : g;
}

HRelation ring_relation(const WeightedSpace &V)
{
    const auto c = weighted_chern(V);
    const auto r = static_cast<unsigned>(V.rank());
    HRelation rel;
    rel.coefficient_by_power.resize(r + 1, MultiPoly(V.residual_count()));
    for (unsigned i = 0; i <= r; ++i) {
        rel.coefficient_by_power[r - i] = homogeneous_part(c, i);
    }
    return rel;
}

std::string to_string(const HRelation &relation)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = relation.coefficient_by_power.size(); k-- > 0;) {
        const auto &c = relation.coefficient_by_power[k];
        if (c.is_zero()) {
            continue;
        }
        std::string coeff = to_string(c);
        const bool single = c.size() == 1;
        bool negative = false;
        if (single && coeff.front() == '-') {
            negative = true;
            coeff.erase(coeff.begin());
        }
        if (!first) {
            os << (negative ? " - " : " + ");
        } else if (negative) {
            os << '-';
        }
        first = false;

        std::string hpow = k == 0 ? "" : (k == 1 ? "h" : "h^" + std::to_string(k));
        if (hpow.empty()) {
            os << (single ? coeff : "(" + coeff + ")");
        } else if (single && coeff == "1") {
            os << hpow;
        } else {
            os << (single ? coeff : "(" + coeff + ")") << '*' << hpow;
        }
    }
    return first ? "0" : os.str();
}

MultiPoly equivariant_euler(const WeightedSpace &V)
{
    const auto r = V.residual_count();
    MultiPoly e = MultiPoly::constant(r + 1, 1);
    for (const auto &line : V.lines()) {
        IntVector coefficients = line.residual;
        coefficients.push_back(line.circle_weight);
        e *= MultiPoly::linear_form(coefficients);
    }
    return e;
}

MultiPoly fiber_integrate_power(const WeightedSpace &V, unsigned i)
{
    const auto r = V.rank();
    if (r == 0) {
        throw EmptyStage("fiber integration over an empty weighted space");
    }
    if (i + 1 < r) {
        return MultiPoly(V.residual_count());
    }
    const auto m = static_cast<unsigned>(i + 1 - r);
    auto s = weighted_segre(V, m).piece(m);
    s *= Rational(weight_gcd(V));
    return s;
}

} // namespace wallcross
