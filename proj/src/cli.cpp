#include <wallcross/cli.hpp>

#include <wallcross/class_expr.hpp>
#include <wallcross/errors.hpp>
#include <wallcross/io.hpp>
#include <wallcross/localization.hpp>
#include <wallcross/plan_engine.hpp>
#include <wallcross/weighted_classes.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

namespace wallcross {

namespace {

// Bad command-line values; reported with the usage exit code.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

unsigned parse_count(const std::string &text, const std::string &what)
{
    if (text.empty() || text.size() > 6 || !std::all_of(text.begin(), text.end(), ::isdigit)) {
        throw UsageError("invalid " + what + " '" + text + "'");
    }
    return static_cast<unsigned>(std::stoul(text));
}

struct PathSpec {
    Rational p0;
    int direction;
};

PathSpec parse_path(const std::string &text)
{
    const auto colon = text.rfind(':');
    if (colon == std::string::npos) {
        throw UsageError("path must look like p0:+ or p0:-, got '" + text + "'");
    }
    const auto dir = text.substr(colon + 1);
    PathSpec path{0, 0};
    if (dir == "+" || dir == "+1" || dir == "1") {
        path.direction = 1;
    } else if (dir == "-" || dir == "-1") {
        path.direction = -1;
    } else {
        throw UsageError("path direction must be + or -, got '" + dir + "'");
    }
    try {
        path.p0 = parse_rational(text.substr(0, colon));
    } catch (const Error &e) {
        throw UsageError("invalid path start '" + text.substr(0, colon) + "': " + e.what());
    }
    return path;
}

IntVector parse_int_list(const std::string &text)
{
    IntVector v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const long x = std::stol(item, &used);
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
            v.push_back(x);
        } catch (const std::logic_error &) {
            throw UsageError("invalid integer '" + item + "' in '" + text + "'");
        }
    }
    if (v.empty()) {
        throw UsageError("empty integer list");
    }
    return v;
}

std::optional<unsigned> cp2_factor_count(const TorusModel &model)
{
    const auto &tag = model.builtin();
    if (tag && tag->kind == BuiltinKind::projective_product && tag->factor_rank == 3) {
        return tag->factors;
    }
    return std::nullopt;
}

struct PlanOptions {
    std::string path;
    std::string plan_file;
    std::string variant;
};

void add_plan_options(CLI::App *cmd, PlanOptions &o, bool allow_file)
{
    auto *path = cmd->add_option("--path", o.path, "transverse path p0:+ or p0:- (rank-1 models)");
    auto *variant = cmd->add_option("--variant", o.variant, "cp2 predicate variant: swapped, general, final-display, mirror");
    path->excludes(variant);
    if (allow_file) {
        auto *file = cmd->add_option("--plan", o.plan_file, "plan file");
        file->excludes(path)->excludes(variant);
    }
}

Plan select_plan(const TorusModel &model, const PlanOptions &o)
{
    if (!o.plan_file.empty()) {
        return parse_plan_json(read_file(o.plan_file));
    }
    if (!o.path.empty()) {
        const auto path = parse_path(o.path);
        return rank1_plan(model, path.p0, path.direction);
    }
    const auto n = cp2_factor_count(model);
    if (n) {
        return cp2_plan(*n, o.variant.empty() ? Cp2Variant::swapped : parse_cp2_variant(o.variant));
    }
    if (!o.variant.empty()) {
        throw UsageError("--variant applies only to cp2:n models");
    }
    throw UsageError("this model needs --path or --plan");
}

std::string decimal(long double x)
{
    std::ostringstream os;
    os << std::setprecision(15) << x;
    return os.str();
}

int cmd_pair(const std::string &model_spec, const std::string &class_text, const PlanOptions &o, std::ostream &out)
{
    const auto expr = parse_class_expr(class_text);
    const auto model = load_model(model_spec);
    const auto plan = select_plan(model, o);
    const auto a = evaluate_class_expr(expr, model);
    out << to_string(evaluate_plan(model, plan, a)) << '\n';
    return exit_ok;
}

int cmd_volume(const std::string &model_spec, const std::string &group, bool as_float, const PlanOptions &o,
               std::ostream &out)
{
    const auto model = load_model(model_spec);
    const bool weyl = group == "weyl";
    long m = static_cast<long>(model.tangent_dimension()) - static_cast<long>(model.rank());
    if (weyl) {
        if (!model.roots()) {
            throw NoRootData("model carries no root system / Weyl group order");
        }
        m -= static_cast<long>(model.roots()->size());
    }
    if (m < 0) {
        throw InvalidArgument("quotient dimension " + std::to_string(m) + " is negative");
    }
    const auto plan = select_plan(model, o);
    const Generator L = Generator::prequantum();
    const Rational scale = Rational(1) / Rational(factorial(static_cast<unsigned>(m)));
    auto a = make_class(model, [&](const FixedPoint &fp) {
        return pow(generator_restriction(model, fp, L), static_cast<unsigned>(m)) * scale;
    });
    if (weyl) {
        a = weyl_correct(model, a);
    }
    const auto c = evaluate_plan(model, plan, a);
    out << to_string(c) << " * (2pi)^" << m;
    if (as_float) {
        const long double value = static_cast<long double>(c.get_d())
                                  * std::pow(2.0L * std::numbers::pi_v<long double>, static_cast<long double>(m));
        out << " = " << decimal(value);
    }
    out << '\n';
    return exit_ok;
}

int cmd_walls(const std::string &model_spec, const std::string &xi_text, std::ostream &out)
{
    const auto model = load_model(model_spec);
    const auto list = xi_text.empty() ? walls(model) : walls(model, parse_int_list(xi_text));
    for (const auto &w : list) {
        out << to_string(w.value) << ':';
        for (const auto &id : w.fixed_points) {
            out << ' ' << id;
        }
        out << '\n';
    }
    return exit_ok;
}

int cmd_plan(const std::string &model_spec, const PlanOptions &o, const std::string &out_file, std::ostream &out)
{
    const auto model = load_model(model_spec);
    const auto plan = select_plan(model, o);
    validate_plan(model, plan);
    const auto text = plan_to_json(plan);
    if (out_file.empty()) {
        out << text << '\n';
        return exit_ok;
    }
    std::ofstream f(out_file);
    if (!(f << text << '\n')) {
        throw FileError("cannot write '" + out_file + "'");
    }
    return exit_ok;
}

int cmd_ring(const std::string &space, std::ostream &out)
{
    out << to_string(ring_relation(parse_weighted_space(space))) << '\n';
    return exit_ok;
}

int cmd_segre(const std::string &space, const std::string &order_text, std::ostream &out)
{
    const auto V = parse_weighted_space(space);
    const unsigned order = order_text.empty() ? static_cast<unsigned>(V.rank()) : parse_count(order_text, "order");
    const auto s = weighted_segre(V, order);
    for (unsigned i = 0; i <= order; ++i) {
        out << "s" << i << " = " << to_string(s.piece(i)) << '\n';
    }
    return exit_ok;
}

} // namespace

TorusModel load_model(const std::string &specifier)
{
    const auto colon = specifier.find(':');
    if (colon != std::string::npos) {
        const auto kind = specifier.substr(0, colon);
        const auto arg = specifier.substr(colon + 1);
        if (kind == "spheres") {
            const auto n = parse_count(arg, "sphere count");
            if (n == 0) {
                throw UsageError("spheres:n needs n >= 1");
            }
            return build_sphere_product(n);
        }
        if (kind == "cp2") {
            const auto n = parse_count(arg, "factor count");
            if (n == 0) {
                throw UsageError("cp2:n needs n >= 1");
            }
            return build_cp_product(3, n);
        }
    }
    return parse_model_json(read_file(specifier));
}

int run_command(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact pairings on symplectic quotients by wall-crossing localization", "wallcross"};
    app.require_subcommand(1);

    std::string model_spec;
    std::string class_text;
    std::string group;
    std::string xi_text;
    std::string out_file;
    std::string space;
    std::string order_text;
    bool as_float = false;
    PlanOptions pair_opts;
    PlanOptions volume_opts;
    PlanOptions plan_opts;

    auto *pair = app.add_subcommand("pair", "pair a class against the quotient");
    pair->add_option("--model", model_spec, "spheres:n, cp2:n or a model file")->required();
    pair->add_option("--class", class_text, "class expression")->required();
    add_plan_options(pair, pair_opts, true);

    auto *volume = app.add_subcommand("volume", "symplectic volume of the quotient");
    volume->add_option("--model", model_spec, "spheres:n, cp2:n or a model file")->required();
    volume->add_option("--group", group, "torus or weyl")->required()->check(CLI::IsMember({"torus", "weyl"}));
    volume->add_flag("--float", as_float, "also print a decimal approximation");
    add_plan_options(volume, volume_opts, true);

    auto *walls_cmd = app.add_subcommand("walls", "list wall values along a direction");
    walls_cmd->add_option("--model", model_spec, "spheres:n, cp2:n or a model file")->required();
    walls_cmd->add_option("--xi", xi_text, "direction a,b,... (optional for rank 1)");

    auto *plan_cmd = app.add_subcommand("plan", "emit a localization plan file");
    plan_cmd->add_option("--model", model_spec, "spheres:n, cp2:n or a model file")->required();
    add_plan_options(plan_cmd, plan_opts, false);
    plan_cmd->add_option("--out", out_file, "write to this file instead of stdout");

    auto *ring = app.add_subcommand("ring", "relation satisfied by h on S(V)/S^1");
    ring->add_option("--space", space, "weighted space w:r1,r2;w:...")->required();

    auto *segre = app.add_subcommand("segre", "weighted Segre pieces");
    segre->add_option("--space", space, "weighted space w:r1,r2;w:...")->required();
    segre->add_option("--order", order_text, "highest piece (default: rank)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*pair) {
            return cmd_pair(model_spec, class_text, pair_opts, out);
        }
        if (*volume) {
            return cmd_volume(model_spec, group, as_float, volume_opts, out);
        }
        if (*walls_cmd) {
            return cmd_walls(model_spec, xi_text, out);
        }
        if (*plan_cmd) {
            return cmd_plan(model_spec, plan_opts, out_file, out);
        }
        if (*ring) {
            return cmd_ring(space, out);
        }
        if (*segre) {
            return cmd_segre(space, order_text, out);
        }
    } catch (const SyntaxError &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const FileError &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return exit_domain;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << '\n';
        return exit_domain;
    }
    return exit_usage;
}

} // namespace wallcross
