#include <wallcross/io.hpp>

#include <wallcross/errors.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace wallcross {

using nlohmann::json;

namespace {

Rational rational_from_json(const json &j, const std::string &where)
{
    if (j.is_number_integer()) {
        return Rational(j.get<long>());
    }
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const InvalidArgument &e) {
            throw InvalidModel(where + ": " + e.what());
        }
    }
    throw InvalidModel(where + ": moment entries must be integers or \"p/q\" strings");
}

IntVector int_vector_from_json(const json &j, const std::string &where)
{
    if (!j.is_array()) {
        throw InvalidModel(where + ": expected an array of integers");
    }
    IntVector v;
    for (const auto &x : j) {
        if (!x.is_number_integer()) {
            throw InvalidModel(where + ": expected an array of integers");
        }
        v.push_back(x.get<long>());
    }
    return v;
}

} // namespace

TorusModel parse_model_json(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw InvalidModel(std::string("model file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw InvalidModel("model file must hold a JSON object");
    }
    if (!doc.contains("rank") || !doc["rank"].is_number_integer() || doc["rank"].get<long>() <= 0) {
        throw InvalidModel("model needs a positive integer 'rank'");
    }
    const auto rank = static_cast<std::size_t>(doc["rank"].get<long>());
    if (!doc.contains("fixed_points") || !doc["fixed_points"].is_array()) {
        throw InvalidModel("model needs a 'fixed_points' array");
    }

    std::vector<FixedPoint> points;
    std::size_t index = 0;
    for (const auto &jp : doc["fixed_points"]) {
        FixedPoint fp;
        std::string where = "fixed point #" + std::to_string(index++);
        if (!jp.is_object() || !jp.contains("id")) {
            throw InvalidModel(where + ": needs an 'id'");
        }
        if (jp["id"].is_string()) {
            fp.id = jp["id"].get<std::string>();
        } else if (jp["id"].is_number_integer()) {
            fp.id = std::to_string(jp["id"].get<long>());
        } else {
            throw InvalidModel(where + ": 'id' must be a string or integer");
        }
        where = "fixed point '" + fp.id + "'";
        if (!jp.contains("moment") || !jp["moment"].is_array()) {
            throw InvalidModel(where + ": needs a 'moment' array");
        }
        for (const auto &m : jp["moment"]) {
            fp.moment.push_back(rational_from_json(m, where));
        }
        if (!jp.contains("weights") || !jp["weights"].is_array()) {
            throw InvalidModel(where + ": needs a 'weights' array");
        }
        for (const auto &w : jp["weights"]) {
            fp.weights.push_back(int_vector_from_json(w, where));
        }
        points.push_back(std::move(fp));
    }

    std::optional<std::vector<Weight>> roots;
    if (doc.contains("roots") && !doc["roots"].is_null()) {
        if (!doc["roots"].is_array()) {
            throw InvalidModel("'roots' must be an array");
        }
        roots.emplace();
        for (const auto &r : doc["roots"]) {
            roots->push_back(int_vector_from_json(r, "roots"));
        }
    }
    std::optional<long> weyl;
    if (doc.contains("weyl_order") && !doc["weyl_order"].is_null()) {
        if (!doc["weyl_order"].is_number_integer()) {
            throw InvalidModel("'weyl_order' must be an integer");
        }
        weyl = doc["weyl_order"].get<long>();
    }
    long stabilizer = 1;
    if (doc.contains("global_stabilizer_order")) {
        if (!doc["global_stabilizer_order"].is_number_integer()) {
            throw InvalidModel("'global_stabilizer_order' must be an integer");
        }
        stabilizer = doc["global_stabilizer_order"].get<long>();
    }
    return TorusModel(rank, std::move(points), std::move(roots), weyl, stabilizer);
}

std::string model_to_json(const TorusModel &model)
{
    json doc;
    doc["rank"] = model.rank();
    json points = json::array();
    for (const auto &fp : model.fixed_points()) {
        json jp;
        jp["id"] = fp.id;
        json moment = json::array();
        for (const auto &m : fp.moment) {
            if (m.get_den() == 1 && m.get_num().fits_slong_p()) {
                moment.push_back(m.get_num().get_si());
            } else {
                moment.push_back(to_string(m));
            }
        }
        jp["moment"] = moment;
        jp["weights"] = fp.weights;
        points.push_back(jp);
    }
    doc["fixed_points"] = points;
    if (model.roots()) {
        doc["roots"] = *model.roots();
    }
    if (model.weyl_order()) {
        doc["weyl_order"] = *model.weyl_order();
    }
    doc["global_stabilizer_order"] = model.global_stabilizer_order();
    return doc.dump(2) + "\n";
}

Plan parse_plan_json(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw InvalidPlan(std::string("plan file is not valid JSON: ") + e.what());
    }
    if (!doc.is_array()) {
        throw InvalidPlan("plan file must hold a JSON array");
    }
    Plan plan;
    std::size_t index = 0;
    for (const auto &jt : doc) {
        const std::string where = "plan term #" + std::to_string(index++);
        if (!jt.is_object()) {
            throw InvalidPlan(where + ": expected an object");
        }
        PlanTerm term{1, {}, OrientedFlag(std::vector<IntVector>{IntVector{1}})};
        if (jt.contains("coefficient")) {
            if (!jt["coefficient"].is_number_integer()) {
                throw InvalidPlan(where + ": 'coefficient' must be an integer");
            }
            term.coefficient = jt["coefficient"].get<long>();
        }
        if (!jt.contains("fixed_point") || !jt["fixed_point"].is_string()) {
            throw InvalidPlan(where + ": needs a string 'fixed_point'");
        }
        term.fixed_point = jt["fixed_point"].get<std::string>();
        if (!jt.contains("flag") || !jt["flag"].is_array()) {
            throw InvalidPlan(where + ": needs a 'flag' array");
        }
        std::vector<IntVector> stages;
        for (const auto &s : jt["flag"]) {
            try {
                stages.push_back(int_vector_from_json(s, where));
            } catch (const InvalidModel &e) {
                throw InvalidPlan(e.what());
            }
        }
        term.flag = OrientedFlag(std::move(stages));
        plan.terms.push_back(std::move(term));
    }
    return plan;
}

std::string plan_to_json(const Plan &plan)
{
    // One term per line keeps large plans diffable.
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < plan.terms.size(); ++i) {
        const auto &t = plan.terms[i];
        json jt;
        jt["coefficient"] = t.coefficient;
        jt["fixed_point"] = t.fixed_point;
        jt["flag"] = t.flag.stages();
        os << (i == 0 ? "\n  " : ",\n  ") << jt.dump();
    }
    os << (plan.terms.empty() ? "]\n" : "\n]\n");
    return os.str();
}

std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FileError("cannot open file '" + path + "'");
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace wallcross
