#include "qmeas/json_io.hpp"

#include "qmeas/error.hpp"

#include <fstream>
#include <sstream>

namespace qmeas {

namespace {

void expect_object(const Json& node, const char* what,
                   std::initializer_list<const char*> allowed) {
    if (!node.is_object()) throw Error(std::string(what) + " must be a JSON object");
    for (auto it = node.begin(); it != node.end(); ++it) {
        if (it.key() == "_meta") continue;
        bool known = false;
        for (const char* key : allowed)
            if (it.key() == key) { known = true; break; }
        if (!known)
            throw Error("unexpected key \"" + it.key() + "\" in " + what);
    }
}

const Json& require(const Json& node, const char* key, const char* what) {
    auto it = node.find(key);
    if (it == node.end())
        throw Error(std::string(what) + " needs \"" + key + "\"");
    return *it;
}

void parse_tensor_node(const Json& node, const std::vector<SpacePtr>& factors,
                       std::size_t depth, std::vector<Scalar>& out) {
    if (depth == factors.size()) {
        out.push_back(scalar_from_json(node));
        return;
    }
    if (!node.is_array() || node.size() != factors[depth]->size())
        throw Error("tensor shape must match the factors");
    for (const auto& child : node) parse_tensor_node(child, factors, depth + 1, out);
}

Json tensor_node(const PolyMeasure& lambda, unsigned depth, std::vector<unsigned>& idx) {
    if (depth == lambda.rank()) return Json(lambda.entry(idx).str());
    Json arr = Json::array();
    for (unsigned a = 0; a < lambda.factors()[depth]->size(); ++a) {
        idx[depth] = a;
        arr.push_back(tensor_node(lambda, depth + 1, idx));
    }
    return arr;
}

std::vector<SpacePtr> factors_from_json(const Json& node, const char* what) {
    const Json& factors = require(node, "factors", what);
    if (!factors.is_array() || factors.empty())
        throw Error(std::string(what) + " needs a non-empty \"factors\" array");
    std::vector<SpacePtr> out;
    out.reserve(factors.size());
    for (const auto& f : factors) out.push_back(space_from_json(f));
    return out;
}

Json factors_to_json(const std::vector<SpacePtr>& factors) {
    Json arr = Json::array();
    for (const auto& f : factors) arr.push_back(space_to_json(*f));
    return arr;
}

RInterval interval_from_json(const Json& node) {
    if (!node.is_array() || node.size() != 2)
        throw Error("an interval is a [lo, hi] pair");
    return RInterval(scalar_from_json(node[0]), scalar_from_json(node[1]));
}

} // namespace

Scalar scalar_from_json(const Json& node) {
    if (node.is_string()) return Scalar::parse(node.get<std::string>());
    if (node.is_number_integer() && !node.is_number_unsigned())
        return Scalar::parse(std::to_string(node.get<std::int64_t>()));
    if (node.is_number_unsigned())
        return Scalar::parse(std::to_string(node.get<std::uint64_t>()));
    if (node.is_number_float())
        throw Error("scalars must be rational strings, not floating point");
    throw Error("expected a rational string");
}

SpacePtr space_from_json(const Json& node) {
    expect_object(node, "a space", {"atoms"});
    const Json& atoms = require(node, "atoms", "a space");
    if (!atoms.is_array()) throw Error("a space needs an \"atoms\" array");
    std::vector<std::string> labels;
    labels.reserve(atoms.size());
    for (const auto& a : atoms) {
        if (!a.is_string()) throw Error("atom labels must be strings");
        labels.push_back(a.get<std::string>());
    }
    return make_space(std::move(labels));
}

SetFunction set_function_from_json(const Json& node) {
    expect_object(node, "a set function", {"space", "values"});
    SpacePtr space = space_from_json(require(node, "space", "a set function"));
    const Json& values = require(node, "values", "a set function");
    if (!values.is_object()) throw Error("\"values\" must map set keys to rationals");
    std::vector<Scalar> table(space->subset_count());
    std::vector<bool> seen(space->subset_count(), false);
    for (auto it = values.begin(); it != values.end(); ++it) {
        MSet set = MSet::from_key(space, it.key());
        table[set.bits()] = scalar_from_json(*it);
        seen[set.bits()] = true;
    }
    for (bool s : seen)
        if (!s) throw Error("set function table must cover all 2^k subsets");
    return SetFunction(std::move(space), std::move(table));
}

PolyMeasure polymeasure_from_json(const Json& node) {
    expect_object(node, "a polymeasure", {"factors", "tensor"});
    std::vector<SpacePtr> factors = factors_from_json(node, "a polymeasure");
    std::vector<Scalar> tensor;
    parse_tensor_node(require(node, "tensor", "a polymeasure"), factors, 0, tensor);
    return PolyMeasure(std::move(factors), std::move(tensor));
}

RawCylinderTable cylinder_table_from_json(const Json& node) {
    expect_object(node, "a cylinder table", {"factors", "entries"});
    std::vector<SpacePtr> factors = factors_from_json(node, "a cylinder table");
    const Json& entries = require(node, "entries", "a cylinder table");
    if (!entries.is_array()) throw Error("\"entries\" must be an array");
    RawCylinderTable out(factors);
    for (const auto& entry : entries) {
        expect_object(entry, "a table entry", {"sets", "value"});
        const Json& sets = require(entry, "sets", "a table entry");
        if (!sets.is_array() || sets.size() != factors.size())
            throw Error("a table entry needs one set key per factor");
        std::vector<MSet> tuple;
        tuple.reserve(factors.size());
        for (std::size_t j = 0; j < factors.size(); ++j) {
            if (!sets[j].is_string()) throw Error("set keys must be strings");
            tuple.push_back(MSet::from_key(factors[j], sets[j].get<std::string>()));
        }
        out.set(tuple, scalar_from_json(require(entry, "value", "a table entry")));
    }
    return out;
}

BoxUnion box_union_from_json(const Json& node) {
    expect_object(node, "a box union", {"dim", "boxes"});
    const Json& dim_node = require(node, "dim", "a box union");
    if (!dim_node.is_number_integer())
        throw Error("\"dim\" must be an integer");
    const std::int64_t dim = dim_node.get<std::int64_t>();
    if (dim < 1 || dim > 64) throw Error("dimension must be at least 1");
    const Json& boxes = require(node, "boxes", "a box union");
    if (!boxes.is_array()) throw Error("\"boxes\" must be an array");
    std::vector<Box> parsed;
    parsed.reserve(boxes.size());
    for (const auto& b : boxes) {
        expect_object(b, "a box", {"sides"});
        const Json& sides = require(b, "sides", "a box");
        if (!sides.is_array()) throw Error("\"sides\" must be an array of intervals");
        std::vector<RInterval> intervals;
        intervals.reserve(sides.size());
        for (const auto& side : sides) intervals.push_back(interval_from_json(side));
        parsed.emplace_back(std::move(intervals));
    }
    return BoxUnion(static_cast<unsigned>(dim), std::move(parsed));
}

Json space_to_json(const FiniteSpace& space) {
    Json out = Json::object();
    out["atoms"] = space.atoms();
    return out;
}

Json set_function_to_json(const SetFunction& mu) {
    Json values = Json::object();
    for (std::uint32_t m = 0; m < mu.subset_count(); ++m)
        values[key_from_mask(m)] = mu.at_mask(m).str();
    Json out = Json::object();
    out["space"] = space_to_json(*mu.space());
    out["values"] = std::move(values);
    return out;
}

Json polymeasure_to_json(const PolyMeasure& lambda) {
    Json out = Json::object();
    out["factors"] = factors_to_json(lambda.factors());
    std::vector<unsigned> idx(lambda.rank(), 0);
    out["tensor"] = tensor_node(lambda, 0, idx);
    return out;
}

Json cylinder_table_to_json(const RawCylinderTable& raw) {
    Json entries = Json::array();
    for (const auto& [masks, value] : raw.entries()) {
        Json sets = Json::array();
        for (std::uint32_t m : masks) sets.push_back(key_from_mask(m));
        Json entry = Json::object();
        entry["sets"] = std::move(sets);
        entry["value"] = value.str();
        entries.push_back(std::move(entry));
    }
    Json out = Json::object();
    out["factors"] = factors_to_json(raw.factors());
    out["entries"] = std::move(entries);
    return out;
}

Json box_union_to_json(const BoxUnion& t) {
    Json boxes = Json::array();
    for (const auto& b : t.boxes()) {
        Json sides = Json::array();
        for (const auto& side : b.sides)
            sides.push_back(Json::array({side.lo.str(), side.hi.str()}));
        Json box = Json::object();
        box["sides"] = std::move(sides);
        boxes.push_back(std::move(box));
    }
    Json out = Json::object();
    out["dim"] = t.dim();
    out["boxes"] = std::move(boxes);
    return out;
}

Json growth_row_to_json(const GrowthRow& row) {
    Json out = Json::object();
    out["K"] = row.blocks;
    out["n"] = row.n;
    out["variation"] = row.variation.str();
    out["semivar_lb"] = row.semivar_lb.str();
    return out;
}

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(e.what()); // keeps nlohmann's line/column position info
    }
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_json_text(buffer.str());
}

} // namespace qmeas
