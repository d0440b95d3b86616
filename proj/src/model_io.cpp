#include "cy3/model_io.hpp"

#include "cy3/errors.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace cy3 {

using nlohmann::json;

json model_to_json(const ThreefoldModel& model) {
    const auto& labels = model.basis.labels();
    json doc;
    doc["name"] = model.name;
    doc["basis"] = labels;

    json triples = json::array();
    for (const auto& [key, value] : model.cup.entries()) {
        triples.push_back({{"t", {labels[key[0]], labels[key[1]], labels[key[2]]}},
                           {"v", to_string(value)}});
    }
    doc["triple_products"] = std::move(triples);

    json c2 = json::object();
    for (const auto& label : labels) {
        c2[label] = to_string(model.c2(label));
    }
    doc["c2"] = std::move(c2);

    json surfaces = json::object();
    for (const auto& [label, s] : model.surfaces) {
        surfaces[label] = {{"k2", to_string(s.k_squared)}, {"e", to_string(s.euler)}};
    }
    doc["surfaces"] = std::move(surfaces);
    doc["params"] = model.params;

    json templates = json::object();
    for (const auto& [name, tmpl] : model.templates) {
        json coeffs = json::object();
        for (const auto& [index, c] : tmpl.expr.coefficients()) {
            coeffs[labels[index]] = c.to_string();
        }
        templates[name] = std::move(coeffs);
    }
    doc["templates"] = std::move(templates);

    json extra = json::object();
    for (const auto& [label, p] : model.extra_classes) {
        extra[label] = {{"d3", to_string(p.d3)}, {"dc2", to_string(p.dc2)}};
    }
    doc["extra_classes"] = std::move(extra);
    return doc;
}

namespace {

const std::set<std::string> kTopLevelKeys = {"name",   "basis",     "triple_products", "c2",
                                             "surfaces", "params", "templates", "extra_classes"};

const json& field(const json& obj, const std::string& key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw LoadError("missing field '" + path + key + "'");
    }
    return *it;
}

void expect(bool ok, const std::string& path, const std::string& what) {
    if (!ok) {
        throw LoadError("field '" + path + "': " + what);
    }
}

Integer int_field(const json& value, const std::string& path) {
    expect(value.is_string(), path, "expected an integer as a decimal string");
    try {
        return parse_integer(value.get<std::string>());
    } catch (const LoadError&) {
        throw LoadError("field '" + path + "': '" + value.get<std::string>() +
                        "' is not a decimal integer");
    }
}

std::string label_field(const json& value, const Basis& basis, const std::string& path) {
    expect(value.is_string(), path, "expected a label string");
    const auto label = value.get<std::string>();
    expect(basis.contains(label), path, "unknown basis label '" + label + "'");
    return label;
}

}  // namespace

ThreefoldModel model_from_json(const json& doc) {
    if (!doc.is_object()) {
        throw LoadError("model file must contain a JSON object");
    }
    for (const auto& [key, value] : doc.items()) {
        if (kTopLevelKeys.count(key) == 0) {
            throw LoadError("unknown field '" + key + "'");
        }
    }
    const json& name = field(doc, "name", "");
    expect(name.is_string(), "name", "expected a string");

    const json& basis_json = field(doc, "basis", "");
    expect(basis_json.is_array(), "basis", "expected an array of labels");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < basis_json.size(); ++i) {
        const std::string path = "basis[" + std::to_string(i) + "]";
        expect(basis_json[i].is_string(), path, "expected a label string");
        labels.push_back(basis_json[i].get<std::string>());
    }
    Basis basis = [&] {
        try {
            return Basis(labels);
        } catch (const ArgumentError& e) {
            throw LoadError(std::string("field 'basis': ") + e.what());
        }
    }();
    ThreefoldModel model(name.get<std::string>(), basis);

    const json& triples = field(doc, "triple_products", "");
    expect(triples.is_array(), "triple_products", "expected an array");
    for (std::size_t i = 0; i < triples.size(); ++i) {
        const std::string path = "triple_products[" + std::to_string(i) + "]";
        const json& entry = triples[i];
        expect(entry.is_object(), path, "expected an object");
        const json& t = field(entry, "t", path + ".");
        expect(t.is_array() && t.size() == 3, path + ".t", "expected three labels");
        std::array<std::string, 3> ls;
        for (std::size_t k = 0; k < 3; ++k) {
            ls[k] = label_field(t[k], basis, path + ".t[" + std::to_string(k) + "]");
        }
        const Integer v = int_field(field(entry, "v", path + "."), path + ".v");
        try {
            model.cup.insert(ls[0], ls[1], ls[2], v);
        } catch (const ArgumentError& e) {
            throw LoadError("field '" + path + "': " + e.what());
        }
    }

    const json& c2 = field(doc, "c2", "");
    expect(c2.is_object(), "c2", "expected an object");
    for (const auto& [label, value] : c2.items()) {
        const std::string path = "c2." + label;
        expect(basis.contains(label), path, "unknown basis label '" + label + "'");
        model.c2.set(label, int_field(value, path));
    }

    const json& extra = field(doc, "extra_classes", "");
    expect(extra.is_object(), "extra_classes", "expected an object");
    for (const auto& [label, value] : extra.items()) {
        const std::string path = "extra_classes." + label;
        expect(value.is_object(), path, "expected an object");
        expect(!basis.contains(label), path, "extra class shadows a basis label");
        model.extra_classes.emplace(
            label, ChernPair{int_field(field(value, "d3", path + "."), path + ".d3"),
                             int_field(field(value, "dc2", path + "."), path + ".dc2")});
    }

    const json& surfaces = field(doc, "surfaces", "");
    expect(surfaces.is_object(), "surfaces", "expected an object");
    for (const auto& [label, value] : surfaces.items()) {
        const std::string path = "surfaces." + label;
        expect(value.is_object(), path, "expected an object");
        expect(basis.contains(label) || model.extra_classes.count(label) != 0, path,
               "names neither a basis label nor an extra class");
        model.surfaces.emplace(
            label, SurfaceInvariants{label, int_field(field(value, "k2", path + "."), path + ".k2"),
                                     int_field(field(value, "e", path + "."), path + ".e")});
    }

    const json& params = field(doc, "params", "");
    expect(params.is_array(), "params", "expected an array");
    for (std::size_t i = 0; i < params.size(); ++i) {
        expect(params[i].is_string(), "params[" + std::to_string(i) + "]", "expected a name");
        model.params.push_back(params[i].get<std::string>());
    }

    const json& templates = field(doc, "templates", "");
    expect(templates.is_object(), "templates", "expected an object");
    for (const auto& [tname, coeffs] : templates.items()) {
        const std::string path = "templates." + tname;
        expect(coeffs.is_object(), path, "expected an object of label -> polynomial");
        DivisorExpr expr(basis);
        for (const auto& [label, text] : coeffs.items()) {
            const std::string cpath = path + "." + label;
            expect(basis.contains(label), cpath, "unknown basis label '" + label + "'");
            expect(text.is_string(), cpath, "expected polynomial text");
            try {
                expr.add(label, parse_poly(text.get<std::string>()));
            } catch (const LoadError& e) {
                throw LoadError("field '" + cpath + "': " + e.what());
            }
        }
        model.templates.emplace(tname, AmpleTemplate::make(tname, std::move(expr)));
    }

    model.validate();
    return model;
}

std::string export_model(const ThreefoldModel& model) { return model_to_json(model).dump(2) + "\n"; }

ThreefoldModel load_model(std::string_view reference) {
    if (reference == "builtin:x_phi") {
        return model_x_phi();
    }
    if (reference == "builtin:x_t") {
        return model_x_t();
    }
    if (reference.rfind("builtin:", 0) == 0) {
        throw LoadError("unknown built-in model '" + std::string(reference) +
                        "' (known: builtin:x_phi, builtin:x_t)");
    }
    std::ifstream in{std::string(reference)};
    if (!in) {
        throw LoadError("cannot open model file '" + std::string(reference) + "'");
    }
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw LoadError("model file '" + std::string(reference) + "' is not valid JSON: " +
                        e.what());
    }
    return model_from_json(doc);
}

}  // namespace cy3
