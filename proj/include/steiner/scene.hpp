#pragma once

// Scene documents: a JSON-compatible description of a cell complex together
// with named piecewise-affine fields, in either arithmetic mode. The parser
// is strict: unknown keys are errors (the optional "meta" object is carried
// through untouched).

#include "steiner/polyset.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <variant>

namespace steiner {

using nlohmann::json;

template <class S>
struct Scene {
    ComplexPtr<S> complex;
    std::vector<std::string> cell_names;  // index -> id string
    std::map<std::string, PwAffineField<S>> fields;
    json meta;

    int cell_index(const std::string& name) const {
        for (std::size_t i = 0; i < cell_names.size(); ++i)
            if (cell_names[i] == name) return static_cast<int>(i);
        throw Error("unknown cell id '" + name + "'");
    }

    const PwAffineField<S>& field(const std::string& name) const {
        auto it = fields.find(name);
        if (it == fields.end()) throw Error("scene has no field '" + name + "'");
        return it->second;
    }
    bool has_field(const std::string& name) const { return fields.count(name) > 0; }
};

struct AnyScene {
    std::string arithmetic;  // "rational" | "double"
    std::variant<Scene<Rat>, Scene<double>> scene;

    template <class F>
    auto visit(F&& f) const {
        return std::visit(std::forward<F>(f), scene);
    }
};

namespace detail {

template <class S>
S json_number(const json& j) {
    if (j.is_string()) return scalar_from_string<S>(j.get<std::string>());
    if (j.is_number()) return scalar_from_double<S>(j.get<double>());
    throw Error("expected a number or a fraction string");
}

inline void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed,
                                const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed)
            if (it.key() == k) ok = true;
        if (!ok) throw Error("unknown key '" + it.key() + "' in " + where);
    }
}

}  // namespace detail

template <class S>
Scene<S> scene_from_json(const json& j) {
    if (!j.is_object()) throw Error("scene must be a JSON object");
    detail::reject_unknown_keys(j, {"dim", "arithmetic", "cells", "fields", "meta"}, "scene");
    if (!j.contains("dim") || !j.contains("cells")) throw Error("scene needs 'dim' and 'cells'");
    int dim = j.at("dim").get<int>();
    if (dim != 1 && dim != 2) throw Error("dim must be 1 or 2");

    Scene<S> scene;
    std::vector<std::pair<S, S>> intervals;
    std::vector<Polygon<S>> polys;
    for (const json& cj : j.at("cells")) {
        detail::reject_unknown_keys(cj, {"id", "interval", "vertices"}, "cell");
        if (!cj.contains("id")) throw Error("cell needs an 'id'");
        scene.cell_names.push_back(cj.at("id").get<std::string>());
        if (dim == 1) {
            if (!cj.contains("interval")) throw Error("dim-1 cell needs 'interval'");
            const json& iv = cj.at("interval");
            if (!iv.is_array() || iv.size() != 2) throw Error("'interval' must be [a, b]");
            intervals.push_back({detail::json_number<S>(iv[0]), detail::json_number<S>(iv[1])});
        } else {
            if (!cj.contains("vertices")) throw Error("dim-2 cell needs 'vertices'");
            Polygon<S> poly;
            for (const json& vj : cj.at("vertices")) {
                if (!vj.is_array() || vj.size() != 2) throw Error("vertex must be [x, y]");
                poly.push_back(pt<S>(detail::json_number<S>(vj[0]), detail::json_number<S>(vj[1])));
            }
            polys.push_back(std::move(poly));
        }
    }
    for (std::size_t i = 0; i < scene.cell_names.size(); ++i)
        for (std::size_t k = i + 1; k < scene.cell_names.size(); ++k)
            if (scene.cell_names[i] == scene.cell_names[k])
                throw Error("duplicate cell id '" + scene.cell_names[i] + "'");

    scene.complex = dim == 1 ? build_complex_1d<S>(intervals) : build_complex_2d<S>(polys);

    if (j.contains("fields")) {
        for (auto it = j.at("fields").begin(); it != j.at("fields").end(); ++it) {
            PwAffineField<S> field(scene.complex);
            for (auto ct = it.value().begin(); ct != it.value().end(); ++ct) {
                int cell = scene.cell_index(ct.key());
                const json& pj = ct.value();
                detail::reject_unknown_keys(pj, {"grad", "off"}, "field piece");
                Pt<S> grad = pt<S>(S(0), S(0));
                if (pj.contains("grad")) {
                    const json& gj = pj.at("grad");
                    if (!gj.is_array() || static_cast<int>(gj.size()) != dim)
                        throw Error("'grad' must have one entry per base dimension");
                    grad[0] = detail::json_number<S>(gj[0]);
                    if (dim == 2) grad[1] = detail::json_number<S>(gj[1]);
                }
                S off = pj.contains("off") ? detail::json_number<S>(pj.at("off")) : S(0);
                field.set(cell, grad, off);
            }
            scene.fields.emplace(it.key(), std::move(field));
        }
    }
    if (j.contains("meta")) scene.meta = j.at("meta");
    return scene;
}

template <class S>
json scene_to_json(const Scene<S>& scene) {
    json j;
    j["dim"] = scene.complex->dim;
    j["arithmetic"] = mode_traits<S>::name();
    j["cells"] = json::array();
    for (int i = 0; i < scene.complex->num_cells(); ++i) {
        json cj;
        cj["id"] = scene.cell_names[i];
        const auto& poly = scene.complex->cells[i].poly;
        if (scene.complex->dim == 1) {
            cj["interval"] = {format_number(poly[0][0]), format_number(poly[1][0])};
        } else {
            json vs = json::array();
            for (const auto& z : poly) vs.push_back({format_number(z[0]), format_number(z[1])});
            cj["vertices"] = vs;
        }
        j["cells"].push_back(std::move(cj));
    }
    j["fields"] = json::object();
    for (const auto& [name, field] : scene.fields) {
        json fj = json::object();
        for (int i = 0; i < scene.complex->num_cells(); ++i) {
            if (!field.on(i)) continue;
            json pj;
            if (scene.complex->dim == 1)
                pj["grad"] = {format_number(field.piece[i]->grad[0])};
            else
                pj["grad"] = {format_number(field.piece[i]->grad[0]),
                              format_number(field.piece[i]->grad[1])};
            pj["off"] = format_number(field.piece[i]->off);
            fj[scene.cell_names[i]] = std::move(pj);
        }
        j["fields"][name] = std::move(fj);
    }
    if (!scene.meta.is_null()) j["meta"] = scene.meta;
    return j;
}

// Serializes a vertically convex set over an existing scene's complex as the
// scene itself with its slice-length and barycenter fields.
template <class S>
Scene<S> set_as_scene(const Scene<S>& base, const PolyVerticalSet<S>& E) {
    Scene<S> out;
    out.complex = base.complex;
    out.cell_names = base.cell_names;
    auto [v, b] = slice_and_barycenter(E);
    out.fields.emplace("v", std::move(v));
    out.fields.emplace("b", std::move(b));
    return out;
}

AnyScene load_scene_json(const json& j);
AnyScene load_scene_file(const std::string& path);  // "-" reads stdin

}  // namespace steiner
