#include "steiner/scene.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace steiner {

AnyScene load_scene_json(const json& j) {
    std::string mode = "double";
    if (j.is_object() && j.contains("arithmetic")) {
        mode = j.at("arithmetic").get<std::string>();
        if (mode != "rational" && mode != "double")
            throw Error("arithmetic must be 'rational' or 'double'");
    }
    AnyScene out;
    out.arithmetic = mode;
    if (mode == "rational")
        out.scene = scene_from_json<Rat>(j);
    else
        out.scene = scene_from_json<double>(j);
    return out;
}

AnyScene load_scene_file(const std::string& path) {
    json j;
    try {
        if (path == "-") {
            j = json::parse(std::cin);
        } else {
            std::ifstream in(path);
            if (!in) throw Error("cannot open '" + path + "'");
            j = json::parse(in);
        }
    } catch (const json::parse_error& e) {
        throw Error(std::string("scene parse error: ") + e.what());
    }
    return load_scene_json(j);
}

}  // namespace steiner
