#include "steiner/gallery.hpp"

namespace steiner {

std::vector<std::string> gallery_names() {
    return {"fig1a", "fig1b", "casetta", "salsicciotto", "example11", "cantor", "rationals",
            "prop14"};
}

namespace {

template <class S>
json entry_json(const std::string& name, int depth) {
    GalleryEntry<S> e = gallery_entry<S>(name, depth);
    json meta;
    meta["name"] = e.name;
    if (e.depth > 0) meta["depth"] = e.depth;
    json expected;
    if (e.expected.verdict) expected["status"] = status_name(*e.expected.verdict);
    if (e.expected.epsilon) expected["epsilon"] = *e.expected.epsilon;
    expected["equality_case"] = e.expected.equality_case;
    meta["expected"] = expected;
    e.scene.meta = meta;
    return scene_to_json(e.scene);
}

}  // namespace

json gallery_scene_json(const std::string& name, int depth, const std::string& arithmetic) {
    if (arithmetic == "rational") return entry_json<Rat>(name, depth);
    if (arithmetic == "double") return entry_json<double>(name, depth);
    throw Error("arithmetic must be 'rational' or 'double'");
}

}  // namespace steiner
