// Command-line front end: scene parsing, subcommand dispatch, reports, and
// CSV/SVG emission. Exit codes: 0 success, 1 parse/validation error, 2 when
// an --expect assertion fails.

#include "steiner/acceptance.hpp"
#include "steiner/gallery.hpp"
#include "steiner/report.hpp"
#include "steiner/rigidity.hpp"
#include "steiner/scene.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

using namespace steiner;

namespace {

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << content;
}

// FNV-1a digest of the input document, so reports carry a stable input id.
std::string digest(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string read_input(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw Error("cannot open '" + path + "'");
        ss << in.rdbuf();
    }
    return ss.str();
}

struct LoadedScene {
    AnyScene any;
    std::string digest_hex;
};

LoadedScene load(const std::string& path) {
    std::string bytes = read_input(path);
    json j;
    try {
        j = json::parse(bytes);
    } catch (const json::parse_error& e) {
        throw Error(std::string("scene parse error: ") + e.what());
    }
    return {load_scene_json(j), digest(bytes)};
}

void report_header(const LoadedScene& in, const std::string& command) {
    std::cout << "command: " << command << "\n";
    std::cout << "input_digest: fnv1a:" << in.digest_hex << "\n";
    std::cout << "arithmetic: " << in.any.arithmetic << "\n";
}

template <class S>
void print_breakdown(const PerimeterBreakdown<S>& br) {
    std::cout << "ac_part: " << format_amount(br.ac) << "\n";
    std::cout << "jump_part: " << format_amount(br.jump) << "\n";
    std::cout << "boundary_zero_part: " << format_amount(br.boundary) << "\n";
    std::cout << "total: " << format_amount(br.total()) << "\n";
}

template <class S>
PerimeterBreakdown<S> run_mode(const Scene<S>& scene, const std::string& mode) {
    if (mode == "F") return perimeter_formula_F(scene.field("v"));
    if (mode == "W") {
        PwAffineField<S> b =
            scene.has_field("b") ? scene.field("b") : PwAffineField<S>(scene.complex);
        return perimeter_formula_W(scene.field("v"), b);
    }
    if (mode == "U") return perimeter_formula_U(scene.field("u1"), scene.field("u2"));
    throw Error("mode must be F, W or U");
}

template <class S>
PolyVerticalSet<S> scene_set(const Scene<S>& scene) {
    if (scene.has_field("u1") && scene.has_field("u2"))
        return make_between_graphs(scene.field("u1"), scene.field("u2"));
    PwAffineField<S> b = scene.has_field("b") ? scene.field("b") : PwAffineField<S>(scene.complex);
    return build_W(scene.field("v"), b);
}

int exit_code = 0;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for symmetrization perimeters and rigidity of equality cases"};
    app.require_subcommand(1);

    std::string scene_path = "-", mode = "F", cls = "auto", expect, svg_path, csv_path, out_path;
    std::string witness_out;
    int depth = 0;
    std::string gallery_name, gallery_arith = "rational";
    double t_offset = 0;
    bool t_given = false;

    auto* sym = app.add_subcommand("symmetrize", "build the symmetral of the scene's v field");
    sym->add_option("scene", scene_path);
    sym->add_option("--out", out_path, "write the symmetral as a scene");
    sym->add_option("--svg", svg_path);

    auto* per = app.add_subcommand("perimeter", "perimeter breakdown by formula and oracle");
    per->add_option("scene", scene_path);
    per->add_option("--mode", mode, "F|W|U");
    per->add_option("--csv", csv_path, "write the per-cell/facet ledger");
    per->add_option("--svg", svg_path);

    auto* rig = app.add_subcommand("rigidity", "decide rigidity of equality cases");
    rig->add_option("scene", scene_path);
    rig->add_option("--class", cls, "auto|planar|no-vertical|polyhedral");
    rig->add_option("--expect", expect, "rigid|non-rigid: exit 2 on mismatch");
    rig->add_option("--emit-witness", witness_out, "write the witness scene");
    rig->add_option("--svg", svg_path);

    auto* ver = app.add_subcommand("verify-equality", "check the scene's set for equality");
    ver->add_option("scene", scene_path);

    auto* wit = app.add_subcommand("witness", "construct a non-rigidity witness");
    wit->add_option("scene", scene_path);
    wit->add_option("--t", t_offset)->each([&](const std::string&) { t_given = true; });
    wit->add_option("--out", out_path);

    auto* con = app.add_subcommand("check-connect", "essential connectedness of the support");
    con->add_option("scene", scene_path);

    auto* gal = app.add_subcommand("gallery", "emit a named example scene");
    gal->add_option("name", gallery_name)->required();
    gal->add_option("--depth", depth);
    gal->add_option("--arithmetic", gallery_arith, "rational|double");
    gal->add_option("--svg", svg_path);

    app.add_subcommand("selftest", "run the acceptance suite");

    CLI11_PARSE(app, argc, argv);

    auto t0 = std::chrono::steady_clock::now();
    try {
        if (app.got_subcommand("selftest")) {
            bool ok = run_acceptance(std::cout);
            return ok ? 0 : 1;
        }
        if (app.got_subcommand("gallery")) {
            json j = gallery_scene_json(gallery_name, depth, gallery_arith);
            std::cout << j.dump(2) << "\n";
            if (!svg_path.empty()) {
                AnyScene any = load_scene_json(j);
                any.visit([&](const auto& scene) { write_file(svg_path, scene_svg(scene)); });
            }
            return 0;
        }

        LoadedScene in = load(scene_path);
        auto visit = [&](auto&& fn) { in.any.visit(fn); };

        if (app.got_subcommand("symmetrize")) {
            report_header(in, "symmetrize");
            visit([&](const auto& scene) {
                auto F = steiner_symmetral(scene.field("v"));
                std::cout << "volume: " << format_number(volume(F)) << "\n";
                print_breakdown(perimeter_formula_F(scene.field("v")));
                std::cout << "oracle: " << format_amount(oracle_perimeter(F)) << "\n";
                if (!out_path.empty())
                    write_file(out_path, scene_to_json(set_as_scene(scene, F)).dump(2) + "\n");
                if (!svg_path.empty()) write_file(svg_path, scene_svg(scene));
            });
        } else if (app.got_subcommand("perimeter")) {
            report_header(in, "perimeter --mode " + mode);
            visit([&](const auto& scene) {
                auto br = run_mode(scene, mode);
                print_breakdown(br);
                std::cout << "oracle: " << format_amount(oracle_perimeter(scene_set(scene)))
                          << "\n";
                auto slice = slice_inequality_check(scene_set(scene));
                std::cout << "slice_integral: " << format_amount(slice.lhs)
                          << (slice.holds ? " <= " : " > ") << format_amount(slice.rhs) << "\n";
                if (!csv_path.empty()) write_file(csv_path, breakdown_csv(br));
                if (!svg_path.empty()) write_file(svg_path, scene_svg(scene));
            });
        } else if (app.got_subcommand("rigidity")) {
            report_header(in, "rigidity --class " + cls);
            visit([&](const auto& scene) {
                using S = std::decay_t<decltype(scene.field("v").piece[0]->off)>;
                DeciderPath path = DeciderPath::automatic;
                if (cls == "planar") path = DeciderPath::planar;
                else if (cls == "no-vertical") path = DeciderPath::no_vertical;
                else if (cls == "polyhedral") path = DeciderPath::polyhedral;
                else if (cls != "auto") throw Error("unknown --class " + cls);
                RigidityVerdict<S> verdict = decide_rigidity(scene.field("v"), path);
                std::cout << "verdict: " << status_name(verdict.status) << "\n";
                std::cout << "path: " << verdict.theorem_path << "\n";
                if (!verdict.notes.empty()) std::cout << "notes: " << verdict.notes << "\n";
                if (verdict.witness) {
                    const auto& w = *verdict.witness;
                    std::cout << "epsilon: "
                              << (w.epsilon ? format_number(*w.epsilon) : std::string("inf"))
                              << "\n";
                    std::cout << "offset_t: " << format_number(w.t) << "\n";
                    std::cout << "translated_cells:";
                    for (int cell : w.cells_translated) std::cout << ' ' << scene.cell_names[cell];
                    std::cout << "\n";
                    if (!witness_out.empty())
                        write_file(witness_out,
                                   scene_to_json(set_as_scene(scene, w.set)).dump(2) + "\n");
                }
                if (!svg_path.empty()) write_file(svg_path, scene_svg(scene));
                if (!expect.empty()) {
                    bool want_rigid = expect == "rigid";
                    bool got_rigid = verdict.status == RigidityStatus::rigid;
                    if (want_rigid != got_rigid) exit_code = 2;
                }
            });
        } else if (app.got_subcommand("verify-equality")) {
            report_header(in, "verify-equality");
            visit([&](const auto& scene) {
                auto E = scene_set(scene);
                auto [v, b] = slice_and_barycenter(E);
                const auto& vfield = scene.has_field("v") ? scene.field("v") : v;
                auto rep = check_equality_case(E, vfield);
                std::cout << "result: " << rep.summary() << "\n";
                auto pe = oracle_perimeter(E);
                auto pf = oracle_perimeter(steiner_symmetral(vfield));
                std::cout << "perimeter: " << format_amount(pe) << " vs symmetral "
                          << format_amount(pf) << "\n";
                if (!rep.equality_case) exit_code = 2;
            });
        } else if (app.got_subcommand("witness")) {
            report_header(in, "witness");
            visit([&](const auto& scene) {
                using S = std::decay_t<decltype(scene.field("v").piece[0]->off)>;
                auto verdict = decide_rigidity(scene.field("v"));
                if (verdict.status != RigidityStatus::non_rigid || !verdict.witness)
                    throw Error("no witness: verdict is " +
                                std::string(status_name(verdict.status)));
                auto w = *verdict.witness;
                if (t_given) {
                    S t = scalar_from_double<S>(t_offset);
                    w.set = construct_witness(scene.field("v"), w.cells_translated, t);
                    w.t = t;
                }
                std::cout << "offset_t: " << format_number(w.t) << "\n";
                auto [tmin, val] = min_translate_symdiff(w.set, scene.field("v"));
                std::cout << "min_translate_symdiff: " << format_number(val) << "\n";
                if (!out_path.empty())
                    write_file(out_path, scene_to_json(set_as_scene(scene, w.set)).dump(2) + "\n");
            });
        } else if (app.got_subcommand("check-connect")) {
            report_header(in, "check-connect");
            visit([&](const auto& scene) {
                using S = std::decay_t<decltype(scene.field("v").piece[0]->off)>;
                const auto& v = scene.field("v");
                validate_slice_field(v);
                std::cout << "indecomposable: " << (is_indecomposable_F(v) ? "yes" : "no") << "\n";
                std::map<int, PortionSet<S>> K;
                for (int f = 0; f < v.complex->num_facets(); ++f) {
                    const auto& fac = v.complex->facets[f];
                    if (!fac.interior() || !v.on(fac.left) || !v.on(fac.right)) continue;
                    K[f] = classify_facet(v, f).min_zero;
                }
                auto r = essentially_disconnects<S>(*v.complex, v.support(), K);
                std::cout << "zero_set_disconnects: " << (r.disconnects ? "yes" : "no") << "\n";
                if (r.disconnects) {
                    std::cout << "witness_plus:";
                    for (int cell : r.part_plus) std::cout << ' ' << scene.cell_names[cell];
                    std::cout << "\n";
                }
            });
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cerr << "elapsed: "
              << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()
              << "s\n";
    return exit_code;
}
