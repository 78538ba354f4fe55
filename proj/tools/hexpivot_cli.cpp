// hexpivot command line driver.
//
// Subcommands:
//   plan     compute a verified reconfiguration plan between two shapes
//   verify   replay a plan against a start configuration
//   explore  enumerate shapes / reconfiguration-graph statistics
//   random   generate a seeded random connected configuration
//   render   draw a configuration (and optionally each plan step) as SVG
//
// Exit codes: 0 ok, 2 parse/argument error, 3 size mismatch, 4 internal
// planner error, 5 unsupported model for planning, 6 illegal plan step,
// 7 enumeration cap exceeded.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hexpivot/explorer.hpp"
#include "hexpivot/planner.hpp"

namespace fs = std::filesystem;
using namespace hexpivot;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitSize = 3;
constexpr int kExitInternal = 4;
constexpr int kExitUnsupported = 5;
constexpr int kExitStepIllegal = 6;
constexpr int kExitCap = 7;

struct ExitWith {
    int code;
    std::string message;
};

Configuration read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ExitWith{kExitParse, "cannot open " + path};
    std::vector<Cell> cells;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = line.substr(0, line.find('#'));
        std::istringstream ls(body);
        long q, r;
        if (!(ls >> q)) {
            std::string rest;
            if (ls.clear(), ls.str(body), ls >> rest)  // non-numeric garbage
                throw ExitWith{kExitParse,
                               path + ":" + std::to_string(lineno) + ": expected 'q r'"};
            continue;  // blank or comment-only line
        }
        std::string trailing;
        if (!(ls >> r) || (ls >> trailing))
            throw ExitWith{kExitParse,
                           path + ":" + std::to_string(lineno) + ": expected 'q r'"};
        cells.push_back({(int)q, (int)r});
    }
    try {
        return Configuration::from_cells(cells);
    } catch (const ConfigError& e) {
        throw ExitWith{kExitParse, path + ": " + e.what()};
    }
}

void write_config(const Configuration& c, std::ostream& out) {
    for (Cell cell : c.sorted_cells())
        out << cell.q << ' ' << cell.r << '\n';
}

// Reconstructs the support direction from the destination offset, which is
// unique per (kind, rotation) in the free-space tables.
std::optional<Direction> support_for(MoveKind kind, Rotation rot, Cell delta) {
    for (Direction d : all_directions)
        if (frozen_free_space().at(kind, rot, d).dest == delta) return d;
    return std::nullopt;
}

// Plan serialization with a fixed field order for byte-stable output.
void write_plan(const MovePlan& plan, std::ostream& out) {
    for (const PlanStep& s : plan.steps) {
        const Move& m = s.move;
        out << "{\"mover\":[" << m.mover.q << ',' << m.mover.r << "],\"rot\":\""
            << (m.rotation == Rotation::CW ? "cw" : "ccw") << "\",\"kind\":\""
            << (m.kind == MoveKind::Restricted ? "restricted" : "monkey")
            << "\",\"dest\":[" << m.dest.q << ',' << m.dest.r << "],\"phase\":\""
            << s.phase << "\"}\n";
    }
}

MovePlan read_plan(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ExitWith{kExitParse, "cannot open " + path};
    MovePlan plan;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json j = json::parse(line, nullptr, false);
        auto bad = [&](const std::string& why) -> ExitWith {
            return {kExitParse, path + ":" + std::to_string(lineno) + ": " + why};
        };
        if (j.is_discarded()) throw bad("invalid JSON");
        try {
            Move m;
            m.mover = {j.at("mover").at(0).get<int>(), j.at("mover").at(1).get<int>()};
            m.dest = {j.at("dest").at(0).get<int>(), j.at("dest").at(1).get<int>()};
            std::string rot = j.at("rot").get<std::string>();
            std::string kind = j.at("kind").get<std::string>();
            if (rot != "cw" && rot != "ccw") throw bad("rot must be cw|ccw");
            if (kind != "restricted" && kind != "monkey")
                throw bad("kind must be restricted|monkey");
            m.rotation = rot == "cw" ? Rotation::CW : Rotation::CCW;
            m.kind = kind == "restricted" ? MoveKind::Restricted : MoveKind::Monkey;
            auto sup = support_for(m.kind, m.rotation, m.dest - m.mover);
            if (!sup) throw bad("dest offset matches no pivot geometry");
            m.support_dir = *sup;
            std::string phase = j.value("phase", "");
            plan.push(m, phase, "file");
        } catch (const json::exception& e) {
            throw bad(e.what());
        }
    }
    return plan;
}

ModelId parse_model(const std::string& name) {
    if (name == "monkey") return ModelId::HexMonkey;
    if (name == "restricted") return ModelId::HexRestricted;
    throw ExitWith{kExitParse, "unknown model '" + name + "' (monkey|restricted)"};
}

// Deterministic seeded growth: starting from a single cell, repeatedly add a
// uniformly random empty boundary cell (mt19937_64, sorted candidate list).
Configuration grow_random(int n, uint64_t seed) {
    std::mt19937_64 rng(seed);
    CellSet cells{{0, 0}};
    while ((int)cells.size() < n) {
        std::vector<Cell> frontier;
        for (Cell c : cells)
            for (Direction d : all_directions) {
                Cell nb = neighbor(c, d);
                if (!cells.count(nb)) frontier.push_back(nb);
            }
        std::sort(frontier.begin(), frontier.end());
        frontier.erase(std::unique(frontier.begin(), frontier.end()),
                       frontier.end());
        cells.insert(frontier[rng() % frontier.size()]);
    }
    return Configuration::unchecked(cells).normalized();
}

// --- SVG rendering -------------------------------------------------------
// Embedding: center(q,r) = (1.5q, -sqrt(3)(r + q/2)); the y axis is flipped
// for SVG so that "up" on screen matches direction N.

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v + 0.0);  // normalize -0.000
    if (std::string(buf) == "-0.000") return "0.000";
    return buf;
}

void write_svg(const Configuration& c, std::optional<Cell> highlight,
               const std::string& path) {
    double minx = 1e9, miny = 1e9, maxx = -1e9, maxy = -1e9;
    for (Cell cell : c.sorted_cells()) {
        double x = center_x(cell), y = -center_y(cell);
        minx = std::min(minx, x - 1.2);
        maxx = std::max(maxx, x + 1.2);
        miny = std::min(miny, y - 1.2);
        maxy = std::max(maxy, y + 1.2);
    }
    std::ofstream out(path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(minx)
        << ' ' << fmt(miny) << ' ' << fmt(maxx - minx) << ' ' << fmt(maxy - miny)
        << "\">\n";
    for (Cell cell : c.sorted_cells()) {
        double cx = center_x(cell), cy = -center_y(cell);
        out << "<polygon points=\"";
        for (int k = 0; k < 6; ++k) {
            double ang = M_PI / 3.0 * k;
            if (k) out << ' ';
            out << fmt(cx + std::cos(ang)) << ',' << fmt(cy - std::sin(ang));
        }
        bool hi = highlight && *highlight == cell;
        out << "\" fill=\"" << (hi ? "#e5a33b" : "#9bb7d4")
            << "\" stroke=\"#223\" stroke-width=\"0.06\"/>\n";
    }
    out << "</svg>\n";
}

// --- subcommand bodies ---------------------------------------------------

int cmd_plan(const std::string& in, const std::string& target,
             const std::string& model, const std::string& out, bool stats) {
    ModelId mid = parse_model(model);
    if (mid != ModelId::HexMonkey)
        throw ExitWith{kExitUnsupported,
                       "planning is supported for the monkey model only"};
    Configuration a = read_config(in);
    Configuration b = read_config(target);
    MovePlan plan;
    try {
        plan = reconfigure(a, b);
    } catch (const SizeMismatch& e) {
        throw ExitWith{kExitSize, e.what()};
    } catch (const PlannerError& e) {
        fs::path dump = fs::temp_directory_path() / "hexpivot_planner_dump.cfg";
        std::ofstream d(dump);
        d << "# planner error: " << e.what() << '\n';
        write_config(a, d);
        d << "# target\n";
        write_config(b, d);
        throw ExitWith{kExitInternal,
                       std::string(e.what()) + " (state dump: " + dump.string() + ")"};
    }
    std::ofstream os(out);
    if (!os) throw ExitWith{kExitParse, "cannot write " + out};
    write_plan(plan, os);
    if (stats) {
        size_t n = a.size();
        double ratio = n ? (double)plan.size() / ((double)n * n * n) : 0.0;
        std::cout << "moves=" << plan.size() << "\tphase1="
                  << plan.count_phase("phase1") << "\tphase2="
                  << plan.count_phase("phase2") << "\tphase3="
                  << plan.count_phase("phase3") << "\tn3_ratio=" << fmt(ratio)
                  << '\n';
    }
    return kExitOk;
}

int cmd_verify(const std::string& in, const std::string& plan_path,
               const std::string& model, const std::string& expect) {
    ModelId mid = parse_model(model);
    Configuration a = read_config(in);
    MovePlan plan = read_plan(plan_path);
    Configuration end = a;
    try {
        end = verify_plan(a, plan.moves(), mid);
    } catch (const StepIllegal& e) {
        throw ExitWith{kExitStepIllegal, e.what()};
    }
    if (!expect.empty()) {
        Configuration b = read_config(expect);
        if (!end.same_shape(b))
            throw ExitWith{kExitStepIllegal,
                           "final configuration does not match --expect"};
    }
    std::cout << "ok moves=" << plan.size() << '\n';
    return kExitOk;
}

int cmd_explore(int n, const std::string& model, bool want_components,
                bool want_rigid) {
    ModelId mid = parse_model(model);
    ReconfigGraph g;
    try {
        g = build_graph(n, mid);
    } catch (const CapExceeded& e) {
        throw ExitWith{kExitCap, e.what()};
    }
    std::cout << "nodes=" << g.nodes.size() << "\tedges=" << g.edges.size();
    if (want_components) std::cout << "\tcomponents=" << components(g).size();
    if (want_rigid) std::cout << "\trigid=" << rigidity_scan(n, mid).size();
    std::cout << '\n';
    return kExitOk;
}

int cmd_random(int n, uint64_t seed, const std::string& out) {
    if (n < 1) throw ExitWith{kExitParse, "--n must be at least 1"};
    std::ofstream os(out);
    if (!os) throw ExitWith{kExitParse, "cannot write " + out};
    os << "# hexpivot random n=" << n << " seed=" << seed << " v1\n";
    write_config(grow_random(n, seed), os);
    return kExitOk;
}

int cmd_render(const std::string& in, const std::string& plan_path,
               const std::string& out_dir) {
    Configuration c = read_config(in);
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw ExitWith{kExitParse, "cannot create " + out_dir};
    auto frame_path = [&](size_t i) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "frame_%04zu.svg", i);
        return (fs::path(out_dir) / buf).string();
    };
    write_svg(c, std::nullopt, frame_path(0));
    if (!plan_path.empty()) {
        MovePlan plan = read_plan(plan_path);
        size_t i = 0;
        try {
            for (const PlanStep& s : plan.steps) {
                c = apply(c, s.move);
                write_svg(c, s.move.dest, frame_path(++i));
            }
        } catch (const IllegalMove& e) {
            throw ExitWith{kExitStepIllegal,
                           "step " + std::to_string(i) + ": " + e.what()};
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pivoting hexagonal modular robots: planning and analysis"};
    app.require_subcommand(1);

    std::string in, target, out, plan_path, expect, model = "monkey";
    int n = 0;
    uint64_t seed = 0;
    bool stats = false, want_components = false, want_rigid = false;
    int threads = 1;

    auto* plan_cmd = app.add_subcommand("plan", "plan a reconfiguration");
    plan_cmd->add_option("--in", in)->required();
    plan_cmd->add_option("--target", target)->required();
    plan_cmd->add_option("--model", model);
    plan_cmd->add_option("--out", out)->required();
    plan_cmd->add_flag("--stats", stats);

    auto* verify_cmd = app.add_subcommand("verify", "verify a plan");
    verify_cmd->add_option("--in", in)->required();
    verify_cmd->add_option("--plan", plan_path)->required();
    verify_cmd->add_option("--model", model);
    verify_cmd->add_option("--expect", expect);

    auto* explore_cmd = app.add_subcommand("explore", "reconfiguration graph");
    explore_cmd->add_option("--n", n)->required();
    explore_cmd->add_option("--model", model);
    explore_cmd->add_flag("--components", want_components);
    explore_cmd->add_flag("--rigid", want_rigid);
    // accepted for interface stability; output is identical regardless
    explore_cmd->add_option("--threads", threads);

    auto* random_cmd = app.add_subcommand("random", "seeded random shape");
    random_cmd->add_option("--n", n)->required();
    random_cmd->add_option("--seed", seed)->required();
    random_cmd->add_option("--out", out)->required();

    auto* render_cmd = app.add_subcommand("render", "render SVG frames");
    render_cmd->add_option("--in", in)->required();
    render_cmd->add_option("--plan", plan_path);
    render_cmd->add_option("--out", out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (*plan_cmd) return cmd_plan(in, target, model, out, stats);
        if (*verify_cmd) return cmd_verify(in, plan_path, model, expect);
        if (*explore_cmd) return cmd_explore(n, model, want_components, want_rigid);
        if (*random_cmd) return cmd_random(n, seed, out);
        if (*render_cmd) return cmd_render(in, plan_path, out);
    } catch (const ExitWith& e) {
        std::cerr << "error: " << e.message << '\n';
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitParse;
}
