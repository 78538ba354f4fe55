#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hexpivot/move_model.hpp"
#include "hexpivot/planner.hpp"

namespace fs = std::filesystem;
using namespace hexpivot;

namespace {

std::string cli() {
    if (const char* p = std::getenv("HEXPIVOT_CLI_PATH")) return p;
#ifdef HEXPIVOT_CLI_PATH
    return HEXPIVOT_CLI_PATH;
#else
    FAIL("HEXPIVOT_CLI_PATH not set");
    return {};
#endif
}

fs::path tmp_dir() {
    fs::path d = fs::temp_directory_path() / "hexpivot_cli_tests";
    fs::create_directories(d);
    return d;
}

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args) {
    fs::path out_file = tmp_dir() / "stdout.txt";
    std::string cmd = cli() + " " + args + " >" + out_file.string() + " 2>&1";
    int status = std::system(cmd.c_str());
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    return {WEXITSTATUS(status), ss.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path write_cfg(const std::string& name, const std::vector<Cell>& cells) {
    fs::path p = tmp_dir() / name;
    std::ofstream out(p);
    for (Cell c : cells) out << c.q << ' ' << c.r << '\n';
    return p;
}

std::string plan_line(const Move& m, const std::string& phase) {
    std::ostringstream os;
    os << "{\"mover\":[" << m.mover.q << ',' << m.mover.r << "],\"rot\":\""
       << (m.rotation == Rotation::CW ? "cw" : "ccw") << "\",\"kind\":\""
       << (m.kind == MoveKind::Restricted ? "restricted" : "monkey")
       << "\",\"dest\":[" << m.dest.q << ',' << m.dest.r << "],\"phase\":\""
       << phase << "\"}";
    return os.str();
}

}  // namespace

TEST_CASE("random is byte-identical per (n, seed)") {
    fs::path a = tmp_dir() / "r1.cfg", b = tmp_dir() / "r2.cfg";
    CHECK(run("random --n 12 --seed 5 --out " + a.string()).code == 0);
    CHECK(run("random --n 12 --seed 5 --out " + b.string()).code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(run("random --n 12 --seed 6 --out " + b.string()).code == 0);
    CHECK(slurp(a) != slurp(b));
    CHECK(run("random --n 1 --seed 0 --out " + b.string()).code == 0);
    CHECK(run("random --n 0 --seed 0 --out " + b.string()).code == 2);
}

TEST_CASE("plan between a shape and itself at size one is empty") {
    fs::path a = write_cfg("single.cfg", {{0, 0}});
    fs::path out = tmp_dir() / "empty.jsonl";
    CHECK(run("plan --in " + a.string() + " --target " + a.string() + " --out " +
              out.string()).code == 0);
    CHECK(slurp(out).empty());
}

TEST_CASE("plan triangle to path verifies, with stable bytes") {
    fs::path a = write_cfg("tri.cfg", {{0, 0}, {1, 0}, {0, 1}});
    fs::path b = write_cfg("p3.cfg", {{0, 0}, {0, 1}, {0, 2}});
    fs::path p1 = tmp_dir() / "tp1.jsonl", p2 = tmp_dir() / "tp2.jsonl";
    CHECK(run("plan --in " + a.string() + " --target " + b.string() + " --out " +
              p1.string() + " --stats").code == 0);
    CHECK(run("plan --in " + a.string() + " --target " + b.string() + " --out " +
              p2.string()).code == 0);
    CHECK(slurp(p1) == slurp(p2));
    CHECK(run("verify --in " + a.string() + " --plan " + p1.string() +
              " --expect " + b.string()).code == 0);
}

TEST_CASE("planning the restricted model is unsupported") {
    fs::path a = write_cfg("ra.cfg", {{0, 0}, {0, 1}});
    fs::path out = tmp_dir() / "r.jsonl";
    CHECK(run("plan --in " + a.string() + " --target " + a.string() +
              " --model restricted --out " + out.string()).code == 5);
}

TEST_CASE("plan size mismatch and parse errors use distinct exit codes") {
    fs::path a = write_cfg("sa.cfg", {{0, 0}});
    fs::path b = write_cfg("sb.cfg", {{0, 0}, {0, 1}});
    fs::path out = tmp_dir() / "s.jsonl";
    CHECK(run("plan --in " + a.string() + " --target " + b.string() + " --out " +
              out.string()).code == 3);

    fs::path bad = tmp_dir() / "bad.cfg";
    std::ofstream(bad) << "0 zero\n";
    CHECK(run("plan --in " + bad.string() + " --target " + a.string() +
              " --out " + out.string()).code == 2);
    // disconnected configurations are rejected at parse level
    fs::path disc = write_cfg("disc.cfg", {{0, 0}, {5, 5}});
    CHECK(run("plan --in " + disc.string() + " --target " + a.string() +
              " --out " + out.string()).code == 2);
    CHECK(run("plan --in missing.cfg --target " + a.string() + " --out " +
              out.string()).code == 2);
}

TEST_CASE("config files accept comments and blank lines") {
    fs::path p = tmp_dir() / "comments.cfg";
    std::ofstream(p) << "# header\n\n0 0  # origin\n0 1\n";
    fs::path out = tmp_dir() / "c.jsonl";
    CHECK(run("plan --in " + p.string() + " --target " + p.string() + " --out " +
              out.string()).code == 0);
}

TEST_CASE("verify flags the first illegal step with exit 6") {
    auto tri = Configuration::from_cells({{0, 0}, {1, 0}, {0, 1}});
    Move m = legal_moves(tri, ModelId::HexMonkey).front();
    Move corrupted = m;
    corrupted.dest = {9, 9};  // matches no pivot geometry -> parse error
    fs::path a = write_cfg("va.cfg", {{0, 0}, {1, 0}, {0, 1}});
    fs::path good = tmp_dir() / "good.jsonl";
    std::ofstream(good) << plan_line(m, "phase1") << '\n';
    CHECK(run("verify --in " + a.string() + " --plan " + good.string()).code == 0);

    fs::path bad = tmp_dir() / "badplan.jsonl";
    std::ofstream(bad) << plan_line(corrupted, "phase1") << '\n';
    CHECK(run("verify --in " + a.string() + " --plan " + bad.string()).code == 2);

    // geometrically well-formed but illegal in context: repeat the same move
    fs::path illegal = tmp_dir() / "illegal.jsonl";
    std::ofstream(illegal) << plan_line(m, "phase1") << '\n'
                           << plan_line(m, "phase1") << '\n';
    auto res = run("verify --in " + a.string() + " --plan " + illegal.string());
    CHECK(res.code == 6);
    CHECK(res.out.find("step 1") != std::string::npos);
}

TEST_CASE("a plan followed by its reversed inverse returns to the start") {
    auto tri = Configuration::from_cells({{0, 0}, {1, 0}, {0, 1}});
    MovePlan plan = plan_to_canonical(tri);
    fs::path a = write_cfg("rt.cfg", tri.sorted_cells());
    fs::path p = tmp_dir() / "rt.jsonl";
    {
        std::ofstream out(p);
        for (const PlanStep& s : plan.steps) out << plan_line(s.move, s.phase) << '\n';
        for (auto it = plan.steps.rbegin(); it != plan.steps.rend(); ++it)
            out << plan_line(inverse(it->move), it->phase) << '\n';
    }
    CHECK(run("verify --in " + a.string() + " --plan " + p.string() +
              " --expect " + a.string()).code == 0);
}

TEST_CASE("explore prints stable counts and honors the cap") {
    CHECK(run("explore --n 2").out == "nodes=3\tedges=3\n");
    CHECK(run("explore --n 1").out == "nodes=1\tedges=0\n");
    auto res = run("explore --n 4 --model monkey --components");
    CHECK(res.code == 0);
    CHECK(res.out.find("nodes=44") != std::string::npos);
    CHECK(res.out.find("components=1") != std::string::npos);
    CHECK(run("explore --n 99").code == 7);
}

TEST_CASE("render writes one SVG frame per move plus the initial frame") {
    auto pair = Configuration::from_cells({{0, 0}, {0, 1}});
    Move m = legal_moves(pair, ModelId::HexMonkey).front();
    fs::path a = write_cfg("rend.cfg", pair.sorted_cells());
    fs::path p = tmp_dir() / "rend.jsonl";
    std::ofstream(p) << plan_line(m, "phase1") << '\n';
    fs::path dir = tmp_dir() / "frames";
    fs::remove_all(dir);
    CHECK(run("render --in " + a.string() + " --plan " + p.string() + " --out " +
              dir.string()).code == 0);
    CHECK(fs::exists(dir / "frame_0000.svg"));
    CHECK(fs::exists(dir / "frame_0001.svg"));
    CHECK(!fs::exists(dir / "frame_0002.svg"));
    // the moved module is highlighted in the second frame only
    CHECK(slurp(dir / "frame_0000.svg").find("#e5a33b") == std::string::npos);
    CHECK(slurp(dir / "frame_0001.svg").find("#e5a33b") != std::string::npos);
}

TEST_CASE("render places hexagons at the documented embedding centers") {
    fs::path a = write_cfg("tri2.cfg", {{0, 0}, {1, 0}, {0, 1}});
    fs::path dir = tmp_dir() / "frames_tri";
    fs::remove_all(dir);
    CHECK(run("render --in " + a.string() + " --out " + dir.string()).code == 0);
    std::string svg = slurp(dir / "frame_0000.svg");
    CHECK(std::count(svg.begin(), svg.end(), '\n') == 5);  // header + 3 + close
    // cell (1,0): center (1.5, -sqrt(3)/2); svg y is flipped so +0.866;
    // first polygon point is center + (1, 0)
    CHECK(svg.find("2.500,0.866") != std::string::npos);
    // cell (0,1): center (0, -sqrt(3)) -> svg y +1.732
    CHECK(svg.find("1.000,1.732") != std::string::npos);
}
