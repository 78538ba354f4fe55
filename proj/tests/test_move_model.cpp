#include <catch2/catch_amalgamated.hpp>

#include "hexpivot/free_space.hpp"
#include "hexpivot/move_model.hpp"

using namespace hexpivot;
using D = Direction;

static Configuration cfg(std::vector<Cell> cells) {
    return Configuration::from_cells(cells);
}

// 60-degree clockwise rotation of a relative cell about the origin.
static Cell rot_cw_cell(Cell c) { return {-c.r, c.q + c.r}; }

TEST_CASE("frozen free-space table matches a fresh sweep run") {
    CHECK(frozen_free_space() == derive_free_space());
}

TEST_CASE("free-space tables contain the destination and never the support") {
    const FreeSpaceTable& t = frozen_free_space();
    for (int k = 0; k < 2; ++k)
        for (int r = 0; r < 2; ++r)
            for (int d = 0; d < 6; ++d) {
                const MoveGeometry& g = t.geom[k][r][d];
                Cell s = neighbor({0, 0}, Direction(d));
                auto& me = g.must_empty;
                CHECK(std::find(me.begin(), me.end(), g.dest) != me.end());
                CHECK(std::find(me.begin(), me.end(), s) == me.end());
                CHECK(std::find(me.begin(), me.end(), Cell{0, 0}) == me.end());
                if (k == (int)MoveKind::Monkey) {
                    CHECK(std::find(me.begin(), me.end(), g.second_support) ==
                          me.end());
                    CHECK(g.second_support != s);
                    CHECK(g.pivots.size() == 2);
                } else {
                    CHECK(g.pivots.size() == 1);
                }
            }
}

TEST_CASE("free-space tables are closed under six-fold rotation") {
    const FreeSpaceTable& t = frozen_free_space();
    for (int k = 0; k < 2; ++k)
        for (int r = 0; r < 2; ++r)
            for (int d = 0; d < 6; ++d) {
                const MoveGeometry& a = t.geom[k][r][d];
                const MoveGeometry& b = t.geom[k][r][(d + 1) % 6];
                CHECK(rot_cw_cell(a.dest) == b.dest);
                if (k == (int)MoveKind::Monkey)
                    CHECK(rot_cw_cell(a.second_support) == b.second_support);
                std::vector<Cell> rot;
                for (Cell c : a.must_empty) rot.push_back(rot_cw_cell(c));
                std::sort(rot.begin(), rot.end());
                CHECK(rot == b.must_empty);
            }
}

TEST_CASE("monkey requirements relax the restricted ones") {
    // The monkey move with the same support and rotation needs a subset of
    // the restricted clearance plus one occupied cell (the second support),
    // which is exactly the cell whose occupancy blocks the restricted move.
    const FreeSpaceTable& t = frozen_free_space();
    for (int r = 0; r < 2; ++r)
        for (int d = 0; d < 6; ++d) {
            const MoveGeometry& res = t.geom[(int)MoveKind::Restricted][r][d];
            const MoveGeometry& mon = t.geom[(int)MoveKind::Monkey][r][d];
            for (Cell c : mon.must_empty)
                CHECK(std::find(res.must_empty.begin(), res.must_empty.end(), c) !=
                      res.must_empty.end());
            CHECK(std::find(res.must_empty.begin(), res.must_empty.end(),
                            mon.second_support) != res.must_empty.end());
        }
}

TEST_CASE("a pair has exactly four moves, all restricted") {
    auto pair = cfg({{0, 0}, {0, 1}});
    auto ms = legal_moves(pair, ModelId::HexMonkey);
    CHECK(ms.size() == 4);
    int per_mover[2] = {0, 0};
    for (const Move& m : ms) {
        CHECK(m.kind == MoveKind::Restricted);
        per_mover[m.mover == Cell{0, 0} ? 0 : 1]++;
        CHECK(is_legal(pair, m, ModelId::HexMonkey));
    }
    CHECK(per_mover[0] == 2);
    CHECK(per_mover[1] == 2);
    CHECK(legal_moves(pair, ModelId::HexRestricted).size() == 4);
}

TEST_CASE("cut vertices and singletons cannot move") {
    auto path3 = cfg({{0, 0}, {0, 1}, {0, 2}});
    for (const Move& m : legal_moves(path3, ModelId::HexMonkey))
        CHECK(m.mover != Cell{0, 1});
    CHECK(legal_moves(cfg({{0, 0}}), ModelId::HexMonkey).empty());
}

TEST_CASE("apply moves the mover and preserves size and connectivity") {
    auto pair = cfg({{0, 0}, {0, 1}});
    for (const Move& m : legal_moves(pair, ModelId::HexMonkey)) {
        auto next = apply(pair, m);
        CHECK(next.size() == 2);
        CHECK(cells_connected(next.cells()));
        CHECK_FALSE(next.contains(m.mover));
        CHECK(next.contains(m.dest));
        // reversibility
        Move inv = inverse(m);
        CHECK(is_legal(next, inv, ModelId::HexMonkey));
        CHECK(apply(next, inv) == pair);
    }
}

TEST_CASE("apply rejects illegal moves with a reason") {
    auto pair = cfg({{0, 0}, {0, 1}});
    auto ms = legal_moves(pair, ModelId::HexMonkey);
    Move bad = ms[0];
    bad.dest = {9, 9};
    CHECK_THROWS_AS(apply(pair, bad), IllegalMove);
}

TEST_CASE("verify_plan folds apply with per-step checks") {
    auto pair = cfg({{0, 0}, {0, 1}});
    CHECK(verify_plan(pair, {}, ModelId::HexMonkey) == pair);

    auto ms = legal_moves(pair, ModelId::HexMonkey);
    std::vector<Move> plan{ms[0], inverse(ms[0])};
    CHECK(verify_plan(pair, plan, ModelId::HexMonkey) == pair);

    // corrupting a step surfaces the failing index
    std::vector<Move> broken{ms[0], ms[0]};
    try {
        verify_plan(pair, broken, ModelId::HexMonkey);
        FAIL("expected StepIllegal");
    } catch (const StepIllegal& e) {
        CHECK(e.index == 1);
    }
}

TEST_CASE("a module orbits its partner in six clockwise moves") {
    auto pair = cfg({{0, 0}, {0, 1}});
    auto plan = cw_cycle(pair, {0, 0});
    CHECK(plan.size() == 6);
    for (const Move& m : plan) {
        CHECK(m.rotation == Rotation::CW);
        CHECK(m.kind == MoveKind::Restricted);
    }
    CHECK(verify_plan(pair, plan, ModelId::HexMonkey) == pair);
    // the orbit visits all six cells around the partner
    Configuration cur = pair;
    std::set<Cell> visited;
    for (const Move& m : plan) {
        cur = apply(cur, m);
        visited.insert(m.dest);
    }
    CHECK(visited.size() == 6);
}

TEST_CASE("cycling around a triangle returns to the start") {
    auto tri = cfg({{0, 0}, {0, 1}, {1, 0}});
    for (Cell m : tri.sorted_cells()) {
        auto plan = cw_cycle(tri, m);
        CHECK(!plan.empty());
        CHECK(verify_plan(tri, plan, ModelId::HexMonkey) == tri);
    }
}

TEST_CASE("monkey moves fire exactly when the restricted arc is blocked") {
    // Mover at the origin hanging on a N support; the far cell that the
    // restricted arc sweeps is occupied, so only the monkey move is legal.
    Cell far{-2, 1};
    // connect far to the support with a chain outside the swept area
    auto c = cfg({{0, 0}, {0, -1}, {-1, -1}, far + Cell{0, -1}, far});
    auto ms = legal_moves(c, ModelId::HexMonkey);
    bool monkey_found = false;
    for (const Move& m : ms)
        if (m.mover == Cell{0, 0} && m.kind == MoveKind::Monkey &&
            m.rotation == Rotation::CW && m.support_dir == D::N) {
            monkey_found = true;
            CHECK(m.dest == Cell{-1, 1});
            CHECK(m.second_support() == far);
            auto piv = m.pivots();
            CHECK(piv.size() == 2);
        }
    CHECK(monkey_found);
    for (const Move& m : legal_moves(c, ModelId::HexRestricted))
        CHECK_FALSE((m.mover == Cell{0, 0} && m.rotation == Rotation::CW &&
                     m.support_dir == D::N));
}

TEST_CASE("restricted moves stay legal under the monkey model") {
    auto shapes = {
        cfg({{0, 0}, {0, 1}}),
        cfg({{0, 0}, {0, 1}, {1, 0}}),
        cfg({{0, 0}, {0, 1}, {0, 2}, {1, 0}}),
    };
    for (const auto& c : shapes) {
        auto rs = legal_moves(c, ModelId::HexRestricted);
        auto ms = legal_moves(c, ModelId::HexMonkey);
        for (const Move& m : rs)
            CHECK(std::find(ms.begin(), ms.end(), m) != ms.end());
    }
}

TEST_CASE("legality commutes with translation") {
    auto c = cfg({{0, 0}, {0, 1}, {1, 0}});
    auto t = c.translated({4, -2});
    auto ms = legal_moves(c, ModelId::HexMonkey);
    auto mt = legal_moves(t, ModelId::HexMonkey);
    REQUIRE(ms.size() == mt.size());
    for (size_t i = 0; i < ms.size(); ++i) {
        CHECK(ms[i].mover + Cell{4, -2} == mt[i].mover);
        CHECK(ms[i].dest + Cell{4, -2} == mt[i].dest);
    }
}
