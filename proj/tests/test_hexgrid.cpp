#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <map>

#include "hexpivot/hexgrid.hpp"

using namespace hexpivot;
using D = Direction;

TEST_CASE("neighbor follows the fixed axial convention") {
    CHECK(neighbor({0, 0}, D::N) == Cell{0, -1});
    CHECK(neighbor({0, 0}, D::NE) == Cell{1, -1});
    CHECK(neighbor({0, 0}, D::SE) == Cell{1, 0});
    CHECK(neighbor({0, 0}, D::S) == Cell{0, 1});
    CHECK(neighbor({0, 0}, D::SW) == Cell{-1, 1});
    CHECK(neighbor({0, 0}, D::NW) == Cell{-1, 0});
}

TEST_CASE("opposite directions invert neighbor") {
    for (D d : all_directions) {
        CHECK(opposite(opposite(d)) == d);
        CHECK(neighbor(neighbor({2, 3}, d), opposite(d)) == Cell{2, 3});
    }
    CHECK(neighbor(neighbor({2, 3}, D::NE), D::SW) == Cell{2, 3});
}

TEST_CASE("six clockwise rotations are the identity") {
    for (D d : all_directions) {
        D x = d;
        for (int i = 0; i < 6; ++i) x = rot_cw(x);
        CHECK(x == d);
        CHECK(rot_ccw(rot_cw(d)) == d);
    }
}

TEST_CASE("the six neighbors are distinct and unit displacements") {
    Cell c{5, -7};
    std::map<Cell, int> seen;
    for (D d : all_directions) {
        Cell n = neighbor(c, d);
        seen[n]++;
        double dx = center_x(n) - center_x(c), dy = center_y(n) - center_y(c);
        CHECK(std::hypot(dx, dy) == Catch::Approx(std::sqrt(3.0)));
    }
    CHECK(seen.size() == 6);
}

TEST_CASE("direction table matches the planar embedding") {
    // The geometric angle of each neighbor displacement must march clockwise
    // from N at 90 degrees in steps of -60.
    double expected = 90.0;
    for (D d : all_directions) {
        Cell n = neighbor({0, 0}, d);
        double ang = std::atan2(center_y(n), center_x(n)) * 180.0 / M_PI;
        double diff = std::remainder(ang - expected, 360.0);
        CHECK(std::abs(diff) < 1e-9);
        expected -= 60.0;
    }
}

TEST_CASE("offset folds arrows left to right") {
    CHECK(offset({0, 0}, {}) == Cell{0, 0});
    CHECK(offset({0, 0}, {D::N, D::N}) == Cell{0, -2});
    CHECK(offset({0, 0}, {D::N, D::NE}) == neighbor(neighbor({0, 0}, D::N), D::NE));
    for (D d : all_directions)
        CHECK(offset({3, 1}, {d, opposite(d)}) == Cell{3, 1});
}

TEST_CASE("vertices canonicalize independently of the deriving cell") {
    // Collect vertex -> incident cell count over a patch; interior vertices
    // must be hit exactly 3 times.
    std::map<Vertex, int> count;
    for (int q = -3; q <= 3; ++q)
        for (int r = -3; r <= 3; ++r)
            for (const Vertex& v : vertices_of({q, r})) count[v]++;
    int interior = 0;
    for (auto& [v, n] : count) {
        CHECK(n <= 3);
        if (n == 3) ++interior;
    }
    CHECK(interior > 0);
}

TEST_CASE("cells at a vertex are pairwise adjacent") {
    for (const Vertex& v : vertices_of({0, 0})) {
        auto cs = cells_at(v);
        CHECK(are_adjacent(cs[0], cs[1]));
        CHECK(are_adjacent(cs[1], cs[2]));
        CHECK(are_adjacent(cs[0], cs[2]));
    }
}

TEST_CASE("adjacent cells share exactly two vertices") {
    Cell a{0, 0};
    for (D d : all_directions) {
        auto sv = shared_vertices(a, neighbor(a, d));
        CHECK(sv[0] != sv[1]);
        for (const Vertex& v : sv) {
            auto cs = cells_at(v);
            CHECK(std::count(cs.begin(), cs.end(), a) == 1);
            CHECK(std::count(cs.begin(), cs.end(), neighbor(a, d)) == 1);
        }
    }
}

TEST_CASE("third cells at the vertices shared with the north neighbor") {
    Cell a{0, 0};
    Cell s = neighbor(a, D::N);
    auto sv = shared_vertices(a, s);
    std::vector<Cell> thirds;
    for (const Vertex& v : sv)
        for (Cell c : cells_at(v))
            if (c != a && c != s) thirds.push_back(c);
    std::sort(thirds.begin(), thirds.end());
    std::vector<Cell> want{neighbor(a, D::NW), neighbor(a, D::NE)};
    std::sort(want.begin(), want.end());
    CHECK(thirds == want);
}

TEST_CASE("shared vertices agree with the floating-point corner construction") {
    // Every vertex of a cell must coincide geometrically with one corner
    // point of each of its three incident cells.
    auto corner_pts = [](Cell c) {
        std::vector<std::pair<double, double>> pts;
        for (int k = 0; k < 6; ++k) {
            double ang = k * M_PI / 3.0;
            pts.push_back({center_x(c) + std::cos(ang), center_y(c) + std::sin(ang)});
        }
        return pts;
    };
    for (const Vertex& v : vertices_of({0, 0})) {
        // find a common point of all three cells' corner sets
        auto base = corner_pts(v.cells[0]);
        int common = 0;
        for (auto [x, y] : base) {
            bool in_all = true;
            for (int i = 1; i < 3; ++i) {
                bool found = false;
                for (auto [x2, y2] : corner_pts(v.cells[i]))
                    if (std::abs(x - x2) < 1e-9 && std::abs(y - y2) < 1e-9)
                        found = true;
                in_all = in_all && found;
            }
            if (in_all) ++common;
        }
        CHECK(common == 1);
    }
}

TEST_CASE("rows are constant under ascend and descend") {
    Cell c{4, -2};
    CHECK(row_key(c) == row_key(ascend(c)));
    CHECK(row_key(c) == row_key(descend(c)));
    CHECK(row_key(c) != row_key(neighbor(c, D::N)));
    CHECK(descend(ascend(c)) == c);
    CHECK(ascend(c) == neighbor(c, D::NW));
    CHECK(descend(c) == neighbor(c, D::SE));
}

TEST_CASE("height and top-right order match the embedding") {
    for (int q = -2; q <= 2; ++q)
        for (int r = -2; r <= 2; ++r) {
            Cell a{q, r}, b{0, 0};
            if (a == b) continue;
            bool geom_higher = center_y(a) > center_y(b) + 1e-9;
            CHECK(higher(a, b) == geom_higher);
            bool geom_tr = geom_higher ||
                           (std::abs(center_y(a) - center_y(b)) < 1e-9 &&
                            center_x(a) > center_x(b));
            CHECK(top_right_before(a, b) == geom_tr);
        }
}
