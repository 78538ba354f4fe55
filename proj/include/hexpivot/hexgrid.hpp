#pragma once

// Axial coordinates for a hexagonal grid oriented so that N and S are
// neighbor directions.  Embedding of cell centers into the plane:
//   x = 1.5 * q
//   y = -sqrt(3) * (r + q / 2)
// so q grows to the east and r grows to the south.  All integer direction
// tables below are fixed by this one convention and validated against the
// floating-point embedding in the test suite.

#include <algorithm>
#include <array>
#include <cmath>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>

namespace hexpivot {

struct Cell {
    int q = 0;
    int r = 0;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

inline Cell operator+(Cell a, Cell b) { return {a.q + b.q, a.r + b.r}; }
inline Cell operator-(Cell a, Cell b) { return {a.q - b.q, a.r - b.r}; }

struct CellHash {
    size_t operator()(const Cell& c) const {
        uint64_t x = (uint64_t)(uint32_t)c.q << 32 | (uint32_t)c.r;
        x ^= x >> 33; x *= 0xff51afd7ed558ccdULL; x ^= x >> 33;
        return (size_t)x;
    }
};

enum class Direction : int { N = 0, NE = 1, SE = 2, S = 3, SW = 4, NW = 5 };

inline constexpr std::array<Direction, 6> all_directions = {
    Direction::N, Direction::NE, Direction::SE,
    Direction::S, Direction::SW, Direction::NW};

// Axial deltas, clockwise starting at N.  The single arbitrary choice of
// the whole library; everything else speaks in Direction names.
inline constexpr int dir_dq[6] = {0, 1, 1, 0, -1, -1};
inline constexpr int dir_dr[6] = {-1, -1, 0, 1, 1, 0};

inline Direction opposite(Direction d) { return Direction(((int)d + 3) % 6); }
inline Direction rot_cw(Direction d) { return Direction(((int)d + 1) % 6); }
inline Direction rot_ccw(Direction d) { return Direction(((int)d + 5) % 6); }

inline const char* dir_name(Direction d) {
    static const char* names[6] = {"N", "NE", "SE", "S", "SW", "NW"};
    return names[(int)d];
}

inline Cell neighbor(Cell c, Direction d) {
    return {c.q + dir_dq[(int)d], c.r + dir_dr[(int)d]};
}

inline Cell offset(Cell c, std::span<const Direction> arrows) {
    for (Direction d : arrows) c = neighbor(c, d);
    return c;
}

inline Cell offset(Cell c, std::initializer_list<Direction> arrows) {
    for (Direction d : arrows) c = neighbor(c, d);
    return c;
}

// Direction from a to an adjacent cell b; callers must pass neighbors.
inline Direction direction_between(Cell a, Cell b) {
    for (Direction d : all_directions)
        if (neighbor(a, d) == b) return d;
    return Direction::N;  // unreachable for adjacent inputs
}

inline bool are_adjacent(Cell a, Cell b) {
    for (Direction d : all_directions)
        if (neighbor(a, d) == b) return true;
    return false;
}

// Center of a cell in the plane.  Used for rendering, root selection and
// the offline sweep oracle only; runtime legality is integer.
inline double center_x(Cell c) { return 1.5 * c.q; }
inline double center_y(Cell c) { return -std::sqrt(3.0) * (c.r + c.q / 2.0); }

// A lattice vertex, identified by the canonical (sorted) triple of cells
// meeting there.
struct Vertex {
    std::array<Cell, 3> cells;  // sorted

    static Vertex of(Cell a, Cell b, Cell c) {
        Vertex v{{a, b, c}};
        std::sort(v.cells.begin(), v.cells.end());
        return v;
    }
    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

// The 6 vertices of a cell, clockwise starting with the top-right one
// (the vertex shared with the N and NE neighbors).
inline std::array<Vertex, 6> vertices_of(Cell c) {
    using D = Direction;
    auto v = [&](D a, D b) { return Vertex::of(c, neighbor(c, a), neighbor(c, b)); };
    return {v(D::N, D::NE), v(D::NE, D::SE), v(D::SE, D::S),
            v(D::S, D::SW), v(D::SW, D::NW), v(D::NW, D::N)};
}

inline std::array<Cell, 3> cells_at(const Vertex& v) { return v.cells; }

// The two vertices on the edge shared by adjacent cells a and b.
inline std::array<Vertex, 2> shared_vertices(Cell a, Cell b) {
    Direction d = direction_between(a, b);
    return {Vertex::of(a, b, neighbor(a, rot_ccw(d))),
            Vertex::of(a, b, neighbor(a, rot_cw(d)))};
}

// Rows run along the NW/SE axis; ascending means stepping NW (up-left).
inline Cell ascend(Cell c) { return neighbor(c, Direction::NW); }
inline Cell descend(Cell c) { return neighbor(c, Direction::SE); }

using RowKey = int;
inline RowKey row_key(Cell c) { return c.r; }

// Height comparison from the embedding, kept in exact integers:
// y is proportional to -(2r + q).  higher(a,b): a strictly higher than b.
inline bool higher(Cell a, Cell b) {
    return 2 * a.r + a.q < 2 * b.r + b.q;
}

// "Topmost rightmost" order: lexicographic on (y, x) from the embedding.
// Returns true when a precedes b (a is more top-right).
inline bool top_right_before(Cell a, Cell b) {
    int ya = 2 * a.r + a.q, yb = 2 * b.r + b.q;  // smaller = higher
    if (ya != yb) return ya < yb;
    return a.q > b.q;
}

}  // namespace hexpivot
