#pragma once

// Free-space requirements of the two pivoting moves, derived from a
// continuous sweep of the moving hexagon and frozen as integer tables.
//
// The oracle rotates a unit hexagon (circumradius 1, shrunk by 1e-9 about
// its own center) about the pivot vertex in 1-degree steps and marks every
// grid cell whose interior the swept hexagon intersects.  A restricted move
// is one 120-degree arc about a vertex shared with the stationary neighbor;
// a monkey move is a 60-degree arc about that vertex followed by a
// 60-degree arc about the vertex of the mover that lands on the lattice
// halfway through, ending two cells away.

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "hexpivot/hexgrid.hpp"

namespace hexpivot {

enum class Rotation : int { CW = 0, CCW = 1 };
enum class MoveKind : int { Restricted = 0, Monkey = 1 };

inline Rotation flip(Rotation r) { return r == Rotation::CW ? Rotation::CCW : Rotation::CW; }

// Geometry of one move, relative to the mover at the origin with the
// stationary neighbor in a given direction.
struct MoveGeometry {
    Cell dest{};                      // landing cell
    std::vector<Cell> must_empty;     // cells that must be unoccupied (incl. dest)
    Cell second_support{};            // monkey only: cell that must be occupied
    std::vector<std::array<Cell, 3>> pivots;  // vertex triples, 1 or 2 entries

    bool operator==(const MoveGeometry& o) const {
        return dest == o.dest && must_empty == o.must_empty &&
               second_support == o.second_support && pivots == o.pivots;
    }
};

struct FreeSpaceTable {
    // [kind][rotation][direction of stationary neighbor]
    MoveGeometry geom[2][2][6];

    const MoveGeometry& at(MoveKind k, Rotation r, Direction d) const {
        return geom[(int)k][(int)r][(int)d];
    }
    bool operator==(const FreeSpaceTable& o) const {
        for (int k = 0; k < 2; ++k)
            for (int r = 0; r < 2; ++r)
                for (int d = 0; d < 6; ++d)
                    if (!(geom[k][r][d] == o.geom[k][r][d])) return false;
        return true;
    }
};

namespace sweep_detail {

struct Pt {
    double x, y;
};

inline Pt rotate_about(Pt p, Pt c, double ang) {
    double s = std::sin(ang), co = std::cos(ang);
    double dx = p.x - c.x, dy = p.y - c.y;
    return {c.x + dx * co - dy * s, c.y + dx * s + dy * co};
}

inline Pt cell_center(Cell c) { return {center_x(c), center_y(c)}; }

// Vertex k of the hexagon centered at p, at angle 60k degrees.
inline Pt hex_vertex(Pt p, int k) {
    double a = k * M_PI / 3.0;
    return {p.x + std::cos(a), p.y + std::sin(a)};
}

using Poly = std::array<Pt, 6>;

inline Poly hexagon(Pt center, double scale = 1.0) {
    Poly h;
    for (int k = 0; k < 6; ++k) {
        Pt v = hex_vertex(center, k);
        h[k] = {center.x + (v.x - center.x) * scale,
                center.y + (v.y - center.y) * scale};
    }
    return h;
}

inline Poly rotate_poly(const Poly& p, Pt c, double ang) {
    Poly out;
    for (int i = 0; i < 6; ++i) out[i] = rotate_about(p[i], c, ang);
    return out;
}

// Separating-axis overlap test for two convex hexagons.
inline bool polys_intersect(const Poly& a, const Poly& b) {
    auto separated_by_edges_of = [](const Poly& p, const Poly& q) {
        for (int i = 0; i < 6; ++i) {
            Pt e1 = p[i], e2 = p[(i + 1) % 6];
            double nx = -(e2.y - e1.y), ny = e2.x - e1.x;
            double pmin = 1e18, pmax = -1e18, qmin = 1e18, qmax = -1e18;
            for (int j = 0; j < 6; ++j) {
                double pv = p[j].x * nx + p[j].y * ny;
                double qv = q[j].x * nx + q[j].y * ny;
                pmin = std::min(pmin, pv); pmax = std::max(pmax, pv);
                qmin = std::min(qmin, qv); qmax = std::max(qmax, qv);
            }
            if (qmin >= pmax - 1e-12 || pmin >= qmax - 1e-12) return true;
        }
        return false;
    };
    return !separated_by_edges_of(a, b) && !separated_by_edges_of(b, a);
}

inline bool near(Pt a, Pt b, double tol = 1e-6) {
    return std::abs(a.x - b.x) < tol && std::abs(a.y - b.y) < tol;
}

// Integer cell whose center coincides with p, if any.
inline bool lattice_cell_at(Pt p, Cell& out) {
    int q = (int)std::lround(p.x / 1.5);
    int r = (int)std::lround(-p.y / std::sqrt(3.0) - q / 2.0);
    Cell c{q, r};
    if (near(cell_center(c), p)) { out = c; return true; }
    return false;
}

// Integer vertex (canonical cell triple) at point p, searched near the
// origin; returns false if p is not a lattice vertex.
inline bool lattice_vertex_at(Pt p, Vertex& out) {
    for (int q = -4; q <= 4; ++q)
        for (int r = -4; r <= 4; ++r) {
            Cell c{q, r};
            Pt cc = cell_center(c);
            for (int k = 0; k < 6; ++k) {
                if (near(hex_vertex(cc, k), p)) {
                    auto vs = vertices_of(c);
                    // vertices_of lists vertices cw from the top-right one,
                    // which sits at geometric angle 60 degrees (k = 1).
                    static const int order[6] = {1, 0, 5, 4, 3, 2};
                    for (int i = 0; i < 6; ++i)
                        if (order[i] == k) { out = vs[i]; return true; }
                }
            }
        }
    return false;
}

}  // namespace sweep_detail

// Runs the continuous sweep for every (kind, rotation, support direction)
// and returns the full table.  Deterministic; used offline to generate the
// frozen table and re-run in tests as a regression oracle.
inline FreeSpaceTable derive_free_space() {
    using namespace sweep_detail;
    const double shrink = 1.0 - 1e-9;
    const double step = M_PI / 180.0;  // 1 degree
    FreeSpaceTable table;

    auto mark_arc = [&](std::vector<Cell>& marked, Pt hex_center, Pt pivot,
                        double total_angle) {
        Poly base = hexagon(hex_center, shrink);
        int steps = (int)std::ceil(std::abs(total_angle) / step);
        for (int i = 0; i <= steps; ++i) {
            double ang = total_angle * (double)i / steps;
            Poly pose = rotate_poly(base, pivot, ang);
            for (int q = -3; q <= 3; ++q)
                for (int r = -3; r <= 3; ++r) {
                    Cell c{q, r};
                    if (std::find(marked.begin(), marked.end(), c) != marked.end())
                        continue;
                    if (polys_intersect(pose, hexagon(cell_center(c))))
                        marked.push_back(c);
                }
        }
    };

    for (int di = 0; di < 6; ++di) {
        Direction d = Direction(di);
        Cell a{0, 0};
        Cell s = neighbor(a, d);
        for (int ri = 0; ri < 2; ++ri) {
            Rotation rot = Rotation(ri);
            double sign = (rot == Rotation::CW) ? -1.0 : 1.0;

            // Pick the shared vertex whose 120-degree rotation in this
            // direction lands the mover on the third cell (not back on s).
            auto sv = shared_vertices(a, s);
            Pt pivot{};
            Cell rdest{};
            bool found = false;
            for (const Vertex& v : sv) {
                // locate the vertex point: common corner of a and s
                Pt pa = cell_center(a);
                for (int k = 0; k < 6; ++k) {
                    Pt cand = hex_vertex(pa, k);
                    Vertex vv;
                    if (lattice_vertex_at(cand, vv) && vv == v) {
                        Pt landed = rotate_about(pa, cand, sign * 2.0 * M_PI / 3.0);
                        Cell lc;
                        if (lattice_cell_at(landed, lc) && lc != s && lc != a) {
                            pivot = cand; rdest = lc; found = true;
                        }
                    }
                }
            }
            if (!found) throw std::logic_error("sweep: no valid pivot vertex");

            // Restricted move: one 120-degree arc.
            {
                std::vector<Cell> marked;
                mark_arc(marked, cell_center(a), pivot, sign * 2.0 * M_PI / 3.0);
                MoveGeometry g;
                g.dest = rdest;
                for (Cell c : marked)
                    if (c != a) g.must_empty.push_back(c);
                std::sort(g.must_empty.begin(), g.must_empty.end());
                if (std::find(g.must_empty.begin(), g.must_empty.end(), s) !=
                    g.must_empty.end())
                    throw std::logic_error("sweep: stationary neighbor swept");
                g.pivots.push_back(Vertex::of(a, s, rdest).cells);
                table.geom[(int)MoveKind::Restricted][ri][di] = g;
            }

            // Monkey move: 60 degrees about the shared vertex, then 60
            // degrees about the mover vertex that meets the lattice there.
            {
                double arc = sign * M_PI / 3.0;
                Pt mid_center = rotate_about(cell_center(a), pivot, arc);
                // Find w: the halfway pose has its vertices on two lattice
                // vertices besides the pivot.  The right one is the vertex
                // whose forward continuation (same rotation sense) reaches a
                // cell other than the start cell.
                Pt w{};
                Vertex wv{};
                Cell mdest{};
                int hits = 0;
                for (int k = 0; k < 6; ++k) {
                    Pt cand = hex_vertex(mid_center, k);
                    if (near(cand, pivot)) continue;
                    Vertex vv;
                    if (!lattice_vertex_at(cand, vv)) continue;
                    Pt landed = rotate_about(mid_center, cand, arc);
                    Cell lc;
                    if (lattice_cell_at(landed, lc) && lc != a) {
                        w = cand; wv = vv; mdest = lc; ++hits;
                    }
                }
                if (hits != 1)
                    throw std::logic_error("sweep: monkey second pivot not unique");

                std::vector<Cell> marked;
                mark_arc(marked, cell_center(a), pivot, arc);
                // second arc: start from the halfway pose
                {
                    Poly base = hexagon(cell_center(a), shrink);
                    Poly halfway = rotate_poly(base, pivot, arc);
                    int steps = 60;
                    for (int i = 0; i <= steps; ++i) {
                        double ang = arc * (double)i / steps;
                        Poly pose = rotate_poly(halfway, w, ang);
                        for (int q = -3; q <= 3; ++q)
                            for (int r = -3; r <= 3; ++r) {
                                Cell c{q, r};
                                if (std::find(marked.begin(), marked.end(), c) !=
                                    marked.end())
                                    continue;
                                if (polys_intersect(pose, hexagon(cell_center(c))))
                                    marked.push_back(c);
                            }
                    }
                }
                MoveGeometry g;
                g.dest = mdest;
                for (Cell c : marked)
                    if (c != a) g.must_empty.push_back(c);
                std::sort(g.must_empty.begin(), g.must_empty.end());
                if (std::find(g.must_empty.begin(), g.must_empty.end(), s) !=
                    g.must_empty.end())
                    throw std::logic_error("sweep: stationary neighbor swept (monkey)");
                // The second support is the cell at w that is neither the
                // landing cell nor required to be empty.
                int picked = 0;
                for (Cell c : cells_at(wv)) {
                    if (c == mdest) continue;
                    if (std::find(g.must_empty.begin(), g.must_empty.end(), c) !=
                        g.must_empty.end())
                        continue;
                    g.second_support = c;
                    ++picked;
                }
                if (picked != 1)
                    throw std::logic_error("sweep: ambiguous monkey second support");
                Vertex pv;
                if (!lattice_vertex_at(pivot, pv))
                    throw std::logic_error("sweep: pivot not a lattice vertex");
                g.pivots.push_back(pv.cells);
                g.pivots.push_back(wv.cells);
                table.geom[(int)MoveKind::Monkey][ri][di] = g;
            }
        }
    }
    return table;
}

}  // namespace hexpivot
