#pragma once

// Connected sets of occupied cells and the shape queries the planner needs:
// pockets, corners, boundary, lower-hull extreme paths, canonical paths.

#include <deque>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "hexpivot/hexgrid.hpp"

namespace hexpivot {

struct ConfigError : std::runtime_error {
    enum Kind { Empty, Disconnected } kind;
    ConfigError(Kind k, std::string msg) : std::runtime_error(std::move(msg)), kind(k) {}
};

using CellSet = std::unordered_set<Cell, CellHash>;

inline bool cells_connected(const CellSet& cells) {
    if (cells.empty()) return true;
    CellSet seen;
    std::deque<Cell> q{*cells.begin()};
    seen.insert(*cells.begin());
    while (!q.empty()) {
        Cell c = q.front(); q.pop_front();
        for (Direction d : all_directions) {
            Cell n = neighbor(c, d);
            if (cells.count(n) && seen.insert(n).second) q.push_back(n);
        }
    }
    return seen.size() == cells.size();
}

class Configuration {
  public:
    static Configuration from_cells(const std::vector<Cell>& cells) {
        CellSet s(cells.begin(), cells.end());
        if (s.empty()) throw ConfigError(ConfigError::Empty, "empty configuration");
        if (!cells_connected(s))
            throw ConfigError(ConfigError::Disconnected,
                              "configuration is not edge-connected");
        return Configuration(std::move(s));
    }

    // Trusted constructor for callers that maintain connectivity themselves
    // (the move engine re-validates per step anyway).
    static Configuration unchecked(CellSet s) { return Configuration(std::move(s)); }

    const CellSet& cells() const { return occ_; }
    size_t size() const { return occ_.size(); }
    bool contains(Cell c) const { return occ_.count(c) != 0; }

    std::vector<Cell> sorted_cells() const {
        std::vector<Cell> v(occ_.begin(), occ_.end());
        std::sort(v.begin(), v.end());
        return v;
    }

    int degree(Cell c) const {
        int d = 0;
        for (Direction dir : all_directions)
            if (occ_.count(neighbor(c, dir))) ++d;
        return d;
    }

    Configuration translated(Cell delta) const {
        CellSet s;
        s.reserve(occ_.size());
        for (Cell c : occ_) s.insert(c + delta);
        return Configuration(std::move(s));
    }

    // Translate so the lexicographically smallest cell is the origin.
    Configuration normalized() const {
        Cell mn = *occ_.begin();
        for (Cell c : occ_) mn = std::min(mn, c);
        return translated({-mn.q, -mn.r});
    }

    bool same_shape(const Configuration& other) const {
        return normalized().sorted_cells() == other.normalized().sorted_cells();
    }

    bool operator==(const Configuration& o) const {
        return occ_.size() == o.occ_.size() &&
               std::all_of(occ_.begin(), occ_.end(),
                           [&](Cell c) { return o.contains(c); });
    }

    Cell topmost_rightmost() const {
        Cell best = *occ_.begin();
        for (Cell c : occ_)
            if (top_right_before(c, best)) best = c;
        return best;
    }

    // Empty-cell regions fully enclosed by the configuration.  Flood fill of
    // the complement from outside the bounding box; every unreached empty
    // component inside the box is a pocket.
    std::vector<std::vector<Cell>> pockets() const {
        int qlo = 1 << 30, qhi = -(1 << 30), rlo = 1 << 30, rhi = -(1 << 30);
        for (Cell c : occ_) {
            qlo = std::min(qlo, c.q); qhi = std::max(qhi, c.q);
            rlo = std::min(rlo, c.r); rhi = std::max(rhi, c.r);
        }
        qlo -= 1; qhi += 1; rlo -= 1; rhi += 1;
        auto inside = [&](Cell c) {
            return c.q >= qlo && c.q <= qhi && c.r >= rlo && c.r <= rhi;
        };
        CellSet outer;
        std::deque<Cell> bfs{{qlo, rlo}};
        outer.insert({qlo, rlo});
        while (!bfs.empty()) {
            Cell c = bfs.front(); bfs.pop_front();
            for (Direction d : all_directions) {
                Cell n = neighbor(c, d);
                if (inside(n) && !occ_.count(n) && outer.insert(n).second)
                    bfs.push_back(n);
            }
        }
        std::vector<std::vector<Cell>> out;
        CellSet assigned;
        for (int q = qlo; q <= qhi; ++q)
            for (int r = rlo; r <= rhi; ++r) {
                Cell c{q, r};
                if (occ_.count(c) || outer.count(c) || assigned.count(c)) continue;
                std::vector<Cell> pocket;
                std::deque<Cell> pb{c};
                assigned.insert(c);
                while (!pb.empty()) {
                    Cell x = pb.front(); pb.pop_front();
                    pocket.push_back(x);
                    for (Direction d : all_directions) {
                        Cell n = neighbor(x, d);
                        if (inside(n) && !occ_.count(n) && !outer.count(n) &&
                            assigned.insert(n).second)
                            pb.push_back(n);
                    }
                }
                std::sort(pocket.begin(), pocket.end());
                out.push_back(std::move(pocket));
            }
        return out;
    }

    size_t pocket_area() const {
        size_t a = 0;
        for (auto& p : pockets()) a += p.size();
        return a;
    }

    bool is_corner(Cell m) const {
        if (!occ_.count(m)) return false;
        // >= 3 consecutive empty cells in the cyclic 6-neighborhood.
        int run = 0, best = 0;
        for (int i = 0; i < 12; ++i) {
            Cell n = neighbor(m, Direction(i % 6));
            if (!occ_.count(n)) best = std::max(best, ++run);
            else run = 0;
        }
        return best >= 3;
    }

    std::vector<Cell> corners() const {
        std::vector<Cell> out;
        for (Cell c : sorted_cells())
            if (is_corner(c)) out.push_back(c);
        return out;
    }

    bool is_on_boundary(Cell m) const {
        if (!occ_.count(m)) return false;
        for (Direction d : all_directions)
            if (!occ_.count(neighbor(m, d))) return true;
        return false;
    }

    std::vector<Cell> boundary_cells() const {
        std::vector<Cell> out;
        for (Cell c : sorted_cells())
            if (is_on_boundary(c)) out.push_back(c);
        return out;
    }

    // Maximal ascending/descending path of modules on the lower convex hull
    // of the cell centers.  Ties between equally extreme paths go to the one
    // containing the lexicographically smallest cell.
    std::vector<Cell> extreme_sw_path() const;

    std::vector<Cell> empty_neighbors(Cell c) const {
        std::vector<Cell> out;
        for (Direction d : all_directions) {
            Cell n = neighbor(c, d);
            if (!occ_.count(n)) out.push_back(n);
        }
        return out;
    }

  private:
    explicit Configuration(CellSet s) : occ_(std::move(s)) {}
    CellSet occ_;
};

inline Configuration canonical_path(int n, Cell anchor) {
    if (n < 1) throw ConfigError(ConfigError::Empty, "canonical path needs n >= 1");
    std::vector<Cell> cells;
    Cell c = anchor;
    for (int i = 0; i < n; ++i) {
        cells.push_back(c);
        c = neighbor(c, Direction::S);
    }
    return Configuration::from_cells(cells);
}

inline bool is_canonical_path(const Configuration& c) {
    Cell top = *c.cells().begin();
    for (Cell x : c.cells())
        if (higher(x, top)) top = x;
    Cell cur = top;
    for (size_t i = 0; i < c.size(); ++i) {
        if (!c.contains(cur)) return false;
        cur = neighbor(cur, Direction::S);
    }
    return true;
}

inline std::vector<Cell> Configuration::extreme_sw_path() const {
    // Lower hull over cell centers (x increasing, keeping the chain convex
    // from below), then the maximal run of hull cells linked by ascend or
    // descend steps.
    std::vector<Cell> pts = sorted_cells();
    std::sort(pts.begin(), pts.end(), [](Cell a, Cell b) {
        double ax = center_x(a), bx = center_x(b);
        if (ax != bx) return ax < bx;
        return center_y(a) < center_y(b);
    });
    auto cross = [](Cell o, Cell a, Cell b) {
        double ox = center_x(o), oy = center_y(o);
        return (center_x(a) - ox) * (center_y(b) - oy) -
               (center_y(a) - oy) * (center_x(b) - ox);
    };
    std::vector<Cell> hull;
    for (Cell p : pts) {
        while (hull.size() >= 2 &&
               cross(hull[hull.size() - 2], hull[hull.size() - 1], p) < -1e-9)
            hull.pop_back();
        hull.push_back(p);
    }
    CellSet on_hull(hull.begin(), hull.end());
    // Collect maximal chains along the NW/SE axis within the hull set.
    std::vector<std::vector<Cell>> chains;
    CellSet used;
    for (Cell c : hull) {
        if (used.count(c)) continue;
        Cell start = c;
        while (on_hull.count(ascend(start))) start = ascend(start);
        std::vector<Cell> chain;
        Cell cur = start;
        while (on_hull.count(cur)) {
            chain.push_back(cur);
            used.insert(cur);
            cur = descend(cur);
        }
        chains.push_back(std::move(chain));
    }
    // The extreme path is the chain holding the lowest hull vertex; ties go
    // to the chain containing the lexicographically smallest cell.
    auto lowness = [](const std::vector<Cell>& ch) {
        int lo = -(1 << 30);  // larger 2r+q = lower in the embedding
        for (Cell c : ch) lo = std::max(lo, 2 * c.r + c.q);
        return lo;
    };
    auto key = [](const std::vector<Cell>& ch) {
        Cell mn = ch.front();
        for (Cell c : ch) mn = std::min(mn, c);
        return mn;
    };
    std::vector<Cell>* best = &chains.front();
    for (auto& ch : chains) {
        if (lowness(ch) > lowness(*best) ||
            (lowness(ch) == lowness(*best) && key(ch) < key(*best)))
            best = &ch;
    }
    return *best;
}

}  // namespace hexpivot
