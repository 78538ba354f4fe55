#pragma once

// Move legality, enumeration, application, plan verification and the
// clockwise boundary cycle.  All legality is integer table lookups against
// the frozen free-space data; the continuous geometry lives only in the
// offline oracle (free_space.hpp).

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hexpivot/configuration.hpp"
#include "hexpivot/free_space_frozen.hpp"

namespace hexpivot {

enum class ModelId { HexRestricted, HexMonkey };

struct Move {
    Cell mover{};
    Rotation rotation = Rotation::CW;
    MoveKind kind = MoveKind::Restricted;
    Direction support_dir = Direction::N;  // mover -> stationary neighbor
    Cell dest{};

    Cell support() const { return neighbor(mover, support_dir); }
    Cell second_support() const {
        const MoveGeometry& g = frozen_free_space().at(kind, rotation, support_dir);
        return mover + g.second_support;
    }
    // Pivot vertices (1 for restricted, 2 for monkey).
    std::vector<Vertex> pivots() const {
        const MoveGeometry& g = frozen_free_space().at(kind, rotation, support_dir);
        std::vector<Vertex> out;
        for (auto& tri : g.pivots)
            out.push_back(Vertex::of(mover + tri[0], mover + tri[1], mover + tri[2]));
        return out;
    }

    friend auto operator<=>(const Move&, const Move&) = default;
};

inline Move inverse(const Move& m) {
    Cell back_support = m.kind == MoveKind::Restricted ? m.support() : m.second_support();
    return Move{m.dest, flip(m.rotation), m.kind,
                direction_between(m.dest, back_support), m.mover};
}

struct IllegalMove : std::runtime_error {
    explicit IllegalMove(std::string reason)
        : std::runtime_error("illegal move: " + reason) {}
};

struct StepIllegal : std::runtime_error {
    size_t index;
    StepIllegal(size_t i, const std::string& reason)
        : std::runtime_error("plan step " + std::to_string(i) + ": " + reason),
          index(i) {}
};

// Legality of one move given that occ \ {mover} is already known to be
// connected and nonempty (the caller checks that once per mover).
inline bool move_shape_legal(const CellSet& others, const Move& m) {
    if (!others.count(m.support())) return false;
    const MoveGeometry& g = frozen_free_space().at(m.kind, m.rotation, m.support_dir);
    if (m.dest != m.mover + g.dest) return false;
    for (Cell rel : g.must_empty)
        if (others.count(m.mover + rel)) return false;
    if (m.kind == MoveKind::Monkey && !others.count(m.mover + g.second_support))
        return false;
    return true;
}

inline const char* illegal_reason(const Configuration& c, const Move& m) {
    if (!c.contains(m.mover)) return "mover not in configuration";
    if (c.size() == 1) return "singleton has no pivot neighbor";
    CellSet others = c.cells();
    others.erase(m.mover);
    if (!cells_connected(others)) return "mover is a cut vertex";
    if (!others.count(m.support())) return "stationary neighbor missing";
    const MoveGeometry& g = frozen_free_space().at(m.kind, m.rotation, m.support_dir);
    if (m.dest != m.mover + g.dest) return "destination does not match geometry";
    for (Cell rel : g.must_empty)
        if (others.count(m.mover + rel)) return "free space occupied";
    if (m.kind == MoveKind::Monkey && !others.count(m.mover + g.second_support))
        return "monkey second support missing";
    return nullptr;
}

inline bool is_legal(const Configuration& c, const Move& m, ModelId model) {
    if (model == ModelId::HexRestricted && m.kind == MoveKind::Monkey) return false;
    return illegal_reason(c, m) == nullptr;
}

// All legal moves of one module, assuming the caller verified that
// occ \ {mover} is connected and nonempty.  Deterministic order.
inline std::vector<Move> moves_of(const CellSet& others, Cell mover, ModelId model) {
    std::vector<Move> out;
    for (Direction d : all_directions) {
        if (!others.count(neighbor(mover, d))) continue;
        for (Rotation rot : {Rotation::CW, Rotation::CCW}) {
            for (MoveKind kind : {MoveKind::Restricted, MoveKind::Monkey}) {
                if (model == ModelId::HexRestricted && kind == MoveKind::Monkey)
                    continue;
                const MoveGeometry& g = frozen_free_space().at(kind, rot, d);
                Move m{mover, rot, kind, d, mover + g.dest};
                if (move_shape_legal(others, m)) out.push_back(m);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Move& a, const Move& b) {
        return std::tie(a.mover, a.rotation, a.dest, a.kind, a.support_dir) <
               std::tie(b.mover, b.rotation, b.dest, b.kind, b.support_dir);
    });
    return out;
}

inline std::vector<Move> legal_moves(const Configuration& c, ModelId model) {
    std::vector<Move> out;
    if (c.size() <= 1) return out;
    for (Cell mover : c.sorted_cells()) {
        CellSet others = c.cells();
        others.erase(mover);
        if (!cells_connected(others)) continue;
        for (Move m : moves_of(others, mover, model)) out.push_back(m);
    }
    std::sort(out.begin(), out.end(), [](const Move& a, const Move& b) {
        return std::tie(a.mover, a.rotation, a.dest, a.kind, a.support_dir) <
               std::tie(b.mover, b.rotation, b.dest, b.kind, b.support_dir);
    });
    return out;
}

inline Configuration apply(const Configuration& c, const Move& m) {
    if (const char* why = illegal_reason(c, m)) throw IllegalMove(why);
    CellSet s = c.cells();
    s.erase(m.mover);
    s.insert(m.dest);
    return Configuration::unchecked(std::move(s));
}

inline Configuration verify_plan(const Configuration& start,
                                 const std::vector<Move>& plan, ModelId model) {
    Configuration cur = start;
    for (size_t i = 0; i < plan.size(); ++i) {
        const Move& m = plan[i];
        if (model == ModelId::HexRestricted && m.kind == MoveKind::Monkey)
            throw StepIllegal(i, "monkey move under restricted model");
        if (const char* why = illegal_reason(cur, m)) throw StepIllegal(i, why);
        cur = apply(cur, m);
    }
    return cur;
}

struct CwCycleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Clockwise boundary walk of a single module until it first returns to its
// start cell, all other modules stationary.  At every step the module takes
// the clockwise pivot about the last occupied neighbor before the first
// empty slot in clockwise scan order (the rolling rule); when the plain
// pivot is blocked it takes the monkey continuation instead.
inline std::vector<Move> cw_cycle(const Configuration& c, Cell m) {
    if (!c.contains(m)) throw CwCycleError("module not in configuration");
    CellSet others = c.cells();
    others.erase(m);
    if (others.empty()) throw CwCycleError("singleton cannot cycle");
    if (!cells_connected(others)) throw CwCycleError("module is a cut vertex");

    std::vector<Move> plan;
    Cell start = m;
    Cell cur = m;
    // initial contact: any occupied neighbor
    std::optional<Direction> contact;
    for (Direction d : all_directions)
        if (others.count(neighbor(cur, d))) { contact = d; break; }
    if (!contact) throw CwCycleError("module has no neighbor");

    size_t cap = 6 * c.size() + 6;
    while (true) {
        if (plan.size() > cap) throw CwCycleError("cycle cap exceeded");
        // A cw pivot about a support in direction sd lands the module one
        // (restricted) or two (monkey) steps counterclockwise of sd in its
        // own frame.  To keep rolling clockwise around the structure, try
        // supports counterclockwise from the last contact and take the first
        // that admits a cw pivot, preferring the restricted one.
        std::optional<Move> chosen;
        for (int i = 0; i < 6 && !chosen; ++i) {
            Direction sd = Direction(((int)*contact + 6 - i) % 6);
            if (!others.count(neighbor(cur, sd))) continue;
            for (MoveKind kind : {MoveKind::Restricted, MoveKind::Monkey}) {
                Move m{cur, Rotation::CW, kind, sd,
                       cur + frozen_free_space().at(kind, Rotation::CW, sd).dest};
                if (move_shape_legal(others, m)) { chosen = m; break; }
            }
        }
        if (!chosen) throw CwCycleError("no clockwise move available");

        plan.push_back(*chosen);
        cur = chosen->dest;
        Cell back = chosen->kind == MoveKind::Restricted ? chosen->support()
                                                         : chosen->second_support();
        contact = direction_between(cur, back);
        if (cur == start) return plan;
    }
}

}  // namespace hexpivot
