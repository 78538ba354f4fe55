#pragma once

// Brute-force oracle layer: enumeration of all connected shapes of a given
// size up to translation, the reconfiguration graph under a move model,
// shortest-path search, and rigidity scans.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "hexpivot/move_model.hpp"

namespace hexpivot {

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int explorer_cap = 8;
inline constexpr const char* explorer_cache_version = "v1";

using Shape = std::vector<Cell>;  // sorted cells of a normalized configuration

inline Shape shape_of(const Configuration& c) {
    return c.normalized().sorted_cells();
}

namespace explorer_detail {

inline std::string cache_path(int n) {
    const char* dir = std::getenv("HEXPIVOT_CACHE_DIR");
    if (!dir || !*dir) return {};
    return std::string(dir) + "/enum_n" + std::to_string(n) + "_" +
           explorer_cache_version + ".txt";
}

inline bool load_cached(int n, std::vector<Shape>& out) {
    std::string path = cache_path(n);
    if (path.empty()) return false;
    std::ifstream in(path);
    if (!in) return false;
    std::string line;
    while (std::getline(in, line)) {
        Shape s;
        std::istringstream ls(line);
        int q, r;
        while (ls >> q >> r) s.push_back({q, r});
        if ((int)s.size() != n) return false;
        out.push_back(std::move(s));
    }
    return !out.empty();
}

inline void store_cached(int n, const std::vector<Shape>& shapes) {
    std::string path = cache_path(n);
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) return;
    for (const Shape& s : shapes) {
        for (size_t i = 0; i < s.size(); ++i)
            out << (i ? " " : "") << s[i].q << ' ' << s[i].r;
        out << '\n';
    }
}

}  // namespace explorer_detail

// All edge-connected shapes of n cells up to translation, sorted, each
// exactly once.  Growth with deduplication by normalized form.
inline std::vector<Shape> enumerate(int n, int cap = explorer_cap) {
    if (n < 1 || n > cap)
        throw CapExceeded("enumerate: n out of range (cap " + std::to_string(cap) +
                          ")");
    std::vector<Shape> cached;
    if (explorer_detail::load_cached(n, cached)) return cached;

    std::vector<Shape> cur{{Cell{0, 0}}};
    for (int k = 2; k <= n; ++k) {
        std::set<Shape> next;
        for (const Shape& s : cur) {
            CellSet cells(s.begin(), s.end());
            for (Cell c : s)
                for (Direction d : all_directions) {
                    Cell nb = neighbor(c, d);
                    if (cells.count(nb)) continue;
                    CellSet grown = cells;
                    grown.insert(nb);
                    next.insert(shape_of(Configuration::unchecked(grown)));
                }
        }
        cur.assign(next.begin(), next.end());
    }
    explorer_detail::store_cached(n, cur);
    return cur;
}

struct ReconfigGraph {
    ModelId model;
    int n;
    std::vector<Shape> nodes;                       // sorted
    std::vector<std::pair<size_t, size_t>> edges;   // i < j, deduplicated
    size_t self_loops = 0;  // moves mapping a shape onto itself
};

inline size_t shape_index(const std::vector<Shape>& nodes, const Shape& s) {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), s);
    return (size_t)(it - nodes.begin());
}

inline ReconfigGraph build_graph(int n, ModelId model, int cap = explorer_cap) {
    ReconfigGraph g{model, n, enumerate(n, cap), {}, 0};
    std::set<std::pair<size_t, size_t>> edges;
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        Configuration c = Configuration::from_cells(g.nodes[i]);
        for (const Move& m : legal_moves(c, model)) {
            Shape t = shape_of(apply(c, m));
            size_t j = shape_index(g.nodes, t);
            if (j == i) { ++g.self_loops; continue; }
            edges.insert({std::min(i, j), std::max(i, j)});
        }
    }
    g.edges.assign(edges.begin(), edges.end());
    return g;
}

inline std::vector<std::vector<size_t>> components(const ReconfigGraph& g) {
    std::vector<size_t> parent(g.nodes.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<size_t(size_t)> find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [a, b] : g.edges) parent[find(a)] = find(b);
    std::map<size_t, std::vector<size_t>> groups;
    for (size_t i = 0; i < g.nodes.size(); ++i) groups[find(i)].push_back(i);
    std::vector<std::vector<size_t>> out;
    for (auto& [root, members] : groups) out.push_back(members);
    return out;
}

// Shortest move sequence transforming a into (a translate of) b, or
// nullopt when unreachable within the state budget.
inline std::optional<std::vector<Move>> bfs_path(const Configuration& a,
                                                 const Configuration& b,
                                                 ModelId model,
                                                 size_t budget = 2'000'000) {
    if (a.size() != b.size())
        throw std::invalid_argument("bfs_path: size mismatch");
    Shape target = shape_of(b);
    Shape start = shape_of(a);
    if (start == target) return std::vector<Move>{};

    std::map<Shape, std::pair<Shape, Move>> parent;  // state -> (prev, move in prev's frame)
    std::deque<Shape> frontier{start};
    parent[start] = {start, Move{}};
    while (!frontier.empty()) {
        Shape s = frontier.front();
        frontier.pop_front();
        Configuration c = Configuration::from_cells(s);
        for (const Move& m : legal_moves(c, model)) {
            Shape t = shape_of(apply(c, m));
            if (parent.count(t)) continue;
            parent[t] = {s, m};
            if (t == target) {
                // reconstruct normalized-frame move chain
                std::vector<Move> chain;
                Shape cur = t;
                while (cur != start) {
                    auto& [prev, mv] = parent[cur];
                    chain.push_back(mv);
                    cur = prev;
                }
                std::reverse(chain.begin(), chain.end());
                // replay from the actual start, tracking the translation
                std::vector<Move> plan;
                Configuration actual = a;
                for (Move mv : chain) {
                    Cell off = actual.sorted_cells().front();  // min cell
                    Move shifted = mv;
                    shifted.mover = mv.mover + off;
                    shifted.dest = mv.dest + off;
                    plan.push_back(shifted);
                    actual = apply(actual, shifted);
                }
                return plan;
            }
            if (parent.size() > budget)
                throw BudgetExceeded("bfs_path: state budget exceeded");
            frontier.push_back(t);
        }
    }
    return std::nullopt;
}

// All shapes of size n with no legal move under the model.
inline std::vector<Shape> rigidity_scan(int n, ModelId model,
                                        int cap = explorer_cap) {
    std::vector<Shape> out;
    for (const Shape& s : enumerate(n, cap)) {
        Configuration c = Configuration::from_cells(s);
        if (legal_moves(c, model).empty()) out.push_back(s);
    }
    return out;
}

}  // namespace hexpivot
