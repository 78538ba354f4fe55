#pragma once

// Connectivity structure of the contact graph: block-cut tree, 2-cuts and
// their split components, 2-freeness, crews, flowers, and the non-cut
// corner finder.

#include <functional>
#include <map>
#include <stdexcept>

#include "hexpivot/move_model.hpp"

namespace hexpivot {

struct BlockTree {
    std::vector<std::vector<Cell>> blocks;  // sorted module sets
    std::vector<Cell> cut_vertices;         // sorted
    Cell root_module{};                     // topmost rightmost module
    size_t root_block = 0;                  // a block containing root_module

    bool is_cut(Cell c) const {
        return std::binary_search(cut_vertices.begin(), cut_vertices.end(), c);
    }
    // Leaf blocks: blocks containing at most one cut vertex.  For each, the
    // attaching cut vertex (or nullopt for a lone block).
    std::vector<std::pair<size_t, std::optional<Cell>>> leaf_blocks() const {
        std::vector<std::pair<size_t, std::optional<Cell>>> out;
        for (size_t i = 0; i < blocks.size(); ++i) {
            std::optional<Cell> cut;
            int cuts = 0;
            for (Cell c : blocks[i])
                if (is_cut(c)) { cut = c; ++cuts; }
            if (cuts <= 1 && (blocks.size() == 1 || cuts == 1))
                out.push_back({i, cut});
        }
        return out;
    }
};

// Biconnected components of the contact graph via DFS lowpoints.
inline BlockTree block_tree(const Configuration& c) {
    std::vector<Cell> nodes = c.sorted_cells();
    std::map<Cell, int> idx;
    for (size_t i = 0; i < nodes.size(); ++i) idx[nodes[i]] = (int)i;
    int n = (int)nodes.size();

    std::vector<int> num(n, -1), low(n, 0), parent(n, -1);
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<std::vector<int>> comps;
    std::vector<bool> cut(n, false);
    int timer = 0;

    // iterative DFS
    for (int start = 0; start < n; ++start) {
        if (num[start] != -1) continue;
        struct Frame { int v; int child_count; size_t dir; };
        std::vector<Frame> stack{{start, 0, 0}};
        num[start] = low[start] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.dir < 6) {
                Direction d = Direction(f.dir++);
                Cell wcell = neighbor(nodes[f.v], d);
                auto it = idx.find(wcell);
                if (it == idx.end()) continue;
                int w = it->second;
                if (w == parent[f.v]) continue;
                if (num[w] == -1) {
                    parent[w] = f.v;
                    edge_stack.push_back({f.v, w});
                    num[w] = low[w] = timer++;
                    f.child_count++;
                    stack.push_back({w, 0, 0});
                } else if (num[w] < num[f.v]) {
                    edge_stack.push_back({f.v, w});
                    low[f.v] = std::min(low[f.v], num[w]);
                }
            } else {
                int v = f.v;
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().v;
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] >= num[p]) {
                        // p separates: pop one biconnected component
                        std::vector<int> comp;
                        while (!edge_stack.empty()) {
                            auto [a, b] = edge_stack.back();
                            edge_stack.pop_back();
                            comp.push_back(a);
                            comp.push_back(b);
                            if (a == p && b == v) break;
                        }
                        std::sort(comp.begin(), comp.end());
                        comp.erase(std::unique(comp.begin(), comp.end()),
                                   comp.end());
                        comps.push_back(comp);
                        if (parent[p] != -1) cut[p] = true;
                    }
                }
            }
        }
        // root cut vertex: more than one DFS child
        int root_children = 0;
        for (int v = 0; v < n; ++v)
            if (parent[v] == start) ++root_children;
        if (root_children > 1) cut[start] = true;
    }

    BlockTree bt;
    for (auto& comp : comps) {
        std::vector<Cell> block;
        for (int v : comp) block.push_back(nodes[v]);
        bt.blocks.push_back(block);
    }
    if (bt.blocks.empty())  // single module, edgeless graph
        bt.blocks.push_back({nodes[0]});
    std::sort(bt.blocks.begin(), bt.blocks.end());
    for (int v = 0; v < n; ++v)
        if (cut[v]) bt.cut_vertices.push_back(nodes[v]);
    std::sort(bt.cut_vertices.begin(), bt.cut_vertices.end());
    bt.root_module = c.topmost_rightmost();
    for (size_t i = 0; i < bt.blocks.size(); ++i)
        if (std::binary_search(bt.blocks[i].begin(), bt.blocks[i].end(),
                               bt.root_module))
            bt.root_block = i;
    return bt;
}

// Brute-force cut-vertex test on the whole configuration.
inline bool is_cut_vertex(const Configuration& c, Cell m) {
    if (c.size() <= 1) return false;
    CellSet rest = c.cells();
    rest.erase(m);
    return !cells_connected(rest);
}

struct TwoCut {
    Cell v1{}, v2{};
    bool adjacent = false;
    std::vector<std::vector<Cell>> children;  // split components incl. {v1,v2}

    bool trivial() const {
        for (auto& ch : children)
            if (ch.size() == 3 || ch.size() == 4) return true;
        return false;
    }
};

// Split components of deleting {v1, v2} from the connected cell set; each
// returned component includes the pair again.  Empty result = not a 2-cut.
inline std::vector<std::vector<Cell>> two_cut_children(const CellSet& cells,
                                                       Cell v1, Cell v2) {
    CellSet rest = cells;
    rest.erase(v1);
    rest.erase(v2);
    if (rest.empty()) return {};
    std::vector<std::vector<Cell>> comps;
    CellSet seen;
    for (Cell c : rest) {
        if (seen.count(c)) continue;
        std::vector<Cell> comp;
        std::vector<Cell> stack{c};
        seen.insert(c);
        while (!stack.empty()) {
            Cell x = stack.back();
            stack.pop_back();
            comp.push_back(x);
            for (Direction d : all_directions) {
                Cell nb = neighbor(x, d);
                if (rest.count(nb) && seen.insert(nb).second) stack.push_back(nb);
            }
        }
        comp.push_back(v1);
        comp.push_back(v2);
        std::sort(comp.begin(), comp.end());
        comps.push_back(comp);
    }
    if (comps.size() <= 1) return {};
    std::sort(comps.begin(), comps.end());
    return comps;
}

// All adjacent 2-cuts {m, x} (x a contact neighbor of m) of the
// configuration containing module m.
inline std::vector<TwoCut> adjacent_two_cuts_at(const Configuration& c, Cell m) {
    std::vector<TwoCut> out;
    for (Direction d : all_directions) {
        Cell x = neighbor(m, d);
        if (!c.contains(x)) continue;
        auto children = two_cut_children(c.cells(), m, x);
        if (children.empty()) continue;
        TwoCut tc;
        tc.v1 = std::min(m, x);
        tc.v2 = std::max(m, x);
        tc.adjacent = true;
        tc.children = std::move(children);
        out.push_back(std::move(tc));
    }
    // dedupe (each unordered pair appears once)
    std::sort(out.begin(), out.end(), [](const TwoCut& a, const TwoCut& b) {
        return std::tie(a.v1, a.v2) < std::tie(b.v1, b.v2);
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const TwoCut& a, const TwoCut& b) {
                              return a.v1 == b.v1 && a.v2 == b.v2;
                          }),
              out.end());
    return out;
}

// Is m inside some 2-cut of the given block?  Blocks of one or two modules
// count as 2-connected after any single deletion, so they have no 2-cuts.
inline bool in_two_cut_of_block(const std::vector<Cell>& block, Cell m) {
    if (block.size() <= 3) return false;  // K1, K2, K3 have no 2-cuts
    CellSet bs(block.begin(), block.end());
    for (Cell other : block) {
        if (other == m) continue;
        if (!two_cut_children(bs, m, other).empty()) return true;
    }
    return false;
}

// 2-free: movable and in no 2-cut of its block.
inline bool is_2free(const Configuration& c, const std::vector<Cell>& block,
                     Cell m, ModelId model) {
    CellSet others = c.cells();
    others.erase(m);
    if (others.empty() || !cells_connected(others)) return false;
    if (moves_of(others, m, model).empty()) return false;
    return !in_two_cut_of_block(block, m);
}

struct Crew {
    std::vector<Cell> modules;  // peel order
};

// Validates the peel property: each member is 2-free in the configuration
// with its predecessors deleted (the block being the member's own block).
inline bool crew_valid(const Configuration& c, const Crew& crew, ModelId model) {
    if (crew.modules.empty()) return false;
    CellSet cells = c.cells();
    for (Cell m : crew.modules) {
        if (!cells.count(m)) return false;
        Configuration cur = Configuration::unchecked(cells);
        BlockTree bt = block_tree(cur);
        const std::vector<Cell>* blk = nullptr;
        for (auto& b : bt.blocks)
            if (std::binary_search(b.begin(), b.end(), m)) blk = &b;
        if (!blk || !is_2free(cur, *blk, m, model)) return false;
        cells.erase(m);
        if (!cells.empty() && !cells_connected(cells)) return false;
    }
    return true;
}

struct Flower {
    Cell center{};
    std::array<Cell, 7> cells() const {
        std::array<Cell, 7> out;
        out[0] = center;
        for (int i = 0; i < 6; ++i) out[i + 1] = neighbor(center, Direction(i));
        return out;
    }
    bool covers(Cell c) const {
        if (c == center) return true;
        return are_adjacent(c, center);
    }
};

// A flower is valid for (l, crew) when its 7 cells contain all crew modules
// and no other modules, and some flower cell is adjacent to a module of l.
inline bool flower_valid(const Configuration& c, const CellSet& l,
                         const Crew& crew, const Flower& f) {
    CellSet crew_set(crew.modules.begin(), crew.modules.end());
    for (Cell m : crew.modules)
        if (!f.covers(m)) return false;
    for (Cell fc : f.cells())
        if (c.contains(fc) && !crew_set.count(fc)) return false;
    for (Cell fc : f.cells())
        for (Direction d : all_directions)
            if (l.count(neighbor(fc, d))) return true;
    return false;
}

struct NotFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A corner of c that is not a cut vertex.  First route: in a leaf block,
// the topmost rightmost member other than the attaching cut vertex has all
// its contact neighbors inside the block, and the block's own geometry
// forces a corner there.  Falls back to an exhaustive scan; failure of both
// would contradict the existence guarantee and is reported loudly.
inline Cell find_non_cut_corner(const Configuration& c) {
    if (c.size() == 1) return *c.cells().begin();
    BlockTree bt = block_tree(c);
    for (auto& [bi, cut] : bt.leaf_blocks()) {
        const auto& block = bt.blocks[bi];
        Cell best{};
        bool have = false;
        for (Cell m : block) {
            if (cut && m == *cut) continue;
            if (!have || top_right_before(m, best)) { best = m; have = true; }
        }
        if (have && c.is_corner(best) && !is_cut_vertex(c, best)) return best;
    }
    for (Cell m : c.corners())
        if (!is_cut_vertex(c, m)) return m;
    throw NotFound("no non-cut corner found (this contradicts the structure "
                   "guarantee and indicates a bug)");
}

}  // namespace hexpivot
