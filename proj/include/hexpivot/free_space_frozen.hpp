#pragma once

// Generated by tools/gen_free_space.cpp from the continuous sweep
// oracle in free_space.hpp.  Do not edit by hand; regenerate instead.
// The test suite checks this file against a fresh oracle run.

#include "hexpivot/free_space.hpp"

namespace hexpivot {

inline const FreeSpaceTable& frozen_free_space() {
    static const FreeSpaceTable t = [] {
        FreeSpaceTable t;
        MoveGeometry* g;
        g = &t.geom[0][0][0];
        g->dest = {-1, 0};
        g->must_empty = {{-2, 1}, {-1, 0}, {-1, 1}, {0, 1}};
        g->second_support = {0, 0};
        g->pivots = {{{Cell{-1, 0}, Cell{0, -1}, Cell{0, 0}}}};
        g = &t.geom[0][0][1];
        g->dest = {0, -1};
        g->must_empty = {{-1, -1}, {-1, 0}, {-1, 1}, {0, -1}};
        g->second_support = {0, 0};
        g->pivots = {{{Cell{0, -1}, Cell{0, 0}, Cell{1, -1}}}};
        g = &t.geom[0][0][2];
        g->dest = {1, -1};
        g->must_empty = {{-1, 0}, {0, -1}, {1, -2}, {1, -1}};
        g->second_support = {0, 0};
        g->pivots = {{{Cell{0, 0}, Cell{1, -1}, Cell{1, 0}}}};
        g = &t.geom[0][0][3];
        g->dest = {1, 0};
        g->must_empty = {{0, -1}, {1, -1}, {1, 0}, {2, -1}};
        g->second_support = {0, 0};
        g->pivots = {{{Cell{0, 0}, Cell{0, 1}, Cell{1, 0}}}};
        g = &t.geom[0][0][4];
        g->dest = {0, 1};
        g->must_empty = {{0, 1}, {1, -1}, {1, 0}, {1, 1}};
        g->second_support = {0, 0};
        g->pivots = {{{Cell{-1, 1}, Cell{0, 0}, Cell{0, 1}}}};
        g = &t.geom[0][0][5];
        g->dest = {-1, 1};
        g->must_empty = {{-1, 1}, {-1, 2}, {0, 1}, {1, 0}};
        g->second_support = {0, 0};
        g->pivots = {{{Cell{-1, 0}, Cell{-1, 1}, Cell{0, 0}}}};
        g = &t.geom[0][1][0];
        g->dest = {1, -1};
        g->must_empty = {{0, 1}, {1, -1}, {1, 0}, {2, -1}};
        g->second_support = {0, 0};
        g->pivots = {{{Cell{0, -1}, Cell{0, 0}, Cell{1, -1}}}};
        g = &t.geom[0][1][1];
        g->dest = {1, 0};
        g->must_empty = {{-1, 1}, {0, 1}, {1, 0}, {1, 1}};
        g->second_support = {0, 0};
        g->pivots = {{{Cell{0, 0}, Cell{1, -1}, Cell{1, 0}}}};
        g = &t.geom[0][1][2];
        g->dest = {0, 1};
        g->must_empty = {{-1, 0}, {-1, 1}, {-1, 2}, {0, 1}};
        g->second_support = {0, 0};
        g->pivots = {{{Cell{0, 0}, Cell{0, 1}, Cell{1, 0}}}};
        g = &t.geom[0][1][3];
        g->dest = {-1, 1};
        g->must_empty = {{-2, 1}, {-1, 0}, {-1, 1}, {0, -1}};
        g->second_support = {0, 0};
        g->pivots = {{{Cell{-1, 1}, Cell{0, 0}, Cell{0, 1}}}};
        g = &t.geom[0][1][4];
        g->dest = {-1, 0};
        g->must_empty = {{-1, -1}, {-1, 0}, {0, -1}, {1, -1}};
        g->second_support = {0, 0};
        g->pivots = {{{Cell{-1, 0}, Cell{-1, 1}, Cell{0, 0}}}};
        g = &t.geom[0][1][5];
        g->dest = {0, -1};
        g->must_empty = {{0, -1}, {1, -2}, {1, -1}, {1, 0}};
        g->second_support = {0, 0};
        g->pivots = {{{Cell{-1, 0}, Cell{0, -1}, Cell{0, 0}}}};
        g = &t.geom[1][0][0];
        g->dest = {-1, 1};
        g->must_empty = {{-1, 0}, {-1, 1}, {0, 1}};
        g->second_support = {-2, 1};
        g->pivots = {{{Cell{-1, 0}, Cell{0, -1}, Cell{0, 0}}}, {{Cell{-2, 1}, Cell{-1, 0}, Cell{-1, 1}}}};
        g = &t.geom[1][0][1];
        g->dest = {-1, 0};
        g->must_empty = {{-1, 0}, {-1, 1}, {0, -1}};
        g->second_support = {-1, -1};
        g->pivots = {{{Cell{0, -1}, Cell{0, 0}, Cell{1, -1}}}, {{Cell{-1, -1}, Cell{-1, 0}, Cell{0, -1}}}};
        g = &t.geom[1][0][2];
        g->dest = {0, -1};
        g->must_empty = {{-1, 0}, {0, -1}, {1, -1}};
        g->second_support = {1, -2};
        g->pivots = {{{Cell{0, 0}, Cell{1, -1}, Cell{1, 0}}}, {{Cell{0, -1}, Cell{1, -2}, Cell{1, -1}}}};
        g = &t.geom[1][0][3];
        g->dest = {1, -1};
        g->must_empty = {{0, -1}, {1, -1}, {1, 0}};
        g->second_support = {2, -1};
        g->pivots = {{{Cell{0, 0}, Cell{0, 1}, Cell{1, 0}}}, {{Cell{1, -1}, Cell{1, 0}, Cell{2, -1}}}};
        g = &t.geom[1][0][4];
        g->dest = {1, 0};
        g->must_empty = {{0, 1}, {1, -1}, {1, 0}};
        g->second_support = {1, 1};
        g->pivots = {{{Cell{-1, 1}, Cell{0, 0}, Cell{0, 1}}}, {{Cell{0, 1}, Cell{1, 0}, Cell{1, 1}}}};
        g = &t.geom[1][0][5];
        g->dest = {0, 1};
        g->must_empty = {{-1, 1}, {0, 1}, {1, 0}};
        g->second_support = {-1, 2};
        g->pivots = {{{Cell{-1, 0}, Cell{-1, 1}, Cell{0, 0}}}, {{Cell{-1, 1}, Cell{-1, 2}, Cell{0, 1}}}};
        g = &t.geom[1][1][0];
        g->dest = {1, 0};
        g->must_empty = {{0, 1}, {1, -1}, {1, 0}};
        g->second_support = {2, -1};
        g->pivots = {{{Cell{0, -1}, Cell{0, 0}, Cell{1, -1}}}, {{Cell{1, -1}, Cell{1, 0}, Cell{2, -1}}}};
        g = &t.geom[1][1][1];
        g->dest = {0, 1};
        g->must_empty = {{-1, 1}, {0, 1}, {1, 0}};
        g->second_support = {1, 1};
        g->pivots = {{{Cell{0, 0}, Cell{1, -1}, Cell{1, 0}}}, {{Cell{0, 1}, Cell{1, 0}, Cell{1, 1}}}};
        g = &t.geom[1][1][2];
        g->dest = {-1, 1};
        g->must_empty = {{-1, 0}, {-1, 1}, {0, 1}};
        g->second_support = {-1, 2};
        g->pivots = {{{Cell{0, 0}, Cell{0, 1}, Cell{1, 0}}}, {{Cell{-1, 1}, Cell{-1, 2}, Cell{0, 1}}}};
        g = &t.geom[1][1][3];
        g->dest = {-1, 0};
        g->must_empty = {{-1, 0}, {-1, 1}, {0, -1}};
        g->second_support = {-2, 1};
        g->pivots = {{{Cell{-1, 1}, Cell{0, 0}, Cell{0, 1}}}, {{Cell{-2, 1}, Cell{-1, 0}, Cell{-1, 1}}}};
        g = &t.geom[1][1][4];
        g->dest = {0, -1};
        g->must_empty = {{-1, 0}, {0, -1}, {1, -1}};
        g->second_support = {-1, -1};
        g->pivots = {{{Cell{-1, 0}, Cell{-1, 1}, Cell{0, 0}}}, {{Cell{-1, -1}, Cell{-1, 0}, Cell{0, -1}}}};
        g = &t.geom[1][1][5];
        g->dest = {1, -1};
        g->must_empty = {{0, -1}, {1, -1}, {1, 0}};
        g->second_support = {1, -2};
        g->pivots = {{{Cell{-1, 0}, Cell{0, -1}, Cell{0, 0}}}, {{Cell{0, -1}, Cell{1, -2}, Cell{1, -1}}}};
        return t;
    }();
    return t;
}

}  // namespace hexpivot
