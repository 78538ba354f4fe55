// Regenerates the frozen free-space table header from the sweep oracle.
// Usage: gen_free_space > include/hexpivot/free_space_frozen.hpp

#include <cstdio>

#include "hexpivot/free_space.hpp"

using namespace hexpivot;

int main() {
    FreeSpaceTable t = derive_free_space();
    std::printf("#pragma once\n\n");
    std::printf("// Generated by tools/gen_free_space.cpp from the continuous sweep\n");
    std::printf("// oracle in free_space.hpp.  Do not edit by hand; regenerate instead.\n");
    std::printf("// The test suite checks this file against a fresh oracle run.\n\n");
    std::printf("#include \"hexpivot/free_space.hpp\"\n\n");
    std::printf("namespace hexpivot {\n\n");
    std::printf("inline const FreeSpaceTable& frozen_free_space() {\n");
    std::printf("    static const FreeSpaceTable t = [] {\n");
    std::printf("        FreeSpaceTable t;\n");
    std::printf("        MoveGeometry* g;\n");
    for (int k = 0; k < 2; ++k)
        for (int r = 0; r < 2; ++r)
            for (int d = 0; d < 6; ++d) {
                const MoveGeometry& g = t.geom[k][r][d];
                std::printf("        g = &t.geom[%d][%d][%d];\n", k, r, d);
                std::printf("        g->dest = {%d, %d};\n", g.dest.q, g.dest.r);
                std::printf("        g->must_empty = {");
                for (size_t i = 0; i < g.must_empty.size(); ++i)
                    std::printf("%s{%d, %d}", i ? ", " : "", g.must_empty[i].q,
                                g.must_empty[i].r);
                std::printf("};\n");
                std::printf("        g->second_support = {%d, %d};\n",
                            g.second_support.q, g.second_support.r);
                std::printf("        g->pivots = {");
                for (size_t i = 0; i < g.pivots.size(); ++i) {
                    std::printf("%s{{", i ? ", " : "");
                    for (int j = 0; j < 3; ++j)
                        std::printf("%sCell{%d, %d}", j ? ", " : "",
                                    g.pivots[i][j].q, g.pivots[i][j].r);
                    std::printf("}}");
                }
                std::printf("};\n");
            }
    std::printf("        return t;\n");
    std::printf("    }();\n");
    std::printf("    return t;\n");
    std::printf("}\n\n");
    std::printf("}  // namespace hexpivot\n");
    return 0;
}
