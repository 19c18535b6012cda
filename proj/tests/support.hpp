#pragma once

#include <string>
#include <vector>

#include "lef/geodesic_graph.hpp"
#include "lef/rational.hpp"

namespace lef_test {

inline std::string graph_path(const std::string& file) {
    return std::string(LEF_GRAPH_DATA_DIR) + "/" + file;
}

inline lef::GeodesicGraph load(const std::string& file) {
    return lef::load_graph(graph_path(file));
}

inline const std::vector<std::string>& bundled_graphs() {
    static const std::vector<std::string> files = {
        "k4.graph", "k33.graph", "petersen.graph", "cube3.graph", "circulant12.graph"};
    return files;
}

// Independent oracle for tr(T^m): direct enumeration of rooted closed
// non-backtracking walks, no matrices involved.
inline lef::Int brute_closed_walks(const lef::GeodesicGraph& g, int m) {
    lef::Int count = 0;
    std::vector<int> walk;
    auto extend = [&](auto&& self, int start) -> void {
        int last = walk.back();
        if (static_cast<int>(walk.size()) == m) {
            if (g.head[last] == g.tail[start] && last != g.rev(start)) ++count;
            return;
        }
        for (int f : g.out[g.head[last]]) {
            if (f == g.rev(last)) continue;
            walk.push_back(f);
            self(self, start);
            walk.pop_back();
        }
    };
    for (int e = 0; e < static_cast<int>(g.directed_edges()); ++e) {
        walk.assign(1, e);
        extend(extend, e);
    }
    return count;
}

}  // namespace lef_test
