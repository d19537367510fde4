#pragma once

// Deterministic bijection between (vertex, color) / (region, color) pairs and
// variable ids. Vertex variables come first: id = index(v) * k + t with t in
// 1..k. Regional variables follow, ordered by (region index, color), one per
// color in 4..k.

#include <unordered_map>
#include <vector>

#include "packsat/cnf.hpp"
#include "packsat/grid.hpp"

namespace packsat {

class VarMap {
public:
    VarMap() = default;
    VarMap(int r, int k);

    // Registers num_regions regional blocks (colors 4..k each).
    void add_regions(int num_regions);

    int var_of_vertex(Vertex v, int t) const;
    int var_of_region(int region_id, int t) const;

    int vertex_count() const { return int(vertices_.size()); }
    int region_count() const { return num_regions_; }
    int num_vertex_vars() const { return vertex_count() * k_; }
    int num_vars() const;
    int colors() const { return k_; }
    int radius() const { return radius_; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    bool has_vertex(Vertex v) const { return index_.contains(v); }

    bool is_vertex_var(int var) const { return var >= 1 && var <= num_vertex_vars(); }
    // Inverse of var_of_vertex; var must be a vertex variable.
    std::pair<Vertex, int> vertex_of_var(int var) const;
    // Inverse of var_of_region; var must be a regional variable.
    std::pair<int, int> region_of_var(int var) const;

private:
    int k_ = 0;
    int radius_ = 0;
    int num_regions_ = 0;
    std::vector<Vertex> vertices_;
    std::unordered_map<Vertex, int, VertexHash> index_;
};

}  // namespace packsat
