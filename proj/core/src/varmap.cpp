#include "packsat/varmap.hpp"

#include <stdexcept>

namespace packsat {

VarMap::VarMap(int r, int k) : k_(k), radius_(r), vertices_(diamond_vertices(r))
{
    if (k < 1) throw std::invalid_argument("k must be positive");
    index_.reserve(vertices_.size());
    for (size_t i = 0; i < vertices_.size(); ++i) index_[vertices_[i]] = int(i);
}

void VarMap::add_regions(int num_regions)
{
    if (num_regions < 0) throw std::invalid_argument("negative region count");
    if (k_ < 4 && num_regions > 0)
        throw std::invalid_argument("regional variables need k >= 4");
    num_regions_ = num_regions;
}

int VarMap::num_vars() const
{
    return num_vertex_vars() + num_regions_ * (k_ >= 4 ? k_ - 3 : 0);
}

int VarMap::var_of_vertex(Vertex v, int t) const
{
    auto it = index_.find(v);
    if (it == index_.end()) throw std::out_of_range("vertex not registered in VarMap");
    if (t < 1 || t > k_) throw std::out_of_range("color not registered in VarMap");
    return it->second * k_ + t;
}

int VarMap::var_of_region(int region_id, int t) const
{
    if (region_id < 0 || region_id >= num_regions_)
        throw std::out_of_range("region not registered in VarMap");
    if (t < 4 || t > k_) throw std::out_of_range("regional variables exist for colors 4..k only");
    return num_vertex_vars() + region_id * (k_ - 3) + (t - 4) + 1;
}

std::pair<Vertex, int> VarMap::vertex_of_var(int var) const
{
    if (!is_vertex_var(var)) throw std::out_of_range("not a vertex variable");
    int idx = (var - 1) / k_;
    int t = (var - 1) % k_ + 1;
    return {vertices_[size_t(idx)], t};
}

std::pair<int, int> VarMap::region_of_var(int var) const
{
    int base = num_vertex_vars();
    if (var <= base || var > num_vars()) throw std::out_of_range("not a regional variable");
    int off = var - base - 1;
    return {off / (k_ - 3), off % (k_ - 3) + 4};
}

}  // namespace packsat
