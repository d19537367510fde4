#include "packsat/grid.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace packsat {

std::vector<Vertex> diamond_vertices(int r)
{
    if (r < 0) throw std::invalid_argument("diamond radius must be non-negative");
    std::vector<Vertex> out;
    out.reserve(size_t(diamond_size(r)));
    for (int x = -r; x <= r; ++x) {
        int span = r - std::abs(x);
        for (int y = -span; y <= span; ++y) out.push_back({x, y});
    }
    return out;  // x-major loop yields (x, y) lexicographic order
}

std::array<Vertex, 8> dihedral_transforms(Vertex v)
{
    int x = v.x, y = v.y;
    return {{{x, y}, {-x, y}, {x, -y}, {-x, -y}, {y, x}, {-y, x}, {y, -x}, {-y, -x}}};
}

std::vector<Vertex> dihedral_images(Vertex v)
{
    auto all = dihedral_transforms(v);
    std::vector<Vertex> out(all.begin(), all.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Coloring::Coloring(int r, int k) : r_(r), k_(k), vertices_(diamond_vertices(r))
{
    if (k < 1) throw std::invalid_argument("coloring needs at least one color");
    assignment_.assign(vertices_.size(), 0);
}

int Coloring::index_of(Vertex v) const
{
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || !(*it == v))
        throw std::out_of_range("vertex outside the diamond");
    return int(it - vertices_.begin());
}

int Coloring::color(Vertex v) const
{
    int c = assignment_[size_t(index_of(v))];
    if (c == 0) throw std::logic_error("vertex has no color assigned");
    return c;
}

void Coloring::set_color(Vertex v, int c)
{
    if (c < 1 || c > k_) throw std::invalid_argument("color out of range 1..k");
    assignment_[size_t(index_of(v))] = c;
}

std::string Coloring::to_text() const
{
    std::ostringstream os;
    for (size_t i = 0; i < vertices_.size(); ++i) {
        if (assignment_[i] == 0) throw std::logic_error("partial coloring cannot be serialized");
        os << vertices_[i].x << ' ' << vertices_[i].y << ' ' << assignment_[i] << '\n';
    }
    return os.str();
}

Coloring Coloring::from_text(const std::string& text, int r, int k)
{
    Coloring col(r, k);
    std::istringstream is(text);
    int x, y, c;
    size_t n = 0;
    while (is >> x >> y >> c) {
        col.set_color({x, y}, c);
        ++n;
    }
    if (n != col.vertices_.size()) throw std::runtime_error("coloring file does not cover the diamond");
    return col;
}

std::string Coloring::to_json() const
{
    nlohmann::ordered_json j;
    j["r"] = r_;
    j["k"] = k_;
    auto cells = nlohmann::ordered_json::array();
    for (size_t i = 0; i < vertices_.size(); ++i) {
        if (assignment_[i] == 0) throw std::logic_error("partial coloring cannot be serialized");
        cells.push_back({vertices_[i].x, vertices_[i].y, assignment_[i]});
    }
    j["cells"] = std::move(cells);
    return j.dump();
}

Coloring Coloring::from_json(const std::string& json_text)
{
    auto j = nlohmann::json::parse(json_text);
    Coloring col(j.at("r").get<int>(), j.at("k").get<int>());
    for (const auto& cell : j.at("cells"))
        col.set_color({cell.at(0).get<int>(), cell.at(1).get<int>()}, cell.at(2).get<int>());
    for (int c : col.assignment_)
        if (c == 0) throw std::runtime_error("coloring json does not cover the diamond");
    return col;
}

std::optional<Violation> verify_coloring(const Coloring& col)
{
    const auto& vs = col.vertices();
    // Bucket by color, then scan pairs per bucket; the witness is still the
    // smallest (u, v) pair because buckets preserve canonical order.
    int k = col.colors();
    std::vector<std::vector<Vertex>> by_color(size_t(k) + 1);
    for (Vertex v : vs) by_color[size_t(col.color(v))].push_back(v);

    std::optional<Violation> best;
    for (int c = 1; c <= k; ++c) {
        const auto& bucket = by_color[size_t(c)];
        for (size_t i = 0; i < bucket.size(); ++i)
            for (size_t j = i + 1; j < bucket.size(); ++j)
                if (l1_distance(bucket[i], bucket[j]) <= c) {
                    Violation cand{bucket[i], bucket[j], c};
                    if (!best || std::tie(cand.u, cand.v, cand.color) <
                                     std::tie(best->u, best->v, best->color))
                        best = cand;
                }
    }
    return best;
}

}  // namespace packsat
