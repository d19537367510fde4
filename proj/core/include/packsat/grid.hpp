#pragma once

// Geometry of l1 diamonds in the integer grid: enumeration, distance,
// dihedral symmetries and packing-coloring validation.

#include <array>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace packsat {

struct Vertex {
    int x = 0;
    int y = 0;

    friend bool operator==(Vertex a, Vertex b) { return a.x == b.x && a.y == b.y; }
    // Canonical order: lexicographic by (x, y). Variable numbering and all
    // serialized fixtures depend on this order.
    friend auto operator<=>(Vertex a, Vertex b)
    {
        if (a.x != b.x) return a.x <=> b.x;
        return a.y <=> b.y;
    }
};

struct VertexHash {
    size_t operator()(Vertex v) const
    {
        return std::hash<int64_t>()((int64_t(v.x) << 32) ^ uint32_t(v.y));
    }
};

inline int l1_distance(Vertex u, Vertex v)
{
    return std::abs(u.x - v.x) + std::abs(u.y - v.y);
}

inline int l1_norm(Vertex v) { return std::abs(v.x) + std::abs(v.y); }

// Number of grid points with |x|+|y| <= r.
inline int64_t diamond_size(int r) { return 2 * int64_t(r) * r + 2 * r + 1; }

// All vertices of D_r in canonical order.
std::vector<Vertex> diamond_vertices(int r);

// Orbit of v under the dihedral group of the diamond (<= 8 distinct points),
// sorted canonically.
std::vector<Vertex> dihedral_images(Vertex v);

// The 8 group elements as coordinate maps, identity first.
std::array<Vertex, 8> dihedral_transforms(Vertex v);

// Representative octant for symmetry breaking: x >= 0 and y >= x.
inline bool in_fundamental_octant(Vertex v) { return v.x >= 0 && v.y >= v.x; }

// A total color assignment on D_r with colors in 1..k.
class Coloring {
public:
    Coloring(int r, int k);

    int radius() const { return r_; }
    int colors() const { return k_; }
    const std::vector<Vertex>& vertices() const { return vertices_; }

    int color(Vertex v) const;
    void set_color(Vertex v, int c);

    // Line format "x y color", one vertex per line in canonical order.
    std::string to_text() const;
    static Coloring from_text(const std::string& text, int r, int k);

    std::string to_json() const;
    static Coloring from_json(const std::string& json_text);

private:
    int index_of(Vertex v) const;

    int r_;
    int k_;
    std::vector<Vertex> vertices_;
    std::vector<int> assignment_;  // by canonical vertex index, 0 = unset
};

struct Violation {
    Vertex u;
    Vertex v;
    int color = 0;

    friend bool operator==(const Violation&, const Violation&) = default;
};

// Empty result means valid. Otherwise the lexicographically smallest
// violating (u, v, c) with u < v in canonical order.
std::optional<Violation> verify_coloring(const Coloring& col);

}  // namespace packsat
