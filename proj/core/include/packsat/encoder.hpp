#pragma once

// CNF generators for packing-coloring diamond instances: the direct encoding,
// the plus encoding with regional variables, at-least-one-distance clauses,
// layered symmetry breaking and chessboard fixing.

#include <array>
#include <span>
#include <vector>

#include "packsat/cnf.hpp"
#include "packsat/grid.hpp"
#include "packsat/varmap.hpp"

namespace packsat {

struct Region {
    int id = 0;
    Vertex center;
    std::array<Vertex, 5> members;  // D_1(center), canonical order
};

// Max distance from v to any member of S.
int region_vertex_delta(Vertex v, const Region& s);
// Max distance between members of two regions.
int region_region_delta(const Region& a, const Region& b);

// Disjoint plus-shaped regions packed around the center: centers are the
// lattice points a*(1,-2) + b*(2,1) with l1 norm <= r-1, ordered by
// (norm, x, y). Requires r >= 1.
std::vector<Region> place_regions(int r);

struct EncodingOptions {
    Variant variant = Variant::direct;
    bool alod = false;
    std::vector<int> sym_colors;
    bool chessboard = false;
};

struct Encoding {
    Formula formula;
    VarMap vars;
    std::vector<Region> regions;  // empty for the direct variant
};

Encoding encode_direct(int r, int k, int c);
// Regional encoding for colors >= 4; falls back to the direct clause set when
// k < 4 or no region fits (the regional variable block is then empty).
Encoding encode_plus(int r, int k, int c);
// Base variant plus the requested optional clause groups, in the order
// alod, symmetry, chessboard.
Encoding encode(int r, int k, int c, const EncodingOptions& opts);

// Appends one clause per vertex v: the color-1 literals of D_1(v) clipped to
// the diamond, pivot vertex first.
void add_alod(Formula& f, const VarMap& vars);

// Appends layered symmetry-breaking clauses. Layer 0 contributes unit
// clauses excluding color t from the non-octant part of its half-diamond;
// later layers widen each unit with the octant literals of all layer colors
// up to and including their own.
void add_symmetry_layers(Formula& f, const VarMap& vars, std::span<const int> layer_colors);

// Default layer colors: k down to max(k-5, 1).
std::vector<int> default_sym_colors(int k);

// Unit clauses fixing color 1 on the odd-parity class (the class that
// excludes the center). Rejects instances whose center color is 1.
void apply_chessboard(Formula& f, const VarMap& vars);

// Number of unordered vertex pairs of D_r at distance in (0, t], computed by
// offset enumeration (used as the fast route; tests cross-check it against a
// pair scan).
int64_t amod_count(int r, int t);

enum class PairCoverage { region_vertex, region_region, within_region, residual };

// Which mechanism of the plus encoding forbids u and v both taking color t.
// Requires 0 < d(u,v) <= t and t >= 4.
PairCoverage pair_coverage(Vertex u, Vertex v, int t, const std::vector<Region>& regions);

}  // namespace packsat
