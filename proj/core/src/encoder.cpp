#include "packsat/encoder.hpp"

#include <algorithm>
#include <stdexcept>

namespace packsat {

int region_vertex_delta(Vertex v, const Region& s)
{
    int best = 0;
    for (Vertex u : s.members) best = std::max(best, l1_distance(u, v));
    return best;
}

int region_region_delta(const Region& a, const Region& b)
{
    int best = 0;
    for (Vertex u : a.members)
        for (Vertex v : b.members) best = std::max(best, l1_distance(u, v));
    return best;
}

static Region make_region(int id, Vertex z)
{
    Region s;
    s.id = id;
    s.center = z;
    s.members = {Vertex{z.x - 1, z.y}, Vertex{z.x, z.y - 1}, Vertex{z.x, z.y},
                 Vertex{z.x, z.y + 1}, Vertex{z.x + 1, z.y}};
    return s;
}

std::vector<Region> place_regions(int r)
{
    if (r < 1) throw std::invalid_argument("place_regions needs r >= 1");
    // Generators (1,-2) and (2,1) span an index-5 sublattice whose plus
    // shapes tile the plane; clipping centers to norm <= r-1 keeps every
    // member inside D_r.
    std::vector<Vertex> centers;
    int bound = r;  // |a|,|b| beyond r cannot reach norm <= r-1
    for (int a = -bound; a <= bound; ++a)
        for (int b = -bound; b <= bound; ++b) {
            Vertex p{a + 2 * b, -2 * a + b};
            if (l1_norm(p) <= r - 1) centers.push_back(p);
        }
    std::sort(centers.begin(), centers.end(), [](Vertex a, Vertex b) {
        if (l1_norm(a) != l1_norm(b)) return l1_norm(a) < l1_norm(b);
        return a < b;
    });
    std::vector<Region> out;
    out.reserve(centers.size());
    for (size_t i = 0; i < centers.size(); ++i) out.push_back(make_region(int(i), centers[i]));
    return out;
}

int64_t amod_count(int r, int t)
{
    if (t < 1) return 0;
    // Offset route: ordered pairs (v, v+d) with both endpoints in D_r,
    // summed over nonzero offsets of norm <= t, halved.
    int64_t ordered = 0;
    for (int dx = -t; dx <= t; ++dx) {
        int rest = t - std::abs(dx);
        for (int dy = -rest; dy <= rest; ++dy) {
            if (dx == 0 && dy == 0) continue;
            for (int x = -r; x <= r; ++x) {
                if (std::abs(x + dx) > r) continue;
                int lo = std::max(-(r - std::abs(x)), -dy - (r - std::abs(x + dx)));
                int hi = std::min(r - std::abs(x), -dy + (r - std::abs(x + dx)));
                if (hi >= lo) ordered += hi - lo + 1;
            }
        }
    }
    return ordered / 2;
}

namespace {

struct PlusContext {
    const std::vector<Region>* regions;
    std::unordered_map<Vertex, int, VertexHash> region_of;

    int region_id(Vertex v) const
    {
        auto it = region_of.find(v);
        return it == region_of.end() ? -1 : it->second;
    }
};

PlusContext make_context(const std::vector<Region>& regions)
{
    PlusContext ctx;
    ctx.regions = &regions;
    for (const Region& s : regions)
        for (Vertex v : s.members) ctx.region_of[v] = s.id;
    return ctx;
}

// Region pairs within conflict range of color t: all cross pairs of members
// are at distance <= t, so one binary clause over the two region variables
// replaces them.
std::vector<std::vector<bool>> rr_matrix(const std::vector<Region>& regions, int t)
{
    size_t n = regions.size();
    std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (region_region_delta(regions[i], regions[j]) <= t) m[i][j] = m[j][i] = true;
    return m;
}

void emit_aloc(Formula& f, const VarMap& vars)
{
    for (Vertex v : vars.vertices()) {
        Clause c;
        c.reserve(size_t(vars.colors()));
        for (int t = 1; t <= vars.colors(); ++t) c.push_back(vars.var_of_vertex(v, t));
        f.add(std::move(c));
    }
}

void emit_amod_color(Formula& f, const VarMap& vars, int t)
{
    const auto& vs = vars.vertices();
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (l1_distance(vs[i], vs[j]) <= t)
                f.add({-vars.var_of_vertex(vs[i], t), -vars.var_of_vertex(vs[j], t)});
}

}  // namespace

PairCoverage pair_coverage(Vertex u, Vertex v, int t, const std::vector<Region>& regions)
{
    if (t < 4) throw std::invalid_argument("pair_coverage applies to regional colors (t >= 4)");
    int dist = l1_distance(u, v);
    if (dist == 0 || dist > t) throw std::invalid_argument("pair not in conflict range");

    auto ctx = make_context(regions);
    int ru = ctx.region_id(u);
    int rv = ctx.region_id(v);
    if (ru >= 0 && ru == rv) return PairCoverage::within_region;
    if (ru >= 0 && rv >= 0 && region_region_delta(regions[size_t(ru)], regions[size_t(rv)]) <= t)
        return PairCoverage::region_region;
    if (ru >= 0 && region_vertex_delta(v, regions[size_t(ru)]) <= t)
        return PairCoverage::region_vertex;
    if (rv >= 0 && region_vertex_delta(u, regions[size_t(rv)]) <= t)
        return PairCoverage::region_vertex;
    return PairCoverage::residual;
}

Encoding encode_direct(int r, int k, int c)
{
    if (r < 0) throw std::invalid_argument("r must be non-negative");
    if (c < 1 || c > k) throw std::invalid_argument("center color must satisfy 1 <= c <= k");
    Encoding enc{Formula{}, VarMap(r, k), {}};
    enc.formula.info = InstanceInfo{r, k, c, Variant::direct, false, {}, false};
    enc.formula.num_vars = enc.vars.num_vars();

    emit_aloc(enc.formula, enc.vars);
    for (int t = 1; t <= k; ++t) emit_amod_color(enc.formula, enc.vars, t);
    enc.formula.add({enc.vars.var_of_vertex({0, 0}, c)});
    return enc;
}

Encoding encode_plus(int r, int k, int c)
{
    if (r < 0) throw std::invalid_argument("r must be non-negative");
    if (c < 1 || c > k) throw std::invalid_argument("center color must satisfy 1 <= c <= k");
    Encoding enc{Formula{}, VarMap(r, k), {}};
    enc.formula.info = InstanceInfo{r, k, c, Variant::plus, false, {}, false};
    if (k >= 4 && r >= 1) enc.regions = place_regions(r);
    enc.vars.add_regions(int(enc.regions.size()));
    enc.formula.num_vars = enc.vars.num_vars();

    const VarMap& vars = enc.vars;
    const auto& vs = vars.vertices();
    auto ctx = make_context(enc.regions);

    emit_aloc(enc.formula, vars);
    // Colors 1..3 stay pairwise.
    for (int t = 1; t <= std::min(3, k); ++t) emit_amod_color(enc.formula, vars, t);

    for (int t = 4; t <= k; ++t) {
        auto rr = rr_matrix(enc.regions, t);

        // Membership: a colored member raises the region flag. The converse
        // definition clauses are not part of the formula; they only appear as
        // scaffolding inside re-encoding proofs.
        for (const Region& s : enc.regions)
            for (Vertex v : s.members)
                enc.formula.add({vars.var_of_region(s.id, t), -vars.var_of_vertex(v, t)});

        // Region-vertex distance clauses. Vertices belonging to a region
        // already covered by a region-region clause are skipped: membership
        // lifts them to their own region variable.
        for (const Region& s : enc.regions) {
            for (Vertex v : vs) {
                if (ctx.region_id(v) == s.id) continue;
                if (region_vertex_delta(v, s) > t) continue;
                int other = ctx.region_id(v);
                if (other >= 0 && rr[size_t(s.id)][size_t(other)]) continue;
                enc.formula.add({-vars.var_of_region(s.id, t), -vars.var_of_vertex(v, t)});
            }
        }

        // Region-region distance clauses.
        for (size_t i = 0; i < enc.regions.size(); ++i)
            for (size_t j = i + 1; j < enc.regions.size(); ++j)
                if (rr[i][j])
                    enc.formula.add({-vars.var_of_region(int(i), t), -vars.var_of_region(int(j), t)});

        // Residual pairwise clauses, including within-region pairs.
        for (size_t i = 0; i < vs.size(); ++i)
            for (size_t j = i + 1; j < vs.size(); ++j) {
                Vertex u = vs[i], v = vs[j];
                int dist = l1_distance(u, v);
                if (dist == 0 || dist > t) continue;
                int ru = ctx.region_id(u), rv = ctx.region_id(v);
                bool covered = false;
                if (ru >= 0 && ru == rv) {
                    covered = false;  // within-region pairs stay explicit
                } else {
                    if (ru >= 0 && rv >= 0 && rr[size_t(ru)][size_t(rv)]) covered = true;
                    if (!covered && ru >= 0 && region_vertex_delta(v, enc.regions[size_t(ru)]) <= t)
                        covered = true;
                    if (!covered && rv >= 0 && region_vertex_delta(u, enc.regions[size_t(rv)]) <= t)
                        covered = true;
                }
                if (!covered)
                    enc.formula.add({-vars.var_of_vertex(u, t), -vars.var_of_vertex(v, t)});
            }
    }

    enc.formula.add({vars.var_of_vertex({0, 0}, c)});
    return enc;
}

Encoding encode(int r, int k, int c, const EncodingOptions& opts)
{
    Encoding enc = opts.variant == Variant::plus ? encode_plus(r, k, c) : encode_direct(r, k, c);
    if (opts.alod) {
        add_alod(enc.formula, enc.vars);
        enc.formula.info.alod = true;
    }
    if (!opts.sym_colors.empty()) {
        add_symmetry_layers(enc.formula, enc.vars, opts.sym_colors);
        enc.formula.info.sym_colors = opts.sym_colors;
    }
    if (opts.chessboard) {
        apply_chessboard(enc.formula, enc.vars);
        enc.formula.info.chessboard = true;
    }
    return enc;
}

void add_alod(Formula& f, const VarMap& vars)
{
    static constexpr Vertex kOffsets[4] = {{-1, 0}, {0, -1}, {0, 1}, {1, 0}};
    for (Vertex v : vars.vertices()) {
        Clause c{vars.var_of_vertex(v, 1)};  // pivot first
        for (Vertex d : kOffsets) {
            Vertex n{v.x + d.x, v.y + d.y};
            if (vars.has_vertex(n)) c.push_back(vars.var_of_vertex(n, 1));
        }
        f.add(std::move(c));
    }
}

std::vector<int> default_sym_colors(int k)
{
    std::vector<int> out;
    for (int t = k; t >= std::max(k - 5, 1); --t) out.push_back(t);
    return out;
}

void add_symmetry_layers(Formula& f, const VarMap& vars, std::span<const int> layer_colors)
{
    std::vector<int> seen;
    for (int t : layer_colors) {
        if (t < 1 || t > vars.colors()) throw std::invalid_argument("layer color out of range");
        if (t / 2 > vars.radius())
            throw std::invalid_argument("layer color's half-diamond exceeds the instance radius");
        if (std::find(seen.begin(), seen.end(), t) != seen.end())
            throw std::invalid_argument("layer colors must be distinct");
        seen.push_back(t);
    }

    // Octant literals of all layers up to and including the current one;
    // appending before emitting a layer keeps the clause of layer i equal to
    // the negative unit widened over colors t_0..t_i.
    std::vector<Lit> widen;
    bool first = true;
    for (int t : layer_colors) {
        std::vector<Vertex> half = diamond_vertices(t / 2);
        for (Vertex p : half)
            if (in_fundamental_octant(p)) widen.push_back(vars.var_of_vertex(p, t));
        for (Vertex p : half) {
            if (in_fundamental_octant(p)) continue;
            Clause c{-vars.var_of_vertex(p, t)};
            if (!first) c.insert(c.end(), widen.begin(), widen.end());
            f.add(std::move(c));
        }
        first = false;
    }
}

void apply_chessboard(Formula& f, const VarMap& vars)
{
    if (f.info.c == 1)
        throw std::invalid_argument("chessboard fixing conflicts with center color 1");
    for (Vertex v : vars.vertices())
        if (((v.x + v.y) % 2 + 2) % 2 == 1) f.add({vars.var_of_vertex(v, 1)});
}

}  // namespace packsat
