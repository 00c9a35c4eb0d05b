#include "discharge.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "census.hpp"
#include "errors.hpp"
#include "patterns.hpp"

namespace trg {

namespace {

std::vector<Block> build_blocks(const Graph& g) {
    std::vector<Block> triangles_out, k4m_out;
    const Pattern& k4m = pattern("K4_minus");
    std::set<std::array<int, 3>> covered_triangles;
    for (const Copy& c : enumerate_copies(g, k4m).copies) {
        Block b;
        b.is_k4_minus = true;
        // Pattern degrees: 0 and 1 are the shared-edge endpoints.
        int y = c.map[0], z = c.map[1], x1 = c.map[2], x2 = c.map[3];
        if (y > z) std::swap(y, z);
        if (x1 > x2) std::swap(x1, x2);
        b.y = y;
        b.z = z;
        b.x1 = x1;
        b.x2 = x2;
        b.vertices = {y, z, x1, x2};
        std::sort(b.vertices.begin(), b.vertices.end());
        b.edge_indices = copy_edge_indices(g, k4m, c);
        for (int x : {x1, x2}) {
            std::array<int, 3> t = {y, z, x};
            std::sort(t.begin(), t.end());
            covered_triangles.insert(t);
        }
        k4m_out.push_back(std::move(b));
    }
    for (const auto& t : all_triangles(g)) {
        if (covered_triangles.count(t)) continue;
        Block b;
        b.vertices = {t[0], t[1], t[2]};
        b.edge_indices = {g.edge_index(t[0], t[1]), g.edge_index(t[0], t[2]),
                          g.edge_index(t[1], t[2])};
        std::sort(b.edge_indices.begin(), b.edge_indices.end());
        triangles_out.push_back(std::move(b));
    }
    auto by_vertices = [](const Block& a, const Block& b) { return a.vertices < b.vertices; };
    std::sort(triangles_out.begin(), triangles_out.end(), by_vertices);
    std::sort(k4m_out.begin(), k4m_out.end(), by_vertices);
    std::vector<Block> blocks = std::move(triangles_out);
    blocks.insert(blocks.end(), k4m_out.begin(), k4m_out.end());
    return blocks;
}

std::string serialize_instance(const Graph& g, const std::string& what) {
    std::ostringstream os;
    os << what << "; instance: " << g.n() << " vertices, edges";
    for (const Edge& e : g.edges()) os << ' ' << e.u << '-' << e.v;
    return os.str();
}

} // namespace

BlockWeights assign_block_weights(const Graph& g) {
    if (contains_k4_f2_f3(g)) {
        throw precondition_error("discharging requires a K4/F2/F3-free collage");
    }
    BlockWeights out;
    out.blocks = build_blocks(g);
    if (out.blocks.empty()) {
        throw precondition_error("discharging requires at least one triangle");
    }
    out.weight.assign(out.blocks.size(), Rat(0));

    std::vector<int> block_of_edge(g.m(), -1);
    out.blocks_of_vertex.assign(g.n(), {});
    for (std::size_t bi = 0; bi < out.blocks.size(); ++bi) {
        for (int e : out.blocks[bi].edge_indices) {
            if (block_of_edge[e] != -1) {
                throw falsification_error(
                    serialize_instance(g, "blocks share an edge despite K4/F2/F3 freeness"));
            }
            block_of_edge[e] = static_cast<int>(bi);
        }
        for (int v : out.blocks[bi].vertices) {
            out.blocks_of_vertex[v].push_back(static_cast<int>(bi));
        }
    }

    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) > 0) out.support.push_back(v);

    // Stage 1: 5 on vertices, -3 on edges.
    std::vector<Rat> vw(g.n(), Rat(0)), ew(g.m(), Rat(-3));
    for (int v : out.support) vw[v] = Rat(5);
    auto snap = [&](int stage) {
        out.stages.push_back({stage, vw, ew, out.weight});
    };
    snap(1);

    // Stages 2+3: vertices in blocks discharge to one block, or 5/2 to each
    // of the two sigma-least blocks containing them.
    for (int v : out.support) {
        const auto& bl = out.blocks_of_vertex[v];
        if (bl.empty()) continue;
        if (bl.size() == 1) {
            out.weight[bl[0]] += vw[v];
        } else {
            Rat half = vw[v] / Rat(2);
            out.weight[bl[0]] += half;
            out.weight[bl[1]] += half;
        }
        vw[v] = Rat(0);
    }
    snap(2);
    snap(3);

    // Stage 4: block edges discharge into their block.
    for (int e = 0; e < g.m(); ++e) {
        if (block_of_edge[e] >= 0) {
            out.weight[block_of_edge[e]] += ew[e];
            ew[e] = Rat(0);
        }
    }
    snap(4);

    // Stage 5: blockless vertices split their weight over incident edges
    // (all of which are blockless too).
    for (int v : out.support) {
        if (!out.blocks_of_vertex[v].empty()) continue;
        Rat share = vw[v] / Rat(g.degree(v));
        for (int u : g.neighbours(v)) {
            ew[g.edge_index(u, v)] += share;
        }
        vw[v] = Rat(0);
    }
    snap(5);

    // Stage 6: blockless edges discharge toward their endpoints' blocks.
    for (int e = 0; e < g.m(); ++e) {
        if (block_of_edge[e] >= 0) continue;
        const Edge& edge = g.edges()[e];
        const auto& ba = out.blocks_of_vertex[edge.u];
        const auto& bb = out.blocks_of_vertex[edge.v];
        if (ba.empty() && bb.empty()) {
            throw falsification_error(
                serialize_instance(g, "blockless edge with no endpoint in a block"));
        }
        if (ba.empty() || bb.empty()) {
            const auto& target = ba.empty() ? bb : ba;
            Rat share = ew[e] / Rat(static_cast<std::int64_t>(target.size()));
            for (int bi : target) out.weight[bi] += share;
        } else {
            for (const auto* target : {&ba, &bb}) {
                Rat share = ew[e] / Rat(2 * static_cast<std::int64_t>(target->size()));
                for (int bi : *target) out.weight[bi] += share;
            }
        }
        ew[e] = Rat(0);
    }
    snap(6);

    // Conservation: everything discharged, totals preserved.
    Rat expected = Rat(5) * Rat(static_cast<std::int64_t>(out.support.size())) -
                   Rat(3) * Rat(g.m());
    if (out.total() != expected) {
        throw falsification_error(serialize_instance(g, "block weights fail conservation"));
    }
    return out;
}

std::optional<int> positive_block(const BlockWeights& w) {
    for (std::size_t i = 0; i < w.weight.size(); ++i) {
        if (w.weight[i] > Rat(0)) return static_cast<int>(i);
    }
    return std::nullopt;
}

namespace {

// Edge indices lying on the 4-cycle of some F0_minus copy.
std::vector<std::uint8_t> f0_cycle_membership(const Graph& g) {
    std::vector<std::uint8_t> in_cycle(g.m(), 0);
    const Pattern& f0m = pattern("F0_minus");
    // The copy's unique 4-cycle visits pattern vertices 0-1-3-2.
    static constexpr int kCycle[4][2] = {{0, 1}, {1, 3}, {3, 2}, {2, 0}};
    for (const Copy& c : enumerate_copies(g, f0m).copies) {
        for (const auto& pe : kCycle) {
            in_cycle[g.edge_index(c.map[pe[0]], c.map[pe[1]])] = 1;
        }
    }
    return in_cycle;
}

} // namespace

std::vector<Edge> removable_edges(const Graph& g, const BlockWeights& w, int block_index) {
    const Block& x = w.blocks[block_index];
    std::vector<std::uint8_t> in_cycle = f0_cycle_membership(g);
    if (!x.is_k4_minus) {
        for (int e : x.edge_indices) {
            if (!in_cycle[e]) return {g.edges()[e]};
        }
        throw falsification_error(serialize_instance(
            g, "triangle block with every edge on an F0_minus 4-cycle"));
    }
    for (int xi : {x.x1, x.x2}) {
        int e = g.edge_index(xi, x.y);
        int f = g.edge_index(xi, x.z);
        if (!in_cycle[e] && !in_cycle[f]) {
            return {Edge(xi, x.y), Edge(xi, x.z)};
        }
    }
    throw falsification_error(serialize_instance(
        g, "K4_minus block with both edge pairs on F0_minus 4-cycles"));
}

namespace {

constexpr std::uint8_t kRed = 0, kBlue = 1, kUnsetColour = 2;

// Colour the edges of one collage (given as edges of `base`, the local
// collage graph) into `colour`, indexed by base edge index.
void colour_collage_rec(const Graph& base, const std::vector<Edge>& edges,
                        std::vector<std::uint8_t>& colour) {
    Graph gs = Graph::from_edges(base.n(), edges);
    if (all_triangles(gs).empty()) {
        for (const Edge& e : edges) colour[base.edge_index(e.u, e.v)] = kBlue;
        return;
    }

    BlockWeights weights = assign_block_weights(gs);
    auto xi = positive_block(weights);
    if (!xi) {
        throw falsification_error(
            "no positive block in a sub-5/3-density collage; edges: " + write_edge_list(gs));
    }
    const Block x = weights.blocks[*xi];
    std::vector<Edge> removed = removable_edges(gs, weights, *xi);

    std::vector<Edge> rest;
    for (const Edge& e : edges) {
        if (std::find(removed.begin(), removed.end(), e) == removed.end()) rest.push_back(e);
    }
    for (const Collage& part : decompose_edges(base.n(), rest)) {
        std::vector<Edge> part_edges;
        for (const Edge& le : part.local.edges()) {
            part_edges.emplace_back(part.local_to_host[le.u], part.local_to_host[le.v]);
        }
        colour_collage_rec(base, part_edges, colour);
    }

    auto col_of = [&](int u, int v) { return colour[base.edge_index(u, v)]; };
    if (!x.is_k4_minus) {
        // Removed one triangle edge: blue unless the other two are blue.
        const Edge e = removed[0];
        int other = -1;
        for (int v : x.vertices) {
            if (v != e.u && v != e.v) other = v;
        }
        bool both_blue = col_of(e.u, other) == kBlue && col_of(e.v, other) == kBlue;
        colour[base.edge_index(e.u, e.v)] = both_blue ? kRed : kBlue;
    } else {
        // Removed {e1, f1} = {x_i y, x_i z}; red/blue unless that makes a
        // crrbb with the opposite pair, in which case swap.
        int xi_vertex = removed[0].u == x.y || removed[0].u == x.z ? removed[0].v : removed[0].u;
        int xj = xi_vertex == x.x1 ? x.x2 : x.x1;
        std::uint8_t e2 = col_of(xj, x.y);
        std::uint8_t f2 = col_of(xj, x.z);
        std::uint8_t e1 = kRed, f1 = kBlue;
        if (e2 == kRed && f2 == kBlue) {
            e1 = kBlue;
            f1 = kRed;
        }
        colour[base.edge_index(xi_vertex, x.y)] = e1;
        colour[base.edge_index(xi_vertex, x.z)] = f1;
    }
}

} // namespace

TwoColouring very_good_colouring(const Collage& c) {
    auto base = std::make_shared<Graph>(c.local);
    std::vector<std::uint8_t> colour(base->m(), kUnsetColour);
    colour_collage_rec(*base, base->edges(), colour);

    TwoColouring out(base);
    for (int e = 0; e < base->m(); ++e) {
        if (colour[e] == kUnsetColour) {
            throw falsification_error("very good colouring left an edge unset; edges: " +
                                      write_edge_list(*base));
        }
        out.set(e, colour[e] == kRed ? Colour::red : Colour::blue);
    }
    GoodnessReport rep = is_t_good(out, 1);
    if (!rep.good) {
        std::ostringstream os;
        os << "very good colouring failed verification (condition " << rep.violated_condition
           << "); edges: " << write_edge_list(*base) << "; colouring: " << write_colouring(out);
        throw falsification_error(os.str());
    }
    return out;
}

} // namespace trg
