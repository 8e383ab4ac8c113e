#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "graph.hpp"

namespace ordeg {

// The 8-vertex, 3-regular, diameter-2 seed graph used by the product
// constructions. Vertices are pairs (i,j) listed in a fixed order; ids are
// indexes into kG8Vertices.
extern const std::array<std::pair<std::uint32_t, std::uint32_t>, 8> kG8Vertices;

Graph g8();

// The bijection applied across every arc of the complete graph in kg8().
const std::array<Vertex, 8>& g8_phi();

// The four bijections applied across every arc of the outer complete graph
// in kkg8(), as permutations of G_8 ids.
const std::array<std::array<Vertex, 8>, 4>& g8_psi_tables();

// One bijection table per arc per level. Arcs orient each base edge exactly
// once; tables[arc][level] is a permutation of 0..|V(G2)|-1.
struct StarSpec {
    Graph base;
    std::vector<Edge> arcs;
    std::uint32_t multiplicity = 1;
    std::vector<std::vector<std::vector<Vertex>>> tables;
};

// Product on V(base) x V(g2), id (u, v) = u*|V(g2)| + v. Same-u copies keep
// the g2 edges; arc (u, w) adds (u,v) ~ (w, table(v)) for every level.
// Coinciding images across levels collapse to one edge.
Graph multiple_star_product(const StarSpec& spec, const Graph& g2);

// multiplicity-1 special case.
Graph star_product(const StarSpec& spec, const Graph& g2);

// Orthogonality graph on the projective points of GF(q)^3: order q^2+q+1,
// max degree q+1, diameter 2. The q+1 self-orthogonal points have degree q.
Graph brown_field(std::uint32_t q);

// Orthogonality graph on the projective points of (Z/nZ)^3. For
// n = prod p^k: order prod (p^2k + p^2k-1 + p^2k-2), max degree
// prod (p^k + p^k-1), diameter 2.
Graph brown_ring(std::uint32_t n);

struct DuplicationPlan {
    Vertex target = 0;
    std::uint32_t copies = 0;
    bool clique = false;  // also join copies and target mutually
};

Vertex lowest_min_degree_vertex(const Graph& g);

// Adds plan.copies new vertices, each adjacent to exactly the neighborhood
// of the target. Keeps diameter at most 2 when the base has diameter at
// most 2; new order = base order + copies.
Graph duplicate_vertices(const Graph& base, const DuplicationPlan& plan);

// complete(n) star product with G_8 via g8_phi(): order 8n, (n+2)-regular,
// diameter 2 for n >= 3.
Graph kg8(std::uint32_t n);

// complete(a) 4-multiple star product with kg8(b) via g8_psi_tables():
// order 8ab, (4a+b-2)-regular, diameter 2 for b >= 3.
Graph kkg8(std::uint32_t a, std::uint32_t b);

struct SubsetAdjacencyReport {
    // A, B, C, D as sorted G_8 id sets.
    std::array<std::array<Vertex, 4>, 4> subsets{};
    bool ab_partitions = false;  // A and B partition V(G_8)
    bool cd_partitions = false;  // C and D partition V(G_8)
    bool c_adjacent_d = false;   // every C vertex has a neighbor in D and vice versa
    bool a_covers_c = false;     // the four psi images of each A vertex are exactly C
    bool b_covers_d = false;     // the four psi images of each B vertex are exactly D
    bool all_pass() const { return ab_partitions && cd_partitions && c_adjacent_d && a_covers_c && b_covers_d; }
};

// Exhaustively checks the subset machinery the diameter-2 argument for
// kkg8 rests on.
SubsetAdjacencyReport verify_prop1_machinery();

}  // namespace ordeg
