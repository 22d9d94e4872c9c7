// graph.hpp
// Undirected simple graphs with the structural operations the
// domination-polynomial recurrences need, plus the parametric family
// constructors and the edge-list text format.
//
// Vertex labeling conventions (fixed so recurrence pivots and test
// fixtures are reproducible):
//   - every "center"/"hub"/"apex" vertex is index 0
//   - Path/Cycle: vertices 0..n-1 in path/cycle order
//   - Star K_{1,n}: center 0, leaves 1..n
//   - balanced K_{n,n}: first part 0..n-1, second part n..2n-1
//   - Dutch windmill: center 0, triangle i on {1+2i, 2+2i}
//   - pendant Dutch windmill: windmill labels, pendant vertex 2n+1
//   - Fan F_{m,n}: the m independent vertices 0..m-1, path m..m+n-1
//   - Gem: hub 0, path 1..n+1
//   - Gem + pendant edge: hub 0, path 1..n+1, pendant n+2
//   - triangle-on-cycle: apex 0, cycle 1..n, apex joined to 1 and 2
//   - Wheel W_n: hub 0, rim cycle 1..n-1
//   - clique composition: vertex v of the base becomes block v*t..v*t+t-1
#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "dompoly/numeric.hpp"

namespace dompoly {

class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count);

    int vertex_count() const { return n_; }
    int edge_count() const;
    bool has_edge(int u, int v) const;
    int degree(int v) const;

    // Construction-time mutation; graphs are treated as immutable values
    // once built.  Self-loops are rejected, duplicate adds are no-ops.
    void add_edge(int u, int v);

    std::vector<int> neighbors(int v) const;
    std::vector<int> closed_neighborhood(int v) const;  // N[v], sorted

    // N[v] as a bitmask; valid only while vertex_count <= 64.
    std::uint64_t closed_neighborhood_mask(int v) const;

    Graph delete_vertex(int v) const;              // G - v, indices re-compacted in order
    Graph delete_closed_neighborhood(int v) const;  // G - N[v]
    Graph contract_vertex(int v) const;             // G/v: clique on N(v), then delete v
    Graph odot(int u) const;                        // remove all edges inside N(u); u stays

    Graph compose_clique(int t) const;  // each vertex becomes a t-clique

    friend bool operator==(const Graph& a, const Graph& b) = default;

private:
    void check_vertex(int v) const;
    int n_ = 0;
    std::vector<std::uint8_t> adj_;  // n_*n_ symmetric, zero diagonal
};

Graph disjoint_union(const Graph& a, const Graph& b);
Graph join(const Graph& a, const Graph& b);  // union + all edges across

enum class FamilyKind {
    Path,
    Cycle,
    Star,
    CompleteBipartiteBalanced,
    DutchWindmill,
    PendantDutchWindmill,
    Fan,
    Gem,
    GemPlusEdge,
    TriangleOnCycle,
    Wheel,
    CliqueComposition,  // windmill base: G over n triangles, each vertex a t-clique
};

struct FamilySpec {
    FamilyKind kind = FamilyKind::Path;
    std::map<std::string, int> params;

    int param(const std::string& name) const;

    // "windmill:n=6", "fan:m=2,n=10", "kn,n:n=3", "windmill-clique:n=8,t=8"
    static FamilySpec parse(const std::string& text);
    std::string to_string() const;

    // Throws std::invalid_argument when params are missing or out of range.
    void validate() const;
    int vertex_count() const;  // of the graph this spec builds
};

const char* family_kind_name(FamilyKind kind);

// Inverse of family_kind_name; accepts the same aliases as
// FamilySpec::parse ("knn", "friendship", "gem+edge", ...).
// Throws parse_error for unknown names.
FamilyKind family_kind_from_name(const std::string& name);

Graph build_family(const FamilySpec& spec);

// Edge-list text format: first line "n m", then m lines "u v" (0-based).
// Rejects self-loops, duplicate edges (either orientation) and
// out-of-range endpoints.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

}  // namespace dompoly
