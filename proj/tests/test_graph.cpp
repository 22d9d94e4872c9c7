#include <doctest.h>

#include <sstream>
#include <stdexcept>
#include <vector>

#include "dompoly/graph.hpp"

using namespace dompoly;

namespace {

Graph path_graph(int n) { return build_family({FamilyKind::Path, {{"n", n}}}); }
Graph cycle_graph(int n) { return build_family({FamilyKind::Cycle, {{"n", n}}}); }

int degree_sum(const Graph& g) {
    int sum = 0;
    for (int v = 0; v < g.vertex_count(); ++v) sum += g.degree(v);
    return sum;
}

}  // namespace

TEST_CASE("edges are undirected, deduplicated and loop-free") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 0);
    CHECK(g.edge_count() == 1);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 4), std::out_of_range);
    CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
}

TEST_CASE("neighborhoods are sorted and masks agree") {
    Graph g(5);
    g.add_edge(3, 1);
    g.add_edge(3, 0);
    g.add_edge(3, 4);
    CHECK(g.neighbors(3) == std::vector<int>{0, 1, 4});
    CHECK(g.closed_neighborhood(3) == std::vector<int>{0, 1, 3, 4});
    CHECK(g.degree(3) == 3);
    CHECK(g.closed_neighborhood_mask(3) == 0b11011u);
    CHECK(g.closed_neighborhood_mask(2) == 0b00100u);
}

TEST_CASE("delete_vertex compacts indices in order") {
    const Graph p3 = path_graph(3);  // 0-1-2
    const Graph g = p3.delete_vertex(1);
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 0);
    const Graph h = p3.delete_vertex(0);  // old 1,2 become 0,1
    CHECK(h.edge_count() == 1);
    CHECK(h.has_edge(0, 1));
}

TEST_CASE("delete_closed_neighborhood removes N[v]") {
    const Graph p4 = path_graph(4);
    const Graph g = p4.delete_closed_neighborhood(1);  // drops 0,1,2
    CHECK(g.vertex_count() == 1);
    CHECK(p4.delete_closed_neighborhood(0).vertex_count() == 2);
}

TEST_CASE("contract_vertex builds a clique on the neighborhood") {
    const Graph c4 = cycle_graph(4);
    const Graph g = c4.contract_vertex(0);  // neighbors 1,3 get joined
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);  // K_3
    const Graph p3 = path_graph(3);
    const Graph h = p3.contract_vertex(1);
    CHECK(h.vertex_count() == 2);
    CHECK(h.edge_count() == 1);
}

TEST_CASE("odot removes the edges running between neighbors") {
    // edges incident to the pivot survive; only neighbor-neighbor edges go
    const Graph windmill = build_family({FamilyKind::DutchWindmill, {{"n", 2}}});
    const Graph w = windmill.odot(0);
    CHECK(w.vertex_count() == 5);
    CHECK(w.edge_count() == 4);  // both blade edges removed, spokes kept
    CHECK(w.degree(0) == 4);
    CHECK_FALSE(w.has_edge(1, 2));
    CHECK_FALSE(w.has_edge(3, 4));
    const Graph star3 = build_family({FamilyKind::Star, {{"n", 3}}});
    CHECK(star3.odot(0) == star3);  // leaves are already independent
    CHECK(star3.odot(1) == star3);  // a leaf has one neighbor, no pairs
    const Graph c4 = cycle_graph(4);
    CHECK(c4.odot(0) == c4);  // 1 and 3 are not adjacent in C4
}

TEST_CASE("disjoint_union and join") {
    const Graph p2 = path_graph(2);
    const Graph p3 = path_graph(3);
    const Graph u = disjoint_union(p2, p3);
    CHECK(u.vertex_count() == 5);
    CHECK(u.edge_count() == 3);
    CHECK(u.has_edge(0, 1));
    CHECK(u.has_edge(2, 3));
    CHECK_FALSE(u.has_edge(1, 2));
    const Graph j = join(p2, p3);
    CHECK(j.vertex_count() == 5);
    CHECK(j.edge_count() == 1 + 2 + 2 * 3);
    // join(K_1, empty_n) is the star
    const Graph star = join(Graph(1), Graph(4));
    CHECK(star == build_family({FamilyKind::Star, {{"n", 4}}}));
}

TEST_CASE("compose_clique is the lexicographic product with a clique") {
    const Graph p2 = path_graph(2);
    const Graph k4 = p2.compose_clique(2);
    CHECK(k4.vertex_count() == 4);
    CHECK(k4.edge_count() == 6);
    const Graph p3c2 = path_graph(3).compose_clique(2);
    CHECK(p3c2.vertex_count() == 6);
    // blocks {0,1},{2,3},{4,5}: inside edges 3, between adjacent blocks 2*4
    CHECK(p3c2.edge_count() == 3 + 8);
    CHECK(p3c2.has_edge(0, 1));
    CHECK(p3c2.has_edge(1, 2));
    CHECK_FALSE(p3c2.has_edge(0, 4));
    CHECK(path_graph(3).compose_clique(1) == path_graph(3));
    CHECK_THROWS_AS(p2.compose_clique(0), std::invalid_argument);
}

TEST_CASE("family shapes and labeling conventions") {
    // centers and hubs sit at index 0
    const Graph star = build_family({FamilyKind::Star, {{"n", 5}}});
    CHECK(star.vertex_count() == 6);
    CHECK(star.degree(0) == 5);

    // parts {0, 1} and {2, 3}: a 4-cycle up to relabeling
    const Graph knn = build_family({FamilyKind::CompleteBipartiteBalanced, {{"n", 2}}});
    CHECK(knn.vertex_count() == 4);
    CHECK(knn.edge_count() == 4);
    for (int v = 0; v < 4; ++v) CHECK(knn.degree(v) == 2);
    CHECK_FALSE(knn.has_edge(0, 1));
    CHECK_FALSE(knn.has_edge(2, 3));
    CHECK(knn.has_edge(0, 2));
    CHECK(knn.has_edge(1, 3));

    const Graph windmill = build_family({FamilyKind::DutchWindmill, {{"n", 2}}});
    CHECK(windmill.vertex_count() == 5);
    CHECK(windmill.edge_count() == 6);
    CHECK(windmill.degree(0) == 4);
    CHECK(windmill.has_edge(1, 2));
    CHECK(windmill.has_edge(3, 4));
    CHECK_FALSE(windmill.has_edge(2, 3));

    const Graph pendant = build_family({FamilyKind::PendantDutchWindmill, {{"n", 1}}});
    CHECK(pendant.vertex_count() == 4);
    CHECK(pendant.edge_count() == 4);
    CHECK(pendant.degree(3) == 1);
    CHECK(pendant.has_edge(0, 3));

    const Graph fan = build_family({FamilyKind::Fan, {{"m", 2}, {"n", 3}}});
    CHECK(fan.vertex_count() == 5);
    CHECK(fan.edge_count() == 2 + 6);
    CHECK_FALSE(fan.has_edge(0, 1));
    CHECK(fan.degree(0) == 3);

    const Graph gem = build_family({FamilyKind::Gem, {{"n", 2}}});
    CHECK(gem.vertex_count() == 4);
    CHECK(gem.degree(0) == 3);
    CHECK(gem.edge_count() == 3 + 2);

    const Graph gem_edge = build_family({FamilyKind::GemPlusEdge, {{"n", 1}}});
    CHECK(gem_edge.vertex_count() == 4);
    CHECK(gem_edge.degree(3) == 1);

    const Graph toc = build_family({FamilyKind::TriangleOnCycle, {{"n", 3}}});
    CHECK(toc.vertex_count() == 4);
    CHECK(toc.edge_count() == 5);
    CHECK(toc.has_edge(0, 1));
    CHECK(toc.has_edge(0, 2));
    CHECK_FALSE(toc.has_edge(0, 3));

    const Graph w4 = build_family({FamilyKind::Wheel, {{"n", 4}}});
    CHECK(w4.vertex_count() == 4);
    CHECK(w4.edge_count() == 6);  // W_4 = K_4

    const Graph wc = build_family({FamilyKind::CliqueComposition, {{"n", 1}, {"t", 2}}});
    CHECK(wc.vertex_count() == 6);  // K_3 with every vertex doubled = K_6
    CHECK(wc.edge_count() == 15);

    CHECK(degree_sum(w4) == 2 * w4.edge_count());
}

TEST_CASE("family spec parsing, aliases, round trips") {
    CHECK(FamilySpec::parse("kn,n:n=3").kind == FamilyKind::CompleteBipartiteBalanced);
    CHECK(FamilySpec::parse("knn:n=3").kind == FamilyKind::CompleteBipartiteBalanced);
    CHECK(FamilySpec::parse("complete-bipartite:n=3").kind ==
          FamilyKind::CompleteBipartiteBalanced);
    CHECK(FamilySpec::parse("friendship:n=2").kind == FamilyKind::DutchWindmill);
    CHECK(FamilySpec::parse("dutch-windmill:n=2").kind == FamilyKind::DutchWindmill);
    CHECK(FamilySpec::parse("gem+edge:n=2").kind == FamilyKind::GemPlusEdge);
    CHECK(FamilySpec::parse("clique-composition:n=2,t=3").kind ==
          FamilyKind::CliqueComposition);
    const FamilySpec fan = FamilySpec::parse("fan:m=2,n=10");
    CHECK(fan.param("m") == 2);
    CHECK(fan.param("n") == 10);
    CHECK(fan.to_string() == "fan:m=2,n=10");
    CHECK(FamilySpec::parse(fan.to_string()).params == fan.params);

    CHECK_THROWS_AS(FamilySpec::parse("nosuch:n=1"), parse_error);
    CHECK_THROWS_AS(FamilySpec::parse("star:n"), parse_error);
    CHECK_THROWS_AS(FamilySpec::parse("star:n=x"), parse_error);
    CHECK_THROWS_AS(FamilySpec::parse("star:n=1,n=2"), parse_error);
    CHECK_THROWS_AS(FamilySpec::parse("star:m=1"), std::invalid_argument);   // missing n
    CHECK_THROWS_AS(FamilySpec::parse("wheel:n=3"), std::invalid_argument);  // below range
}

TEST_CASE("family kind names round-trip") {
    for (const FamilyKind kind :
         {FamilyKind::Path, FamilyKind::Cycle, FamilyKind::Star,
          FamilyKind::CompleteBipartiteBalanced, FamilyKind::DutchWindmill,
          FamilyKind::PendantDutchWindmill, FamilyKind::Fan, FamilyKind::Gem,
          FamilyKind::GemPlusEdge, FamilyKind::TriangleOnCycle, FamilyKind::Wheel,
          FamilyKind::CliqueComposition})
        CHECK(family_kind_from_name(family_kind_name(kind)) == kind);
    CHECK_THROWS_AS(family_kind_from_name("nosuch"), parse_error);
}

TEST_CASE("spec vertex_count matches the built graph") {
    const std::vector<std::string> specs = {
        "path:n=5",          "cycle:n=6",           "star:n=4",
        "kn,n:n=3",          "windmill:n=3",        "pendant-windmill:n=2",
        "fan:m=3,n=4",       "gem:n=3",             "gem-plus-edge:n=2",
        "triangle-on-cycle:n=5", "wheel:n=6",       "windmill-clique:n=2,t=3"};
    for (const std::string& text : specs) {
        const FamilySpec spec = FamilySpec::parse(text);
        CHECK(spec.vertex_count() == build_family(spec).vertex_count());
    }
}

TEST_CASE("edge list parsing") {
    std::istringstream good("3 2\n0 1\n1 2\n");
    const Graph g = read_edge_list(good);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(0, 1));

    auto reject = [](const char* text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(read_edge_list(in), parse_error);
    };
    reject("");
    reject("x y\n");
    reject("-1 0\n");
    reject("3 2\n0 1\n");            // truncated
    reject("3 1\n0 3\n");            // endpoint out of range
    reject("3 1\n1 1\n");            // self-loop
    reject("3 2\n0 1\n1 0\n");       // duplicate, reversed orientation
    CHECK_THROWS_AS(read_edge_list_file("/nonexistent/edges.txt"), parse_error);
}
