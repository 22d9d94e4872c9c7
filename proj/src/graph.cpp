#include "dompoly/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace dompoly {

Graph::Graph(int vertex_count) : n_(vertex_count) {
    if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
    adj_.assign(static_cast<std::size_t>(n_) * n_, 0);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range (n=" +
                                std::to_string(n_) + ")");
}

int Graph::edge_count() const {
    int m = 0;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v) m += adj_[static_cast<std::size_t>(u) * n_ + v];
    return m;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[static_cast<std::size_t>(u) * n_ + v] != 0;
}

int Graph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (int u = 0; u < n_; ++u) d += adj_[static_cast<std::size_t>(v) * n_ + u];
    return d;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop rejected: " + std::to_string(u));
    adj_[static_cast<std::size_t>(u) * n_ + v] = 1;
    adj_[static_cast<std::size_t>(v) * n_ + u] = 1;
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        if (adj_[static_cast<std::size_t>(v) * n_ + u]) out.push_back(u);
    return out;
}

std::vector<int> Graph::closed_neighborhood(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        if (u == v || adj_[static_cast<std::size_t>(v) * n_ + u]) out.push_back(u);
    return out;
}

std::uint64_t Graph::closed_neighborhood_mask(int v) const {
    check_vertex(v);
    if (n_ > 64) throw budget_error("bitmask neighborhoods need vertex_count <= 64");
    std::uint64_t m = 1ull << v;
    for (int u = 0; u < n_; ++u)
        if (adj_[static_cast<std::size_t>(v) * n_ + u]) m |= 1ull << u;
    return m;
}

namespace {
// Induced subgraph on the kept vertices (ascending), re-compacted in order.
Graph induced(const Graph& g, const std::vector<int>& keep) {
    Graph h(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (g.has_edge(keep[i], keep[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}
}  // namespace

Graph Graph::delete_vertex(int v) const {
    check_vertex(v);
    std::vector<int> keep;
    for (int u = 0; u < n_; ++u)
        if (u != v) keep.push_back(u);
    return induced(*this, keep);
}

Graph Graph::delete_closed_neighborhood(int v) const {
    check_vertex(v);
    std::vector<int> keep;
    for (int u = 0; u < n_; ++u)
        if (u != v && !adj_[static_cast<std::size_t>(v) * n_ + u]) keep.push_back(u);
    return induced(*this, keep);
}

Graph Graph::contract_vertex(int v) const {
    check_vertex(v);
    Graph with_clique = *this;
    auto nv = neighbors(v);
    for (std::size_t i = 0; i < nv.size(); ++i)
        for (std::size_t j = i + 1; j < nv.size(); ++j) with_clique.add_edge(nv[i], nv[j]);
    return with_clique.delete_vertex(v);
}

Graph Graph::odot(int u) const {
    check_vertex(u);
    Graph h = *this;
    auto nu = neighbors(u);
    for (std::size_t i = 0; i < nu.size(); ++i)
        for (std::size_t j = i + 1; j < nu.size(); ++j) {
            h.adj_[static_cast<std::size_t>(nu[i]) * n_ + nu[j]] = 0;
            h.adj_[static_cast<std::size_t>(nu[j]) * n_ + nu[i]] = 0;
        }
    return h;
}

Graph Graph::compose_clique(int t) const {
    if (t < 1) throw std::invalid_argument("clique composition needs t >= 1");
    Graph h(n_ * t);
    for (int v = 0; v < n_; ++v)
        for (int a = 0; a < t; ++a)
            for (int b = a + 1; b < t; ++b) h.add_edge(v * t + a, v * t + b);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v) {
            if (!has_edge(u, v)) continue;
            for (int a = 0; a < t; ++a)
                for (int b = 0; b < t; ++b) h.add_edge(u * t + a, v * t + b);
        }
    return h;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph h(a.vertex_count() + b.vertex_count());
    for (int u = 0; u < a.vertex_count(); ++u)
        for (int v = u + 1; v < a.vertex_count(); ++v)
            if (a.has_edge(u, v)) h.add_edge(u, v);
    const int off = a.vertex_count();
    for (int u = 0; u < b.vertex_count(); ++u)
        for (int v = u + 1; v < b.vertex_count(); ++v)
            if (b.has_edge(u, v)) h.add_edge(off + u, off + v);
    return h;
}

Graph join(const Graph& a, const Graph& b) {
    Graph h = disjoint_union(a, b);
    for (int u = 0; u < a.vertex_count(); ++u)
        for (int v = 0; v < b.vertex_count(); ++v) h.add_edge(u, a.vertex_count() + v);
    return h;
}

namespace {

Graph make_path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph make_cycle(int n) {
    Graph g = make_path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph make_star(int n) {
    Graph g(n + 1);
    for (int i = 1; i <= n; ++i) g.add_edge(0, i);
    return g;
}

Graph make_knn(int n) {
    Graph g(2 * n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) g.add_edge(u, n + v);
    return g;
}

Graph make_windmill(int n) {
    Graph g(2 * n + 1);
    for (int i = 0; i < n; ++i) {
        g.add_edge(0, 1 + 2 * i);
        g.add_edge(0, 2 + 2 * i);
        g.add_edge(1 + 2 * i, 2 + 2 * i);
    }
    return g;
}

Graph make_pendant_windmill(int n) {
    Graph base = make_windmill(n);
    Graph g(2 * n + 2);
    for (int u = 0; u < base.vertex_count(); ++u)
        for (int v = u + 1; v < base.vertex_count(); ++v)
            if (base.has_edge(u, v)) g.add_edge(u, v);
    g.add_edge(0, 2 * n + 1);
    return g;
}

Graph make_fan(int m, int n) { return join(Graph(m), make_path(n)); }

Graph make_gem(int n) { return join(Graph(1), make_path(n + 1)); }

Graph make_gem_plus_edge(int n) {
    Graph gem = make_gem(n);
    Graph g(n + 3);
    for (int u = 0; u < gem.vertex_count(); ++u)
        for (int v = u + 1; v < gem.vertex_count(); ++v)
            if (gem.has_edge(u, v)) g.add_edge(u, v);
    g.add_edge(0, n + 2);
    return g;
}

Graph make_triangle_on_cycle(int n) {
    Graph g(n + 1);
    for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
    g.add_edge(n, 1);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    return g;
}

Graph make_wheel(int n) { return join(Graph(1), make_cycle(n - 1)); }

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

int FamilySpec::param(const std::string& name) const {
    auto it = params.find(name);
    if (it == params.end())
        throw std::invalid_argument("family " + std::string(family_kind_name(kind)) +
                                    " needs parameter '" + name + "'");
    return it->second;
}

const char* family_kind_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Path: return "path";
        case FamilyKind::Cycle: return "cycle";
        case FamilyKind::Star: return "star";
        case FamilyKind::CompleteBipartiteBalanced: return "kn,n";
        case FamilyKind::DutchWindmill: return "windmill";
        case FamilyKind::PendantDutchWindmill: return "pendant-windmill";
        case FamilyKind::Fan: return "fan";
        case FamilyKind::Gem: return "gem";
        case FamilyKind::GemPlusEdge: return "gem-plus-edge";
        case FamilyKind::TriangleOnCycle: return "triangle-on-cycle";
        case FamilyKind::Wheel: return "wheel";
        case FamilyKind::CliqueComposition: return "windmill-clique";
    }
    return "?";
}

FamilyKind family_kind_from_name(const std::string& name) {
    if (name == "path") return FamilyKind::Path;
    if (name == "cycle") return FamilyKind::Cycle;
    if (name == "star") return FamilyKind::Star;
    if (name == "kn,n" || name == "knn" || name == "complete-bipartite")
        return FamilyKind::CompleteBipartiteBalanced;
    if (name == "windmill" || name == "dutch-windmill" || name == "friendship")
        return FamilyKind::DutchWindmill;
    if (name == "pendant-windmill") return FamilyKind::PendantDutchWindmill;
    if (name == "fan") return FamilyKind::Fan;
    if (name == "gem") return FamilyKind::Gem;
    if (name == "gem-plus-edge" || name == "gem+edge") return FamilyKind::GemPlusEdge;
    if (name == "triangle-on-cycle") return FamilyKind::TriangleOnCycle;
    if (name == "wheel") return FamilyKind::Wheel;
    if (name == "windmill-clique" || name == "clique-composition")
        return FamilyKind::CliqueComposition;
    throw parse_error("unknown family '" + name + "'");
}

FamilySpec FamilySpec::parse(const std::string& text) {
    const auto colon = text.find(':');
    FamilySpec spec;
    spec.kind = family_kind_from_name(text.substr(0, colon));

    if (colon != std::string::npos) {
        std::stringstream rest(text.substr(colon + 1));
        std::string item;
        while (std::getline(rest, item, ',')) {
            if (item.empty()) continue;
            const auto eq = item.find('=');
            if (eq == std::string::npos)
                throw parse_error("bad family parameter '" + item + "' (expected name=value)");
            const std::string name = item.substr(0, eq);
            const std::string value = item.substr(eq + 1);
            try {
                std::size_t used = 0;
                const int v = std::stoi(value, &used);
                if (used != value.size()) throw std::invalid_argument(value);
                if (!spec.params.emplace(name, v).second)
                    throw parse_error("duplicate family parameter '" + name + "'");
            } catch (const parse_error&) {
                throw;
            } catch (const std::exception&) {
                throw parse_error("bad value for family parameter '" + name + "': '" + value + "'");
            }
        }
    }
    spec.validate();
    return spec;
}

std::string FamilySpec::to_string() const {
    std::string out = family_kind_name(kind);
    if (!params.empty()) {
        out += ":";
        bool first = true;
        for (const auto& [name, value] : params) {
            if (!first) out += ",";
            first = false;
            out += name + "=" + std::to_string(value);
        }
    }
    return out;
}

void FamilySpec::validate() const {
    switch (kind) {
        case FamilyKind::Path: require(param("n") >= 1, "path needs n >= 1"); break;
        case FamilyKind::Cycle: require(param("n") >= 3, "cycle needs n >= 3"); break;
        case FamilyKind::Star: require(param("n") >= 1, "star needs n >= 1"); break;
        case FamilyKind::CompleteBipartiteBalanced:
            require(param("n") >= 1, "kn,n needs n >= 1");
            break;
        case FamilyKind::DutchWindmill: require(param("n") >= 1, "windmill needs n >= 1"); break;
        case FamilyKind::PendantDutchWindmill:
            require(param("n") >= 1, "pendant-windmill needs n >= 1");
            break;
        case FamilyKind::Fan:
            require(param("m") >= 1, "fan needs m >= 1");
            require(param("n") >= 1, "fan needs n >= 1");
            break;
        case FamilyKind::Gem: require(param("n") >= 1, "gem needs n >= 1"); break;
        case FamilyKind::GemPlusEdge:
            require(param("n") >= 1, "gem-plus-edge needs n >= 1");
            break;
        case FamilyKind::TriangleOnCycle:
            require(param("n") >= 3, "triangle-on-cycle needs n >= 3");
            break;
        case FamilyKind::Wheel: require(param("n") >= 4, "wheel needs n >= 4"); break;
        case FamilyKind::CliqueComposition:
            require(param("n") >= 1, "windmill-clique needs n >= 1");
            require(param("t") >= 1, "windmill-clique needs t >= 1");
            break;
    }
}

int FamilySpec::vertex_count() const {
    switch (kind) {
        case FamilyKind::Path:
        case FamilyKind::Cycle: return param("n");
        case FamilyKind::Star: return param("n") + 1;
        case FamilyKind::CompleteBipartiteBalanced: return 2 * param("n");
        case FamilyKind::DutchWindmill: return 2 * param("n") + 1;
        case FamilyKind::PendantDutchWindmill: return 2 * param("n") + 2;
        case FamilyKind::Fan: return param("m") + param("n");
        case FamilyKind::Gem: return param("n") + 2;
        case FamilyKind::GemPlusEdge: return param("n") + 3;
        case FamilyKind::TriangleOnCycle: return param("n") + 1;
        case FamilyKind::Wheel: return param("n");
        case FamilyKind::CliqueComposition: return (2 * param("n") + 1) * param("t");
    }
    return 0;
}

Graph build_family(const FamilySpec& spec) {
    spec.validate();
    switch (spec.kind) {
        case FamilyKind::Path: return make_path(spec.param("n"));
        case FamilyKind::Cycle: return make_cycle(spec.param("n"));
        case FamilyKind::Star: return make_star(spec.param("n"));
        case FamilyKind::CompleteBipartiteBalanced: return make_knn(spec.param("n"));
        case FamilyKind::DutchWindmill: return make_windmill(spec.param("n"));
        case FamilyKind::PendantDutchWindmill: return make_pendant_windmill(spec.param("n"));
        case FamilyKind::Fan: return make_fan(spec.param("m"), spec.param("n"));
        case FamilyKind::Gem: return make_gem(spec.param("n"));
        case FamilyKind::GemPlusEdge: return make_gem_plus_edge(spec.param("n"));
        case FamilyKind::TriangleOnCycle: return make_triangle_on_cycle(spec.param("n"));
        case FamilyKind::Wheel: return make_wheel(spec.param("n"));
        case FamilyKind::CliqueComposition:
            return make_windmill(spec.param("n")).compose_clique(spec.param("t"));
    }
    throw std::logic_error("unreachable family kind");
}

Graph read_edge_list(std::istream& in) {
    int n = -1, m = -1;
    if (!(in >> n >> m)) throw parse_error("edge list: expected header line 'n m'");
    if (n < 0 || m < 0) throw parse_error("edge list: negative counts in header");
    Graph g(n);
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v))
            throw parse_error("edge list: expected " + std::to_string(m) + " edges, got " +
                              std::to_string(i));
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error("edge list: endpoint out of range in edge " + std::to_string(u) +
                              " " + std::to_string(v));
        if (u == v) throw parse_error("edge list: self-loop " + std::to_string(u));
        if (g.has_edge(u, v))
            throw parse_error("edge list: duplicate edge " + std::to_string(u) + " " +
                              std::to_string(v));
        g.add_edge(u, v);
    }
    return g;
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open edge list file '" + path + "'");
    return read_edge_list(in);
}

}  // namespace dompoly
