#include "nofactor/staircase.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "nofactor/errors.hpp"

namespace nofactor {

void StairParams::validate() const {
    if (overlap < 1) {
        throw InvalidParams("L must be at least 1");
    }
    if (shift < 1 || shift > overlap) {
        throw InvalidParams("r must satisfy 0 < r <= L (got r=" + std::to_string(shift) + ", L=" + std::to_string(overlap) + ")");
    }
    if (steps < 1) {
        throw InvalidParams("steps must be at least 1");
    }
    if (margin < 1) {
        throw InvalidParams("margin must be at least 1");
    }
}

int StairParams::family_bound() const {
    return (overlap + shift - 1) / shift + 1;
}

namespace {

std::uint64_t edge_key(VertexId a, VertexId b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

VertexId CubeWindow::Builder::vertex(const VertexKey& key) {
    auto [it, fresh] = vertex_index_.emplace(key, static_cast<VertexId>(vertices_.size()));
    if (fresh) {
        vertices_.push_back(key);
    }
    return it->second;
}

EdgeId CubeWindow::Builder::edge(VertexId from, VertexId to, EdgeClass cls) {
    auto [it, fresh] = edge_index_.emplace(edge_key(from, to), static_cast<EdgeId>(edges_.size()));
    if (fresh) {
        edges_.push_back({from, to, cls});
    } else if (edges_[it->second].cls != cls) {
        throw Error("edge reused with a different class");
    }
    return it->second;
}

void CubeWindow::Builder::square(VertexId sw, VertexId se, VertexId ne, VertexId nw) {
    WindowSquare sq;
    sq.corners = {sw, se, ne, nw};
    sq.edges = {edge(sw, se, EdgeClass::horizontal), edge(se, ne, EdgeClass::vertical), edge(nw, ne, EdgeClass::horizontal),
                edge(sw, nw, EdgeClass::vertical)};
    squares_.push_back(sq);
}

CubeWindow CubeWindow::Builder::finish() && {
    CubeWindow w;
    w.vertices_ = std::move(vertices_);
    w.edges_ = std::move(edges_);
    w.squares_ = std::move(squares_);
    w.vertex_index_ = std::move(vertex_index_);
    w.edge_index_ = std::move(edge_index_);
    return w;
}

std::optional<VertexId> CubeWindow::find_vertex(const VertexKey& key) const {
    const auto it = vertex_index_.find(key);
    return it == vertex_index_.end() ? std::nullopt : std::optional<VertexId>(it->second);
}

std::optional<EdgeId> CubeWindow::find_edge(VertexId a, VertexId b) const {
    for (const auto key : {edge_key(a, b), edge_key(b, a)}) {
        if (const auto it = edge_index_.find(key); it != edge_index_.end()) {
            return it->second;
        }
    }
    return std::nullopt;
}

Staircase build_staircase(const StairParams& params) {
    params.validate();
    const int L = params.overlap;
    const int r = params.shift;
    const int m = params.margin;
    constexpr int kFlatRows = 3;

    CubeWindow::Builder b;
    Staircase out;
    out.params = params;

    // Vertex of level `level` at x on the given side; the overlap is shared.
    auto at = [&](int level, Branch side, int x, int row) {
        const int c = level * r;
        const Branch branch = (x >= c && x <= c + L) ? Branch::core : side;
        return b.vertex({level, branch, x, row});
    };
    auto lower_line = [&](int level, int x) { return at(level, Branch::lower_tail, x, 0); };
    auto upper_line = [&](int level, int x) { return at(level, Branch::upper_tail, x, kFlatRows); };
    auto base_line = [&](int x) { return b.vertex({-1, Branch::core, x, kFlatRows}); };

    for (int level = 0; level <= params.steps; ++level) {
        const int c = level * r;
        // Tree edges [x, x + 1] per branch; tails attach to the overlap ends.
        std::vector<std::pair<Branch, int>> tree_edges;
        for (int x = c; x < c + L; ++x) {
            tree_edges.emplace_back(Branch::core, x);
        }
        for (int x = c - r - m; x < c; ++x) {
            tree_edges.emplace_back(Branch::lower_tail, x);
        }
        for (int x = c + L; x < c + L + m; ++x) {
            tree_edges.emplace_back(Branch::lower_tail, x);
        }
        for (int x = c - m; x < c; ++x) {
            tree_edges.emplace_back(Branch::upper_tail, x);
        }
        for (int x = c + L; x < c + L + r + m; ++x) {
            tree_edges.emplace_back(Branch::upper_tail, x);
        }
        for (const auto& [side, x] : tree_edges) {
            for (int row = 0; row < kFlatRows; ++row) {
                b.square(at(level, side, x, row), at(level, side, x + 1, row), at(level, side, x + 1, row + 1),
                         at(level, side, x, row + 1));
            }
        }
    }

    for (int strip = 0; strip <= params.steps; ++strip) {
        const int c = strip * r;
        auto below = [&](int x) { return strip == 0 ? base_line(x) : upper_line(strip - 1, x); };
        for (int x = c - r - m; x < c + L + m; ++x) {
            b.square(below(x), below(x + 1), lower_line(strip, x + 1), lower_line(strip, x));
        }
        out.family_rungs.push_back(b.edge(below(c), lower_line(strip, c), EdgeClass::vertical));
    }
    out.last_projection_edge = b.edge(lower_line(0, L - 1), lower_line(0, L), EdgeClass::horizontal);
    out.window = std::move(b).finish();
    return out;
}

WindowReport validate_window(const CubeWindow& window) {
    WindowReport rep;
    const auto& vs = window.vertices();
    const auto& es = window.edges();
    const auto& sqs = window.squares();

    std::map<std::tuple<VertexId, EdgeId, EdgeId>, int> corner_use;
    for (std::size_t s = 0; s < sqs.size(); ++s) {
        const auto& sq = sqs[s];
        for (EdgeId e : sq.edges) {
            if (e >= es.size()) {
                rep.problems.push_back("square " + std::to_string(s) + " references a missing edge");
            }
        }
        if (std::set<VertexId>(sq.corners.begin(), sq.corners.end()).size() != 4 ||
            std::set<EdgeId>(sq.edges.begin(), sq.edges.end()).size() != 4) {
            rep.problems.push_back("square " + std::to_string(s) + " is degenerate");
            continue;
        }
        // Corner k sits between edges k - 1 and k in bottom, right, top, left order:
        // SW: left/bottom, SE: bottom/right, NE: right/top, NW: top/left.
        for (int k = 0; k < 4; ++k) {
            const EdgeId a = sq.edges[static_cast<std::size_t>((k + 3) % 4)];
            const EdgeId c = sq.edges[static_cast<std::size_t>(k)];
            const auto key = std::make_tuple(sq.corners[static_cast<std::size_t>(k)], std::min(a, c), std::max(a, c));
            if (++corner_use[key] == 2) {
                rep.problems.push_back("two squares share a corner at vertex " + std::to_string(std::get<0>(key)));
            }
        }
    }
    for (std::size_t e = 0; e < es.size(); ++e) {
        if (es[e].from >= vs.size() || es[e].to >= vs.size() || es[e].from == es[e].to) {
            rep.problems.push_back("edge " + std::to_string(e) + " has bad endpoints");
        }
    }

    std::vector<std::vector<VertexId>> adj(vs.size());
    for (const auto& e : es) {
        if (e.from < vs.size() && e.to < vs.size()) {
            adj[e.from].push_back(e.to);
            adj[e.to].push_back(e.from);
        }
    }
    std::vector<char> seen(vs.size(), 0);
    std::size_t reached = 0;
    if (!vs.empty()) {
        std::deque<VertexId> queue{0};
        seen[0] = 1;
        while (!queue.empty()) {
            const VertexId v = queue.front();
            queue.pop_front();
            ++reached;
            for (VertexId u : adj[v]) {
                if (!seen[u]) {
                    seen[u] = 1;
                    queue.push_back(u);
                }
            }
        }
    }
    rep.connected = reached == vs.size();
    if (!rep.connected) {
        rep.problems.push_back("window is disconnected");
    }
    rep.euler_characteristic =
        static_cast<long long>(vs.size()) - static_cast<long long>(es.size()) + static_cast<long long>(sqs.size());
    rep.ok = rep.problems.empty();
    return rep;
}

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent_[std::max(a, b)] = std::min(a, b);
        }
    }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace

WallSet compute_walls(const CubeWindow& window) {
    const auto& es = window.edges();
    DisjointSets dsu(es.size());
    for (const auto& sq : window.squares()) {
        dsu.unite(sq.edges[0], sq.edges[2]);
        dsu.unite(sq.edges[1], sq.edges[3]);
    }
    WallSet ws;
    ws.wall_of_edge.assign(es.size(), 0);
    std::vector<std::optional<WallId>> id_of_root(es.size());
    for (EdgeId e = 0; e < es.size(); ++e) {
        auto& id = id_of_root[dsu.find(e)];
        if (!id) {
            id = static_cast<WallId>(ws.walls.size());
            ws.walls.push_back({*id, {}, es[e].cls});
        }
        ws.wall_of_edge[e] = *id;
        ws.walls[*id].dual_edges.push_back(e);
    }
    return ws;
}

ContactGraph::ContactGraph(const CubeWindow& window, const WallSet& walls) : adjacency_(walls.walls.size()) {
    std::vector<std::vector<WallId>> at_vertex(window.vertices().size());
    for (EdgeId e = 0; e < window.edges().size(); ++e) {
        const auto& edge = window.edges()[e];
        at_vertex[edge.from].push_back(walls.of(e));
        at_vertex[edge.to].push_back(walls.of(e));
    }
    for (auto& ws : at_vertex) {
        std::sort(ws.begin(), ws.end());
        ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
        for (std::size_t i = 0; i < ws.size(); ++i) {
            for (std::size_t j = i + 1; j < ws.size(); ++j) {
                adjacency_[ws[i]].push_back(ws[j]);
                adjacency_[ws[j]].push_back(ws[i]);
            }
        }
    }
    for (auto& nb : adjacency_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
}

const std::vector<WallId>& ContactGraph::neighbors(WallId w) const {
    if (w >= adjacency_.size()) {
        throw UnknownWall("unknown wall " + std::to_string(w));
    }
    return adjacency_[w];
}

bool ContactGraph::adjacent(WallId a, WallId b) const {
    const auto& nb = neighbors(a);
    neighbors(b);
    return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<int> ContactGraph::distances_from(WallId from) const {
    neighbors(from);
    std::vector<int> dist(adjacency_.size(), -1);
    std::deque<WallId> queue{from};
    dist[from] = 0;
    while (!queue.empty()) {
        const WallId w = queue.front();
        queue.pop_front();
        for (WallId u : adjacency_[w]) {
            if (dist[u] < 0) {
                dist[u] = dist[w] + 1;
                queue.push_back(u);
            }
        }
    }
    return dist;
}

std::optional<int> contact_distance(const ContactGraph& graph, WallId a, WallId b) {
    graph.neighbors(b);
    const int d = graph.distances_from(a)[b];
    return d < 0 ? std::nullopt : std::optional<int>(d);
}

CrossingRelation::CrossingRelation(const CubeWindow& window, const WallSet& walls) : crossing_(walls.walls.size()) {
    for (const auto& sq : window.squares()) {
        const WallId a = walls.of(sq.edges[0]);
        const WallId b = walls.of(sq.edges[1]);
        if (a != b) {
            crossing_[a].push_back(b);
            crossing_[b].push_back(a);
        }
    }
    for (auto& c : crossing_) {
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
    }
}

bool CrossingRelation::crosses(WallId a, WallId b) const {
    const auto& c = crossing_.at(a);
    return std::binary_search(c.begin(), c.end(), b);
}

bool NonAcylCertificate::valid() const {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CertificateCheck& c) { return c.passed; });
}

NonAcylCertificate nonacyl_certificate(const StairParams& params, int p) {
    params.validate();
    const int M = params.family_bound();
    if (p < 1 || p > params.steps) {
        throw InvalidParams("p must satisfy 1 <= p <= steps");
    }
    if (params.steps < M - 1) {
        throw InvalidParams("steps must be at least M - 1 = " + std::to_string(M - 1) + " for H_v to meet M family members");
    }

    const Staircase stairs = build_staircase(params);
    const WindowReport report = validate_window(stairs.window);
    const WallSet walls = compute_walls(stairs.window);
    const ContactGraph graph(stairs.window, walls);
    const CrossingRelation crossing(stairs.window, walls);

    NonAcylCertificate cert;
    cert.params = params;
    cert.p = p;
    cert.family_bound = M;
    cert.vertex_count = stairs.window.vertices().size();
    cert.edge_count = stairs.window.edges().size();
    cert.square_count = stairs.window.squares().size();
    cert.wall_count = walls.walls.size();
    auto check = [&](std::string name, bool passed) { cert.checks.push_back({std::move(name), passed}); };

    check("window satisfies the link condition", report.ok);
    check("window is contractible by Euler characteristic", report.euler_characteristic == 1);

    for (EdgeId rung : stairs.family_rungs) {
        cert.family.push_back(walls.of(rung));
    }
    cert.hv_wall = walls.of(stairs.last_projection_edge);

    bool distinct_and_apart = std::set<WallId>(cert.family.begin(), cert.family.end()).size() == cert.family.size();
    for (std::size_t i = 0; i < cert.family.size() && distinct_and_apart; ++i) {
        for (std::size_t j = i + 1; j < cert.family.size(); ++j) {
            if (graph.adjacent(cert.family[i], cert.family[j])) {
                distinct_and_apart = false;
                break;
            }
        }
    }
    check("family walls g^i H are distinct with disjoint carriers", distinct_and_apart);

    const WallId H = cert.family.front();
    const std::vector<int> dist = graph.distances_from(H);
    for (int i = 1; i <= p; ++i) {
        cert.family_distances.emplace_back(i, dist[cert.family[static_cast<std::size_t>(i)]]);
    }

    bool two_paths = true;
    for (int i = 1; i < M; ++i) {
        const WallId target = cert.family[static_cast<std::size_t>(i)];
        std::optional<WallId> witness;
        if (crossing.crosses(cert.hv_wall, H) && crossing.crosses(cert.hv_wall, target)) {
            witness = cert.hv_wall;
        } else {
            for (WallId w : crossing.crossed_by(H)) {
                if (crossing.crosses(w, target)) {
                    witness = w;
                    break;
                }
            }
        }
        if (witness) {
            cert.witnesses.emplace_back(i, *witness);
        }
        two_paths = two_paths && witness.has_value() && !graph.adjacent(H, target) && dist[target] == 2;
    }
    check("d(H, g^i H) = 2 for 1 <= i < M, witnessed by a wall crossing both", two_paths);

    int hv_count = 0;
    for (const Wall& w : walls.walls) {
        int count = 0;
        for (WallId f : cert.family) {
            count += crossing.crosses(w.id, f) ? 1 : 0;
        }
        if (count > 0) {
            cert.crossing_counts.emplace_back(w.id, count);
        }
        cert.max_crossing = std::max(cert.max_crossing, count);
        if (w.id == cert.hv_wall) {
            hv_count = count;
        }
    }
    check("every wall crosses at most M family walls", cert.max_crossing <= M);
    check("H_v crosses exactly M family walls", hv_count == M);
    check("maximum crossing count equals M", cert.max_crossing == M);

    const long long g = std::gcd(static_cast<long long>(p), static_cast<long long>(M));
    cert.lower_bound = {p / g, M / g};
    cert.bfs_distance = dist[cert.family[static_cast<std::size_t>(p)]];
    check("window is connected", report.connected && cert.bfs_distance >= 0);
    check("d(H, g^p H) >= p / M", static_cast<long long>(cert.bfs_distance) * M >= p);

    cert.bounds_note =
        "Distances are measured in a finite window (margin " + std::to_string(params.margin) +
        "); a window distance can only exceed the distance in the full complex. The bound p/M uses only the "
        "crossing counts verified above. The shift r is a free parameter here, not derived from a group.";
    return cert;
}

std::string contact_graph_dot(const Staircase& stairs, const WallSet& walls, const ContactGraph& graph) {
    std::map<WallId, std::string> names;
    for (std::size_t i = 0; i < stairs.family_rungs.size(); ++i) {
        names[walls.of(stairs.family_rungs[i])] = i == 0 ? "H" : (i == 1 ? "gH" : "g^" + std::to_string(i) + "H");
    }
    names.emplace(walls.of(stairs.last_projection_edge), "H_v");

    std::ostringstream out;
    out << "graph contact {\n";
    for (WallId w = 0; w < graph.size(); ++w) {
        out << "  w" << w;
        if (const auto it = names.find(w); it != names.end()) {
            out << " [label=\"" << it->second << "\", style=filled]";
        }
        out << ";\n";
    }
    for (WallId w = 0; w < graph.size(); ++w) {
        for (WallId u : graph.neighbors(w)) {
            if (w < u) {
                out << "  w" << w << " -- w" << u << ";\n";
            }
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace nofactor
