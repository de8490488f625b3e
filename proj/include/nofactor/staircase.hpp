#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "nofactor/complex.hpp"

namespace nofactor {

struct StairParams {
    int overlap = 0;  // L: edges of the projection gamma
    int shift = 0;    // r: horizontal offset between consecutive levels
    int steps = 0;    // number of translates above the base level
    int margin = 1;   // extra line length beyond the overlap on each side

    /// Throws InvalidParams.
    void validate() const;
    /// ceil(L / r) + 1
    int family_bound() const;

    friend bool operator==(const StairParams&, const StairParams&) = default;
};

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using WallId = std::uint32_t;

/// Which part of a level's tree a vertex sits on. The lower tails extend the
/// bottom geodesic past the overlap, the upper tails extend the top one; the
/// two diverge at the ends of the overlap.
enum class Branch : std::uint8_t { core, lower_tail, upper_tail };

struct VertexKey {
    int level = 0;
    Branch branch = Branch::core;
    int x = 0;
    int row = 0;

    friend auto operator<=>(const VertexKey&, const VertexKey&) = default;
};

struct WindowEdge {
    VertexId from = 0;  // west end (horizontal) or south end (vertical)
    VertexId to = 0;
    EdgeClass cls = EdgeClass::horizontal;
};

struct WindowSquare {
    std::array<EdgeId, 4> edges{};      // bottom, right, top, left
    std::array<VertexId, 4> corners{};  // SW, SE, NE, NW
};

/// A finite square complex with coordinatized cells.
class CubeWindow {
public:
    class Builder {
    public:
        VertexId vertex(const VertexKey& key);
        /// Edge between existing vertices, created on first use.
        EdgeId edge(VertexId from, VertexId to, EdgeClass cls);
        /// Square from its corners; the four boundary edges are created on demand.
        void square(VertexId sw, VertexId se, VertexId ne, VertexId nw);
        CubeWindow finish() &&;

    private:
        std::vector<VertexKey> vertices_;
        std::map<VertexKey, VertexId> vertex_index_;
        std::vector<WindowEdge> edges_;
        std::unordered_map<std::uint64_t, EdgeId> edge_index_;
        std::vector<WindowSquare> squares_;
    };

    const std::vector<VertexKey>& vertices() const noexcept { return vertices_; }
    const std::vector<WindowEdge>& edges() const noexcept { return edges_; }
    const std::vector<WindowSquare>& squares() const noexcept { return squares_; }

    std::optional<VertexId> find_vertex(const VertexKey& key) const;
    std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;

private:
    std::vector<VertexKey> vertices_;
    std::vector<WindowEdge> edges_;
    std::vector<WindowSquare> squares_;
    std::map<VertexKey, VertexId> vertex_index_;
    std::unordered_map<std::uint64_t, EdgeId> edge_index_;
};

/// A staircase window together with the construction coordinates of the
/// named hyperplanes.
struct Staircase {
    StairParams params;
    CubeWindow window;
    /// family_rungs[i] is an edge dual to g^i H, the hyperplane along strip i.
    std::vector<EdgeId> family_rungs;
    /// The last edge of the projection gamma on F at level 0, dual to H_v.
    EdgeId last_projection_edge = 0;
};

/// Levels 0..steps. Level i is T_i x [0, 3] for a finite tree T_i made of the
/// overlap [i r, i r + L] with a lower and an upper tail at each end; its
/// bottom line (lower tails + overlap) is g^i F and its top line (upper tails
/// + overlap) is g^i F'. Strip i joins the top line of level i - 1 (a bare
/// base line for i = 0) to the bottom line of level i, and its hyperplane is
/// g^i H. Throws InvalidParams.
Staircase build_staircase(const StairParams& params);

struct WindowReport {
    bool ok = true;
    std::vector<std::string> problems;
    long long euler_characteristic = 0;
    bool connected = false;
};

/// Boundary edges exist, no two squares share a corner at a vertex (link
/// condition), connectivity, and the Euler characteristic.
WindowReport validate_window(const CubeWindow& window);

struct Wall {
    WallId id = 0;
    std::vector<EdgeId> dual_edges;
    EdgeClass dual_class = EdgeClass::horizontal;
};

struct WallSet {
    std::vector<Wall> walls;
    std::vector<WallId> wall_of_edge;

    WallId of(EdgeId e) const { return wall_of_edge.at(e); }
};

/// Partition of the edges by the opposite-sides-of-a-square relation. Walls
/// are numbered by their least edge.
WallSet compute_walls(const CubeWindow& window);

/// Walls whose carriers meet, i.e. some dual edges share a vertex.
class ContactGraph {
public:
    ContactGraph(const CubeWindow& window, const WallSet& walls);

    std::size_t size() const noexcept { return adjacency_.size(); }
    const std::vector<WallId>& neighbors(WallId w) const;
    bool adjacent(WallId a, WallId b) const;

    /// BFS distances from `from`; -1 marks unreachable walls. Throws UnknownWall.
    std::vector<int> distances_from(WallId from) const;

private:
    std::vector<std::vector<WallId>> adjacency_;
};

/// Hop count between two walls. Throws UnknownWall; returns nullopt if they
/// lie in different components.
std::optional<int> contact_distance(const ContactGraph& graph, WallId a, WallId b);

/// Pairs of walls meeting transversally in some square.
class CrossingRelation {
public:
    CrossingRelation(const CubeWindow& window, const WallSet& walls);

    bool crosses(WallId a, WallId b) const;
    const std::vector<WallId>& crossed_by(WallId w) const { return crossing_.at(w); }

private:
    std::vector<std::vector<WallId>> crossing_;
};

struct Fraction {
    long long num = 0;
    long long den = 1;

    friend bool operator==(const Fraction&, const Fraction&) = default;
};

struct CertificateCheck {
    std::string name;
    bool passed = false;

    friend bool operator==(const CertificateCheck&, const CertificateCheck&) = default;
};

struct NonAcylCertificate {
    StairParams params;
    int p = 0;
    int family_bound = 0;  // M
    std::vector<WallId> family;  // g^0 H ... g^steps H
    WallId hv_wall = 0;
    /// (i, d(H, g^i H)) for 1 <= i <= p
    std::vector<std::pair<int, int>> family_distances;
    /// (i, witness wall) for 1 <= i < M: a wall crossing both H and g^i H.
    std::vector<std::pair<int, WallId>> witnesses;
    /// Walls crossing at least one family member, with how many they cross.
    std::vector<std::pair<WallId, int>> crossing_counts;
    int max_crossing = 0;
    Fraction lower_bound;  // p / M in lowest terms
    int bfs_distance = 0;  // d(H, g^p H)
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
    std::size_t square_count = 0;
    std::size_t wall_count = 0;
    std::string bounds_note;
    std::vector<CertificateCheck> checks;

    bool valid() const;
};

/// Builds the staircase and derives the certificate. Requires
/// 1 <= p <= steps and steps >= M - 1. Throws InvalidParams.
NonAcylCertificate nonacyl_certificate(const StairParams& params, int p);

/// Graphviz rendering of the contact graph with the family and H_v labeled.
std::string contact_graph_dot(const Staircase& stairs, const WallSet& walls, const ContactGraph& graph);

}  // namespace nofactor
