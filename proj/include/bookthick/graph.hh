#ifndef BOOKTHICK_GRAPH_HH
#define BOOKTHICK_GRAPH_HH 1

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bookthick
{
    using Vertex = int;

    /// An undirected edge, always stored with first < second.
    struct Edge
    {
        Vertex first;
        Vertex second;

        Edge() = default;
        Edge(Vertex a, Vertex b) : first(a < b ? a : b), second(a < b ? b : a) {}

        auto operator<=>(const Edge &) const = default;
    };

    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    class NotAClique : public Error
    {
    public:
        using Error::Error;
    };

    class InvalidSize : public Error
    {
    public:
        using Error::Error;
    };

    class InvalidGraph : public Error
    {
    public:
        using Error::Error;
    };

    /**
     * Simple undirected graph on the dense vertex set 0..n-1, with optional
     * role labels ("K", "S", "T", ...) carried as metadata.
     *
     * Adjacency lists are kept sorted, so edges() and neighbours() are
     * deterministic regardless of insertion order.
     */
    class Graph
    {
    public:
        Graph() = default;
        explicit Graph(int vertex_count);

        auto vertex_count() const -> int { return static_cast<int>(_adj.size()); }
        auto edge_count() const -> int { return _edge_count; }

        auto add_vertex() -> Vertex;

        /// Throws InvalidGraph on self-loops, duplicates or out-of-range endpoints.
        auto add_edge(Vertex u, Vertex v) -> void;

        auto has_edge(Vertex u, Vertex v) const -> bool;
        auto neighbours(Vertex v) const -> const std::vector<Vertex> & { return _adj.at(v); }
        auto degree(Vertex v) const -> int { return static_cast<int>(_adj.at(v).size()); }

        /// All edges, sorted lexicographically.
        auto edges() const -> std::vector<Edge>;

        auto is_clique(const std::vector<Vertex> & vertices) const -> bool;

        auto set_label(Vertex v, std::string role) -> void;
        auto label(Vertex v) const -> std::optional<std::string>;
        auto labels() const -> const std::map<Vertex, std::string> & { return _labels; }

        /// Same vertex count, same edges, same labels.
        auto operator==(const Graph &) const -> bool = default;

    private:
        std::vector<std::vector<Vertex>> _adj;
        std::map<Vertex, std::string> _labels;
        int _edge_count = 0;
    };

    /// Graph with one vertex removed and the remaining vertices renumbered densely.
    auto without_vertex(const Graph & g, Vertex v) -> Graph;

    /// Graph with one edge removed; labels are kept.
    auto without_edge(const Graph & g, Edge e) -> Graph;

    auto complete_graph(int n) -> Graph;

    /// Adds a new vertex adjacent to exactly `clique`. Throws NotAClique.
    auto add_simplicial(const Graph & g, const std::vector<Vertex> & clique) -> std::pair<Graph, Vertex>;

    /**
     * Proof that a graph is a k-tree: start from the (k+1)-clique base_clique,
     * then add each vertex in turn onto its k-clique attachment.
     */
    struct KTreeCertificate
    {
        int k = 0;
        std::vector<Vertex> base_clique;
        std::vector<std::pair<Vertex, std::vector<Vertex>>> additions;

        auto vertex_count() const -> int { return static_cast<int>(base_clique.size() + additions.size()); }

        auto operator==(const KTreeCertificate &) const -> bool = default;
    };

    /// Rebuilds the graph a certificate describes. Throws InvalidGraph if the
    /// certificate is malformed (wrong sizes, unknown ids, attachment not a
    /// clique of earlier vertices).
    auto replay(const KTreeCertificate & cert) -> Graph;

    /// Greedy simplicial elimination, lowest id first.
    auto is_k_tree(const Graph & g, int k) -> std::optional<KTreeCertificate>;

    /// k*n - k(k+1)/2. Throws InvalidSize if n < k+1.
    auto ktree_edge_count(std::int64_t n, std::int64_t k) -> std::int64_t;

    /// Uniform choice of attachment clique at every step, seeded.
    auto random_ktree(int n, int k, std::uint64_t seed) -> KTreeCertificate;
}

#endif
