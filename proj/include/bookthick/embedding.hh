#ifndef BOOKTHICK_EMBEDDING_HH
#define BOOKTHICK_EMBEDDING_HH 1

#include <bookthick/graph.hh>

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bookthick
{
    /**
     * Clockwise circular order of vertices on the spine. Keeps both the
     * vertex-at-position list and its inverse, so arc membership is O(1).
     */
    class CircularOrder
    {
    public:
        CircularOrder() = default;

        /// Throws InvalidGraph unless `order` is a permutation of 0..n-1.
        explicit CircularOrder(std::vector<Vertex> order);

        static auto identity(int n) -> CircularOrder;

        auto size() const -> int { return static_cast<int>(_order.size()); }
        auto vertices() const -> const std::vector<Vertex> & { return _order; }
        auto position(Vertex v) const -> int { return _position.at(v); }
        auto at(int position) const -> Vertex { return _order.at(position); }

        /// True iff x lies strictly inside the clockwise arc from a to b.
        auto in_arc(Vertex a, Vertex b, Vertex x) const -> bool;

    private:
        std::vector<Vertex> _order;
        std::vector<int> _position;
    };

    /// Chords e and f cross iff exactly one endpoint of f is strictly inside
    /// the arc spanned by e. Edges sharing an endpoint never cross.
    auto crosses(const CircularOrder & order, Edge e, Edge f) -> bool;

    /// Same predicate on raw positions, for callers that maintain their own.
    inline auto crosses_at(int a, int b, int c, int d) -> bool
    {
        if (a == c || a == d || b == c || b == d)
            return false;
        if (a > b)
            std::swap(a, b);
        bool c_in = a < c && c < b;
        bool d_in = a < d && d < b;
        return c_in != d_in;
    }

    struct BookEmbedding
    {
        CircularOrder order;
        /// Pages are numbered from 1.
        std::map<Edge, int> page;
        int page_count = 0;
    };

    struct ValidationResult
    {
        bool ok = false;
        int pages_used = 0;
        std::optional<std::pair<Edge, Edge>> first_conflict;
        /// Set for structural problems (bad order, missing or extra edges).
        std::optional<std::string> finding;
    };

    auto validate_embedding(const Graph & g, const BookEmbedding & emb) -> ValidationResult;

    /// Smallest p with |E| < (p+1)|V|.
    auto density_lower_bound(const Graph & g) -> int;

    /// Adjacency lists of the crossing (circle) graph: one vertex per entry of
    /// `edges`, adjacent iff the chords cross under `order`.
    auto crossing_graph(const CircularOrder & order, std::span<const Edge> edges) -> std::vector<std::vector<int>>;

    /// Largest set of pairwise crossing edges: exact when |E| <= 64, a greedy
    /// estimate (still a valid clique) otherwise.
    auto crossing_clique_lower_bound(const Graph & g, const CircularOrder & order) -> int;

    /// Indices into g.edges() of a largest pairwise-crossing set found.
    auto max_crossing_clique(const Graph & g, const CircularOrder & order) -> std::vector<int>;
}

#endif
