#ifndef BOOKTHICK_CONSTRUCTIONS_HH
#define BOOKTHICK_CONSTRUCTIONS_HH 1

#include <bookthick/graph.hh>
#include <bookthick/treedec.hh>

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bookthick
{
    class SizeTooSmall : public Error
    {
    public:
        using Error::Error;
    };

    /// A k-clique K (ids 0..k-1, label "K") plus m independent vertices S
    /// (ids k..k+m-1, label "S"), each adjacent to all of K.
    auto complete_split(int k, int m) -> Graph;

    /// Vertices 0..n-1, uv an edge iff |u-v| <= k.
    auto path_power(int n, int k) -> Graph;

    /// complete_split(k, m) plus, for the i-th vertex v of S, a vertex onto
    /// (K + v) - u_1. Those vertices get label "T" and ids k+m+i.
    auto dujwoo_gadget(int k, int m) -> Graph;

    auto complete_bipartite(int a, int b) -> Graph;
    auto cycle_graph(int n) -> Graph;
    auto path_graph(int n) -> Graph;
    auto star_graph(int leaves) -> Graph;

    /// One S-vertex v, its T-vertex w, and the three triples hung off w.
    struct QGadget
    {
        Vertex v;
        Vertex w;
        /// t[0], t[1], t[2] are T_2(w), T_3(w), T_4(w).
        std::array<std::array<Vertex, 3>, 3> t;
    };

    struct QArtifacts
    {
        int k = 0;
        Graph graph;
        KTreeCertificate certificate;
        TreeDecomposition decomposition;
        std::vector<Vertex> clique;
        std::vector<Vertex> s;
        std::vector<Vertex> t;
        std::vector<Vertex> pad;
        std::vector<QGadget> gadgets;

        /// Role tag -> vertex set. Per-w sets are keyed "T2(w)", "T3(w)",
        /// "T4(w)" with w the vertex id, e.g. "T3(41)".
        auto roles() const -> std::map<std::string, std::vector<Vertex>>;
    };

    auto q_base_vertex_count(int k) -> int;

    /**
     * The k-tree lower-bound construction with bt = k+1 and a smooth
     * degree-4 width-k tree decomposition.
     *
     * Vertex ids, in creation order: K, then S (2k^2+1 of them), then one w
     * per v in S, then T_2(w), T_3(w), T_4(w) for each w in turn, then any
     * padding vertices (added onto K) needed to reach n.
     *
     * The decomposition has the S-bags K+v on a path, each with the bag
     * (K+v+w)-u_1 hanging off it, and from every w-bag three chains of
     * three bags (K+v+w+x)-{u_1,u_i}, one chain per T_i(w). Padding bags
     * K+x continue the S-path past its last bag.
     */
    auto theorem_q(int k, std::optional<int> n = std::nullopt) -> QArtifacts;
}

#endif
