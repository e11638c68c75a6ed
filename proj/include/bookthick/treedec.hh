#ifndef BOOKTHICK_TREEDEC_HH
#define BOOKTHICK_TREEDEC_HH 1

#include <bookthick/graph.hh>

#include <string>
#include <utility>
#include <vector>

namespace bookthick
{
    struct TreeDecomposition
    {
        std::vector<std::vector<Vertex>> bags;
        std::vector<std::pair<int, int>> tree_edges;
        /// -1 when no width was declared.
        int declared_width = -1;

        auto operator==(const TreeDecomposition &) const -> bool = default;
    };

    struct DecompositionReport
    {
        bool valid = false;
        int width = -1;
        bool smooth = false;
        int max_degree = 0;
        std::vector<std::string> violations;
    };

    /**
     * Checks the three tree-decomposition axioms (vertex coverage, edge
     * coverage, connected occurrence subtrees) plus the host tree itself.
     * Smooth means every bag has width+1 vertices and adjacent bags share
     * exactly width of them. Nothing is thrown; every problem found is
     * listed in violations.
     */
    auto validate(const Graph & g, const TreeDecomposition & td) -> DecompositionReport;

    /// One bag for the base clique, then C+v for each addition (v, C), hung
    /// off the lowest-index earlier bag containing C.
    auto decomposition_from_certificate(const KTreeCertificate & cert) -> TreeDecomposition;
}

#endif
