#ifndef BOOKTHICK_SOLVER_HH
#define BOOKTHICK_SOLVER_HH 1

#include <bookthick/embedding.hh>
#include <bookthick/graph.hh>

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace bookthick
{
    /**
     * Exact colouring of a small graph given as adjacency lists (here always
     * a crossing graph). DSATUR vertex choice, ties to the lowest index, new
     * colours opened one at a time. Vertices listed in `seed` must be
     * pairwise adjacent; they are precoloured 0, 1, 2, ...
     *
     * Returns a colouring with values in 0..colours-1, or nullopt if none
     * exists.
     */
    auto colour_graph(const std::vector<std::vector<int>> & adj, int colours, const std::vector<int> & seed = {})
        -> std::optional<std::vector<int>>;

    /// Chromatic number of the crossing graph of g under this order.
    auto min_pages_for_order(const Graph & g, const CircularOrder & order) -> int;

    /// An embedding with this order using min_pages_for_order pages.
    auto optimal_pages_for_order(const Graph & g, const CircularOrder & order) -> BookEmbedding;

    struct SolverOptions
    {
        std::optional<int> max_pages;
        std::optional<std::chrono::milliseconds> time_budget;
        std::optional<std::uint64_t> node_limit;
        int threads = 1;
    };

    enum class SolverStatus
    {
        Exact,
        LowerBoundOnly,
        Timeout
    };

    auto status_name(SolverStatus s) -> std::string_view;

    struct SolverReport
    {
        SolverStatus status = SolverStatus::Exact;
        /// Exact value, or the best upper bound found.
        int book_thickness = 0;
        int lower_bound = 0;
        std::optional<BookEmbedding> witness;
        std::uint64_t nodes_explored = 0;
        std::chrono::duration<double> elapsed{0};
    };

    /**
     * Minimises the page count over circular orders with vertex 0 at
     * position 0 and the reflection broken by requiring the vertex at
     * position 1 to be smaller than the vertex at position n-1. Orders are
     * built one position at a time; a prefix is abandoned as soon as the
     * crossing graph of its edges cannot be coloured with fewer pages than
     * the best order found so far. The lower bound starts at the density
     * bound, and the search stops early once it is met.
     *
     * With max_pages set, only embeddings with at most that many pages are
     * sought; if there are none the status is LowerBoundOnly. Exhausting the
     * time or node budget gives Timeout with the bounds reached so far.
     *
     * With threads > 1, the choices of vertex at position 1 are shared out
     * between workers, which exchange only the best page count.
     */
    auto book_thickness_exact(const Graph & g, const SolverOptions & opts = {}) -> SolverReport;

    /// True iff the graph has a one-page embedding.
    auto is_outerplanar(const Graph & g) -> bool;
}

#endif
