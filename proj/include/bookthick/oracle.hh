#ifndef BOOKTHICK_ORACLE_HH
#define BOOKTHICK_ORACLE_HH 1

#include <bookthick/graph.hh>

#include <cstdint>
#include <string>
#include <vector>

namespace bookthick::oracle
{
    /// Book thickness by plain enumeration: every order with vertex 0 first,
    /// every page assignment with at most max_pages pages. Shares no code
    /// with the solver. Returns max_pages + 1 if nothing fits.
    auto brute_force_book_thickness(const Graph & g, int max_pages = 4) -> int;

    /// One representative per isomorphism class of connected graphs on n
    /// vertices, found by minimum-edge-mask canonical forms. n <= 6.
    auto connected_graphs(int n) -> std::vector<Graph>;

    auto is_connected(const Graph & g) -> bool;

    /// Uniform G(n, 1/2) conditioned on connectivity.
    auto random_connected_graph(int n, std::uint64_t & state) -> Graph;

    struct SuiteResult
    {
        int graphs_checked = 0;
        std::vector<std::string> mismatches;
    };

    /// Compares book_thickness_exact with the brute force on every connected
    /// graph up to max_n vertices and on `samples` random connected graphs
    /// with max_n + 1 vertices.
    auto run_equivalence_suite(int max_n, int samples, std::uint64_t seed) -> SuiteResult;
}

#endif
