#include <bookthick/oracle.hh>
#include <bookthick/solver.hh>

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

using std::string;
using std::to_string;
using std::vector;

namespace bookthick::oracle
{
    namespace
    {
        struct Chord
        {
            int lo, hi;
        };

        auto interleaved(Chord x, Chord y) -> bool
        {
            return (x.lo < y.lo && y.lo < x.hi && x.hi < y.hi) || (y.lo < x.lo && x.lo < y.hi && y.hi < x.hi);
        }

        auto assign_pages(const vector<Chord> & chords, vector<int> & page, size_t next, int pages) -> bool
        {
            if (next == chords.size())
                return true;
            for (int p = 0; p < pages; ++p) {
                bool clash = false;
                for (size_t i = 0; i < next && ! clash; ++i)
                    clash = page[i] == p && interleaved(chords[i], chords[next]);
                if (clash)
                    continue;
                page[next] = p;
                if (assign_pages(chords, page, next + 1, pages))
                    return true;
            }
            return false;
        }
    }

    auto brute_force_book_thickness(const Graph & g, int max_pages) -> int
    {
        auto edges = g.edges();
        if (edges.empty())
            return 0;

        int n = g.vertex_count();
        vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        vector<int> position(n);

        int best = max_pages + 1;
        do {
            for (int p = 0; p < n; ++p)
                position[order[p]] = p;
            vector<Chord> chords;
            for (auto e : edges)
                chords.push_back({std::min(position[e.first], position[e.second]), std::max(position[e.first], position[e.second])});
            vector<int> page(chords.size(), -1);
            for (int pages = 1; pages < best; ++pages)
                if (assign_pages(chords, page, 0, pages)) {
                    best = pages;
                    break;
                }
            if (best == 1)
                break;
        } while (std::next_permutation(order.begin() + 1, order.end()));
        return best;
    }

    auto is_connected(const Graph & g) -> bool
    {
        int n = g.vertex_count();
        if (n == 0)
            return true;
        vector<bool> seen(n, false);
        vector<int> stack{0};
        seen[0] = true;
        int count = 1;
        while (! stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbours(v))
                if (! seen[w]) {
                    seen[w] = true;
                    ++count;
                    stack.push_back(w);
                }
        }
        return count == n;
    }

    auto connected_graphs(int n) -> vector<Graph>
    {
        if (n < 1 || n > 6)
            throw InvalidSize{"connected graph enumeration supports 1..6 vertices"};

        vector<std::pair<int, int>> pairs;
        vector<vector<int>> pair_index(n, vector<int>(n, -1));
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                pair_index[u][v] = pair_index[v][u] = static_cast<int>(pairs.size());
                pairs.emplace_back(u, v);
            }
        int bits = static_cast<int>(pairs.size());

        // image of every pair bit under every permutation
        vector<vector<int>> images;
        vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            vector<int> image(bits);
            for (int b = 0; b < bits; ++b)
                image[b] = pair_index[perm[pairs[b].first]][perm[pairs[b].second]];
            images.push_back(std::move(image));
        } while (std::next_permutation(perm.begin(), perm.end()));

        auto build = [&](std::uint32_t mask) {
            Graph g(n);
            for (int b = 0; b < bits; ++b)
                if (mask >> b & 1)
                    g.add_edge(pairs[b].first, pairs[b].second);
            return g;
        };

        vector<Graph> result;
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << bits); ++mask) {
            if (std::popcount(mask) < n - 1)
                continue;
            bool canonical = true;
            for (const auto & image : images) {
                std::uint32_t permuted = 0;
                for (int b = 0; b < bits; ++b)
                    if (mask >> b & 1)
                        permuted |= std::uint32_t{1} << image[b];
                if (permuted < mask) {
                    canonical = false;
                    break;
                }
            }
            if (! canonical)
                continue;
            auto g = build(mask);
            if (is_connected(g))
                result.push_back(std::move(g));
        }
        return result;
    }

    auto random_connected_graph(int n, std::uint64_t & state) -> Graph
    {
        std::mt19937_64 rng(state);
        while (true) {
            Graph g(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (rng() & 1)
                        g.add_edge(u, v);
            if (is_connected(g)) {
                state = rng();
                return g;
            }
        }
    }

    auto run_equivalence_suite(int max_n, int samples, std::uint64_t seed) -> SuiteResult
    {
        SuiteResult result;
        auto check = [&](const Graph & g, const string & name) {
            int expected = brute_force_book_thickness(g, 4);
            auto report = book_thickness_exact(g);
            ++result.graphs_checked;
            bool agrees = report.status == SolverStatus::Exact
                && (expected <= 4 ? report.book_thickness == expected : report.book_thickness > 4);
            if (! agrees)
                result.mismatches.push_back(name + ": solver " + to_string(report.book_thickness) + ", brute force "
                    + (expected > 4 ? string{"> 4"} : to_string(expected)));
        };

        for (int n = 1; n <= max_n; ++n) {
            auto graphs = connected_graphs(n);
            for (size_t i = 0; i < graphs.size(); ++i)
                check(graphs[i], "n=" + to_string(n) + " #" + to_string(i));
        }

        std::uint64_t state = seed;
        for (int i = 0; i < samples; ++i)
            check(random_connected_graph(max_n + 1, state), "random n=" + to_string(max_n + 1) + " #" + to_string(i));
        return result;
    }
}
