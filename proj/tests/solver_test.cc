#include <bookthick/constructions.hh>
#include <bookthick/oracle.hh>
#include <bookthick/solver.hh>

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace bookthick;
using std::vector;

namespace
{
    // Smallest page count for a fixed order by trying every assignment of
    // pages 1..p to the edges, p = 1, 2, ...
    auto pages_for_order_by_enumeration(const Graph & g, const CircularOrder & order) -> int
    {
        auto edges = g.edges();
        int m = static_cast<int>(edges.size());
        if (m == 0)
            return 0;
        for (int p = 1;; ++p) {
            vector<int> page(m, 0);
            while (true) {
                bool ok = true;
                for (int a = 0; a < m && ok; ++a)
                    for (int b = a + 1; b < m && ok; ++b)
                        ok = ! (page[a] == page[b] && crosses(order, edges[a], edges[b]));
                if (ok)
                    return p;
                int i = 0;
                while (i < m && ++page[i] == p)
                    page[i++] = 0;
                if (i == m)
                    break;
            }
        }
    }

    auto random_graph(int n, double density, std::mt19937_64 & rng) -> Graph
    {
        std::bernoulli_distribution coin(density);
        Graph g(n);
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b)
                if (coin(rng))
                    g.add_edge(a, b);
        return g;
    }

    auto random_tree(int n, std::mt19937_64 & rng) -> Graph
    {
        Graph g(n);
        for (Vertex v = 1; v < n; ++v)
            g.add_edge(static_cast<Vertex>(rng() % v), v);
        return g;
    }

    auto random_order(int n, std::mt19937_64 & rng) -> CircularOrder
    {
        vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        return CircularOrder{perm};
    }

    auto check_witness(const Graph & g, const SolverReport & report) -> void
    {
        REQUIRE(report.witness);
        auto r = validate_embedding(g, *report.witness);
        CHECK(r.ok);
        CHECK(r.pages_used == report.book_thickness);
    }
}

TEST_CASE("colour_graph")
{
    vector<vector<int>> triangle{{1, 2}, {0, 2}, {0, 1}};
    CHECK(! colour_graph(triangle, 2));
    auto c = colour_graph(triangle, 3);
    REQUIRE(c);
    CHECK((*c)[0] != (*c)[1]);
    CHECK((*c)[1] != (*c)[2]);
    CHECK((*c)[0] != (*c)[2]);

    vector<vector<int>> c5{{1, 4}, {0, 2}, {1, 3}, {2, 4}, {3, 0}};
    CHECK(! colour_graph(c5, 2));
    CHECK(colour_graph(c5, 3));
    CHECK(colour_graph(c5, 3, {0, 1}));

    CHECK(colour_graph({}, 0));
    CHECK(! colour_graph(triangle, 0));
    CHECK_THROWS_AS(colour_graph(c5, 3, {0, 2}), Error);
}

TEST_CASE("min_pages_for_order")
{
    vector<Vertex> perm{0, 1, 2, 3};
    do
        CHECK(min_pages_for_order(complete_graph(4), CircularOrder{perm}) == 2);
    while (std::next_permutation(perm.begin(), perm.end()));

    CHECK(min_pages_for_order(cycle_graph(4), CircularOrder::identity(4)) == 1);
    CHECK(min_pages_for_order(Graph(3), CircularOrder::identity(3)) == 0);

    // K5 needs 3 pages in every order
    vector<Vertex> five{0, 1, 2, 3, 4};
    do
        CHECK(min_pages_for_order(complete_graph(5), CircularOrder{five}) == 3);
    while (std::next_permutation(five.begin() + 1, five.end()));
}

TEST_CASE("min_pages_for_order matches enumeration of page assignments")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 3 + static_cast<int>(rng() % 5);
        auto g = random_graph(n, 0.6, rng);
        if (g.edge_count() > 12)
            continue;
        auto order = random_order(n, rng);
        CHECK(min_pages_for_order(g, order) == pages_for_order_by_enumeration(g, order));
        auto emb = optimal_pages_for_order(g, order);
        CHECK(validate_embedding(g, emb).ok);
    }
}

TEST_CASE("crossing clique never exceeds the pages an order needs")
{
    for (int n = 4; n <= 6; ++n)
        for (const auto & g : oracle::connected_graphs(n)) {
            vector<Vertex> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            do {
                CircularOrder order{perm};
                CHECK(crossing_clique_lower_bound(g, order) <= min_pages_for_order(g, order));
            } while (std::next_permutation(perm.begin() + 1, perm.end()));
        }

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        auto g = random_graph(7, 0.5, rng);
        auto order = random_order(7, rng);
        CHECK(crossing_clique_lower_bound(g, order) <= min_pages_for_order(g, order));
    }
}

TEST_CASE("known exact values")
{
    std::mt19937_64 rng(1);
    for (int n = 2; n <= 8; ++n)
        for (int trial = 0; trial < 5; ++trial) {
            auto tree = random_tree(n, rng);
            auto report = book_thickness_exact(tree);
            CHECK(report.status == SolverStatus::Exact);
            CHECK(report.book_thickness == 1);
            check_witness(tree, report);
        }

    for (int n = 3; n <= 8; ++n)
        CHECK(book_thickness_exact(cycle_graph(n)).book_thickness == 1);

    CHECK(book_thickness_exact(complete_graph(4)).book_thickness == 2);
    CHECK(book_thickness_exact(complete_bipartite(2, 3)).book_thickness == 2);
    CHECK(book_thickness_exact(complete_graph(5)).book_thickness == 3);
    CHECK(book_thickness_exact(complete_graph(6)).book_thickness == 3);

    auto k7 = book_thickness_exact(complete_graph(7));
    CHECK(k7.status == SolverStatus::Exact);
    CHECK(k7.book_thickness == 4);
    CHECK(k7.lower_bound == 4);
    check_witness(complete_graph(7), k7);

    auto p83 = book_thickness_exact(path_power(8, 3));
    CHECK(p83.book_thickness == 2);
    check_witness(path_power(8, 3), p83);
}

TEST_CASE("degenerate graphs")
{
    auto empty = book_thickness_exact(Graph(0));
    CHECK(empty.book_thickness == 0);
    CHECK(empty.status == SolverStatus::Exact);

    auto isolated = book_thickness_exact(Graph(5));
    CHECK(isolated.book_thickness == 0);
    REQUIRE(isolated.witness);
    CHECK(validate_embedding(Graph(5), *isolated.witness).pages_used == 0);

    CHECK(book_thickness_exact(complete_graph(2)).book_thickness == 1);
    CHECK(book_thickness_exact(complete_graph(3)).book_thickness == 1);

    // disconnected: a K4 next to a triangle
    Graph g(7);
    for (auto e : complete_graph(4).edges())
        g.add_edge(e.first, e.second);
    g.add_edge(4, 5);
    g.add_edge(5, 6);
    g.add_edge(4, 6);
    CHECK(book_thickness_exact(g).book_thickness == 2);
}

TEST_CASE("is_outerplanar")
{
    CHECK(is_outerplanar(cycle_graph(6)));
    CHECK(! is_outerplanar(complete_graph(4)));
    CHECK(! is_outerplanar(complete_bipartite(2, 3)));
    CHECK(is_outerplanar(Graph(4)));
    CHECK(is_outerplanar(path_power(7, 2)));
    CHECK(! is_outerplanar(path_power(7, 3)));
}

TEST_CASE("deleting an edge never increases book thickness")
{
    std::mt19937_64 rng(23);
    int checked = 0;
    while (checked < 30) {
        int n = 4 + static_cast<int>(rng() % 4);
        auto g = random_graph(n, 0.6, rng);
        if (g.edge_count() == 0)
            continue;
        auto edges = g.edges();
        auto removed = edges[rng() % edges.size()];
        int before = book_thickness_exact(g).book_thickness;
        int after = book_thickness_exact(without_edge(g, removed)).book_thickness;
        CHECK(after <= before);
        ++checked;
    }
}

TEST_CASE("every exact witness re-validates")
{
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = random_graph(4 + static_cast<int>(rng() % 5), 0.55, rng);
        auto report = book_thickness_exact(g);
        CHECK(report.status == SolverStatus::Exact);
        CHECK(report.lower_bound == report.book_thickness);
        check_witness(g, report);
    }
}

TEST_CASE("determinism")
{
    auto g = path_power(9, 3);
    auto a = book_thickness_exact(g);
    auto b = book_thickness_exact(g);
    CHECK(a.book_thickness == b.book_thickness);
    CHECK(a.nodes_explored == b.nodes_explored);
    REQUIRE(a.witness);
    REQUIRE(b.witness);
    CHECK(a.witness->order.vertices() == b.witness->order.vertices());
    CHECK(a.witness->page == b.witness->page);

    for (const auto & h : {complete_graph(7), complete_bipartite(3, 4), path_power(9, 3), dujwoo_gadget(2, 3)}) {
        SolverOptions parallel;
        parallel.threads = 4;
        auto sequential = book_thickness_exact(h);
        auto threaded = book_thickness_exact(h, parallel);
        CHECK(threaded.status == SolverStatus::Exact);
        CHECK(threaded.book_thickness == sequential.book_thickness);
        check_witness(h, threaded);
    }
}

TEST_CASE("budgets and caps")
{
    SUBCASE("node limit")
    {
        SolverOptions opts;
        opts.node_limit = 3;
        auto report = book_thickness_exact(complete_graph(7), opts);
        CHECK(report.status == SolverStatus::Timeout);
        CHECK(report.lower_bound <= report.book_thickness);
        CHECK(report.lower_bound == 3);
        check_witness(complete_graph(7), report);
    }

    SUBCASE("time budget")
    {
        SolverOptions opts;
        opts.time_budget = std::chrono::milliseconds{0};
        auto report = book_thickness_exact(complete_graph(9), opts);
        CHECK(report.status != SolverStatus::Exact);
        CHECK(report.lower_bound <= report.book_thickness);
        check_witness(complete_graph(9), report);
    }

    SUBCASE("page cap below the answer")
    {
        SolverOptions opts;
        opts.max_pages = 2;
        auto report = book_thickness_exact(complete_graph(8), opts);
        CHECK(report.status == SolverStatus::LowerBoundOnly);
        CHECK(report.lower_bound == 3);
        CHECK(report.book_thickness >= 4);
        check_witness(complete_graph(8), report);
    }

    SUBCASE("page cap at the answer")
    {
        SolverOptions opts;
        opts.max_pages = 2;
        auto report = book_thickness_exact(complete_bipartite(2, 3), opts);
        CHECK(report.status == SolverStatus::Exact);
        CHECK(report.book_thickness == 2);
    }

    SUBCASE("bad options")
    {
        SolverOptions opts;
        opts.threads = 0;
        CHECK_THROWS_AS(book_thickness_exact(complete_graph(3), opts), Error);
        SolverOptions cap;
        cap.max_pages = 0;
        CHECK_THROWS_AS(book_thickness_exact(complete_graph(3), cap), Error);
    }
}
