#include <bookthick/constructions.hh>
#include <bookthick/treedec.hh>

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace bookthick;
using std::vector;

TEST_CASE("complete_split")
{
    auto k2 = complete_split(1, 1);
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.edge_count() == 1);

    CHECK(complete_split(4, 33).edge_count() == 138);

    auto g = complete_split(2, 3);
    CHECK(g.has_edge(0, 1));
    CHECK(without_edge(g, Edge{0, 1}).edges() == complete_bipartite(2, 3).edges());
    CHECK(g.label(0) == "K");
    CHECK(g.label(4) == "S");

    for (int k = 1; k <= 6; ++k)
        for (int m = 1; m <= 12; ++m)
            CHECK(complete_split(k, m).edge_count() == k * (k - 1) / 2 + k * m);

    CHECK(is_k_tree(complete_split(4, 33), 4));
    CHECK_THROWS_AS(complete_split(0, 3), InvalidSize);
}

TEST_CASE("path_power")
{
    auto p5 = path_power(5, 1);
    CHECK(p5.edges() == path_graph(5).edges());
    CHECK(is_k_tree(path_power(6, 2), 2));
    for (int k = 1; k <= 4; ++k)
        for (int n = k + 1; n <= 15; ++n) {
            auto g = path_power(n, k);
            CHECK(g.edge_count() == ktree_edge_count(n, k));
            CHECK(is_k_tree(g, k));
        }
    CHECK_THROWS_AS(path_power(3, 3), InvalidSize);
}

TEST_CASE("dujwoo_gadget")
{
    auto g = dujwoo_gadget(2, 2);
    CHECK(g.vertex_count() == 6);
    CHECK(is_k_tree(g, 2));

    auto h = dujwoo_gadget(3, 3);
    CHECK(h.edge_count() == 21);
    CHECK(h.edge_count() == ktree_edge_count(9, 3));

    // w is attached to v and K - u_1, not to u_1
    auto w = 3 + 3;
    CHECK(h.label(w) == "T");
    CHECK(h.neighbours(w) == vector<Vertex>{1, 2, 3});
    CHECK_THROWS_AS(dujwoo_gadget(1, 2), InvalidSize);
}

TEST_CASE("theorem_q for k = 4")
{
    auto q = theorem_q(4);
    const auto & g = q.graph;

    CHECK(q_base_vertex_count(4) == 4 + 11 * (2 * 16 + 1));
    CHECK(g.vertex_count() == 367);
    CHECK(g.edge_count() == 1458);
    CHECK(g.edge_count() == ktree_edge_count(367, 4));

    CHECK(q.clique.size() == 4u);
    CHECK(q.s.size() == 33u);
    CHECK(q.t.size() == 33u);
    CHECK(q.gadgets.size() == 33u);
    CHECK(q.pad.empty());

    SUBCASE("every vertex has exactly one role")
    {
        vector<int> seen(g.vertex_count(), 0);
        for (const auto & [role, vertices] : q.roles()) {
            if (role.size() > 1 && role[0] == 'T')
                CHECK(vertices.size() == 3u);
            for (Vertex v : vertices)
                ++seen[v];
        }
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            CHECK(seen[v] == 1);
            CHECK(g.label(v));
        }
        CHECK(q.roles().size() == 4 + 3 * 33);
    }

    SUBCASE("attachments follow the construction")
    {
        const Vertex u1 = q.clique[0];
        for (const auto & gadget : q.gadgets) {
            vector<Vertex> expect_w{1, 2, 3, gadget.v};
            std::sort(expect_w.begin(), expect_w.end());
            auto nw = g.neighbours(gadget.w);
            // w also sees its nine children
            vector<Vertex> nw_low;
            for (Vertex x : nw)
                if (x < gadget.w)
                    nw_low.push_back(x);
            CHECK(nw_low == expect_w);
            CHECK(! g.has_edge(gadget.w, u1));

            for (int i = 0; i < 3; ++i)
                for (Vertex x : gadget.t[i]) {
                    vector<Vertex> expect;
                    for (Vertex u : q.clique)
                        if (u != u1 && u != q.clique[i + 1])
                            expect.push_back(u);
                    expect.push_back(gadget.v);
                    expect.push_back(gadget.w);
                    std::sort(expect.begin(), expect.end());
                    CHECK(g.neighbours(x) == expect);
                    CHECK(g.label(x) == "T" + std::to_string(i + 2));
                }
        }
        for (Vertex v : q.s)
            CHECK(g.degree(v) == 4 + 1 + 9);
    }

    SUBCASE("is a 4-tree and the certificate replays")
    {
        CHECK(is_k_tree(g, 4));
        auto replayed = replay(q.certificate);
        CHECK(replayed.edges() == g.edges());
    }

    SUBCASE("decomposition is smooth, width 4, host degree exactly 4")
    {
        auto r = validate(g, q.decomposition);
        CHECK(r.valid);
        CHECK(r.smooth);
        CHECK(r.width == 4);
        CHECK(r.max_degree == 4);
        CHECK(r.violations.empty());
        CHECK(q.decomposition.bags.size() == 367u - 4u);

        vector<int> degree(q.decomposition.bags.size(), 0);
        for (auto [a, b] : q.decomposition.tree_edges) {
            ++degree[a];
            ++degree[b];
        }
        CHECK(std::count(degree.begin(), degree.end(), 4) == 33);
    }
}

TEST_CASE("theorem_q with padding")
{
    auto q = theorem_q(4, 370);
    CHECK(q.pad.size() == 3u);
    CHECK(q.graph.vertex_count() == 370);
    CHECK(q.graph.edge_count() == ktree_edge_count(370, 4));
    for (Vertex x : q.pad)
        CHECK(q.graph.neighbours(x) == q.clique);
    CHECK(is_k_tree(q.graph, 4));
    auto r = validate(q.graph, q.decomposition);
    CHECK(r.valid);
    CHECK(r.smooth);
    CHECK(r.width == 4);
    CHECK(r.max_degree == 4);

    CHECK_THROWS_AS(theorem_q(4, 100), SizeTooSmall);
    CHECK_THROWS_AS(theorem_q(4, 366), SizeTooSmall);
    CHECK_THROWS_AS(theorem_q(3), InvalidSize);
}

TEST_CASE("theorem_q for k = 5")
{
    auto q = theorem_q(5);
    CHECK(q.graph.vertex_count() == 5 + 11 * 51);
    CHECK(q.graph.vertex_count() == 566);
    CHECK(q.graph.edge_count() == ktree_edge_count(566, 5));
    CHECK(is_k_tree(q.graph, 5));
    auto r = validate(q.graph, q.decomposition);
    CHECK(r.valid);
    CHECK(r.smooth);
    CHECK(r.width == 5);
    CHECK(r.max_degree == 4);
}

TEST_CASE("theorem_q is reproducible")
{
    auto a = theorem_q(4, 368);
    auto b = theorem_q(4, 368);
    CHECK(a.graph == b.graph);
    CHECK(a.decomposition == b.decomposition);
    CHECK(a.certificate == b.certificate);
}
