#include <bookthick/constructions.hh>
#include <bookthick/heuristics.hh>
#include <bookthick/io.hh>

#include <doctest.h>

#include <random>

using namespace bookthick;
using nlohmann::json;

namespace
{
    auto random_labelled_graph(std::mt19937_64 & rng) -> Graph
    {
        int n = 1 + static_cast<int>(rng() % 12);
        Graph g(n);
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b)
                if (rng() % 3 == 0)
                    g.add_edge(a, b);
        const char * roles[] = {"K", "S", "T", "T2", "pad"};
        for (Vertex v = 0; v < n; ++v)
            if (rng() % 2)
                g.set_label(v, roles[rng() % 5]);
        return g;
    }
}

TEST_CASE("text format")
{
    Graph g(4);
    g.add_edge(2, 3);
    g.add_edge(0, 1);
    g.set_label(3, "S");
    CHECK(graph_to_text(g) == "4 2\n0 1\n2 3\n# label 3 S\n");
    CHECK(graph_from_text("4 2\n0 1\n\n2 3\n# label 3 S\n# a comment\n") == g);

    CHECK_THROWS_AS(graph_from_text(""), ParseError);
    CHECK_THROWS_AS(graph_from_text("3 2\n0 1\n"), ParseError);
    CHECK_THROWS_AS(graph_from_text("3 1\n0 0\n"), ParseError);
    CHECK_THROWS_AS(graph_from_text("3 1\n0 7\n"), ParseError);
    CHECK_THROWS_AS(graph_from_text("3 1\nzero one\n"), ParseError);
    CHECK_THROWS_AS(graph_from_text("x\n"), ParseError);
    CHECK_THROWS_AS(graph_from_text("3 0\n# label 9 K\n"), ParseError);
}

TEST_CASE("json format")
{
    auto g = complete_split(2, 1);
    auto j = graph_to_json(g);
    CHECK(j.dump() == R"({"edges":[[0,1],[0,2],[1,2]],"labels":{"0":"K","1":"K","2":"S"},"n":3})");
    CHECK(graph_from_json(j) == g);

    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"edges":[]})")), ParseError);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n":2,"edges":[[0]]})")), ParseError);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n":2,"edges":[[0,1]],"labels":{"x":"K"}})")), ParseError);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n":2,"edges":[[0,1],[1,0]]})")), ParseError);
    CHECK_THROWS_AS(parse_json("{"), ParseError);
}

TEST_CASE("serialisation round-trips byte for byte")
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = random_labelled_graph(rng);
        auto text = graph_to_text(g);
        CHECK(graph_from_text(text) == g);
        CHECK(graph_to_text(graph_from_text(text)) == text);

        auto dumped = graph_to_json(g).dump();
        CHECK(parse_graph(dumped) == g);
        CHECK(graph_to_json(parse_graph(dumped)).dump() == dumped);
    }
}

TEST_CASE("parse_graph detects the format")
{
    auto g = path_power(5, 2);
    CHECK(parse_graph(graph_to_text(g)) == g);
    CHECK(parse_graph("  \n" + graph_to_json(g).dump()) == g);
    json envelope{{"graph", graph_to_json(g)}, {"treedec", json::object()}};
    CHECK(parse_graph(envelope.dump()) == g);
}

TEST_CASE("tree decomposition json")
{
    auto q = theorem_q(4, 368);
    auto j = treedec_to_json(q.decomposition);
    CHECK(j["width"] == 4);
    CHECK(treedec_from_json(j) == q.decomposition);
    CHECK(treedec_from_json(json{{"treedec", j}}) == q.decomposition);
    CHECK_THROWS_AS(treedec_from_json(json::parse(R"({"bags":[[0]],"tree_edges":[[0]]})")), ParseError);

    auto r = report_to_json(validate(q.graph, q.decomposition));
    CHECK(r["valid"] == true);
    CHECK(r["smooth"] == true);
    CHECK(r["width"] == 4);
    CHECK(r["max_degree"] == 4);
    CHECK(r["violations"].empty());
}

TEST_CASE("embedding json")
{
    auto g = complete_graph(5);
    auto emb = first_fit_pages(g, CircularOrder{{0, 2, 4, 1, 3}});
    auto j = embedding_to_json(emb);
    CHECK(j["order"] == json::array({0, 2, 4, 1, 3}));
    CHECK(j["pages"].size() == 10u);
    CHECK(j["pages"][0].size() == 3u);

    auto back = embedding_from_json(j);
    CHECK(back.order.vertices() == emb.order.vertices());
    CHECK(back.page == emb.page);
    CHECK(back.page_count == emb.page_count);

    CHECK_THROWS_AS(embedding_from_json(json::parse(R"({"order":[0,0],"pages":[]})")), ParseError);
    CHECK_THROWS_AS(embedding_from_json(json::parse(R"({"order":[0,1],"pages":[[0,1,1],[1,0,2]]})")), ParseError);
    CHECK_THROWS_AS(embedding_from_json(json::parse(R"({"order":[0,1],"pages":[[0,1]]})")), ParseError);

    auto v = validation_to_json(validate_embedding(g, emb));
    CHECK(v["ok"] == true);
    CHECK(v["first_conflict"].is_null());
}

TEST_CASE("solver report json")
{
    SolverReport r;
    r.book_thickness = 2;
    r.lower_bound = 2;
    r.nodes_explored = 17;
    auto j = solver_report_to_json(r);
    CHECK(j["status"] == "Exact");
    CHECK(j["book_thickness"] == 2);
    CHECK(j["witness"].is_null());
    CHECK(j["nodes_explored"] == 17);
}
