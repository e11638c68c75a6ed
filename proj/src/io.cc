#include <bookthick/io.hh>

#include <algorithm>
#include <cctype>
#include <sstream>

using nlohmann::json;
using std::string;
using std::string_view;
using std::to_string;
using std::vector;

namespace bookthick
{
    auto graph_to_text(const Graph & g) -> string
    {
        std::ostringstream out;
        out << g.vertex_count() << ' ' << g.edge_count() << '\n';
        for (auto e : g.edges())
            out << e.first << ' ' << e.second << '\n';
        for (const auto & [v, role] : g.labels())
            out << "# label " << v << ' ' << role << '\n';
        return out.str();
    }

    auto graph_from_text(string_view text) -> Graph
    {
        std::istringstream in{string{text}};
        string line;
        int line_number = 0;
        auto fail = [&](const string & why) -> ParseError {
            return ParseError{"line " + to_string(line_number) + ": " + why};
        };

        auto next_line = [&]() -> bool {
            while (std::getline(in, line)) {
                ++line_number;
                if (line.find_first_not_of(" \t\r") != string::npos)
                    return true;
            }
            return false;
        };

        if (! next_line())
            throw ParseError{"empty graph file"};
        int n = -1, m = -1;
        {
            std::istringstream header{line};
            if (! (header >> n >> m) || n < 0 || m < 0)
                throw fail("expected 'n m'");
        }

        Graph g(n);
        int edges_read = 0;
        try {
            while (next_line()) {
                std::istringstream fields{line};
                if (line.find_first_not_of(" \t") != string::npos && line[line.find_first_not_of(" \t")] == '#') {
                    string hash, keyword, role;
                    int v;
                    fields >> hash >> keyword;
                    if (keyword == "label") {
                        if (! (fields >> v >> role))
                            throw fail("expected '# label v role'");
                        g.set_label(v, role);
                    }
                    continue;
                }
                int u, v;
                if (! (fields >> u >> v))
                    throw fail("expected 'u v'");
                g.add_edge(u, v);
                ++edges_read;
            }
        }
        catch (const InvalidGraph & e) {
            throw fail(e.what());
        }
        if (edges_read != m)
            throw ParseError{"header promises " + to_string(m) + " edges, found " + to_string(edges_read)};
        return g;
    }

    auto graph_to_json(const Graph & g) -> json
    {
        json edges = json::array();
        for (auto e : g.edges())
            edges.push_back({e.first, e.second});
        json j;
        j["n"] = g.vertex_count();
        j["edges"] = std::move(edges);
        json labels = json::object();
        for (const auto & [v, role] : g.labels())
            labels[to_string(v)] = role;
        j["labels"] = std::move(labels);
        return j;
    }

    auto graph_from_json(const json & j) -> Graph
    {
        try {
            Graph g(j.at("n").get<int>());
            for (const auto & e : j.at("edges")) {
                if (! e.is_array() || e.size() != 2)
                    throw ParseError{"edge must be a pair"};
                g.add_edge(e[0].get<int>(), e[1].get<int>());
            }
            if (j.contains("labels"))
                for (const auto & [key, role] : j.at("labels").items()) {
                    size_t used = 0;
                    int v = std::stoi(key, &used);
                    if (used != key.size())
                        throw ParseError{"label key '" + key + "' is not a vertex id"};
                    g.set_label(v, role.get<string>());
                }
            return g;
        }
        catch (const json::exception & e) {
            throw ParseError{string{"malformed graph JSON: "} + e.what()};
        }
        catch (const std::invalid_argument &) {
            throw ParseError{"label key is not a vertex id"};
        }
        catch (const InvalidGraph & e) {
            throw ParseError{e.what()};
        }
    }

    auto parse_json(string_view contents) -> json
    {
        try {
            return json::parse(contents);
        }
        catch (const json::parse_error & e) {
            throw ParseError{e.what()};
        }
    }

    auto parse_graph(string_view contents) -> Graph
    {
        auto first = std::find_if(contents.begin(), contents.end(), [](char c) { return ! std::isspace(static_cast<unsigned char>(c)); });
        if (first != contents.end() && *first == '{') {
            auto j = parse_json(contents);
            if (j.contains("graph"))
                return graph_from_json(j.at("graph"));
            return graph_from_json(j);
        }
        return graph_from_text(contents);
    }

    auto treedec_to_json(const TreeDecomposition & td) -> json
    {
        json j;
        j["bags"] = td.bags;
        json edges = json::array();
        for (auto [a, b] : td.tree_edges)
            edges.push_back({a, b});
        j["tree_edges"] = std::move(edges);
        if (td.declared_width >= 0)
            j["width"] = td.declared_width;
        return j;
    }

    auto treedec_from_json(const json & j) -> TreeDecomposition
    {
        if (j.contains("treedec"))
            return treedec_from_json(j.at("treedec"));
        try {
            TreeDecomposition td;
            td.bags = j.at("bags").get<vector<vector<Vertex>>>();
            for (const auto & e : j.at("tree_edges")) {
                if (! e.is_array() || e.size() != 2)
                    throw ParseError{"tree edge must be a pair"};
                td.tree_edges.emplace_back(e[0].get<int>(), e[1].get<int>());
            }
            if (j.contains("width"))
                td.declared_width = j.at("width").get<int>();
            return td;
        }
        catch (const json::exception & e) {
            throw ParseError{string{"malformed decomposition JSON: "} + e.what()};
        }
    }

    auto report_to_json(const DecompositionReport & r) -> json
    {
        return json{
            {"valid", r.valid},
            {"width", r.width},
            {"smooth", r.smooth},
            {"max_degree", r.max_degree},
            {"violations", r.violations}};
    }

    auto embedding_to_json(const BookEmbedding & emb) -> json
    {
        json pages = json::array();
        for (const auto & [e, p] : emb.page)
            pages.push_back({e.first, e.second, p});
        return json{{"order", emb.order.vertices()}, {"pages", std::move(pages)}};
    }

    auto embedding_from_json(const json & j) -> BookEmbedding
    {
        if (j.contains("witness") && ! j.contains("order"))
            return embedding_from_json(j.at("witness"));
        try {
            BookEmbedding emb;
            emb.order = CircularOrder{j.at("order").get<vector<Vertex>>()};
            for (const auto & entry : j.at("pages")) {
                if (! entry.is_array() || entry.size() != 3)
                    throw ParseError{"page entry must be [u, v, p]"};
                Vertex u = entry[0].get<int>(), v = entry[1].get<int>();
                if (u == v)
                    throw ParseError{"page entry for a self-loop"};
                int p = entry[2].get<int>();
                if (! emb.page.emplace(Edge{u, v}, p).second)
                    throw ParseError{"edge " + to_string(u) + " " + to_string(v) + " is assigned twice"};
                emb.page_count = std::max(emb.page_count, p);
            }
            return emb;
        }
        catch (const json::exception & e) {
            throw ParseError{string{"malformed embedding JSON: "} + e.what()};
        }
        catch (const InvalidGraph & e) {
            throw ParseError{e.what()};
        }
    }

    auto validation_to_json(const ValidationResult & r) -> json
    {
        json j{{"ok", r.ok}, {"pages_used", r.pages_used}};
        if (r.first_conflict) {
            auto [e, f] = *r.first_conflict;
            j["first_conflict"] = json::array({json::array({e.first, e.second}), json::array({f.first, f.second})});
        }
        else
            j["first_conflict"] = nullptr;
        if (r.finding)
            j["finding"] = *r.finding;
        return j;
    }

    auto solver_report_to_json(const SolverReport & r) -> json
    {
        json j{
            {"status", string{status_name(r.status)}},
            {"book_thickness", r.book_thickness},
            {"lower_bound", r.lower_bound},
            {"nodes_explored", r.nodes_explored},
            {"elapsed_seconds", r.elapsed.count()}};
        j["witness"] = r.witness ? embedding_to_json(*r.witness) : json(nullptr);
        return j;
    }

    auto certificate_to_json(const KTreeCertificate & cert) -> json
    {
        json additions = json::array();
        for (const auto & [v, clique] : cert.additions)
            additions.push_back({{"vertex", v}, {"clique", clique}});
        return json{{"k", cert.k}, {"base_clique", cert.base_clique}, {"additions", std::move(additions)}};
    }
}
