#include <bookthick/constructions.hh>
#include <bookthick/embedding.hh>
#include <bookthick/graph.hh>
#include <bookthick/heuristics.hh>
#include <bookthick/io.hh>
#include <bookthick/oracle.hh>
#include <bookthick/solver.hh>
#include <bookthick/treedec.hh>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using namespace bookthick;

using nlohmann::json;
using std::cerr;
using std::cout;
using std::optional;
using std::string;

namespace
{
    constexpr int exit_ok = 0;
    constexpr int exit_invalid = 1;
    constexpr int exit_usage = 2;

    struct UsageError : Error
    {
        using Error::Error;
    };

    auto read_file(const string & path) -> string
    {
        if (path == "-") {
            std::ostringstream s;
            s << std::cin.rdbuf();
            return s.str();
        }
        std::ifstream in{path};
        if (! in)
            throw UsageError{"cannot open " + path};
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    auto write_file(const string & path, const string & contents) -> void
    {
        std::ofstream out{path};
        if (! out)
            throw UsageError{"cannot write " + path};
        out << contents;
    }

    auto infer_k(const Graph & g) -> optional<int>
    {
        for (int k = 1; k < g.vertex_count(); ++k)
            if (ktree_edge_count(g.vertex_count(), k) == g.edge_count())
                return k;
        return std::nullopt;
    }

    struct GenArgs
    {
        string family;
        optional<int> k, n, m;
        string format = "json";
        bool with_treedec = false;
        std::uint64_t seed = 0;
    };

    auto require(const optional<int> & value, const string & name, const string & family) -> int
    {
        if (! value)
            throw UsageError{"--" + name + " is required for family " + family};
        return *value;
    }

    auto run_gen(const GenArgs & a) -> int
    {
        Graph g;
        optional<TreeDecomposition> td;
        optional<int> k_for_treedec;
        optional<KTreeCertificate> cert;

        const auto & f = a.family;
        if (f == "complete") {
            g = complete_graph(require(a.n, "n", f));
            k_for_treedec = g.vertex_count() - 1;
        }
        else if (f == "split") {
            int k = require(a.k, "k", f);
            g = complete_split(k, require(a.m, "m", f));
            k_for_treedec = k;
        }
        else if (f == "q") {
            auto q = theorem_q(require(a.k, "k", f), a.n);
            g = q.graph;
            td = q.decomposition;
        }
        else if (f == "path-power") {
            int k = require(a.k, "k", f);
            g = path_power(require(a.n, "n", f), k);
            k_for_treedec = k;
        }
        else if (f == "dujwoo") {
            int k = require(a.k, "k", f);
            g = dujwoo_gadget(k, require(a.m, "m", f));
            k_for_treedec = k;
        }
        else if (f == "complete-bipartite")
            g = complete_bipartite(require(a.m, "m", f), require(a.n, "n", f));
        else if (f == "ktree") {
            cert = random_ktree(require(a.n, "n", f), require(a.k, "k", f), a.seed);
            g = replay(*cert);
        }
        else if (f == "cycle")
            g = cycle_graph(require(a.n, "n", f));
        else if (f == "path") {
            g = path_graph(require(a.n, "n", f));
            k_for_treedec = 1;
        }
        else
            throw UsageError{"unknown family " + f};

        if (a.with_treedec && ! td) {
            if (! cert && k_for_treedec && *k_for_treedec >= 1)
                cert = is_k_tree(g, *k_for_treedec);
            if (! cert)
                throw UsageError{"family " + f + " has no k-tree decomposition to emit"};
            td = decomposition_from_certificate(*cert);
        }

        if (a.with_treedec) {
            json out{{"graph", graph_to_json(g)}, {"treedec", treedec_to_json(*td)}};
            cout << out.dump() << '\n';
        }
        else if (a.format == "text")
            cout << graph_to_text(g);
        else
            cout << graph_to_json(g).dump() << '\n';

        cerr << f << ": " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
        return exit_ok;
    }

    struct BtArgs
    {
        string graph;
        optional<int> max_pages;
        optional<double> time_budget;
        optional<std::uint64_t> node_limit;
        int threads = 1;
        string witness;
    };

    auto run_bt(const BtArgs & a) -> int
    {
        auto g = parse_graph(read_file(a.graph));
        SolverOptions opts;
        opts.max_pages = a.max_pages;
        if (a.time_budget)
            opts.time_budget = std::chrono::milliseconds{static_cast<long long>(*a.time_budget * 1000)};
        opts.node_limit = a.node_limit;
        opts.threads = a.threads;

        auto report = book_thickness_exact(g, opts);
        cout << solver_report_to_json(report).dump(2) << '\n';
        if (! a.witness.empty() && report.witness)
            write_file(a.witness, embedding_to_json(*report.witness).dump(2) + "\n");
        cerr << "book thickness " << report.book_thickness << " (" << status_name(report.status) << ", lower bound "
             << report.lower_bound << ", " << report.nodes_explored << " nodes)\n";
        return exit_ok;
    }

    struct EmbedArgs
    {
        string graph;
        string method = "ktree";
        string order;
        optional<int> k;
    };

    auto read_order(const string & path) -> CircularOrder
    {
        auto contents = read_file(path);
        auto first = contents.find_first_not_of(" \t\r\n");
        if (first != string::npos && (contents[first] == '[' || contents[first] == '{')) {
            auto j = parse_json(contents);
            if (j.is_object())
                j = j.at("order");
            return CircularOrder{j.get<std::vector<Vertex>>()};
        }
        std::istringstream in{contents};
        std::vector<Vertex> order;
        for (Vertex v; in >> v;)
            order.push_back(v);
        return CircularOrder{std::move(order)};
    }

    auto run_embed(const EmbedArgs & a) -> int
    {
        auto g = parse_graph(read_file(a.graph));
        BookEmbedding emb;
        if (a.method == "first-fit") {
            auto order = a.order.empty() ? CircularOrder::identity(g.vertex_count()) : read_order(a.order);
            emb = first_fit_pages(g, order);
        }
        else if (a.method == "ktree") {
            auto k = a.k ? a.k : infer_k(g);
            optional<KTreeCertificate> cert;
            if (k)
                cert = is_k_tree(g, *k);
            if (! cert) {
                cerr << "graph is not a k-tree\n";
                return exit_invalid;
            }
            emb = embed_ktree(g, *cert);
        }
        else
            throw UsageError{"unknown method " + a.method};

        auto check = validate_embedding(g, emb);
        cout << embedding_to_json(emb).dump() << '\n';
        cerr << a.method << ": " << check.pages_used << " pages, " << (check.ok ? "valid" : "INVALID") << '\n';
        return check.ok ? exit_ok : exit_invalid;
    }

    auto run_check(const string & graph, const string & embedding) -> int
    {
        auto g = parse_graph(read_file(graph));
        auto emb = embedding_from_json(parse_json(read_file(embedding)));
        auto result = validate_embedding(g, emb);
        cout << validation_to_json(result).dump(2) << '\n';
        return result.ok ? exit_ok : exit_invalid;
    }

    auto run_treedec_validate(const string & graph, const string & treedec) -> int
    {
        auto graph_text = read_file(graph);
        auto g = parse_graph(graph_text);
        auto td = treedec_from_json(parse_json(treedec.empty() ? graph_text : read_file(treedec)));
        auto report = validate(g, td);
        cout << report_to_json(report).dump(2) << '\n';
        return report.valid ? exit_ok : exit_invalid;
    }

    auto run_treedec_build(const string & graph, optional<int> k) -> int
    {
        auto g = parse_graph(read_file(graph));
        if (! k)
            k = infer_k(g);
        optional<KTreeCertificate> cert;
        if (k)
            cert = is_k_tree(g, *k);
        if (! cert) {
            cerr << "graph is not a k-tree\n";
            return exit_invalid;
        }
        cout << json{{"certificate", certificate_to_json(*cert)}, {"treedec", treedec_to_json(decomposition_from_certificate(*cert))}}.dump()
             << '\n';
        return exit_ok;
    }

    auto run_oracle(int max_n, int samples, std::uint64_t seed) -> int
    {
        auto result = oracle::run_equivalence_suite(max_n, samples, seed);
        cout << json{{"graphs_checked", result.graphs_checked}, {"mismatches", result.mismatches}}.dump(2) << '\n';
        cerr << result.graphs_checked << " graphs, " << result.mismatches.size() << " mismatches\n";
        return result.mismatches.empty() ? exit_ok : exit_invalid;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{"Book embeddings, k-trees and exact book thickness"};
    app.require_subcommand(1);

    GenArgs gen;
    auto gen_cmd = app.add_subcommand("gen", "Generate a graph family");
    gen_cmd->add_option("--family", gen.family, "complete|split|q|path-power|dujwoo|complete-bipartite|ktree|cycle|path")->required();
    gen_cmd->add_option("--k", gen.k);
    gen_cmd->add_option("--n", gen.n);
    gen_cmd->add_option("--m", gen.m);
    gen_cmd->add_option("--format", gen.format)->check(CLI::IsMember({"json", "text"}));
    gen_cmd->add_flag("--with-treedec", gen.with_treedec, "Emit {\"graph\":..., \"treedec\":...}");
    gen_cmd->add_option("--seed", gen.seed, "Seed for random k-trees");

    BtArgs bt;
    auto bt_cmd = app.add_subcommand("bt", "Exact book thickness");
    bt_cmd->add_option("--graph", bt.graph)->required();
    bt_cmd->add_option("--max-pages", bt.max_pages)->check(CLI::PositiveNumber);
    bt_cmd->add_option("--time-budget", bt.time_budget, "Seconds")->check(CLI::PositiveNumber);
    bt_cmd->add_option("--node-limit", bt.node_limit)->check(CLI::PositiveNumber);
    bt_cmd->add_option("--threads", bt.threads)->check(CLI::PositiveNumber);
    bt_cmd->add_option("--witness", bt.witness, "Write the witness embedding here");

    EmbedArgs embed;
    auto embed_cmd = app.add_subcommand("embed", "Heuristic book embedding");
    embed_cmd->add_option("--graph", embed.graph)->required();
    embed_cmd->add_option("--method", embed.method)->check(CLI::IsMember({"ktree", "first-fit"}));
    embed_cmd->add_option("--order", embed.order, "Spine order for first-fit");
    embed_cmd->add_option("--k", embed.k);

    string check_graph, check_embedding;
    auto check_cmd = app.add_subcommand("check", "Validate a book embedding");
    check_cmd->add_option("--graph", check_graph)->required();
    check_cmd->add_option("--embedding", check_embedding)->required();

    auto treedec_cmd = app.add_subcommand("treedec", "Tree decompositions");
    treedec_cmd->require_subcommand(1);
    string td_graph, td_file;
    optional<int> td_k;
    auto validate_cmd = treedec_cmd->add_subcommand("validate", "Validate a decomposition");
    validate_cmd->add_option("--graph", td_graph)->required();
    validate_cmd->add_option("--treedec", td_file, "Defaults to the graph file's \"treedec\" member");
    auto build_cmd = treedec_cmd->add_subcommand("build", "Smooth decomposition of a k-tree");
    build_cmd->add_option("--graph", td_graph)->required();
    build_cmd->add_option("--k", td_k);

    int oracle_max_n = 6, oracle_samples = 500;
    std::uint64_t oracle_seed = 0;
    auto oracle_cmd = app.add_subcommand("oracle", "Compare the solver with brute force on small graphs");
    oracle_cmd->add_option("--max-n", oracle_max_n)->check(CLI::Range(1, 6));
    oracle_cmd->add_option("--samples", oracle_samples)->check(CLI::NonNegativeNumber);
    oracle_cmd->add_option("--seed", oracle_seed);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        auto code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*gen_cmd)
            return run_gen(gen);
        if (*bt_cmd)
            return run_bt(bt);
        if (*embed_cmd)
            return run_embed(embed);
        if (*check_cmd)
            return run_check(check_graph, check_embedding);
        if (*validate_cmd)
            return run_treedec_validate(td_graph, td_file);
        if (*build_cmd)
            return run_treedec_build(td_graph, td_k);
        if (*oracle_cmd)
            return run_oracle(oracle_max_n, oracle_samples, oracle_seed);
    }
    catch (const ParseError & e) {
        cerr << "bookthick: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const Error & e) {
        cerr << "bookthick: " << e.what() << '\n' << app.help();
        return exit_usage;
    }
    catch (const nlohmann::json::exception & e) {
        cerr << "bookthick: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
