#ifndef BOOKTHICK_IO_HH
#define BOOKTHICK_IO_HH 1

#include <bookthick/embedding.hh>
#include <bookthick/graph.hh>
#include <bookthick/solver.hh>
#include <bookthick/treedec.hh>

#include <json.hpp>

#include <string>
#include <string_view>

namespace bookthick
{
    class ParseError : public Error
    {
    public:
        using Error::Error;
    };

    // Text graph format:
    //   n m
    //   u v          (m lines, 0-based, u < v, sorted)
    //   # label v role
    auto graph_to_text(const Graph & g) -> std::string;
    auto graph_from_text(std::string_view text) -> Graph;

    // {"n": 4, "edges": [[0,1], ...], "labels": {"0": "K", ...}}
    auto graph_to_json(const Graph & g) -> nlohmann::json;
    auto graph_from_json(const nlohmann::json & j) -> Graph;

    /// Accepts the text format, the JSON format, or a JSON object whose
    /// "graph" member holds the JSON format (as written by gen --with-treedec).
    auto parse_graph(std::string_view contents) -> Graph;

    // {"bags": [[...], ...], "tree_edges": [[i,j], ...], "width": k}
    auto treedec_to_json(const TreeDecomposition & td) -> nlohmann::json;
    /// Also accepts an object with a "treedec" member.
    auto treedec_from_json(const nlohmann::json & j) -> TreeDecomposition;

    auto report_to_json(const DecompositionReport & r) -> nlohmann::json;

    // {"order": [v0, v1, ...], "pages": [[u, v, p], ...]}
    auto embedding_to_json(const BookEmbedding & emb) -> nlohmann::json;
    auto embedding_from_json(const nlohmann::json & j) -> BookEmbedding;

    auto validation_to_json(const ValidationResult & r) -> nlohmann::json;
    auto solver_report_to_json(const SolverReport & r) -> nlohmann::json;

    auto certificate_to_json(const KTreeCertificate & cert) -> nlohmann::json;

    /// Parses JSON, rethrowing syntax errors as ParseError.
    auto parse_json(std::string_view contents) -> nlohmann::json;
}

#endif
