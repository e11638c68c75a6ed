#ifndef BOOKTHICK_HEURISTICS_HH
#define BOOKTHICK_HEURISTICS_HH 1

#include <bookthick/embedding.hh>
#include <bookthick/graph.hh>

namespace bookthick
{
    class InvalidCertificate : public Error
    {
    public:
        using Error::Error;
    };

    /// Edges by (leftmost endpoint position, longest arc first), each put on
    /// the lowest page where it crosses nothing. Always valid.
    auto first_fit_pages(const Graph & g, const CircularOrder & order) -> BookEmbedding;

    /// The spine order used by embed_ktree: a depth-first walk of the
    /// certificate's bag tree, placing each added vertex just clockwise of
    /// the earliest-placed member of its attachment clique.
    auto ktree_spine_order(const KTreeCertificate & cert) -> CircularOrder;

    /// first_fit_pages over ktree_spine_order. Throws InvalidCertificate if
    /// the certificate does not replay to g.
    auto embed_ktree(const Graph & g, const KTreeCertificate & cert) -> BookEmbedding;
}

#endif
