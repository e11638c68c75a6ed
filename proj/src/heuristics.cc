#include <bookthick/heuristics.hh>
#include <bookthick/treedec.hh>

#include <algorithm>

using std::vector;

namespace bookthick
{
    auto first_fit_pages(const Graph & g, const CircularOrder & order) -> BookEmbedding
    {
        if (order.size() != g.vertex_count())
            throw InvalidGraph{"order size does not match the graph"};

        struct Chord
        {
            Edge edge;
            int left, right;
        };
        vector<Chord> chords;
        for (auto e : g.edges()) {
            int l = order.position(e.first), r = order.position(e.second);
            if (l > r)
                std::swap(l, r);
            chords.push_back({e, l, r});
        }
        std::stable_sort(chords.begin(), chords.end(), [](const Chord & a, const Chord & b) {
            if (a.left != b.left)
                return a.left < b.left;
            return (a.right - a.left) > (b.right - b.left);
        });

        BookEmbedding emb;
        emb.order = order;
        vector<vector<Chord>> pages;
        for (const auto & c : chords) {
            size_t p = 0;
            for (; p < pages.size(); ++p) {
                bool clash = std::any_of(pages[p].begin(), pages[p].end(), [&](const Chord & d) {
                    return crosses_at(c.left, c.right, d.left, d.right);
                });
                if (! clash)
                    break;
            }
            if (p == pages.size())
                pages.emplace_back();
            pages[p].push_back(c);
            emb.page[c.edge] = static_cast<int>(p) + 1;
        }
        emb.page_count = static_cast<int>(pages.size());
        return emb;
    }

    auto ktree_spine_order(const KTreeCertificate & cert) -> CircularOrder
    {
        auto td = decomposition_from_certificate(cert);
        int bag_count = static_cast<int>(td.bags.size());
        vector<vector<int>> children(bag_count);
        for (auto [parent, child] : td.tree_edges)
            children[parent].push_back(child);
        for (auto & c : children)
            std::sort(c.begin(), c.end());

        vector<Vertex> spine(cert.base_clique.begin(), cert.base_clique.end());
        std::sort(spine.begin(), spine.end());

        vector<int> stack{0};
        while (! stack.empty()) {
            int bag = stack.back();
            stack.pop_back();
            if (bag > 0) {
                const auto & [v, clique] = cert.additions[bag - 1];
                auto anchor = std::find_if(spine.begin(), spine.end(), [&](Vertex x) {
                    return std::find(clique.begin(), clique.end(), x) != clique.end();
                });
                spine.insert(anchor + 1, v);
            }
            for (auto it = children[bag].rbegin(); it != children[bag].rend(); ++it)
                stack.push_back(*it);
        }
        return CircularOrder{std::move(spine)};
    }

    auto embed_ktree(const Graph & g, const KTreeCertificate & cert) -> BookEmbedding
    {
        Graph replayed;
        try {
            replayed = replay(cert);
        }
        catch (const InvalidGraph & e) {
            throw InvalidCertificate{e.what()};
        }
        if (replayed.vertex_count() != g.vertex_count() || replayed.edges() != g.edges())
            throw InvalidCertificate{"certificate does not describe this graph"};
        return first_fit_pages(g, ktree_spine_order(cert));
    }
}
