#include <bookthick/embedding.hh>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

using std::optional;
using std::pair;
using std::span;
using std::string;
using std::to_string;
using std::vector;

namespace bookthick
{
    CircularOrder::CircularOrder(vector<Vertex> order) :
        _order(std::move(order)),
        _position(_order.size(), -1)
    {
        int n = size();
        for (int p = 0; p < n; ++p) {
            Vertex v = _order[p];
            if (v < 0 || v >= n)
                throw InvalidGraph{"order mentions vertex " + to_string(v) + " outside 0.." + to_string(n - 1)};
            if (_position[v] != -1)
                throw InvalidGraph{"order repeats vertex " + to_string(v)};
            _position[v] = p;
        }
    }

    auto CircularOrder::identity(int n) -> CircularOrder
    {
        vector<Vertex> order(n);
        for (int i = 0; i < n; ++i)
            order[i] = i;
        return CircularOrder{std::move(order)};
    }

    auto CircularOrder::in_arc(Vertex a, Vertex b, Vertex x) const -> bool
    {
        int n = size();
        int pa = position(a), pb = position(b), px = position(x);
        int span_ab = (pb - pa + n) % n;
        int span_ax = (px - pa + n) % n;
        return span_ax > 0 && span_ax < span_ab;
    }

    auto crosses(const CircularOrder & order, Edge e, Edge f) -> bool
    {
        if (e.first == f.first || e.first == f.second || e.second == f.first || e.second == f.second)
            return false;
        return order.in_arc(e.first, e.second, f.first) != order.in_arc(e.first, e.second, f.second);
    }

    auto validate_embedding(const Graph & g, const BookEmbedding & emb) -> ValidationResult
    {
        ValidationResult result;
        auto fail = [&](string why) {
            result.ok = false;
            result.finding = std::move(why);
            return result;
        };

        if (emb.order.size() != g.vertex_count())
            return fail("order has " + to_string(emb.order.size()) + " vertices, graph has " + to_string(g.vertex_count()));

        auto edges = g.edges();
        for (auto e : edges)
            if (! emb.page.contains(e))
                return fail("edge " + to_string(e.first) + " " + to_string(e.second) + " has no page");
        if (emb.page.size() != edges.size())
            for (const auto & [e, p] : emb.page)
                if (! g.has_edge(e.first, e.second))
                    return fail("page assigned to non-edge " + to_string(e.first) + " " + to_string(e.second));

        std::map<int, vector<Edge>> by_page;
        for (const auto & [e, p] : emb.page) {
            if (p < 1 || (emb.page_count > 0 && p > emb.page_count))
                return fail("edge " + to_string(e.first) + " " + to_string(e.second) + " is on page " + to_string(p)
                    + ", outside 1.." + to_string(emb.page_count));
            by_page[p].push_back(e);
        }

        // the lexicographically first conflicting pair over g.edges() order
        for (size_t i = 0; i < edges.size(); ++i) {
            int page = emb.page.at(edges[i]);
            for (size_t j = i + 1; j < edges.size(); ++j)
                if (emb.page.at(edges[j]) == page && crosses(emb.order, edges[i], edges[j])) {
                    result.ok = false;
                    result.first_conflict = pair{edges[i], edges[j]};
                    result.pages_used = static_cast<int>(by_page.size());
                    return result;
                }
        }

        result.ok = true;
        result.pages_used = static_cast<int>(by_page.size());
        return result;
    }

    auto density_lower_bound(const Graph & g) -> int
    {
        if (g.vertex_count() < 1)
            throw InvalidSize{"density bound needs at least one vertex"};
        std::int64_t n = g.vertex_count(), m = g.edge_count();
        // ceil((m+1)/n) - 1
        return static_cast<int>((m + 1 + n - 1) / n - 1);
    }

    auto crossing_graph(const CircularOrder & order, span<const Edge> edges) -> vector<vector<int>>
    {
        int m = static_cast<int>(edges.size());
        vector<vector<int>> adj(m);
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (crosses(order, edges[i], edges[j])) {
                    adj[i].push_back(j);
                    adj[j].push_back(i);
                }
        return adj;
    }

    namespace
    {
        using Bits = std::uint64_t;

        struct CliqueSearch
        {
            const vector<Bits> & adj;
            vector<int> best;
            vector<int> current;

            auto expand(Bits candidates) -> void
            {
                // greedy colouring of the candidates gives an upper bound per vertex
                vector<int> order, bound;
                Bits uncoloured = candidates;
                int colour = 0;
                while (uncoloured) {
                    ++colour;
                    Bits available = uncoloured;
                    while (available) {
                        int v = std::countr_zero(available);
                        available &= ~adj[v] & ~(Bits{1} << v);
                        uncoloured &= ~(Bits{1} << v);
                        order.push_back(v);
                        bound.push_back(colour);
                    }
                }

                for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
                    if (current.size() + bound[i] <= best.size())
                        return;
                    int v = order[i];
                    current.push_back(v);
                    Bits next = candidates & adj[v];
                    if (next == 0) {
                        if (current.size() > best.size())
                            best = current;
                    }
                    else
                        expand(next);
                    current.pop_back();
                    candidates &= ~(Bits{1} << v);
                }
            }
        };
    }

    auto max_crossing_clique(const Graph & g, const CircularOrder & order) -> vector<int>
    {
        auto edges = g.edges();
        int m = static_cast<int>(edges.size());
        if (m == 0)
            return {};
        auto adj = crossing_graph(order, edges);

        if (m <= 64) {
            vector<Bits> bits(m, 0);
            for (int i = 0; i < m; ++i)
                for (int j : adj[i])
                    bits[i] |= Bits{1} << j;
            CliqueSearch search{bits, {}, {}};
            Bits all = m == 64 ? ~Bits{0} : (Bits{1} << m) - 1;
            search.expand(all);
            std::sort(search.best.begin(), search.best.end());
            return search.best;
        }

        // greedy from the highest-degree start vertices: repeatedly take the candidate with
        // most crossings inside the remaining candidate set
        vector<int> starts(m);
        for (int i = 0; i < m; ++i)
            starts[i] = i;
        std::stable_sort(starts.begin(), starts.end(), [&](int a, int b) { return adj[a].size() > adj[b].size(); });
        starts.resize(std::min(m, 64));

        vector<int> best;
        for (int start : starts) {
            if (adj[start].size() + 1 <= best.size())
                continue;
            vector<int> clique{start};
            vector<int> candidates = adj[start];
            while (! candidates.empty()) {
                int pick = -1, pick_score = -1;
                std::set<int> cand_set(candidates.begin(), candidates.end());
                for (int c : candidates) {
                    int score = 0;
                    for (int d : adj[c])
                        score += cand_set.contains(d);
                    if (score > pick_score) {
                        pick = c;
                        pick_score = score;
                    }
                }
                clique.push_back(pick);
                vector<int> next;
                for (int d : adj[pick])
                    if (cand_set.contains(d))
                        next.push_back(d);
                candidates = std::move(next);
            }
            if (clique.size() > best.size())
                best = std::move(clique);
        }
        std::sort(best.begin(), best.end());
        return best;
    }

    auto crossing_clique_lower_bound(const Graph & g, const CircularOrder & order) -> int
    {
        return static_cast<int>(max_crossing_clique(g, order).size());
    }
}
