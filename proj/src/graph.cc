#include <bookthick/graph.hh>

#include <algorithm>
#include <random>
#include <set>

using std::optional;
using std::pair;
using std::string;
using std::to_string;
using std::vector;

namespace bookthick
{
    Graph::Graph(int vertex_count)
    {
        if (vertex_count < 0)
            throw InvalidSize{"negative vertex count"};
        _adj.resize(vertex_count);
    }

    auto Graph::add_vertex() -> Vertex
    {
        _adj.emplace_back();
        return vertex_count() - 1;
    }

    auto Graph::add_edge(Vertex u, Vertex v) -> void
    {
        if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
            throw InvalidGraph{"edge " + to_string(u) + " " + to_string(v) + " has an endpoint out of range"};
        if (u == v)
            throw InvalidGraph{"self-loop at " + to_string(u)};

        auto & au = _adj[u];
        auto it = std::lower_bound(au.begin(), au.end(), v);
        if (it != au.end() && *it == v)
            throw InvalidGraph{"duplicate edge " + to_string(u) + " " + to_string(v)};
        au.insert(it, v);

        auto & av = _adj[v];
        av.insert(std::lower_bound(av.begin(), av.end(), u), u);
        ++_edge_count;
    }

    auto Graph::has_edge(Vertex u, Vertex v) const -> bool
    {
        if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
            return false;
        const auto & a = _adj[u].size() < _adj[v].size() ? _adj[u] : _adj[v];
        return std::binary_search(a.begin(), a.end(), &a == &_adj[u] ? v : u);
    }

    auto Graph::edges() const -> vector<Edge>
    {
        vector<Edge> result;
        result.reserve(_edge_count);
        for (Vertex u = 0; u < vertex_count(); ++u)
            for (Vertex v : _adj[u])
                if (u < v)
                    result.emplace_back(u, v);
        return result;
    }

    auto Graph::is_clique(const vector<Vertex> & vertices) const -> bool
    {
        for (size_t i = 0; i < vertices.size(); ++i)
            for (size_t j = i + 1; j < vertices.size(); ++j)
                if (! has_edge(vertices[i], vertices[j]))
                    return false;
        return true;
    }

    auto Graph::set_label(Vertex v, string role) -> void
    {
        if (v < 0 || v >= vertex_count())
            throw InvalidGraph{"label for unknown vertex " + to_string(v)};
        _labels[v] = std::move(role);
    }

    auto Graph::label(Vertex v) const -> optional<string>
    {
        auto it = _labels.find(v);
        if (it == _labels.end())
            return std::nullopt;
        return it->second;
    }

    auto without_vertex(const Graph & g, Vertex v) -> Graph
    {
        Graph result(g.vertex_count() - 1);
        auto renumber = [v](Vertex x) { return x < v ? x : x - 1; };
        for (auto e : g.edges())
            if (e.first != v && e.second != v)
                result.add_edge(renumber(e.first), renumber(e.second));
        for (const auto & [x, role] : g.labels())
            if (x != v)
                result.set_label(renumber(x), role);
        return result;
    }

    auto without_edge(const Graph & g, Edge e) -> Graph
    {
        Graph result(g.vertex_count());
        for (auto f : g.edges())
            if (f != e)
                result.add_edge(f.first, f.second);
        for (const auto & [x, role] : g.labels())
            result.set_label(x, role);
        return result;
    }

    auto complete_graph(int n) -> Graph
    {
        if (n < 1)
            throw InvalidSize{"complete graph needs at least one vertex"};
        Graph g(n);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                g.add_edge(u, v);
        return g;
    }

    auto add_simplicial(const Graph & g, const vector<Vertex> & clique) -> pair<Graph, Vertex>
    {
        for (Vertex v : clique)
            if (v < 0 || v >= g.vertex_count())
                throw NotAClique{"vertex " + to_string(v) + " is not in the graph"};
        if (! g.is_clique(clique))
            throw NotAClique{"attachment set is not a clique"};
        if (std::set<Vertex>(clique.begin(), clique.end()).size() != clique.size())
            throw NotAClique{"attachment set repeats a vertex"};

        Graph result = g;
        Vertex added = result.add_vertex();
        for (Vertex v : clique)
            result.add_edge(added, v);
        return {std::move(result), added};
    }

    auto replay(const KTreeCertificate & cert) -> Graph
    {
        if (cert.k < 1)
            throw InvalidGraph{"certificate has k < 1"};
        if (static_cast<int>(cert.base_clique.size()) != cert.k + 1)
            throw InvalidGraph{"base clique must have k+1 vertices"};

        int n = cert.vertex_count();
        Graph g(n);
        vector<bool> present(n, false);
        auto introduce = [&](Vertex v) {
            if (v < 0 || v >= n)
                throw InvalidGraph{"certificate vertex " + to_string(v) + " out of range"};
            if (present[v])
                throw InvalidGraph{"certificate introduces vertex " + to_string(v) + " twice"};
            present[v] = true;
        };

        for (Vertex v : cert.base_clique)
            introduce(v);
        for (size_t i = 0; i < cert.base_clique.size(); ++i)
            for (size_t j = i + 1; j < cert.base_clique.size(); ++j)
                g.add_edge(cert.base_clique[i], cert.base_clique[j]);

        for (const auto & [v, clique] : cert.additions) {
            if (static_cast<int>(clique.size()) != cert.k)
                throw InvalidGraph{"attachment of vertex " + to_string(v) + " does not have k vertices"};
            for (Vertex c : clique)
                if (c < 0 || c >= n || ! present[c])
                    throw InvalidGraph{"attachment of vertex " + to_string(v) + " uses a vertex not yet added"};
            if (! g.is_clique(clique))
                throw InvalidGraph{"attachment of vertex " + to_string(v) + " is not a clique"};
            introduce(v);
            for (Vertex c : clique)
                g.add_edge(v, c);
        }
        return g;
    }

    auto is_k_tree(const Graph & g, int k) -> optional<KTreeCertificate>
    {
        int n = g.vertex_count();
        if (k < 1 || n < k + 1)
            return std::nullopt;
        if (static_cast<std::int64_t>(g.edge_count()) != ktree_edge_count(n, k))
            return std::nullopt;

        vector<bool> alive(n, true);
        vector<int> degree(n);
        for (Vertex v = 0; v < n; ++v)
            degree[v] = g.degree(v);

        auto live_neighbours = [&](Vertex v) {
            vector<Vertex> result;
            for (Vertex w : g.neighbours(v))
                if (alive[w])
                    result.push_back(w);
            return result;
        };

        // candidates whose live degree is exactly k, checked lowest id first
        std::set<Vertex> candidates;
        for (Vertex v = 0; v < n; ++v)
            if (degree[v] == k)
                candidates.insert(v);

        vector<pair<Vertex, vector<Vertex>>> removals;
        int remaining = n;
        while (remaining > k + 1) {
            bool removed = false;
            for (auto it = candidates.begin(); it != candidates.end(); ++it) {
                Vertex v = *it;
                auto nbrs = live_neighbours(v);
                if (! g.is_clique(nbrs))
                    continue;

                candidates.erase(it);
                alive[v] = false;
                --remaining;
                for (Vertex w : nbrs)
                    if (--degree[w] == k)
                        candidates.insert(w);
                    else if (degree[w] < k)
                        candidates.erase(w);
                removals.emplace_back(v, std::move(nbrs));
                removed = true;
                break;
            }
            if (! removed)
                return std::nullopt;
        }

        KTreeCertificate cert;
        cert.k = k;
        for (Vertex v = 0; v < n; ++v)
            if (alive[v])
                cert.base_clique.push_back(v);
        if (! g.is_clique(cert.base_clique))
            return std::nullopt;
        cert.additions.assign(removals.rbegin(), removals.rend());
        return cert;
    }

    auto ktree_edge_count(std::int64_t n, std::int64_t k) -> std::int64_t
    {
        if (k < 1 || n < k + 1)
            throw InvalidSize{"a k-tree needs at least k+1 vertices"};
        return k * n - k * (k + 1) / 2;
    }

    auto random_ktree(int n, int k, std::uint64_t seed) -> KTreeCertificate
    {
        if (k < 1 || n < k + 1)
            throw InvalidSize{"a k-tree needs at least k+1 vertices"};

        std::mt19937_64 rng(seed);
        KTreeCertificate cert;
        cert.k = k;
        for (Vertex v = 0; v <= k; ++v)
            cert.base_clique.push_back(v);

        // every k-subset of the base clique, then k new ones per addition
        vector<vector<Vertex>> cliques;
        for (Vertex skip = 0; skip <= k; ++skip) {
            vector<Vertex> c;
            for (Vertex v = 0; v <= k; ++v)
                if (v != skip)
                    c.push_back(v);
            cliques.push_back(std::move(c));
        }

        for (Vertex v = k + 1; v < n; ++v) {
            std::uniform_int_distribution<size_t> pick(0, cliques.size() - 1);
            auto clique = cliques[pick(rng)];
            cert.additions.emplace_back(v, clique);
            for (size_t drop = 0; drop < clique.size(); ++drop) {
                auto c = clique;
                c[drop] = v;
                std::sort(c.begin(), c.end());
                cliques.push_back(std::move(c));
            }
        }
        return cert;
    }
}
