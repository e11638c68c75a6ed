#include <bookthick/constructions.hh>

#include <algorithm>

using std::optional;
using std::string;
using std::to_string;
using std::vector;

namespace bookthick
{
    auto complete_split(int k, int m) -> Graph
    {
        if (k < 1 || m < 1)
            throw InvalidSize{"complete split graph needs k >= 1 and m >= 1"};
        Graph g(k + m);
        for (Vertex u = 0; u < k; ++u) {
            g.set_label(u, "K");
            for (Vertex v = u + 1; v < k + m; ++v)
                g.add_edge(u, v);
        }
        for (Vertex v = k; v < k + m; ++v)
            g.set_label(v, "S");
        return g;
    }

    auto path_power(int n, int k) -> Graph
    {
        if (k < 1 || n < k + 1)
            throw InvalidSize{"path power needs n >= k+1"};
        Graph g(n);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n && v - u <= k; ++v)
                g.add_edge(u, v);
        return g;
    }

    auto dujwoo_gadget(int k, int m) -> Graph
    {
        if (k < 2 || m < 1)
            throw InvalidSize{"gadget needs k >= 2 and m >= 1"};
        Graph g = complete_split(k, m);
        for (int i = 0; i < m; ++i) {
            Vertex v = k + i;
            Vertex w = g.add_vertex();
            g.set_label(w, "T");
            g.add_edge(v, w);
            for (Vertex u = 1; u < k; ++u)
                g.add_edge(u, w);
        }
        return g;
    }

    auto complete_bipartite(int a, int b) -> Graph
    {
        if (a < 1 || b < 1)
            throw InvalidSize{"complete bipartite graph needs both sides non-empty"};
        Graph g(a + b);
        for (Vertex u = 0; u < a; ++u)
            for (Vertex v = a; v < a + b; ++v)
                g.add_edge(u, v);
        return g;
    }

    auto cycle_graph(int n) -> Graph
    {
        if (n < 3)
            throw InvalidSize{"cycle needs at least 3 vertices"};
        Graph g(n);
        for (Vertex u = 0; u + 1 < n; ++u)
            g.add_edge(u, u + 1);
        g.add_edge(0, n - 1);
        return g;
    }

    auto path_graph(int n) -> Graph
    {
        if (n < 1)
            throw InvalidSize{"path needs at least one vertex"};
        Graph g(n);
        for (Vertex u = 0; u + 1 < n; ++u)
            g.add_edge(u, u + 1);
        return g;
    }

    auto star_graph(int leaves) -> Graph
    {
        if (leaves < 0)
            throw InvalidSize{"negative leaf count"};
        Graph g(leaves + 1);
        for (Vertex v = 1; v <= leaves; ++v)
            g.add_edge(0, v);
        return g;
    }

    auto q_base_vertex_count(int k) -> int
    {
        return k + 11 * (2 * k * k + 1);
    }

    auto QArtifacts::roles() const -> std::map<string, vector<Vertex>>
    {
        std::map<string, vector<Vertex>> result;
        result["K"] = clique;
        result["S"] = s;
        result["T"] = t;
        result["pad"] = pad;
        for (const auto & gadget : gadgets)
            for (int i = 0; i < 3; ++i)
                result["T" + to_string(i + 2) + "(" + to_string(gadget.w) + ")"]
                    = vector<Vertex>(gadget.t[i].begin(), gadget.t[i].end());
        return result;
    }

    auto theorem_q(int k, optional<int> n) -> QArtifacts
    {
        if (k < 4)
            throw InvalidSize{"the construction needs k >= 4"};
        int base = q_base_vertex_count(k);
        int total = n.value_or(base);
        if (total < base)
            throw SizeTooSmall{"n = " + to_string(total) + " is below " + to_string(base)};

        int m = 2 * k * k + 1;
        QArtifacts q;
        q.k = k;

        for (Vertex u = 0; u < k; ++u)
            q.clique.push_back(u);
        for (int i = 0; i < m; ++i)
            q.s.push_back(k + i);
        for (int i = 0; i < m; ++i)
            q.t.push_back(k + m + i);
        for (int i = 0; i < m; ++i) {
            QGadget gadget{q.s[i], q.t[i], {}};
            for (int j = 0; j < 3; ++j)
                for (int x = 0; x < 3; ++x)
                    gadget.t[j][x] = k + 2 * m + 9 * i + 3 * j + x;
            q.gadgets.push_back(gadget);
        }
        for (Vertex x = base; x < total; ++x)
            q.pad.push_back(x);

        // (K + extra) minus the listed clique vertices, sorted
        auto attach = [&](vector<Vertex> extra, vector<Vertex> drop) {
            vector<Vertex> result;
            for (Vertex u : q.clique)
                if (std::find(drop.begin(), drop.end(), u) == drop.end())
                    result.push_back(u);
            result.insert(result.end(), extra.begin(), extra.end());
            std::sort(result.begin(), result.end());
            return result;
        };
        const Vertex u1 = q.clique[0];

        auto & cert = q.certificate;
        cert.k = k;
        cert.base_clique = attach({q.s[0]}, {});
        for (int i = 1; i < m; ++i)
            cert.additions.emplace_back(q.s[i], q.clique);
        for (const auto & gadget : q.gadgets)
            cert.additions.emplace_back(gadget.w, attach({gadget.v}, {u1}));
        for (const auto & gadget : q.gadgets)
            for (int j = 0; j < 3; ++j)
                for (Vertex x : gadget.t[j])
                    cert.additions.emplace_back(x, attach({gadget.v, gadget.w}, {u1, q.clique[j + 1]}));
        for (Vertex x : q.pad)
            cert.additions.emplace_back(x, q.clique);

        q.graph = replay(cert);
        for (Vertex u : q.clique)
            q.graph.set_label(u, "K");
        for (Vertex v : q.s)
            q.graph.set_label(v, "S");
        for (Vertex w : q.t)
            q.graph.set_label(w, "T");
        for (const auto & gadget : q.gadgets)
            for (int j = 0; j < 3; ++j)
                for (Vertex x : gadget.t[j])
                    q.graph.set_label(x, "T" + to_string(j + 2));
        for (Vertex x : q.pad)
            q.graph.set_label(x, "pad");

        auto & td = q.decomposition;
        td.declared_width = k;
        auto add_bag = [&](vector<Vertex> bag, optional<int> parent) {
            int index = static_cast<int>(td.bags.size());
            td.bags.push_back(std::move(bag));
            if (parent)
                td.tree_edges.emplace_back(*parent, index);
            return index;
        };

        vector<int> s_bags;
        for (int i = 0; i < m; ++i)
            s_bags.push_back(add_bag(attach({q.s[i]}, {}), i == 0 ? optional<int>{} : optional<int>{s_bags.back()}));

        for (int i = 0; i < m; ++i) {
            const auto & gadget = q.gadgets[i];
            int w_bag = add_bag(attach({gadget.v, gadget.w}, {u1}), s_bags[i]);
            for (int j = 0; j < 3; ++j) {
                int previous = w_bag;
                for (Vertex x : gadget.t[j])
                    previous = add_bag(attach({gadget.v, gadget.w, x}, {u1, q.clique[j + 1]}), previous);
            }
        }

        int previous = s_bags.back();
        for (Vertex x : q.pad)
            previous = add_bag(attach({x}, {}), previous);

        return q;
    }
}
