#include <bookthick/treedec.hh>

#include <algorithm>
#include <numeric>
#include <set>

using std::string;
using std::to_string;
using std::vector;

namespace bookthick
{
    namespace
    {
        auto sorted(vector<Vertex> v) -> vector<Vertex>
        {
            std::sort(v.begin(), v.end());
            return v;
        }

        auto common_count(const vector<Vertex> & a, const vector<Vertex> & b) -> int
        {
            auto sa = sorted(a), sb = sorted(b);
            vector<Vertex> both;
            std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(both));
            return static_cast<int>(both.size());
        }

        struct DisjointSets
        {
            vector<int> parent;

            explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

            auto find(int x) -> int
            {
                while (parent[x] != x)
                    x = parent[x] = parent[parent[x]];
                return x;
            }

            auto unite(int a, int b) -> bool
            {
                a = find(a);
                b = find(b);
                if (a == b)
                    return false;
                parent[a] = b;
                return true;
            }
        };
    }

    auto validate(const Graph & g, const TreeDecomposition & td) -> DecompositionReport
    {
        DecompositionReport report;
        auto & violations = report.violations;
        int bag_count = static_cast<int>(td.bags.size());
        int n = g.vertex_count();

        // host tree
        bool host_ok = true;
        vector<int> host_degree(bag_count, 0);
        vector<vector<int>> host_adj(bag_count);
        std::set<std::pair<int, int>> seen_tree_edges;
        DisjointSets components(bag_count);
        for (auto [a, b] : td.tree_edges) {
            if (a < 0 || b < 0 || a >= bag_count || b >= bag_count) {
                violations.push_back("tree edge " + to_string(a) + "-" + to_string(b) + " refers to a missing bag");
                host_ok = false;
                continue;
            }
            if (a == b) {
                violations.push_back("tree edge loops at bag " + to_string(a));
                host_ok = false;
                continue;
            }
            if (! seen_tree_edges.insert(std::minmax(a, b)).second) {
                violations.push_back("tree edge " + to_string(a) + "-" + to_string(b) + " is repeated");
                host_ok = false;
                continue;
            }
            if (! components.unite(a, b)) {
                violations.push_back("tree edge " + to_string(a) + "-" + to_string(b) + " closes a cycle");
                host_ok = false;
            }
            ++host_degree[a];
            ++host_degree[b];
            host_adj[a].push_back(b);
            host_adj[b].push_back(a);
        }
        for (int i = 1; i < bag_count; ++i)
            if (components.find(i) != components.find(0)) {
                violations.push_back("bag " + to_string(i) + " is not connected to bag 0");
                host_ok = false;
                break;
            }
        report.max_degree = bag_count == 0 ? 0 : *std::max_element(host_degree.begin(), host_degree.end());

        // bag contents
        bool contents_ok = true;
        vector<vector<int>> bags_of(n);
        int max_bag = 0;
        for (int i = 0; i < bag_count; ++i) {
            const auto & bag = td.bags[i];
            max_bag = std::max<int>(max_bag, bag.size());
            std::set<Vertex> in_bag;
            for (Vertex v : bag) {
                if (v < 0 || v >= n) {
                    violations.push_back("bag " + to_string(i) + " contains unknown vertex " + to_string(v));
                    contents_ok = false;
                    continue;
                }
                if (! in_bag.insert(v).second) {
                    violations.push_back("bag " + to_string(i) + " repeats vertex " + to_string(v));
                    contents_ok = false;
                    continue;
                }
                bags_of[v].push_back(i);
            }
        }
        report.width = max_bag - 1;

        bool coverage_ok = true;
        for (Vertex v = 0; v < n; ++v)
            if (bags_of[v].empty()) {
                violations.push_back("vertex " + to_string(v) + " is in no bag");
                coverage_ok = false;
            }

        for (auto e : g.edges()) {
            const auto & a = bags_of[e.first];
            const auto & b = bags_of[e.second];
            vector<int> both;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
            if (both.empty()) {
                violations.push_back("edge " + to_string(e.first) + " " + to_string(e.second) + " is in no bag");
                coverage_ok = false;
            }
        }

        // occurrences of each vertex must induce a connected subtree
        bool subtree_ok = true;
        if (host_ok) {
            vector<int> mark(bag_count, -1);
            for (Vertex v = 0; v < n; ++v) {
                const auto & occ = bags_of[v];
                if (occ.size() <= 1)
                    continue;
                for (int b : occ)
                    mark[b] = v;
                vector<int> stack{occ.front()};
                vector<bool> reached(bag_count, false);
                reached[occ.front()] = true;
                size_t count = 1;
                while (! stack.empty()) {
                    int b = stack.back();
                    stack.pop_back();
                    for (int c : host_adj[b])
                        if (mark[c] == v && ! reached[c]) {
                            reached[c] = true;
                            ++count;
                            stack.push_back(c);
                        }
                }
                if (count != occ.size()) {
                    violations.push_back("bags containing vertex " + to_string(v) + " are not connected");
                    subtree_ok = false;
                }
            }
        }

        report.valid = host_ok && contents_ok && coverage_ok && subtree_ok;

        if (td.declared_width >= 0 && td.declared_width != report.width)
            violations.push_back("declared width " + to_string(td.declared_width) + " differs from actual width " + to_string(report.width));

        if (report.valid) {
            bool smooth = true;
            for (int i = 0; i < bag_count; ++i)
                if (static_cast<int>(td.bags[i].size()) != report.width + 1) {
                    violations.push_back("bag " + to_string(i) + " has " + to_string(td.bags[i].size()) + " vertices, not " + to_string(report.width + 1));
                    smooth = false;
                }
            for (auto [a, b] : td.tree_edges) {
                int shared = common_count(td.bags[a], td.bags[b]);
                if (shared != report.width) {
                    violations.push_back("adjacent bags " + to_string(a) + " and " + to_string(b) + " share " + to_string(shared) + " vertices, not " + to_string(report.width));
                    smooth = false;
                }
            }
            report.smooth = smooth;
        }

        return report;
    }

    auto decomposition_from_certificate(const KTreeCertificate & cert) -> TreeDecomposition
    {
        TreeDecomposition td;
        td.declared_width = cert.k;
        td.bags.push_back(sorted(cert.base_clique));

        // bags_of[v] lists, in increasing order, the bags holding v
        int n = cert.vertex_count();
        vector<vector<int>> bags_of(n);
        for (Vertex v : cert.base_clique)
            bags_of.at(v).push_back(0);

        for (const auto & [v, clique] : cert.additions) {
            // the lowest bag containing all of the clique
            int host = -1;
            const auto & first = bags_of.at(clique.front());
            for (int b : first) {
                bool all = true;
                for (Vertex c : clique)
                    if (! std::binary_search(bags_of.at(c).begin(), bags_of.at(c).end(), b)) {
                        all = false;
                        break;
                    }
                if (all) {
                    host = b;
                    break;
                }
            }
            if (host < 0)
                throw InvalidGraph{"attachment of vertex " + to_string(v) + " lies in no earlier bag"};

            auto bag = clique;
            bag.push_back(v);
            int index = static_cast<int>(td.bags.size());
            td.bags.push_back(sorted(std::move(bag)));
            td.tree_edges.emplace_back(host, index);
            for (Vertex x : td.bags.back())
                bags_of.at(x).push_back(index);
        }
        return td;
    }
}
