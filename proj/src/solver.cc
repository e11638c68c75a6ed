#include <bookthick/heuristics.hh>
#include <bookthick/solver.hh>

#include <algorithm>
#include <atomic>
#include <climits>
#include <mutex>
#include <thread>

using std::optional;
using std::vector;

using std::chrono::steady_clock;

namespace bookthick
{
    namespace
    {
        struct Dsatur
        {
            const vector<vector<int>> & adj;
            int colours;
            int size;
            vector<int> colour;
            vector<int> counts;
            vector<int> saturation;
            int coloured = 0;

            Dsatur(const vector<vector<int>> & a, int c) :
                adj(a),
                colours(c),
                size(static_cast<int>(a.size())),
                colour(size, -1),
                counts(static_cast<size_t>(size) * c, 0),
                saturation(size, 0)
            {
            }

            auto assign(int v, int c) -> void
            {
                colour[v] = c;
                for (int u : adj[v])
                    if (counts[u * colours + c]++ == 0)
                        ++saturation[u];
                ++coloured;
            }

            auto unassign(int v) -> void
            {
                int c = colour[v];
                for (int u : adj[v])
                    if (--counts[u * colours + c] == 0)
                        --saturation[u];
                colour[v] = -1;
                --coloured;
            }

            auto search(int used) -> bool
            {
                if (coloured == size)
                    return true;

                int pick = -1;
                for (int v = 0; v < size; ++v) {
                    if (colour[v] != -1)
                        continue;
                    if (saturation[v] >= colours)
                        return false;
                    if (pick == -1 || saturation[v] > saturation[pick]
                        || (saturation[v] == saturation[pick] && adj[v].size() > adj[pick].size()))
                        pick = v;
                }

                int limit = std::min(used + 1, colours);
                for (int c = 0; c < limit; ++c) {
                    if (counts[pick * colours + c] != 0)
                        continue;
                    assign(pick, c);
                    if (search(std::max(used, c + 1)))
                        return true;
                    unassign(pick);
                }
                return false;
            }
        };
    }

    auto colour_graph(const vector<vector<int>> & adj, int colours, const vector<int> & seed) -> optional<vector<int>>
    {
        if (adj.empty())
            return vector<int>{};
        if (colours <= 0 || static_cast<int>(seed.size()) > colours)
            return std::nullopt;

        for (size_t i = 0; i < seed.size(); ++i)
            for (size_t j = 0; j < i; ++j)
                if (std::find(adj[seed[i]].begin(), adj[seed[i]].end(), seed[j]) == adj[seed[i]].end())
                    throw Error{"colouring seed is not a clique"};

        Dsatur d{adj, colours};
        for (size_t i = 0; i < seed.size(); ++i)
            d.assign(seed[i], static_cast<int>(i));
        if (! d.search(static_cast<int>(seed.size())))
            return std::nullopt;
        return d.colour;
    }

    auto optimal_pages_for_order(const Graph & g, const CircularOrder & order) -> BookEmbedding
    {
        auto edges = g.edges();
        BookEmbedding emb;
        emb.order = order;
        if (edges.empty())
            return emb;

        auto adj = crossing_graph(order, edges);
        auto seed = max_crossing_clique(g, order);
        for (int k = std::max<int>(1, seed.size());; ++k)
            if (auto colouring = colour_graph(adj, k, seed)) {
                for (size_t i = 0; i < edges.size(); ++i)
                    emb.page[edges[i]] = (*colouring)[i] + 1;
                emb.page_count = k;
                return emb;
            }
    }

    auto min_pages_for_order(const Graph & g, const CircularOrder & order) -> int
    {
        return optimal_pages_for_order(g, order).page_count;
    }

    auto status_name(SolverStatus s) -> std::string_view
    {
        switch (s) {
        case SolverStatus::Exact: return "Exact";
        case SolverStatus::LowerBoundOnly: return "LowerBoundOnly";
        case SolverStatus::Timeout: return "Timeout";
        }
        return "Unknown";
    }

    namespace
    {
        struct SharedState
        {
            std::atomic<int> best;
            int lower;
            int cap;
            std::atomic<bool> stop{false};
            std::atomic<bool> out_of_budget{false};
            std::atomic<std::uint64_t> nodes{0};
            optional<steady_clock::time_point> deadline;
            optional<std::uint64_t> node_limit;

            std::mutex witness_mutex;
            optional<BookEmbedding> witness;
            int witness_branch = INT_MAX;

            auto limit() const -> int { return std::min(best.load() - 1, cap); }
        };

        class OrderSearch
        {
        public:
            OrderSearch(const Graph & g, const vector<Edge> & edges, SharedState & shared, int branch) :
                _n(g.vertex_count()),
                _edges(edges),
                _shared(shared),
                _branch(branch),
                _incident(_n),
                _position(_n, -1)
            {
                for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
                    _incident[edges[i].first].emplace_back(edges[i].second, i);
                    _incident[edges[i].second].emplace_back(edges[i].first, i);
                }
            }

            /// Searches every order starting 0, second.
            auto run(Vertex second) -> void
            {
                place(0);
                place(second);
                for (Vertex v = 1; v < _n; ++v)
                    if (v > second)
                        ++_greater_remaining;
                if (colour_prefix())
                    extend();
            }

        private:
            int _n;
            const vector<Edge> & _edges;
            SharedState & _shared;
            int _branch;
            vector<vector<std::pair<Vertex, int>>> _incident;

            vector<int> _position;
            vector<Vertex> _order;
            int _greater_remaining = 0;

            // chords among placed vertices, in placement order
            vector<int> _slot_edge;
            vector<int> _slot_left;
            vector<int> _slot_right;
            vector<vector<int>> _crossing;
            vector<int> _colour;
            int _colours_used = 0;

            auto place(Vertex x) -> int
            {
                int t = static_cast<int>(_order.size());
                _position[x] = t;
                _order.push_back(x);
                int added = 0;
                for (auto [y, e] : _incident[x]) {
                    if (_position[y] < 0)
                        continue;
                    int left = _position[y];
                    int slot = static_cast<int>(_slot_edge.size());
                    _crossing.emplace_back();
                    // x is rightmost, so the new chord crosses exactly those
                    // strictly straddling its left end and not ending at x
                    for (int q = 0; q < slot; ++q) {
                        if (_slot_left[q] < left && left < _slot_right[q] && _slot_right[q] != t) {
                            _crossing[q].push_back(slot);
                            _crossing[slot].push_back(q);
                        }
                    }
                    _slot_edge.push_back(e);
                    _slot_left.push_back(left);
                    _slot_right.push_back(t);
                    _colour.push_back(-1);
                    ++added;
                }
                return added;
            }

            auto unplace(Vertex x, int added) -> void
            {
                for (int i = 0; i < added; ++i) {
                    int slot = static_cast<int>(_slot_edge.size()) - 1;
                    for (int q : _crossing[slot])
                        _crossing[q].pop_back();
                    _crossing.pop_back();
                    _slot_edge.pop_back();
                    _slot_left.pop_back();
                    _slot_right.pop_back();
                    _colour.pop_back();
                }
                _order.pop_back();
                _position[x] = -1;
            }

            /// Makes _colour a colouring of every placed chord with fewer
            /// colours than the limit, extending greedily where possible.
            auto colour_prefix() -> bool
            {
                int limit = _shared.limit();
                if (limit < 1)
                    return _slot_edge.empty();

                bool greedy = _colours_used <= limit;
                if (greedy) {
                    int used = _colours_used;
                    vector<bool> taken(limit);
                    for (size_t s = 0; s < _colour.size() && greedy; ++s) {
                        if (_colour[s] != -1)
                            continue;
                        std::fill(taken.begin(), taken.end(), false);
                        for (int q : _crossing[s])
                            if (_colour[q] != -1)
                                taken[_colour[q]] = true;
                        int c = 0;
                        while (c < limit && taken[c])
                            ++c;
                        if (c == limit)
                            greedy = false;
                        else {
                            _colour[s] = c;
                            used = std::max(used, c + 1);
                        }
                    }
                    if (greedy) {
                        _colours_used = used;
                        return true;
                    }
                }

                auto colouring = colour_graph(_crossing, limit);
                if (! colouring)
                    return false;
                _colour = std::move(*colouring);
                _colours_used = _colour.empty() ? 0 : *std::max_element(_colour.begin(), _colour.end()) + 1;
                return true;
            }

            auto count_node() -> bool
            {
                auto n = ++_shared.nodes;
                if (_shared.node_limit && n > *_shared.node_limit) {
                    _shared.out_of_budget = true;
                    _shared.stop = true;
                    return false;
                }
                if (_shared.deadline && (n & 255) == 0 && steady_clock::now() > *_shared.deadline) {
                    _shared.out_of_budget = true;
                    _shared.stop = true;
                    return false;
                }
                return true;
            }

            auto leaf() -> void
            {
                // shrink the colouring to the chromatic number of this order
                int pages = _colours_used;
                vector<int> best_colouring = _colour;
                while (pages - 1 >= std::max(_shared.lower, 1)) {
                    auto fewer = colour_graph(_crossing, pages - 1);
                    if (! fewer)
                        break;
                    best_colouring = std::move(*fewer);
                    --pages;
                }

                std::lock_guard<std::mutex> lock{_shared.witness_mutex};
                int current = _shared.best.load();
                if (pages > current || (pages == current && _branch >= _shared.witness_branch))
                    return;

                BookEmbedding emb;
                emb.order = CircularOrder{_order};
                for (size_t s = 0; s < _slot_edge.size(); ++s)
                    emb.page[_edges[_slot_edge[s]]] = best_colouring[s] + 1;
                emb.page_count = pages;
                _shared.witness = std::move(emb);
                _shared.witness_branch = pages < current ? _branch : std::min(_branch, _shared.witness_branch);
                _shared.best = pages;
                if (pages <= _shared.lower)
                    _shared.stop = true;
            }

            auto extend() -> void
            {
                if (_shared.stop || ! count_node())
                    return;

                int t = static_cast<int>(_order.size());
                if (t == _n) {
                    leaf();
                    return;
                }

                Vertex second = _order[1];
                for (Vertex x = 1; x < _n; ++x) {
                    if (_position[x] >= 0)
                        continue;
                    // keep a vertex larger than the second one for the last position
                    bool greater = x > second;
                    if (greater && _greater_remaining == 1 && t < _n - 1)
                        continue;

                    auto saved_colour = _colour;
                    int saved_used = _colours_used;
                    int added = place(x);
                    if (greater)
                        --_greater_remaining;

                    if (colour_prefix())
                        extend();

                    if (greater)
                        ++_greater_remaining;
                    unplace(x, added);
                    _colour = std::move(saved_colour);
                    _colours_used = saved_used;

                    if (_shared.stop)
                        return;
                }
            }
        };
    }

    auto book_thickness_exact(const Graph & g, const SolverOptions & opts) -> SolverReport
    {
        auto start = steady_clock::now();
        if (opts.max_pages && *opts.max_pages < 1)
            throw Error{"max_pages must be positive"};
        if (opts.threads < 1)
            throw Error{"threads must be positive"};

        SolverReport report;
        int n = g.vertex_count();
        auto edges = g.edges();

        if (edges.empty()) {
            BookEmbedding emb;
            emb.order = CircularOrder::identity(n);
            report.witness = std::move(emb);
            report.elapsed = steady_clock::now() - start;
            return report;
        }

        int lower = std::max(1, density_lower_bound(g));
        auto initial = first_fit_pages(g, CircularOrder::identity(n));

        SharedState shared;
        shared.best = initial.page_count;
        shared.lower = lower;
        shared.cap = opts.max_pages.value_or(INT_MAX);
        shared.witness = std::move(initial);
        shared.node_limit = opts.node_limit;
        if (opts.time_budget)
            shared.deadline = start + *opts.time_budget;

        // second vertex of the order; it must leave a larger one for the end
        vector<Vertex> branches;
        for (Vertex a = 1; a < n; ++a)
            if (n == 2 || a < n - 1)
                branches.push_back(a);

        if (shared.best > lower && shared.limit() >= lower) {
            if (opts.threads == 1 || branches.size() <= 1) {
                for (size_t i = 0; i < branches.size() && ! shared.stop; ++i)
                    OrderSearch{g, edges, shared, static_cast<int>(i)}.run(branches[i]);
            }
            else {
                std::atomic<size_t> next{0};
                auto worker = [&] {
                    for (size_t i = next++; i < branches.size() && ! shared.stop; i = next++)
                        OrderSearch{g, edges, shared, static_cast<int>(i)}.run(branches[i]);
                };
                vector<std::jthread> pool;
                int count = std::min<int>(opts.threads, branches.size());
                for (int i = 0; i < count; ++i)
                    pool.emplace_back(worker);
            }
        }

        int best = shared.best.load();
        report.book_thickness = best;
        report.witness = std::move(shared.witness);
        report.nodes_explored = shared.nodes.load();

        if (shared.out_of_budget && best > lower) {
            report.status = SolverStatus::Timeout;
            report.lower_bound = lower;
        }
        else if (best <= shared.cap || best <= lower) {
            report.status = SolverStatus::Exact;
            report.lower_bound = best;
        }
        else {
            int proven = std::max(lower, shared.cap + 1);
            report.status = proven >= best ? SolverStatus::Exact : SolverStatus::LowerBoundOnly;
            report.lower_bound = std::min(proven, best);
        }

        report.elapsed = steady_clock::now() - start;
        return report;
    }

    auto is_outerplanar(const Graph & g) -> bool
    {
        if (g.edge_count() == 0)
            return true;
        SolverOptions opts;
        opts.max_pages = 1;
        auto report = book_thickness_exact(g, opts);
        return report.book_thickness <= 1;
    }
}
