#include <gpm/matching.hpp>

#include <gpm/error.hpp>

#include <algorithm>
#include <deque>
#include <limits>
#include <optional>

namespace gpm {

Matching::Matching(std::vector<Edge> edges) : edges_(std::move(edges))
{
    for (auto & e : edges_)
        e = Edge::make(e.u, e.v);
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

namespace {
    constexpr Vertex none = std::numeric_limits<Vertex>::max();

    void require_edges_of(const Graph & g, const Matching & m)
    {
        for (const auto & e : m.edges())
            if (e.v >= g.order() || ! g.adjacent(e.u, e.v))
                throw InputError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not an edge of the graph");
    }

    // Edmonds' algorithm: grow an alternating tree from each exposed vertex,
    // contracting odd cycles by relabelling their vertices with a common base.
    class BlossomMatcher {
    public:
        explicit BlossomMatcher(const Graph & g) :
            g_(g),
            mate_(g.order(), none),
            parent_(g.order()),
            base_(g.order()),
            in_tree_(g.order()),
            in_blossom_(g.order()),
            on_path_(g.order())
        {
        }

        std::vector<Vertex> run()
        {
            // Greedy start; augmentation only has to fix the remainder.
            for (const auto & e : g_.edges())
                if (mate_[e.u] == none && mate_[e.v] == none) {
                    mate_[e.u] = e.v;
                    mate_[e.v] = e.u;
                }

            for (Vertex root = 0; root < g_.order(); ++root) {
                if (mate_[root] != none)
                    continue;
                if (Vertex end = find_augmenting_path(root); end != none)
                    augment(end);
            }
            return mate_;
        }

    private:
        const Graph & g_;
        std::vector<Vertex> mate_, parent_, base_;
        std::vector<char> in_tree_, in_blossom_, on_path_;
        std::deque<Vertex> queue_;

        Vertex lowest_common_base(Vertex a, Vertex b)
        {
            std::fill(on_path_.begin(), on_path_.end(), 0);
            while (true) {
                a = base_[a];
                on_path_[a] = 1;
                if (mate_[a] == none)
                    break;
                a = parent_[mate_[a]];
            }
            while (true) {
                b = base_[b];
                if (on_path_[b])
                    return b;
                b = parent_[mate_[b]];
            }
        }

        void mark_blossom_path(Vertex v, Vertex blossom_base, Vertex child)
        {
            while (base_[v] != blossom_base) {
                in_blossom_[base_[v]] = in_blossom_[base_[mate_[v]]] = 1;
                parent_[v] = child;
                child = mate_[v];
                v = parent_[mate_[v]];
            }
        }

        Vertex find_augmenting_path(Vertex root)
        {
            std::fill(in_tree_.begin(), in_tree_.end(), 0);
            std::fill(parent_.begin(), parent_.end(), none);
            for (Vertex i = 0; i < g_.order(); ++i)
                base_[i] = i;

            in_tree_[root] = 1;
            queue_.assign(1, root);
            while (! queue_.empty()) {
                Vertex v = queue_.front();
                queue_.pop_front();
                for (Vertex to : g_.neighbours(v)) {
                    if (base_[v] == base_[to] || mate_[v] == to)
                        continue;
                    if (to == root || (mate_[to] != none && parent_[mate_[to]] != none)) {
                        Vertex b = lowest_common_base(v, to);
                        std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
                        mark_blossom_path(v, b, to);
                        mark_blossom_path(to, b, v);
                        for (Vertex i = 0; i < g_.order(); ++i) {
                            if (in_blossom_[base_[i]]) {
                                base_[i] = b;
                                if (! in_tree_[i]) {
                                    in_tree_[i] = 1;
                                    queue_.push_back(i);
                                }
                            }
                        }
                    }
                    else if (parent_[to] == none) {
                        parent_[to] = v;
                        if (mate_[to] == none)
                            return to;
                        in_tree_[mate_[to]] = 1;
                        queue_.push_back(mate_[to]);
                    }
                }
            }
            return none;
        }

        void augment(Vertex v)
        {
            while (v != none) {
                Vertex pv = parent_[v], next = mate_[pv];
                mate_[v] = pv;
                mate_[pv] = v;
                v = next;
            }
        }
    };

    // Branch and bound for a smallest maximal matching.
    //
    // Edges are decided in sorted order; an edge whose endpoints are both still
    // exposed is either taken or left out. Leaving it out obliges a later edge
    // to saturate one of its endpoints, which the bounds below check. Taking
    // the edge is explored first, so the first optimum found is the
    // lexicographically least one.
    class SaturationSearch {
    public:
        SaturationSearch(const Graph & g, std::uint64_t budget) :
            g_(g),
            edges_(g.edges().begin(), g.edges().end()),
            budget_(budget),
            matched_(g.order(), 0),
            alive_(g.order(), 0),
            must_(g.order(), 0),
            degree_(g.order(), 0),
            used_(g.order(), 0),
            words_((g.order() + 63) / 64),
            adjacency_bits_(g.order() * words_, 0)
        {
            for (const auto & e : edges_) {
                adjacency_bits_[e.u * words_ + e.v / 64] |= std::uint64_t{1} << (e.v % 64);
                adjacency_bits_[e.v * words_ + e.u / 64] |= std::uint64_t{1} << (e.u % 64);
            }
        }

        Budgeted<Matching> run(SearchStats * stats)
        {
            best_size_ = greedy_upper_bound() + 1;
            search(0);
            if (stats)
                stats->nodes = nodes_;
            if (out_of_budget_)
                return Exceeded{budget_};
            if (best_.empty() && ! edges_.empty())
                throw InvariantViolation("saturation search finished without a maximal matching");
            std::vector<Edge> chosen;
            for (auto i : best_)
                chosen.push_back(edges_[i]);
            return Matching(std::move(chosen));
        }

    private:
        const Graph & g_;
        std::vector<Edge> edges_;
        std::uint64_t budget_;
        std::uint64_t nodes_ = 0;
        bool out_of_budget_ = false;

        std::vector<char> matched_;
        std::vector<std::size_t> chosen_, best_;
        std::size_t best_size_ = 0;

        // Scratch for bound computation.
        std::vector<char> alive_, must_;
        std::vector<std::uint32_t> degree_;
        std::vector<char> used_;
        std::vector<std::uint32_t> capacity_count_;
        std::size_t words_;
        std::vector<std::uint64_t> adjacency_bits_;
        std::vector<std::uint64_t> cliques_;

        // Greedy partition of the given vertices into cliques; returns the
        // number of parts, which bounds any independent subset.
        std::size_t clique_partition(const std::vector<Vertex> & vertices)
        {
            cliques_.assign(vertices.size() * words_, 0);
            std::size_t parts = 0;
            for (Vertex v : vertices) {
                const auto * adj = &adjacency_bits_[v * words_];
                std::size_t j = 0;
                for (; j < parts; ++j) {
                    const auto * c = &cliques_[j * words_];
                    bool fits = true;
                    for (std::size_t w = 0; w < words_ && fits; ++w)
                        fits = (c[w] & ~adj[w]) == 0;
                    if (fits)
                        break;
                }
                if (j == parts)
                    ++parts;
                cliques_[j * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
            }
            return parts;
        }
        std::vector<Vertex> rest_;

        struct Component {
            std::vector<Vertex> vertices;
            bool bipartite = true;
            std::size_t must = 0;
            std::size_t matched = 0;
            std::size_t by_cliques = 0;
        };
        static constexpr std::uint32_t none = std::numeric_limits<std::uint32_t>::max();
        std::vector<std::uint32_t> component_;
        std::vector<char> side_;
        std::vector<Component> components_;
        std::vector<Vertex> queue_;
        std::vector<std::uint32_t> degrees_;

        std::size_t greedy_upper_bound() const
        {
            std::vector<char> m(g_.order(), 0);
            std::size_t count = 0;
            for (const auto & e : edges_)
                if (! m[e.u] && ! m[e.v]) {
                    m[e.u] = m[e.v] = 1;
                    ++count;
                }
            return count;
        }

        bool open(const Edge & e) const { return ! matched_[e.u] && ! matched_[e.v]; }

        // Returns a lower bound on the number of further edges needed to make
        // the current partial matching maximal, using only edges from index
        // `next` on, or nullopt if that is impossible.
        //
        // The open edges (both ends free) form a graph H. The new edges are a
        // matching of H whose saturated set S covers every open edge; "dead"
        // vertices (no usable edge left) stay outside S, so their neighbours
        // ("must" vertices) are inside it. Bounds are taken per component of H
        // and summed.
        std::optional<std::size_t> remaining_lower_bound(std::size_t next)
        {
            auto n = g_.order();
            std::fill(alive_.begin(), alive_.end(), 0);
            std::fill(must_.begin(), must_.end(), 0);
            std::fill(degree_.begin(), degree_.end(), 0);

            for (std::size_t i = next; i < edges_.size(); ++i)
                if (open(edges_[i]))
                    alive_[edges_[i].u] = alive_[edges_[i].v] = 1;

            std::size_t open_edges = 0;
            for (const auto & e : edges_) {
                if (! open(e))
                    continue;
                ++open_edges;
                ++degree_[e.u];
                ++degree_[e.v];
                if (! alive_[e.u] && ! alive_[e.v])
                    return std::nullopt;
                if (! alive_[e.u])
                    must_[e.v] = 1;
                else if (! alive_[e.v])
                    must_[e.u] = 1;
            }
            if (open_edges == 0)
                return 0;

            // Components of H with a 2-colouring attempt.
            component_.assign(n, none);
            side_.assign(n, 0);
            components_.clear();
            for (Vertex root = 0; root < n; ++root) {
                if (degree_[root] == 0 || component_[root] != none)
                    continue;
                auto id = static_cast<std::uint32_t>(components_.size());
                components_.push_back({});
                auto & c = components_.back();
                queue_.clear();
                queue_.push_back(root);
                component_[root] = id;
                for (std::size_t head = 0; head < queue_.size(); ++head) {
                    auto v = queue_[head];
                    c.vertices.push_back(v);
                    for (auto w : g_.neighbours(v)) {
                        if (matched_[w])
                            continue;
                        if (component_[w] == none) {
                            component_[w] = id;
                            side_[w] = side_[v] ^ 1;
                            queue_.push_back(w);
                        }
                        else if (side_[w] == side_[v])
                            c.bipartite = false;
                    }
                }
            }

            // Vertex cover of the open edges containing every must vertex:
            // must vertices plus, on the rest, a greedy matching or the
            // clique-partition bound (one vertex per clique at most stays out).
            for (auto & c : components_) {
                rest_.clear();
                for (auto v : c.vertices) {
                    c.must += must_[v];
                    if (alive_[v] && ! must_[v])
                        rest_.push_back(v);
                }
                c.by_cliques = c.must + rest_.size() - clique_partition(rest_);
            }
            std::fill(used_.begin(), used_.end(), 0);
            for (const auto & e : edges_)
                if (open(e) && ! must_[e.u] && ! must_[e.v] && ! used_[e.u] && ! used_[e.v]) {
                    used_[e.u] = used_[e.v] = 1;
                    ++components_[component_[e.u]].matched;
                }

            std::size_t by_components = 0;
            for (auto & c : components_) {
                auto cover = std::max(c.must + c.matched, c.by_cliques);
                std::size_t bound = (cover + 1) / 2;
                if (c.bipartite)
                    bound = std::max({bound, bipartite_bound(c, 0), bipartite_bound(c, 1)});
                by_components += bound;
            }

            // An added edge xy dominates at most deg(x) + deg(y) - 1 open
            // edges; take the largest capacities until every open edge is
            // accounted for.
            std::uint32_t max_capacity = 0;
            capacity_count_.assign(2 * n + 1, 0);
            for (std::size_t i = next; i < edges_.size(); ++i) {
                const auto & e = edges_[i];
                if (! open(e))
                    continue;
                auto c = degree_[e.u] + degree_[e.v] - 1;
                ++capacity_count_[c];
                max_capacity = std::max(max_capacity, c);
            }
            std::size_t by_capacity = 0, covered = 0;
            for (auto c = max_capacity; c > 0 && covered < open_edges; --c) {
                for (std::uint32_t j = 0; j < capacity_count_[c] && covered < open_edges; ++j) {
                    covered += c;
                    ++by_capacity;
                }
            }
            return std::max(by_components, by_capacity);
        }

        // In a bipartite component with sides P and Q every new edge saturates
        // one vertex of each, so with X the unsaturated part of P the number
        // of edges is |P| - |X| and also at least |N(X)|. Dead vertices of P
        // belong to X, must vertices do not; |N(X)| is at least the largest
        // degree in X.
        std::size_t bipartite_bound(const Component & c, int side)
        {
            std::size_t p = 0, dead = 0;
            std::uint32_t dead_degree = 0;
            degrees_.clear();
            for (auto v : c.vertices) {
                if (side_[v] != side)
                    continue;
                ++p;
                if (! alive_[v]) {
                    ++dead;
                    dead_degree = std::max(dead_degree, degree_[v]);
                }
                if (! must_[v])
                    degrees_.push_back(degree_[v]);
            }
            std::sort(degrees_.begin(), degrees_.end());
            std::size_t best = dead == 0 ? p : std::numeric_limits<std::size_t>::max();
            for (std::size_t j = std::max<std::size_t>(dead, 1); j <= degrees_.size(); ++j)
                best = std::min(best, std::max<std::size_t>(p - j, std::max(dead_degree, degrees_[j - 1])));
            return best == std::numeric_limits<std::size_t>::max() ? 0 : best;
        }

        void search(std::size_t next)
        {
            if (out_of_budget_)
                return;
            if (++nodes_ > budget_) {
                out_of_budget_ = true;
                return;
            }

            while (next < edges_.size() && ! open(edges_[next]))
                ++next;

            auto bound = remaining_lower_bound(next);
            if (! bound || chosen_.size() + *bound >= best_size_)
                return;

            if (next == edges_.size()) {
                // The bound found no open edge, so the matching is maximal.
                best_ = chosen_;
                best_size_ = chosen_.size();
                return;
            }

            const auto & e = edges_[next];
            matched_[e.u] = matched_[e.v] = 1;
            chosen_.push_back(next);
            search(next + 1);
            chosen_.pop_back();
            matched_[e.u] = matched_[e.v] = 0;

            search(next + 1);
        }
    };

    class IndependentSetSearch {
    public:
        IndependentSetSearch(const Graph & g, std::uint64_t budget) : g_(g), budget_(budget) {}

        Budgeted<std::size_t> run()
        {
            std::vector<Vertex> all(g_.order());
            for (Vertex v = 0; v < g_.order(); ++v)
                all[v] = v;
            search(all, 0);
            if (out_of_budget_)
                return Exceeded{budget_};
            return best_;
        }

    private:
        const Graph & g_;
        std::uint64_t budget_;
        std::uint64_t nodes_ = 0;
        bool out_of_budget_ = false;
        std::size_t best_ = 0;

        void search(const std::vector<Vertex> & candidates, std::size_t current)
        {
            if (out_of_budget_)
                return;
            if (++nodes_ > budget_) {
                out_of_budget_ = true;
                return;
            }
            if (current + candidates.size() <= best_)
                return;
            if (candidates.empty()) {
                best_ = current;
                return;
            }

            // Branch on the candidate with most candidate neighbours; none means
            // the rest is independent.
            Vertex pick = candidates.front();
            std::size_t pick_degree = 0;
            for (Vertex v : candidates) {
                std::size_t d = 0;
                for (Vertex w : candidates)
                    d += g_.adjacent(v, w);
                if (d > pick_degree) {
                    pick = v;
                    pick_degree = d;
                }
            }
            if (pick_degree == 0) {
                best_ = std::max(best_, current + candidates.size());
                return;
            }

            std::vector<Vertex> rest;
            for (Vertex w : candidates)
                if (w != pick && ! g_.adjacent(pick, w))
                    rest.push_back(w);
            search(rest, current + 1);

            rest.clear();
            for (Vertex w : candidates)
                if (w != pick)
                    rest.push_back(w);
            search(rest, current);
        }
    };
}

Matching maximum_matching(const Graph & g)
{
    auto mate = BlossomMatcher(g).run();
    std::vector<Edge> edges;
    for (Vertex v = 0; v < g.order(); ++v)
        if (mate[v] != none && v < mate[v])
            edges.push_back({v, mate[v]});
    Matching result(std::move(edges));
    if (! is_matching(g, result))
        throw InvariantViolation("blossom matcher produced an invalid matching");
    return result;
}

std::size_t matching_number(const Graph & g)
{
    return maximum_matching(g).size();
}

Budgeted<Matching> minimum_maximal_matching(const Graph & g, std::uint64_t budget, SearchStats * stats)
{
    auto result = SaturationSearch(g, budget).run(stats);
    if (auto m = std::get_if<Matching>(&result); m && ! is_maximal_matching(g, *m))
        throw InvariantViolation("saturation search produced a non-maximal matching");
    return result;
}

Budgeted<std::size_t> saturation_number(const Graph & g, std::uint64_t budget)
{
    auto result = minimum_maximal_matching(g, budget);
    if (auto m = std::get_if<Matching>(&result))
        return m->size();
    return std::get<Exceeded>(result);
}

Budgeted<std::size_t> independence_number(const Graph & g, std::uint64_t budget)
{
    return IndependentSetSearch(g, budget).run();
}

bool is_matching(const Graph & g, const Matching & m)
{
    require_edges_of(g, m);
    std::vector<char> seen(g.order(), 0);
    for (const auto & e : m.edges()) {
        if (seen[e.u] || seen[e.v])
            return false;
        seen[e.u] = seen[e.v] = 1;
    }
    return true;
}

bool is_maximal_matching(const Graph & g, const Matching & m)
{
    if (! is_matching(g, m))
        return false;
    std::vector<char> saturated(g.order(), 0);
    for (const auto & e : m.edges())
        saturated[e.u] = saturated[e.v] = 1;
    return std::all_of(g.edges().begin(), g.edges().end(),
        [&](const Edge & e) { return saturated[e.u] || saturated[e.v]; });
}

bool is_perfect_matching(const Graph & g, const Matching & m)
{
    return is_matching(g, m) && 2 * m.size() == g.order();
}

std::vector<Vertex> unsaturated_vertices(const Graph & g, const Matching & m)
{
    if (! is_matching(g, m))
        throw InputError("edge set is not a matching");
    std::vector<char> saturated(g.order(), 0);
    for (const auto & e : m.edges())
        saturated[e.u] = saturated[e.v] = 1;
    std::vector<Vertex> result;
    for (Vertex v = 0; v < g.order(); ++v)
        if (! saturated[v])
            result.push_back(v);
    return result;
}

bool is_independent_set(const Graph & g, std::span<const Vertex> vertices)
{
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (vertices[i] == vertices[j] || g.adjacent(vertices[i], vertices[j]))
                return false;
    return true;
}

} // namespace gpm
