#include "pcn/solver.hpp"

#include <algorithm>
#include <bit>

namespace pcn {

namespace {

using Clock = std::chrono::steady_clock;

class Deadline {
public:
    explicit Deadline(Budget b)
    {
        if (b.limit)
            at_ = Clock::now() + *b.limit;
    }
    bool expired() const { return at_ && Clock::now() >= *at_; }
    Budget remaining() const
    {
        if (!at_)
            return Budget::unlimited();
        auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
            *at_ - Clock::now());
        return Budget::millis(std::max<std::int64_t>(0, left.count()));
    }

private:
    std::optional<Clock::time_point> at_;
};

// Exact maximum independent set on <= 32 vertices via branch on the
// highest-degree candidate.
int exact_alpha(const std::vector<std::uint32_t>& adj, std::uint32_t cand)
{
    if (cand == 0)
        return 0;
    int best_v = -1, best_deg = -1;
    for (std::uint32_t rest = cand; rest;) {
        const int v = std::countr_zero(rest);
        rest &= rest - 1;
        const int deg = std::popcount(adj[v] & cand);
        if (deg > best_deg) {
            best_deg = deg;
            best_v = v;
        }
    }
    if (best_deg == 0)
        return std::popcount(cand); // all isolated
    const std::uint32_t bit = std::uint32_t{1} << best_v;
    const int with_v = 1 + exact_alpha(adj, cand & ~(adj[best_v] | bit));
    const int without_v = exact_alpha(adj, cand & ~bit);
    return std::max(with_v, without_v);
}

int packing_bound_for_set(const Graph& g, const std::vector<int>& members)
{
    const int sz = static_cast<int>(members.size());
    std::vector<std::uint32_t> adj(sz, 0);
    for (int i = 0; i < sz; ++i)
        for (int j = 0; j < sz; ++j)
            if (i != j && g.has_edge(members[i], members[j]))
                adj[i] |= std::uint32_t{1} << j;
    const std::uint32_t all = sz == 32 ? ~std::uint32_t{0}
                                       : (std::uint32_t{1} << sz) - 1;
    return sz - exact_alpha(adj, all) + 1;
}

} // namespace

int clique_lower_bound(const Graph& g, const DistanceMatrix&)
{
    const int n = g.order();
    if (n == 0)
        return 0;
    const std::vector<int> seeds = default_vertex_order(g);
    int best = 1;
    for (int seed : seeds) {
        std::vector<int> clique{seed};
        for (int u : seeds) {
            if (u == seed)
                continue;
            bool fits = true;
            for (int w : clique)
                if (!g.has_edge(u, w)) {
                    fits = false;
                    break;
                }
            if (fits)
                clique.push_back(u);
        }
        best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
}

int distance2_lower_bound(const Graph& g, const DistanceMatrix& dm)
{
    const int n = g.order();
    if (n == 0)
        return 0;
    int best = 1;
    for (int v = 0; v < n; ++v) {
        std::vector<int> ball{v};
        for (int u : g.neighbors(v))
            ball.push_back(u);
        if (static_cast<int>(ball.size()) > 20)
            continue;
        best = std::max(best, packing_bound_for_set(g, ball));
    }
    if (n <= 20 && diameter(g, dm) <= 2) {
        std::vector<int> all(n);
        for (int v = 0; v < n; ++v)
            all[v] = v;
        best = std::max(best, packing_bound_for_set(g, all));
    }
    return best;
}

namespace {

// Search state for one decide() call. Feasible colors live in per-vertex
// bitmasks of W words; clearing a vertex's last feasible bit fails the
// branch. A flat trail records cleared (vertex) entries per depth for
// undo; the color being undone is implicit in the frame.
//
// Besides the per-vertex emptiness check, a counting prune runs after
// every assignment: each color i can absorb at most supply_i more
// uncolored vertices, where supply_i is the number of uncolored vertices
// still feasible for i, capped at 1 once i reaches the largest finite
// pairwise distance (no two vertices are far enough apart to share such
// a color). When the total supply drops below the number of uncolored
// vertices the branch is dead. On bounded-diameter instances, where
// every color beyond the diameter is a singleton class, this is what
// makes the search close.
class DecideSearch {
public:
    DecideSearch(const Graph& g, const DistanceMatrix& dm, int k, Budget budget)
        : g_(g), n_(g.order()), k_(k), words_((k + 63) / 64), deadline_(budget)
    {
        order_ = default_vertex_order(g);
        color_.assign(n_, 0);
        feas_count_.assign(n_, k_);
        feasible_.assign(static_cast<size_t>(n_) * words_, 0);
        for (int v = 0; v < n_; ++v) {
            for (int i = 1; i <= k_; ++i)
                feasible_[static_cast<size_t>(v) * words_ + (i - 1) / 64]
                    |= std::uint64_t{1} << ((i - 1) % 64);
        }
        int max_finite = 0;
        bool any_infinite = false;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v) {
                if (dm(u, v) == kInfiniteDistance)
                    any_infinite = true;
                else
                    max_finite = std::max(max_finite, dm(u, v));
            }
        singleton_from_ = any_infinite ? k_ + 1 : std::max(max_finite, 1);
        supply_.assign(k_ + 1, n_);
        build_distance_lists(dm);
        trail_.reserve(static_cast<size_t>(n_) * 4);
    }

    DecideResult run()
    {
        DecideResult res;
        const Step r = dfs(0);
        res.nodes = nodes_;
        if (r == Step::Found) {
            res.outcome = DecideOutcome::Yes;
            PackingColoring c;
            c.colors = color_;
            res.certificate = std::move(c);
        } else if (r == Step::Exhausted) {
            res.outcome = DecideOutcome::No;
        } else {
            res.outcome = DecideOutcome::Unknown;
        }
        return res;
    }

private:
    enum class Step { Found, Exhausted, Cut };

    void build_distance_lists(const DistanceMatrix& dm)
    {
        // Per vertex: other vertices sorted by distance, truncated to
        // distance <= k (farther ones can never conflict), plus prefix
        // counts per color so assign() loops over an exact range.
        nbr_offset_.assign(n_ + 1, 0);
        prefix_.assign(static_cast<size_t>(n_) * (k_ + 1), 0);
        std::vector<std::pair<int, int>> tmp;
        for (int v = 0; v < n_; ++v) {
            tmp.clear();
            for (int u = 0; u < n_; ++u) {
                if (u == v)
                    continue;
                const int d = dm(v, u);
                if (d <= k_)
                    tmp.emplace_back(d, u);
            }
            std::sort(tmp.begin(), tmp.end());
            nbr_offset_[v + 1] = nbr_offset_[v] + static_cast<int>(tmp.size());
            for (const auto& [d, u] : tmp)
                nbr_.push_back(u);
            int idx = 0;
            for (int i = 0; i <= k_; ++i) {
                while (idx < static_cast<int>(tmp.size()) && tmp[idx].first <= i)
                    ++idx;
                prefix_[static_cast<size_t>(v) * (k_ + 1) + i] = idx;
            }
        }
    }

    // Vertex v leaves (enter=false) or re-enters (enter=true) the
    // uncolored pool; its still-feasible bits move in or out of supply_.
    void shift_supply(int v, bool enter)
    {
        const std::uint64_t* mask = feasible_.data() + static_cast<size_t>(v) * words_;
        const int delta = enter ? 1 : -1;
        for (int w = 0; w < words_; ++w) {
            std::uint64_t bits = mask[w];
            while (bits) {
                supply_[w * 64 + std::countr_zero(bits) + 1] += delta;
                bits &= bits - 1;
            }
        }
    }

    bool supply_covers(int uncolored) const
    {
        int capacity = 0;
        for (int i = 1; i <= k_; ++i) {
            capacity += i >= singleton_from_ ? (supply_[i] > 0 ? 1 : 0) : supply_[i];
            if (capacity >= uncolored)
                return true;
        }
        return capacity >= uncolored;
    }

    bool assign(int v, int i, int uncolored_after)
    {
        color_[v] = i;
        shift_supply(v, false);
        const int base = nbr_offset_[v];
        const int count = prefix_[static_cast<size_t>(v) * (k_ + 1) + i];
        const size_t word_ix = static_cast<size_t>(i - 1) / 64;
        const std::uint64_t bit = std::uint64_t{1} << ((i - 1) % 64);
        for (int idx = 0; idx < count; ++idx) {
            const int u = nbr_[base + idx];
            if (color_[u])
                continue;
            std::uint64_t& word = feasible_[static_cast<size_t>(u) * words_ + word_ix];
            if (word & bit) {
                word &= ~bit;
                --supply_[i];
                trail_.push_back(u);
                if (--feas_count_[u] == 0)
                    return false;
            }
        }
        return supply_covers(uncolored_after);
    }

    void undo(size_t mark, int v, int i)
    {
        const size_t word_ix = static_cast<size_t>(i - 1) / 64;
        const std::uint64_t bit = std::uint64_t{1} << ((i - 1) % 64);
        while (trail_.size() > mark) {
            const int u = trail_.back();
            trail_.pop_back();
            feasible_[static_cast<size_t>(u) * words_ + word_ix] |= bit;
            ++supply_[i];
            ++feas_count_[u];
        }
        shift_supply(v, true);
        color_[v] = 0;
    }

    Step dfs(int depth)
    {
        if (depth == n_)
            return Step::Found;
        const int v = order_[depth];
        const std::uint64_t* mask = feasible_.data() + static_cast<size_t>(v) * words_;
        for (int w = 0; w < words_; ++w) {
            std::uint64_t bits = mask[w];
            while (bits) {
                const int i = w * 64 + std::countr_zero(bits) + 1;
                bits &= bits - 1;
                if ((++nodes_ & 4095) == 0 && deadline_.expired())
                    return Step::Cut;
                const size_t mark = trail_.size();
                if (assign(v, i, n_ - depth - 1)) {
                    const Step r = dfs(depth + 1);
                    if (r == Step::Found)
                        return r;
                    undo(mark, v, i);
                    if (r == Step::Cut)
                        return r;
                } else {
                    undo(mark, v, i);
                }
            }
        }
        return Step::Exhausted;
    }

    const Graph& g_;
    int n_;
    int k_;
    int words_;
    int singleton_from_ = 1;
    Deadline deadline_;
    std::vector<int> order_;
    std::vector<int> color_;
    std::vector<int> feas_count_;
    std::vector<int> supply_;
    std::vector<std::uint64_t> feasible_;
    std::vector<int> nbr_;
    std::vector<int> nbr_offset_;
    std::vector<int> prefix_;
    std::vector<int> trail_;
    std::uint64_t nodes_ = 0;
};

} // namespace

DecideResult decide(const Graph& g, const DistanceMatrix& dm, int k, Budget budget)
{
    if (k < 1)
        throw DomainError("decide requires k >= 1");
    if (g.order() == 0) {
        DecideResult res;
        res.outcome = DecideOutcome::Yes;
        res.certificate = PackingColoring{};
        return res;
    }
    DecideSearch search(g, dm, k, budget);
    return search.run();
}

SolveResult solve(const Graph& g, Budget budget)
{
    const auto start = Clock::now();
    Deadline deadline(budget);
    SolveResult res;
    if (g.order() == 0) {
        res.lower = res.upper = 0;
        res.status = SolveStatus::Exact;
        res.certificate = PackingColoring{};
        return res;
    }
    const DistanceMatrix dm = all_pairs_distances(g);
    res.lower = std::max({1, clique_lower_bound(g, dm), distance2_lower_bound(g, dm)});
    const PackingColoring seed = normalize_coloring(g, greedy_coloring(g, dm), dm);
    res.upper = seed.max_color();
    res.certificate = seed;

    while (res.lower < res.upper) {
        if (deadline.expired()) {
            res.stats.budget_exhausted = true;
            break;
        }
        const DecideResult dr = decide(g, dm, res.lower, deadline.remaining());
        res.stats.nodes += dr.nodes;
        if (dr.outcome == DecideOutcome::Yes) {
            res.upper = res.lower;
            res.certificate = dr.certificate;
        } else if (dr.outcome == DecideOutcome::No) {
            ++res.lower;
        } else {
            res.stats.budget_exhausted = true;
            break;
        }
    }
    res.status = res.lower == res.upper ? SolveStatus::Exact : SolveStatus::Timeout;
    res.stats.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        Clock::now() - start);
    return res;
}

} // namespace pcn
