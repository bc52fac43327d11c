#include "repshift/repshift.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <thread>

namespace repshift {

using boost::multiprecision::cpp_int;

int eval_word(const Word& w, const std::vector<int>& assign, const FiniteGroup& sigma) {
    int acc = sigma.identity();
    for (const IndexedLetter& l : w)
        acc = sigma.mul(acc, sigma.pow(assign[l.family], l.exp));
    return acc;
}

namespace {

int worker_count(const EnumOptions& opt) {
    if (opt.threads > 0) return opt.threads;
    if (const char* env = std::getenv("REPSHIFT_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    return 1;
}

struct Scheduler {
    // relators to check once generator d has been assigned
    std::vector<std::vector<const Word*>> at;

    Scheduler(const BasePresentation& b) : at(b.gens.size()) {
        for (const Word& r : b.relators) {
            if (r.empty()) continue;
            int last = 0;
            for (const auto& l : r) last = std::max(last, l.family);
            at[last].push_back(&r);
        }
    }
};

void dfs(const BasePresentation& b, const FiniteGroup& sigma, const Scheduler& sched,
         const std::vector<std::vector<int>>& cand, std::vector<int>& assign, size_t depth,
         std::vector<std::vector<int>>& out) {
    if (depth == b.gens.size()) {
        out.push_back(assign);
        return;
    }
    for (int value : cand[depth]) {
        assign[depth] = value;
        bool ok = true;
        for (const Word* r : sched.at[depth])
            if (eval_word(*r, assign, sigma) != sigma.identity()) {
                ok = false;
                break;
            }
        if (ok) dfs(b, sigma, sched, cand, assign, depth + 1, out);
    }
}

} // namespace

std::vector<std::vector<int>> enumerate_homs(const BasePresentation& b,
                                             const FiniteGroup& sigma,
                                             const EnumOptions& opt) {
    const size_t n_gens = b.gens.size();
    std::vector<std::vector<int>> cand = opt.candidates;
    if (cand.empty()) {
        std::vector<int> all(sigma.size());
        std::iota(all.begin(), all.end(), 0);
        cand.assign(n_gens, all);
    }
    if (cand.size() != n_gens) throw InternalError("candidate list count mismatch");

    cpp_int estimate = 1;
    for (const auto& c : cand) estimate *= static_cast<int>(c.size());
    if (estimate > opt.budget)
        throw ResourceError("estimated assignment count " + estimate.str() +
                            " exceeds the enumeration budget " + std::to_string(opt.budget));

    Scheduler sched(b);
    if (n_gens == 0) return {std::vector<int>{}};

    int workers = std::min<int>(worker_count(opt), static_cast<int>(cand[0].size()));
    if (workers <= 1) {
        std::vector<std::vector<int>> out;
        std::vector<int> assign(n_gens, sigma.identity());
        dfs(b, sigma, sched, cand, assign, 0, out);
        return out;
    }

    // split on the first generator; slot order keeps the merge deterministic
    std::vector<std::vector<std::vector<int>>> slots(cand[0].size());
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (size_t i = w; i < cand[0].size(); i += workers) {
                std::vector<std::vector<int>> local_cand = cand;
                local_cand[0] = {cand[0][i]};
                std::vector<int> assign(n_gens, sigma.identity());
                dfs(b, sigma, sched, local_cand, assign, 0, slots[i]);
            }
        });
    }
    for (auto& t : pool) t.join();
    std::vector<std::vector<int>> out;
    for (auto& slot : slots)
        out.insert(out.end(), slot.begin(), slot.end());
    return out;
}

std::string assignment_label(const std::vector<int>& values, const FiniteGroup& sigma) {
    std::string s;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) s += ".";
        s += sigma.element(values[i]).str();
    }
    return s;
}

ShiftGraph graph_from_homs(const BasePresentation& b, const FiniteGroup& sigma,
                           const std::vector<std::vector<int>>& homs) {
    ShiftGraph g;
    std::map<std::string, int> vid;
    auto vertex = [&](const std::string& label) {
        auto [it, inserted] = vid.emplace(label, g.vertex_count());
        if (inserted) g.vertex_labels.push_back(label);
        return it->second;
    };
    for (const auto& assign : homs) {
        std::vector<int> src_vals, dst_vals;
        for (int u : b.u_gens) src_vals.push_back(assign[u]);
        for (const Word& w : b.phi) dst_vals.push_back(eval_word(w, assign, sigma));
        ShiftGraph::Edge e;
        e.src = vertex(assignment_label(src_vals, sigma));
        e.dst = vertex(assignment_label(dst_vals, sigma));
        e.label = assignment_label(assign, sigma);
        for (int s : b.slice0) e.contribution.push_back(assign[s]);
        g.edges.push_back(std::move(e));
    }
    g.canonicalize();
    return g;
}

ShiftGraph build_shift_graph_window(const Presentation& p, const FiniteGroup& sigma, int n,
                                    const EnumOptions& opt) {
    BasePresentation b = hnn_window_base(p, n);
    return prune(graph_from_homs(b, sigma, enumerate_homs(b, sigma, opt)));
}

ShiftGraph build_shift_graph(const Presentation& p, const FiniteGroup& sigma,
                             const EnumOptions& opt) {
    return build_shift_graph_window(p, sigma, default_window(p), opt);
}

namespace {

/// Decides the cardinality of the transitive-point set on the product
/// automaton (vertex, accumulated subgroup).
CardinalityClass transitive_cardinality(const ShiftGraph& g, const FiniteGroup& sigma, int r) {
    if (g.vertex_count() == 0) return {CardinalityClass::Finite, 0};
    SubgroupLattice lattice(sigma);
    std::vector<int> comp = component_ids(g); // -1 outside edged components
    int n_comp = 0;
    for (int v = 0; v < g.vertex_count(); ++v) n_comp = std::max(n_comp, comp[v] + 1);

    std::vector<int> comp_sub(n_comp, lattice.trivial());
    std::vector<int> comp_vertices(n_comp, 0), comp_edges(n_comp, 0);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (comp[v] >= 0) ++comp_vertices[comp[v]];
    for (const auto& e : g.edges)
        if (comp[e.src] >= 0 && comp[e.src] == comp[e.dst]) {
            ++comp_edges[comp[e.src]];
            for (int x : e.contribution)
                comp_sub[comp[e.src]] = lattice.extend(comp_sub[comp[e.src]], x);
        }
    auto branching = [&](int c) { return comp_edges[c] > comp_vertices[c]; };
    auto transitive_with = [&](int h, int c) {
        return is_transitive(sigma, lattice.at(lattice.join(h, comp_sub[c])), r);
    };

    bool countable = false;
    // direction 0: forward sweep (branching futures); direction 1: mirrored
    // sweep over the reversed graph (branching pasts).
    for (int dir = 0; dir < 2; ++dir) {
        std::vector<std::vector<const ShiftGraph::Edge*>> adj(g.vertex_count());
        for (const auto& e : g.edges) adj[dir == 0 ? e.src : e.dst].push_back(&e);
        // one multi-source sweep per origin component: the walks from its
        // vertices all start with the same accumulated subgroup, and only
        // existence of a reaching walk matters below
        for (int origin = 0; origin < n_comp; ++origin) {
            std::set<std::pair<int, int>> seen;
            std::vector<std::pair<int, int>> queue;
            for (int u = 0; u < g.vertex_count(); ++u)
                if (comp[u] == origin && seen.emplace(u, comp_sub[origin]).second)
                    queue.push_back({u, comp_sub[origin]});
            size_t head = 0;
            while (head < queue.size()) {
                auto [v, h] = queue[head++];
                if (comp[v] >= 0) {
                    if (branching(comp[v]) && transitive_with(h, comp[v]))
                        return {CardinalityClass::Uncountable, 0};
                    if (dir == 0 && comp[v] != origin && transitive_with(h, comp[v]))
                        countable = true;
                }
                for (const auto* e : adj[v]) {
                    int h2 = h;
                    for (int x : e->contribution) h2 = lattice.extend(h2, x);
                    int next = dir == 0 ? e->dst : e->src;
                    if (seen.emplace(next, h2).second) queue.push_back({next, h2});
                }
            }
        }
    }
    if (countable) return {CardinalityClass::CountablyInfinite, 0};

    cpp_int count = 0;
    for (int c = 0; c < n_comp; ++c)
        if (comp_edges[c] == comp_vertices[c] &&
            is_transitive(sigma, lattice.at(comp_sub[c]), r))
            count += comp_vertices[c];
    return {CardinalityClass::Finite, count};
}

} // namespace

CardinalityClass classify_transitive(const Presentation& p, int r, const EnumOptions& opt) {
    if (r < 2 || r > 5) throw ConfigError("index must be in 2..5");
    FiniteGroup sigma = FiniteGroup::symmetric(r);
    ShiftGraph g = build_shift_graph(p, sigma, opt);
    return transitive_cardinality(g, sigma, r);
}

CardinalityClass count_index_subgroups(const Presentation& p, int r, const EnumOptions& opt) {
    CardinalityClass c = classify_transitive(p, r, opt);
    if (c.tag != CardinalityClass::Finite) return c;
    cpp_int fact = 1;
    for (int i = 2; i < r; ++i) fact *= i;
    if (c.count % fact != 0)
        throw InternalError("transitive point count " + c.count.str() +
                            " is not divisible by (r-1)!");
    return {CardinalityClass::Finite, c.count / fact};
}

} // namespace repshift
