#include "repshift/shiftgraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace repshift {

using boost::multiprecision::cpp_int;

void ShiftGraph::canonicalize() {
    std::vector<int> order(vertex_labels.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return vertex_labels[a] < vertex_labels[b]; });
    std::vector<int> rank(order.size());
    for (size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);

    std::vector<std::string> labels(order.size());
    for (size_t i = 0; i < order.size(); ++i) labels[i] = vertex_labels[order[i]];
    vertex_labels = std::move(labels);
    for (Edge& e : edges) {
        e.src = rank[e.src];
        e.dst = rank[e.dst];
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.src, a.label, a.dst) < std::tie(b.src, b.label, b.dst);
    });
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

int ShiftGraph::find_vertex(const std::string& label) const {
    auto it = std::lower_bound(vertex_labels.begin(), vertex_labels.end(), label);
    if (it == vertex_labels.end() || *it != label) return -1;
    return static_cast<int>(it - vertex_labels.begin());
}

std::string CardinalityClass::str() const {
    switch (tag) {
        case Finite: return "finite(" + count.str() + ")";
        case CountablyInfinite: return "countable";
        default: return "uncountable";
    }
}

namespace {

ShiftGraph restrict_to(const ShiftGraph& g, const std::vector<bool>& keep_vertex,
                       const std::vector<bool>& keep_edge) {
    ShiftGraph out;
    std::vector<int> remap(g.vertex_count(), -1);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (keep_vertex[v]) {
            remap[v] = out.vertex_count();
            out.vertex_labels.push_back(g.vertex_labels[v]);
        }
    for (int i = 0; i < g.edge_count(); ++i)
        if (keep_edge[i]) {
            ShiftGraph::Edge e = g.edges[i];
            e.src = remap[e.src];
            e.dst = remap[e.dst];
            out.edges.push_back(std::move(e));
        }
    out.canonicalize();
    return out;
}

/// Tarjan SCC; returns component id per vertex, ids in deterministic order.
std::vector<int> scc_ids(const ShiftGraph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : g.edges) adj[e.src].push_back(e.dst);

    std::vector<int> ids(n, -1), low(n, 0), num(n, -1), stack;
    std::vector<bool> on_stack(n, false);
    int counter = 0, comp = 0;
    // iterative Tarjan
    struct Frame { int v; size_t child; };
    for (int root = 0; root < n; ++root) {
        if (num[root] != -1) continue;
        std::vector<Frame> frames{{root, 0}};
        while (!frames.empty()) {
            auto& [v, child] = frames.back();
            if (child == 0) {
                num[v] = low[v] = counter++;
                stack.push_back(v);
                on_stack[v] = true;
            }
            if (child < adj[v].size()) {
                int w = adj[v][child++];
                if (num[w] == -1) {
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], num[w]);
                }
            } else {
                if (low[v] == num[v]) {
                    while (true) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        ids[w] = comp;
                        if (w == v) break;
                    }
                    ++comp;
                }
                int done = v;
                frames.pop_back();
                if (!frames.empty())
                    low[frames.back().v] = std::min(low[frames.back().v], low[done]);
            }
        }
    }
    // renumber components by smallest contained vertex for determinism
    std::vector<int> first(comp, n);
    for (int v = 0; v < n; ++v) first[ids[v]] = std::min(first[ids[v]], v);
    std::vector<int> order(comp);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return first[a] < first[b]; });
    std::vector<int> rank(comp);
    for (int i = 0; i < comp; ++i) rank[order[i]] = i;
    for (int v = 0; v < n; ++v) ids[v] = rank[ids[v]];
    return ids;
}

} // namespace

ShiftGraph prune(const ShiftGraph& g) {
    int n = g.vertex_count();
    std::vector<bool> alive(n, true);
    std::vector<int> indeg(n, 0), outdeg(n, 0);
    for (const auto& e : g.edges) {
        ++outdeg[e.src];
        ++indeg[e.dst];
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            if (!alive[v] || (indeg[v] > 0 && outdeg[v] > 0)) continue;
            alive[v] = false;
            changed = true;
            for (const auto& e : g.edges) {
                if (e.src == v && alive[e.dst]) --indeg[e.dst];
                if (e.dst == v && alive[e.src]) --outdeg[e.src];
            }
            indeg[v] = outdeg[v] = 0;
        }
    }
    std::vector<bool> keep_edge(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i)
        keep_edge[i] = alive[g.edges[i].src] && alive[g.edges[i].dst];
    return restrict_to(g, alive, keep_edge);
}

std::vector<int> component_ids(const ShiftGraph& g) {
    std::vector<int> ids = scc_ids(g);
    int n = g.vertex_count();
    // keep only components containing an edge; renumber densely
    std::vector<bool> has_edge(n, false);
    for (const auto& e : g.edges)
        if (ids[e.src] == ids[e.dst]) has_edge[ids[e.src]] = true;
    std::vector<int> remap(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        int c = ids[v];
        if (has_edge[c] && remap[c] == -1) remap[c] = next++;
    }
    for (int v = 0; v < n; ++v) ids[v] = remap[ids[v]];
    return ids;
}

std::vector<ShiftGraph> irreducible_components(const ShiftGraph& g) {
    std::vector<int> ids = component_ids(g);
    int comp = 0;
    for (int v = 0; v < g.vertex_count(); ++v) comp = std::max(comp, ids[v] + 1);
    std::vector<ShiftGraph> out;
    for (int c = 0; c < comp; ++c) {
        std::vector<bool> keep_v(g.vertex_count()), keep_e(g.edge_count());
        for (int v = 0; v < g.vertex_count(); ++v) keep_v[v] = ids[v] == c;
        for (int i = 0; i < g.edge_count(); ++i)
            keep_e[i] = keep_v[g.edges[i].src] && keep_v[g.edges[i].dst];
        out.push_back(restrict_to(g, keep_v, keep_e));
    }
    return out;
}

CardinalityClass classify(const ShiftGraph& g) {
    int n = g.vertex_count();
    std::vector<int> indeg(n, 0), outdeg(n, 0);
    for (const auto& e : g.edges) {
        ++outdeg[e.src];
        ++indeg[e.dst];
    }
    bool cycles_only = true;
    for (int v = 0; v < n; ++v)
        if (indeg[v] != 1 || outdeg[v] != 1) cycles_only = false;
    if (cycles_only) return {CardinalityClass::Finite, n};

    std::vector<int> ids = scc_ids(g);
    std::map<int, std::pair<int, int>> comp_size; // id -> (vertices, internal edges)
    for (int v = 0; v < n; ++v) ++comp_size[ids[v]].first;
    for (const auto& e : g.edges)
        if (ids[e.src] == ids[e.dst]) ++comp_size[ids[e.src]].second;
    for (const auto& [id, ve] : comp_size)
        if (ve.second > ve.first) return {CardinalityClass::Uncountable, 0};
    return {CardinalityClass::CountablyInfinite, 0};
}

cpp_int count_periodic_points(const ShiftGraph& g, int r) {
    if (r < 1) throw DomainError("period must be at least 1");
    int n = g.vertex_count();
    if (n == 0) return 0;
    std::vector<std::vector<cpp_int>> m(n, std::vector<cpp_int>(n, 0)), acc;
    for (const auto& e : g.edges) m[e.src][e.dst] += 1;
    acc = m;
    for (int step = 1; step < r; ++step) {
        std::vector<std::vector<cpp_int>> next(n, std::vector<cpp_int>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                if (acc[i][k] == 0) continue;
                for (int j = 0; j < n; ++j) next[i][j] += acc[i][k] * m[k][j];
            }
        acc = std::move(next);
    }
    cpp_int trace = 0;
    for (int i = 0; i < n; ++i) trace += acc[i][i];
    return trace;
}

ShiftGraph block_presentation(const ShiftGraph& g, int n) {
    if (n < 1) throw DomainError("block length must be at least 1");
    if (n == 1) return g;
    std::vector<std::vector<int>> out_edges(g.vertex_count());
    for (int i = 0; i < g.edge_count(); ++i) out_edges[g.edges[i].src].push_back(i);

    // enumerate all paths of exactly `len` edges
    auto paths_of = [&](int len) {
        std::vector<std::vector<int>> result, stack;
        for (int i = 0; i < g.edge_count(); ++i) stack.push_back({i});
        while (!stack.empty()) {
            std::vector<int> p = std::move(stack.back());
            stack.pop_back();
            if (static_cast<int>(p.size()) == len) {
                result.push_back(std::move(p));
                continue;
            }
            for (int next : out_edges[g.edges[p.back()].dst]) {
                std::vector<int> q = p;
                q.push_back(next);
                stack.push_back(std::move(q));
            }
        }
        return result;
    };
    auto block_label = [&](const std::vector<int>& p, size_t from, size_t to) {
        std::string s;
        for (size_t i = from; i < to; ++i) {
            if (i > from) s += "|";
            s += g.edges[p[i]].label;
        }
        return s;
    };

    ShiftGraph out;
    std::map<std::string, int> vid;
    for (const auto& p : paths_of(n)) {
        std::string l = block_label(p, 0, p.size());
        if (!vid.count(l)) {
            vid.emplace(l, out.vertex_count());
            out.vertex_labels.push_back(l);
        }
    }
    for (const auto& p : paths_of(n + 1)) {
        ShiftGraph::Edge e;
        e.src = vid.at(block_label(p, 0, p.size() - 1));
        e.dst = vid.at(block_label(p, 1, p.size()));
        e.label = block_label(p, 0, p.size());
        e.contribution = g.edges[p.front()].contribution;
        out.edges.push_back(std::move(e));
    }
    out.canonicalize();
    return out;
}

std::vector<Subgroup> realizable_images(const ShiftGraph& g, const FiniteGroup& sigma) {
    SubgroupLattice lattice(sigma);
    std::vector<int> scc = scc_ids(g);
    int n = g.vertex_count();
    std::vector<std::vector<int>> out_edges(n);
    for (int i = 0; i < g.edge_count(); ++i) out_edges[g.edges[i].src].push_back(i);

    auto step = [&](int h, const std::vector<int>& contribution) {
        for (int x : contribution) h = lattice.extend(h, x);
        return h;
    };

    // PastSub(u): subgroups generated along nonempty closed product-walks at
    // u inside u's strongly connected component.
    std::vector<std::vector<int>> past(n);
    for (int u = 0; u < n; ++u) {
        std::set<std::pair<int, int>> seen;
        std::vector<std::pair<int, int>> queue{{u, lattice.trivial()}};
        std::set<int> found;
        size_t head = 0;
        while (head < queue.size()) {
            auto [v, h] = queue[head++];
            for (int i : out_edges[v]) {
                const auto& e = g.edges[i];
                if (scc[e.dst] != scc[u]) continue;
                int h2 = step(h, e.contribution);
                if (e.dst == u) found.insert(h2);
                if (seen.emplace(e.dst, h2).second) queue.push_back({e.dst, h2});
            }
        }
        past[u].assign(found.begin(), found.end());
    }

    // forward sweep from every (u, past subgroup); futures mirror pasts
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> queue;
    std::set<int> result;
    for (int u = 0; u < n; ++u)
        for (int h : past[u])
            if (seen.emplace(u, h).second) queue.push_back({u, h});
    size_t head = 0;
    while (head < queue.size()) {
        auto [v, h] = queue[head++];
        for (int f : past[v]) result.insert(lattice.join(h, f));
        for (int i : out_edges[v]) {
            const auto& e = g.edges[i];
            int h2 = step(h, e.contribution);
            if (seen.emplace(e.dst, h2).second) queue.push_back({e.dst, h2});
        }
    }

    std::vector<Subgroup> out;
    for (int id : result) out.push_back(lattice.at(id));
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_dot(const ShiftGraph& g, const std::string& name) {
    std::ostringstream out;
    out << "digraph \"" << name << "\" {\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        out << "  v" << v << " [label=\"" << g.vertex_labels[v] << "\"];\n";
    for (const auto& e : g.edges)
        out << "  v" << e.src << " -> v" << e.dst << " [label=\"" << e.label << "\"];\n";
    out << "}\n";
    return out.str();
}

} // namespace repshift
