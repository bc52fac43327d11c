#include "repshift/lifting.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace repshift {

int PeriodicRep::least_period() const {
    int r = period();
    for (int d = 1; d <= r; ++d) {
        if (r % d != 0) continue;
        bool ok = true;
        for (int i = 0; i < r && ok; ++i)
            if (edge_labels[i] != edge_labels[(i + d) % r]) ok = false;
        if (ok) return d;
    }
    return r;
}

PeriodicRep parse_rep_spec(const std::string& spec) {
    const std::string prefix = "cycle:";
    if (spec.compare(0, prefix.size(), prefix) != 0)
        throw ConfigError("representation spec must start with 'cycle:'");
    PeriodicRep rep;
    size_t start = prefix.size();
    while (start <= spec.size()) {
        size_t comma = spec.find(',', start);
        std::string label =
            spec.substr(start, comma == std::string::npos ? comma : comma - start);
        if (label.empty()) throw ConfigError("empty edge label in representation spec");
        rep.edge_labels.push_back(std::move(label));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (rep.edge_labels.empty()) throw ConfigError("empty representation spec");
    return rep;
}

namespace {

std::vector<int> parse_edge_label(const std::string& label, const FiniteGroup& sigma,
                                  size_t gen_count) {
    std::vector<int> values;
    size_t start = 0;
    while (start <= label.size()) {
        size_t dot = label.find('.', start);
        std::string tok = label.substr(start, dot == std::string::npos ? dot : dot - start);
        int idx = sigma.parse_element(tok);
        if (idx < 0)
            throw DomainError("'" + tok + "' is not an element of " + sigma.name());
        values.push_back(idx);
        if (dot == std::string::npos) break;
        start = dot + 1;
    }
    if (values.size() != gen_count)
        throw DomainError("edge label has " + std::to_string(values.size()) +
                          " values, expected " + std::to_string(gen_count));
    return values;
}

} // namespace

std::vector<std::vector<int>> validate_periodic_rep(const Presentation& p,
                                                    const FiniteGroup& sigma,
                                                    const PeriodicRep& rho) {
    BasePresentation b = hnn_window_base(p, default_window(p));
    int r = rho.period();
    if (r < 1) throw DomainError("empty periodic representation");

    std::vector<std::vector<int>> assigns;
    for (const std::string& label : rho.edge_labels) {
        std::vector<int> a = parse_edge_label(label, sigma, b.gens.size());
        for (const Word& rel : b.relators)
            if (eval_word(rel, a, sigma) != sigma.identity())
                throw DomainError("edge label '" + label + "' violates a relator");
        assigns.push_back(std::move(a));
    }
    for (int j = 0; j < r; ++j) {
        const auto& cur = assigns[j];
        const auto& next = assigns[(j + 1) % r];
        for (size_t i = 0; i < b.u_gens.size(); ++i)
            if (eval_word(b.phi[i], cur, sigma) != next[b.u_gens[i]])
                throw DomainError("labels " + std::to_string(j) + " and " +
                                  std::to_string((j + 1) % r) +
                                  " do not compose along the edge rule");
    }

    int r0 = rho.least_period();
    std::vector<std::vector<int>> slices(r0);
    for (int j = 0; j < r0; ++j)
        for (int s : b.slice0) slices[j].push_back(assigns[j][s]);
    return slices;
}

LiftOrbit lift_orbit_subshift(const Presentation& p, const ExtensionData& ext,
                              const PeriodicRep& rho, const EnumOptions& opt) {
    std::vector<std::vector<int>> slices = validate_periodic_rep(p, ext.sigma, rho);
    int r0 = static_cast<int>(slices.size());
    int f_count = static_cast<int>(slices[0].size());

    // window long enough that one edge covers a full period of base windows,
    // which pins the phase of the projection along any path
    int w = std::holds_alternative<ZGroupPresentation>(p) ? default_window(p) + r0 - 1 : r0;
    BasePresentation bw = hnn_window_base(p, w);
    if (static_cast<int>(bw.gens.size()) != w * f_count)
        throw InternalError("window generator layout mismatch");

    // per-element candidate lists: the A-coset over the projected value
    std::vector<std::vector<int>> fiber(ext.sigma.size());
    for (int e = 0; e < ext.e.size(); ++e) fiber[ext.projection[e]].push_back(e);

    std::vector<std::vector<int>> homs;
    for (int phase = 0; phase < r0; ++phase) {
        EnumOptions local = opt;
        local.candidates.clear();
        for (int i = 0; i < w; ++i)
            for (int f = 0; f < f_count; ++f)
                local.candidates.push_back(fiber[slices[(phase + i) % r0][f]]);
        auto part = enumerate_homs(bw, ext.e, local);
        homs.insert(homs.end(), part.begin(), part.end());
    }

    LiftOrbit orbit;
    orbit.base = rho;
    orbit.window = bw;
    orbit.graph = prune(graph_from_homs(bw, ext.e, homs));
    return orbit;
}

bool exists_surjective_lift(const LiftOrbit& orbit, const ExtensionData& ext) {
    Subgroup full(ext.e.size());
    std::iota(full.begin(), full.end(), 0);
    auto images = realizable_images(orbit.graph, ext.e);
    return std::binary_search(images.begin(), images.end(), full);
}

bool exists_surjective_lift(const Presentation& p, const ExtensionData& ext,
                            const PeriodicRep& rho, const EnumOptions& opt) {
    return exists_surjective_lift(lift_orbit_subshift(p, ext, rho, opt), ext);
}

CocycleAssignment lift_difference_cocycle(const ExtensionData& ext,
                                          const std::vector<int>& rho_hat,
                                          const std::vector<int>& rho_tilde) {
    if (rho_hat.size() != rho_tilde.size())
        throw DomainError("lift windows differ in length");
    CocycleAssignment xi;
    for (size_t g = 0; g < rho_hat.size(); ++g) {
        if (ext.projection[rho_hat[g]] != ext.projection[rho_tilde[g]])
            throw DomainError("the two lifts project to different representations");
        int d = ext.e.mul(rho_hat[g], ext.e.inv(rho_tilde[g]));
        if (!ext.in_kernel(d)) throw InternalError("lift difference escapes the kernel");
        xi.push_back(d);
    }
    return xi;
}

bool cocycle_check(const BasePresentation& b, const ExtensionData& ext,
                   const CocycleAssignment& xi, const std::vector<int>& rho_tilde) {
    if (xi.size() != b.gens.size() || rho_tilde.size() != b.gens.size())
        throw DomainError("assignment length does not match the window base");
    std::vector<int> prod(xi.size());
    for (size_t g = 0; g < xi.size(); ++g) prod[g] = ext.e.mul(xi[g], rho_tilde[g]);
    for (const Word& rel : b.relators)
        if (eval_word(rel, prod, ext.e) != ext.e.identity()) return false;
    return true;
}

std::optional<int> coboundary_witness(const ExtensionData& ext, const CocycleAssignment& xi,
                                      const std::vector<int>& rho) {
    if (xi.size() != rho.size()) throw DomainError("assignment lengths differ");
    for (int a : ext.kernel) {
        bool ok = true;
        for (size_t g = 0; g < xi.size() && ok; ++g) {
            int want = ext.e.mul(ext.twisted_action(rho[g], a), ext.e.inv(a));
            if (want != xi[g]) ok = false;
        }
        if (ok) return a;
    }
    return std::nullopt;
}

std::vector<std::vector<int>> window_lifts(const BasePresentation& b, const ExtensionData& ext,
                                           const std::vector<int>& rho,
                                           const EnumOptions& opt) {
    if (rho.size() != b.gens.size())
        throw DomainError("window representation length mismatch");
    std::vector<std::vector<int>> fiber(ext.sigma.size());
    for (int e = 0; e < ext.e.size(); ++e) fiber[ext.projection[e]].push_back(e);
    EnumOptions local = opt;
    local.candidates.clear();
    for (int v : rho) local.candidates.push_back(fiber[v]);
    return enumerate_homs(b, ext.e, local);
}

std::vector<PeriodicRep> periodic_reps(const ShiftGraph& g, int max_period) {
    if (max_period < 1) throw DomainError("max period must be at least 1");
    std::vector<std::vector<const ShiftGraph::Edge*>> out_edges(g.vertex_count());
    for (const auto& e : g.edges) out_edges[e.src].push_back(&e);

    std::set<std::vector<std::string>> canon;
    std::vector<std::string> path;
    auto record = [&] {
        // reduce to the least period, then take the smallest rotation
        int r = static_cast<int>(path.size());
        int d = r;
        for (int cand = 1; cand < r; ++cand) {
            if (r % cand != 0) continue;
            bool ok = true;
            for (int i = 0; i < r && ok; ++i)
                if (path[i] != path[(i + cand) % r]) ok = false;
            if (ok) { d = cand; break; }
        }
        std::vector<std::string> cycle(path.begin(), path.begin() + d);
        std::vector<std::string> best = cycle;
        for (int s = 1; s < d; ++s) {
            std::rotate(cycle.begin(), cycle.begin() + 1, cycle.end());
            best = std::min(best, cycle);
        }
        canon.insert(best);
    };
    for (int start = 0; start < g.vertex_count(); ++start) {
        // DFS over walks of length <= max_period from `start`
        struct Frame { int vertex; size_t next; };
        std::vector<Frame> stack{{start, 0}};
        while (!stack.empty()) {
            Frame& top = stack.back();
            if (top.next < out_edges[top.vertex].size()) {
                const auto* e = out_edges[top.vertex][top.next++];
                path.push_back(e->label);
                if (e->dst == start) record();
                if (static_cast<int>(stack.size()) < max_period) {
                    stack.push_back({e->dst, 0});
                } else {
                    path.pop_back();
                }
            } else {
                stack.pop_back();
                if (!path.empty()) path.pop_back();
            }
        }
    }
    std::vector<PeriodicRep> out;
    for (const auto& labels : canon) out.push_back(PeriodicRep{labels});
    return out;
}

} // namespace repshift
