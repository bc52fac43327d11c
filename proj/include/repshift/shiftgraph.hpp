#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "repshift/errors.hpp"
#include "repshift/fingroup.hpp"

namespace repshift {

/// Labeled digraph presenting a shift of finite type as an edge shift.
/// Vertices carry window labels; each edge carries its full window label and
/// a "contribution": the group-element indices its symbol feeds into the
/// image of a representation (one per slice-0 generator).
struct ShiftGraph {
    struct Edge {
        int src = 0;
        int dst = 0;
        std::string label;
        std::vector<int> contribution;

        auto operator<=>(const Edge&) const = default;
    };

    std::vector<std::string> vertex_labels;
    std::vector<Edge> edges;

    int vertex_count() const { return static_cast<int>(vertex_labels.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }

    /// Re-sorts vertices by label and edges by (src, label, dst); drops
    /// duplicate edges. Every constructor below returns canonical graphs.
    void canonicalize();

    /// Index of the vertex with this label, or -1.
    int find_vertex(const std::string& label) const;
};

struct CardinalityClass {
    enum Tag { Finite, CountablyInfinite, Uncountable };
    Tag tag = Finite;
    boost::multiprecision::cpp_int count = 0; // meaningful for Finite only

    bool operator==(const CardinalityClass&) const = default;
    std::string str() const;
};

/// Maximal subgraph in which every vertex lies on a bi-infinite path
/// (iterated removal of vertices with zero in- or out-degree). Idempotent.
ShiftGraph prune(const ShiftGraph& g);

/// Strongly connected components containing at least one edge, each as a
/// subgraph, in canonical order. Expects a pruned graph.
std::vector<ShiftGraph> irreducible_components(const ShiftGraph& g);

/// Component ids aligned with irreducible_components; -1 for vertices in no
/// edged component (possible only on unpruned graphs).
std::vector<int> component_ids(const ShiftGraph& g);

/// Cardinality of the bi-infinite path space. Expects a pruned graph.
CardinalityClass classify(const ShiftGraph& g);

/// Number of points of period dividing r = trace of the r-th power of the
/// adjacency matrix (multi-edges counted). Expects a pruned graph.
boost::multiprecision::cpp_int count_periodic_points(const ShiftGraph& g, int r);

/// The n-block presentation: vertices are allowed n-blocks (paths of n
/// edges), edges the allowed (n+1)-blocks. n = 1 returns the graph itself.
ShiftGraph block_presentation(const ShiftGraph& g, int n);

/// The exact set of subgroups of sigma arising as the closure of the edge
/// contributions accumulated along some bi-infinite path. Expects a pruned
/// graph whose edge contributions index into sigma. Returned as canonical
/// sorted element-index sets, lexicographically ordered.
std::vector<Subgroup> realizable_images(const ShiftGraph& g, const FiniteGroup& sigma);

/// Deterministic Graphviz rendering.
std::string to_dot(const ShiftGraph& g, const std::string& name = "shift");

} // namespace repshift
