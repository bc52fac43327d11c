#pragma once

#include "repshift/fingroup.hpp"
#include "repshift/shiftgraph.hpp"
#include "repshift/zgroup.hpp"

namespace repshift {

struct EnumOptions {
    /// Upper bound on the estimated raw assignment count (product of the
    /// per-generator candidate list sizes).
    long long budget = 2'000'000'000;
    /// Per-generator candidate element lists; empty means "all of Σ" for
    /// every generator.
    std::vector<std::vector<int>> candidates;
    /// Worker count; 0 consults REPSHIFT_THREADS, missing/invalid means 1.
    int threads = 0;
};

/// g(w) under the assignment gen index -> element index.
int eval_word(const Word& w, const std::vector<int>& assign, const FiniteGroup& sigma);

/// All homomorphisms B -> Σ as assignment vectors in canonical order, found
/// by backtracking with each relator checked as soon as its last generator is
/// assigned. Workers split on the first generator; the merged order does not
/// depend on the worker count.
std::vector<std::vector<int>> enumerate_homs(const BasePresentation& b,
                                             const FiniteGroup& sigma,
                                             const EnumOptions& opt = {});

/// Values joined by "." (element text forms contain no dots).
std::string assignment_label(const std::vector<int>& values, const FiniteGroup& sigma);

/// The labeled graph whose edges are the given homomorphisms: source label =
/// values on the U-part, target label = values of the phi words, edge label =
/// full assignment, contribution = slice-0 values. Not pruned.
ShiftGraph graph_from_homs(const BasePresentation& b, const FiniteGroup& sigma,
                           const std::vector<std::vector<int>>& homs);

/// Pruned representation-shift graph of Hom(K, Σ) over the window base
/// B^(n); build_shift_graph uses the default window.
ShiftGraph build_shift_graph_window(const Presentation& p, const FiniteGroup& sigma, int n,
                                    const EnumOptions& opt = {});
ShiftGraph build_shift_graph(const Presentation& p, const FiniteGroup& sigma,
                             const EnumOptions& opt = {});

/// Cardinality of the set of transitive points of Φ_{S_r}, with the exact
/// count in the Finite case. r in 2..5.
CardinalityClass classify_transitive(const Presentation& p, int r,
                                     const EnumOptions& opt = {});

/// Number of index-r subgroups: Finite(N / (r-1)!) when there are Finite(N)
/// transitive points (divisibility asserted), otherwise the same infinite
/// class.
CardinalityClass count_index_subgroups(const Presentation& p, int r,
                                       const EnumOptions& opt = {});

} // namespace repshift
