#pragma once

#include <random>
#include <string>
#include <vector>

#include "repshift/laurent.hpp"
#include "repshift/lifting.hpp"
#include "repshift/repshift.hpp"
#include "repshift/shiftgraph.hpp"
#include "repshift/zgroup.hpp"

// Independent reference implementations used to cross-check library results,
// plus fixture loading and seeded random input generators. Everything here is
// deliberately written with a different algorithmic shape than the library
// (plain enumeration and closures instead of backtracking / Bareiss / product
// automata) so agreement is meaningful.
namespace repshift::testing {

std::string fixture_path(const std::string& name);
std::string read_fixture(const std::string& name);
Presentation load_fixture(const std::string& name);

/// Every assignment tried by an odometer; all relators checked at the end.
std::vector<std::vector<int>> brute_homs(const BasePresentation& b, const FiniteGroup& sigma);

/// Cardinality via explicit simple-cycle enumeration: uncountable iff two
/// distinct simple cycles share a vertex; finite iff vertex-disjoint cycles
/// cover every vertex and edge. Expects a pruned graph.
CardinalityClass cycle_classify(const ShiftGraph& g);

/// Closed walks of length exactly r, counted one walk at a time.
Int closed_walk_count(const ShiftGraph& g, int r);

/// Realizable path images via a walk->subgroup transitive closure: W[u][v] is
/// the set of subgroups generated along some nonempty walk u->v (fixpoint of
/// walk concatenation); a bi-infinite eventually-periodic path contributes
/// join(past cycle, middle walk, future cycle).
std::vector<Subgroup> path_realizable(const ShiftGraph& g, const FiniteGroup& sigma);

/// True iff the full group is among path_realizable(g, e).
bool path_surjective(const ShiftGraph& g, const FiniteGroup& e);

/// Laplace expansion along rows, memoized on column masks. n <= 16.
IntPoly cofactor_det(const PolyMatrix<Int>& m);

/// Res_t(delta, t^r - s) by evaluating the integer Sylvester determinant at
/// s = 0..deg(delta) (rational Gaussian elimination) and interpolating.
/// Unit-normalized.
IntPoly resultant_pullback(const IntPoly& delta, int r);

IntPoly random_poly(std::mt19937& rng, int max_deg, int max_coeff);
IntPoly random_symmetric_poly(std::mt19937& rng, int max_deg, int max_coeff);
PolyMatrix<Int> random_block(std::mt19937& rng, int n, int max_deg, int max_coeff);

/// Random shift-periodic presentation source: one family with window <= 2 or
/// two families with window <= 1, with 0..3 random relator families.
std::string random_presentation_text(std::mt19937& rng);

} // namespace repshift::testing
