#pragma once

#include "repshift/fingroup.hpp"
#include "repshift/repshift.hpp"
#include "repshift/shiftgraph.hpp"
#include "repshift/zgroup.hpp"

namespace repshift {

/// A periodic point of Φ_Σ given as the closed path of its default-window
/// edge labels (values of all window generators joined by ".").
struct PeriodicRep {
    std::vector<std::string> edge_labels;

    int period() const { return static_cast<int>(edge_labels.size()); }
    /// Smallest rotation mapping the label cycle to itself.
    int least_period() const;
};

/// Parses "cycle:<label>,<label>,..." (the CLI --rep syntax).
PeriodicRep parse_rep_spec(const std::string& spec);

/// Throws DomainError unless the labels are valid edges of Φ_Σ over the
/// default window and consecutive (cyclically) labels compose. Returns the
/// per-slice generator values: slices[j][f] for j < least period.
std::vector<std::vector<int>> validate_periodic_rep(const Presentation& p,
                                                    const FiniteGroup& sigma,
                                                    const PeriodicRep& rho);

/// The preimage under p* of the shift orbit of rho, as a shift of finite
/// type: the pruned Φ_E graph over the base B^(w) (w covering one least
/// period of windows), restricted to edges projecting into rho's cycle.
struct LiftOrbit {
    PeriodicRep base;
    BasePresentation window; // the B^(w) the graph is built over
    ShiftGraph graph;        // edges labeled by E-assignments
};

LiftOrbit lift_orbit_subshift(const Presentation& p, const ExtensionData& ext,
                              const PeriodicRep& rho, const EnumOptions& opt = {});

/// True iff some bi-infinite path of the lift orbit has image all of E,
/// i.e. realizable_images of the orbit graph contains the full subgroup.
bool exists_surjective_lift(const Presentation& p, const ExtensionData& ext,
                            const PeriodicRep& rho, const EnumOptions& opt = {});
bool exists_surjective_lift(const LiftOrbit& orbit, const ExtensionData& ext);

/// Values of a twisted cocycle on the window generators, as element indices
/// in E lying in the kernel A.
using CocycleAssignment = std::vector<int>;

/// ξ(g) = ρ̂(g)·ρ̃(g)⁻¹ for two lifts of the same window representation.
/// Throws DomainError when the projections differ.
CocycleAssignment lift_difference_cocycle(const ExtensionData& ext,
                                          const std::vector<int>& rho_hat,
                                          const std::vector<int>& rho_tilde);

/// True iff g ↦ ξ(g)·ρ̃(g) is a homomorphism on the window base, the window
/// form of the twisted cocycle identity.
bool cocycle_check(const BasePresentation& b, const ExtensionData& ext,
                   const CocycleAssignment& xi, const std::vector<int>& rho_tilde);

/// Some a ∈ A with ξ(g) = a^{ρ(g)}·a⁻¹ for every window generator g, found
/// by exhaustive search; rho gives the Σ-values of the window generators.
/// Returns the E element index of the witness, or nullopt.
std::optional<int> coboundary_witness(const ExtensionData& ext, const CocycleAssignment& xi,
                                      const std::vector<int>& rho);

/// All lifts of the window representation rho (Σ-values per window
/// generator) to homomorphisms B^(w) -> E, in canonical order.
std::vector<std::vector<int>> window_lifts(const BasePresentation& b, const ExtensionData& ext,
                                           const std::vector<int>& rho,
                                           const EnumOptions& opt = {});

/// Closed paths of length <= max_period in the graph, one representative per
/// rotation class, in canonical order.
std::vector<PeriodicRep> periodic_reps(const ShiftGraph& g, int max_period);

} // namespace repshift
