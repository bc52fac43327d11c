#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "repshift/errors.hpp"

namespace repshift {

/// An element of a small finite group: either a permutation of {1..n}
/// (stored as the 0-based image sequence) or a residue mod n.
class GroupElement {
public:
    GroupElement() = default;

    static GroupElement permutation(std::vector<uint8_t> images);
    static GroupElement residue(uint32_t value, uint32_t modulus);

    bool is_permutation() const { return modulus_ == 0; }
    bool is_identity() const;

    GroupElement operator*(const GroupElement& rhs) const;
    GroupElement inverse() const;
    GroupElement pow(long long e) const;

    /// Canonical text form: residues as decimals, permutations in cycle
    /// notation like "(12)(34)", identity as "e".
    std::string str() const;

    /// Parses the str() form. degree/modulus give the ambient context.
    static std::optional<GroupElement> parse_permutation(std::string_view s, int degree);
    static std::optional<GroupElement> parse_residue(std::string_view s, uint32_t modulus);

    const std::vector<uint8_t>& images() const { return images_; }
    uint32_t value() const { return value_; }
    uint32_t modulus() const { return modulus_; }

    auto operator<=>(const GroupElement&) const = default;

private:
    std::vector<uint8_t> images_; // permutation form
    uint32_t value_ = 0;          // residue form
    uint32_t modulus_ = 0;        // 0 marks permutation form
};

/// A small finite group with exact multiplication. Elements are kept in a
/// canonical sorted order so every downstream labeling is deterministic.
/// Multiplication goes through a precomputed table (|G| <= 120 throughout).
class FiniteGroup {
public:
    static FiniteGroup symmetric(int n);   // n <= 5
    static FiniteGroup alternating(int n); // n in {4, 5}
    static FiniteGroup cyclic(int n);      // n <= 64
    static FiniteGroup klein_four();       // <(12)(34), (13)(24)> in S4

    /// Accepts "S2".."S5", "A4", "A5", "Z<n>", "V4".
    static FiniteGroup from_name(std::string_view name);

    /// The subgroup of `parent` on the given element indices, as a group in
    /// its own right (elements keep their parent representation).
    static FiniteGroup subgroup_of(const FiniteGroup& parent,
                                   const std::vector<int>& element_indices,
                                   std::string name);

    const std::string& name() const { return name_; }
    int size() const { return static_cast<int>(elements_.size()); }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return table_[a][b]; }
    int inv(int a) const { return inverse_[a]; }
    int pow(int a, long long e) const;
    bool abelian() const { return abelian_; }

    /// Permutation degree, or modulus for cyclic groups.
    int degree() const { return degree_; }
    bool permutation_based() const { return permutation_based_; }

    const GroupElement& element(int i) const { return elements_[i]; }
    /// -1 when absent.
    int index_of(const GroupElement& g) const;
    int index_of_or_throw(const GroupElement& g) const;

    /// Parses the canonical element text form; -1 when unparsable/absent.
    int parse_element(std::string_view s) const;

private:
    FiniteGroup(std::string name, std::vector<GroupElement> elements, int degree,
                bool permutation_based);

    std::string name_;
    std::vector<GroupElement> elements_; // sorted
    std::map<GroupElement, int> index_;
    std::vector<std::vector<int16_t>> table_;
    std::vector<int16_t> inverse_;
    int identity_ = 0;
    int degree_ = 0;
    bool permutation_based_ = true;
    bool abelian_ = false;
};

/// A subgroup as a sorted list of element indices into its ambient group.
using Subgroup = std::vector<int>;

/// Smallest subgroup containing the given elements (closure under
/// multiplication and inverse; always contains the identity).
Subgroup generated_subgroup(const FiniteGroup& g, const Subgroup& generators);

/// True iff the orbit of point 1 under H is all of {1..n}. H must consist of
/// permutations moving only {1..n}.
bool is_transitive(const FiniteGroup& g, const Subgroup& h, int n);

/// Interning/join structure over the subgroups of one group. Subgroup ids are
/// stable and canonical (insertion-ordered, element sets sorted), and joins
/// are memoized; lattices here stay tiny (<= 156 subgroups for S5).
class SubgroupLattice {
public:
    explicit SubgroupLattice(const FiniteGroup& g);

    int trivial() const { return trivial_; }
    int full();
    int intern(const Subgroup& closed_subgroup);
    int intern_generated(const Subgroup& generators);
    /// id of <subgroup(id) ∪ {element}>
    int extend(int id, int element);
    int join(int a, int b);
    const Subgroup& at(int id) const { return subgroups_[id]; }
    const FiniteGroup& group() const { return *group_; }

private:
    const FiniteGroup* group_;
    std::vector<Subgroup> subgroups_;
    std::map<Subgroup, int> ids_;
    std::map<std::pair<int, int>, int> extend_memo_;
    std::map<std::pair<int, int>, int> join_memo_;
    int trivial_;
};

/// A named split extension A -> E -> Sigma with section and the induced
/// twisted action of Sigma on the abelian kernel A.
struct ExtensionData {
    std::string name;
    FiniteGroup e;
    FiniteGroup sigma;
    Subgroup kernel;                       // A, as element indices in E
    std::vector<int> projection;           // E index -> Sigma index
    std::vector<int> section;              // Sigma index -> E index
    std::vector<std::vector<int>> action;  // [sigma idx][pos in kernel] -> pos in kernel

    bool in_kernel(int e_idx) const;
    int kernel_pos(int e_idx) const;       // -1 when outside A
    /// a^y = s(y) a s(y)^-1, both given/returned as E element indices.
    int twisted_action(int y_sigma_idx, int a_e_idx) const;
};

/// name in {"S3/S2", "A4/Z3", "S4/S3"}. Sections are fixed:
///   S3/S2: e->e, (12)->(12)
///   A4/Z3: 0->e, 1->(123), 2->(132)
///   S4/S3: the natural embedding fixing the point 4
ExtensionData standard_extension(std::string_view name);

} // namespace repshift
