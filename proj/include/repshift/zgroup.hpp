#pragma once

#include <string>
#include <variant>
#include <vector>

#include "repshift/errors.hpp"

namespace repshift {

/// One letter of a word over indexed generator families: family id, integer
/// index shift, nonzero exponent.
struct IndexedLetter {
    int family = 0;
    int shift = 0;
    int exp = 1;

    auto operator<=>(const IndexedLetter&) const = default;
};

/// Freely reduced word over indexed generators.
using Word = std::vector<IndexedLetter>;

/// Merges adjacent letters with equal (family, shift) and drops zero
/// exponents.
Word freely_reduce(Word w);

/// Shift-periodic presentation: generator families a, b, ... indexed over ℤ,
/// with relator families closed under index shift. Relators are normalized so
/// each family's minimum index is 0; `window` is the maximum index appearing
/// anywhere (0 when there are no relators).
struct ZGroupPresentation {
    std::vector<std::string> families;
    std::vector<Word> relators;
    int window = 0;

    bool operator==(const ZGroupPresentation&) const = default;
};

/// Explicit HNN data ⟨x, B | x⁻¹ux = phi(u), u ∈ U⟩. Base words use
/// IndexedLetter with shift fixed at 0. U-generators are single base
/// generators; phi images are arbitrary base words.
struct HNNData {
    std::vector<std::string> gens;
    std::vector<Word> base_relators;
    std::vector<int> u_gens;       // indices into gens
    std::vector<Word> phi;         // one V-word per U-generator

    bool operator==(const HNNData&) const = default;
};

using Presentation = std::variant<ZGroupPresentation, HNNData>;

/// Finite presentation of a window base B^(n): plain generators, relators
/// (letters carry gen index in `family`, shift always 0), the U-part with its
/// amalgamating images, and the slice-0 generators whose values along a
/// bi-infinite path enumerate the images of all group generators.
struct BasePresentation {
    std::vector<std::string> gens;
    std::vector<Word> relators;
    std::vector<int> u_gens;       // indices into gens
    std::vector<Word> phi;         // per u_gen, word over gens
    std::vector<int> slice0;       // contribution generators
};

/// Parses the line-oriented DSL ('#' comments):
///   zgroup | hnn
///   gens <name> ...
///   rel <word>            (zgroup; letters are name[int] with optional ^int)
///   base-rel <word>       (hnn; letters are bare names with optional ^int)
///   U <name> ...
///   phi <name> -> <word>
Presentation parse_presentation(const std::string& text);

/// Inverse of parse_presentation on normalized presentations.
std::string pretty_print(const Presentation& p);

/// Window width k for shift-periodic input, 0 for HNN data.
int window_width(const Presentation& p);

/// Smallest n such that hnn_window_base(p, n) has purely index-shift phi:
/// k + 1 for shift-periodic input (1 when k = 0), 1 for HNN data.
int default_window(const Presentation& p);

/// The base B^(n) whose Hom-set into Σ is the edge set of the n-block graph.
/// Shift-periodic input requires n >= window (n >= 1 when the window is 0);
/// HNN input with n > 1 amalgamates n shifted copies of the base.
BasePresentation hnn_window_base(const Presentation& p, int n);

} // namespace repshift
