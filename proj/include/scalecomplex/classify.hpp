#ifndef SCALECOMPLEX_CLASSIFY_HPP
#define SCALECOMPLEX_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "scalecomplex/complex.hpp"

namespace scx {

/// Facets sharing one canonical interval sequence.
struct FacetClass {
    IntervalSequence canonical_sequence;
    /// Conventional rotation for named classes, the canonical form otherwise.
    IntervalSequence display_sequence;
    int cardinality = 0;
    int scale_count = 0;
    int symmetry_order = 0;
    std::string name = "unnamed";
    std::vector<Scale> members;
};

/// Groups facets by canonical interval sequence; sorted by descending
/// cardinality, then canonical sequence. Names are attached only for the
/// twelve-tone universe with run limit 3.
std::vector<FacetClass> classify_facets(const SimplicialComplex& k, const PitchUniverse& u);

/// Conventional name and rotation for a canonical sequence of the default
/// universe, if it has one.
struct NamedSequence {
    std::string name;
    IntervalSequence display;
};
std::optional<NamedSequence> conventional_name(const IntervalSequence& seq, const PitchUniverse& u);

/// If `s` has a gap of four or more, `s` plus the pitch in the middle of the
/// first such gap.
std::optional<Scale> midpoint_extension(Scale s, const PitchUniverse& u);

/// If some gap of three in `s` has a neighbouring gap other than one, `s`
/// plus the pitch of that three-gap adjacent to the neighbour.
std::optional<Scale> three_gap_extension(Scale s, const PitchUniverse& u);

/// Every entry 3 has cyclic neighbours equal to 1.
bool threes_flanked_by_ones(const IntervalSequence& seq);

/// No facet has a gap >= 4, and every face of `k` with such a gap stays
/// non-chromatic after inserting the midpoint.
bool check_observation_1(const SimplicialComplex& k, const PitchUniverse& u);

/// Every 3 in a facet's sequence sits inside 1-3-1, and every face with a
/// three-gap next to a longer gap extends non-chromatically inside it.
bool check_observation_2(const SimplicialComplex& k, const PitchUniverse& u);

/// Canonical interval sequences of maximal non-chromatic scales, found by
/// searching cyclic compositions of n_pitches directly (no complex built).
std::vector<IntervalSequence> enumerate_maximal_sequences(const PitchUniverse& u);

/// Split of the faces with `cardinality` elements into facets and faces
/// lying in a larger facet.
struct CardinalitySplit {
    std::size_t faces = 0;
    std::size_t facets = 0;
    std::size_t in_larger_facets = 0;
    /// Every non-facet face lies in exactly one larger facet.
    bool unique_extension = true;
};
CardinalitySplit cardinality_split(const SimplicialComplex& k, int cardinality);

} // namespace scx

#endif
