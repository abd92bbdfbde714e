#ifndef SCALECOMPLEX_SPHERES_HPP
#define SCALECOMPLEX_SPHERES_HPP

#include <vector>

#include "scalecomplex/complex.hpp"
#include "scalecomplex/homology.hpp"

namespace scx {

/// {root, root+4, root+8} in the twelve-tone universe.
struct AugmentedTriad {
    int root = 0;

    Scale members() const;
    bool operator==(const AugmentedTriad&) const = default;
};

/// The nine pitch classes left after deleting an augmented triad.
struct MessiaenScale {
    AugmentedTriad omitted_triad;
    Scale members;

    bool operator==(const MessiaenScale&) const = default;
};

/// The four augmented triads, roots 0..3.
std::vector<AugmentedTriad> augmented_triads(const PitchUniverse& u);

/// The four Messiaen scales ordered by omitted triad root. Throws
/// UnsupportedUniverseError unless n_pitches == 12.
std::vector<MessiaenScale> messiaen_scales(const PitchUniverse& u);

/// The 27 hexatonic scales obtained by picking two of the three pitch
/// classes strictly between each pair of consecutive omitted triad notes.
std::vector<Scale> sphere_hexatonics(const MessiaenScale& m);

/// Complex generated by sphere_hexatonics(m).
SimplicialComplex sphere_subcomplex(const MessiaenScale& m);

/// Certificate that a pure d-complex looks like a d-sphere to homology.
struct SphereCertificate {
    int dimension = 0;
    BettiVector betti;
    bool betti_is_sphere = false;        ///< reduced Betti numbers of S^d
    bool closed_pseudomanifold = false;  ///< every (d-1)-face in exactly two d-faces
    bool dual_graph_connected = false;   ///< d-faces connected through shared (d-1)-faces

    bool pass() const { return betti_is_sphere && closed_pseudomanifold && dual_graph_connected; }
};

/// Throws DomainError unless every facet of `k` has d+1 elements.
SphereCertificate verify_homology_sphere(const SimplicialComplex& k, int d);

/// The generator of the one-dimensional kernel of ∂_d on `k`, scaled so that
/// the first d-face has coefficient +1. Throws InconsistencyError if the
/// kernel is not one-dimensional.
Chain fundamental_cycle(const SimplicialComplex& k, int d);

/// Faces common to both complexes.
SimplicialComplex common_subcomplex(const SimplicialComplex& a, const SimplicialComplex& b);

/// Intersection of two distinct Messiaen scales (six pitch classes).
Scale pairwise_intersection(const MessiaenScale& a, const MessiaenScale& b);

/// Intersection of three distinct Messiaen scales (an augmented triad).
Scale triple_intersection(const MessiaenScale& a, const MessiaenScale& b, const MessiaenScale& c);

struct SubsetRank {
    std::vector<int> members;  ///< indices into the Messiaen scale list
    std::size_t rank = 0;
};

struct BasisReport {
    std::vector<Chain> cycles;
    std::vector<SubsetRank> ranks;  ///< singletons, triples, then all four

    /// Every triple and the full set have rank 3, every singleton rank 1.
    bool ok() const;
};

/// Homology ranks of the Messiaen fundamental 5-cycles inside `k_nc`.
BasisReport basis_report(const SimplicialComplex& k_nc, const PitchUniverse& u = {});

struct MessiaenSphere {
    MessiaenScale scale;
    std::vector<Scale> hexatonics;
    SphereCertificate certificate;
    Chain cycle;
};

struct PairIntersection {
    int first = 0;
    int second = 0;
    Scale members;
    bool is_facet = false;
    /// The two sphere subcomplexes share exactly the simplex on `members`.
    bool overlap_is_simplex = false;
    bool overlap_collapses_to_point = false;
};

struct TripleIntersection {
    std::vector<int> indices;
    Scale members;
    bool filled_in_complex = false;
    bool collapses_to_point = false;
};

struct SphereReport {
    std::vector<MessiaenSphere> spheres;
    std::vector<PairIntersection> pairs;
    std::vector<TripleIntersection> triples;
    Scale quadruple;
    BasisReport basis;
};

/// Full Messiaen analysis of the default non-chromatic complex.
SphereReport sphere_report(const SimplicialComplex& k_nc, const PitchUniverse& u = {});

} // namespace scx

#endif
