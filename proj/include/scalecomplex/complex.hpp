#ifndef SCALECOMPLEX_COMPLEX_HPP
#define SCALECOMPLEX_COMPLEX_HPP

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "scalecomplex/pitchspace.hpp"

namespace scx {

/// Face counts by cardinality: counts[i] is the number of faces with i
/// elements, i.e. f_{i-1}. counts[0] == 1 accounts for the empty face.
struct FVector {
    std::vector<std::uint64_t> counts;

    /// f_d for d >= -1; zero past the end.
    std::uint64_t at_dim(int d) const;
    std::uint64_t total() const;
    bool operator==(const FVector&) const = default;
};

/// A finite abstract simplicial complex on the ground set {0, ..., n-1},
/// storing every face explicitly (the empty face included).
///
/// Immutable after construction. Faces of each dimension are kept sorted by
/// ascending bit-mask value; that order indexes the rows and columns of the
/// boundary matrices.
class SimplicialComplex {
public:
    /// The complex {∅} on an empty ground set.
    SimplicialComplex();

    /// Builds from an explicit face family. Throws DomainError when a face
    /// leaves the ground set or the family is not closed under subsets.
    SimplicialComplex(int ground_set_size, std::unordered_set<Scale> faces);

    int ground_set_size() const { return ground_set_size_; }
    std::size_t face_count() const { return faces_.size(); }
    bool contains(Scale s) const { return faces_.contains(s); }
    const std::unordered_set<Scale>& faces() const { return faces_; }

    /// Largest face dimension; -1 for {∅}.
    int max_dimension() const { return static_cast<int>(by_size_.size()) - 2; }

    /// Faces with d+1 elements in ascending mask order; empty when out of range.
    const std::vector<Scale>& faces_of_dim(int d) const;

    /// Maximal faces, ascending mask order.
    const std::vector<Scale>& facets() const { return facets_; }

    /// Vertices (0-faces) as pitch indices.
    std::vector<int> vertices() const;

    /// Position of `face` within faces_of_dim(|face|-1); throws if absent.
    std::size_t index_of(Scale face) const;

    bool is_facet(Scale s) const;

private:
    int ground_set_size_ = 0;
    std::unordered_set<Scale> faces_;
    std::vector<std::vector<Scale>> by_size_;
    std::vector<Scale> facets_;
};

/// Upper bound on n_pitches for exhaustive construction.
inline constexpr int kDefaultMaxPitches = 24;

/// All non-chromatic subsets of the universe.
SimplicialComplex build_non_chromatic_complex(const PitchUniverse& u, int max_pitches = kDefaultMaxPitches);

/// Union of power sets of the given facets; nested facets are dropped.
SimplicialComplex build_from_facets(int ground_set_size, const std::vector<Scale>& facets);

FVector f_vector(const SimplicialComplex& k);
const std::vector<Scale>& facets(const SimplicialComplex& k);
bool is_pure(const SimplicialComplex& k);
const std::vector<Scale>& faces_of_dim(const SimplicialComplex& k, int d);

/// Every subset of a face is a face.
bool is_downward_closed(int ground_set_size, const std::unordered_set<Scale>& faces);

} // namespace scx

#endif
