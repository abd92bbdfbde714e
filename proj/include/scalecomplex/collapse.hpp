#ifndef SCALECOMPLEX_COLLAPSE_HPP
#define SCALECOMPLEX_COLLAPSE_HPP

#include <vector>

#include "scalecomplex/complex.hpp"

namespace scx {

/// A facet together with a codimension-1 face contained in no other facet.
struct FreePair {
    Scale facet;
    Scale free_face;

    bool operator==(const FreePair&) const = default;
};

/// Whether `p` is currently a free pair of `k`. The empty face is never free.
bool is_free_pair(const SimplicialComplex& k, const FreePair& p);

/// All free pairs, ordered by descending facet size, then facet, then free face.
std::vector<FreePair> find_free_pairs(const SimplicialComplex& k);

/// Removes the facet and its free face. Throws StateError if `p` is not free.
SimplicialComplex collapse_pair(const SimplicialComplex& k, const FreePair& p);

struct CollapseResult {
    SimplicialComplex complex;
    std::vector<FreePair> log;
    /// False when faces above the target dimension survive with no free pair left.
    bool complete = true;
};

struct CollapseOptions {
    /// Recompute reduced Betti numbers after every step and throw
    /// InconsistencyError if they change.
    bool verify_each_step = false;
};

/// Greedily collapses free pairs whose facet has more than d+1 elements,
/// always taking the first pair in find_free_pairs order.
CollapseResult collapse_above_dim(const SimplicialComplex& k, int d, CollapseOptions options = {});

/// Keeps collapsing (any dimension) until no free pair remains.
CollapseResult collapse_fully(const SimplicialComplex& k, CollapseOptions options = {});

/// True iff some codimension-1 face of facet `f` is free. Throws DomainError
/// if `f` is not a facet of `k`.
bool is_collapsible_facet(const SimplicialComplex& k, Scale f);

/// Free faces of facet `f`, ascending.
std::vector<Scale> free_faces_of(const SimplicialComplex& k, Scale f);

} // namespace scx

#endif
