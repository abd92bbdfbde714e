#include "scalecomplex/collapse.hpp"

#include <algorithm>

#include "scalecomplex/errors.hpp"
#include "scalecomplex/homology.hpp"

namespace scx {

namespace {

int facets_containing(const SimplicialComplex& k, Scale m)
{
    int count = 0;
    for (Scale g : k.facets())
        if (m.is_subset_of(g))
            ++count;
    return count;
}

CollapseResult run_collapses(const SimplicialComplex& k, int min_facet_size, CollapseOptions options)
{
    CollapseResult result{k, {}, true};
    const BettiVector initial = options.verify_each_step ? reduced_betti(k) : BettiVector{};
    for (;;) {
        const auto pairs = find_free_pairs(result.complex);
        auto it = std::find_if(pairs.begin(), pairs.end(),
                               [&](const FreePair& p) { return p.facet.size() >= min_facet_size; });
        if (it == pairs.end())
            break;
        result.complex = collapse_pair(result.complex, *it);
        result.log.push_back(*it);
        if (options.verify_each_step && reduced_betti(result.complex) != initial)
            throw InconsistencyError("collapse of " + format_scale_numeric(it->facet) + " changed homology");
    }
    result.complete = result.complex.max_dimension() + 1 < min_facet_size;
    return result;
}

} // namespace

bool is_free_pair(const SimplicialComplex& k, const FreePair& p)
{
    if (p.free_face.empty() || p.free_face.size() + 1 != p.facet.size())
        return false;
    if (!p.free_face.is_subset_of(p.facet) || !k.is_facet(p.facet))
        return false;
    return facets_containing(k, p.free_face) == 1;
}

std::vector<FreePair> find_free_pairs(const SimplicialComplex& k)
{
    std::vector<FreePair> out;
    for (Scale f : k.facets()) {
        if (f.size() < 2)
            continue;
        for (Scale m : free_faces_of(k, f))
            out.push_back({f, m});
    }
    std::stable_sort(out.begin(), out.end(), [](const FreePair& a, const FreePair& b) {
        if (a.facet.size() != b.facet.size())
            return a.facet.size() > b.facet.size();
        if (a.facet != b.facet)
            return a.facet < b.facet;
        return a.free_face < b.free_face;
    });
    return out;
}

SimplicialComplex collapse_pair(const SimplicialComplex& k, const FreePair& p)
{
    if (!is_free_pair(k, p))
        throw StateError("(" + format_scale_numeric(p.facet) + ", " + format_scale_numeric(p.free_face) +
                         ") is not a free pair of the complex");
    auto faces = k.faces();
    faces.erase(p.facet);
    faces.erase(p.free_face);
    return SimplicialComplex(k.ground_set_size(), std::move(faces));
}

CollapseResult collapse_above_dim(const SimplicialComplex& k, int d, CollapseOptions options)
{
    if (d < 0)
        throw DomainError("target dimension must be non-negative");
    return run_collapses(k, d + 2, options);
}

CollapseResult collapse_fully(const SimplicialComplex& k, CollapseOptions options)
{
    return run_collapses(k, 2, options);
}

std::vector<Scale> free_faces_of(const SimplicialComplex& k, Scale f)
{
    if (!k.is_facet(f))
        throw DomainError(format_scale_numeric(f) + " is not a facet of the complex");
    std::vector<Scale> out;
    if (f.size() < 2)
        return out;
    for (int v : f.members()) {
        const Scale m = f.without(v);
        if (facets_containing(k, m) == 1)
            out.push_back(m);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_collapsible_facet(const SimplicialComplex& k, Scale f) { return !free_faces_of(k, f).empty(); }

} // namespace scx
