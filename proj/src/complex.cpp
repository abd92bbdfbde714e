#include "scalecomplex/complex.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "scalecomplex/errors.hpp"

namespace scx {

std::uint64_t FVector::at_dim(int d) const
{
    const auto i = static_cast<std::size_t>(d + 1);
    return d < -1 || i >= counts.size() ? 0 : counts[i];
}

std::uint64_t FVector::total() const { return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}); }

bool is_downward_closed(int ground_set_size, const std::unordered_set<Scale>& faces)
{
    if (!faces.contains(Scale{}))
        return false;
    const std::uint64_t mask = ground_set_size >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ground_set_size) - 1;
    for (Scale f : faces) {
        if ((f.bits() & ~mask) != 0)
            return false;
        // Closure under removing one element implies closure under all subsets.
        for (int v : f.members())
            if (!faces.contains(f.without(v)))
                return false;
    }
    return true;
}

SimplicialComplex::SimplicialComplex() : faces_{Scale{}}, by_size_{{Scale{}}}, facets_{Scale{}} {}

SimplicialComplex::SimplicialComplex(int ground_set_size, std::unordered_set<Scale> faces)
    : ground_set_size_(ground_set_size), faces_(std::move(faces))
{
    if (ground_set_size < 0 || ground_set_size > 64)
        throw DomainError("ground set size must lie in [0, 64]");
    if (!is_downward_closed(ground_set_size, faces_))
        throw DomainError("face family is not a simplicial complex on " + std::to_string(ground_set_size) +
                          " vertices");

    int top = 0;
    for (Scale f : faces_)
        top = std::max(top, f.size());
    by_size_.assign(static_cast<std::size_t>(top) + 1, {});
    for (Scale f : faces_)
        by_size_[static_cast<std::size_t>(f.size())].push_back(f);
    for (auto& layer : by_size_)
        std::sort(layer.begin(), layer.end());

    for (Scale f : faces_)
        if (is_facet(f))
            facets_.push_back(f);
    std::sort(facets_.begin(), facets_.end());
}

const std::vector<Scale>& SimplicialComplex::faces_of_dim(int d) const
{
    static const std::vector<Scale> kEmpty;
    const auto i = static_cast<std::size_t>(d + 1);
    if (d < -1 || i >= by_size_.size())
        return kEmpty;
    return by_size_[i];
}

std::vector<int> SimplicialComplex::vertices() const
{
    std::vector<int> out;
    for (Scale v : faces_of_dim(0))
        out.push_back(v.min_member());
    return out;
}

std::size_t SimplicialComplex::index_of(Scale face) const
{
    const auto& layer = faces_of_dim(face.size() - 1);
    auto it = std::lower_bound(layer.begin(), layer.end(), face);
    if (it == layer.end() || *it != face)
        throw DomainError("face " + format_scale_numeric(face) + " is not in the complex");
    return static_cast<std::size_t>(it - layer.begin());
}

bool SimplicialComplex::is_facet(Scale s) const
{
    if (!faces_.contains(s))
        return false;
    for (int p = 0; p < ground_set_size_; ++p)
        if (!s.contains(p) && faces_.contains(s.with(p)))
            return false;
    return true;
}

SimplicialComplex build_non_chromatic_complex(const PitchUniverse& u, int max_pitches)
{
    if (u.n_pitches() > max_pitches)
        throw CapacityError("refusing exhaustive enumeration of 2^" + std::to_string(u.n_pitches()) +
                            " subsets (limit is " + std::to_string(max_pitches) + " pitches)");
    const std::uint64_t limit = std::uint64_t{1} << u.n_pitches();
    std::unordered_set<Scale> faces;
    for (std::uint64_t bits = 0; bits < limit; ++bits) {
        Scale s(bits);
        if (is_non_chromatic(s, u))
            faces.insert(s);
    }
    return SimplicialComplex(u.n_pitches(), std::move(faces));
}

SimplicialComplex build_from_facets(int ground_set_size, const std::vector<Scale>& facets)
{
    if (ground_set_size < 0 || ground_set_size > 64)
        throw DomainError("ground set size must lie in [0, 64]");
    const std::uint64_t mask = ground_set_size >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ground_set_size) - 1;
    std::unordered_set<Scale> faces{Scale{}};
    for (Scale f : facets) {
        if ((f.bits() & ~mask) != 0)
            throw DomainError("facet " + format_scale_numeric(f) + " leaves the ground set of size " +
                              std::to_string(ground_set_size));
        if (f.size() > 30)
            throw CapacityError("facet with " + std::to_string(f.size()) + " vertices is too large to expand");
        // Enumerate submasks of f.
        const std::uint64_t b = f.bits();
        for (std::uint64_t sub = b;; sub = (sub - 1) & b) {
            faces.insert(Scale(sub));
            if (sub == 0)
                break;
        }
    }
    return SimplicialComplex(ground_set_size, std::move(faces));
}

FVector f_vector(const SimplicialComplex& k)
{
    FVector fv;
    for (int d = -1; d <= k.max_dimension(); ++d)
        fv.counts.push_back(k.faces_of_dim(d).size());
    return fv;
}

const std::vector<Scale>& facets(const SimplicialComplex& k) { return k.facets(); }

bool is_pure(const SimplicialComplex& k)
{
    const auto& fs = k.facets();
    return std::all_of(fs.begin(), fs.end(), [&](Scale f) { return f.size() == fs.front().size(); });
}

const std::vector<Scale>& faces_of_dim(const SimplicialComplex& k, int d) { return k.faces_of_dim(d); }

} // namespace scx
