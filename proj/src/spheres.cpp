#include "scalecomplex/spheres.hpp"

#include <algorithm>
#include <future>
#include <numeric>

#include "scalecomplex/collapse.hpp"
#include "scalecomplex/errors.hpp"

namespace scx {

namespace {

constexpr int kTwelve = 12;

void require_twelve(const PitchUniverse& u)
{
    if (u.n_pitches() != kTwelve)
        throw UnsupportedUniverseError("Messiaen scales are only defined for twelve pitch classes");
}

} // namespace

Scale AugmentedTriad::members() const { return Scale{root % 12, (root + 4) % 12, (root + 8) % 12}; }

std::vector<AugmentedTriad> augmented_triads(const PitchUniverse& u)
{
    require_twelve(u);
    return {{0}, {1}, {2}, {3}};
}

std::vector<MessiaenScale> messiaen_scales(const PitchUniverse& u)
{
    require_twelve(u);
    const Scale all((std::uint64_t{1} << kTwelve) - 1);
    std::vector<MessiaenScale> out;
    for (const auto& t : augmented_triads(u))
        out.push_back({t, Scale(all.bits() & ~t.members().bits())});
    return out;
}

std::vector<Scale> sphere_hexatonics(const MessiaenScale& m)
{
    // The three blocks of consecutive pitch classes between triad notes.
    std::vector<std::vector<int>> blocks;
    for (int t : m.omitted_triad.members().members())
        blocks.push_back({(t + 1) % kTwelve, (t + 2) % kTwelve, (t + 3) % kTwelve});

    auto pairs_of = [](const std::vector<int>& block) {
        return std::vector<Scale>{Scale{block[0], block[1]}, Scale{block[0], block[2]}, Scale{block[1], block[2]}};
    };
    std::vector<Scale> out;
    for (Scale a : pairs_of(blocks[0]))
        for (Scale b : pairs_of(blocks[1]))
            for (Scale c : pairs_of(blocks[2]))
                out.push_back(a | b | c);
    std::sort(out.begin(), out.end());
    return out;
}

SimplicialComplex sphere_subcomplex(const MessiaenScale& m) { return build_from_facets(kTwelve, sphere_hexatonics(m)); }

SphereCertificate verify_homology_sphere(const SimplicialComplex& k, int d)
{
    const auto& fs = k.facets();
    if (fs.empty() || !std::all_of(fs.begin(), fs.end(), [d](Scale f) { return f.size() == d + 1; }))
        throw DomainError("complex is not pure of dimension " + std::to_string(d));

    SphereCertificate cert;
    cert.dimension = d;
    cert.betti = reduced_betti(k);
    cert.betti_is_sphere = true;
    for (int i = -1; i <= k.max_dimension(); ++i)
        if (cert.betti.at_dim(i) != (i == d ? 1U : 0U))
            cert.betti_is_sphere = false;

    const auto& top = k.faces_of_dim(d);
    const auto& ridges = k.faces_of_dim(d - 1);
    std::vector<std::vector<std::size_t>> cofaces(ridges.size());
    for (std::size_t j = 0; j < top.size(); ++j)
        for (int v : top[j].members())
            cofaces[k.index_of(top[j].without(v))].push_back(j);

    cert.closed_pseudomanifold =
        std::all_of(cofaces.begin(), cofaces.end(), [](const auto& c) { return c.size() == 2; });

    std::vector<std::size_t> parent(top.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t components = top.size();
    for (const auto& c : cofaces)
        for (std::size_t i = 1; i < c.size(); ++i) {
            const auto a = find(c[0]);
            const auto b = find(c[i]);
            if (a != b) {
                parent[a] = b;
                --components;
            }
        }
    cert.dual_graph_connected = components == 1;
    return cert;
}

Chain fundamental_cycle(const SimplicialComplex& k, int d)
{
    if (d < 0 || d > k.max_dimension())
        throw InconsistencyError("no faces of dimension " + std::to_string(d));
    const auto bm = boundary_matrix(k, d);
    const auto kernel = kernel_basis(bm.to_sparse());
    if (kernel.size() != 1)
        throw InconsistencyError("cycle space of dimension " + std::to_string(d) + " has rank " +
                                 std::to_string(kernel.size()) + ", expected 1");
    const auto& v = kernel.front();
    auto first = std::find_if(v.begin(), v.end(), [](const Rational& q) { return q != 0; });
    const Rational scale = 1 / *first;
    Chain c(d);
    for (std::size_t j = 0; j < v.size(); ++j)
        c.add(bm.col_faces[j], v[j] * scale);
    return c;
}

SimplicialComplex common_subcomplex(const SimplicialComplex& a, const SimplicialComplex& b)
{
    std::unordered_set<Scale> faces;
    for (Scale f : a.faces())
        if (b.contains(f))
            faces.insert(f);
    return SimplicialComplex(std::max(a.ground_set_size(), b.ground_set_size()), std::move(faces));
}

Scale pairwise_intersection(const MessiaenScale& a, const MessiaenScale& b)
{
    if (a == b)
        throw DomainError("pairwise intersection needs two distinct Messiaen scales");
    return a.members & b.members;
}

Scale triple_intersection(const MessiaenScale& a, const MessiaenScale& b, const MessiaenScale& c)
{
    if (a == b || a == c || b == c)
        throw DomainError("triple intersection needs three distinct Messiaen scales");
    return a.members & b.members & c.members;
}

bool BasisReport::ok() const
{
    return std::all_of(ranks.begin(), ranks.end(), [](const SubsetRank& r) {
        return r.rank == (r.members.size() == 1 ? 1U : 3U);
    });
}

BasisReport basis_report(const SimplicialComplex& k_nc, const PitchUniverse& u)
{
    require_twelve(u);
    BasisReport report;
    for (const auto& m : messiaen_scales(u))
        report.cycles.push_back(fundamental_cycle(sphere_subcomplex(m), 5));

    std::vector<std::vector<int>> subsets = {{0}, {1}, {2}, {3}, {0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {0, 1, 2, 3}};
    std::vector<std::future<std::size_t>> jobs;
    for (const auto& s : subsets) {
        std::vector<Chain> chosen;
        for (int i : s)
            chosen.push_back(report.cycles[static_cast<std::size_t>(i)]);
        jobs.push_back(std::async(std::launch::async, [&k_nc, chosen = std::move(chosen)] {
            return homology_rank_of_cycles(chosen, k_nc, 5);
        }));
    }
    for (std::size_t i = 0; i < subsets.size(); ++i)
        report.ranks.push_back({subsets[i], jobs[i].get()});
    return report;
}

SphereReport sphere_report(const SimplicialComplex& k_nc, const PitchUniverse& u)
{
    require_twelve(u);
    SphereReport report;
    const auto scales = messiaen_scales(u);

    std::vector<std::future<MessiaenSphere>> jobs;
    for (const auto& m : scales)
        jobs.push_back(std::async(std::launch::async, [m] {
            MessiaenSphere s{m, sphere_hexatonics(m), {}, {}};
            const auto sub = sphere_subcomplex(m);
            s.certificate = verify_homology_sphere(sub, 5);
            s.cycle = fundamental_cycle(sub, 5);
            return s;
        }));
    for (auto& j : jobs)
        report.spheres.push_back(j.get());

    const int n = static_cast<int>(scales.size());
    std::vector<SimplicialComplex> subs;
    for (const auto& m : scales)
        subs.push_back(sphere_subcomplex(m));
    Scale all((std::uint64_t{1} << kTwelve) - 1);
    for (int i = 0; i < n; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        all = all & scales[ui].members;
        for (int j = i + 1; j < n; ++j) {
            const auto uj = static_cast<std::size_t>(j);
            const Scale s = pairwise_intersection(scales[ui], scales[uj]);
            const auto overlap = common_subcomplex(subs[ui], subs[uj]);
            const bool simplex = overlap.facets() == std::vector<Scale>{s};
            const bool point = collapse_fully(overlap).complex.face_count() == 2;
            report.pairs.push_back({i, j, s, k_nc.is_facet(s), simplex, point});
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int l = j + 1; l < n; ++l) {
                const Scale s = triple_intersection(scales[static_cast<std::size_t>(i)],
                                                    scales[static_cast<std::size_t>(j)],
                                                    scales[static_cast<std::size_t>(l)]);
                const auto simplex = build_from_facets(kTwelve, {s});
                bool filled = true;
                for (Scale f : simplex.faces())
                    filled = filled && k_nc.contains(f);
                const auto collapsed = collapse_fully(simplex);
                report.triples.push_back({{i, j, l}, s, filled, collapsed.complex.face_count() == 2});
            }
    report.quadruple = all;
    report.basis = basis_report(k_nc, u);
    return report;
}

} // namespace scx
