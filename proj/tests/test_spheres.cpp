#include <doctest.h>

#include <set>

#include "scalecomplex/collapse.hpp"
#include "scalecomplex/errors.hpp"
#include "scalecomplex/spheres.hpp"
#include "scalecomplex/verification.hpp"

using namespace scx;

namespace {

const PitchUniverse kU;

const SimplicialComplex& k_nc()
{
    static const SimplicialComplex k = build_non_chromatic_complex(kU);
    return k;
}

MessiaenScale omitting(int root) { return messiaen_scales(kU).at(static_cast<std::size_t>(root)); }

} // namespace

TEST_CASE("augmented triads and Messiaen scales")
{
    const auto ts = augmented_triads(kU);
    REQUIRE(ts.size() == 4);
    Scale all;
    for (const auto& t : ts) {
        CHECK((all & t.members()).empty());
        all = all | t.members();
    }
    CHECK(all == Scale(0xFFF));

    const auto ms = messiaen_scales(kU);
    REQUIRE(ms.size() == 4);
    CHECK(ms[0].omitted_triad.members() == Scale{0, 4, 8});
    CHECK(ms[0].members == Scale{1, 2, 3, 5, 6, 7, 9, 10, 11});
    CHECK_THROWS_AS(messiaen_scales(PitchUniverse(13, 3)), UnsupportedUniverseError);
    CHECK_THROWS_AS(augmented_triads(PitchUniverse(24, 3)), UnsupportedUniverseError);
}

TEST_CASE("hexatonics of each sphere")
{
    for (const auto& m : messiaen_scales(kU)) {
        const auto hex = sphere_hexatonics(m);
        CHECK(hex.size() == 27);
        // The constructive route agrees with filtering all 84 six-subsets.
        std::vector<Scale> brute;
        for (std::uint64_t b = 0; b < 4096; ++b) {
            const Scale s(b);
            if (s.size() == 6 && s.is_subset_of(m.members) && is_non_chromatic(s, kU))
                brute.push_back(s);
        }
        CHECK(hex == brute);
        for (int size = 7; size <= 9; ++size)
            CHECK(non_chromatic_subsets(m.members, size, kU).empty());
    }
    const auto hex0 = sphere_hexatonics(omitting(0));
    CHECK(std::find(hex0.begin(), hex0.end(), Scale{1, 2, 5, 6, 9, 10}) != hex0.end());
    CHECK(interval_sequence(Scale{1, 2, 5, 6, 9, 10}, kU).to_string() == "1-3-1-3-1-3");
}

TEST_CASE("sphere subcomplexes")
{
    for (const auto& m : messiaen_scales(kU)) {
        const auto sub = sphere_subcomplex(m);
        const auto f = f_vector(sub);
        CHECK(f.at_dim(0) == 9);
        CHECK(f.at_dim(5) == 27);
        CHECK(f.at_dim(6) == 0);
        for (Scale face : sub.faces())
            CHECK(k_nc().contains(face));

        const auto cert = verify_homology_sphere(sub, 5);
        CHECK(cert.betti_is_sphere);
        CHECK(cert.closed_pseudomanifold);
        CHECK(cert.dual_graph_connected);
        CHECK(cert.pass());

        const auto z = fundamental_cycle(sub, 5);
        CHECK(z.terms().size() == 27);
        CHECK(is_cycle(z, sub));
        CHECK(is_cycle(z, k_nc()));
        for (const auto& [face, q] : z.terms())
            CHECK((q == 1 || q == -1));
        CHECK(z.coefficient(sub.faces_of_dim(5).front()) == 1);
        CHECK(fundamental_cycle(sub, 5) == z);
    }
}

TEST_CASE("sphere certificates on small complexes")
{
    CHECK(verify_homology_sphere(fixtures::hollow_triangle(), 1).pass());
    const auto disk = verify_homology_sphere(fixtures::filled_triangle(), 2);
    CHECK_FALSE(disk.pass());
    CHECK_FALSE(disk.closed_pseudomanifold);
    CHECK_THROWS_AS(verify_homology_sphere(fixtures::two_components(), 1), DomainError);

    const auto z = fundamental_cycle(fixtures::hollow_triangle(), 1);
    Chain expected(1);
    expected.add(Scale{0, 1}, 1).add(Scale{1, 2}, 1).add(Scale{0, 2}, -1);
    CHECK(z == expected);
    CHECK_THROWS_AS(fundamental_cycle(fixtures::tetrahedron_edges(), 1), InconsistencyError);
}

TEST_CASE("intersections")
{
    const auto ms = messiaen_scales(kU);
    CHECK(pairwise_intersection(ms[0], ms[2]) == Scale{1, 3, 5, 7, 9, 11});
    CHECK(pairwise_intersection(ms[0], ms[1]) == Scale{2, 3, 6, 7, 10, 11});
    CHECK(triple_intersection(ms[0], ms[1], ms[2]) == Scale{3, 7, 11});
    CHECK_THROWS_AS(pairwise_intersection(ms[1], ms[1]), DomainError);
    CHECK_THROWS_AS(triple_intersection(ms[0], ms[1], ms[0]), DomainError);

    std::set<Scale> pairs;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            pairs.insert(pairwise_intersection(ms[i], ms[j]));
    std::set<Scale> hexatonic_facets;
    for (Scale f : k_nc().facets())
        if (f.size() == 6)
            hexatonic_facets.insert(f);
    CHECK(pairs == hexatonic_facets);

    std::set<Scale> triples;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            for (std::size_t l = j + 1; l < 4; ++l)
                triples.insert(triple_intersection(ms[i], ms[j], ms[l]));
    std::set<Scale> triads;
    for (const auto& t : augmented_triads(kU))
        triads.insert(t.members());
    CHECK(triples == triads);
    for (Scale t : triads)
        CHECK(collapse_fully(build_from_facets(12, {t})).complex.face_count() == 2);
}

TEST_CASE("full sphere report")
{
    const auto r = sphere_report(k_nc(), kU);
    REQUIRE(r.spheres.size() == 4);
    for (const auto& s : r.spheres)
        CHECK(s.certificate.pass());
    REQUIRE(r.pairs.size() == 6);
    for (const auto& p : r.pairs) {
        CHECK(p.is_facet);
        CHECK(p.overlap_is_simplex);
        CHECK(p.overlap_collapses_to_point);
    }
    REQUIRE(r.triples.size() == 4);
    for (const auto& t : r.triples) {
        CHECK(t.filled_in_complex);
        CHECK(t.collapses_to_point);
    }
    CHECK(r.quadruple.empty());
    CHECK(r.basis.ok());
    REQUIRE(r.basis.ranks.size() == 9);
    CHECK(r.basis.ranks.back().rank == 3);

    // The union of the spheres has no faces above dimension five, so all four
    // sphere classes stay independent there. Only K_NC relates them.
    std::vector<Scale> gens;
    for (const auto& s : r.spheres)
        gens.insert(gens.end(), s.hexatonics.begin(), s.hexatonics.end());
    const auto union_k = build_from_facets(12, gens);
    CHECK(f_vector(union_k).at_dim(5) == 102);
    CHECK(reduced_betti(union_k).at_dim(5) == 4);
    std::vector<Chain> cycles;
    for (const auto& s : r.spheres)
        cycles.push_back(s.cycle);
    CHECK(homology_rank_of_cycles(cycles, union_k, 5) == 4);
    CHECK(homology_rank_of_cycles(cycles, k_nc(), 5) == 3);
}
