#include <doctest.h>

#include "oracles.hpp"
#include "scalecomplex/complex.hpp"
#include "scalecomplex/errors.hpp"
#include "scalecomplex/verification.hpp"

using namespace scx;

namespace {

const PitchUniverse kU;

const SimplicialComplex& k_nc()
{
    static const SimplicialComplex k = build_non_chromatic_complex(kU);
    return k;
}

} // namespace

TEST_CASE("f-vector matches the brute-force count")
{
    const auto f = f_vector(k_nc());
    CHECK(f.counts == std::vector<std::uint64_t>{1, 12, 66, 208, 399, 456, 282, 72, 3});
    CHECK(f.counts == oracle::f_vector(12, 3));
    CHECK(f.total() == 1499);
    CHECK(k_nc().face_count() == 1499);
    CHECK(f.at_dim(-1) == 1);
    CHECK(f.at_dim(7) == 3);
    CHECK(f.at_dim(8) == 0);
}

TEST_CASE("f-vectors of other universes match the brute-force count")
{
    for (int n = 3; n <= 14; ++n)
        for (int r = 2; r <= std::min(n, 5); ++r) {
            CAPTURE(n);
            CAPTURE(r);
            CHECK(f_vector(build_non_chromatic_complex(PitchUniverse(n, r))).counts == oracle::f_vector(n, r));
        }
}

TEST_CASE("facets")
{
    const auto& fs = facets(k_nc());
    CHECK(fs.size() == 57);
    std::vector<std::uint64_t> bits;
    for (Scale f : fs)
        bits.push_back(f.bits());
    CHECK(bits == oracle::facets(12, 3));
    CHECK(k_nc().contains(Scale{0, 2, 4, 5, 7, 9, 11}));
    CHECK(k_nc().is_facet(Scale{0, 2, 4, 5, 7, 9, 11}));
    CHECK_FALSE(is_pure(k_nc()));

    // No facet extends, and nothing reaches nine elements.
    for (Scale f : fs)
        for (int p = 0; p < 12; ++p)
            if (!f.contains(p))
                CHECK_FALSE(k_nc().contains(f.with(p)));
    CHECK(faces_of_dim(k_nc(), 8).empty());
}

TEST_CASE("faces by dimension")
{
    CHECK(faces_of_dim(k_nc(), 7).size() == 3);
    CHECK(faces_of_dim(k_nc(), 4).size() == 456);
    CHECK(faces_of_dim(k_nc(), -1) == std::vector<Scale>{Scale{}});
    CHECK(faces_of_dim(k_nc(), -2).empty());
    CHECK(faces_of_dim(k_nc(), 40).empty());
    const auto& verts = faces_of_dim(k_nc(), 0);
    CHECK(std::is_sorted(verts.begin(), verts.end()));
    CHECK(k_nc().vertices().size() == 12);
    CHECK(k_nc().index_of(Scale{}) == 0);
    CHECK(k_nc().index_of(Scale{11}) == 11);
    CHECK_THROWS_AS(k_nc().index_of(Scale{0, 1, 2}), DomainError);
}

TEST_CASE("small universes")
{
    const auto k3 = build_non_chromatic_complex(PitchUniverse(3, 3));
    CHECK(k3.face_count() == 7);
    CHECK_FALSE(k3.contains(Scale{0, 1, 2}));
    CHECK(f_vector(k3).counts == std::vector<std::uint64_t>{1, 3, 3});
    CHECK_THROWS_AS(build_non_chromatic_complex(PitchUniverse(25, 3)), CapacityError);
    CHECK_THROWS_AS(build_non_chromatic_complex(PitchUniverse(12, 3), 10), CapacityError);
}

TEST_CASE("complexes from facets")
{
    const auto k2 = fixtures::two_components();
    CHECK(k2.face_count() == 5);
    CHECK(f_vector(k2).counts == std::vector<std::uint64_t>{1, 3, 1});
    CHECK(facets(k2) == std::vector<Scale>{Scale{0, 1}, Scale{2}});
    CHECK_FALSE(is_pure(k2));

    const auto hollow = fixtures::hollow_triangle();
    CHECK(hollow.face_count() == 7);
    CHECK(is_pure(hollow));

    const auto filled = build_from_facets(3, {Scale{0, 1, 2}});
    CHECK(facets(filled) == std::vector<Scale>{Scale{0, 1, 2}});

    const auto trivial = build_from_facets(0, {Scale{}});
    CHECK(trivial.face_count() == 1);
    CHECK(f_vector(trivial).counts == std::vector<std::uint64_t>{1});
    CHECK(trivial.max_dimension() == -1);

    // Nested generators collapse to the outer one.
    CHECK(facets(build_from_facets(4, {Scale{0, 1}, Scale{0, 1, 2}})) == std::vector<Scale>{Scale{0, 1, 2}});
    CHECK_THROWS_AS(build_from_facets(3, {Scale{0, 3}}), DomainError);
}

TEST_CASE("downward closure")
{
    CHECK(is_downward_closed(12, k_nc().faces()));
    std::unordered_set<Scale> bad{Scale{}, Scale{0}, Scale{0, 1}};
    CHECK_FALSE(is_downward_closed(2, bad));
    CHECK_THROWS_AS(SimplicialComplex(2, bad), DomainError);
    CHECK_THROWS_AS(SimplicialComplex(1, {Scale{}, Scale{3}}), DomainError);
}
