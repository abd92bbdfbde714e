#include <doctest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "scalecomplex/classify.hpp"

using namespace scx;

namespace {

const PitchUniverse kU;

const SimplicialComplex& k_nc()
{
    static const SimplicialComplex k = build_non_chromatic_complex(kU);
    return k;
}

std::set<std::string> canonical_keys(const std::vector<IntervalSequence>& seqs)
{
    std::set<std::string> out;
    for (const auto& s : seqs)
        out.insert(s.canonical().to_string());
    return out;
}

// Canonical sequences of all maximal scales in a universe, by exhaustive search.
std::set<std::string> brute_sequences(int n, int r)
{
    std::set<std::string> out;
    const PitchUniverse u(n, r);
    for (std::uint64_t b : oracle::facets(n, r))
        out.insert(interval_sequence(Scale(b), u).canonical().to_string());
    return out;
}

} // namespace

TEST_CASE("facet classification table")
{
    const auto classes = classify_facets(k_nc(), kU);
    REQUIRE(classes.size() == 7);
    std::vector<std::pair<int, int>> shape;
    int total = 0;
    for (const auto& c : classes) {
        shape.emplace_back(c.cardinality, c.scale_count);
        total += c.scale_count;
        CHECK(c.scale_count * c.symmetry_order == 12);
        CHECK(static_cast<int>(c.members.size()) == c.scale_count);
    }
    CHECK(total == 57);
    CHECK(shape == std::vector<std::pair<int, int>>{{8, 3}, {7, 12}, {7, 12}, {7, 12}, {7, 12}, {6, 4}, {6, 2}});

    std::map<std::string, std::pair<std::string, int>> by_display;
    for (const auto& c : classes)
        by_display[c.display_sequence.to_string()] = {c.name, c.scale_count};
    CHECK(by_display.at("2-1-2-1-2-1-2-1") == std::pair<std::string, int>{"diminished", 3});
    CHECK(by_display.at("2-2-1-2-2-2-1") == std::pair<std::string, int>{"major", 12});
    CHECK(by_display.at("2-1-2-2-2-2-1") == std::pair<std::string, int>{"melodic minor", 12});
    CHECK(by_display.at("2-1-2-2-1-3-1") == std::pair<std::string, int>{"harmonic minor", 12});
    CHECK(by_display.at("2-2-1-2-1-3-1") == std::pair<std::string, int>{"harmonic major", 12});
    CHECK(by_display.at("2-2-2-2-2-2") == std::pair<std::string, int>{"whole tone", 2});
    CHECK(by_display.at("1-3-1-3-1-3") == std::pair<std::string, int>{"augmented", 4});
}

TEST_CASE("other universes stay unnamed")
{
    const PitchUniverse u(10, 3);
    for (const auto& c : classify_facets(build_non_chromatic_complex(u), u))
        CHECK(c.name == "unnamed");
}

TEST_CASE("sequence enumeration matches the facet search")
{
    const auto seqs = enumerate_maximal_sequences(kU);
    CHECK(seqs.size() == 7);
    CHECK(canonical_keys(seqs) == brute_sequences(12, 3));
    std::set<std::string> from_classes;
    for (const auto& c : classify_facets(k_nc(), kU))
        from_classes.insert(c.canonical_sequence.to_string());
    CHECK(canonical_keys(seqs) == from_classes);

    CHECK(IntervalSequence::parse("2-2-2-1-2-2-1") == IntervalSequence::parse("2-2-1-2-2-2-1"));
    int four_ones = 0;
    for (const auto& s : seqs) {
        const auto& v = s.intervals();
        if (std::count(v.begin(), v.end(), 1) == 4) {
            ++four_ones;
            CHECK(s == IntervalSequence::parse("2-1-2-1-2-1-2-1"));
        }
    }
    CHECK(four_ones == 1);

    for (int n = 3; n <= 16; ++n)
        for (int r = 2; r <= std::min(n, 4); ++r) {
            CAPTURE(n);
            CAPTURE(r);
            CHECK(canonical_keys(enumerate_maximal_sequences(PitchUniverse(n, r))) == brute_sequences(n, r));
        }
}

TEST_CASE("observations")
{
    CHECK(check_observation_1(k_nc(), kU));
    CHECK(check_observation_2(k_nc(), kU));

    CHECK(midpoint_extension(Scale{0, 4}, kU) == Scale{0, 2, 4});
    CHECK(is_non_chromatic(Scale{0, 2, 4}, kU));
    const auto six = midpoint_extension(Scale{0, 6}, kU);
    REQUIRE(six.has_value());
    CHECK(six->contains(3));
    CHECK(is_non_chromatic(*six, kU));
    CHECK_FALSE(midpoint_extension(Scale{0, 2, 4, 5, 7, 9, 11}, kU).has_value());

    const auto ext = three_gap_extension(Scale{0, 3, 5}, kU);
    REQUIRE(ext.has_value());
    CHECK(*ext == Scale{0, 2, 3, 5});
    CHECK(is_non_chromatic(*ext, kU));

    CHECK(threes_flanked_by_ones(IntervalSequence::parse("2-1-2-2-1-3-1")));
    CHECK(threes_flanked_by_ones(IntervalSequence::parse("3-1-2-2-2-1-1")));
    CHECK_FALSE(threes_flanked_by_ones(IntervalSequence::parse("3-2-1-2-2-1-1")));
}

TEST_CASE("seven-element faces split 48 + 24")
{
    const auto split = cardinality_split(k_nc(), 7);
    CHECK(split.faces == 72);
    CHECK(split.facets == 48);
    CHECK(split.in_larger_facets == 24);
    CHECK(split.unique_extension);

    // Containment counted directly against the three eight-note faces.
    int inside = 0;
    for (Scale f : k_nc().faces_of_dim(6))
        for (Scale big : k_nc().faces_of_dim(7))
            inside += f.is_subset_of(big) ? 1 : 0;
    CHECK(inside == 24);
}
