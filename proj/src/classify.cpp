#include "scalecomplex/classify.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace scx {

namespace {

struct NamedRow {
    const char* display;
    const char* name;
};

// Conventional names of the maximal non-chromatic scales in twelve-tone
// equal temperament, in the rotation musicians usually write them.
constexpr std::array<NamedRow, 7> kNamedRows = {{
    {"2-1-2-1-2-1-2-1", "diminished"},
    {"2-2-1-2-2-2-1", "major"},
    {"2-1-2-2-2-2-1", "melodic minor"},
    {"2-1-2-2-1-3-1", "harmonic minor"},
    {"2-2-1-2-1-3-1", "harmonic major"},
    {"2-2-2-2-2-2", "whole tone"},
    {"1-3-1-3-1-3", "augmented"},
}};

// (start pitch, gap) for each member of a non-empty scale.
std::vector<std::pair<int, int>> gaps_of(Scale s, const PitchUniverse& u)
{
    const auto m = s.members();
    const auto seq = interval_sequence(s, u).intervals();
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < m.size(); ++i)
        out.emplace_back(m[i], seq[i]);
    return out;
}

bool is_maximal(Scale s, const PitchUniverse& u)
{
    for (int p = 0; p < u.n_pitches(); ++p)
        if (!s.contains(p) && is_non_chromatic(s.with(p), u))
            return false;
    return true;
}

bool default_rules_hold(const std::vector<int>& parts)
{
    const std::size_t n = parts.size();
    for (std::size_t i = 0; i < n; ++i) {
        const int next = parts[(i + 1) % n];
        const int prev = parts[(i + n - 1) % n];
        if (parts[i] == 1 && next == 1)
            return false;
        if (parts[i] == 3 && (next != 1 || prev != 1))
            return false;
    }
    return true;
}

} // namespace

std::optional<NamedSequence> conventional_name(const IntervalSequence& seq, const PitchUniverse& u)
{
    if (!u.is_default())
        return std::nullopt;
    for (const auto& row : kNamedRows) {
        auto display = IntervalSequence::parse(row.display);
        if (display == seq)
            return NamedSequence{row.name, display};
    }
    return std::nullopt;
}

std::vector<FacetClass> classify_facets(const SimplicialComplex& k, const PitchUniverse& u)
{
    std::map<std::vector<int>, FacetClass> groups;
    for (Scale f : k.facets()) {
        if (f.empty())
            continue;
        const auto canon = interval_sequence(f, u).canonical();
        auto& cls = groups[canon.intervals()];
        if (cls.members.empty()) {
            cls.canonical_sequence = canon;
            cls.display_sequence = canon;
            cls.cardinality = f.size();
            cls.symmetry_order = symmetry_order(f, u);
            if (auto named = conventional_name(canon, u)) {
                cls.name = named->name;
                cls.display_sequence = named->display;
            }
        }
        cls.members.push_back(f);
        ++cls.scale_count;
    }
    std::vector<FacetClass> out;
    for (auto& [key, cls] : groups)
        out.push_back(std::move(cls));
    std::stable_sort(out.begin(), out.end(), [](const FacetClass& a, const FacetClass& b) {
        if (a.cardinality != b.cardinality)
            return a.cardinality > b.cardinality;
        return a.canonical_sequence.intervals() < b.canonical_sequence.intervals();
    });
    return out;
}

std::optional<Scale> midpoint_extension(Scale s, const PitchUniverse& u)
{
    if (s.empty())
        return std::nullopt;
    for (auto [start, gap] : gaps_of(s, u))
        if (gap >= 4)
            return s.with((start + gap / 2) % u.n_pitches());
    return std::nullopt;
}

std::optional<Scale> three_gap_extension(Scale s, const PitchUniverse& u)
{
    if (s.size() < 2)
        return std::nullopt;
    const auto g = gaps_of(s, u);
    const std::size_t n = g.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (g[i].second != 3)
            continue;
        const int a = g[i].first;
        if (g[(i + 1) % n].second != 1)
            return s.with((a + 2) % u.n_pitches());
        if (g[(i + n - 1) % n].second != 1)
            return s.with((a + 1) % u.n_pitches());
    }
    return std::nullopt;
}

bool threes_flanked_by_ones(const IntervalSequence& seq)
{
    const auto& v = seq.intervals();
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i)
        if (v[i] == 3 && (v[(i + 1) % n] != 1 || v[(i + n - 1) % n] != 1))
            return false;
    return true;
}

bool check_observation_1(const SimplicialComplex& k, const PitchUniverse& u)
{
    for (Scale f : k.facets()) {
        if (f.empty())
            continue;
        const auto seq = interval_sequence(f, u).intervals();
        if (std::any_of(seq.begin(), seq.end(), [](int g) { return g >= 4; }))
            return false;
    }
    for (Scale s : k.faces()) {
        // Every gap of four or more, not just the first, must admit its midpoint.
        if (s.empty())
            continue;
        for (auto [start, gap] : gaps_of(s, u)) {
            if (gap < 4)
                continue;
            const Scale ext = s.with((start + gap / 2) % u.n_pitches());
            if (!is_non_chromatic(ext, u) || !k.contains(ext))
                return false;
        }
    }
    return true;
}

bool check_observation_2(const SimplicialComplex& k, const PitchUniverse& u)
{
    for (Scale f : k.facets()) {
        if (f.size() >= 2 && !threes_flanked_by_ones(interval_sequence(f, u)))
            return false;
    }
    for (Scale s : k.faces()) {
        if (s.size() < 2)
            continue;
        const auto g = gaps_of(s, u);
        const std::size_t n = g.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (g[i].second != 3)
                continue;
            std::vector<Scale> witnesses;
            if (g[(i + 1) % n].second != 1)
                witnesses.push_back(s.with((g[i].first + 2) % u.n_pitches()));
            if (g[(i + n - 1) % n].second != 1)
                witnesses.push_back(s.with((g[i].first + 1) % u.n_pitches()));
            for (Scale w : witnesses)
                if (!is_non_chromatic(w, u) || !k.contains(w))
                    return false;
        }
    }
    return true;
}

std::vector<IntervalSequence> enumerate_maximal_sequences(const PitchUniverse& u)
{
    // A gap of four or more can always take its midpoint without creating a
    // run of two, so maximal sequences only use parts 1, 2 and 3.
    const int n = u.n_pitches();
    std::vector<std::vector<int>> found;
    std::vector<int> parts;
    auto visit = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            if (u.run_limit() == 3 && !default_rules_hold(parts))
                return;
            IntervalSequence seq(parts);
            const Scale s = seq.realize(0, u);
            if (is_non_chromatic(s, u) && is_maximal(s, u))
                found.push_back(seq.canonical().intervals());
            return;
        }
        for (int p = 1; p <= std::min(3, remaining); ++p) {
            parts.push_back(p);
            self(self, remaining - p);
            parts.pop_back();
        }
    };
    visit(visit, n);
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    std::vector<IntervalSequence> out;
    for (auto& v : found)
        out.emplace_back(std::move(v));
    return out;
}

CardinalitySplit cardinality_split(const SimplicialComplex& k, int cardinality)
{
    CardinalitySplit split;
    for (Scale f : k.faces_of_dim(cardinality - 1)) {
        ++split.faces;
        if (k.is_facet(f)) {
            ++split.facets;
            continue;
        }
        ++split.in_larger_facets;
        int containing = 0;
        for (Scale g : k.facets())
            if (g.size() > cardinality && f.is_subset_of(g))
                ++containing;
        if (containing != 1)
            split.unique_extension = false;
    }
    return split;
}

} // namespace scx
