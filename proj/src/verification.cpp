#include "scalecomplex/verification.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "scalecomplex/classify.hpp"
#include "scalecomplex/collapse.hpp"
#include "scalecomplex/homology.hpp"
#include "scalecomplex/spheres.hpp"

namespace scx {

namespace fixtures {

SimplicialComplex two_components() { return build_from_facets(3, {Scale{0, 1}, Scale{2}}); }

SimplicialComplex hollow_triangle() { return build_from_facets(3, {Scale{0, 1}, Scale{1, 2}, Scale{0, 2}}); }

SimplicialComplex filled_triangle() { return build_from_facets(3, {Scale{0, 1, 2}}); }

SimplicialComplex tetrahedron_edges()
{
    return build_from_facets(4, {Scale{0, 1}, Scale{0, 2}, Scale{0, 3}, Scale{1, 2}, Scale{1, 3}, Scale{2, 3}});
}

SimplicialComplex triangle_with_flap() { return build_from_facets(4, {Scale{0, 1}, Scale{0, 2}, Scale{1, 2, 3}}); }

} // namespace fixtures

namespace {

template <typename T>
std::string join(const std::vector<T>& v)
{
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
        out << (i ? "," : "") << v[i];
    out << ')';
    return out.str();
}

// Chromatic iff three cyclically consecutive bits are set.
bool has_run_of_three(std::uint64_t b)
{
    const std::uint64_t mask = 0xFFF;
    auto rot = [&](int k) { return ((b >> k) | (b << (12 - k))) & mask; };
    return (b & rot(1) & rot(2)) != 0;
}

bool boundary_squares_to_zero(const SimplicialComplex& k)
{
    for (int n = 0; n < k.max_dimension(); ++n) {
        const auto lower = boundary_matrix(k, n);
        const auto upper = boundary_matrix(k, n + 1);
        for (const auto& col : upper.columns) {
            std::map<std::uint32_t, int> acc;
            for (const auto& e : col)
                for (const auto& f : lower.columns[e.row])
                    acc[f.row] += e.sign * f.sign;
            for (const auto& [row, v] : acc)
                if (v != 0)
                    return false;
        }
    }
    return true;
}

} // namespace

std::vector<CheckResult> run_verification()
{
    const PitchUniverse u;
    const auto knc = build_non_chromatic_complex(u);
    std::vector<CheckResult> out;
    auto add = [&](std::string name, bool ok, std::string detail) {
        out.push_back({std::move(name), ok, std::move(detail)});
    };

    {
        const auto fv = f_vector(knc);
        std::vector<std::uint64_t> brute(13, 0);
        for (std::uint64_t b = 0; b < 4096; ++b)
            if (!has_run_of_three(b))
                ++brute[static_cast<std::size_t>(Scale(b).size())];
        while (!brute.empty() && brute.back() == 0)
            brute.pop_back();
        const std::vector<std::uint64_t> expected = {1, 12, 66, 208, 399, 456, 282, 72, 3};
        add("f-vector", fv.counts == expected && brute == expected, "f = " + join(fv.counts));
    }

    const auto classes = classify_facets(knc, u);
    {
        std::vector<std::string> rows;
        for (const auto& c : classes)
            rows.push_back(std::to_string(c.cardinality) + ":" + c.display_sequence.to_string() + ":" +
                           std::to_string(c.scale_count) + ":" + c.name);
        const std::set<std::string> expected = {
            "8:2-1-2-1-2-1-2-1:3:diminished",   "7:2-2-1-2-2-2-1:12:major",
            "7:2-1-2-2-2-2-1:12:melodic minor", "7:2-1-2-2-1-3-1:12:harmonic minor",
            "7:2-2-1-2-1-3-1:12:harmonic major", "6:2-2-2-2-2-2:2:whole tone",
            "6:1-3-1-3-1-3:4:augmented"};
        const bool ok = knc.facets().size() == 57 && std::set<std::string>(rows.begin(), rows.end()) == expected &&
                        rows.size() == expected.size();
        add("facets and interval classes", ok,
            std::to_string(knc.facets().size()) + " facets in " + std::to_string(classes.size()) + " classes");
    }

    {
        const auto seqs = enumerate_maximal_sequences(u);
        std::set<std::vector<int>> from_search, from_table, from_facets;
        for (const auto& s : seqs)
            from_search.insert(s.intervals());
        for (const char* t : {"2-1-2-1-2-1-2-1", "2-2-1-2-2-2-1", "2-1-2-2-2-2-1", "2-1-2-2-1-3-1", "2-2-1-2-1-3-1",
                              "2-2-2-2-2-2", "1-3-1-3-1-3"})
            from_table.insert(IntervalSequence::parse(t).canonical().intervals());
        for (const auto& c : classes)
            from_facets.insert(c.canonical_sequence.intervals());
        add("seven maximal interval sequences", seqs.size() == 7 && from_search == from_table && from_search == from_facets,
            std::to_string(seqs.size()) + " sequences");
    }

    add("observation: no gap of four or more", check_observation_1(knc, u), "");
    add("observation: every 3 inside 1-3-1", check_observation_2(knc, u), "");

    const auto betti = reduced_betti(knc);
    {
        bool ok = betti.at_dim(5) == 3;
        for (int d = -1; d <= knc.max_dimension(); ++d)
            if (d != 5 && betti.at_dim(d) != 0)
                ok = false;
        add("reduced homology of the complex", ok, "betti = " + join(betti.values));
    }

    {
        const auto b2 = reduced_betti(fixtures::two_components());
        const auto bh = reduced_betti(fixtures::hollow_triangle());
        const auto bf = reduced_betti(fixtures::filled_triangle());
        const auto bt = reduced_betti(fixtures::tetrahedron_edges());
        const bool ok = b2.values == std::vector<std::uint64_t>{0, 1, 0} &&
                        bh.values == std::vector<std::uint64_t>{0, 0, 1} &&
                        bf.values == std::vector<std::uint64_t>{0, 0, 0, 0} &&
                        bt.values == std::vector<std::uint64_t>{0, 0, 3} &&
                        connected_components(fixtures::two_components()) == 2 &&
                        connected_components(fixtures::hollow_triangle()) == 1 && connected_components(knc) == 1;
        add("fixture homology", ok,
            "K2 " + join(b2.values) + ", hollow " + join(bh.values) + ", filled " + join(bf.values) +
                ", tetrahedron edges " + join(bt.values));
    }

    {
        bool ok = true;
        for (const auto& k : {knc, fixtures::two_components(), fixtures::hollow_triangle(), fixtures::filled_triangle(),
                              fixtures::tetrahedron_edges(), fixtures::triangle_with_flap()})
            ok = ok && boundary_squares_to_zero(k);
        add("boundary of boundary vanishes", ok, "");
    }

    {
        const auto res = collapse_above_dim(knc, 5);
        const bool cleared = res.complete && res.complex.faces_of_dim(6).empty() && res.complex.faces_of_dim(7).empty();
        const bool same = reduced_betti(res.complex) == betti;

        const auto flap = fixtures::triangle_with_flap();
        const auto pairs = find_free_pairs(flap);
        const bool only_triangle =
            !pairs.empty() && std::all_of(pairs.begin(), pairs.end(), [](const FreePair& p) {
                return p.facet == Scale{1, 2, 3};
            });
        const auto after_inner = collapse_pair(flap, {Scale{1, 2, 3}, Scale{1, 2}});
        const auto after_outer = collapse_pair(flap, {Scale{1, 2, 3}, Scale{1, 3}});
        const auto outer_pairs = find_free_pairs(after_outer);
        bool exactly_one_more = false;
        if (!outer_pairs.empty()) {
            exactly_one_more = true;
            for (const auto& p : outer_pairs)
                exactly_one_more = exactly_one_more && find_free_pairs(collapse_pair(after_outer, p)).empty();
            exactly_one_more = exactly_one_more && collapse_fully(after_outer).log.size() == 1;
        }
        add("collapses", cleared && same && only_triangle && find_free_pairs(after_inner).empty() && exactly_one_more,
            std::to_string(res.log.size()) + " collapses, f = " + join(f_vector(res.complex).counts));
    }

    {
        const Scale c_major{0, 2, 4, 5, 7, 9, 11};
        const Scale diminished{0, 2, 3, 5, 6, 8, 9, 11};
        bool ok = is_free_pair(knc, {c_major, c_major.without(2)}) &&
                  is_free_pair(knc, {diminished, diminished.without(0)});
        for (Scale f : knc.facets())
            if (f.size() == 6)
                ok = ok && !is_collapsible_facet(knc, f);
        add("collapsible facets", ok, "");
    }

    const auto report = sphere_report(knc, u);
    {
        bool ok = report.spheres.size() == 4;
        for (const auto& s : report.spheres) {
            const auto six = non_chromatic_subsets(s.scale.members, 6, u);
            ok = ok && s.hexatonics.size() == 27 && six == s.hexatonics &&
                 non_chromatic_subsets(s.scale.members, 7, u).empty() && s.certificate.pass();
        }
        std::set<Scale> pair_sets, hex_facets, triad_sets, triads;
        for (const auto& p : report.pairs) {
            pair_sets.insert(p.members);
            ok = ok && p.is_facet && p.overlap_is_simplex && p.overlap_collapses_to_point;
        }
        for (Scale f : knc.facets())
            if (f.size() == 6)
                hex_facets.insert(f);
        for (const auto& t : report.triples) {
            triad_sets.insert(t.members);
            ok = ok && t.filled_in_complex && t.collapses_to_point;
        }
        for (const auto& t : augmented_triads(u))
            triads.insert(t.members());
        ok = ok && report.pairs.size() == 6 && pair_sets == hex_facets && triad_sets == triads &&
             report.quadruple.empty();
        add("Messiaen spheres", ok, "");
    }

    {
        std::vector<std::string> ranks;
        for (const auto& r : report.basis.ranks)
            ranks.push_back(join(r.members) + "->" + std::to_string(r.rank));
        std::string detail;
        for (const auto& s : ranks)
            detail += (detail.empty() ? "" : " ") + s;
        add("basis of the top homology", report.basis.ok(), detail);
    }

    {
        const auto split = cardinality_split(knc, 7);
        add("seven-note faces: 72 = 48 + 24",
            split.faces == 72 && split.facets == 48 && split.in_larger_facets == 24 && split.unique_extension,
            std::to_string(split.faces) + " = " + std::to_string(split.facets) + " + " +
                std::to_string(split.in_larger_facets));
    }

    return out;
}

} // namespace scx
