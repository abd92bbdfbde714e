#include "scalecomplex/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "scalecomplex/classify.hpp"
#include "scalecomplex/collapse.hpp"
#include "scalecomplex/errors.hpp"
#include "scalecomplex/homology.hpp"
#include "scalecomplex/json_io.hpp"
#include "scalecomplex/spheres.hpp"
#include "scalecomplex/verification.hpp"

namespace scx::cli {

namespace {

using scx::json::Json;

struct RunConfig {
    int pitches = 12;
    int run_limit = 3;
    std::string format = "table";
    std::string facets_file;
    int to_dim = 5;

    bool json() const { return format == "json"; }
    PitchUniverse universe() const { return PitchUniverse(pitches, run_limit); }
};

int max_pitches_from_env()
{
    const char* env = std::getenv("SCALE_COMPLEX_MAX_PITCHES");
    if (env == nullptr || *env == '\0')
        return kDefaultMaxPitches;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 3 || v > PitchUniverse::kMaxPitches)
        throw DomainError(std::string("SCALE_COMPLEX_MAX_PITCHES must be an integer in [3, 64], got ") + env);
    return static_cast<int>(v);
}

SimplicialComplex load_complex(const RunConfig& cfg)
{
    if (cfg.facets_file.empty())
        return build_non_chromatic_complex(cfg.universe(), max_pitches_from_env());
    std::ifstream in(cfg.facets_file);
    if (!in)
        throw ParseError("cannot open " + cfg.facets_file);
    std::stringstream buf;
    buf << in.rdbuf();
    return json::complex_from_string(buf.str());
}

std::string join_counts(const std::vector<std::uint64_t>& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? " " : "") + std::to_string(v[i]);
    return out;
}

std::string show(Scale s, int ground_set_size)
{
    return ground_set_size == 12 ? format_scale(s, PitchUniverse{}) : format_scale_numeric(s);
}

int cmd_fvector(const RunConfig& cfg, std::ostream& out)
{
    const auto fv = f_vector(load_complex(cfg));
    if (cfg.json())
        out << json::f_vector_to_json(fv).dump() << '\n';
    else
        out << join_counts(fv.counts) << '\n';
    return kSuccess;
}

int cmd_facets(const RunConfig& cfg, std::ostream& out)
{
    const auto k = load_complex(cfg);
    if (cfg.json()) {
        out << json::complex_to_json(k).dump() << '\n';
        return kSuccess;
    }
    for (Scale f : k.facets())
        out << show(f, k.ground_set_size()) << '\n';
    return kSuccess;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out)
{
    const auto u = cfg.universe();
    const auto classes = classify_facets(load_complex(cfg), u);
    if (cfg.json()) {
        out << json::classes_to_json(classes).dump() << '\n';
        return kSuccess;
    }
    out << std::left << std::setw(16) << "pitch classes" << std::setw(20) << "interval sequence" << std::setw(18)
        << "number of scales"
        << "name\n";
    int total = 0;
    for (const auto& c : classes) {
        out << std::setw(16) << c.cardinality << std::setw(20) << c.display_sequence.to_string() << std::setw(18)
            << c.scale_count << c.name << '\n';
        total += c.scale_count;
    }
    out << "total facets: " << total << '\n';
    return kSuccess;
}

int cmd_homology(const RunConfig& cfg, std::ostream& out)
{
    const auto b = reduced_betti(load_complex(cfg));
    if (cfg.json()) {
        out << json::betti_to_json(b).dump() << '\n';
        return kSuccess;
    }
    out << "dimension  reduced betti\n";
    for (std::size_t i = 0; i < b.values.size(); ++i)
        out << std::left << std::setw(11) << static_cast<long>(i) - 1 << b.values[i] << '\n';
    return kSuccess;
}

int cmd_collapse(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const auto k = load_complex(cfg);
    const auto res = collapse_above_dim(k, cfg.to_dim);
    const auto before = reduced_betti(k);
    const auto after = reduced_betti(res.complex);
    if (cfg.json()) {
        out << Json{{"to_dim", cfg.to_dim},
                    {"f_vector_before", f_vector(k).counts},
                    {"f_vector_after", f_vector(res.complex).counts},
                    {"reduced_betti_before", before.values},
                    {"reduced_betti_after", after.values},
                    {"complete", res.complete},
                    {"max_face_cardinality", res.complex.max_dimension() + 1},
                    {"log", json::collapse_log_to_json(res.log)}}
                   .dump()
            << '\n';
    } else {
        out << "f-vector before: " << join_counts(f_vector(k).counts) << '\n';
        for (const auto& p : res.log)
            out << "collapse " << show(p.facet, k.ground_set_size()) << " with " << show(p.free_face, k.ground_set_size())
                << '\n';
        out << "f-vector after: " << join_counts(f_vector(res.complex).counts) << '\n';
        out << "collapses: " << res.log.size() << '\n';
        out << "max face cardinality: " << res.complex.max_dimension() + 1 << '\n';
        out << "reduced betti before: " << join_counts(before.values) << '\n';
        out << "reduced betti after: " << join_counts(after.values) << '\n';
    }
    if (!res.complete) {
        err << "faces above dimension " << cfg.to_dim << " remain with no free pair\n";
        return kVerificationFailed;
    }
    return before == after ? kSuccess : kVerificationFailed;
}

int cmd_spheres(const RunConfig& cfg, std::ostream& out)
{
    const auto u = cfg.universe();
    if (!u.is_default())
        throw UnsupportedUniverseError("spheres requires the default universe (12 pitches, run limit 3)");
    const auto k = build_non_chromatic_complex(u, max_pitches_from_env());
    const auto r = sphere_report(k, u);
    if (cfg.json()) {
        out << json::sphere_report_to_json(r, u).dump() << '\n';
        return kSuccess;
    }
    for (std::size_t i = 0; i < r.spheres.size(); ++i) {
        const auto& s = r.spheres[i];
        out << "sphere " << i << ": omit " << format_scale(s.scale.omitted_triad.members(), u) << ", "
            << s.hexatonics.size() << " hexatonics, betti " << join_counts(s.certificate.betti.values)
            << ", pseudomanifold " << (s.certificate.closed_pseudomanifold ? "yes" : "no") << ", connected "
            << (s.certificate.dual_graph_connected ? "yes" : "no") << ", cycle terms " << s.cycle.terms().size()
            << '\n';
        for (Scale h : s.hexatonics)
            out << "  " << format_scale(h, u) << '\n';
    }
    for (const auto& p : r.pairs)
        out << "spheres " << p.first << "," << p.second << " meet in " << format_scale(p.members, u) << " ("
            << interval_sequence(p.members, u).to_string() << (p.is_facet ? ", facet" : "") << ")\n";
    for (const auto& t : r.triples)
        out << "spheres " << t.indices[0] << "," << t.indices[1] << "," << t.indices[2] << " meet in "
            << format_scale(t.members, u) << '\n';
    for (const auto& s : r.basis.ranks) {
        out << "rank of {";
        for (std::size_t i = 0; i < s.members.size(); ++i)
            out << (i ? "," : "") << s.members[i];
        out << "}: " << s.rank << '\n';
    }
    return kSuccess;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out)
{
    const auto results = run_verification();
    bool all = true;
    if (cfg.json()) {
        Json rows = Json::array();
        for (const auto& r : results) {
            rows.push_back(Json{{"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
            all = all && r.passed;
        }
        out << Json{{"checks", rows}, {"all_passed", all}}.dump() << '\n';
    } else {
        for (const auto& r : results) {
            out << (r.passed ? "PASS " : "FAIL ") << r.name;
            if (!r.detail.empty())
                out << ": " << r.detail;
            out << '\n';
            all = all && r.passed;
        }
        out << (all ? "all checks passed" : "some checks failed") << '\n';
    }
    return all ? kSuccess : kVerificationFailed;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Simplicial complex of non-chromatic scales", "scalecomplex"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    app.add_option("--pitches", cfg.pitches, "Number of pitch classes")->capture_default_str();
    app.add_option("--run", cfg.run_limit, "Length of a forbidden chromatic run")->capture_default_str();
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"table", "json"}))->capture_default_str();

    auto* fvector = app.add_subcommand("fvector", "Print the f-vector");
    auto* facets_cmd = app.add_subcommand("facets", "List the facets");
    auto* classify = app.add_subcommand("classify", "Group facets by interval sequence");
    auto* homology = app.add_subcommand("homology", "Reduced Betti numbers over Q");
    auto* collapse = app.add_subcommand("collapse", "Collapse faces above a dimension");
    auto* spheres = app.add_subcommand("spheres", "Messiaen sphere analysis");
    auto* verify = app.add_subcommand("verify", "Run every reproduction check");
    for (auto* sub : {fvector, facets_cmd, homology, collapse})
        sub->add_option("--facets-file", cfg.facets_file, "JSON complex to use instead of the scale complex");
    collapse->add_option("--to-dim", cfg.to_dim, "Target dimension")->capture_default_str();

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back("scalecomplex");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        if (fvector->parsed())
            return cmd_fvector(cfg, out);
        if (facets_cmd->parsed())
            return cmd_facets(cfg, out);
        if (classify->parsed())
            return cmd_classify(cfg, out);
        if (homology->parsed())
            return cmd_homology(cfg, out);
        if (collapse->parsed())
            return cmd_collapse(cfg, out, err);
        if (spheres->parsed())
            return cmd_spheres(cfg, out);
        if (verify->parsed())
            return cmd_verify(cfg, out);
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << '\n';
        return kCapacityError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

} // namespace scx::cli
