#include "magnetite/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "magnetite/document.hpp"
#include "magnetite/errors.hpp"
#include "magnetite/magnets.hpp"
#include "magnetite/oracle.hpp"

namespace magnetite::cli {

namespace {

using nlohmann::json;

json ambient_json(const AmbientGroup& g) {
    json out;
    out["rank"] = g.rank;
    out["torsion"] = json::array();
    for (const Int& d : g.torsion) {
        out["torsion"].push_back(static_cast<std::int64_t>(d));
    }
    return out;
}

std::int64_t coord64(const Int& v) {
    if (v < Int(std::numeric_limits<std::int64_t>::min()) ||
        v > Int(std::numeric_limits<std::int64_t>::max())) {
        throw ValidationError("coordinate " + v.str() +
                              " does not fit the report integer range");
    }
    return static_cast<std::int64_t>(v);
}

json element_json(const GroupElement& x) {
    json out = json::array();
    for (const Int& c : x.flat()) out.push_back(coord64(c));
    return out;
}

json elements_json(const std::vector<GroupElement>& xs) {
    json out = json::array();
    for (const GroupElement& x : xs) out.push_back(element_json(x));
    return out;
}

void emit(const json& report, bool as_json, const std::string& text,
          std::ostream& out) {
    if (as_json) {
        out << report.dump(2) << "\n";
    } else {
        out << text;
    }
}

struct CommandContext {
    bool json_out = false;
    Limits limits;
    std::uint64_t seed = 0;
};

std::string yesno(bool v) { return v ? "yes" : "no"; }

FgMonoid monoid_from_file(const std::string& path) {
    return load_document(path).to_monoid();
}

ActionSpec make_spec(const FgMonoid& m, const std::string& action_on,
                     const Limits& limits) {
    if (action_on.empty()) return ActionSpec::self_action(m);
    FgMonoid target = monoid_from_file(action_on);
    return ActionSpec::action_on(m, target, limits);
}

int cmd_analyze(const std::string& file, const CommandContext& ctx,
                std::ostream& out) {
    MonoidDocument doc = load_document(file);
    FgMonoid m = doc.to_monoid();
    const SharpQuotient& sq = sharp_quotient(m);
    std::vector<GroupElement> min_gens = minimal_generators(sq.image, ctx.limits);
    Int count = pure_magnet_count(ActionSpec::self_action(m), ctx.limits);

    json report;
    if (doc.name) report["name"] = *doc.name;
    report["ambient"] = ambient_json(m.group());
    report["generators"] = elements_json(m.gens());
    report["unit_generators"] = elements_json(unit_generators(m));
    report["units_subgroup_generators"] = elements_json(units_subgroup(m).gens());
    report["sharp"] = is_sharp(m);
    report["sharp_quotient"]["ambient"] = ambient_json(sq.image.group());
    report["sharp_quotient"]["image_generators"] = elements_json(sq.image.gens());
    report["minimal_generators"] = elements_json(min_gens);
    report["pure_magnet_count"] = count.str();

    std::ostringstream text;
    if (doc.name) text << "monoid: " << *doc.name << "\n";
    text << "ambient: " << m.group().describe() << "\n";
    text << "generators (normalized): " << format_elements(m.gens()) << "\n";
    text << "unit generators: " << format_elements(unit_generators(m)) << "\n";
    text << "units subgroup generators: "
         << format_elements(units_subgroup(m).gens()) << "\n";
    text << "sharp: " << yesno(is_sharp(m)) << "\n";
    text << "sharp quotient ambient: " << sq.image.group().describe() << "\n";
    text << "sharp quotient image generators: "
         << format_elements(sq.image.gens()) << "\n";
    text << "minimal generators of the sharp quotient: "
         << format_elements(min_gens) << "\n";
    text << "pure magnet count: " << count.str() << "\n";
    emit(report, ctx.json_out, text.str(), out);
    return 0;
}

int cmd_units(const std::string& file, const CommandContext& ctx,
              std::ostream& out) {
    FgMonoid m = monoid_from_file(file);
    json report;
    report["unit_generators"] = elements_json(unit_generators(m));
    report["units_subgroup_generators"] = elements_json(units_subgroup(m).gens());
    report["sharp"] = is_sharp(m);

    std::ostringstream text;
    text << "unit generators: " << format_elements(unit_generators(m)) << "\n";
    text << "units subgroup generators: "
         << format_elements(units_subgroup(m).gens()) << "\n";
    text << "sharp: " << yesno(is_sharp(m)) << "\n";
    emit(report, ctx.json_out, text.str(), out);
    return 0;
}

int cmd_sharp_quotient(const std::string& file, const CommandContext& ctx,
                       std::ostream& out) {
    FgMonoid m = monoid_from_file(file);
    const SharpQuotient& sq = sharp_quotient(m);

    json report;
    report["ambient"] = ambient_json(sq.image.group());
    report["image_generators"] = elements_json(sq.image.gens());
    report["generator_images"] = json::array();
    for (const GroupElement& g : m.gens()) {
        json pair;
        pair["generator"] = element_json(g);
        pair["image"] = element_json(sq.map.map(g));
        report["generator_images"].push_back(pair);
    }

    std::ostringstream text;
    text << "sharp quotient ambient: " << sq.image.group().describe() << "\n";
    text << "image generators: " << format_elements(sq.image.gens()) << "\n";
    for (const GroupElement& g : m.gens()) {
        text << "  " << format_element(g) << " -> "
             << format_element(sq.map.map(g)) << "\n";
    }
    emit(report, ctx.json_out, text.str(), out);
    return 0;
}

int cmd_min_generators(const std::string& file, const CommandContext& ctx,
                       std::ostream& out) {
    FgMonoid m = monoid_from_file(file);
    std::vector<GroupElement> e = minimal_generators(m, ctx.limits);

    json report;
    report["minimal_generators"] = elements_json(e);
    std::ostringstream text;
    text << "minimal generators: " << format_elements(e) << "\n";
    emit(report, ctx.json_out, text.str(), out);
    return 0;
}

int cmd_pure_magnets(const std::string& file, const std::string& action_on,
                     bool list, bool count_only, const CommandContext& ctx,
                     std::ostream& out) {
    FgMonoid m = monoid_from_file(file);
    ActionSpec spec = make_spec(m, action_on, ctx.limits);
    PureMagnetReport pm = pure_magnets(spec, ctx.limits);

    json report;
    report["pure_magnet_count"] = pm.count().str();
    report["units_present"] = pm.units_present();
    report["minimal_generator_lifts"] = elements_json(pm.lifted_minimal_generators());

    std::ostringstream text;
    text << "pure magnet count: " << pm.count().str() << "\n";
    text << "units present: " << yesno(pm.units_present()) << "\n";
    text << "minimal generator lifts: "
         << format_elements(pm.lifted_minimal_generators()) << "\n";

    if (list && !count_only) {
        report["magnets"] = json::array();
        text << "pure magnets:\n";
        for (const PureMagnetEntry& e : pm.list(ctx.limits)) {
            json entry;
            entry["zero"] = e.zero_magnet;
            if (!(pm.units_present() && e.zero_magnet)) {
                entry["subset"] = elements_json(e.subset);
            }
            entry["generators"] = elements_json(e.magnet.gens());
            report["magnets"].push_back(entry);
            text << "  " << (e.zero_magnet ? "[zero] " : "")
                 << format_elements(e.magnet.gens()) << "\n";
        }
    }
    emit(report, ctx.json_out, text.str(), out);
    return 0;
}

int cmd_classify(const std::string& file, const std::string& action_on,
                 const std::string& magnet_file, const CommandContext& ctx,
                 std::ostream& out) {
    FgMonoid m = monoid_from_file(file);
    ActionSpec spec = make_spec(m, action_on, ctx.limits);
    FgMonoid n = monoid_from_file(magnet_file);
    FgMonoid pure = classify(spec, n, ctx.limits);

    json report;
    report["pure_magnet_generators"] = elements_json(pure.gens());
    report["zero"] = pure.gens().empty();

    std::ostringstream text;
    text << "pure magnet: "
         << (pure.gens().empty() ? std::string("0 (zero magnet)")
                                 : format_elements(pure.gens()))
         << "\n";
    emit(report, ctx.json_out, text.str(), out);
    return 0;
}

int cmd_is_pure(const std::string& file, const std::string& action_on,
                const std::string& magnet_file, const CommandContext& ctx,
                std::ostream& out) {
    FgMonoid m = monoid_from_file(file);
    ActionSpec spec = make_spec(m, action_on, ctx.limits);
    FgMonoid n = monoid_from_file(magnet_file);
    bool pure = is_pure(spec, n, ctx.limits);

    json report;
    report["pure"] = pure;
    std::ostringstream text;
    text << "pure: " << yesno(pure) << "\n";
    emit(report, ctx.json_out, text.str(), out);
    return 0;
}

int cmd_attractor(const std::string& file, const std::string& action_on,
                  const std::string& magnet_file, std::size_t degree,
                  const CommandContext& ctx, std::ostream& out) {
    FgMonoid m = monoid_from_file(file);
    ActionSpec spec = make_spec(m, action_on, ctx.limits);
    FgMonoid n = monoid_from_file(magnet_file);
    QuotientPresentation q = quotient_presentation(spec, n, degree, ctx.limits);

    json report;
    report["degree"] = degree;
    report["empty_scheme"] = q.empty_scheme;
    report["ideal_elements"] = elements_json(q.ideal_elements);
    report["basis"] = elements_json(q.basis);

    std::ostringstream text;
    text << "degree: " << degree << "\n";
    text << "attractor empty: " << yesno(q.empty_scheme) << "\n";
    text << "ideal elements (within the ball): "
         << format_elements(q.ideal_elements) << "\n";
    text << "monomial basis (within the ball): " << format_elements(q.basis)
         << "\n";
    emit(report, ctx.json_out, text.str(), out);
    return 0;
}

int cmd_verify(const std::string& file, const std::string& action_on,
               std::size_t max_degree, const CommandContext& ctx,
               std::ostream& out) {
    FgMonoid m = monoid_from_file(file);
    ActionSpec spec = make_spec(m, action_on, ctx.limits);
    OracleReport report = verify_theorem(spec, max_degree, ctx.limits, ctx.seed);

    json j;
    j["degree"] = report.degree;
    j["candidate_degree"] = report.candidate_degree;
    j["candidates"] = report.candidate_count;
    j["classes"] = report.class_count;
    j["predicted_count"] = report.predicted_count.str();
    j["exactness"] = report.exactness;
    j["conclusive"] = report.conclusive;
    j["check_minimum"] = report.check_minimum;
    j["check_covered"] = report.check_covered;
    j["check_count"] = report.check_count;
    j["verdict"] = report.matched ? "match" : "mismatch";
    if (!report.witness.empty()) j["witness"] = report.witness;
    j["class_minima"] = json::array();
    for (const FgMonoid& n : report.class_minima) {
        j["class_minima"].push_back(elements_json(n.gens()));
    }

    std::ostringstream text;
    text << "truncation degree: " << report.degree << "\n";
    text << "candidate degree: " << report.candidate_degree << "\n";
    text << "candidates: " << report.candidate_count << "\n";
    text << "classes (sound up to the truncation): " << report.class_count
         << "\n";
    text << "predicted pure magnet count: " << report.predicted_count.str()
         << "\n";
    text << "exactness flag: " << yesno(report.exactness) << "\n";
    text << "conclusive: " << yesno(report.conclusive) << "\n";
    text << "class minima:\n";
    for (const FgMonoid& n : report.class_minima) {
        text << "  " << format_elements(n.gens()) << "\n";
    }
    text << "verdict: " << (report.matched ? "match" : "mismatch") << "\n";
    if (!report.witness.empty()) text << "witness: " << report.witness << "\n";
    emit(j, ctx.json_out, text.str(), out);
    return report.matched ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
    CLI::App app{"exact pure-magnet engine for finitely generated commutative "
                 "monoids inside Z^r x torsion"};
    app.fallthrough(true);

    CommandContext ctx;
    std::size_t ball_cap_flag = 0;
    app.add_flag("--json", ctx.json_out, "emit machine-readable JSON");
    auto* cap_opt = app.add_option("--ball-cap", ball_cap_flag,
                                   "cap on ball enumeration size");
    app.add_option("--seed", ctx.seed,
                   "shuffle oracle candidate processing order (the result is "
                   "order-independent)");

    std::string file, magnet_file, action_on;
    std::size_t degree = 0, max_degree = 0;
    bool list_flag = false, count_flag = false;

    auto* analyze = app.add_subcommand(
        "analyze", "units, sharpness, sharp quotient, minimal generators, count");
    analyze->add_option("file", file, "monoid document")->required();

    auto* units = app.add_subcommand("units", "unit generators and unit face");
    units->add_option("file", file, "monoid document")->required();

    auto* sq = app.add_subcommand("sharp-quotient",
                                  "projection to the sharp quotient");
    sq->add_option("file", file, "monoid document")->required();

    auto* mingen = app.add_subcommand(
        "min-generators", "minimal generating set (sharp monoids only)");
    mingen->add_option("file", file, "monoid document")->required();

    auto* pms = app.add_subcommand("pure-magnets",
                                   "pure magnets of the (self-)action");
    pms->add_option("file", file, "acting monoid document")->required();
    pms->add_option("--action-on", action_on, "target monoid document");
    pms->add_flag("--list", list_flag, "enumerate the magnets");
    pms->add_flag("--count", count_flag, "count only");

    auto* cls = app.add_subcommand("classify",
                                   "pure magnet of a magnet's attractor class");
    cls->add_option("file", file, "acting monoid document")->required();
    cls->add_option("--action-on", action_on, "target monoid document");
    cls->add_option("--magnet", magnet_file, "magnet document")->required();

    auto* pure = app.add_subcommand("is-pure", "is the magnet pure?");
    pure->add_option("file", file, "acting monoid document")->required();
    pure->add_option("--action-on", action_on, "target monoid document");
    pure->add_option("--magnet", magnet_file, "magnet document")->required();

    auto* attr = app.add_subcommand("attractor",
                                    "truncated attractor ideal and basis");
    attr->add_option("file", file, "acting monoid document")->required();
    attr->add_option("--action-on", action_on, "target monoid document");
    attr->add_option("--magnet", magnet_file, "magnet document")->required();
    attr->add_option("--degree", degree, "truncation degree")->required();

    auto* verify = app.add_subcommand(
        "verify", "brute-force cross-check of the pure magnet classification");
    verify->add_option("file", file, "acting monoid document")->required();
    verify->add_option("--action-on", action_on, "target monoid document");
    verify->add_option("--max-degree", max_degree, "truncation degree")
        ->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }

    if (const char* env = std::getenv("MAGNETITE_BALL_CAP")) {
        try {
            ctx.limits.ball_cap = std::stoull(env);
        } catch (const std::exception&) {
            err << "error: MAGNETITE_BALL_CAP is not a number\n";
            return 3;
        }
    }
    if (cap_opt->count() > 0) ctx.limits.ball_cap = ball_cap_flag;

    try {
        if (analyze->parsed()) return cmd_analyze(file, ctx, out);
        if (units->parsed()) return cmd_units(file, ctx, out);
        if (sq->parsed()) return cmd_sharp_quotient(file, ctx, out);
        if (mingen->parsed()) return cmd_min_generators(file, ctx, out);
        if (pms->parsed()) {
            return cmd_pure_magnets(file, action_on, list_flag, count_flag, ctx, out);
        }
        if (cls->parsed()) return cmd_classify(file, action_on, magnet_file, ctx, out);
        if (pure->parsed()) return cmd_is_pure(file, action_on, magnet_file, ctx, out);
        if (attr->parsed()) {
            return cmd_attractor(file, action_on, magnet_file, degree, ctx, out);
        }
        if (verify->parsed()) {
            return cmd_verify(file, action_on, max_degree, ctx, out);
        }
        err << "error: no subcommand given (try --help)\n";
        return 3;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const ResourceLimitError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace magnetite::cli
