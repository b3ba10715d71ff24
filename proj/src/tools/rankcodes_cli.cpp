// Command-line front end for the rank-metric code library: field setup,
// explicit constructions, MRD/Gabidulin checking, duals, distance, isometry
// actions, systematic-form search, and the built-in reference examples.
//
// Exit codes: 0 = computation finished (verdicts live in the output, never
// in the status); 2 = invalid input or usage. `examples --verify` is the one
// deliberate exception: it exits 0 iff every built-in matches expectations,
// 1 otherwise, so scripts can gate on it.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rankcodes/serialize.hpp"

namespace {

using nlohmann::json;
using namespace rankcodes;

json read_json_input(const std::string& path) {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) fail(errc::bad_input, "cannot open " + path);
    return json::parse(in);
}

FieldPtr field_from_options(unsigned q, unsigned m, const std::vector<unsigned>& modulus) {
    if (modulus.empty()) return make_field(q, m);
    return make_field(q, m, modulus);
}

void emit(const json& out, const std::string& format, const std::string& text) {
    if (format == "json") {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

std::string describe_field(const Field& f) {
    std::ostringstream os;
    os << "F_" << f.q() << "^" << f.m() << " (" << f.size() << " elements)";
    return os.str();
}

std::string modulus_string(const Field& f) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < f.modulus().size(); ++i) os << (i ? "," : "") << f.modulus()[i];
    os << "]";
    return os.str();
}

const char* classification_name(Classification c) {
    switch (c) {
        case Classification::non_mrd: return "non_mrd";
        case Classification::mrd_gabidulin: return "mrd_gabidulin";
        case Classification::mrd_non_gabidulin: return "mrd_non_gabidulin";
    }
    return "?";
}

MrdVerdict run_method(const RankCode& code, const std::string& method, bool full_gl) {
    if (method == "distance") return is_mrd_distance(code);
    if (method == "subspace") return is_mrd_subspace(code);
    MinorCheckOptions options;
    options.full_general_linear = full_gl;
    return is_mrd_minor(code, options);
}

struct ShardOption {
    std::size_t index = 0;
    std::size_t total = 1;
};

ShardOption parse_shard(const std::string& text) {
    ShardOption shard;
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) throw std::invalid_argument("no slash");
        shard.index = std::stoull(text.substr(0, slash));
        shard.total = std::stoull(text.substr(slash + 1));
    } catch (const std::exception&) {
        fail(errc::bad_shard, "--shard expects INDEX/TOTAL, e.g. 0/4");
    }
    return shard;
}

int cmd_examples(bool verify, const std::string& emit_name, const std::string& format) {
    const std::vector<BuiltinExample> all = builtin_examples();
    if (!emit_name.empty()) {
        for (const BuiltinExample& e : all) {
            if (e.name == emit_name) {
                std::cout << code_to_json(e.code).dump(2) << "\n";
                return 0;
            }
        }
        fail(errc::bad_input, "unknown example " + emit_name);
    }
    json list = json::array();
    std::ostringstream text;
    bool all_match = true;
    for (const BuiltinExample& e : all) {
        json entry{{"name", e.name},
                   {"q", e.code.field()->q()},
                   {"m", e.code.field()->m()},
                   {"n", e.code.n()},
                   {"k", e.code.k()},
                   {"expected_mrd", e.expected_mrd},
                   {"expected_gabidulin", e.expected_gabidulin}};
        text << e.name << ": " << describe_field(*e.code.field()) << ", n=" << e.code.n() << ", k=" << e.code.k();
        if (verify) {
            const MrdVerdict by_distance = is_mrd_distance(e.code);
            const MrdVerdict by_subspace = is_mrd_subspace(e.code);
            const MrdVerdict by_minor = is_mrd_minor(e.code);
            const bool mrd_agree = by_distance.is_mrd == e.expected_mrd &&
                                   by_subspace.is_mrd == e.expected_mrd && by_minor.is_mrd == e.expected_mrd;
            bool gab_match = true;
            if (by_minor.is_mrd) {
                gab_match = detect_gabidulin(e.code, true).is_generalized_gabidulin == e.expected_gabidulin;
            }
            const bool match = mrd_agree && gab_match;
            all_match = all_match && match;
            entry["verified"] = match;
            entry["mrd"] = json{{"distance", by_distance.is_mrd},
                                {"subspace", by_subspace.is_mrd},
                                {"minor", by_minor.is_mrd}};
            text << (match ? "  OK" : "  MISMATCH");
        }
        text << "\n";
        list.push_back(std::move(entry));
    }
    json out{{"examples", list}};
    if (verify) out["all_verified"] = all_match;
    emit(out, format, text.str());
    return verify && !all_match ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rank-metric codes over F_{q^m}: MRD criteria, Gabidulin detection, constructions, search"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));

    unsigned q = 0, m = 0;
    std::vector<unsigned> modulus;
    auto add_field_options = [&](CLI::App* cmd) {
        cmd->add_option("--q", q, "base field size (prime)")->required();
        cmd->add_option("--m", m, "extension degree")->required();
        cmd->add_option("--modulus", modulus,
                        "monic modulus coefficients, constant term first (default: smallest primitive)")
            ->delimiter(',');
    };

    CLI::App* field_cmd = app.add_subcommand("field", "validate or pick a field modulus");
    add_field_options(field_cmd);

    CLI::App* construct_cmd = app.add_subcommand("construct", "build a non-Gabidulin MRD code");
    unsigned family = 4;
    unsigned gamma = 0;
    bool validate_only = false;
    add_field_options(construct_cmd);
    construct_cmd->add_option("--family", family, "4 = length-4 rows, 5 = length-5 rows")
        ->check(CLI::IsMember({4u, 5u}));
    construct_cmd->add_option("--gamma", gamma, "base field parameter")->required();
    construct_cmd->add_flag("--validate-only", validate_only, "emit the gamma condition report instead");

    CLI::App* check_cmd = app.add_subcommand("check", "run MRD criteria on a code file");
    std::string code_path;
    std::string method = "minor";
    bool full_gl = false;
    check_cmd->add_option("--code", code_path, "code JSON file, or - for stdin")->required();
    check_cmd->add_option("--method", method, "criterion to run")
        ->check(CLI::IsMember({"distance", "subspace", "minor", "all"}));
    check_cmd->add_flag("--full-gl", full_gl, "sweep all invertible matrices in the minor criterion");

    CLI::App* gab_cmd = app.add_subcommand("gabidulin", "build or detect generalized Gabidulin codes");
    gab_cmd->require_subcommand(1);
    CLI::App* gab_build = gab_cmd->add_subcommand("build", "Moore-matrix generator from evaluation points");
    unsigned gab_n = 0, gab_k = 0, gab_s = 1;
    std::vector<Fqm> gab_points;
    add_field_options(gab_build);
    gab_build->add_option("--n", gab_n, "length (defaults points to 1, a, ..., a^(n-1))");
    gab_build->add_option("--k", gab_k, "dimension")->required();
    gab_build->add_option("--s", gab_s, "Frobenius step, gcd(s, m) = 1");
    gab_build->add_option("--g", gab_points, "evaluation points as canonical integers")->delimiter(',');
    CLI::App* gab_detect = gab_cmd->add_subcommand("detect", "intersection-dimension criterion");
    std::string gab_code_path;
    bool assume_mrd = false;
    gab_detect->add_option("--code", gab_code_path, "code JSON file, or - for stdin")->required();
    gab_detect->add_flag("--assume-mrd", assume_mrd, "skip the MRD precheck");

    CLI::App* dual_cmd = app.add_subcommand("dual", "emit the dual code");
    std::string dual_path;
    dual_cmd->add_option("--code", dual_path, "code JSON file, or - for stdin")->required();

    CLI::App* distance_cmd = app.add_subcommand("distance", "brute-force minimum rank distance");
    std::string distance_path;
    distance_cmd->add_option("--code", distance_path, "code JSON file, or - for stdin")->required();

    CLI::App* iso_cmd = app.add_subcommand("isometry", "semilinear isometries (lambda, A, sigma)");
    iso_cmd->require_subcommand(1);
    CLI::App* iso_random = iso_cmd->add_subcommand("random", "sample a seeded isometry");
    unsigned iso_n = 0;
    std::uint64_t iso_seed = 0;
    add_field_options(iso_random);
    iso_random->add_option("--n", iso_n, "matrix size")->required();
    iso_random->add_option("--seed", iso_seed, "generator seed")->required();
    CLI::App* iso_apply = iso_cmd->add_subcommand("apply", "apply an isometry to a code");
    std::string iso_code_path, iso_path;
    iso_apply->add_option("--code", iso_code_path, "code JSON file, or - for stdin")->required();
    iso_apply->add_option("--iso", iso_path, "isometry JSON file")->required();
    CLI::App* iso_compose = iso_cmd->add_subcommand("compose", "compose two isometries (first then second)");
    std::string iso_first, iso_second;
    add_field_options(iso_compose);
    iso_compose->add_option("--first", iso_first, "isometry JSON file applied first")->required();
    iso_compose->add_option("--second", iso_second, "isometry JSON file applied second")->required();

    CLI::App* search_cmd = app.add_subcommand("search", "scan systematic generators [I|X]");
    unsigned search_n = 0, search_k = 0, jobs = 1;
    std::string mode = "exhaustive";
    std::uint64_t seed = 0, samples = 0;
    std::string shard_text = "0/1";
    std::size_t max_exemplars = 4;
    std::string include_candidate;
    add_field_options(search_cmd);
    search_cmd->add_option("--n", search_n, "code length")->required();
    search_cmd->add_option("--k", search_k, "code dimension")->required();
    search_cmd->add_option("--mode", mode, "exhaustive or random")
        ->check(CLI::IsMember({"exhaustive", "random"}));
    CLI::Option* seed_opt = search_cmd->add_option("--seed", seed, "random mode: stream seed");
    CLI::Option* samples_opt = search_cmd->add_option("--samples", samples, "random mode: draw count");
    search_cmd->add_option("--shard", shard_text, "INDEX/TOTAL partition of the candidate order");
    search_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 512u));
    search_cmd->add_option("--max-exemplars", max_exemplars, "non-Gabidulin MRD examples to keep");
    search_cmd->add_option("--include-candidate", include_candidate,
                           "also classify the X block of this code file");

    CLI::App* examples_cmd = app.add_subcommand("examples", "built-in reference codes");
    bool verify = false;
    std::string emit_name;
    examples_cmd->add_flag("--verify", verify, "check all built-ins against expected verdicts");
    examples_cmd->add_option("--emit", emit_name, "print one example as a code file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (field_cmd->parsed()) {
            const FieldPtr f = field_from_options(q, m, modulus);
            json out = field_to_json(*f);
            out["size"] = f->size();
            out["alpha"] = f->alpha();
            std::ostringstream text;
            text << describe_field(*f) << "\nmodulus: " << modulus_string(*f) << "\nalpha: " << f->alpha()
                 << "\n";
            emit(out, format, text.str());
        } else if (construct_cmd->parsed()) {
            const FieldPtr f = field_from_options(q, m, modulus);
            const ConstructionKind kind =
                family == 4 ? ConstructionKind::construction4 : ConstructionKind::construction5;
            if (validate_only) {
                const GammaReport report = validate_gamma(kind, *f, gamma);
                std::ostringstream text;
                text << "gamma " << gamma << " for family " << family << " over " << describe_field(*f) << ": "
                     << (report.pass ? "accepted" : "rejected") << "\n";
                for (const GammaExclusion& e : report.exclusions) {
                    text << "  s=" << e.s << (e.sign == 0 ? "" : e.sign > 0 ? " (+)" : " (-)")
                         << " excluded value " << e.value << (e.in_base_field ? " [in F_q]" : " [outside F_q]")
                         << (e.collides ? "  COLLIDES" : "") << "\n";
                }
                emit(gamma_report_to_json(report), format, text.str());
            } else {
                const RankCode code =
                    kind == ConstructionKind::construction4 ? construct4(f, gamma) : construct5(f, gamma);
                std::ostringstream text;
                text << "MRD non-Gabidulin code over " << describe_field(*f) << ": n=" << code.n()
                     << " k=" << code.k() << "\n";
                emit(code_to_json(code), format, text.str());
            }
        } else if (check_cmd->parsed()) {
            const RankCode code = code_from_json(read_json_input(code_path));
            const std::vector<std::string> methods =
                method == "all" ? std::vector<std::string>{"distance", "subspace", "minor"}
                                : std::vector<std::string>{method};
            json verdicts = json::object();
            bool agree = true, first = true, is_mrd = false;
            std::ostringstream text;
            for (const std::string& mth : methods) {
                const MrdVerdict v = run_method(code, mth, full_gl);
                verdicts[mth] = mrd_verdict_to_json(v);
                agree = agree && (first || v.is_mrd == is_mrd);
                is_mrd = v.is_mrd;
                first = false;
                text << mth << ": " << (v.is_mrd ? "MRD" : "not MRD") << " (" << v.checked << " checked)\n";
            }
            json out{{"n", code.n()}, {"k", code.k()}, {"is_mrd", is_mrd}, {"verdicts", verdicts}};
            if (methods.size() > 1) out["agree"] = agree;
            emit(out, format, text.str());
        } else if (gab_build->parsed()) {
            const FieldPtr f = field_from_options(q, m, modulus);
            MooreSpec spec;
            spec.k = gab_k;
            spec.s = gab_s;
            if (!gab_points.empty()) {
                spec.g = gab_points;
            } else {
                if (gab_n == 0) fail(errc::bad_input, "gabidulin build needs --n or --g");
                for (unsigned j = 0; j < gab_n; ++j) spec.g.push_back(f->pow(f->alpha(), j));
            }
            const RankCode code = gabidulin(f, spec);
            std::ostringstream text;
            text << "Gabidulin code over " << describe_field(*f) << ": n=" << code.n() << " k=" << code.k()
                 << " s=" << gab_s << "\n";
            emit(code_to_json(code), format, text.str());
        } else if (gab_detect->parsed()) {
            const RankCode code = code_from_json(read_json_input(gab_code_path));
            const GabidulinVerdict v = detect_gabidulin(code, assume_mrd);
            std::ostringstream text;
            text << (v.is_generalized_gabidulin ? "generalized Gabidulin" : "not generalized Gabidulin") << "\n";
            for (const auto& [s, dim] : v.dims) {
                text << "  s=" << s << ": dim(C meet C^[s]) = " << dim << "\n";
            }
            emit(gabidulin_verdict_to_json(v), format, text.str());
        } else if (dual_cmd->parsed()) {
            const RankCode code = code_from_json(read_json_input(dual_path));
            const RankCode d = dual(code);
            std::ostringstream text;
            text << "dual code: n=" << d.n() << " k=" << d.k() << "\n";
            emit(code_to_json(d), format, text.str());
        } else if (distance_cmd->parsed()) {
            const RankCode code = code_from_json(read_json_input(distance_path));
            const DistanceScan scan = scan_min_rank(code);
            const std::size_t singleton = code.n() - code.k() + 1;
            json out{{"min_rank_distance", scan.min_rank},
                     {"singleton_bound", singleton},
                     {"is_mrd", scan.min_rank == singleton},
                     {"scanned", scan.scanned}};
            std::ostringstream text;
            text << "min rank distance " << scan.min_rank << " (Singleton bound " << singleton << ", "
                 << scan.scanned << " classes scanned)\n";
            emit(out, format, text.str());
        } else if (iso_random->parsed()) {
            const FieldPtr f = field_from_options(q, m, modulus);
            const Isometry iso = random_isometry(*f, iso_n, iso_seed);
            std::ostringstream text;
            text << "lambda=" << iso.lambda << " sigma=" << iso.sigma << " A: " << iso_n << "x" << iso_n << "\n";
            emit(isometry_to_json(iso), format, text.str());
        } else if (iso_apply->parsed()) {
            const RankCode code = code_from_json(read_json_input(iso_code_path));
            const Isometry iso = isometry_from_json(read_json_input(iso_path));
            const RankCode image = apply(code, iso);
            std::ostringstream text;
            text << "image code: n=" << image.n() << " k=" << image.k() << "\n";
            emit(code_to_json(image), format, text.str());
        } else if (iso_compose->parsed()) {
            const FieldPtr f = field_from_options(q, m, modulus);
            const Isometry composed =
                compose(*f, isometry_from_json(read_json_input(iso_first)), isometry_from_json(read_json_input(iso_second)));
            std::ostringstream text;
            text << "lambda=" << composed.lambda << " sigma=" << composed.sigma << "\n";
            emit(isometry_to_json(composed), format, text.str());
        } else if (search_cmd->parsed()) {
            SearchSpace space;
            space.field = field_from_options(q, m, modulus);
            space.n = search_n;
            space.k = search_k;
            space.jobs = jobs;
            space.max_exemplars = max_exemplars;
            const ShardOption shard = parse_shard(shard_text);
            space.shard_index = shard.index;
            space.shard_total = shard.total;
            if (mode == "random") {
                if (!*seed_opt || !*samples_opt) {
                    fail(errc::bad_input, "random mode requires --seed and --samples");
                }
                space.mode = SearchMode::random;
                space.seed = seed;
                space.sample_count = samples;
            }
            const SearchReport report = run_search(space);
            json out = search_report_to_json(report, space.field);
            out["parameters"] = json{{"field", field_to_json(*space.field)},
                                     {"n", space.n},
                                     {"k", space.k},
                                     {"mode", mode},
                                     {"seed", seed},
                                     {"samples", samples},
                                     {"jobs", jobs}};
            std::ostringstream text;
            text << "scanned " << report.candidates_scanned << ": non-MRD " << report.non_mrd
                 << ", MRD Gabidulin " << report.mrd_gabidulin << ", MRD non-Gabidulin "
                 << report.mrd_non_gabidulin << " (" << report.seconds << " s)\n";
            if (!include_candidate.empty()) {
                const RankCode given = code_from_json(read_json_input(include_candidate));
                if (given.n() != space.n || given.k() != space.k || !(*given.field() == *space.field)) {
                    fail(errc::bad_input, "--include-candidate parameters disagree with the search space");
                }
                const Matrix sys = given.systematic_form();
                const Matrix x = submatrix(sys, 0, space.k, space.k, space.n - space.k);
                const CandidateVerdict v = classify_candidate(space.field, space.n, space.k, x);
                json inc{{"classification", classification_name(v.classification)},
                         {"mrd", mrd_verdict_to_json(v.mrd)}};
                if (v.gabidulin) inc["gabidulin"] = gabidulin_verdict_to_json(*v.gabidulin);
                out["included_candidate"] = inc;
                text << "included candidate: " << classification_name(v.classification) << "\n";
            }
            emit(out, format, text.str());
        } else if (examples_cmd->parsed()) {
            return cmd_examples(verify, emit_name, format);
        }
        return 0;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: invalid JSON input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
