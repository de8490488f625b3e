#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "nofactor/antitorus.hpp"
#include "nofactor/complex.hpp"
#include "nofactor/develop.hpp"
#include "nofactor/enumerate.hpp"
#include "nofactor/errors.hpp"
#include "nofactor/json_io.hpp"
#include "nofactor/manifest.hpp"
#include "nofactor/obstruction.hpp"
#include "nofactor/staircase.hpp"
#include "nofactor/word.hpp"

namespace nofactor::cli {
namespace {

constexpr const char* kSchemaHelp =
    "Artifacts are JSON objects with a versioned \"schema\" field:\n"
    "  nofactor.validation/1   validate\n"
    "  nofactor.census/1       enumerate\n"
    "  nofactor.rectangle/1    develop\n"
    "  nofactor.antitorus/1    antitorus\n"
    "  nofactor.gamma/1        gamma\n"
    "  nofactor.obstruction/1  obstruct (csv: n,diam,L)\n"
    "  nofactor.wellsep/1      wellsep\n"
    "  nofactor.nonacyl/1      staircase (dot: contact graph)\n"
    "Every artifact carries \"runDigest\", the SHA-256 of the run's inputs and\n"
    "parameters; the full manifest goes to <out>.manifest.json or --manifest.\n"
    "Exit codes: 0 success, 1 input error or rejected hypothesis, 2 budget exceeded.\n";

struct Options {
    std::string complex_path;
    std::string w1_text;
    std::string w2_text;
    std::string bottom_text;
    std::string left_text;
    std::string bounds_text;
    std::int64_t max_tops = SearchBounds{}.max_tops;
    std::int64_t max_periods = SearchBounds{}.max_periods;
    int n = 1;
    int nmax = 8;
    int hcount = 2;
    int vcount = 2;
    bool dump_cells = false;
    StairParams stairs{0, 0, 0, 1};
    std::optional<int> p;
    std::string format = "json";
    std::string out_path;
    std::string manifest_path;
    std::string certificate_path;
    unsigned jobs = 1;
};

class Run {
public:
    Run(std::string subcommand, const Options& opts, std::ostream& out) : opts_(opts), out_(out) {
        manifest_.subcommand = std::move(subcommand);
    }

    RunManifest& manifest() { return manifest_; }

    void add_input(const std::string& role, const std::string& path) {
        manifest_.inputs.push_back({role, sha256_file(path)});
    }

    void emit(json artifact) {
        artifact["runDigest"] = manifest_.run_digest();
        write(artifact.dump(2) + "\n");
    }

    /// Non-JSON artifacts carry the digest in a leading comment line.
    void emit_text(const std::string& comment_prefix, const std::string& body) {
        write(comment_prefix + " runDigest: " + manifest_.run_digest() + "\n" + body);
    }

    void finish() {
        std::string path = opts_.manifest_path;
        if (path.empty() && !opts_.out_path.empty()) {
            path = opts_.out_path + ".manifest.json";
        }
        if (path.empty()) {
            return;
        }
        write_file(path, manifest_.to_json().dump(2) + "\n");
    }

private:
    void write(const std::string& bytes) {
        const std::string role = opts_.out_path.empty() ? "stdout" : opts_.out_path;
        manifest_.outputs.push_back({role, sha256_hex(bytes)});
        if (opts_.out_path.empty()) {
            out_ << bytes;
        } else {
            write_file(opts_.out_path, bytes);
        }
    }

    static void write_file(const std::string& path, const std::string& bytes) {
        std::ofstream f(path, std::ios::binary);
        if (!f) {
            throw InvalidParams("cannot write " + path);
        }
        f << bytes;
    }

    const Options& opts_;
    std::ostream& out_;
    RunManifest manifest_;
};

SearchBounds bounds_from(const Options& opts) {
    SearchBounds b;
    if (!opts.bounds_text.empty()) {
        const auto comma = opts.bounds_text.find(',');
        if (comma == std::string::npos) {
            throw InvalidParams("--bounds expects K,J");
        }
        try {
            b.commuting_k = std::stoi(opts.bounds_text.substr(0, comma));
            b.commuting_j = std::stoi(opts.bounds_text.substr(comma + 1));
        } catch (const std::exception&) {
            throw InvalidParams("--bounds expects K,J");
        }
    }
    b.max_tops = opts.max_tops;
    b.max_periods = opts.max_periods;
    if (b.commuting_k < 1 || b.commuting_j < 1 || b.max_tops < 1 || b.max_periods < 1) {
        throw InvalidParams("bounds must be positive");
    }
    return b;
}

SquareComplex read_complex(Run& run, const Options& opts) {
    run.add_input("complex", opts.complex_path);
    return load_complex(opts.complex_path);
}

AntiTorusQuery read_query(Run& run, const Options& opts) {
    SquareComplex complex = read_complex(run, opts);
    PeriodicWord w1(parse_word(complex, opts.w1_text, EdgeClass::horizontal));
    PeriodicWord w2(parse_word(complex, opts.w2_text, EdgeClass::vertical));
    run.manifest().parameters["w1"] = format_word(complex, w1.period());
    run.manifest().parameters["w2"] = format_word(complex, w2.period());
    return AntiTorusQuery(std::move(complex), std::move(w1), std::move(w2));
}

json query_json(const AntiTorusQuery& q) {
    return {{"w1", format_word(q.complex(), q.w1().period())}, {"w2", format_word(q.complex(), q.w2().period())}};
}

int cmd_validate(Run& run, const Options& opts) {
    const SquareComplex complex = read_complex(run, opts);
    const ValidationReport report = validate_csc(complex);
    run.emit(to_json(complex, report));
    return report.is_csc ? kExitOk : kExitInput;
}

int cmd_enumerate(Run& run, const Options& opts) {
    run.manifest().parameters = {{"h", opts.hcount}, {"v", opts.vcount}};
    EnumerateOptions eo;
    eo.jobs = opts.jobs;
    const auto census = enumerate_csc(opts.hcount, opts.vcount, eo);
    json complexes = json::array();
    for (const auto& c : census) {
        complexes.push_back(serialize_complex(c));
    }
    run.emit({{"schema", kCensusSchema},
              {"h", opts.hcount},
              {"v", opts.vcount},
              {"count", census.size()},
              {"complexes", complexes}});
    return kExitOk;
}

int cmd_develop(Run& run, const Options& opts) {
    const SquareComplex complex = read_complex(run, opts);
    const Word bottom = parse_word(complex, opts.bottom_text, EdgeClass::horizontal);
    const Word left = parse_word(complex, opts.left_text, EdgeClass::vertical);
    run.manifest().parameters = {{"bottom", format_word(complex, bottom)},
                                 {"left", format_word(complex, left)},
                                 {"dumpCells", opts.dump_cells}};
    const Rectangle rect =
        fill_rectangle(complex, bottom, left, opts.dump_cells ? CellMode::keep_cells : CellMode::boundary_only);
    run.emit(rectangle_to_json(complex, rect));
    return kExitOk;
}

int cmd_antitorus(Run& run, const Options& opts) {
    const AntiTorusQuery q = read_query(run, opts);
    const SearchBounds bounds = bounds_from(opts);
    run.manifest().bounds = {{"K", bounds.commuting_k}, {"J", bounds.commuting_j}};
    const auto relation = commuting_powers_search(q, bounds.commuting_k, bounds.commuting_j);
    json j{{"schema", kAntiTorusSchema},
           {"query", query_json(q)},
           {"bounds", {{"K", bounds.commuting_k}, {"J", bounds.commuting_j}}},
           {"antiTorusCandidate", !relation.has_value()}};
    j["relation"] = relation ? json{{"k", relation->first}, {"j", relation->second}} : json(nullptr);
    run.emit(std::move(j));
    return kExitOk;
}

int cmd_gamma(Run& run, const Options& opts) {
    const AntiTorusQuery q = read_query(run, opts);
    const SearchBounds bounds = bounds_from(opts);
    run.manifest().parameters["n"] = opts.n;
    run.manifest().bounds = bounds;
    const GammaResult g = overlap_gamma(q, opts.n, bounds);
    json j = g;
    j["schema"] = kGammaSchema;
    j["query"] = query_json(q);
    j["boundsUsed"] = bounds;
    run.emit(std::move(j));
    return kExitOk;
}

int cmd_obstruct(Run& run, const Options& opts) {
    const AntiTorusQuery q = read_query(run, opts);
    const SearchBounds bounds = bounds_from(opts);
    run.manifest().parameters["nmax"] = opts.nmax;
    run.manifest().parameters["format"] = opts.format;
    run.manifest().bounds = bounds;
    const ObstructionTable table = obstruction_table(q, opts.nmax, bounds, opts.jobs);
    if (opts.format == "csv") {
        run.emit_text("#", obstruction_csv(table));
    } else {
        json j = table;
        j["query"] = query_json(q);
        run.emit(std::move(j));
    }
    const bool all_ok = std::all_of(table.rows.begin(), table.rows.end(), [](const auto& r) { return r.ok(); });
    return all_ok ? kExitOk : kExitBudget;
}

int cmd_wellsep(Run& run, const Options& opts) {
    const AntiTorusQuery q = read_query(run, opts);
    const SearchBounds bounds = bounds_from(opts);
    run.manifest().parameters["nmax"] = opts.nmax;
    run.manifest().bounds = bounds;
    json rows = json::array();
    for (int n = 1; n <= opts.nmax; ++n) {
        rows.push_back(well_separation(q, n, bounds));
    }
    run.emit({{"schema", kWellSeparationSchema}, {"query", query_json(q)}, {"boundsUsed", bounds}, {"rows", rows}});
    return kExitOk;
}

int cmd_staircase(Run& run, const Options& opts) {
    const int p = opts.p.value_or(opts.stairs.steps);
    run.manifest().parameters = {{"stairs", opts.stairs}, {"p", p}, {"format", opts.format}};
    if (opts.format == "dot") {
        const Staircase stairs = build_staircase(opts.stairs);
        const WallSet walls = compute_walls(stairs.window);
        const ContactGraph graph(stairs.window, walls);
        run.emit_text("//", contact_graph_dot(stairs, walls, graph));
        return kExitOk;
    }
    const NonAcylCertificate cert = nonacyl_certificate(opts.stairs, p);
    run.emit(cert);
    return cert.valid() ? kExitOk : kExitInput;
}

json strip_digest(json j) {
    j.erase("runDigest");
    return j;
}

int cmd_certify(Run& run, const Options& opts, std::ostream& err) {
    run.add_input("certificate", opts.certificate_path);
    json stored;
    {
        std::ifstream in(opts.certificate_path);
        if (!in) {
            throw InvalidParams("cannot read " + opts.certificate_path);
        }
        try {
            stored = json::parse(in);
        } catch (const json::parse_error& e) {
            throw ParseError(0, std::string("certificate is not JSON: ") + e.what());
        }
    }
    const std::string schema = stored.value("schema", "");
    json rederived;
    bool valid = true;
    try {
        if (schema == kCertificateSchema) {
            const StairParams params = stored.at("params").get<StairParams>();
            const NonAcylCertificate cert = nonacyl_certificate(params, stored.at("p").get<int>());
            valid = cert.valid();
            rederived = cert;
        } else if (schema == kObstructionSchema) {
            if (opts.complex_path.empty()) {
                throw InvalidParams("certifying an obstruction table needs --complex");
            }
            Options q_opts = opts;
            q_opts.w1_text = stored.at("query").at("w1").get<std::string>();
            q_opts.w2_text = stored.at("query").at("w2").get<std::string>();
            const AntiTorusQuery q = read_query(run, q_opts);
            const ObstructionTable table = stored.get<ObstructionTable>();
            const ObstructionTable fresh =
                obstruction_table(q, static_cast<int>(table.rows.size()), table.bounds, opts.jobs);
            rederived = fresh;
            rederived["query"] = query_json(q);
            valid = fresh == table;
        } else {
            throw InvalidParams("certify supports " + std::string(kCertificateSchema) + " and " + kObstructionSchema +
                                ", got \"" + schema + "\"");
        }
    } catch (const json::exception& e) {
        throw ParseError(0, std::string("malformed certificate: ") + e.what());
    }
    const bool matches = strip_digest(stored) == rederived;
    run.emit({{"schema", "nofactor.certify/1"},
              {"certifiedSchema", schema},
              {"matches", matches},
              {"valid", valid}});
    if (!matches) {
        err << "certify: stored artifact differs from the re-derived one\n";
    }
    return matches && valid ? kExitOk : kExitInput;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Square complex toolkit: development, anti-torus screens, obstruction tables, staircase certificates"};
    app.footer(kSchemaHelp);
    app.require_subcommand(1);
    Options opts;

    auto add_output = [&](CLI::App* sub, bool with_format) {
        sub->add_option("--out", opts.out_path, "Artifact path (default stdout)");
        sub->add_option("--manifest", opts.manifest_path, "Manifest path (default <out>.manifest.json)");
        if (with_format) {
            sub->add_option("--format", opts.format, "json, csv or dot");
        }
    };
    auto add_query = [&](CLI::App* sub) {
        sub->add_option("--complex", opts.complex_path, "Presentation file (.sqc)")->required();
        sub->add_option("--w1", opts.w1_text, "Horizontal period")->required();
        sub->add_option("--w2", opts.w2_text, "Vertical period")->required();
        sub->add_option("--bounds", opts.bounds_text, "Commuting screen bounds K,J");
        sub->add_option("--max-tops", opts.max_tops, "Repetition search budget");
        sub->add_option("--max-periods", opts.max_periods, "Overlap scan budget, in periods of w1");
    };

    auto* validate = app.add_subcommand("validate", "Check the complete square complex condition");
    validate->add_option("--complex", opts.complex_path)->required();
    add_output(validate, false);

    auto* enumerate = app.add_subcommand("enumerate", "One-vertex census up to relabeling");
    enumerate->add_option("--hedges", opts.hcount, "Horizontal edge count")->required();
    enumerate->add_option("--vedges", opts.vcount, "Vertical edge count")->required();
    enumerate->add_option("--jobs", opts.jobs);
    add_output(enumerate, false);

    auto* develop = app.add_subcommand("develop", "Fill a rectangle from its bottom and left words");
    develop->add_option("--complex", opts.complex_path)->required();
    develop->add_option("--bottom", opts.bottom_text)->required();
    develop->add_option("--left", opts.left_text)->required();
    develop->add_flag("--dump-cells", opts.dump_cells, "Include the cell grid");
    add_output(develop, false);

    auto* antitorus = app.add_subcommand("antitorus", "Screen (w1, w2) for commuting powers");
    add_query(antitorus);
    add_output(antitorus, false);

    auto* gamma = app.add_subcommand("gamma", "Overlap path for one n");
    add_query(gamma);
    gamma->add_option("--n", opts.n)->required();
    add_output(gamma, false);

    auto* obstruct = app.add_subcommand("obstruct", "Projection diameters for n = 1..nmax");
    add_query(obstruct);
    obstruct->add_option("--nmax", opts.nmax)->required();
    obstruct->add_option("--jobs", opts.jobs);
    add_output(obstruct, true);

    auto* wellsep = app.add_subcommand("wellsep", "Crossing sets and facing triples for n = 1..nmax");
    add_query(wellsep);
    wellsep->add_option("--nmax", opts.nmax)->required();
    add_output(wellsep, false);

    auto* staircase = app.add_subcommand("staircase", "Build the staircase window and certify the contact distances");
    staircase->add_option("--L", opts.stairs.overlap)->required();
    staircase->add_option("--r", opts.stairs.shift)->required();
    staircase->add_option("--steps", opts.stairs.steps)->required();
    staircase->add_option("--margin", opts.stairs.margin);
    staircase->add_option("--p", opts.p, "Family index to certify (default steps)");
    add_output(staircase, true);

    auto* certify = app.add_subcommand("certify", "Re-derive a stored certificate or table and compare");
    certify->add_option("--certificate", opts.certificate_path)->required();
    certify->add_option("--complex", opts.complex_path, "Presentation, for obstruction tables");
    certify->add_option("--jobs", opts.jobs);
    add_output(certify, false);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n\n" << app.help();
        return kExitInput;
    }

    if (opts.format != "json" && opts.format != "csv" && opts.format != "dot") {
        err << "unknown --format " << opts.format << "\n" << kSchemaHelp;
        return kExitInput;
    }
    if ((opts.format == "csv" && !obstruct->parsed()) || (opts.format == "dot" && !staircase->parsed())) {
        err << "--format " << opts.format << " is not available for this subcommand\n";
        return kExitInput;
    }

    CLI::App* sub = app.get_subcommands().front();
    Run run(sub->get_name(), opts, out);
    try {
        int code = kExitOk;
        const std::string& name = sub->get_name();
        if (name == "validate") {
            code = cmd_validate(run, opts);
        } else if (name == "enumerate") {
            code = cmd_enumerate(run, opts);
        } else if (name == "develop") {
            code = cmd_develop(run, opts);
        } else if (name == "antitorus") {
            code = cmd_antitorus(run, opts);
        } else if (name == "gamma") {
            code = cmd_gamma(run, opts);
        } else if (name == "obstruct") {
            code = cmd_obstruct(run, opts);
        } else if (name == "wellsep") {
            code = cmd_wellsep(run, opts);
        } else if (name == "staircase") {
            code = cmd_staircase(run, opts);
        } else {
            code = cmd_certify(run, opts, err);
        }
        run.finish();
        return code;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const HypothesisRejected& e) {
        err << "hypothesis rejected: " << e.what() << '\n';
        return kExitInput;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }
}

}  // namespace nofactor::cli
