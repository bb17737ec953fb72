// Command-line front end: one subcommand per analysis, three matrix
// formats, optional JSON output.
//
// Exit codes: 0 success (and, for `report`, all consistency checks passed),
// 1 input is not a valid RGCM, 2 parse or I/O error, 3 numerical failure,
// 4 consistency-check failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rgcm/criteria.hpp"
#include "rgcm/errors.hpp"
#include "rgcm/generate.hpp"
#include "rgcm/hyperbolic.hpp"
#include "rgcm/io.hpp"
#include "rgcm/lu.hpp"
#include "rgcm/report.hpp"
#include "rgcm/spectral.hpp"
#include "rgcm/structure.hpp"
#include "rgcm/symmetrize.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotRgcm = 1;
constexpr int kExitParse = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitConsistency = 4;

struct Options {
    std::vector<std::string> inputs{"-"};
    std::string format = "auto";
    std::string output;
    double tol = 1e-9;
    int exhaustive_cap = rgcm::kDefaultExhaustiveCap;
    std::string mode = "maximal";
    bool json = false;
    std::uint64_t seed = 0;
    // generate
    std::size_t n = 3;
    std::string target = "finite";
    double density = 0.5;
    double margin = 0.5;
};

rgcm::MatrixFormat parse_format(const std::string& f) {
    if (f == "auto") return rgcm::MatrixFormat::Auto;
    if (f == "text") return rgcm::MatrixFormat::Text;
    if (f == "csv") return rgcm::MatrixFormat::Csv;
    if (f == "json") return rgcm::MatrixFormat::Json;
    throw CLI::ValidationError("--format", "expected auto|text|csv|json");
}

rgcm::GeneratorTarget parse_target(const std::string& t) {
    if (t == "finite") return rgcm::GeneratorTarget::Finite;
    if (t == "affine") return rgcm::GeneratorTarget::Affine;
    if (t == "indefinite") return rgcm::GeneratorTarget::Indefinite;
    if (t == "hyperbolic") return rgcm::GeneratorTarget::Hyperbolic;
    if (t == "strictly-hyperbolic" || t == "strictly_hyperbolic")
        return rgcm::GeneratorTarget::StrictlyHyperbolic;
    throw CLI::ValidationError("--target", "unknown target '" + t + "'");
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw rgcm::ParseError(0, 0, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Runs one analysis command against one parsed matrix; returns exit code.
int dispatch(const std::string& cmd, const rgcm::SquareMatrix& a, const Options& opt,
             std::ostream& out) {
    using namespace rgcm;
    const SubmatrixMode mode = opt.mode == "exhaustive" ? SubmatrixMode::Exhaustive
                                                        : SubmatrixMode::Maximal;
    if (cmd == "validate") {
        ValidationReport r = validate(a);
        out << (opt.json ? to_json_string(r) + "\n" : to_text(r));
        return r.is_rgcm ? kExitOk : kExitNotRgcm;
    }
    if (cmd == "classify") {
        Classification c = classify(a, opt.tol);
        out << (opt.json ? to_json_string(c) + "\n" : to_text(c));
        return kExitOk;
    }
    if (cmd == "shift") {
        ShiftResult s = critical_shift(a, opt.tol);
        out << (opt.json ? to_json_string(s) + "\n" : to_text(s));
        return kExitOk;
    }
    if (cmd == "minors") {
        MinorReport m = minor_report(a, opt.exhaustive_cap);
        out << (opt.json ? to_json_string(m) + "\n" : to_text(m));
        return kExitOk;
    }
    if (cmd == "inverse") {
        InverseSignSummary s = inverse_sign(a);
        out << (opt.json ? to_json_string(s) + "\n" : to_text(s));
        return kExitOk;
    }
    if (cmd == "hyperbolic") {
        HyperbolicReport h = hyperbolic_report(a, mode, opt.tol);
        out << (opt.json ? to_json_string(h) + "\n" : to_text(h));
        return kExitOk;
    }
    if (cmd == "symmetrize") {
        Symmetrization s = symmetrize(a, opt.tol);
        out << (opt.json ? to_json_string(s) + "\n" : to_text(s));
        return kExitOk;
    }
    if (cmd == "report") {
        ReportOptions ropt{opt.tol, opt.exhaustive_cap, mode, opt.seed, 100};
        FullReport r = build_full_report(a, ropt);
        out << (opt.json ? to_json_string(r) + "\n" : to_text(r));
        return r.all_consistent ? kExitOk : kExitConsistency;
    }
    throw std::logic_error("unknown command " + cmd);
}

int run_inputs(const std::string& cmd, const Options& opt, std::ostream& out) {
    int worst = kExitOk;
    for (const std::string& path : opt.inputs) {
        int code = kExitOk;
        try {
            const rgcm::SquareMatrix a =
                rgcm::parse_matrix(read_input(path), parse_format(opt.format));
            code = dispatch(cmd, a, opt, out);
        } catch (const rgcm::ParseError& e) {
            std::cerr << "rgcm: " << path << ": " << e.what() << '\n';
            code = kExitParse;
        } catch (const rgcm::DimensionMismatchError& e) {
            std::cerr << "rgcm: " << path << ": " << e.what() << '\n';
            code = kExitParse;
        } catch (const std::invalid_argument& e) {
            std::cerr << "rgcm: " << path << ": " << e.what() << '\n';
            code = kExitParse;
        } catch (const rgcm::NotRgcmError& e) {
            std::cerr << "rgcm: " << path << ": " << e.what() << '\n';
            code = kExitNotRgcm;
        } catch (const rgcm::Error& e) {
            // NoConvergence, Singular, attempts exhausted: numerical failures.
            std::cerr << "rgcm: " << path << ": " << e.what() << '\n';
            code = kExitNumerical;
        }
        worst = std::max(worst, code);
    }
    return worst;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classification toolkit for real generalized Cartan matrices"};
    app.require_subcommand(1);

    Options opt;
    const std::vector<std::string> analysis_commands = {
        "validate",  "classify",   "shift",  "minors",
        "inverse",   "hyperbolic", "symmetrize", "report"};

    std::vector<CLI::App*> subs;
    for (const std::string& name : analysis_commands) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--input", opt.inputs, "Input path, or '-' for stdin")
            ->capture_default_str();
        sub->add_option("--format", opt.format, "auto|text|csv|json")
            ->capture_default_str();
        sub->add_option("--tol", opt.tol, "Classification tolerance")
            ->capture_default_str();
        sub->add_option("--exhaustive-cap", opt.exhaustive_cap,
                        "Max dimension for exhaustive minor enumeration")
            ->capture_default_str();
        sub->add_option("--mode", opt.mode, "maximal|exhaustive submatrix inspection")
            ->capture_default_str();
        sub->add_flag("--json", opt.json, "Emit a JSON document");
        sub->add_option("--seed", opt.seed, "Seed for sampled checks")
            ->capture_default_str();
        sub->add_option("--output", opt.output, "Write output to a file");
        subs.push_back(sub);
    }

    CLI::App* gen = app.add_subcommand("generate", "Generate a matrix of the given type");
    gen->add_option("--n", opt.n, "Dimension")->capture_default_str();
    gen->add_option("--target", opt.target,
                    "finite|affine|indefinite|hyperbolic|strictly-hyperbolic")
        ->capture_default_str();
    gen->add_option("--density", opt.density, "Fraction of extra symmetric pairs")
        ->capture_default_str();
    gen->add_option("--margin", opt.margin, "Spectral margin |s - rho|")
        ->capture_default_str();
    gen->add_option("--seed", opt.seed, "Generator seed")->capture_default_str();
    gen->add_option("--output", opt.output, "Write output to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    std::ofstream file_out;
    std::ostream* out = &std::cout;
    if (!opt.output.empty()) {
        file_out.open(opt.output, std::ios::binary);
        if (!file_out) {
            std::cerr << "rgcm: cannot open output file '" << opt.output << "'\n";
            return kExitParse;
        }
        out = &file_out;
    }

    try {
        if (gen->parsed()) {
            rgcm::GeneratorSpec spec;
            spec.n = opt.n;
            spec.target = parse_target(opt.target);
            spec.density = opt.density;
            spec.margin = opt.margin;
            spec.seed = opt.seed;
            *out << rgcm::serialize_matrix(rgcm::generate(spec), rgcm::MatrixFormat::Text);
            return kExitOk;
        }
        for (std::size_t i = 0; i < analysis_commands.size(); ++i)
            if (subs[i]->parsed())
                return run_inputs(analysis_commands[i], opt, *out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "rgcm: " << e.what() << '\n';
        return kExitParse;
    } catch (const rgcm::InfeasibleSpecError& e) {
        std::cerr << "rgcm: " << e.what() << '\n';
        return kExitParse;
    } catch (const rgcm::Error& e) {
        std::cerr << "rgcm: " << e.what() << '\n';
        return kExitNumerical;
    }
    return kExitParse;
}
