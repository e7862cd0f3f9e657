#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mhc/ghc.hpp"
#include "mhc/parser.hpp"
#include "mhc/render.hpp"
#include "mhc/table_io.hpp"

namespace {

constexpr int kExitInputError = 2;
constexpr int kExitCriterionFails = 3;

struct Options {
    std::string format = "text";
    bool strict = false;
    std::vector<std::string> load_files;
};

mhc::MotivicClass eval_text(const std::string& text, mhc::Registry& registry) {
    mhc::RingExpr expr = mhc::parse_expression(text);
    return mhc::evaluate(expr, registry);
}

void load_tables(const Options& options, mhc::Registry& registry) {
    for (const auto& path : options.load_files) {
        std::vector<std::string> warnings;
        mhc::VarietyTable table = mhc::load_table_file(path, &warnings);
        for (const auto& warning : warnings)
            std::cerr << "warning: " << warning << "\n";
        registry.register_table(std::move(table));
    }
}

void warn_heuristic(const mhc::Realized& value) {
    if (value.heuristic)
        std::cerr << "warning: tensor-heuristic realization; level placement of composite "
                     "classes is a lower bound only\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symbolic calculator in the Grothendieck ring of varieties: computes blow-up "
                 "normal forms, realizes classes in the ring of filtered Hodge structures under "
                 "the coniveau and level filtrations, and decides the filtered-Poincare "
                 "criterion for the generalized Hodge conjecture."};
    app.fallthrough();
    app.require_subcommand(1);

    Options options;
    app.add_option("--format", options.format, "output format")
        ->check(CLI::IsMember({"text", "machine"}));
    app.add_flag("--strict", options.strict, "exit 3 when the criterion fails");
    app.add_option_function<std::string>(
           "--load",
           [&options](const std::string& path) { options.load_files.push_back(path); },
           "table file to register (repeatable, one file per flag)")
        ->trigger_on_parse();

    std::string expr_text;
    std::string expr_text_b;
    std::string filtration = "coniveau";
    bool graded = false;
    int precision = 0;
    std::vector<std::string> table_files;

    CLI::App* normalize = app.add_subcommand("normalize", "print the normal form of a class");
    normalize->add_option("expr", expr_text, "class expression")->required();

    CLI::App* fp = app.add_subcommand("fp", "print a filtered Poincare polynomial");
    fp->add_option("--filtration", filtration, "coniveau or level")
        ->check(CLI::IsMember({"coniveau", "level"}));
    fp->add_flag("--graded", graded, "dump raw graded dimensions instead");
    fp->add_option("expr", expr_text, "class expression")->required();

    CLI::App* ghc = app.add_subcommand("ghc", "decide the criterion for a class");
    ghc->add_option("expr", expr_text, "class expression")->required();

    CLI::App* compare = app.add_subcommand("compare", "compare two classes modulo F^m");
    compare->add_option("--precision", precision, "dimension-filtration precision m")
        ->required();
    compare->add_option("expr1", expr_text, "first class expression")->required();
    compare->add_option("expr2", expr_text_b, "second class expression")->required();

    CLI::App* transfer =
        app.add_subcommand("transfer", "transfer a criterion verdict between equal classes");
    transfer->add_option("--precision", precision, "dimension-filtration precision m")
        ->required();
    transfer->add_option("expr1", expr_text, "first class expression")->required();
    transfer->add_option("expr2", expr_text_b, "second class expression")->required();

    CLI::App* load = app.add_subcommand("load", "validate and register table files");
    load->add_option("files", table_files, "table files")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    bool machine = options.format == "machine";
    try {
        mhc::Registry registry;
        load_tables(options, registry);

        std::string output;
        int exit_code = 0;
        if (app.got_subcommand(normalize)) {
            mhc::MotivicClass value = eval_text(expr_text, registry);
            output = machine ? mhc::machine_mc(value) : mhc::to_string(value) + "\n";
        } else if (app.got_subcommand(fp)) {
            mhc::MotivicClass value = eval_text(expr_text, registry);
            mhc::Realized realized = filtration == "level"
                                         ? mhc::realize_level(value, registry)
                                         : mhc::realize_coniveau(value, registry);
            warn_heuristic(realized);
            if (graded) {
                mhc::FPPolynomial dump = mhc::graded_dimensions(realized.cls);
                output = machine ? mhc::machine_fp(dump, "gr")
                                 : "graded: " + mhc::to_string(dump) + "\n";
            } else {
                mhc::FPPolynomial poly = mhc::filtered_poincare(realized.cls);
                output = machine ? mhc::machine_fp(poly) : mhc::to_string(poly) + "\n";
            }
        } else if (app.got_subcommand(ghc)) {
            mhc::MotivicClass value = eval_text(expr_text, registry);
            mhc::GhcReport report = mhc::ghc_check(value, registry);
            output = machine ? mhc::machine_ghc(report) : mhc::text_ghc(report);
            if (options.strict && report.overall == mhc::GhcVerdict::criterion_fails)
                exit_code = kExitCriterionFails;
        } else if (app.got_subcommand(compare)) {
            mhc::MotivicClass a = eval_text(expr_text, registry);
            mhc::MotivicClass b = eval_text(expr_text_b, registry);
            mhc::MotivicClass difference =
                mhc::dimension_truncate(a - b, precision, registry);
            bool equal = difference.is_zero();
            output = machine ? mhc::machine_compare(difference, equal)
                             : mhc::text_compare(difference, equal, precision);
        } else if (app.got_subcommand(transfer)) {
            mhc::MotivicClass a = eval_text(expr_text, registry);
            mhc::MotivicClass b = eval_text(expr_text_b, registry);
            mhc::TransferReport report = mhc::ghc_transfer(a, b, precision, registry);
            output = machine ? mhc::machine_transfer(report) : mhc::text_transfer(report, a, b);
        } else if (app.got_subcommand(load)) {
            std::ostringstream out;
            for (const auto& path : table_files) {
                std::vector<std::string> warnings;
                mhc::VarietyTable table = mhc::load_table_file(path, &warnings);
                for (const auto& warning : warnings)
                    std::cerr << "warning: " << warning << "\n";
                const mhc::GeneratorSymbol& sym = registry.register_table(std::move(table));
                out << "loaded " << sym.name << " dim " << sym.dimension << "\n";
            }
            output = out.str();
        }
        // Output is composed fully before printing, so machine mode never
        // emits a partial result when evaluation fails.
        std::fputs(output.c_str(), stdout);
        return exit_code;
    } catch (const mhc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
