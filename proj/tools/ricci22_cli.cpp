#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include <ricci22/json_io.hpp>

using namespace ricci22;

namespace {

int run_classify(const std::string& infile, const std::string& mode, double tol,
                 const std::string& basis, const std::string& otype, const std::string& format) {
    json j;
    try {
        if (infile.empty() || infile == "-") {
            std::cin >> j;
        } else {
            std::ifstream f(infile);
            if (!f) {
                std::cerr << "error: cannot open " << infile << "\n";
                return 2;
            }
            f >> j;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: invalid JSON: " << e.what() << "\n";
        return 2;
    }
    try {
        // flag overrides
        if (!mode.empty()) j["mode"] = mode;
        if (!basis.empty()) j["basis"] = basis;
        if (tol > 0) j["tolerances"]["zero_tol"] = tol;
        InputDocument doc = parse_input(j);
        OType ot = OType::PP;
        if (otype == "mm") ot = OType::MM;
        else if (otype == "mp") ot = OType::MP;
        else if (otype == "pm") ot = OType::PM;
        else if (!otype.empty() && otype != "pp") {
            std::cerr << "error: --otype must be pp, mm, mp or pm\n";
            return 2;
        }
        json rep = cmd_classify(doc, ot);
        if (format == "text") {
            std::cout << "type:        " << rep["classification"]["type"].get<std::string>() << "\n"
                      << "segre:       " << rep["classification"]["segre"].get<std::string>() << "\n"
                      << "row:         " << rep["table2_row"].get<std::string>() << "\n"
                      << "spinor type: " << rep["spinor_type"].get<std::string>() << "\n";
            const auto& loc = rep["singular_locus"];
            if (loc["everything_singular"].get<bool>()) {
                std::cout << "singular:    the whole quadric\n";
            } else {
                std::cout << "singular:    " << loc["points"].size() << " point(s), "
                          << loc["curves"].size() << " curve component(s)\n";
                for (const auto& p : loc["points"])
                    std::cout << "  - " << p["kind"].get<std::string>() << "\n";
            }
        } else {
            std::cout << rep.dump(2) << "\n";
        }
        return 0;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const NotSelfAdjoint& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const NotSymmetric& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const ModeMismatch& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const IllConditioned& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const NonRationalInput& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}

int run_gen(const std::string& subtype, unsigned seed) {
    try {
        std::cout << cmd_gen(subtype, seed).dump(2) << "\n";
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << "known subtypes:\n";
        for (const auto& row : subtype_rows()) std::cerr << "  " << row.id << "\n";
        return 2;
    }
}

int run_table2(const std::string& format) {
    try {
        if (format == "json") std::cout << cmd_table2().dump(2) << "\n";
        else std::cout << table2_text();
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}

int run_selftest() {
    int failures = 0;
    for (const auto& row : subtype_rows()) {
        try {
            Mat4 m = random_instance(row.id, 1);
            auto c = classify(m, MetricKind::PsiON, Context::exact());
            bool ok = std::string(to_string(c.type)) == to_string(row.type) && c.segre == row.segre;
            std::cout << (ok ? "[ok]   " : "[FAIL] ") << row.id << "\n";
            if (!ok) ++failures;
        } catch (const std::exception& e) {
            std::cout << "[FAIL] " << row.id << ": " << e.what() << "\n";
            ++failures;
        }
    }
    return failures == 0 ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"classification of self-adjoint endomorphisms of R^{2,2} and their Ricci loci"};
    app.require_subcommand(1);

    std::string infile, mode, basis, otype = "pp", format = "json", subtype;
    double tol = 0;
    unsigned seed = 1;

    auto* classify_cmd = app.add_subcommand("classify", "classify a matrix from a JSON document");
    classify_cmd->add_option("input", infile, "input file (default: stdin)");
    classify_cmd->add_option("--mode", mode, "exact|float (overrides the document)");
    classify_cmd->add_option("--tol", tol, "relative zero tolerance (float mode)");
    classify_cmd->add_option("--basis", basis, "psion|witt (overrides the document)");
    classify_cmd->add_option("--otype", otype, "pp|mm|mp|pm basis component for the Ricci polynomial");
    classify_cmd->add_option("--format", format, "json|text");

    auto* gen_cmd = app.add_subcommand("gen", "emit a random instance of a subtype as a document");
    gen_cmd->add_option("subtype", subtype, "row id, e.g. \"IV:[121]\"")->required();
    gen_cmd->add_option("--seed", seed, "PRNG seed");

    auto* table_cmd = app.add_subcommand("table2", "recompute the classification summary table");
    table_cmd->add_option("--format", format, "json|text");

    app.add_subcommand("selftest", "classify one random instance of every subtype row");

    CLI11_PARSE(app, argc, argv);

    if (classify_cmd->parsed()) return run_classify(infile, mode, tol, basis, otype, format);
    if (gen_cmd->parsed()) return run_gen(subtype, seed);
    if (table_cmd->parsed()) return run_table2(format);
    return run_selftest();
}
