#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pfsdist/classify.hpp"
#include "pfsdist/distance.hpp"
#include "pfsdist/format.hpp"
#include "pfsdist/io.hpp"
#include "pfsdist/repro.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitConformability = 3;
constexpr int kExitMismatch = 4;

#ifndef PFSDIST_DATA_DIR
#define PFSDIST_DATA_DIR "data"
#endif

struct Options {
    std::string command;

    std::string method_name;
    std::optional<double> beta;
    double epsilon = 1e-3;
    std::string format_name = "plain";
    int precision = 4;
    std::string output;

    std::string file_a, file_b, set_a, set_b;   // dist
    std::string patterns_file, samples_file;    // classify
    std::string which;                          // repro
    std::string data_dir = PFSDIST_DATA_DIR;
};

void write_output(const Options& opt, const std::string& text) {
    if (opt.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.output, std::ios::binary);
    if (!out) {
        throw pfsdist::ParseError("cannot open output file '" + opt.output + "'");
    }
    out << text;
}

pfsdist::DistanceMethod resolve_method(const Options& opt) {
    auto method = pfsdist::DistanceMethod::parse(opt.method_name);
    if (!method) {
        throw pfsdist::ParseError("unknown method '" + opt.method_name + "'");
    }
    if (method->kind() == pfsdist::MeasureKind::PfsChen) {
        if (!opt.beta) {
            throw pfsdist::ParseError("method 'chen' requires --beta");
        }
        return pfsdist::DistanceMethod::chen(*opt.beta);
    }
    if (opt.beta) {
        throw pfsdist::ParseError("--beta is only valid with method 'chen'");
    }
    return *method;
}

pfsdist::TableFormat resolve_format(const Options& opt) {
    auto format = pfsdist::parse_table_format(opt.format_name);
    if (!format) {
        throw pfsdist::ParseError("unknown format '" + opt.format_name + "'");
    }
    return *format;
}

int run_dist(const Options& opt) {
    const auto method = resolve_method(opt);
    const pfsdist::ValidationPolicy policy{opt.epsilon};
    const auto dataset_a = pfsdist::load_dataset(opt.file_a, policy);
    const auto dataset_b = pfsdist::load_dataset(opt.file_b, policy);
    const double d = pfsdist::distance(dataset_a.find(opt.set_a),
                                       dataset_b.find(opt.set_b), method);
    write_output(opt, pfsdist::format_fixed(d, opt.precision) + "\n");
    return kExitOk;
}

int run_classify(const Options& opt) {
    const auto method = resolve_method(opt);
    const pfsdist::ValidationPolicy policy{opt.epsilon};
    const auto patterns = pfsdist::load_dataset(opt.patterns_file, policy);
    const auto samples = pfsdist::load_dataset(opt.samples_file, policy);

    pfsdist::PatternLibrary library(patterns.sets);
    const auto results = pfsdist::classify_batch(library, samples.sets, method);

    std::vector<std::string> header = {"sample"};
    for (const auto& p : library.patterns()) header.push_back(p.name());
    header.push_back("winner");
    header.push_back("tie");

    std::vector<std::vector<std::string>> rows;
    rows.reserve(results.size());
    for (const auto& r : results) {
        std::vector<std::string> row = {r.sample_name};
        for (const auto& [name, value] : r.distances) {
            row.push_back(pfsdist::format_fixed(value, opt.precision));
        }
        row.push_back(r.winner_name());
        row.push_back(r.is_tie() ? "yes" : "no");
        rows.push_back(std::move(row));
    }
    write_output(opt, pfsdist::render_table(header, rows, resolve_format(opt)));
    return kExitOk;
}

int run_repro(const Options& opt) {
    namespace repro = pfsdist::repro;
    const auto format = resolve_format(opt);
    const std::filesystem::path data_dir = opt.data_dir;

    const std::vector<std::string> known = {"table1", "table2", "table4",
                                            "app1",   "app2",   "app3"};
    std::vector<std::string> selected;
    if (opt.which == "all") {
        selected = known;
    } else if (std::find(known.begin(), known.end(), opt.which) != known.end()) {
        selected = {opt.which};
    } else {
        throw pfsdist::ParseError("unknown repro selector '" + opt.which + "'");
    }

    std::string text;
    std::vector<repro::Discrepancy> mismatches;
    for (const auto& name : selected) {
        if (selected.size() > 1) text += "# " + name + "\n";
        if (name == "table1" || name == "table2") {
            const auto rows = repro::run_example1();
            text += repro::emit_table(rows, format, opt.precision);
            const auto found = name == "table1" ? repro::check_table1(rows)
                                                : repro::check_table2(rows);
            mismatches.insert(mismatches.end(), found.begin(), found.end());
        } else if (name == "table4") {
            const auto rows = repro::run_example2(data_dir);
            text += repro::emit_table(rows, format, opt.precision);
            const auto found = repro::check_table4(rows);
            mismatches.insert(mismatches.end(), found.begin(), found.end());
        } else {
            const int id = name[3] - '0';
            const auto result = repro::run_application(id, data_dir);
            text += repro::emit_table(result, format, opt.precision);
            const auto found = repro::check_application(result);
            mismatches.insert(mismatches.end(), found.begin(), found.end());
        }
        if (selected.size() > 1) text += "\n";
    }
    write_output(opt, text);

    for (const auto& d : mismatches) {
        std::cerr << d.line() << "\n";
    }
    return mismatches.empty() ? kExitOk : kExitMismatch;
}

void add_common_flags(CLI::App* cmd, Options& opt, bool with_method) {
    if (with_method) {
        cmd->add_option("--method", opt.method_name,
                        "ifs-hamming|ifs-euclid|pfs-hamming|pfs-euclid|chen|matrix")
            ->required();
        cmd->add_option("--beta", opt.beta, "exponent for chen (>= 1)");
        cmd->add_option("--epsilon", opt.epsilon,
                        "validation slack for mu^2 + nu^2 <= 1 (default 1e-3)");
    }
    cmd->add_option("--format", opt.format_name, "csv|md|plain (default plain)");
    cmd->add_option("--precision", opt.precision, "output decimals, 1..12 (default 4)");
    cmd->add_option("--output", opt.output, "write to file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Distance measures and nearest-pattern classification over "
                 "Pythagorean fuzzy sets"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* dist = app.add_subcommand("dist", "distance between two named sets");
    dist->add_option("file_a", opt.file_a, "dataset file")->required();
    dist->add_option("file_b", opt.file_b, "dataset file")->required();
    dist->add_option("set_a", opt.set_a, "set name in file_a")->required();
    dist->add_option("set_b", opt.set_b, "set name in file_b")->required();
    add_common_flags(dist, opt, true);

    CLI::App* classify = app.add_subcommand("classify",
                                            "assign samples to nearest patterns");
    classify->add_option("patterns", opt.patterns_file, "pattern dataset file")
        ->required();
    classify->add_option("samples", opt.samples_file, "sample dataset file")
        ->required();
    add_common_flags(classify, opt, true);

    CLI::App* repro = app.add_subcommand("repro",
                                         "regenerate a bundled reference table");
    repro->add_option("which", opt.which,
                      "table1|table2|table4|app1|app2|app3|all")
        ->required();
    repro->add_option("--data-dir", opt.data_dir, "directory with dataset files");
    add_common_flags(repro, opt, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    if (opt.precision < 1 || opt.precision > 12) {
        std::cerr << "error: --precision must be in 1..12\n";
        return kExitInput;
    }

    try {
        if (dist->parsed()) return run_dist(opt);
        if (classify->parsed()) return run_classify(opt);
        return run_repro(opt);
    } catch (const pfsdist::ConformabilityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConformability;
    } catch (const pfsdist::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
