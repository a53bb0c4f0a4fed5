#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "homyd/catalog.hpp"
#include "homyd/spec_document.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError(path + ": cannot write file");
    out << text;
}

homyd::AnyDocument load(const std::string& path, std::size_t max_dim) {
    const auto text = read_file(path);
    try {
        auto d = homyd::parse_spec(text);
        const auto dim = std::visit([](const auto& x) { return homyd::max_declared_dim(x); }, d);
        if (dim > max_dim)
            throw UsageError(path + ": declared dimension " + std::to_string(dim) + " exceeds --max-dim " + std::to_string(max_dim));
        return d;
    } catch (const homyd::DocumentError& e) {
        throw UsageError(path + ":" + e.location() + ": " + e.message());
    }
}

/// Runs every file, prints the human table, and returns the combined JSON report.
int run_files(const std::vector<std::string>& files, std::size_t workers, std::size_t max_dim, const std::string& json_path) {
    std::vector<homyd::AnyDocument> docs;
    for (const auto& f : files) docs.push_back(load(f, max_dim));
    nlohmann::json all = nlohmann::json::array();
    bool ok = true;
    for (std::size_t i = 0; i < files.size(); ++i) {
        auto bundle = homyd::run_tasks(docs[i], workers, files[i]);
        std::cout << bundle.to_human();
        ok = ok && bundle.all_passed();
        all.push_back(bundle.to_json());
    }
    if (!json_path.empty()) write_file(json_path, nlohmann::json{{"reports", all}, {"all_passed", ok}}.dump(2) + "\n");
    return ok ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checker for Hom-bialgebras, Yetter-Drinfeld modules and braidings"};
    app.require_subcommand(1);
    std::size_t workers = 1, max_dim = 16;
    app.add_option("--parallel", workers, "worker threads; report order is unaffected")->check(CLI::PositiveNumber);
    app.add_option("--max-dim", max_dim, "reject documents declaring a larger dimension")->check(CLI::PositiveNumber);

    std::vector<std::string> files;
    std::string json_path;
    auto* check = app.add_subcommand("check", "run every task of the given spec files");
    check->add_option("files", files, "spec files")->required();
    check->add_option("--json", json_path, "write the machine report here");

    std::vector<std::string> report_files;
    std::string report_json;
    auto* report = app.add_subcommand("report", "run spec files and write the machine report");
    report->add_option("files", report_files, "spec files")->required();
    report->add_option("--json", report_json, "machine report path")->required();

    std::string example_name, emit_path;
    std::vector<std::string> params;
    auto* example = app.add_subcommand("example", "generate a named fixture document (p = 0 selects the rationals)");
    example->add_option("name", example_name, "cyclic_twist n k p | s3_conjugation t p | graded_yd n k p | r_matrix n p omega k | bicharacter n p omega k | suite p")
        ->required();
    example->add_option("params", params, "integer parameters");
    example->add_option("--emit", emit_path, "write the document here instead of running it");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (*check) return run_files(files, workers, max_dim, json_path);
        if (*report) return run_files(report_files, workers, max_dim, report_json);
        auto doc = homyd::example_document(example_name, params);
        if (!emit_path.empty()) {
            write_file(emit_path, homyd::serialize(doc));
            return kPass;
        }
        auto bundle = homyd::run_tasks(doc, workers, "example " + example_name);
        std::cout << bundle.to_human();
        return bundle.all_passed() ? kPass : kFail;
    } catch (const UsageError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const homyd::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
