// pcring: analyze the projective class ring of a basic split Hopf algebra
// with abelian structure group, given the group and the canonical element c.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pcring/report.hpp"

namespace fs = std::filesystem;
using pcring::Json;

namespace {

struct Flags {
    bool no_verify = false;
    bool idempotents = false;
    bool nilradical = false;
    std::string output;
};

void add_flags(CLI::App* cmd, Flags& flags)
{
    cmd->add_flag("--no-verify", flags.no_verify, "Skip the structure-table cross-check");
    cmd->add_flag("--idempotents", flags.idempotents, "Emit the primitive orthogonal idempotents");
    cmd->add_flag("--nilradical", flags.nilradical, "Emit a nilradical basis");
    cmd->add_option("-o,--output", flags.output, "Write the report to a file instead of stdout");
}

void apply(const Flags& flags, pcring::AnalysisRequest& request)
{
    request.verify = !flags.no_verify;
    request.emit_idempotents = flags.idempotents;
    request.emit_nilradical = flags.nilradical;
    if (!flags.output.empty()) {
        request.output = flags.output;
    }
}

int emit(const Json& doc, const std::string& output)
{
    const std::string text = doc.dump(2) + "\n";
    if (output.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(output, std::ios::binary);
    out << text;
    if (!out) {
        std::cerr << "pcring: cannot write " << output << "\n";
        return 1;
    }
    return 0;
}

std::string read_file(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw pcring::InputError(pcring::ErrorKind::schema, "", "cannot read " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

pcring::RunResult analyze_file(const fs::path& path, const Flags& flags)
{
    try {
        auto request = pcring::parse_input(read_file(path));
        apply(flags, request);
        return pcring::run(request);
    } catch (const pcring::Error& e) {
        return {pcring::error_report(e), pcring::exit_validation_error};
    }
}

int finish(const pcring::RunResult& result, const std::string& output)
{
    const int io = emit(result.report, output);
    return result.exit_code != 0 ? result.exit_code : io;
}

std::vector<unsigned> parse_orders(const std::string& text)
{
    std::vector<unsigned> orders;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long value = -1;
        try {
            value = std::stol(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || value < 1) {
            throw pcring::InputError(pcring::ErrorKind::schema, "/orders", "invalid cyclic order '" + item + "'");
        }
        orders.push_back(static_cast<unsigned>(value));
    }
    return orders;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Projective class rings of basic split Hopf algebras with abelian structure group"};
    app.require_subcommand(1);

    Flags analyze_flags;
    std::string input_path;
    auto* analyze = app.add_subcommand("analyze", "Analyze a JSON instance {\"group\": [...], \"c\": [...]}");
    analyze->add_option("file", input_path, "Input JSON file")->required();
    add_flags(analyze, analyze_flags);

    auto* example = app.add_subcommand("example", "Run a named example");
    example->require_subcommand(1);
    Flags uq_flags;
    int n = 0;
    auto* uq = example->add_subcommand("uq-sl2", "Half-quantum group u_q^+(sl2) at an n-th root of unity");
    uq->add_option("--n", n, "Order of the root of unity (n >= 2)")->required();
    add_flags(uq, uq_flags);
    Flags dual_flags;
    std::string orders_text;
    auto* dual = example->add_subcommand("dual-group", "Function algebra k^G (semisimple)");
    dual->add_option("--orders", orders_text, "Comma-separated cyclic orders, e.g. 2,3")->required();
    add_flags(dual, dual_flags);

    Flags batch_flags;
    std::string batch_dir;
    auto* batch = app.add_subcommand("batch", "Analyze every *.json file in a directory");
    batch->add_option("dir", batch_dir, "Input directory")->required()->check(CLI::ExistingDirectory);
    add_flags(batch, batch_flags);

    CLI11_PARSE(app, argc, argv);

    if (analyze->parsed()) {
        return finish(analyze_file(input_path, analyze_flags), analyze_flags.output);
    }

    if (uq->parsed() || dual->parsed()) {
        const Flags& flags = uq->parsed() ? uq_flags : dual_flags;
        pcring::RunResult result;
        try {
            pcring::AnalysisRequest request;
            request.instance = uq->parsed() ? pcring::uq_sl2(n) : pcring::dual_group_algebra(parse_orders(orders_text));
            apply(flags, request);
            result = pcring::run(request);
        } catch (const pcring::Error& e) {
            result = {pcring::error_report(e), pcring::exit_validation_error};
        }
        return finish(result, flags.output);
    }

    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(batch_dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    Json reports = Json::array();
    int status = 0;
    for (const auto& path : files) {
        const auto result = analyze_file(path, batch_flags);
        reports.push_back(Json{{"file", path.filename().string()},
                               {"exit_code", result.exit_code},
                               {"report", result.report}});
        status = std::max(status, result.exit_code);
    }
    const int io = emit(Json{{"reports", std::move(reports)}, {"exit_code", status}}, batch_flags.output);
    return status != 0 ? status : io;
}
