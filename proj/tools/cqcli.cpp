#include "cq/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using cq::cli::Outcome;
using cq::io::Json;

namespace {

Json read_document(const std::string& path) {
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw cq::io::ParseError("cannot open " + path);
        buf << in.rdbuf();
    }
    try {
        return Json::parse(buf.str());
    } catch (const Json::parse_error& e) {
        throw cq::io::ParseError(std::string("malformed JSON: ") + e.what());
    }
}

int emit(const Outcome& o, const std::string& output, bool compact) {
    const std::string text = o.doc.dump(compact ? -1 : 2) + "\n";
    if (output.empty() || output == "-") {
        std::cout << text;
    } else {
        std::ofstream out(output);
        out << text;
    }
    if (o.code != cq::cli::kOk && o.doc.contains("error")) std::cerr << "cqcli: " << o.doc["error"].get<std::string>() << "\n";
    return o.code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Completed quadrics and torus limits of oriented algebras, over the rationals"};
    app.require_subcommand(1);
    std::string output;
    bool compact = false;
    app.add_option("-o,--output", output, "Write the result document here instead of stdout");
    app.add_flag("--compact", compact, "Single-line output");

    struct Sub {
        std::string name;
        CLI::App* app = nullptr;
        std::string input = "-";
        bool oracle = false;
        std::string strategy;
    };
    std::vector<Sub> subs;
    subs.reserve(cq::cli::commands().size());
    for (const auto& name : cq::cli::commands()) {
        subs.push_back(Sub{name});
        Sub& s = subs.back();
        s.app = app.add_subcommand(name, "Run the " + name + " job");
        if (name != "verify-paper") s.app->add_option("input", s.input, "Job or input document (- for stdin)");
        if (name == "limit" || name == "torus-limit") s.app->add_flag("--oracle", s.oracle, "Cross-check with the independent algorithm");
        if (name == "limit") s.app->add_option("--strategy", s.strategy, "auto, full or probe");
    }
    std::string batch_file = "-";
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    CLI::App* batch = app.add_subcommand("batch", "Run a list of jobs");
    batch->add_option("input", batch_file, "Batch document (- for stdin)");
    batch->add_option("-j,--threads", threads, "Worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : cq::cli::kParse;
    }

    try {
        if (*batch) return emit(cq::cli::run_batch(read_document(batch_file), threads), output, compact);
        for (const auto& s : subs) {
            if (!*s.app) continue;
            Json options = Json::object();
            if (s.oracle) options["oracle"] = true;
            if (!s.strategy.empty()) options["strategy"] = s.strategy;
            if (s.name == "verify-paper") return emit(cq::cli::run_job(s.name, Json::object(), options), output, compact);
            Json doc = read_document(s.input);
            // Either a full job document or a bare input payload.
            if (doc.is_object() && doc.contains("input")) {
                if (doc.contains("schema") && doc["schema"] != cq::io::kSchema)
                    throw cq::io::ParseError("unsupported schema: " + doc["schema"].dump());
                if (doc.contains("command") && doc["command"] != s.name)
                    throw cq::io::ParseError("document is for command " + doc["command"].dump());
                Json merged = doc.value("options", Json::object());
                for (const auto& [k, v] : options.items()) merged[k] = v;
                return emit(cq::cli::run_job(s.name, doc["input"], merged), output, compact);
            }
            return emit(cq::cli::run_job(s.name, doc, options), output, compact);
        }
    } catch (const cq::io::ParseError& e) {
        std::cerr << "cqcli: " << e.what() << "\n";
        return cq::cli::kParse;
    }
    return cq::cli::kParse;
}
