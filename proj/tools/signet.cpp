#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "signet/service.hpp"
#include "suites.hpp"

namespace {

using signet::json;

constexpr int kOk = 0, kDomain = 1, kUsage = 2, kIo = 3;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    if (in.bad()) throw IoError("read error on " + path);
    return os.str();
}

json error_body(const std::string& code, const std::string& msg) {
    return {{"ok", false}, {"error", {{"code", code}, {"message", msg}}}};
}

int run_command(const std::string& cmd, const std::string& source, const json& overrides) {
    json params = json::object();
    std::string text = source.empty() ? std::string() : read_source(source);
    bool blank = text.find_first_not_of(" \t\r\n") == std::string::npos;
    if (!blank) {
        try {
            params = json::parse(text);
        } catch (const json::parse_error& e) {
            std::cout << error_body("usage", std::string("invalid JSON: ") + e.what()).dump() << "\n";
            return kUsage;
        }
    }
    if (!params.is_object()) {
        std::cout << error_body("usage", "parameters must be a JSON object").dump() << "\n";
        return kUsage;
    }
    for (auto it = overrides.begin(); it != overrides.end(); ++it) params[it.key()] = it.value();
    auto r = signet::dispatch(cmd, params);
    std::cout << r.body.dump() << "\n";
    return r.exit_code;
}

int run_batch(const std::string& path, int jobs) {
    std::string text = read_source(path);
    std::vector<std::string> lines;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);)
        if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
    std::vector<std::string> outputs(lines.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i; (i = next++) < lines.size();) {
            json req;
            try {
                req = json::parse(lines[i]);
            } catch (const json::parse_error& e) {
                outputs[i] = error_body("usage", std::string("invalid JSON: ") + e.what()).dump();
                continue;
            }
            outputs[i] = signet::dispatch(req).body.dump();
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < std::max(1, jobs); ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (const auto& o : outputs) std::cout << o << "\n";
    if (!std::cout) throw IoError("write error on stdout");
    return kOk;
}

int run_accept(const std::string& name) {
    auto crit = signet::accept::suite(name);
    if (crit.empty()) {
        std::cerr << "unknown suite '" << name << "'\n";
        return kUsage;
    }
    bool all = true;
    for (const auto& c : crit) {
        auto r = c();
        all = all && r.pass;
        std::cout << signet::accept::format(r) << std::endl;
    }
    return all ? kOk : kDomain;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"signet: exact signatures of forms and their invariants"};
    std::vector<std::string> words;
    std::string source;
    int jobs = 1;
    std::string angle, convention;
    bool search = false, list = false;
    app.add_option("command", words, "<group> <cmd>, 'batch FILE' or 'accept SUITE'");
    app.add_option("--json", source, "parameter file, '-' for stdin");
    app.add_option("--jobs", jobs, "worker threads for batch mode")->check(CLI::PositiveNumber);
    app.add_option("--angle", angle, "angle a/q as a fraction of a full turn (knot omega)");
    app.add_option("--convention", convention, "signature-defect convention (mod defect)");
    app.add_flag("--search", search, "run the convention search (mod defect)");
    app.add_flag("--list", list, "list commands and suites");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }
    try {
        if (list) {
            for (const auto& [name, h] : signet::handlers()) std::cout << name << "\n";
            for (const auto& s : signet::accept::suite_names()) std::cout << "accept " << s << "\n";
            return kOk;
        }
        if (words.size() == 2 && words[0] == "batch") return run_batch(words[1], jobs);
        if (words.size() == 2 && words[0] == "accept") return run_accept(words[1]);
        if (words.empty() || words.size() > 2) {
            std::cerr << app.help();
            return kUsage;
        }
        std::string cmd = words[0] + (words.size() == 2 ? " " + words[1] : "");
        json overrides = json::object();
        if (!angle.empty()) overrides["angle"] = angle;
        if (!convention.empty()) overrides["convention"] = convention;
        if (search) overrides["search"] = true;
        return run_command(cmd, source, overrides);
    } catch (const IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kIo;
    }
}
