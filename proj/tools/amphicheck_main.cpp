// Command-line front end: `amphicheck check` runs the verdict battery
// over a JSON record file, `amphicheck gen` writes the built-in example
// families as record files. Exit codes: 0 = all records consistent,
// 1 = at least one record obstructed, 2 = data or usage errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "amphicheck/families.hpp"
#include "amphicheck/report.hpp"

namespace {

using namespace amphicheck;

// Accepts "+-", "+1,-1", or "1,-1".
std::vector<int> parse_eps(const std::string& text) {
    if (text.empty()) throw std::runtime_error("empty sign pattern");
    std::vector<int> eps;
    if (text.find(',') == std::string::npos &&
        text.find_first_not_of("+-") == std::string::npos) {
        for (char c : text) eps.push_back(c == '+' ? 1 : -1);
        return eps;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "+1" || item == "1" || item == "+")
            eps.push_back(1);
        else if (item == "-1" || item == "-")
            eps.push_back(-1);
        else
            throw std::runtime_error("sign pattern entry must be +1 or -1, got \"" + item + "\"");
    }
    return eps;
}

// "exists" or "fixed:1,2=+;1,2,3=-".
SignMode parse_sign_mode(const std::string& text) {
    if (text == "exists") return SignMode::exists_mode();
    const std::string prefix = "fixed";
    if (text.rfind(prefix, 0) != 0)
        throw std::runtime_error("--sign-mode must be \"exists\" or \"fixed:<assignments>\"");
    SignAssignment signs;
    if (text.size() > prefix.size()) {
        if (text[prefix.size()] != ':')
            throw std::runtime_error("--sign-mode fixed assignments start with ':'");
        std::stringstream ss(text.substr(prefix.size() + 1));
        std::string entry;
        while (std::getline(ss, entry, ';')) {
            if (entry.empty()) continue;
            const auto eq = entry.find('=');
            if (eq == std::string::npos)
                throw std::runtime_error("fixed assignment entry needs <subset>=<sign>: \"" +
                                         entry + "\"");
            IndexSet subset = IndexSet::from_string(entry.substr(0, eq));
            const std::string sign = entry.substr(eq + 1);
            if (sign == "+" || sign == "+1" || sign == "1")
                signs.signs[subset] = 1;
            else if (sign == "-" || sign == "-1")
                signs.signs[subset] = -1;
            else
                throw std::runtime_error("fixed assignment sign must be +1 or -1: \"" + entry +
                                         "\"");
        }
    }
    return SignMode::fixed_mode(std::move(signs));
}

int run_check(const std::string& path, const std::vector<std::string>& tests,
              const std::vector<std::string>& eps_args, const std::string& sign_mode,
              const std::string& format) {
    BatteryOptions options;
    options.tests = tests;
    for (const std::string& arg : eps_args) options.eps_vectors.push_back(parse_eps(arg));
    options.sign_mode = parse_sign_mode(sign_mode);
    if (const char* cap = std::getenv("AMPHICHECK_MAX_R")) {
        try {
            options.parity_options.max_exists_r = std::stoi(cap);
        } catch (const std::exception&) {
            throw std::runtime_error("AMPHICHECK_MAX_R must be an integer");
        }
    }

    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();

    const Report report = run_battery(parse_records_text(buffer.str()), options);
    if (format == "json")
        std::cout << report_to_json(report).dump(2) << "\n";
    else
        std::cout << emit_text(report);
    return exit_code(report);
}

int run_gen(const std::string& family, const std::vector<int>& params,
            const std::string& out_path) {
    LinkRecord rec;
    if (family == "milnor") {
        if (params.size() != 1)
            throw std::runtime_error("gen milnor needs exactly one parameter: the component "
                                     "count");
        rec = milnor_record(params[0]);
    } else if (family == "caa") {
        if (params.size() != 2)
            throw std::runtime_error("gen caa needs exactly two parameters: a and b");
        rec = two_bridge_caa_record(params[0], params[1]);
    } else {
        if (!params.empty())
            throw std::runtime_error("named fixtures take no parameters");
        rec = named_fixture(family);  // throws for unknown names
    }

    nlohmann::json out = nlohmann::json::array({record_to_json(rec)});
    if (out_path.empty()) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::ofstream file(out_path);
        if (!file) throw std::runtime_error("cannot write " + out_path);
        file << out.dump(2) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decides, from multivariable polynomial link data, whether a link is provably "
                 "not component-preservingly amphicheiral."};
    app.require_subcommand(1);

    std::string file;
    std::vector<std::string> tests;
    std::vector<std::string> eps_args;
    std::string sign_mode = "exists";
    std::string format = "text";
    CLI::App* check = app.add_subcommand("check", "run the verdict battery over a record file");
    check->add_option("file", file, "JSON file holding an array of link records")->required();
    check->add_option("--tests", tests,
                      "comma-separated test-id prefixes to run (default: all)")
        ->delimiter(',');
    check->add_option("--eps", eps_args,
                      "sign pattern for the symmetry check, e.g. \"+-\" or \"1,-1\" (repeatable)");
    check->add_option("--sign-mode", sign_mode,
                      "\"exists\" (search all factor signs) or \"fixed:1,2=+;1,2,3=-\"");
    check->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    std::string family;
    std::vector<int> params;
    std::string out_path;
    CLI::App* gen = app.add_subcommand("gen", "write a record file for a built-in family");
    gen->add_option("family", family, "milnor | caa | borromean | whitehead | 10n59 | 11n247")
        ->required();
    gen->add_option("params", params, "family parameters (milnor: components; caa: a b)");
    gen->add_option("-o,--output", out_path, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // --help and friends exit 0; usage errors exit 2
    }

    try {
        if (check->parsed()) return run_check(file, tests, eps_args, sign_mode, format);
        return run_gen(family, params, out_path);
    } catch (const std::exception& e) {
        std::cerr << "amphicheck: " << e.what() << "\n";
        return 2;
    }
}
