// Command-line front end: verify the catalogue (or selected cases), list the
// catalogued cases, or export the catalogue as JSON.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "su21/verifier.hpp"

namespace {

using namespace su21;

int write_out(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        std::cerr << "cannot open " << out_path << " for writing\n";
        return 2;
    }
    f << text;
    return 0;
}

SampleOverrides parse_samples_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw io_failure("cannot read samples file " + path);
    Json j = Json::parse(f, nullptr, true);
    SampleOverrides out;
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::vector<Bindings> samples;
        for (const auto& js : it.value()) {
            Bindings b;
            for (auto bit = js.begin(); bit != js.end(); ++bit)
                b[bit.key()] = field_from_json(bit.value());
            samples.push_back(std::move(b));
        }
        out[it.key()] = std::move(samples);
    }
    return out;
}

int run_verify(const std::vector<std::string>& case_keys,
               const std::vector<int>& tables, const std::string& samples_path,
               const std::string& format, const std::string& out_path) {
    SampleOverrides overrides;
    if (!samples_path.empty()) overrides = parse_samples_file(samples_path);

    std::vector<std::string> keys = case_keys;
    for (int t : tables) {
        if (t < 1 || t > 6) {
            std::cerr << "--table expects a value in 1..6\n";
            return 2;
        }
        for (const auto& c : load_catalog())
            if (c.table == t) keys.push_back(c.id);
    }
    for (const auto& k : keys) {
        if (!find_case(k)) {
            std::cerr << "no such case: " << k << "\n";
            return 2;
        }
    }

    Report rep = keys.empty() ? verify_all(overrides) : verify_selected(keys, overrides);
    std::string text =
        format == "json" ? rep.to_json().dump(2) + "\n" : rep.text();
    int rc = write_out(text, out_path);
    if (rc != 0) return rc;
    return rep.n_fail == 0 ? 0 : 1;
}

int run_list(const std::string& format, const std::string& out_path) {
    std::string text;
    if (format == "json") {
        Json arr = Json::array();
        for (const auto& c : load_catalog()) {
            Json jc;
            jc["id"] = c.id;
            jc["summary"] = c.summary;
            jc["disposition"] = to_string(c.disposition);
            jc["real_table"] = c.table;
            Json reps = Json::array();
            for (const auto& r : c.real_reps) reps.push_back(r.row_label);
            jc["real_reps"] = reps;
            jc["parameters"] = c.param_names;
            arr.push_back(jc);
        }
        text = arr.dump(2) + "\n";
    } else {
        for (const auto& c : load_catalog()) {
            text += c.id;
            if (!c.param_names.empty()) {
                text += " (";
                for (size_t k = 0; k < c.param_names.size(); ++k)
                    text += (k ? "," : "") + c.param_names[k];
                text += ")";
            }
            text += " [" + to_string(c.disposition) + "]";
            if (!c.real_reps.empty()) {
                text += " ->";
                for (const auto& r : c.real_reps) text += " " + r.row_label;
            }
            text += "  -- " + c.summary + "\n";
        }
    }
    return write_out(text, out_path);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of the catalogued real subalgebras of su(2,1)"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run the verification pipeline");
    std::vector<std::string> case_keys;
    std::vector<int> tables;
    std::string samples_path, format = "text", out_path;
    verify->add_option("--case", case_keys,
                       "case id or representative label (repeatable)");
    verify->add_option("--table", tables, "restrict to one real table (1..6)");
    verify->add_option("--samples", samples_path,
                       "JSON file of parameter samples per case id");
    verify->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", out_path, "write the report to a file");

    auto* list = app.add_subcommand("list-cases", "list the catalogued cases");
    std::string list_format = "text", list_out;
    list->add_option("--format", list_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    list->add_option("--out", list_out, "write the listing to a file");

    auto* exp = app.add_subcommand("export-catalog", "export the catalogue as JSON");
    std::string exp_out;
    exp->add_option("--out", exp_out, "output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed())
            return run_verify(case_keys, tables, samples_path, format, out_path);
        if (list->parsed()) return run_list(list_format, list_out);
        if (exp->parsed()) {
            std::string text = su21::catalog_to_json().dump(2) + "\n";
            return write_out(text, exp_out);
        }
    } catch (const su21::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
