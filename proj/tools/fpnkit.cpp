#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fpnkit/suites.hpp"

namespace {

using namespace fpnkit;

std::vector<int> parse_windows(const std::string& text) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoi(tok));
    }
    if (out.empty()) throw CLI::ValidationError("--windows", "needs a comma-separated list");
    return out;
}

int cmd_suite(const std::string& name, const std::string& windows_text, bool windows_set,
              std::uint64_t seed, bool seed_set, int samples, bool samples_set,
              std::string format, bool format_set, const std::string& config_path) {
    SuiteConfig cfg;
    cfg.suite = name;
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) {
            std::cerr << "cannot open config file: " << config_path << "\n";
            return 2;
        }
        nlohmann::json j = nlohmann::json::parse(in);
        if (j.contains("windows")) cfg.windows = j["windows"].get<std::vector<int>>();
        if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("samples")) cfg.samples = j["samples"].get<int>();
        if (j.contains("format")) cfg.format = j["format"].get<std::string>();
    }
    // Flags override the config file.
    if (windows_set) cfg.windows = parse_windows(windows_text);
    if (seed_set) cfg.seed = seed;
    if (samples_set) cfg.samples = samples;
    if (format_set) cfg.format = format;

    SuiteReport report = run_suite(cfg);
    write_report(std::cout, report, cfg.format);

    if (const char* dir = std::getenv("FPNKIT_OUTPUT_DIR")) {
        std::string ext = cfg.format == "jsonl" ? ".jsonl" : ".txt";
        std::ofstream out(std::string(dir) + "/" + name + ext);
        if (out) write_report(out, report, cfg.format);
    }
    return report.pass() ? 0 : 1;
}

int cmd_reduce(const std::string& literal) {
    IdealFG ideal = parse_ideal(literal);
    Elem r = bezout_reduce(ideal);
    bool forward = ideal_membership(ideal, r).member;
    bool backward = true;
    IdealFG principal = make_ideal({r});
    for (const Elem& g : ideal.generators)
        backward = backward && ideal_membership(principal, g).member;
    std::cout << "principal generator: " << print_elem(r) << "\n";
    std::cout << "containments verified: " << (forward && backward ? "yes" : "NO") << "\n";
    return forward && backward ? 0 : 1;
}

int cmd_classify(const std::string& path, int level, const std::string& windows_text) {
    Presentation p = read_presentation_file(path);
    std::vector<int> windows = parse_windows(windows_text);
    FpCertificate cert = classify_fp(p, level, windows);
    switch (cert.verdict) {
        case FpVerdict::FPnVerified:
            std::cout << "verdict: verified to level " << cert.level_verified << "\n";
            break;
        case FpVerdict::SyzygyGrowth:
            std::cout << "verdict: syzygy growth at stage " << cert.growth_stage
                      << " (level verified: " << cert.level_verified << ")\n";
            break;
        case FpVerdict::Inconclusive:
            std::cout << "verdict: inconclusive (level verified: " << cert.level_verified
                      << ")\n";
            break;
    }
    for (const auto& [key, count] : cert.stage_counts) {
        std::cout << "stage " << key.first;
        if (key.second > 0) std::cout << " window " << key.second;
        std::cout << ": " << count << " generators\n";
    }
    return 0;
}

int cmd_ext(const std::string& p_path, const std::string& q_path, int degree, int window) {
    Presentation p = read_presentation_file(p_path);
    Presentation q = read_presentation_file(q_path);
    std::optional<int> w = p.ring.windowed() ? std::optional<int>(window) : std::nullopt;
    HomologyValue v = ext_group(p, q, degree, w);
    if (v.windowed) {
        std::cout << "Ext^" << degree << " within window " << *v.window << ": "
                  << (v.is_zero() ? "zero" : "nonzero") << "\n";
        if (v.witness) {
            std::cout << "witness cocycle:";
            for (const Elem& e : *v.witness) std::cout << " " << print_elem(e);
            std::cout << "\n";
        }
    } else {
        std::cout << "Ext^" << degree << " = " << describe(v.group) << "\n";
    }
    return 0;
}

int cmd_member(const std::string& ideal_literal, const std::string& elem_text, int bound) {
    IdealFG ideal = parse_ideal(ideal_literal);
    Elem x = parse_elem(RingId::unitification(), elem_text);
    MembershipResult res = ideal_membership(ideal, x, bound);
    if (res.member) {
        std::cout << "member: yes\nwitness coefficients:";
        for (const Elem& c : res.coefficients) std::cout << " " << print_elem(c);
        std::cout << "\n";
        return 0;
    }
    std::cout << "member: no\nobstruction: " << res.obstruction << "\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact finitely presented module calculator"};
    app.require_subcommand(1);

    std::string suite_name, windows_text = "2,4,8,16", format = "human", config_path;
    std::uint64_t seed = 20260823;
    int samples = 0;
    auto* suite = app.add_subcommand("suite", "run a named verification suite");
    suite->add_option("name", suite_name, "suite name")->required();
    auto* opt_windows = suite->add_option("--windows", windows_text, "comma-separated window bounds");
    auto* opt_seed = suite->add_option("--seed", seed, "random seed");
    auto* opt_samples = suite->add_option("--samples", samples, "sample count override");
    auto* opt_format =
        suite->add_option("--format", format, "human | jsonl")->check(CLI::IsMember({"human", "jsonl"}));
    suite->add_option("--config", config_path, "JSON config file (flags override)");

    std::string ideal_literal;
    auto* reduce = app.add_subcommand("reduce", "reduce a finitely generated ideal to a principal generator");
    reduce->add_option("ideal", ideal_literal, "ideal literal, e.g. '<(3; ), (0; 1)>'")->required();

    std::string classify_path, classify_windows = "2,4,8,16";
    int level = 1;
    auto* classify = app.add_subcommand("classify", "classify a presentation file");
    classify->add_option("file", classify_path, "presentation file")->required();
    classify->add_option("--level", level, "target presentation level")->required();
    classify->add_option("--windows", classify_windows, "comma-separated window bounds");

    std::string ext_p, ext_q;
    int degree = 1, ext_window = 8;
    auto* ext = app.add_subcommand("ext", "compute an Ext value between two presentation files");
    ext->add_option("P", ext_p, "presentation file")->required();
    ext->add_option("Q", ext_q, "presentation file")->required();
    ext->add_option("--degree", degree, "Ext degree")->required();
    ext->add_option("--window", ext_window, "window bound for windowed rings");

    std::string member_ideal, member_elem;
    int bound = 0;
    auto* member = app.add_subcommand("member", "decide ideal membership with witness");
    member->add_option("ideal", member_ideal, "ideal literal")->required();
    member->add_option("element", member_elem, "element, e.g. '(2; 1)'")->required();
    member->add_option("--bound", bound, "support window bound");

    CLI11_PARSE(app, argc, argv);

    try {
        if (suite->parsed())
            return cmd_suite(suite_name, windows_text, opt_windows->count() > 0, seed,
                             opt_seed->count() > 0, samples, opt_samples->count() > 0, format,
                             opt_format->count() > 0, config_path);
        if (reduce->parsed()) return cmd_reduce(ideal_literal);
        if (classify->parsed()) return cmd_classify(classify_path, level, classify_windows);
        if (ext->parsed()) return cmd_ext(ext_p, ext_q, degree, ext_window);
        if (member->parsed()) return cmd_member(member_ideal, member_elem, bound);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
