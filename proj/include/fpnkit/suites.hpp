#ifndef FPNKIT_SUITES_HPP
#define FPNKIT_SUITES_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "fpnkit/ideals.hpp"
#include "fpnkit/io.hpp"
#include "fpnkit/torsion.hpp"

namespace fpnkit {

struct SuiteConfig {
    std::string suite;
    std::vector<int> windows = {2, 4, 8, 16};  // strictly increasing
    std::uint64_t seed = 20260823;
    int samples = 0;  // 0 = per-suite default
    std::string format = "human";  // human | jsonl
};

/// One verified claim: a stable anchor slug, a human-readable claim, the
/// verdict, and structured evidence.
struct CheckRecord {
    int index = 0;
    std::string anchor;
    std::string claim;
    bool pass = false;
    nlohmann::json data;
};

struct SuiteReport {
    std::string suite;
    SuiteConfig config;
    std::vector<CheckRecord> checks;

    int passed() const;
    int failed() const;
    bool pass() const { return failed() == 0; }
};

const std::vector<std::string>& suite_names();
SuiteReport run_suite(const SuiteConfig& config);  // throws on unknown suite

/// format "human": one line per check plus a summary; format "jsonl": one
/// JSON record per check plus a trailing summary record, byte-deterministic
/// for a fixed config.
void write_report(std::ostream& os, const SuiteReport& report, const std::string& format);

}  // namespace fpnkit

#endif
