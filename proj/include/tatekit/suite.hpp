#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tatekit/io.hpp"
#include "tatekit/operator.hpp"

namespace tatekit {

enum class OutputFormat { Text, Json, Svg };

struct RunConfig {
    std::uint64_t seed = 1;
    int ring_samples = 200;
    int lattice_samples = 200;
    int cubical_samples = 100;
    int agreement_samples = 200;
    int transfer_samples = 1000;
    int lifting_samples = 200;
    int geometry_samples = 100;
    std::int64_t radius = 8;     // Yekutieli search radius
    std::int64_t precision = 8;  // default series precision
    OutputFormat format = OutputFormat::Text;
};

io::Json to_json(const RunConfig& c);
RunConfig run_config_from_json(const io::Json& j, const std::string& path = "$");

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<SuiteCheck> checks;
    std::vector<std::string> notes;  // corpus sizes and counts
    bool ok() const;
    std::string to_text() const;
    io::Json to_json() const;
};

const std::vector<std::string>& suite_names();  // without "all"

// UnknownSuite for names outside suite_names() and "all"; "all" runs every
// suite in order and returns one report per suite.
std::vector<SuiteReport> run_suite(const std::string& name, const RunConfig& cfg);

}  // namespace tatekit
