#pragma once

#include "latsched/latsched.h"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kBadConfig = 2 };

/// Thrown for anything that should end the process with a diagnostic.
class CliError : public std::runtime_error {
public:
    CliError(int exit_code, const std::string& message) : std::runtime_error(message), exit_code_(exit_code) {}
    int exit_code() const { return exit_code_; }

private:
    int exit_code_;
};

enum class OutputFormat { Csv, Json };

struct RunConfig {
    std::string command;

    latsched_kind kind = LATSCHED_HEX;
    int k = 2;
    std::optional<std::pair<int, int>> extent;  ///< W x H
    std::optional<std::uint64_t> nodes;
    double gamma = 3.0;
    std::optional<double> beta;
    std::optional<double> dd;
    double f = 0.5;
    double eta = 1.0;
    std::vector<std::uint64_t> seeds{1};
    std::string out = "-";
    OutputFormat format = OutputFormat::Csv;

    std::string schedule_file;
    std::uint64_t budget = 200;
    std::vector<double> gammas;
    std::vector<int> ks;
    std::string param;
    std::vector<double> values;
    bool hold_point = false;
    double power_margin = 1e-3;
};

/// Raw string values as given on the command line or in a config file.
struct RawConfig {
    std::string kind = "hex";
    std::string extent;
    std::string seed = "1";
    std::string format = "csv";
    std::string gammas = "2.5:6:0.5";
    std::string ks = "1:10";
    std::string values;
};

/// Reads a flat key=value file into `--key=value` arguments. '#' starts a comment.
std::vector<std::string> load_config_file(const std::string& path);

/// Inserts config-file arguments right after the subcommand name so that explicit
/// flags, which come later, take precedence.
std::vector<std::string> expand_config(const std::vector<std::string>& args);

std::pair<int, int> parse_dims(const std::string& text);
std::vector<double> parse_double_list(const std::string& text, const char* what);
std::vector<int> parse_int_list(const std::string& text, const char* what);
std::vector<std::uint64_t> parse_seed_list(const std::string& text);

/// Fills the typed fields from their raw forms and checks ranges.
void finalize(RunConfig& config, const RawConfig& raw);

/// Extent selected by --extent / --nodes, falling back to `fallback`.
latsched_extent resolve_extent(const RunConfig& config, latsched_extent fallback);

}  // namespace cli
