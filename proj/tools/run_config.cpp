#include "run_config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <system_error>

namespace cli {

namespace {

std::string trim(const std::string& s)
{
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos)
        return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        out.push_back(trim(text.substr(start, pos == std::string::npos ? std::string::npos : pos - start)));
        if (pos == std::string::npos)
            return out;
        start = pos + 1;
    }
}

template <typename T>
T parse_number(const std::string& text, const char* what)
{
    T value{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        throw CliError(kBadConfig, std::string("invalid ") + what + " '" + text + "'");
    return value;
}

bool is_command(const std::string& arg)
{
    return arg == "schedule" || arg == "verify" || arg == "clique" || arg == "feasibility" || arg == "simulate" ||
           arg == "sweep";
}

}  // namespace

std::vector<std::string> load_config_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw CliError(kBadConfig, "cannot read config file '" + path + "'");
    std::vector<std::string> args;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw CliError(kBadConfig, path + ":" + std::to_string(number) + ": expected key=value");
        std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || key == "config")
            throw CliError(kBadConfig, path + ":" + std::to_string(number) + ": invalid key '" + key + "'");
        for (char& c : key) {
            if (c == '_')
                c = '-';
        }
        args.push_back("--" + key + "=" + value);
    }
    return args;
}

std::vector<std::string> expand_config(const std::vector<std::string>& args)
{
    std::vector<std::string> file_args;
    std::vector<std::string> rest;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--config") {
            if (i + 1 >= args.size())
                throw CliError(kBadConfig, "--config needs a file argument");
            const auto loaded = load_config_file(args[++i]);
            file_args.insert(file_args.end(), loaded.begin(), loaded.end());
        } else if (a.rfind("--config=", 0) == 0) {
            const auto loaded = load_config_file(a.substr(9));
            file_args.insert(file_args.end(), loaded.begin(), loaded.end());
        } else {
            rest.push_back(a);
        }
    }
    if (file_args.empty())
        return rest;

    std::vector<std::string> out;
    bool inserted = false;
    for (const std::string& a : rest) {
        out.push_back(a);
        if (!inserted && is_command(a)) {
            out.insert(out.end(), file_args.begin(), file_args.end());
            inserted = true;
        }
    }
    if (!inserted)
        throw CliError(kBadConfig, "--config requires a subcommand");
    return out;
}

std::pair<int, int> parse_dims(const std::string& text)
{
    const auto x = text.find_first_of("xX");
    if (x == std::string::npos)
        throw CliError(kBadConfig, "extent must be WxH (got '" + text + "')");
    const int w = parse_number<int>(trim(text.substr(0, x)), "extent width");
    const int h = parse_number<int>(trim(text.substr(x + 1)), "extent height");
    if (w < 0 || h < 0)
        throw CliError(kBadConfig, "extent dimensions must be nonnegative");
    return {w, h};
}

std::vector<double> parse_double_list(const std::string& text, const char* what)
{
    std::vector<double> out;
    for (const std::string& item : split(text, ',')) {
        const auto parts = split(item, ':');
        if (parts.size() == 1) {
            out.push_back(parse_number<double>(parts[0], what));
        } else if (parts.size() == 3) {
            const double lo = parse_number<double>(parts[0], what);
            const double hi = parse_number<double>(parts[1], what);
            const double step = parse_number<double>(parts[2], what);
            if (!(step > 0.0) || hi < lo)
                throw CliError(kBadConfig, std::string(what) + " range needs lo <= hi and step > 0");
            const auto count = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
            for (long i = 0; i <= count; ++i)
                out.push_back(lo + static_cast<double>(i) * step);
        } else {
            throw CliError(kBadConfig, std::string(what) + " items are values or lo:hi:step ranges");
        }
    }
    return out;
}

std::vector<int> parse_int_list(const std::string& text, const char* what)
{
    std::vector<int> out;
    for (const std::string& item : split(text, ',')) {
        const auto parts = split(item, ':');
        if (parts.size() == 1) {
            out.push_back(parse_number<int>(parts[0], what));
        } else if (parts.size() == 2 || parts.size() == 3) {
            const int lo = parse_number<int>(parts[0], what);
            const int hi = parse_number<int>(parts[1], what);
            const int step = parts.size() == 3 ? parse_number<int>(parts[2], what) : 1;
            if (step < 1 || hi < lo)
                throw CliError(kBadConfig, std::string(what) + " range needs lo <= hi and step >= 1");
            for (int v = lo; v <= hi; v += step)
                out.push_back(v);
        } else {
            throw CliError(kBadConfig, std::string(what) + " items are values or lo:hi[:step] ranges");
        }
    }
    return out;
}

std::vector<std::uint64_t> parse_seed_list(const std::string& text)
{
    std::vector<std::uint64_t> out;
    for (const std::string& item : split(text, ','))
        out.push_back(parse_number<std::uint64_t>(item, "seed"));
    return out;
}

void finalize(RunConfig& config, const RawConfig& raw)
{
    if (latsched_parse_kind(raw.kind.c_str(), &config.kind) != LATSCHED_OK)
        throw CliError(kBadConfig, latsched_last_error());
    if (!raw.extent.empty())
        config.extent = parse_dims(raw.extent);
    config.seeds = parse_seed_list(raw.seed);
    if (raw.format == "csv")
        config.format = OutputFormat::Csv;
    else if (raw.format == "json")
        config.format = OutputFormat::Json;
    else
        throw CliError(kBadConfig, "format must be csv or json (got '" + raw.format + "')");
    config.gammas = parse_double_list(raw.gammas, "gamma");
    config.ks = parse_int_list(raw.ks, "k");
    if (!raw.values.empty())
        config.values = parse_double_list(raw.values, "sweep value");

    if (config.k < 1)
        throw CliError(kBadConfig, "k must be >= 1 (got " + std::to_string(config.k) + ")");
    for (int k : config.ks) {
        if (k < 1)
            throw CliError(kBadConfig, "every k must be >= 1");
    }
    if (!(config.gamma > 2.0))
        throw CliError(kBadConfig, "gamma must exceed 2");
    for (double g : config.gammas) {
        if (!(g > 2.0))
            throw CliError(kBadConfig, "every gamma must exceed 2");
    }
    if (config.beta && !(*config.beta > 0.0))
        throw CliError(kBadConfig, "beta must be positive");
    if (config.dd && !(*config.dd > 1.0))
        throw CliError(kBadConfig, "dd must exceed 1");
    if (!(config.eta > 0.0))
        throw CliError(kBadConfig, "eta must be positive");
    if (!(config.f >= 0.0 && config.f <= 1.0))
        throw CliError(kBadConfig, "f must lie in [0, 1]");
    if (!(config.power_margin >= 0.0))
        throw CliError(kBadConfig, "power margin must be nonnegative");
    if (config.extent && config.nodes)
        throw CliError(kBadConfig, "--extent and --nodes are mutually exclusive");
}

latsched_extent resolve_extent(const RunConfig& config, latsched_extent fallback)
{
    if (config.extent)
        return latsched_extent_from_dims(config.extent->first, config.extent->second);
    if (config.nodes)
        return latsched_extent_with_nodes(*config.nodes);
    return fallback;
}

}  // namespace cli
