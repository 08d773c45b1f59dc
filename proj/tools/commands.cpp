#include "commands.hpp"

#include <json.hpp>

#include <array>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

namespace cli {

namespace {

using Json = nlohmann::ordered_json;

template <typename T, void (*Destroy)(T*)>
struct Deleter {
    void operator()(T* p) const { Destroy(p); }
};

using ScheduleHandle = std::unique_ptr<latsched_schedule, Deleter<latsched_schedule, latsched_schedule_destroy>>;
using VerifyHandle =
    std::unique_ptr<latsched_verify_report, Deleter<latsched_verify_report, latsched_verify_report_destroy>>;
using CliqueHandle =
    std::unique_ptr<latsched_clique_report, Deleter<latsched_clique_report, latsched_clique_report_destroy>>;
using SimulationHandle =
    std::unique_ptr<latsched_simulation, Deleter<latsched_simulation, latsched_simulation_destroy>>;

void check(latsched_status status)
{
    if (status == LATSCHED_OK)
        return;
    const int code = status == LATSCHED_ERR_INFEASIBLE ? kCheckFailed : kBadConfig;
    throw CliError(code, std::string(latsched_status_name(status)) + ": " + latsched_last_error());
}

std::string num(double value)
{
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return ec == std::errc{} ? std::string(buf.data(), ptr) : std::string("nan");
}

std::string node(int x, int y) { return std::to_string(x) + ":" + std::to_string(y); }

void emit(const std::string& path, const std::string& text)
{
    if (path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw CliError(kBadConfig, "cannot write '" + tmp + "'");
        out << text;
        if (!out.flush())
            throw CliError(kBadConfig, "write to '" + tmp + "' failed");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw CliError(kBadConfig, "cannot move '" + tmp + "' to '" + path + "'");
}

std::string extent_box(const latsched_extent& e)
{
    return std::to_string(e.x0) + "," + std::to_string(e.y0) + "," + std::to_string(e.x1) + "," +
           std::to_string(e.y1);
}

std::uint64_t extent_size(const latsched_extent& e)
{
    std::uint64_t n = 0;
    check(latsched_extent_size(&e, &n));
    return n;
}

// --- simulation rows ---------------------------------------------------------

struct SeedRun {
    std::uint64_t seed = 0;
    bool feasible = false;
    std::string error;
    latsched_sim_summary summary{};
};

struct PointResult {
    latsched_sim_config config{};
    std::vector<SeedRun> runs;
};

const char* point_status_name(int32_t status)
{
    switch (status) {
    case LATSCHED_POINT_INTERIOR: return "interior";
    case LATSCHED_POINT_DEGENERATE: return "degenerate";
    case LATSCHED_POINT_BOUNDARY: return "boundary";
    }
    return "unknown";
}

latsched_sim_config base_sim_config(const RunConfig& config)
{
    latsched_sim_config c = latsched_sim_config_default();
    c.kind = config.kind;
    c.k = config.k;
    c.gamma = config.gamma;
    c.f = config.f;
    c.eta = config.eta;
    c.power_margin = config.power_margin;
    c.extent = resolve_extent(config, latsched_extent_with_nodes(4000));
    if (config.beta || config.dd) {
        if (!config.beta || !config.dd)
            throw CliError(kBadConfig, "--beta and --dd must be given together to fix the operating point");
        c.hold_point = 1;
        c.fixed_beta = *config.beta;
        c.fixed_dd = *config.dd;
    }
    return c;
}

/// Runs one configuration for every seed; infeasible points are recorded, not thrown.
/// When report_dir is set, each seed's per-record CSV is written there.
PointResult run_point(const latsched_sim_config& base, const std::vector<std::uint64_t>& seeds,
                      const std::string& report_dir)
{
    PointResult point{base, {}};
    for (std::uint64_t seed : seeds) {
        latsched_sim_config c = base;
        c.seed = seed;
        SeedRun run;
        run.seed = seed;
        latsched_simulation* raw = nullptr;
        const latsched_status status = latsched_simulate(&c, &raw);
        SimulationHandle sim(raw);
        if (status == LATSCHED_ERR_INFEASIBLE) {
            run.error = latsched_last_error();
        } else {
            check(status);
            check(latsched_simulation_summary(sim.get(), &run.summary));
            run.feasible = true;
            if (!report_dir.empty()) {
                const auto path = std::filesystem::path(report_dir) / ("report_seed" + std::to_string(seed) + ".csv");
                check(latsched_simulation_write_report_csv(sim.get(), path.string().c_str()));
            }
        }
        point.runs.push_back(std::move(run));
    }
    return point;
}

struct Aggregate {
    bool feasible = false;
    double min_rho = 0.0;
    double avg_rho = 0.0;
    std::uint64_t records = 0;
    std::uint64_t violations = 0;
};

Aggregate aggregate(const PointResult& point)
{
    Aggregate a;
    double weighted = 0.0;
    bool first = true;
    for (const SeedRun& run : point.runs) {
        if (!run.feasible || run.summary.rho.empty)
            continue;
        const latsched_rho_summary& r = run.summary.rho;
        a.min_rho = first ? r.min_rho : std::min(a.min_rho, r.min_rho);
        first = false;
        weighted += r.avg_rho * static_cast<double>(r.records);
        a.records += r.records;
        a.violations += r.violations;
    }
    a.feasible = !first;
    if (a.records > 0)
        a.avg_rho = weighted / static_cast<double>(a.records);
    return a;
}

bool point_failed(const PointResult& point)
{
    for (const SeedRun& run : point.runs) {
        if (!run.feasible || run.summary.rho.violations > 0)
            return true;
    }
    return false;
}

const char* kSummaryHeader =
    "kind,k,gamma,f,nodes,seed,status,beta,dd,power,nominal_spacing,realized_min_distance,"
    "realized_max_distance,records,min_rho,avg_rho,avg_over_min,violations";

std::string prefix_columns(const latsched_sim_config& c)
{
    return std::string(latsched_kind_name(c.kind)) + "," + std::to_string(c.k) + "," + num(c.gamma) + "," +
           num(c.f) + "," + std::to_string(extent_size(c.extent));
}

void write_point_rows(std::ostringstream& out, const PointResult& point, const std::string& lead = {})
{
    const std::string prefix = lead + prefix_columns(point.config);
    for (const SeedRun& run : point.runs) {
        out << prefix << ',' << run.seed << ',';
        if (!run.feasible) {
            out << "infeasible,,,,,,,,,,,\n";
            continue;
        }
        const latsched_sim_summary& s = run.summary;
        const double ratio = s.rho.empty || s.rho.min_rho == 0.0 ? 0.0 : s.rho.avg_rho / s.rho.min_rho;
        out << point_status_name(s.point.status) << ',' << num(s.beta) << ',' << num(s.dd) << ',' << num(s.power)
            << ',' << num(s.nominal_spacing) << ',' << num(s.realized_min_distance) << ','
            << num(s.realized_max_distance) << ',' << s.rho.records << ',' << num(s.rho.min_rho) << ','
            << num(s.rho.avg_rho) << ',' << num(ratio) << ',' << s.rho.violations << '\n';
    }
    const Aggregate a = aggregate(point);
    out << prefix << ",all,";
    if (!a.feasible) {
        out << "infeasible,,,,,,,,,,,\n";
        return;
    }
    out << "aggregate,,,,,,," << a.records << ',' << num(a.min_rho) << ',' << num(a.avg_rho) << ','
        << num(a.min_rho == 0.0 ? 0.0 : a.avg_rho / a.min_rho) << ',' << a.violations << '\n';
}

Json point_json(const PointResult& point)
{
    const latsched_sim_config& c = point.config;
    Json j;
    j["kind"] = latsched_kind_name(c.kind);
    j["k"] = c.k;
    j["gamma"] = c.gamma;
    j["f"] = c.f;
    j["eta"] = c.eta;
    j["nodes"] = extent_size(c.extent);
    Json runs = Json::array();
    for (const SeedRun& run : point.runs) {
        Json r;
        r["seed"] = run.seed;
        if (!run.feasible) {
            r["status"] = "infeasible";
            r["error"] = run.error;
        } else {
            const latsched_sim_summary& s = run.summary;
            r["status"] = point_status_name(s.point.status);
            r["beta"] = s.beta;
            r["dd"] = s.dd;
            r["power"] = s.power;
            r["nominal_spacing"] = s.nominal_spacing;
            r["realized_min_distance"] = s.realized_min_distance;
            r["realized_max_distance"] = s.realized_max_distance;
            r["records"] = s.rho.records;
            r["min_rho"] = s.rho.min_rho;
            r["avg_rho"] = s.rho.avg_rho;
            r["avg_over_min"] = s.rho.min_rho == 0.0 ? 0.0 : s.rho.avg_rho / s.rho.min_rho;
            r["violations"] = s.rho.violations;
        }
        runs.push_back(std::move(r));
    }
    j["runs"] = std::move(runs);
    const Aggregate a = aggregate(point);
    Json agg;
    agg["feasible"] = a.feasible;
    if (a.feasible) {
        agg["records"] = a.records;
        agg["min_rho"] = a.min_rho;
        agg["avg_rho"] = a.avg_rho;
        agg["avg_over_min"] = a.min_rho == 0.0 ? 0.0 : a.avg_rho / a.min_rho;
        agg["violations"] = a.violations;
    }
    j["aggregate"] = std::move(agg);
    return j;
}

void report_point(const PointResult& point)
{
    const Aggregate a = aggregate(point);
    if (!a.feasible) {
        std::cerr << "point infeasible: " << (point.runs.empty() ? "" : point.runs.front().error) << '\n';
        return;
    }
    std::cerr << latsched_kind_name(point.config.kind) << " k=" << point.config.k << " gamma=" << num(point.config.gamma)
              << " f=" << num(point.config.f) << ": min_rho=" << num(a.min_rho) << " avg_rho=" << num(a.avg_rho)
              << " violations=" << a.violations << '\n';
}

}  // namespace

int cmd_schedule(const RunConfig& config)
{
    const latsched_extent extent = resolve_extent(config, latsched_extent_from_dims(10, 10));
    latsched_schedule* raw = nullptr;
    check(latsched_schedule_build(config.kind, config.k, &extent, &raw));
    ScheduleHandle schedule(raw);

    if (config.format == OutputFormat::Csv) {
        check(latsched_schedule_write_csv(schedule.get(), &extent, config.out.c_str()));
        return kOk;
    }
    int32_t frame = 0;
    check(latsched_schedule_info(schedule.get(), nullptr, nullptr, &frame));
    Json j;
    j["kind"] = latsched_kind_name(config.kind);
    j["k"] = config.k;
    j["frame_length"] = frame;
    j["extent"] = extent_box(extent);
    Json rows = Json::array();
    const std::size_t n = latsched_schedule_size(schedule.get());
    for (std::size_t i = 0; i < n; ++i) {
        int32_t x = 0, y = 0, slot = 0;
        check(latsched_schedule_entry(schedule.get(), i, &x, &y, &slot));
        rows.push_back({{"x", x}, {"y", y}, {"slot", slot}});
    }
    j["nodes"] = std::move(rows);
    emit(config.out, j.dump(2) + "\n");
    return kOk;
}

int cmd_verify(const RunConfig& config)
{
    latsched_schedule* raw = nullptr;
    latsched_extent extent{};
    if (!config.schedule_file.empty()) {
        int has_extent = 0;
        check(latsched_schedule_read_csv(config.schedule_file.c_str(), &raw, &extent, &has_extent));
        if (config.extent || config.nodes)
            extent = resolve_extent(config, extent);
        else if (!has_extent)
            throw CliError(kBadConfig, "schedule file has no extent metadata; pass --extent or --nodes");
    } else {
        extent = resolve_extent(config, latsched_extent_from_dims(30, 30));
        check(latsched_schedule_build(config.kind, config.k, &extent, &raw));
    }
    ScheduleHandle schedule(raw);

    latsched_verify_report* raw_report = nullptr;
    check(latsched_verify(schedule.get(), &extent, &raw_report));
    VerifyHandle report(raw_report);
    const std::size_t count = latsched_verify_report_count(report.get());

    if (config.format == OutputFormat::Csv) {
        check(latsched_verify_report_write_csv(report.get(), config.out.c_str()));
    } else {
        Json j;
        j["valid"] = count == 0;
        j["nodes"] = extent_size(extent);
        Json list = Json::array();
        for (std::size_t i = 0; i < count; ++i) {
            latsched_violation v{};
            check(latsched_verify_report_get(report.get(), i, &v));
            list.push_back({{"slot", v.slot},
                            {"node_a", node(v.ax, v.ay)},
                            {"node_b", v.has_b ? node(v.bx, v.by) : std::string()},
                            {"reason", v.reason}});
        }
        j["violations"] = std::move(list);
        emit(config.out, j.dump(2) + "\n");
    }
    std::cerr << (count == 0 ? "schedule valid" : "schedule INVALID") << ": " << extent_size(extent) << " nodes, "
              << count << " violation(s)\n";
    return count == 0 ? kOk : kCheckFailed;
}

int cmd_clique(const RunConfig& config)
{
    const bool explicit_extent = config.extent || config.nodes;
    const latsched_extent extent = resolve_extent(config, {});
    latsched_clique_report* raw = nullptr;
    check(latsched_clique(config.kind, config.k, explicit_extent ? &extent : nullptr, config.budget, &raw));
    CliqueHandle report(raw);
    latsched_clique_summary s{};
    check(latsched_clique_report_summary(report.get(), &s));

    std::vector<std::pair<int32_t, int32_t>> witness;
    for (std::size_t i = 0; i < latsched_clique_report_witness_size(report.get()); ++i) {
        int32_t x = 0, y = 0;
        check(latsched_clique_report_witness(report.get(), i, &x, &y));
        witness.emplace_back(x, y);
    }
    const std::string ratio = std::to_string(s.ratio_num) + "/" + std::to_string(s.ratio_den);
    const std::string oracle =
        s.skipped_budget ? "oracle skipped (budget)" : (s.brute_force == s.formula ? "agree" : "disagree");

    if (config.format == OutputFormat::Csv) {
        std::ostringstream out;
        out << "# kind=" << latsched_kind_name(config.kind) << "\n# k=" << config.k << "\n# formula=" << s.formula
            << "\n# brute_force=" << (s.skipped_budget ? std::string("skipped") : std::to_string(s.brute_force))
            << "\n# oracle=" << oracle << "\n# graph_nodes=" << s.graph_nodes << "\n# budget=" << config.budget
            << "\n# frame_length=" << s.frame_length << "\n# approximation_ratio=" << ratio << "\nx,y\n";
        for (const auto& [x, y] : witness)
            out << x << ',' << y << '\n';
        emit(config.out, out.str());
    } else {
        Json j;
        j["kind"] = latsched_kind_name(config.kind);
        j["k"] = config.k;
        j["formula"] = s.formula;
        j["brute_force"] = s.skipped_budget ? Json(nullptr) : Json(s.brute_force);
        j["oracle"] = oracle;
        j["graph_nodes"] = s.graph_nodes;
        j["budget"] = config.budget;
        j["frame_length"] = s.frame_length;
        j["approximation_ratio"] = ratio;
        Json w = Json::array();
        for (const auto& [x, y] : witness)
            w.push_back({{"x", x}, {"y", y}});
        j["witness"] = std::move(w);
        emit(config.out, j.dump(2) + "\n");
    }
    std::cerr << "clique " << latsched_kind_name(config.kind) << " k=" << config.k << ": formula " << s.formula
              << ", " << oracle << ", ratio " << ratio << '\n';
    return s.skipped_budget || s.brute_force == s.formula ? kOk : kCheckFailed;
}

int cmd_feasibility(const RunConfig& config)
{
    const double beta = config.beta.value_or(1.0);
    struct Row {
        double gamma;
        int k;
        latsched_region region;
    };
    std::vector<Row> rows;
    for (double gamma : config.gammas) {
        for (int k : config.ks) {
            latsched_region region{};
            check(latsched_feasibility(config.kind, beta, gamma, k, &region));
            rows.push_back({gamma, k, region});
        }
    }
    std::size_t feasible = 0;
    for (const Row& r : rows)
        feasible += r.region.feasible ? 1 : 0;

    if (config.format == OutputFormat::Csv) {
        std::ostringstream out;
        out << "# kind=" << latsched_kind_name(config.kind) << "\n# beta=" << num(beta) << "\n# rows=" << rows.size()
            << "\n# feasible_rows=" << feasible << "\nkind,beta,gamma,k,dd_max,beta_max,feasible\n";
        for (const Row& r : rows) {
            out << latsched_kind_name(config.kind) << ',' << num(beta) << ',' << num(r.gamma) << ',' << r.k << ','
                << num(r.region.dd_max) << ',' << num(r.region.beta_max) << ','
                << (r.region.feasible ? "true" : "false") << '\n';
        }
        emit(config.out, out.str());
    } else {
        Json j;
        j["kind"] = latsched_kind_name(config.kind);
        j["beta"] = beta;
        Json list = Json::array();
        for (const Row& r : rows) {
            list.push_back({{"gamma", r.gamma},
                            {"k", r.k},
                            {"dd_max", r.region.dd_max},
                            {"beta_max", r.region.beta_max},
                            {"feasible", r.region.feasible != 0}});
        }
        j["rows"] = std::move(list);
        emit(config.out, j.dump(2) + "\n");
    }
    return feasible > 0 ? kOk : kCheckFailed;
}

int cmd_simulate(const RunConfig& config)
{
    const std::string dir = config.out == "-" ? "sim_out" : config.out;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        throw CliError(kBadConfig, "cannot create output directory '" + dir + "': " + ec.message());

    const PointResult point = run_point(base_sim_config(config), config.seeds, dir);
    report_point(point);

    if (config.format == OutputFormat::Csv) {
        std::ostringstream out;
        out << kSummaryHeader << '\n';
        write_point_rows(out, point);
        emit((std::filesystem::path(dir) / "summary.csv").string(), out.str());
    } else {
        emit((std::filesystem::path(dir) / "summary.json").string(), point_json(point).dump(2) + "\n");
    }
    return point_failed(point) ? kCheckFailed : kOk;
}

int cmd_sweep(const RunConfig& config)
{
    if (config.param != "k" && config.param != "f" && config.param != "nodes" && config.param != "gamma")
        throw CliError(kBadConfig, "--param must be one of k, f, nodes, gamma");
    if (config.values.empty())
        throw CliError(kBadConfig, "--values must list at least one value");

    latsched_sim_config base = base_sim_config(config);
    if (config.hold_point && !base.hold_point) {
        // Freeze (beta, D/d) at the first point of the sweep.
        latsched_sim_config first = base;
        if (config.param == "k")
            first.k = static_cast<int32_t>(config.values.front());
        else if (config.param == "gamma")
            first.gamma = config.values.front();
        else if (config.param == "f")
            first.f = config.values.front();
        latsched_operating_point op{};
        check(latsched_operating_point_at(first.kind, first.gamma, first.k, first.f, &op));
        base.hold_point = 1;
        base.fixed_beta = op.beta;
        base.fixed_dd = op.dd;
    }

    std::vector<PointResult> points;
    for (double value : config.values) {
        latsched_sim_config c = base;
        if (config.param == "k") {
            if (value < 1 || value != static_cast<int32_t>(value))
                throw CliError(kBadConfig, "k sweep values must be integers >= 1");
            c.k = static_cast<int32_t>(value);
        } else if (config.param == "f") {
            if (!(value >= 0.0 && value <= 1.0))
                throw CliError(kBadConfig, "f sweep values must lie in [0, 1]");
            c.f = value;
        } else if (config.param == "gamma") {
            if (!(value > 2.0))
                throw CliError(kBadConfig, "gamma sweep values must exceed 2");
            c.gamma = value;
        } else {
            if (value < 0 || value != static_cast<double>(static_cast<std::uint64_t>(value)))
                throw CliError(kBadConfig, "node-count sweep values must be nonnegative integers");
            c.extent = latsched_extent_with_nodes(static_cast<std::uint64_t>(value));
        }
        points.push_back(run_point(c, config.seeds, {}));
        report_point(points.back());
    }

    bool failed = false;
    for (const PointResult& p : points)
        failed = failed || point_failed(p);

    if (config.format == OutputFormat::Csv) {
        std::ostringstream out;
        out << "# param=" << config.param << "\n# hold_point=" << (base.hold_point ? "true" : "false") << '\n';
        if (base.hold_point)
            out << "# fixed_beta=" << num(base.fixed_beta) << "\n# fixed_dd=" << num(base.fixed_dd) << '\n';
        out << "value," << kSummaryHeader << '\n';
        for (std::size_t i = 0; i < points.size(); ++i)
            write_point_rows(out, points[i], num(config.values[i]) + ",");
        emit(config.out, out.str());
    } else {
        Json j;
        j["param"] = config.param;
        j["hold_point"] = base.hold_point != 0;
        if (base.hold_point) {
            j["fixed_beta"] = base.fixed_beta;
            j["fixed_dd"] = base.fixed_dd;
        }
        Json list = Json::array();
        for (std::size_t i = 0; i < points.size(); ++i) {
            Json p = point_json(points[i]);
            p["value"] = config.values[i];
            list.push_back(std::move(p));
        }
        j["points"] = std::move(list);
        emit(config.out, j.dump(2) + "\n");
    }
    return failed ? kCheckFailed : kOk;
}

}  // namespace cli
