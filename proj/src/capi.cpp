#include "latsched/latsched.h"

#include "latsched/deployment.hpp"
#include "latsched/error.hpp"
#include "latsched/formats.hpp"
#include "latsched/interference.hpp"
#include "latsched/lattice.hpp"
#include "latsched/scheduler.hpp"
#include "latsched/simulation.hpp"
#include "latsched/sinr.hpp"

#include <fstream>
#include <cstdio>
#include <iostream>
#include <memory>
#include <new>
#include <string>

using namespace latsched;

struct latsched_schedule {
    Schedule schedule;
};

struct latsched_verify_report {
    VerificationReport report;
};

struct latsched_clique_report {
    latsched_clique_summary summary{};
    std::vector<LatticeCoord> witness;
};

struct latsched_deployment {
    Deployment deployment;
};

struct latsched_rho_report {
    RhoReport report;
};

struct latsched_simulation {
    SimulationConfig config;
    SimulationResult result;
    latsched_rho_report report;
    latsched_deployment deployment;
};

namespace {

thread_local std::string g_last_error;

latsched_status to_status(ErrorCode code)
{
    switch (code) {
    case ErrorCode::InvalidArgument: return LATSCHED_ERR_INVALID_ARGUMENT;
    case ErrorCode::Domain: return LATSCHED_ERR_DOMAIN;
    case ErrorCode::Infeasible: return LATSCHED_ERR_INFEASIBLE;
    case ErrorCode::BudgetExceeded: return LATSCHED_ERR_BUDGET;
    case ErrorCode::Io: return LATSCHED_ERR_IO;
    case ErrorCode::Parse: return LATSCHED_ERR_PARSE;
    case ErrorCode::OracleFailure: return LATSCHED_ERR_ORACLE;
    }
    return LATSCHED_ERR_INTERNAL;
}

template <typename Fn>
latsched_status guarded(Fn&& fn) noexcept
{
    try {
        g_last_error.clear();
        fn();
        return LATSCHED_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return LATSCHED_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return LATSCHED_ERR_INTERNAL;
    }
}

template <typename T>
T& require(T* p, const char* what)
{
    if (!p)
        fail(ErrorCode::InvalidArgument, std::string(what) + " must not be NULL");
    return *p;
}

std::string require_str(const char* p, const char* what)
{
    if (!p)
        fail(ErrorCode::InvalidArgument, std::string(what) + " must not be NULL");
    return p;
}

LatticeKind to_kind(latsched_kind kind)
{
    switch (kind) {
    case LATSCHED_HEX: return LatticeKind::Hexagonal;
    case LATSCHED_SQUARE: return LatticeKind::SquareGrid;
    }
    fail(ErrorCode::InvalidArgument, "unknown lattice kind");
}

latsched_kind from_kind(LatticeKind kind) { return kind == LatticeKind::Hexagonal ? LATSCHED_HEX : LATSCHED_SQUARE; }

NetworkExtent to_extent(const latsched_extent* e)
{
    const latsched_extent& ext = require(e, "extent");
    NetworkExtent out = NetworkExtent::box(ext.x0, ext.y0, ext.x1, ext.y1);
    if (ext.node_limit >= 0)
        out = out.truncated(static_cast<std::size_t>(ext.node_limit));
    return out;
}

latsched_extent from_extent(const NetworkExtent& e)
{
    const std::size_t full = static_cast<std::size_t>(e.width()) * static_cast<std::size_t>(e.height());
    return {e.x0(), e.y0(), e.x1(), e.y1(), e.size() == full ? -1 : static_cast<int64_t>(e.size())};
}

SinrParams to_params(const latsched_sinr_params* p)
{
    const latsched_sinr_params& in = require(p, "params");
    SinrParams out;
    out.beta = in.beta;
    out.gamma = in.gamma;
    out.eta = in.eta;
    out.k = InterferenceK(in.k);
    out.d = in.d;
    out.D = in.D;
    out.P = in.P;
    return out;
}

latsched_rho_summary to_summary(const RhoReport& r)
{
    return {r.min_rho, r.avg_rho, r.records.size(), r.violations, r.empty ? 1 : 0};
}

latsched_operating_point to_point(const OperatingPoint& op)
{
    int32_t status = LATSCHED_POINT_INTERIOR;
    if (op.status == OperatingPoint::Status::Degenerate)
        status = LATSCHED_POINT_DEGENERATE;
    else if (op.status == OperatingPoint::Status::Boundary)
        status = LATSCHED_POINT_BOUNDARY;
    return {op.f, op.beta, op.dd, op.beta_max, op.dd_max_at_beta, status};
}

template <typename Writer>
void write_to(const char* path, Writer&& writer)
{
    const std::string target = require_str(path, "path");
    if (target == "-") {
        writer(std::cout);
        std::cout.flush();
        return;
    }
    // Write to a sibling temporary first so readers never observe a partial file.
    const std::string tmp = target + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            fail(ErrorCode::Io, "cannot open '" + tmp + "' for writing");
        writer(out);
        out.flush();
        if (!out)
            fail(ErrorCode::Io, "write to '" + tmp + "' failed");
    }
    if (std::rename(tmp.c_str(), target.c_str()) != 0)
        fail(ErrorCode::Io, "cannot move '" + tmp + "' to '" + target + "'");
}

}  // namespace

extern "C" {

const char* latsched_version(void) { return "1.0.0"; }

const char* latsched_last_error(void) { return g_last_error.c_str(); }

const char* latsched_status_name(latsched_status status)
{
    switch (status) {
    case LATSCHED_OK: return "ok";
    case LATSCHED_ERR_INVALID_ARGUMENT: return "invalid argument";
    case LATSCHED_ERR_DOMAIN: return "domain error";
    case LATSCHED_ERR_INFEASIBLE: return "infeasible";
    case LATSCHED_ERR_BUDGET: return "budget exceeded";
    case LATSCHED_ERR_IO: return "i/o error";
    case LATSCHED_ERR_PARSE: return "parse error";
    case LATSCHED_ERR_ORACLE: return "oracle failure";
    case LATSCHED_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

latsched_status latsched_parse_kind(const char* text, latsched_kind* out)
{
    return guarded([&] {
        const auto kind = parse_kind(require_str(text, "text"));
        if (!kind)
            fail(ErrorCode::InvalidArgument, std::string("unknown lattice kind '") + text + "' (use hex or square)");
        require(out, "out") = from_kind(*kind);
    });
}

const char* latsched_kind_name(latsched_kind kind) { return kind == LATSCHED_HEX ? "hex" : "square"; }

latsched_extent latsched_extent_from_dims(int32_t width, int32_t height)
{
    return {0, 0, width - 1, height - 1, -1};
}

latsched_extent latsched_extent_with_nodes(uint64_t n) { return from_extent(NetworkExtent::with_node_count(n)); }

latsched_status latsched_extent_size(const latsched_extent* extent, uint64_t* out)
{
    return guarded([&] { require(out, "out") = to_extent(extent).size(); });
}

latsched_status latsched_graph_distance(latsched_kind kind, int32_t x1, int32_t y1, int32_t x2, int32_t y2,
                                        int32_t* out)
{
    return guarded([&] { require(out, "out") = graph_distance(to_kind(kind), {x1, y1}, {x2, y2}); });
}

latsched_status latsched_bfs_distance(latsched_kind kind, int32_t x1, int32_t y1, int32_t x2, int32_t y2,
                                      int32_t search_radius, int32_t* out)
{
    return guarded(
        [&] { require(out, "out") = bfs_distance(to_kind(kind), {x1, y1}, {x2, y2}, search_radius); });
}

latsched_status latsched_slot(latsched_kind kind, int32_t k, int32_t x, int32_t y, int32_t* out)
{
    return guarded([&] { require(out, "out") = slot_of(to_kind(kind), {x, y}, InterferenceK(k)); });
}

latsched_status latsched_frame_length(latsched_kind kind, int32_t k, int32_t* out)
{
    return guarded([&] { require(out, "out") = frame_length(to_kind(kind), InterferenceK(k)); });
}

latsched_status latsched_schedule_build(latsched_kind kind, int32_t k, const latsched_extent* extent,
                                        latsched_schedule** out)
{
    return guarded([&] {
        require(out, "out") = nullptr;
        *out = new latsched_schedule{build_schedule(to_kind(kind), InterferenceK(k), to_extent(extent))};
    });
}

latsched_status latsched_schedule_read_csv(const char* path, latsched_schedule** out, latsched_extent* extent,
                                           int* has_extent)
{
    return guarded([&] {
        require(out, "out") = nullptr;
        const std::string file = require_str(path, "path");
        ScheduleFile parsed = [&] {
            if (file == "-")
                return read_schedule_csv(std::cin);
            std::ifstream in(file);
            if (!in)
                fail(ErrorCode::Io, "cannot open '" + file + "'");
            return read_schedule_csv(in);
        }();
        if (has_extent)
            *has_extent = parsed.extent ? 1 : 0;
        if (extent && parsed.extent)
            *extent = from_extent(*parsed.extent);
        *out = new latsched_schedule{std::move(parsed.schedule)};
    });
}

latsched_status latsched_schedule_write_csv(const latsched_schedule* schedule, const latsched_extent* extent,
                                            const char* path)
{
    return guarded([&] {
        const Schedule& s = require(schedule, "schedule").schedule;
        const NetworkExtent e = to_extent(extent);
        write_to(path, [&](std::ostream& out) { write_schedule_csv(out, s, e); });
    });
}

latsched_status latsched_schedule_info(const latsched_schedule* schedule, latsched_kind* kind, int32_t* k,
                                       int32_t* frame_length)
{
    return guarded([&] {
        const Schedule& s = require(schedule, "schedule").schedule;
        if (kind)
            *kind = from_kind(s.kind());
        if (k)
            *k = s.k().value();
        if (frame_length)
            *frame_length = s.frame_length();
    });
}

size_t latsched_schedule_size(const latsched_schedule* schedule) { return schedule ? schedule->schedule.size() : 0; }

latsched_status latsched_schedule_entry(const latsched_schedule* schedule, size_t index, int32_t* x, int32_t* y,
                                        int32_t* slot)
{
    return guarded([&] {
        const Schedule& s = require(schedule, "schedule").schedule;
        if (index >= s.size())
            fail(ErrorCode::InvalidArgument, "schedule entry index out of range");
        const SlotAssignment& a = s.assignments()[index];
        require(x, "x") = a.node.x;
        require(y, "y") = a.node.y;
        require(slot, "slot") = a.slot;
    });
}

void latsched_schedule_destroy(latsched_schedule* schedule) { delete schedule; }

latsched_status latsched_verify(const latsched_schedule* schedule, const latsched_extent* extent,
                                latsched_verify_report** out)
{
    return guarded([&] {
        require(out, "out") = nullptr;
        *out = new latsched_verify_report{verify_schedule(require(schedule, "schedule").schedule, to_extent(extent))};
    });
}

size_t latsched_verify_report_count(const latsched_verify_report* report)
{
    return report ? report->report.violations.size() : 0;
}

latsched_status latsched_verify_report_get(const latsched_verify_report* report, size_t index,
                                           latsched_violation* out)
{
    return guarded([&] {
        const VerificationReport& r = require(report, "report").report;
        if (index >= r.violations.size())
            fail(ErrorCode::InvalidArgument, "violation index out of range");
        const Violation& v = r.violations[index];
        latsched_violation& dst = require(out, "out");
        dst.slot = v.slot;
        dst.ax = v.a.x;
        dst.ay = v.a.y;
        dst.has_b = v.b ? 1 : 0;
        dst.bx = v.b ? v.b->x : 0;
        dst.by = v.b ? v.b->y : 0;
        dst.reason = to_string(v.reason).data();
    });
}

latsched_status latsched_verify_report_write_csv(const latsched_verify_report* report, const char* path)
{
    return guarded([&] {
        const VerificationReport& r = require(report, "report").report;
        write_to(path, [&](std::ostream& out) { write_violations_csv(out, r); });
    });
}

void latsched_verify_report_destroy(latsched_verify_report* report) { delete report; }

latsched_status latsched_clique(latsched_kind kind, int32_t k, const latsched_extent* extent, uint64_t budget,
                                latsched_clique_report** out)
{
    return guarded([&] {
        require(out, "out") = nullptr;
        const LatticeKind lk = to_kind(kind);
        const InterferenceK kk(k);
        const NetworkExtent e = extent ? to_extent(extent) : clique_witness_extent(kk);
        auto report = std::make_unique<latsched_clique_report>();
        const Ratio ratio = approximation_ratio(lk, kk);
        report->summary.formula = clique_number_formula(lk, kk);
        report->summary.frame_length = frame_length(lk, kk);
        report->summary.ratio_num = ratio.num();
        report->summary.ratio_den = ratio.den();
        report->summary.graph_nodes = e.size();
        report->summary.brute_force = -1;
        if (e.size() > budget) {
            report->summary.skipped_budget = 1;
        } else {
            const CliqueResult best = brute_force_max_clique(build_interference_graph(lk, kk, e), budget);
            report->summary.brute_force = static_cast<int32_t>(best.size);
            report->witness = best.witness;
        }
        *out = report.release();
    });
}

latsched_status latsched_clique_report_summary(const latsched_clique_report* report, latsched_clique_summary* out)
{
    return guarded([&] { require(out, "out") = require(report, "report").summary; });
}

size_t latsched_clique_report_witness_size(const latsched_clique_report* report)
{
    return report ? report->witness.size() : 0;
}

latsched_status latsched_clique_report_witness(const latsched_clique_report* report, size_t index, int32_t* x,
                                               int32_t* y)
{
    return guarded([&] {
        const auto& w = require(report, "report").witness;
        if (index >= w.size())
            fail(ErrorCode::InvalidArgument, "witness index out of range");
        require(x, "x") = w[index].x;
        require(y, "y") = w[index].y;
    });
}

void latsched_clique_report_destroy(latsched_clique_report* report) { delete report; }

latsched_status latsched_feasibility(latsched_kind kind, double beta, double gamma, int32_t k, latsched_region* out)
{
    return guarded([&] {
        const FeasibilityRegion r = feasibility(to_kind(kind), beta, gamma, InterferenceK(k));
        require(out, "out") = {r.dd_max, r.beta_max, r.feasible ? 1 : 0};
    });
}

latsched_status latsched_power_threshold(latsched_kind kind, const latsched_sinr_params* params, double* out)
{
    return guarded([&] {
        const auto p = power_threshold(to_kind(kind), to_params(params));
        if (!p)
            fail(ErrorCode::Infeasible, "configuration lies outside the feasibility region");
        require(out, "out") = *p;
    });
}

latsched_status latsched_interference_bound(latsched_kind kind, const latsched_sinr_params* params, double* out)
{
    return guarded([&] { require(out, "out") = interference_bound(to_kind(kind), to_params(params)); });
}

latsched_status latsched_exact_interference(latsched_kind kind, const latsched_sinr_params* params, int32_t rings,
                                            double* out)
{
    return guarded(
        [&] { require(out, "out") = exact_regular_interference(to_kind(kind), to_params(params), rings); });
}

latsched_status latsched_operating_point_at(latsched_kind kind, double gamma, int32_t k, double f,
                                            latsched_operating_point* out)
{
    return guarded(
        [&] { require(out, "out") = to_point(operating_point(to_kind(kind), gamma, InterferenceK(k), f)); });
}

latsched_status latsched_deployment_generate(latsched_kind kind, const latsched_extent* extent, double dd_target,
                                             uint64_t seed, latsched_deployment** out)
{
    return guarded([&] {
        require(out, "out") = nullptr;
        *out = new latsched_deployment{generate(to_kind(kind), to_extent(extent), dd_target, seed)};
    });
}

size_t latsched_deployment_size(const latsched_deployment* deployment)
{
    return deployment ? deployment->deployment.positions.size() : 0;
}

latsched_status latsched_deployment_position(const latsched_deployment* deployment, size_t index, int32_t* x,
                                             int32_t* y, double* px, double* py)
{
    return guarded([&] {
        const Deployment& d = require(deployment, "deployment").deployment;
        if (index >= d.positions.size())
            fail(ErrorCode::InvalidArgument, "deployment index out of range");
        const LatticeCoord p = d.extent.node(index);
        require(x, "x") = p.x;
        require(y, "y") = p.y;
        require(px, "px") = d.positions[index].x;
        require(py, "py") = d.positions[index].y;
    });
}

latsched_status latsched_deployment_write_csv(const latsched_deployment* deployment, const char* path)
{
    return guarded([&] {
        const Deployment& d = require(deployment, "deployment").deployment;
        write_to(path, [&](std::ostream& out) { write_deployment_csv(out, d); });
    });
}

void latsched_deployment_destroy(latsched_deployment* deployment) { delete deployment; }

latsched_status latsched_evaluate(const latsched_deployment* deployment, const latsched_schedule* schedule,
                                  const latsched_sinr_params* params, latsched_rho_report** out)
{
    return guarded([&] {
        require(out, "out") = nullptr;
        *out = new latsched_rho_report{evaluate(require(deployment, "deployment").deployment,
                                                require(schedule, "schedule").schedule, to_params(params))};
    });
}

latsched_status latsched_rho_report_summary(const latsched_rho_report* report, latsched_rho_summary* out)
{
    return guarded([&] { require(out, "out") = to_summary(require(report, "report").report); });
}

latsched_status latsched_rho_report_record(const latsched_rho_report* report, size_t index, latsched_rho_record* out)
{
    return guarded([&] {
        const RhoReport& r = require(report, "report").report;
        if (index >= r.records.size())
            fail(ErrorCode::InvalidArgument, "record index out of range");
        const RhoRecord& rec = r.records[index];
        require(out, "out") = {rec.slot, rec.tx.x, rec.tx.y, rec.rx.x, rec.rx.y, rec.sinr, rec.rho};
    });
}

latsched_status latsched_rho_report_write_csv(const latsched_rho_report* report, const char* path)
{
    return guarded([&] {
        const RhoReport& r = require(report, "report").report;
        write_to(path, [&](std::ostream& out) { write_rho_csv(out, r); });
    });
}

void latsched_rho_report_destroy(latsched_rho_report* report) { delete report; }

latsched_sim_config latsched_sim_config_default(void)
{
    latsched_sim_config c{};
    c.kind = LATSCHED_HEX;
    c.k = 2;
    c.gamma = 3.0;
    c.f = 0.5;
    c.eta = 1.0;
    c.extent = latsched_extent_with_nodes(4000);
    c.seed = 1;
    c.power_margin = 1e-3;
    c.hold_point = 0;
    return c;
}

latsched_status latsched_simulate(const latsched_sim_config* config, latsched_simulation** out)
{
    return guarded([&] {
        require(out, "out") = nullptr;
        const latsched_sim_config& c = require(config, "config");
        auto sim = std::make_unique<latsched_simulation>();
        sim->config.kind = to_kind(c.kind);
        sim->config.k = InterferenceK(c.k);
        sim->config.gamma = c.gamma;
        sim->config.f = c.f;
        sim->config.eta = c.eta;
        sim->config.extent = to_extent(&c.extent);
        sim->config.seed = c.seed;
        sim->config.power_margin = c.power_margin;
        if (c.hold_point) {
            sim->config.fixed_beta = c.fixed_beta;
            sim->config.fixed_dd = c.fixed_dd;
        }
        sim->result = simulate(sim->config);
        sim->report.report = std::move(sim->result.report);
        sim->deployment.deployment = std::move(sim->result.deployment);
        *out = sim.release();
    });
}

latsched_status latsched_simulation_summary(const latsched_simulation* sim, latsched_sim_summary* out)
{
    return guarded([&] {
        const latsched_simulation& s = require(sim, "sim");
        latsched_sim_summary& dst = require(out, "out");
        dst.point = to_point(s.result.point);
        dst.beta = s.result.beta;
        dst.dd = s.result.dd;
        dst.power = s.result.power;
        dst.nominal_spacing = s.deployment.deployment.nominal_spacing;
        dst.realized_min_distance = s.result.realized.min;
        dst.realized_max_distance = s.result.realized.max;
        dst.rho = to_summary(s.report.report);
    });
}

const latsched_rho_report* latsched_simulation_report(const latsched_simulation* sim)
{
    return sim ? &sim->report : nullptr;
}

const latsched_deployment* latsched_simulation_deployment(const latsched_simulation* sim)
{
    return sim ? &sim->deployment : nullptr;
}

latsched_status latsched_simulation_write_report_csv(const latsched_simulation* sim, const char* path)
{
    return guarded([&] {
        const latsched_simulation& s = require(sim, "sim");
        const Metadata meta{{"kind", std::string(to_string(s.config.kind))},
                            {"k", std::to_string(s.config.k.value())},
                            {"gamma", format_double(s.config.gamma)},
                            {"f", format_double(s.config.f)},
                            {"beta", format_double(s.result.beta)},
                            {"dd", format_double(s.result.dd)},
                            {"eta", format_double(s.config.eta)},
                            {"power", format_double(s.result.power)},
                            {"nodes", std::to_string(s.config.extent.size())},
                            {"seed", std::to_string(s.config.seed)},
                            {"rng", std::string(Rng::kName)},
                            {"nominal_spacing", format_double(s.deployment.deployment.nominal_spacing)},
                            {"realized_min_neighbor_distance", format_double(s.result.realized.min)},
                            {"realized_max_neighbor_distance", format_double(s.result.realized.max)}};
        write_to(path, [&](std::ostream& out) { write_rho_csv(out, s.report.report, meta); });
    });
}

void latsched_simulation_destroy(latsched_simulation* sim) { delete sim; }

}  // extern "C"
