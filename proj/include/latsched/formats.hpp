#pragma once

// CSV file formats. Every file starts with a block of "# key=value" metadata lines,
// followed by a header row and data rows.

#include "latsched/deployment.hpp"
#include "latsched/lattice.hpp"
#include "latsched/scheduler.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace latsched {

using Metadata = std::vector<std::pair<std::string, std::string>>;

/// Shortest decimal form that parses back to the identical double.
std::string format_double(double value);
std::optional<std::string> find_meta(const Metadata& meta, std::string_view key);

/// "x0,y0,x1,y1" box bounds; the node count travels separately under "nodes".
std::string format_extent_box(const NetworkExtent& extent);
std::string format_node(LatticeCoord p);  ///< "x:y"

void write_metadata(std::ostream& out, const Metadata& meta);

// Schedule: header x,y,slot.
void write_schedule_csv(std::ostream& out, const Schedule& schedule, const NetworkExtent& extent);

struct ScheduleFile {
    Schedule schedule;
    std::optional<NetworkExtent> extent;
    Metadata metadata;
};

/// Requires metadata keys kind and k; frame_length defaults to the closed form.
/// Throws ErrorCode::Parse on malformed input.
ScheduleFile read_schedule_csv(std::istream& in);

// Verification report: header slot,node_a,node_b,reason.
void write_violations_csv(std::ostream& out, const VerificationReport& report, const Metadata& meta = {});

// Deployment: header x,y,px,py.
void write_deployment_csv(std::ostream& out, const Deployment& deployment);

/// min_rho, avg_rho, avg_over_min, records, violations.
Metadata rho_summary(const RhoReport& report);

// RhoReport: summary metadata, then header slot,tx_x,tx_y,rx_x,rx_y,sinr,rho.
void write_rho_csv(std::ostream& out, const RhoReport& report, const Metadata& extra = {});

struct RhoFile {
    Metadata metadata;
    std::vector<RhoRecord> records;
};
RhoFile read_rho_csv(std::istream& in);

}  // namespace latsched
