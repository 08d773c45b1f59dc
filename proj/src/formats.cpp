#include "latsched/formats.hpp"

#include "latsched/error.hpp"

#include <array>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <system_error>

namespace latsched {

namespace {

std::vector<std::string> split(std::string_view line, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        out.emplace_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return out;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

template <typename T>
T parse_number(std::string_view text, std::string_view what)
{
    text = trim(text);
    T value{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        fail(ErrorCode::Parse, "cannot parse " + std::string(what) + " from '" + std::string(text) + "'");
    return value;
}

// Splits a stream into metadata, header and rows. Blank lines are skipped.
struct CsvDocument {
    Metadata meta;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

CsvDocument read_document(std::istream& in)
{
    CsvDocument doc;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        const std::string_view view = trim(line);
        if (view.empty())
            continue;
        if (view.front() == '#') {
            const std::string_view body = trim(view.substr(1));
            const std::size_t eq = body.find('=');
            if (eq != std::string_view::npos)
                doc.meta.emplace_back(std::string(trim(body.substr(0, eq))), std::string(trim(body.substr(eq + 1))));
            continue;
        }
        if (!have_header) {
            doc.header = split(view, ',');
            have_header = true;
            continue;
        }
        doc.rows.push_back(split(view, ','));
    }
    if (!have_header)
        fail(ErrorCode::Parse, "missing CSV header row");
    return doc;
}

void expect_header(const CsvDocument& doc, std::initializer_list<std::string_view> columns)
{
    std::size_t i = 0;
    bool ok = doc.header.size() == columns.size();
    for (std::string_view c : columns) {
        if (!ok)
            break;
        ok = trim(doc.header[i++]) == c;
    }
    if (!ok) {
        std::string expected;
        for (std::string_view c : columns)
            expected += (expected.empty() ? "" : ",") + std::string(c);
        fail(ErrorCode::Parse, "unexpected CSV header; expected '" + expected + "'");
    }
}

}  // namespace

std::string format_double(double value)
{
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc{})
        return "nan";
    return std::string(buf.data(), ptr);
}

std::optional<std::string> find_meta(const Metadata& meta, std::string_view key)
{
    for (const auto& [k, v] : meta) {
        if (k == key)
            return v;
    }
    return std::nullopt;
}

std::string format_extent_box(const NetworkExtent& extent)
{
    return std::to_string(extent.x0()) + "," + std::to_string(extent.y0()) + "," + std::to_string(extent.x1()) +
           "," + std::to_string(extent.y1());
}

std::string format_node(LatticeCoord p) { return std::to_string(p.x) + ":" + std::to_string(p.y); }

void write_metadata(std::ostream& out, const Metadata& meta)
{
    for (const auto& [k, v] : meta)
        out << "# " << k << '=' << v << '\n';
}

void write_schedule_csv(std::ostream& out, const Schedule& schedule, const NetworkExtent& extent)
{
    write_metadata(out, {{"format", "latsched-schedule/1"},
                         {"kind", std::string(to_string(schedule.kind()))},
                         {"k", std::to_string(schedule.k().value())},
                         {"frame_length", std::to_string(schedule.frame_length())},
                         {"extent", format_extent_box(extent)},
                         {"nodes", std::to_string(extent.size())}});
    out << "x,y,slot\n";
    for (const SlotAssignment& a : schedule.assignments())
        out << a.node.x << ',' << a.node.y << ',' << a.slot << '\n';
}

ScheduleFile read_schedule_csv(std::istream& in)
{
    const CsvDocument doc = read_document(in);
    expect_header(doc, {"x", "y", "slot"});

    const auto kind_text = find_meta(doc.meta, "kind");
    const auto k_text = find_meta(doc.meta, "k");
    if (!kind_text || !k_text)
        fail(ErrorCode::Parse, "schedule metadata must name kind and k");
    const auto kind = parse_kind(*kind_text);
    if (!kind)
        fail(ErrorCode::Parse, "unknown lattice kind '" + *kind_text + "'");
    const InterferenceK k(parse_number<int>(*k_text, "k"));
    int frame = frame_length(*kind, k);
    if (const auto f = find_meta(doc.meta, "frame_length"))
        frame = parse_number<int>(*f, "frame_length");

    std::vector<SlotAssignment> assignments;
    assignments.reserve(doc.rows.size());
    for (const auto& row : doc.rows) {
        if (row.size() != 3)
            fail(ErrorCode::Parse, "schedule rows need exactly 3 fields");
        assignments.push_back({{parse_number<int>(row[0], "x"), parse_number<int>(row[1], "y")},
                               parse_number<int>(row[2], "slot")});
    }

    std::optional<NetworkExtent> extent;
    if (const auto box = find_meta(doc.meta, "extent")) {
        const auto parts = split(*box, ',');
        if (parts.size() != 4)
            fail(ErrorCode::Parse, "extent metadata must be x0,y0,x1,y1");
        extent = NetworkExtent::box(parse_number<int>(parts[0], "x0"), parse_number<int>(parts[1], "y0"),
                                    parse_number<int>(parts[2], "x1"), parse_number<int>(parts[3], "y1"));
        if (const auto nodes = find_meta(doc.meta, "nodes"))
            extent = extent->truncated(parse_number<std::size_t>(*nodes, "nodes"));
    }
    return {Schedule(*kind, k, frame, std::move(assignments)), extent, doc.meta};
}

void write_violations_csv(std::ostream& out, const VerificationReport& report, const Metadata& meta)
{
    write_metadata(out, meta);
    write_metadata(out, {{"violations", std::to_string(report.violations.size())},
                         {"valid", report.valid() ? "true" : "false"}});
    out << "slot,node_a,node_b,reason\n";
    for (const Violation& v : report.violations) {
        out << v.slot << ',' << format_node(v.a) << ',' << (v.b ? format_node(*v.b) : std::string()) << ','
            << to_string(v.reason) << '\n';
    }
}

void write_deployment_csv(std::ostream& out, const Deployment& deployment)
{
    const auto range = deployment.realized_neighbor_range();
    write_metadata(out, {{"format", "latsched-deployment/1"},
                         {"kind", std::string(to_string(deployment.kind))},
                         {"extent", format_extent_box(deployment.extent)},
                         {"nodes", std::to_string(deployment.extent.size())},
                         {"dd_target", format_double(deployment.dd_target)},
                         {"nominal_spacing", format_double(deployment.nominal_spacing)},
                         {"seed", std::to_string(deployment.seed)},
                         {"rng", std::string(Rng::kName)},
                         {"realized_min_neighbor_distance", format_double(range.min)},
                         {"realized_max_neighbor_distance", format_double(range.max)}});
    out << "x,y,px,py\n";
    for (std::size_t i = 0; i < deployment.extent.size(); ++i) {
        const LatticeCoord p = deployment.extent.node(i);
        out << p.x << ',' << p.y << ',' << format_double(deployment.positions[i].x) << ','
            << format_double(deployment.positions[i].y) << '\n';
    }
}

Metadata rho_summary(const RhoReport& report)
{
    const double ratio = report.empty || report.min_rho == 0.0 ? 0.0 : report.avg_rho / report.min_rho;
    return {{"records", std::to_string(report.records.size())},
            {"empty", report.empty ? "true" : "false"},
            {"min_rho", format_double(report.min_rho)},
            {"avg_rho", format_double(report.avg_rho)},
            {"avg_over_min", format_double(ratio)},
            {"violations", std::to_string(report.violations)}};
}

void write_rho_csv(std::ostream& out, const RhoReport& report, const Metadata& extra)
{
    write_metadata(out, {{"format", "latsched-rho/1"}});
    write_metadata(out, extra);
    write_metadata(out, rho_summary(report));
    out << "slot,tx_x,tx_y,rx_x,rx_y,sinr,rho\n";
    for (const RhoRecord& r : report.records) {
        out << r.slot << ',' << r.tx.x << ',' << r.tx.y << ',' << r.rx.x << ',' << r.rx.y << ','
            << format_double(r.sinr) << ',' << format_double(r.rho) << '\n';
    }
}

RhoFile read_rho_csv(std::istream& in)
{
    const CsvDocument doc = read_document(in);
    expect_header(doc, {"slot", "tx_x", "tx_y", "rx_x", "rx_y", "sinr", "rho"});
    RhoFile file;
    file.metadata = doc.meta;
    for (const auto& row : doc.rows) {
        if (row.size() != 7)
            fail(ErrorCode::Parse, "rho rows need exactly 7 fields");
        RhoRecord r;
        r.slot = parse_number<int>(row[0], "slot");
        r.tx = {parse_number<int>(row[1], "tx_x"), parse_number<int>(row[2], "tx_y")};
        r.rx = {parse_number<int>(row[3], "rx_x"), parse_number<int>(row[4], "rx_y")};
        r.sinr = parse_number<double>(row[5], "sinr");
        r.rho = parse_number<double>(row[6], "rho");
        file.records.push_back(r);
    }
    return file;
}

}  // namespace latsched
