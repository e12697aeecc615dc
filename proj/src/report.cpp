#include "tecs/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace tecs {

const char* const kCsvHeader =
    "instance,n,m,dim,model,separation,objective,bound,status,seconds,nodes,cuts_asym,cuts_conn,cuts_cpc,cuts_star";

std::string to_csv_row(const RunRecord& r) {
    std::ostringstream out;
    out << r.instance << ',' << r.n << ',' << r.m << ',' << r.dim << ',' << r.model << ',' << r.separation << ','
        << r.objective << ',' << std::setprecision(12) << r.bound << ',' << r.status << ',' << std::fixed
        << std::setprecision(4) << r.seconds << ',' << r.nodes << ',' << r.cuts_asym << ',' << r.cuts_conn << ','
        << r.cuts_cpc << ',' << r.cuts_star;
    return out.str();
}

namespace {

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

std::string trim(std::string s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.pop_back();
    return s;
}

}  // namespace

std::vector<RunRecord> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ReportError("empty CSV input");
    if (trim(line) != kCsvHeader) throw ReportError("unexpected CSV header: " + trim(line));
    std::vector<RunRecord> out;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = trim(line);
        if (line.empty()) continue;
        if (line == kCsvHeader) continue;
        const auto cells = split(line);
        if (cells.size() != 15) throw ReportError("line " + std::to_string(line_no) + ": expected 15 columns");
        try {
            RunRecord r;
            r.instance = cells[0];
            r.n = std::stoi(cells[1]);
            r.m = std::stoi(cells[2]);
            r.dim = std::stoi(cells[3]);
            r.model = cells[4];
            r.separation = cells[5];
            r.objective = std::stoll(cells[6]);
            r.bound = std::stod(cells[7]);
            r.status = cells[8];
            r.seconds = std::stod(cells[9]);
            r.nodes = std::stol(cells[10]);
            r.cuts_asym = std::stol(cells[11]);
            r.cuts_conn = std::stol(cells[12]);
            r.cuts_cpc = std::stol(cells[13]);
            r.cuts_star = std::stol(cells[14]);
            out.push_back(std::move(r));
        } catch (const std::logic_error&) {
            throw ReportError("line " + std::to_string(line_no) + ": malformed number");
        }
    }
    if (out.empty()) throw ReportError("CSV input has no records");
    return out;
}

double median(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("median of an empty list");
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    return values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

std::vector<AggregateRow> aggregate(const std::vector<RunRecord>& records, GroupBy by) {
    if (records.empty()) throw ReportError("nothing to aggregate");
    if (by == GroupBy::Auto) {
        const bool all_complete = std::all_of(records.begin(), records.end(), [](const RunRecord& r) {
            return r.n >= 4 && static_cast<long>(r.m) == static_cast<long>(r.n) * (r.n - 1) / 2;
        });
        by = all_complete ? GroupBy::Vertices : GroupBy::Dimension;
    }
    std::map<std::pair<long, std::string>, std::vector<const RunRecord*>> groups;
    for (const RunRecord& r : records) {
        const long key = by == GroupBy::Vertices ? r.n : r.dim / 10;
        groups[{key, r.variant()}].push_back(&r);
    }
    std::vector<AggregateRow> out;
    for (const auto& [key, runs] : groups) {
        AggregateRow row;
        row.axis = by == GroupBy::Vertices ? "n" : "dim/10";
        row.group = key.first;
        row.variant = key.second;
        row.total = runs.size();
        std::vector<double> times;
        for (const RunRecord* r : runs) {
            times.push_back(r->seconds);
            if (r->finished()) ++row.finished;
        }
        row.median_seconds = median(times);
        row.plotted = 2 * row.finished > row.total;
        out.push_back(row);
    }
    return out;
}

void write_aggregate_csv(std::ostream& out, const std::vector<AggregateRow>& rows) {
    out << "axis,group,variant,total,finished,median_seconds,plotted\n";
    for (const AggregateRow& r : rows)
        out << r.axis << ',' << r.group << ',' << r.variant << ',' << r.total << ',' << r.finished << ','
            << std::fixed << std::setprecision(4) << r.median_seconds << ',' << (r.plotted ? 1 : 0) << '\n';
}

namespace {

struct SeriesStyle {
    const char* variant;
    const char* label;
    const char* color;
    bool square;
    bool filled;
};

constexpr SeriesStyle kStyles[] = {
    {"basic-integer", "basic, integer separation", "#1f4fd8", false, false},
    {"strengthened-integer", "strengthened, integer separation", "#d62728", false, true},
    {"basic-fractional", "basic, fractional separation", "#2ca02c", true, false},
    {"strengthened-fractional", "strengthened, fractional separation", "#ff7f0e", true, true},
};

void marker(std::ostream& out, const SeriesStyle& s, double x, double y) {
    const std::string fill = s.filled ? s.color : "white";
    if (s.square)
        out << "<rect x=\"" << x - 5 << "\" y=\"" << y - 5 << "\" width=\"10\" height=\"10\" fill=\"" << fill
            << "\" stroke=\"" << s.color << "\" stroke-width=\"2\"/>\n";
    else
        out << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"5\" fill=\"" << fill << "\" stroke=\"" << s.color
            << "\" stroke-width=\"2\"/>\n";
}

}  // namespace

std::string render_svg(const std::vector<AggregateRow>& rows) {
    if (rows.empty()) throw ReportError("nothing to plot");
    constexpr double width = 800, height = 600, left = 80, right = 240, top = 40, bottom = 70;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    long gmin = rows.front().group, gmax = rows.front().group;
    double ymax = 0.0;
    for (const AggregateRow& r : rows) {
        gmin = std::min(gmin, r.group);
        gmax = std::max(gmax, r.group);
        if (r.plotted) ymax = std::max(ymax, r.median_seconds);
    }
    if (ymax <= 0.0) ymax = 1.0;
    ymax *= 1.1;
    const double span = gmax > gmin ? static_cast<double>(gmax - gmin) : 1.0;
    auto px = [&](long g) { return left + (gmax > gmin ? (static_cast<double>(g - gmin) / span) : 0.5) * plot_w; };
    auto py = [&](double s) { return top + plot_h - s / ymax * plot_h; };

    std::ostringstream out;
    out << std::fixed << std::setprecision(2);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" viewBox=\"0 0 800 600\">\n";
    out << "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
    out << "<line x1=\"" << left << "\" y1=\"" << top + plot_h << "\" x2=\"" << left + plot_w << "\" y2=\""
        << top + plot_h << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << top + plot_h
        << "\" stroke=\"black\"/>\n";
    for (long g = gmin; g <= gmax; ++g) {
        out << "<text x=\"" << px(g) << "\" y=\"" << top + plot_h + 20 << "\" text-anchor=\"middle\" font-size=\"12\">"
            << g << "</text>\n";
    }
    for (int t = 0; t <= 4; ++t) {
        const double v = ymax * t / 4.0;
        out << "<text x=\"" << left - 8 << "\" y=\"" << py(v) + 4 << "\" text-anchor=\"end\" font-size=\"12\">" << v
            << "</text>\n";
    }
    const std::string axis = rows.front().axis;
    out << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 25 << "\" text-anchor=\"middle\" font-size=\"14\">"
        << (axis == "n" ? "number of vertices n" : "floor(dim / 10)") << "</text>\n";
    out << "<text x=\"20\" y=\"" << top + plot_h / 2 << "\" transform=\"rotate(-90 20 " << top + plot_h / 2
        << ")\" text-anchor=\"middle\" font-size=\"14\">median running time [s]</text>\n";

    std::ostringstream legend;
    legend << std::fixed << std::setprecision(2);
    int legend_row = 0;
    for (const SeriesStyle& style : kStyles) {
        std::vector<const AggregateRow*> series;
        bool present = false;
        for (const AggregateRow& r : rows) {
            if (r.variant != style.variant) continue;
            present = true;
            if (r.plotted) series.push_back(&r);
        }
        if (!present) continue;
        out << "<g class=\"series\" data-variant=\"" << style.variant << "\">\n";
        if (series.size() > 1) {
            out << "<polyline fill=\"none\" stroke=\"" << style.color << "\" stroke-width=\"2\" points=\"";
            for (const AggregateRow* r : series) out << px(r->group) << "," << py(r->median_seconds) << " ";
            out << "\"/>\n";
        }
        for (const AggregateRow* r : series) marker(out, style, px(r->group), py(r->median_seconds));
        out << "</g>\n";
        const double ly = top + 20 + 24 * legend_row++;
        marker(legend, style, left + plot_w + 25, ly);
        legend << "<text x=\"" << left + plot_w + 38 << "\" y=\"" << ly + 4 << "\" font-size=\"12\">" << style.label
               << "</text>\n";
    }
    out << "<g class=\"legend\">\n" << legend.str() << "</g>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace tecs
