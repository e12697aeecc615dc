#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace tecs {

class ReportError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One solve of one instance with one variant.
struct RunRecord {
    std::string instance;
    int n = 0;
    int m = 0;
    int dim = 0;
    std::string model;
    std::string separation;
    std::int64_t objective = 0;
    double bound = 0.0;
    std::string status;
    double seconds = 0.0;
    long nodes = 0;
    long cuts_asym = 0;
    long cuts_conn = 0;
    long cuts_cpc = 0;
    long cuts_star = 0;

    std::string variant() const { return model + "-" + separation; }
    bool finished() const { return status == "optimal"; }
};

extern const char* const kCsvHeader;

std::string to_csv_row(const RunRecord& r);
/// Throws ReportError on an empty input, a foreign header or a malformed row.
std::vector<RunRecord> read_csv(std::istream& in);

enum class GroupBy { Auto, Dimension, Vertices };

struct AggregateRow {
    /// "dim/10" or "n".
    std::string axis;
    long group = 0;
    std::string variant;
    std::size_t total = 0;
    std::size_t finished = 0;
    double median_seconds = 0.0;
    /// More than half of the runs finished.
    bool plotted = false;
};

/// Auto groups by n when every record is a complete graph, else by floor(dim/10).
std::vector<AggregateRow> aggregate(const std::vector<RunRecord>& records, GroupBy by = GroupBy::Auto);

void write_aggregate_csv(std::ostream& out, const std::vector<AggregateRow>& rows);

/// Median wall time per variant over the groups, one line series per variant
/// present, 800x600.
std::string render_svg(const std::vector<AggregateRow>& rows);

double median(std::vector<double> values);

}  // namespace tecs
