#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hypl/search.hpp"

namespace hypl {

/// One serializable result table: every emission carries the schema version,
/// the command it came from, a flat parameter echo, and fixed-column rows.
struct OutputRecord {
    using Cell = std::variant<std::monostate, double, std::int64_t, bool, std::string>;

    std::string schema_version = "1";
    std::string command;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::optional<std::uint64_t> seed;
};

/// Shortest round-trip decimal rendering (std::to_chars).
std::string format_double(double v);

/// Parses "a:b:step" into an inclusive grid; b is included when (b-a)/step
/// is integral within 1e-9, and the last point snaps to b exactly.
std::vector<double> parse_grid(const std::string& text);

std::string to_json(const OutputRecord& rec);
std::string to_csv(const OutputRecord& rec);

const char* kind_name(Kind k);
const char* target_name(FsTarget t);
const char* functional_name(Functional f);
const char* regime_name(Regime r);

/// Builds the verify table from a campaign report. Wall time is deliberately
/// not serialized: identical configs must give byte-identical records.
OutputRecord make_verify_record(const CampaignReport& report);

} // namespace hypl
