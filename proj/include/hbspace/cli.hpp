#pragma once
// Command-line front-end: parses measure/sequence/function files, dispatches
// to the library operations, and emits deterministic structured reports.

#include <iosfwd>
#include <string>
#include <vector>

namespace hbspace::cli {

// Tabular data destined for CSV emission.
struct Series {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;  // each row has columns.size() entries
};

// Writes header + rows, comma-delimited, 17 significant digits, LF endings.
void emit_csv(const Series& series, const std::string& path);

// Runs one command line (the arguments after the program name). Writes the
// structured report to `out`; usage messages go to `err`. Returns 0 on
// success, 1 on numeric failure (the error category appears in the report on
// `out`), 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hbspace::cli
