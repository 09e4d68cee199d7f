#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "collatz/bench.hpp"
#include "collatz/stopping_time.hpp"
#include "collatz/verify.hpp"

// Command implementations behind the CLI front end. The binary only parses
// flags into these argument structs; tests drive the commands directly.

namespace collatz::cli {

enum class Format { text, csv, json };

Format format_from_name(std::string_view name);  // throws std::invalid_argument

// One rendered value. CSV and JSON emit the same text, so the two formats
// always carry identical values.
struct Cell {
    enum class Kind { text, integer, real };

    std::string text;
    Kind kind = Kind::text;
};

Cell text_cell(std::string value);
Cell int_cell(std::uint64_t value);
Cell real_cell(double value, int decimals);

struct Table {
    std::vector<std::string> headers;
    std::vector<std::vector<Cell>> rows;
};

void render_table(const Table& table, Format format, std::ostream& out);

struct StoptimeArgs {
    std::string expr;
    std::string algo = "fast";  // fast | bitwise | oracle
    Format format = Format::text;
};

struct ItersArgs {
    std::string expr;
    std::string algo = "fast";
    Format format = Format::text;
};

struct EncodeArgs {
    std::string expr;
    std::uint64_t step_budget = 10'000'000;
    Format format = Format::text;
};

struct TreeArgs {
    std::string root = "1";
    std::string max_value;
    std::string format = "dot";  // dot | csv | json (text = dot)
};

struct StatsArgs {
    std::uint64_t limit = 0;
    std::uint64_t doublings = 1;
    unsigned workers = 0;
    Format format = Format::text;
};

struct FitArgs {
    double n1 = 0.0;
    double f1 = 0.0;
    double n2 = 0.0;
    double f2 = 0.0;
    Format format = Format::text;
};

struct CompareArgs {
    std::vector<std::uint64_t> exponents;
    Format format = Format::text;
};

struct VerifyArgs {
    // Range mode when lo/hi are set; window mode when window_mode is set.
    std::string lo;
    std::string hi;
    std::uint64_t window_exponent = 0;
    std::uint64_t window_offsets = 0;
    bool window_mode = false;
    VerifyOptions options;
    bool baseline_set = false;  // window mode defaults baseline off unless forced
    Format format = Format::text;
};

struct BenchArgs {
    std::string suite;
    std::uint64_t count = 100;
    std::uint64_t seed = 1;
    std::uint64_t repetitions = 5;
    Format format = Format::csv;
};

int cmd_stoptime(const StoptimeArgs& args, std::ostream& out);
int cmd_iters(const ItersArgs& args, std::ostream& out);
int cmd_encode(const EncodeArgs& args, std::ostream& out);
int cmd_tree(const TreeArgs& args, std::ostream& out);
int cmd_stats(const StatsArgs& args, std::ostream& out);
int cmd_fit(const FitArgs& args, std::ostream& out);
int cmd_compare(const CompareArgs& args, std::ostream& out);
int cmd_verify(const VerifyArgs& args, std::ostream& out);
int cmd_bench(const BenchArgs& args, std::ostream& out);

// Table row for a stopping-time report; shared by stoptime/iters and tests.
Table report_table(const StopReport& report, const std::string& algo);

// JSON document for a verify report (mismatch and incident lists included).
std::string verify_report_json(const VerifyReport& report);

}  // namespace collatz::cli
