#include "collatz/cli_commands.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "collatz/analysis.hpp"
#include "collatz/codeword.hpp"
#include "collatz/input_expr.hpp"
#include "collatz/stopping_time.hpp"
#include "collatz/tree.hpp"

namespace collatz::cli {

namespace {

std::string format_real(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (const char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out.push_back(c);
                }
        }
    }
    return out;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += '"';
    return out;
}

void render_csv(const Table& table, std::ostream& out) {
    for (std::size_t i = 0; i < table.headers.size(); ++i) {
        if (i != 0) out << ',';
        out << csv_escape(table.headers[i]);
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i != 0) out << ',';
            out << csv_escape(row[i].text);
        }
        out << '\n';
    }
}

void render_json(const Table& table, std::ostream& out) {
    out << "[";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        out << (r == 0 ? "\n" : ",\n");
        out << "  {";
        const auto& row = table.rows[r];
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i != 0) out << ", ";
            out << '"' << json_escape(table.headers[i]) << "\": ";
            if (row[i].kind == Cell::Kind::text) {
                out << '"' << json_escape(row[i].text) << '"';
            } else {
                out << row[i].text;
            }
        }
        out << "}";
    }
    out << (table.rows.empty() ? "]\n" : "\n]\n");
}

void render_text(const Table& table, std::ostream& out) {
    std::vector<std::size_t> widths(table.headers.size(), 0);
    for (std::size_t i = 0; i < table.headers.size(); ++i) {
        widths[i] = table.headers[i].size();
    }
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            widths[i] = std::max(widths[i], row[i].text.size());
        }
    }
    const auto pad = [&out, &widths](const std::string& s, std::size_t col, bool right) {
        if (right) {
            out << std::string(widths[col] - s.size(), ' ') << s;
        } else {
            out << s << std::string(widths[col] - s.size(), ' ');
        }
    };
    for (std::size_t i = 0; i < table.headers.size(); ++i) {
        if (i != 0) out << "  ";
        pad(table.headers[i], i, false);
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i != 0) out << "  ";
            pad(row[i].text, i, row[i].kind != Cell::Kind::text);
        }
        out << '\n';
    }
}

StopReport run_algo(const std::string& algo, const Natural& n) {
    if (algo == "fast") return stop_time_fast(n);
    if (algo == "bitwise") return stop_time_bitwise(n);
    if (algo == "oracle") return stop_time_oracle(n);
    throw std::invalid_argument("unknown algorithm: " + algo);
}

}  // namespace

Format format_from_name(std::string_view name) {
    if (name == "text") return Format::text;
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    throw std::invalid_argument("unknown format: " + std::string(name));
}

Cell text_cell(std::string value) { return {std::move(value), Cell::Kind::text}; }

Cell int_cell(std::uint64_t value) { return {std::to_string(value), Cell::Kind::integer}; }

Cell real_cell(double value, int decimals) {
    return {format_real(value, decimals), Cell::Kind::real};
}

void render_table(const Table& table, Format format, std::ostream& out) {
    switch (format) {
        case Format::text: render_text(table, out); break;
        case Format::csv: render_csv(table, out); break;
        case Format::json: render_json(table, out); break;
    }
}

Table report_table(const StopReport& report, const std::string& algo) {
    Table t;
    t.headers = {"input",     "algorithm",      "stopping_time", "loop_iterations",
                 "odd_steps", "division_steps", "odd_count",     "sub_branches"};
    t.rows.push_back({text_cell(report.input.to_decimal()), text_cell(algo),
                      int_cell(report.stopping_time), int_cell(report.loop_iterations),
                      int_cell(report.odd_steps), int_cell(report.division_steps),
                      int_cell(report.odd_count), int_cell(report.sub_branches)});
    return t;
}

int cmd_stoptime(const StoptimeArgs& args, std::ostream& out) {
    const Natural n = parse_input(args.expr);
    const StopReport report = run_algo(args.algo, n);
    if (args.format == Format::text) {
        out << report.stopping_time << '\n';
    } else {
        Table t;
        t.headers = {"input", "algorithm", "stopping_time"};
        t.rows.push_back({text_cell(report.input.to_decimal()), text_cell(args.algo),
                          int_cell(report.stopping_time)});
        render_table(t, args.format, out);
    }
    return 0;
}

int cmd_iters(const ItersArgs& args, std::ostream& out) {
    const Natural n = parse_input(args.expr);
    const StopReport report = run_algo(args.algo, n);
    const Table t = report_table(report, args.algo);
    if (args.format == Format::text) {
        for (std::size_t i = 0; i < t.headers.size(); ++i) {
            out << t.headers[i] << ": " << t.rows[0][i].text << '\n';
        }
    } else {
        render_table(t, args.format, out);
    }
    return 0;
}

int cmd_encode(const EncodeArgs& args, std::ostream& out) {
    const Natural n = parse_input(args.expr);
    const CodeWord word = encode(n, args.step_budget);
    if (args.format == Format::text) {
        out << word.render() << '\n';
        out << "U=" << word.odd_groups() << " D-U=" << word.extra_divs()
            << " length=" << word.length() << '\n';
        return 0;
    }
    Table t;
    t.headers = {"input", "code_word", "odd_groups", "extra_divisions", "length"};
    t.rows.push_back({text_cell(n.to_decimal()), text_cell(word.render()),
                      int_cell(word.odd_groups()), int_cell(word.extra_divs()),
                      int_cell(word.length())});
    render_table(t, args.format, out);
    return 0;
}

int cmd_tree(const TreeArgs& args, std::ostream& out) {
    const Natural root = parse_input(args.root);
    const Natural max_value = parse_input(args.max_value);
    const TreeNode tree = generate(root, max_value);
    if (args.format == "dot" || args.format == "text") {
        write_dot(tree, out);
        return 0;
    }
    if (args.format == "csv") {
        write_csv(tree, out);
        return 0;
    }
    if (args.format == "json") {
        std::ostringstream csv;
        write_csv(tree, csv);
        // Re-shape the CSV rows as a JSON table to keep the values identical.
        Table t;
        t.headers = {"node", "parent", "is_branch_point", "is_sterile_root"};
        std::istringstream lines(csv.str());
        std::string line;
        std::getline(lines, line);  // header
        while (std::getline(lines, line)) {
            std::istringstream fields(line);
            std::string node, parent, branch, sterile;
            std::getline(fields, node, ',');
            std::getline(fields, parent, ',');
            std::getline(fields, branch, ',');
            std::getline(fields, sterile, ',');
            t.rows.push_back({text_cell(node), text_cell(parent),
                              {branch, Cell::Kind::integer},
                              {sterile, Cell::Kind::integer}});
        }
        render_json(t, out);
        return 0;
    }
    throw std::invalid_argument("tree format must be dot, csv or json");
}

int cmd_stats(const StatsArgs& args, std::ostream& out) {
    const std::vector<RangeStats> rows =
        doubling_schedule(args.limit, args.doublings, args.workers);
    Table t;
    t.headers = {"input_count", "best", "average", "worst"};
    for (const RangeStats& r : rows) {
        t.rows.push_back({int_cell(r.input_count), int_cell(r.best), real_cell(r.average, 2),
                          int_cell(r.worst)});
    }
    render_table(t, args.format, out);
    return 0;
}

int cmd_fit(const FitArgs& args, std::ostream& out) {
    const LinearLogFit fit = fit_two_point({args.n1, args.f1}, {args.n2, args.f2});
    Table t;
    t.headers = {"a", "b"};
    t.rows.push_back({real_cell(fit.a, 6), real_cell(fit.b, 6)});
    render_table(t, args.format, out);
    return 0;
}

int cmd_compare(const CompareArgs& args, std::ostream& out) {
    const std::vector<ComparisonRow> rows = comparison_table(args.exponents);
    Table t;
    t.headers = {"input_label",    "stopping_time", "iters_ren",    "iters_bitwise",
                 "iters_proposed", "impr_ren",      "impr_bitwise"};
    for (const ComparisonRow& r : rows) {
        t.rows.push_back({text_cell(r.input_label), int_cell(r.stopping_time),
                          int_cell(r.iters_ren), int_cell(r.iters_bitwise),
                          int_cell(r.iters_proposed), real_cell(r.impr_ren, 2),
                          real_cell(r.impr_bitwise, 2)});
    }
    render_table(t, args.format, out);
    return 0;
}

std::string verify_report_json(const VerifyReport& report) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"range_lo\": \"" << report.range_lo.to_decimal() << "\",\n";
    out << "  \"range_hi\": \"" << report.range_hi.to_decimal() << "\",\n";
    out << "  \"checked\": " << report.checked << ",\n";
    out << "  \"mismatches\": [";
    for (std::size_t i = 0; i < report.mismatches.size(); ++i) {
        const auto& m = report.mismatches[i];
        out << (i == 0 ? "\n" : ",\n");
        out << "    {\"input\": \"" << m.input.to_decimal()
            << "\", \"fast\": " << m.fast_stopping_time
            << ", \"baseline\": " << m.baseline_stopping_time << "}";
    }
    out << (report.mismatches.empty() ? "],\n" : "\n  ],\n");
    out << "  \"budget_incidents\": [";
    for (std::size_t i = 0; i < report.budget_incidents.size(); ++i) {
        out << (i == 0 ? "\n" : ",\n");
        out << "    \"" << report.budget_incidents[i].input.to_decimal() << "\"";
    }
    out << (report.budget_incidents.empty() ? "],\n" : "\n  ],\n");
    out << "  \"max_stopping_time\": " << report.max_stopping_time << ",\n";
    out << "  \"argmax_input\": \"" << report.argmax_input.to_decimal() << "\",\n";
    out << "  \"complete\": " << (report.complete ? "true" : "false") << ",\n";
    out << "  \"elapsed_seconds\": " << format_real(report.elapsed_seconds, 3) << "\n";
    out << "}\n";
    return out.str();
}

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
    VerifyOptions opts = args.options;
    VerifyReport report;
    if (args.window_mode) {
        if (!args.baseline_set) opts.baseline = false;
        report = verify_window(args.window_exponent, args.window_offsets, opts);
    } else {
        report = verify_range(parse_input(args.lo), parse_input(args.hi), opts);
    }

    if (args.format == Format::json) {
        out << verify_report_json(report);
    } else if (args.format == Format::csv) {
        Table t;
        t.headers = {"range_lo",          "range_hi", "checked",      "mismatches",
                     "budget_incidents",  "max_stopping_time", "argmax_input", "complete",
                     "elapsed_seconds"};
        t.rows.push_back({text_cell(report.range_lo.to_decimal()),
                          text_cell(report.range_hi.to_decimal()), int_cell(report.checked),
                          int_cell(report.mismatches.size()),
                          int_cell(report.budget_incidents.size()),
                          int_cell(report.max_stopping_time),
                          text_cell(report.argmax_input.to_decimal()),
                          int_cell(report.complete ? 1 : 0),
                          real_cell(report.elapsed_seconds, 3)});
        render_table(t, args.format, out);
    } else {
        out << "range: [" << report.range_lo.to_decimal() << ", " << report.range_hi.to_decimal()
            << "]\n";
        out << "checked: " << report.checked << '\n';
        out << "mismatches: " << report.mismatches.size() << '\n';
        for (const auto& m : report.mismatches) {
            out << "  input " << m.input.to_decimal() << ": fast " << m.fast_stopping_time
                << " vs baseline " << m.baseline_stopping_time << '\n';
        }
        out << "budget incidents: " << report.budget_incidents.size() << '\n';
        for (const auto& i : report.budget_incidents) {
            out << "  input " << i.input.to_decimal() << '\n';
        }
        out << "max stopping time: " << report.max_stopping_time << " at "
            << report.argmax_input.to_decimal() << '\n';
        out << "complete: " << (report.complete ? "yes" : "paused") << '\n';
        out << "elapsed: " << format_real(report.elapsed_seconds, 3) << "s\n";
    }
    return report.ok() ? 0 : 2;
}

int cmd_bench(const BenchArgs& args, std::ostream& out) {
    const std::vector<BenchRecord> records =
        run_bench(bench_suite_from_name(args.suite), args.count, args.seed, args.repetitions);
    Table t;
    t.headers = {"label", "input_expr", "algorithm", "wall_seconds", "loop_iterations",
                 "repetitions"};
    for (const BenchRecord& r : records) {
        t.rows.push_back({text_cell(r.label), text_cell(r.input_expr), text_cell(r.algorithm),
                          real_cell(r.wall_seconds, 9), int_cell(r.loop_iterations),
                          int_cell(r.repetitions)});
    }
    render_table(t, args.format, out);
    return 0;
}

}  // namespace collatz::cli
