// Command line front end: evaluate, notate, multiply, divide and invert
// notations; transpose, analyse and factor melody files; regenerate the
// scale-note grids, the comma table, and the measure comparison for
// extending the comma map to 3.
//
// Exit codes: 0 on success, 2 on any parse or domain error (the message
// names the offending token and position).

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ji/ji.hpp"

namespace {

using nlohmann::json;

struct Options {
    bool json = false;
    bool shorthand5 = false;
    bool cents_only = false;
    bool csv = false;
};

ji::NotationStyle style_of(const Options& opts) {
    ji::NotationStyle style;
    style.shorthand_fives = opts.shorthand5;
    return style;
}

// Half away from zero to two decimals, with -0 normalised.
double rounded_cents(const ji::Monzo& m) {
    double c = std::round(ji::cents(m) * 100.0) / 100.0;
    return c == 0.0 ? 0.0 : c;
}

std::string format_fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    return buf;
}

std::string format_general(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", value);
    return buf;
}

std::string align_rows(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        if (row.size() > widths.size()) widths.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i) {
            widths[i] = std::max(widths[i], row[i].size());
        }
    }
    std::string out;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) line += "  ";
            line += row[i];
            if (i + 1 < row.size()) line.append(widths[i] - row[i].size(), ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += '\n';
    }
    return out;
}

std::string csv_rows(const std::vector<std::vector<std::string>>& rows) {
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out += ',';
            out += row[i];
        }
        out += '\n';
    }
    return out;
}

// One notation with its exact value; everything the text and JSON renderers
// need for a single output line.
struct Record {
    ji::Notation notation;
    ji::Monzo value;
};

Record record_of(const ji::Notation& n, const ji::CommaTable& table) {
    return {n, ji::eval(n, table)};
}

json to_json(const Record& r, const Options& opts) {
    json monzo = json::array();
    for (const auto& [p, e] : r.value.entries()) monzo.push_back(json::array({p, e}));
    return json{{"notation", ji::print_notation(r.notation, style_of(opts))},
                {"fraction", ji::fraction(r.value).str()},
                {"monzo", monzo},
                {"cents", rounded_cents(r.value)}};
}

std::vector<std::string> text_row(const Record& r, const Options& opts) {
    return {ji::print_notation(r.notation, style_of(opts)), ji::fraction(r.value).str(),
            format_fixed(rounded_cents(r.value), 2) + "¢"};
}

void emit_records(const std::vector<Record>& records, const Options& opts) {
    if (opts.json) {
        if (records.size() == 1) {
            std::cout << to_json(records.front(), opts).dump() << '\n';
        } else {
            json array = json::array();
            for (const Record& r : records) array.push_back(to_json(r, opts));
            std::cout << array.dump() << '\n';
        }
        return;
    }
    if (opts.cents_only) {
        for (const Record& r : records) {
            std::cout << format_fixed(rounded_cents(r.value), 2) << '\n';
        }
        return;
    }
    std::vector<std::vector<std::string>> rows;
    rows.reserve(records.size());
    for (const Record& r : records) rows.push_back(text_row(r, opts));
    std::cout << align_rows(rows);
}

void emit_melody(const ji::Melody& melody, const ji::CommaTable& table, const Options& opts) {
    ji::Melody expanded = ji::expand(melody);
    if (opts.json) {
        json array = json::array();
        for (const ji::Notation& n : expanded.notes) {
            array.push_back(to_json(record_of(n, table), opts));
        }
        std::cout << array.dump() << '\n';
        return;
    }
    if (opts.cents_only) {
        for (const ji::Notation& n : expanded.notes) {
            std::cout << format_fixed(rounded_cents(ji::eval(n, table)), 2) << '\n';
        }
        return;
    }
    std::cout << ji::print_melody(melody, style_of(opts));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open melody file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// "num" or "num/den" with the same digit guard as the notation grammar.
ji::Monzo parse_fraction_text(const std::string& text) {
    ji::detail::TokenParser p{text};
    ji::BigInt num = p.parse_uint("numerator");
    ji::BigInt den = 1;
    if (p.peek() == '/') {
        ++p.i;
        den = p.parse_uint("denominator");
    }
    if (!p.done()) p.fail("unexpected character", p.i);
    return ji::Monzo::from_fraction(num, den);
}

std::int64_t parse_prime_text(const std::string& text) {
    ji::detail::TokenParser p{text};
    ji::BigInt value = p.parse_uint("prime");
    if (!p.done()) p.fail("unexpected character", p.i);
    if (value > 1000000000) p.fail("prime out of supported range", 0);
    return value.convert_to<std::int64_t>();
}

void run_table_mul(const std::string& order, const ji::CommaTable& table, const Options& opts) {
    ji::TableOrder table_order =
        order == "fifths" ? ji::TableOrder::Fifths : ji::TableOrder::Pitch;
    const auto& labels = table_order == ji::TableOrder::Fifths ? ji::kFifthOrder : ji::kPitchOrder;
    auto grid = ji::mul_table(table_order, table);

    auto label_name = [](ji::Label l) { return std::string(1, ji::label_char(l)) + "4"; };

    if (opts.json) {
        json array = json::array();
        for (std::size_t i = 0; i < 7; ++i) {
            for (std::size_t j = 0; j < 7; ++j) {
                array.push_back(json{{"row", label_name(labels[i])},
                                     {"col", label_name(labels[j])},
                                     {"notation", ji::print_notation(grid[i][j].notation,
                                                                     style_of(opts))},
                                     {"fraction", grid[i][j].fraction.str()}});
            }
        }
        std::cout << array.dump() << '\n';
        return;
    }
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"x"};
    for (std::size_t j = 0; j < 7; ++j) header.push_back(label_name(labels[j]));
    rows.push_back(std::move(header));
    for (std::size_t i = 0; i < 7; ++i) {
        std::vector<std::string> row{label_name(labels[i])};
        for (std::size_t j = 0; j < 7; ++j) {
            row.push_back(ji::print_notation(grid[i][j].notation, style_of(opts)) + " " +
                          grid[i][j].fraction.str());
        }
        rows.push_back(std::move(row));
    }
    std::cout << (opts.csv ? csv_rows(rows) : align_rows(rows));
}

void run_table_inv(const ji::CommaTable& table, const Options& opts) {
    auto rows = ji::inv_table(table);
    if (opts.json) {
        json array = json::array();
        for (std::size_t i = 0; i < 7; ++i) {
            array.push_back(json{{"note", std::string(1, ji::label_char(ji::kPitchOrder[i])) + "4"},
                                 {"inverse", ji::print_notation(rows[i].notation, style_of(opts))},
                                 {"fraction", rows[i].fraction.str()}});
        }
        std::cout << array.dump() << '\n';
        return;
    }
    std::vector<std::vector<std::string>> text{{"note", "inverse", "fraction"}};
    for (std::size_t i = 0; i < 7; ++i) {
        text.push_back({std::string(1, ji::label_char(ji::kPitchOrder[i])) + "4",
                        ji::print_notation(rows[i].notation, style_of(opts)),
                        rows[i].fraction.str()});
    }
    std::cout << (opts.csv ? csv_rows(text) : align_rows(text));
}

void run_table_comma(std::int64_t max_prime, const ji::CommaTable& table, const Options& opts) {
    if (max_prime > 0) {
        for (std::int64_t p = 5; p <= max_prime; ++p) {
            if (ji::is_prime(p)) table.prime_comma(p);
        }
    }
    auto entries = table.entries();
    if (opts.json) {
        json array = json::array();
        for (const auto& [p, m] : entries) {
            if (max_prime > 0 && p > max_prime) continue;
            array.push_back(json{{"prime", p},
                                 {"fraction", ji::fraction(m).str()},
                                 {"cents", rounded_cents(m)}});
        }
        std::cout << array.dump() << '\n';
        return;
    }
    std::vector<std::vector<std::string>> rows{{"prime", "fraction", "cents"}};
    for (const auto& [p, m] : entries) {
        if (max_prime > 0 && p > max_prime) continue;
        rows.push_back({std::to_string(p), ji::fraction(m).str(),
                        opts.csv ? format_fixed(rounded_cents(m), 2)
                                 : format_fixed(rounded_cents(m), 2) + "¢"});
    }
    std::cout << (opts.csv ? csv_rows(rows) : align_rows(rows));
}

void run_analyze3(int a_min, int a_max, const Options& opts) {
    auto rows = ji::analyze_three_candidates(a_min, a_max);
    if (opts.json) {
        json array = json::array();
        for (const auto& row : rows) {
            array.push_back(json{{"fraction", row.fraction.str()},
                                 {"decimal", row.decimal},
                                 {"cy", row.complexity.str()},
                                 {"lcy", row.log_complexity},
                                 {"ao", row.abs_octaves},
                                 {"cm", row.comma_measure},
                                 {"minimal", row.minimal}});
        }
        std::cout << array.dump() << '\n';
        return;
    }
    std::vector<std::vector<std::string>> text{
        {"fraction", "decimal", "CY", "LCY", "AO", "CM", "minimal"}};
    for (const auto& row : rows) {
        text.push_back({row.fraction.str(), format_general(row.decimal), row.complexity.str(),
                        format_fixed(row.log_complexity, 3), format_fixed(row.abs_octaves, 3),
                        format_fixed(row.comma_measure, 3),
                        row.minimal ? (opts.csv ? "1" : "*") : (opts.csv ? "0" : "")});
    }
    std::cout << (opts.csv ? csv_rows(text) : align_rows(text));
}

}  // namespace

int main(int argc, char** argv) {
    Options opts;
    CLI::App app{"exact arithmetic for rational-comma just-intonation notation", "jicalc"};
    app.require_subcommand(1);
    app.add_flag("--json", opts.json, "emit JSON instead of aligned text");
    app.add_flag("--shorthand5", opts.shorthand5, "print ' and . marks for factors of 5");
    app.add_flag("--cents-only", opts.cents_only, "print only cent values");

    std::string arg_a, arg_b, arg_by, arg_file, arg_order;
    bool down = false;
    std::int64_t max_prime = 0;
    int a_min = -4, a_max = 3;

    CLI::App* cmd_eval = app.add_subcommand("eval", "evaluate a notation");
    cmd_eval->add_option("notation", arg_a)->required();

    CLI::App* cmd_notate = app.add_subcommand("notate", "canonical notation of a fraction x/y");
    cmd_notate->add_option("fraction", arg_a)->required();

    CLI::App* cmd_mul = app.add_subcommand("mul", "multiply two notations");
    cmd_mul->add_option("a", arg_a)->required();
    cmd_mul->add_option("b", arg_b)->required();

    CLI::App* cmd_div = app.add_subcommand("div", "divide one notation by another");
    cmd_div->add_option("a", arg_a)->required();
    cmd_div->add_option("b", arg_b)->required();

    CLI::App* cmd_inv = app.add_subcommand("inv", "invert a notation");
    cmd_inv->add_option("notation", arg_a)->required();

    CLI::App* cmd_transpose = app.add_subcommand("transpose", "transpose a melody file");
    cmd_transpose->add_option("--by", arg_by, "transposing notation")->required();
    cmd_transpose->add_flag("--down", down, "transpose down instead of up");
    cmd_transpose->add_option("file", arg_file)->required();

    CLI::App* cmd_intervals = app.add_subcommand("intervals", "consecutive ratios of a melody file");
    cmd_intervals->add_option("file", arg_file)->required();

    CLI::App* cmd_factor = app.add_subcommand("factor", "factor a common comma out of a melody file");
    cmd_factor->add_option("file", arg_file)->required();

    CLI::App* cmd_table = app.add_subcommand("table", "print reference tables");
    cmd_table->require_subcommand(1);
    CLI::App* cmd_table_mul = cmd_table->add_subcommand("mul", "7x7 scale-note products");
    cmd_table_mul->add_option("--order", arg_order, "row/column order")
        ->required()
        ->check(CLI::IsMember({"fifths", "pitch"}));
    CLI::App* cmd_table_inv = cmd_table->add_subcommand("inv", "scale-note inverses");
    CLI::App* cmd_table_comma = cmd_table->add_subcommand("comma", "prime comma table");
    cmd_table_comma->add_option("--max-prime", max_prime, "extend the table up to this prime");
    for (CLI::App* sub : {cmd_table_mul, cmd_table_inv, cmd_table_comma}) {
        sub->add_flag("--csv", opts.csv, "comma-separated output");
    }

    CLI::App* cmd_comma = app.add_subcommand("comma", "prime comma for a prime >= 5");
    cmd_comma->add_option("prime", arg_a)->required();

    CLI::App* cmd_comma_label = app.add_subcommand("comma-label", "value of a rational comma x/y");
    cmd_comma_label->add_option("fraction", arg_a)->required();

    CLI::App* cmd_analyze3 = app.add_subcommand("analyze3", "measures for comma candidates 3*2^a");
    cmd_analyze3->add_option("--min", a_min, "smallest exponent of 2 (default -4)");
    cmd_analyze3->add_option("--max", a_max, "largest exponent of 2 (default 3)");
    cmd_analyze3->add_flag("--csv", opts.csv, "comma-separated output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "jicalc: error: " << e.what() << '\n';
        std::cerr << app.help();
        return 2;
    }

    try {
        ji::CommaTable table;
        if (cmd_eval->parsed()) {
            emit_records({record_of(ji::parse_notation(arg_a), table)}, opts);
        } else if (cmd_notate->parsed()) {
            ji::Monzo value = parse_fraction_text(arg_a);
            emit_records({{ji::notate(value, table), value}}, opts);
        } else if (cmd_mul->parsed()) {
            ji::Notation n = mul(ji::parse_notation(arg_a), ji::parse_notation(arg_b), table);
            emit_records({record_of(n, table)}, opts);
        } else if (cmd_div->parsed()) {
            ji::Notation n = divide(ji::parse_notation(arg_a), ji::parse_notation(arg_b), table);
            emit_records({record_of(n, table)}, opts);
        } else if (cmd_inv->parsed()) {
            emit_records({record_of(inverse(ji::parse_notation(arg_a), table), table)}, opts);
        } else if (cmd_transpose->parsed()) {
            ji::Melody melody = ji::parse_melody(read_file(arg_file));
            ji::Notation by = ji::parse_notation(arg_by);
            emit_melody(down ? transpose_down(melody, by, table)
                             : transpose_up(melody, by, table),
                        table, opts);
        } else if (cmd_intervals->parsed()) {
            ji::Melody melody = ji::parse_melody(read_file(arg_file));
            std::vector<Record> records;
            for (const ji::Monzo& step : intervals(melody, table)) {
                records.push_back({ji::notate(step, table), step});
            }
            emit_records(records, opts);
        } else if (cmd_factor->parsed()) {
            ji::Melody melody = ji::parse_melody(read_file(arg_file));
            ji::Melody factored = factor_common_comma(melody, table);
            if (opts.json) {
                json notes = json::array();
                for (const ji::Notation& n : factored.notes) {
                    notes.push_back(to_json(record_of(n, table), opts));
                }
                std::cout << json{{"common_comma", factored.common_comma->str()},
                                  {"notes", notes}}
                                 .dump()
                          << '\n';
            } else {
                emit_melody(factored, table, opts);
            }
        } else if (cmd_table_mul->parsed()) {
            run_table_mul(arg_order, table, opts);
        } else if (cmd_table_inv->parsed()) {
            run_table_inv(table, opts);
        } else if (cmd_table_comma->parsed()) {
            run_table_comma(max_prime, table, opts);
        } else if (cmd_comma->parsed()) {
            ji::Monzo value = table.prime_comma(parse_prime_text(arg_a));
            emit_records({{ji::notate(value, table), value}}, opts);
        } else if (cmd_comma_label->parsed()) {
            ji::Fraction label = ji::fraction(parse_fraction_text(arg_a));
            ji::Monzo value = table.comma_value(label);
            emit_records({{ji::notate(value, table), value}}, opts);
        } else if (cmd_analyze3->parsed()) {
            run_analyze3(a_min, a_max, opts);
        }
    } catch (const ji::ParseError& e) {
        std::cerr << "jicalc: error: " << e.describe() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "jicalc: error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
