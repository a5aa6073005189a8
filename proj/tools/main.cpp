// swapsafe: decide record swappability under protected marginals and find
// swap partners for sample-unique records.
//
// Exit codes: 0 success / swappable, 1 not-swappable verdict, 2 usage or
// configuration error, 3 data error.

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "swapsafe/io.hpp"
#include "swapsafe/model.hpp"
#include "swapsafe/move.hpp"
#include "swapsafe/oracle.hpp"
#include "swapsafe/swap.hpp"
#include "swapsafe/table.hpp"

namespace {

using nlohmann::json;
using namespace swapsafe;

constexpr int kExitSwappable = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;

/// Command-line values that do not add up to a runnable request.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

json cell_json(const Schema& schema, const Cell& cell) {
    json out = json::array();
    for (int m = 0; m < cell.size(); ++m) out.push_back(schema.label_of(m, cell[m]));
    return out;
}

json varset_json(const Schema& schema, const VarSet& vars) {
    json out = json::array();
    for (int m : vars) out.push_back(schema.name(m));
    return out;
}

json components_json(const Schema& schema, const std::vector<VarSet>& comps) {
    json out = json::array();
    for (const VarSet& c : comps) out.push_back(varset_json(schema, c));
    return out;
}

json checks_json(const Schema& schema, const PreservationReport& report) {
    json out = json::array();
    for (const MarginalCheck& check : report.checks)
        out.push_back(json{{"marginal", varset_json(schema, check.d)},
                           {"preserved", check.preserved}});
    return out;
}

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

void note(const std::string& line) { std::cerr << line << "\n"; }

Cell parse_cell_arg(const Schema& schema, const std::string& text) {
    try {
        return parse_cell(schema, text);
    } catch (const DataError& e) {
        throw UsageError(e.what());
    }
}

VarSet parse_varset_arg(const Schema& schema, const std::string& text) {
    try {
        return parse_varset(schema, text);
    } catch (const DataError& e) {
        throw UsageError(e.what());
    }
}

bool parse_ordinal(const std::string& text, int n, int& out) {
    if (text.empty()) return false;
    size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(text, &pos);
    } catch (const std::exception&) {
        return false;
    }
    if (pos != text.size() || value < 1 || value > n) return false;
    out = value;
    return true;
}

/// A record argument: a row ordinal when the text is an in-range integer,
/// otherwise a category tuple.
Cell resolve_record(const MicrodataTable& data, const std::string& text) {
    int row = 0;
    if (parse_ordinal(text, data.n(), row))
        return data.records()[static_cast<size_t>(row - 1)].cell;
    return parse_cell_arg(data.schema(), text);
}

/// Lowest-ordinal row holding the cell; notice on ambiguity.
int row_at(const MicrodataTable& data, const Cell& cell, const char* what) {
    int found = 0, matches = 0;
    for (const Record& r : data.records()) {
        if (r.cell != cell) continue;
        if (!found) found = r.id;
        ++matches;
    }
    if (!found)
        throw UsageError(std::string(what) + " " + format_cell(data.schema(), cell) +
                         " matches no record");
    if (matches > 1)
        note(std::string("note: ") + what + " " + format_cell(data.schema(), cell) + " matches " +
             std::to_string(matches) + " records; using row " + std::to_string(found));
    return found;
}

/// The dataset after exchanging the E-fields of two rows; every other byte
/// is untouched.
MicrodataTable swap_rows(const MicrodataTable& data, int row_i, int row_j, const VarSet& e) {
    std::vector<Record> records = data.records();
    Record& a = records[static_cast<size_t>(row_i - 1)];
    Record& b = records[static_cast<size_t>(row_j - 1)];
    std::vector<int> ca = a.cell.coords(), cb = b.cell.coords();
    for (int m : e) {
        std::swap(a.fields[static_cast<size_t>(m)], b.fields[static_cast<size_t>(m)]);
        std::swap(ca[static_cast<size_t>(m)], cb[static_cast<size_t>(m)]);
    }
    a.cell = Cell(std::move(ca));
    b.cell = Cell(std::move(cb));
    return MicrodataTable(data.schema(), std::move(records), data.had_header());
}

struct Inputs {
    Schema schema;
    std::optional<MicrodataTable> data;
    std::optional<NormalizedClass> margins;
};

Inputs load_inputs(const std::string& schema_path, const std::string& data_path,
                   const std::string& margins_path, char delimiter) {
    Inputs in{load_schema(schema_path), std::nullopt, std::nullopt};
    if (!data_path.empty()) {
        LoadOptions opts;
        opts.delimiter = delimiter;
        in.data = load_microdata_file(data_path, in.schema, opts);
        in.schema = in.data->schema();  // open variables now resolved
    }
    if (!margins_path.empty()) in.margins = load_generating_class(margins_path, in.schema);
    return in;
}

int run_uniques(const Inputs& in) {
    ContingencyTable table = to_contingency(*in.data);
    std::vector<Cell> uniques = sample_uniques(table);
    json list = json::array();
    for (const Cell& c : uniques) list.push_back(cell_json(in.schema, c));
    emit(json{{"records", in.data->n()},
              {"occupied_cells", static_cast<long long>(table.counts().size())},
              {"uniques", list}});
    note("sample uniques: " + std::to_string(uniques.size()) + " of " +
         std::to_string(table.counts().size()) + " occupied cells");
    return kExitSwappable;
}

int run_separators(const Inputs& in) {
    const GeneratingClass& cls = in.margins->cls;
    Graph g = generated_graph(cls);
    std::vector<SeparatorDecomposition> seps = minimal_separators(g);
    ChordalityResult chordal = is_chordal(g);

    json list = json::array();
    for (const SeparatorDecomposition& dec : seps)
        list.push_back(json{{"separator", varset_json(in.schema, dec.separator)},
                            {"components", components_json(in.schema, dec.components)}});
    emit(json{{"chordal", chordal.chordal}, {"separators", list}});

    note("minimal separators: " + std::to_string(seps.size()));
    for (const SeparatorDecomposition& dec : seps) {
        std::string line = "  S=" + (dec.separator.empty() ? "{}" : format_varset(in.schema, dec.separator)) + " ->";
        for (const VarSet& c : dec.components) line += " [" + format_varset(in.schema, c) + "]";
        note(line);
    }
    note(markov_basis_note(chordal.chordal));
    return kExitSwappable;
}

int run_check(const Inputs& in, const std::string& record_a, const std::string& record_b,
              bool all, bool oracle_check) {
    const GeneratingClass& cls = in.margins->cls;
    Cell a = resolve_record(*in.data, record_a);
    Cell b = resolve_record(*in.data, record_b);

    DifferenceSet delta = difference_set(a, b);
    Graph sub = induced_subgraph(generated_graph(cls), delta);
    std::vector<VarSet> comps = connected_components(sub);
    std::optional<VarSet> e = is_swappable(a, b, cls);
    std::vector<SeparatorDecomposition> seps = minimal_separators(generated_graph(cls));
    std::optional<SwapWitness> witness = separator_witness(a, b, cls, seps);

    if (e.has_value() != witness.has_value())
        throw std::logic_error("component and separator certificates disagree");

    json report{{"verdict", e ? "swappable" : "not_swappable"},
                {"delta_set", varset_json(in.schema, delta)},
                {"components", components_json(in.schema, comps)},
                {"E", e ? varset_json(in.schema, *e) : json()},
                {"separator", witness ? varset_json(in.schema, witness->separator) : json()},
                {"gamma_alpha", witness ? varset_json(in.schema, witness->gamma_alpha) : json()},
                {"gamma_beta", witness ? varset_json(in.schema, witness->gamma_beta) : json()}};
    if (!e) report["reason"] = delta.size() < 2 ? "fewer than two differing variables" : "G_Δ̄ connected";

    if (all) {
        json witnesses = json::array();
        for (const SeparatorDecomposition& dec : seps) {
            if (dec.separator.intersects(delta)) continue;
            for (size_t x = 0; x < dec.components.size(); ++x) {
                if (!dec.components[x].intersects(delta)) continue;
                for (size_t y = x + 1; y < dec.components.size(); ++y) {
                    if (!dec.components[y].intersects(delta)) continue;
                    witnesses.push_back(
                        json{{"separator", varset_json(in.schema, dec.separator)},
                             {"gamma_alpha", varset_json(in.schema, dec.components[x])},
                             {"gamma_beta", varset_json(in.schema, dec.components[y])}});
                }
            }
        }
        report["witnesses"] = witnesses;
    }

    if (oracle_check) {
        std::optional<VarSet> brute = oracle::brute_swappable(a, b, cls);
        if (brute.has_value() != e.has_value())
            throw std::runtime_error("oracle cross-check failed: brute-force disagrees");
        report["oracle_agrees"] = true;
    }

    emit(report);
    if (e) {
        note("swappable: E=" + format_varset(in.schema, *e));
        return kExitSwappable;
    }
    note("not swappable: " + report["reason"].get<std::string>());
    return kExitNegative;
}

int run_find(const Inputs& in, const std::string& cell_arg, const std::string& out_path,
             bool all, bool oracle_check) {
    const GeneratingClass& cls = in.margins->cls;
    ContingencyTable table = to_contingency(*in.data);

    Cell anchor;
    try {
        anchor = parse_cell_arg(in.schema, cell_arg);
    } catch (const UsageError&) {
        int row = 0;
        if (!parse_ordinal(cell_arg, in.data->n(), row)) throw;
        anchor = in.data->records()[static_cast<size_t>(row - 1)].cell;
    }
    if (table.count(anchor) < 1)
        throw UsageError("--cell " + format_cell(in.schema, anchor) + " matches no record");

    std::vector<SeparatorDecomposition> seps = minimal_separators(generated_graph(cls));
    std::optional<SwapPlan> plan = find_partner_plan(table, anchor, cls, seps);

    if (oracle_check) {
        std::optional<oracle::BrutePartner> brute = oracle::brute_partner(table, anchor, cls);
        if (brute.has_value() != plan.has_value())
            throw std::runtime_error("oracle cross-check failed: brute-force disagrees");
    }

    json report{{"verdict", plan ? "partner_found" : "no_partner"},
                {"anchor", cell_json(in.schema, anchor)}};

    if (all) {
        json witnesses = json::array();
        for (const SeparatorDecomposition& dec : seps) {
            for (size_t x = 0; x < dec.components.size(); ++x) {
                for (size_t y = x + 1; y < dec.components.size(); ++y) {
                    DiagonalSubtable sub = diagonal_subtable(table, anchor, dec.separator,
                                                             dec.components[x], dec.components[y]);
                    if (!sub.nonempty()) continue;
                    witnesses.push_back(
                        json{{"separator", varset_json(in.schema, dec.separator)},
                             {"gamma_alpha", varset_json(in.schema, dec.components[x])},
                             {"gamma_beta", varset_json(in.schema, dec.components[y])},
                             {"candidates", static_cast<long long>(sub.entries.size())}});
                }
            }
        }
        report["witnesses"] = witnesses;
    }

    if (!plan) {
        report["E"] = json();
        emit(report);
        note("no swap partner for " + format_cell(in.schema, anchor));
        return kExitNegative;
    }

    ContingencyTable after = apply_swap(table, *plan);
    PreservationReport checks = verify_preservation(table, after, cls);

    DifferenceSet delta = difference_set(plan->cell_i(), plan->cell_j());
    std::optional<SwapWitness> witness = separator_witness(plan->cell_i(), plan->cell_j(), cls, seps);
    report["partner"] = cell_json(in.schema, plan->cell_j());
    report["delta_set"] = varset_json(in.schema, delta);
    report["E"] = varset_json(in.schema, plan->swap_set());
    report["separator"] = witness ? varset_json(in.schema, witness->separator) : json();
    report["gamma_alpha"] = witness ? varset_json(in.schema, witness->gamma_alpha) : json();
    report["gamma_beta"] = witness ? varset_json(in.schema, witness->gamma_beta) : json();
    report["cells_before"] =
        json::array({cell_json(in.schema, plan->cell_i()), cell_json(in.schema, plan->cell_j())});
    report["cells_after"] =
        json::array({cell_json(in.schema, plan->result_i()), cell_json(in.schema, plan->result_j())});
    report["marginal_checks"] = checks_json(in.schema, checks);

    if (!checks.pass) throw std::logic_error("partner swap failed the preservation check");

    if (!out_path.empty()) {
        int row_i = row_at(*in.data, plan->cell_i(), "anchor");
        int row_j = row_at(*in.data, plan->cell_j(), "partner");
        write_microdata_file(out_path, swap_rows(*in.data, row_i, row_j, plan->swap_set()));
        report["out"] = out_path;
    }

    emit(report);
    note("partner " + format_cell(in.schema, plan->cell_j()) + ", E=" +
         format_varset(in.schema, plan->swap_set()));
    return kExitSwappable;
}

int run_swap(const Inputs& in, const std::string& cell_i_arg, const std::string& cell_j_arg,
             const std::string& vars_arg, const std::string& out_path) {
    const GeneratingClass& cls = in.margins->cls;
    ContingencyTable table = to_contingency(*in.data);

    Cell ci = resolve_record(*in.data, cell_i_arg);
    Cell cj = resolve_record(*in.data, cell_j_arg);
    VarSet e = parse_varset_arg(in.schema, vars_arg);

    std::optional<SwapPlan> plan;
    try {
        plan.emplace(ci, cj, e);
    } catch (const std::invalid_argument& err) {
        throw UsageError(err.what());
    }

    int row_i = row_at(*in.data, ci, "--cell-i");
    int row_j = row_at(*in.data, cj, "--cell-j");
    if (row_i == row_j) throw UsageError("--cell-i and --cell-j address the same record");

    ContingencyTable after = apply_swap(table, *plan);
    PreservationReport checks = verify_preservation(table, after, cls);

    json report{{"verdict", checks.pass ? "preserved" : "disturbed"},
                {"delta_set", varset_json(in.schema, difference_set(ci, cj))},
                {"E", varset_json(in.schema, e)},
                {"cells_before", json::array({cell_json(in.schema, ci), cell_json(in.schema, cj)})},
                {"cells_after", json::array({cell_json(in.schema, plan->result_i()),
                                             cell_json(in.schema, plan->result_j())})},
                {"marginal_checks", checks_json(in.schema, checks)}};

    if (!out_path.empty()) {
        write_microdata_file(out_path, swap_rows(*in.data, row_i, row_j, e));
        report["out"] = out_path;
    }

    emit(report);
    if (checks.pass) {
        note("swap preserves every protected marginal");
        return kExitSwappable;
    }
    note("swap disturbs at least one protected marginal");
    return kExitNegative;
}

int run_verify(const std::string& schema_path, const std::string& before_path,
               const std::string& after_path, const std::string& margins_path,
               const std::string& move_out, char delimiter) {
    Schema declared = load_schema(schema_path);
    LoadOptions opts;
    opts.delimiter = delimiter;
    MicrodataTable before = load_microdata_file(before_path, declared, opts);
    // Pin the resolved schema of the first file so both sides share one
    // category coding.
    MicrodataTable after = load_microdata_file(after_path, before.schema(), opts);
    NormalizedClass margins = load_generating_class(margins_path, before.schema());

    ContingencyTable table_before = to_contingency(before);
    ContingencyTable table_after = to_contingency(after);
    PreservationReport checks = verify_preservation(table_before, table_after, margins.cls);
    json report{{"verdict", checks.pass ? "preserved" : "disturbed"},
                {"marginal_checks", checks_json(before.schema(), checks)}};

    if (!move_out.empty()) {
        if (table_before.total() != table_after.total())
            throw UsageError("--move-out needs equal record totals; the difference of these "
                             "files is not a move");
        std::map<Cell, long long> diff;
        for (const auto& [c, n] : table_after.counts()) diff[c] += n;
        for (const auto& [c, n] : table_before.counts()) diff[c] -= n;
        std::erase_if(diff, [](const auto& kv) { return kv.second == 0; });
        Move f(before.schema(), std::move(diff));
        write_move(move_out, f);
        report["move_out"] = move_out;
        report["move_degree"] = f.degree();
        report["is_move"] = is_move(f, margins.cls);
    }

    emit(report);
    if (checks.pass) {
        note("every protected marginal matches");
        return kExitSwappable;
    }
    note("at least one protected marginal differs");
    return kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"swap-based disclosure control for categorized microdata"};
    app.require_subcommand(1);

    std::string data, schema_path, margins, out, record_a, record_b, cell, cell_i, cell_j, vars,
        before, after, move_out;
    std::string delimiter = ",";
    bool all = false, oracle_check = false;

    auto add_common = [&](CLI::App* cmd, bool need_data, bool need_margins) {
        cmd->add_option("--schema", schema_path, "schema JSON file")->required();
        if (need_data) cmd->add_option("--data", data, "microdata CSV file")->required();
        if (need_margins)
            cmd->add_option("--margins", margins, "generating-class JSON file")->required();
        cmd->add_option("--delimiter", delimiter, "field delimiter (single character)");
    };

    CLI::App* uniques_cmd = app.add_subcommand("uniques", "list sample-unique cells");
    add_common(uniques_cmd, true, false);

    CLI::App* separators_cmd =
        app.add_subcommand("separators", "minimal separators of the generated graph");
    add_common(separators_cmd, false, true);

    CLI::App* check_cmd = app.add_subcommand("check", "decide swappability of two records");
    add_common(check_cmd, true, true);
    check_cmd->add_option("--record-a", record_a, "row ordinal or category tuple")->required();
    check_cmd->add_option("--record-b", record_b, "row ordinal or category tuple")->required();
    check_cmd->add_flag("--all", all, "list every separator witness");
    check_cmd->add_flag("--oracle", oracle_check, "cross-check against the brute-force oracle");

    CLI::App* find_cmd = app.add_subcommand("find", "find a swap partner for a record");
    add_common(find_cmd, true, true);
    find_cmd->add_option("--cell", cell, "category tuple or row ordinal")->required();
    find_cmd->add_option("--out", out, "write post-swap microdata here");
    find_cmd->add_flag("--all", all, "list every feasible witness");
    find_cmd->add_flag("--oracle", oracle_check, "cross-check against the brute-force oracle");

    CLI::App* swap_cmd = app.add_subcommand("swap", "apply a manual swap and report the damage");
    add_common(swap_cmd, true, true);
    swap_cmd->add_option("--cell-i", cell_i, "first record: row ordinal or tuple")->required();
    swap_cmd->add_option("--cell-j", cell_j, "second record: row ordinal or tuple")->required();
    swap_cmd->add_option("--vars", vars, "swap set: variable names or numbers")->required();
    swap_cmd->add_option("--out", out, "write post-swap microdata here");

    CLI::App* verify_cmd = app.add_subcommand("verify", "compare protected marginals of two files");
    verify_cmd->add_option("--schema", schema_path, "schema JSON file")->required();
    verify_cmd->add_option("--margins", margins, "generating-class JSON file")->required();
    verify_cmd->add_option("--before", before, "baseline microdata CSV")->required();
    verify_cmd->add_option("--after", after, "microdata CSV to compare")->required();
    verify_cmd->add_option("--move-out", move_out,
                           "write the after-minus-before difference as a move file");
    verify_cmd->add_option("--delimiter", delimiter, "field delimiter (single character)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (delimiter.size() != 1) throw UsageError("--delimiter must be a single character");
        const char delim = delimiter[0];

        if (app.got_subcommand(verify_cmd))
            return run_verify(schema_path, before, after, margins, move_out, delim);

        Inputs in = load_inputs(schema_path, data, margins, delim);
        if (app.got_subcommand(uniques_cmd)) return run_uniques(in);
        if (app.got_subcommand(separators_cmd)) return run_separators(in);
        if (app.got_subcommand(check_cmd))
            return run_check(in, record_a, record_b, all, oracle_check);
        if (app.got_subcommand(find_cmd)) return run_find(in, cell, out, all, oracle_check);
        if (app.got_subcommand(swap_cmd)) return run_swap(in, cell_i, cell_j, vars, out);
        throw UsageError("no subcommand");
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
}
