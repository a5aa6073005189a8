#include "swapsafe/table.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>

namespace swapsafe {

namespace {

std::vector<std::string> split(const std::string& line, char delim) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, delim)) fields.push_back(field);
    if (!line.empty() && line.back() == delim) fields.emplace_back();
    return fields;
}

bool parse_int(const std::string& s, int& out) {
    if (s.empty()) return false;
    size_t pos = 0;
    try {
        out = std::stoi(s, &pos);
    } catch (const std::exception&) {
        return false;
    }
    return pos == s.size();
}

}  // namespace

Schema::Schema(std::vector<Variable> variables) : vars_(std::move(variables)) {
    if (vars_.empty()) throw std::invalid_argument("schema needs at least one variable");
    std::set<std::string> names;
    for (const Variable& v : vars_) {
        if (v.name.empty()) throw std::invalid_argument("schema variable with empty name");
        if (!names.insert(v.name).second)
            throw std::invalid_argument("duplicate variable name: " + v.name);
        if (v.levels < 0) throw std::invalid_argument("negative level count for " + v.name);
        if (!v.labels.empty()) {
            if (v.levels != 0 && v.levels != static_cast<int>(v.labels.size()))
                throw std::invalid_argument("label count does not match levels for " + v.name);
            std::set<std::string> labels(v.labels.begin(), v.labels.end());
            if (labels.size() != v.labels.size())
                throw std::invalid_argument("duplicate category label for " + v.name);
        }
    }
    for (Variable& v : vars_)
        if (!v.labels.empty()) v.levels = static_cast<int>(v.labels.size());
}

std::optional<int> Schema::index_of(const std::string& name) const {
    for (int m = 0; m < k(); ++m)
        if (vars_[static_cast<size_t>(m)].name == name) return m;
    return std::nullopt;
}

std::optional<int> Schema::level_of_label(int m, const std::string& label) const {
    const Variable& v = vars_.at(static_cast<size_t>(m));
    for (size_t t = 0; t < v.labels.size(); ++t)
        if (v.labels[t] == label) return static_cast<int>(t);
    return std::nullopt;
}

std::string Schema::label_of(int m, int level) const {
    const Variable& v = vars_.at(static_cast<size_t>(m));
    if (level >= 0 && level < static_cast<int>(v.labels.size()))
        return v.labels[static_cast<size_t>(level)];
    return std::to_string(level + 1);
}

bool Schema::resolved() const {
    return std::all_of(vars_.begin(), vars_.end(),
                       [](const Variable& v) { return v.levels >= 1; });
}

bool Schema::same_layout(const Schema& other) const {
    if (k() != other.k()) return false;
    for (int m = 0; m < k(); ++m)
        if (name(m) != other.name(m) || levels(m) != other.levels(m)) return false;
    return true;
}

Cell Cell::project(const VarSet& vars) const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(vars.size()));
    for (int m : vars) out.push_back(coords_.at(static_cast<size_t>(m)));
    return Cell(std::move(out));
}

bool Cell::agrees_with(const Cell& other, const VarSet& vars) const {
    for (int m : vars)
        if (coords_.at(static_cast<size_t>(m)) != other.coords_.at(static_cast<size_t>(m)))
            return false;
    return true;
}

Cell Cell::merge(const Cell& a, const Cell& b, const VarSet& from_a) {
    if (a.size() != b.size()) throw std::invalid_argument("merging cells of different arity");
    std::vector<int> out(a.coords_);
    for (int m = 0; m < b.size(); ++m)
        if (!from_a.contains(m)) out[static_cast<size_t>(m)] = b[m];
    return Cell(std::move(out));
}

std::string to_string(const Cell& c) {
    std::string out = "(";
    for (int m = 0; m < c.size(); ++m) {
        if (m) out += ",";
        out += std::to_string(c[m] + 1);
    }
    out += ")";
    return out;
}

namespace {

void check_cell_against(const Schema& schema, const Cell& cell) {
    if (cell.size() != schema.k())
        throw std::invalid_argument("cell arity " + std::to_string(cell.size()) +
                                    " does not match schema with k=" + std::to_string(schema.k()));
    for (int m = 0; m < schema.k(); ++m) {
        if (cell[m] < 0 || cell[m] >= schema.levels(m))
            throw std::invalid_argument("cell coordinate out of range for variable " +
                                        schema.name(m) + ": " + std::to_string(cell[m] + 1));
    }
}

}  // namespace

MicrodataTable::MicrodataTable(Schema schema, std::vector<Record> records, bool had_header)
    : schema_(std::move(schema)), records_(std::move(records)), had_header_(had_header) {
    std::set<int> ids;
    for (const Record& r : records_) {
        check_cell_against(schema_, r.cell);
        if (!ids.insert(r.id).second)
            throw std::invalid_argument("duplicate record id " + std::to_string(r.id));
    }
}

ContingencyTable::ContingencyTable(Schema schema) : schema_(std::move(schema)) {}

ContingencyTable::ContingencyTable(Schema schema, std::map<Cell, long long> counts)
    : schema_(std::move(schema)), counts_(std::move(counts)) {
    validate();
    for (const auto& [cell, n] : counts_) total_ += n;
}

void ContingencyTable::validate() const {
    for (const auto& [cell, n] : counts_) {
        check_cell_against(schema_, cell);
        if (n <= 0)
            throw std::invalid_argument("stored count must be positive at " + to_string(cell));
    }
}

long long ContingencyTable::count(const Cell& c) const {
    auto it = counts_.find(c);
    return it == counts_.end() ? 0 : it->second;
}

ContingencyTable ContingencyTable::with_deltas(
    const std::vector<std::pair<Cell, long long>>& deltas) const {
    std::map<Cell, long long> out = counts_;
    for (const auto& [cell, d] : deltas) {
        check_cell_against(schema_, cell);
        long long& n = out[cell];
        n += d;
        if (n < 0)
            throw std::invalid_argument("insufficient count at cell " + to_string(cell));
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return ContingencyTable(schema_, std::move(out));
}

MicrodataTable load_microdata(std::istream& in, const Schema& schema, const LoadOptions& opts) {
    const int k = schema.k();
    std::vector<Variable> resolved = schema.variables();
    std::vector<char> open(static_cast<size_t>(k));
    for (int m = 0; m < k; ++m) open[static_cast<size_t>(m)] = schema.levels(m) == 0;
    std::vector<Record> records;
    bool had_header = false;
    bool first_content_row = true;
    int line_no = 0;
    std::string line;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> fields = split(line, opts.delimiter);

        if (first_content_row) {
            first_content_row = false;
            if (static_cast<int>(fields.size()) == k) {
                bool is_header = true;
                for (int m = 0; m < k; ++m)
                    if (fields[static_cast<size_t>(m)] != schema.name(m)) is_header = false;
                if (is_header) {
                    had_header = true;
                    continue;
                }
            }
        }

        if (static_cast<int>(fields.size()) != k)
            throw ArityError("row " + std::to_string(line_no) + ": expected " + std::to_string(k) +
                             " fields, got " + std::to_string(fields.size()));

        std::vector<int> coords(static_cast<size_t>(k));
        for (int m = 0; m < k; ++m) {
            Variable& v = resolved[static_cast<size_t>(m)];
            const std::string& field = fields[static_cast<size_t>(m)];
            if (open[static_cast<size_t>(m)]) {
                // open variable: labels fixed in first-appearance order
                auto it = std::find(v.labels.begin(), v.labels.end(), field);
                if (it == v.labels.end()) {
                    v.labels.push_back(field);
                    it = std::prev(v.labels.end());
                }
                coords[static_cast<size_t>(m)] = static_cast<int>(it - v.labels.begin());
            } else if (!v.labels.empty()) {
                auto it = std::find(v.labels.begin(), v.labels.end(), field);
                if (it == v.labels.end())
                    throw UnknownLabelError("row " + std::to_string(line_no) +
                                            ": unknown category '" + field + "' for variable '" +
                                            v.name + "'");
                coords[static_cast<size_t>(m)] = static_cast<int>(it - v.labels.begin());
            } else {
                int value = 0;
                if (!parse_int(field, value) || value < 1 || value > v.levels)
                    throw UnknownLabelError("row " + std::to_string(line_no) +
                                            ": category '" + field + "' for variable '" + v.name +
                                            "' is not a level number in 1.." +
                                            std::to_string(v.levels));
                coords[static_cast<size_t>(m)] = value - 1;
            }
        }
        const int id = static_cast<int>(records.size()) + 1;
        records.push_back(Record{id, Cell(std::move(coords)), std::move(fields)});
    }

    if (records.empty()) throw EmptyInputError("no records");

    for (Variable& v : resolved)
        if (v.levels == 0) v.levels = static_cast<int>(v.labels.size());

    return MicrodataTable(Schema(std::move(resolved)), std::move(records), had_header);
}

ContingencyTable to_contingency(const MicrodataTable& data) {
    std::map<Cell, long long> counts;
    for (const Record& r : data.records()) ++counts[r.cell];
    return ContingencyTable(data.schema(), std::move(counts));
}

Schema sub_schema(const Schema& schema, const VarSet& d) {
    std::vector<Variable> vars;
    vars.reserve(static_cast<size_t>(d.size()));
    for (int m : d) {
        if (m >= schema.k())
            throw std::invalid_argument("variable index out of range: " + std::to_string(m + 1));
        vars.push_back(schema.variable(m));
    }
    return Schema(std::move(vars));
}

std::map<Cell, long long> marginal_counts(const std::map<Cell, long long>& counts,
                                          const VarSet& d) {
    std::map<Cell, long long> out;
    for (const auto& [cell, n] : counts) out[cell.project(d)] += n;
    return out;
}

ContingencyTable marginal(const ContingencyTable& table, const VarSet& d) {
    if (d.empty()) throw std::invalid_argument("marginal over an empty variable set");
    Schema restricted = sub_schema(table.schema(), d);
    std::map<Cell, long long> out = marginal_counts(table.counts(), d);
    return ContingencyTable(std::move(restricted), std::move(out));
}

std::vector<Cell> sample_uniques(const ContingencyTable& table) {
    std::vector<Cell> out;
    for (const auto& [cell, n] : table.counts())
        if (n == 1) out.push_back(cell);
    return out;
}

DiagonalSubtable diagonal_subtable(const ContingencyTable& table, const Cell& anchor,
                                   const VarSet& separator, const VarSet& gamma_alpha,
                                   const VarSet& gamma_beta) {
    if (gamma_alpha.empty() || gamma_beta.empty())
        throw std::invalid_argument("diagonal subtable needs two nonempty components");
    if (separator.intersects(gamma_alpha) || separator.intersects(gamma_beta) ||
        gamma_alpha.intersects(gamma_beta))
        throw std::invalid_argument("separator and components must be pairwise disjoint");
    check_cell_against(table.schema(), anchor);
    const int k = table.schema().k();
    const VarSet vars = separator | gamma_alpha | gamma_beta;
    if (!vars.empty() && vars.vars().back() >= k)
        throw std::invalid_argument("variable index out of range: " +
                                    std::to_string(vars.vars().back() + 1));

    DiagonalSubtable sub{anchor, separator, gamma_alpha, gamma_beta, vars, {}};
    for (const auto& [cell, n] : table.counts()) {
        if (!cell.agrees_with(anchor, separator)) continue;
        if (cell.agrees_with(anchor, gamma_alpha)) continue;
        if (cell.agrees_with(anchor, gamma_beta)) continue;
        sub.entries[cell.project(vars)] += n;
    }
    return sub;
}

}  // namespace swapsafe
