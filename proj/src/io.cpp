#include "swapsafe/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace swapsafe {

using nlohmann::json;

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json parse_json(const std::string& text, const std::string& context) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw DataError(context + ": " + e.what());
    }
}

std::vector<std::string> split(const std::string& line, char delim) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, delim)) fields.push_back(field);
    if (!line.empty() && line.back() == delim) fields.emplace_back();
    return fields;
}

}  // namespace

Schema parse_schema_json(const std::string& text, const std::string& context) {
    json doc = parse_json(text, context);
    if (!doc.is_object() || !doc.contains("variables") || !doc["variables"].is_array())
        throw DataError(context + ": expected an object with a \"variables\" array");
    std::vector<Variable> vars;
    for (const json& v : doc["variables"]) {
        if (!v.is_object() || !v.contains("name") || !v["name"].is_string())
            throw DataError(context + ": each variable needs a \"name\" string");
        Variable var;
        var.name = v["name"].get<std::string>();
        if (v.contains("labels")) {
            if (!v["labels"].is_array())
                throw DataError(context + ": \"labels\" of " + var.name + " must be an array");
            for (const json& label : v["labels"]) {
                if (!label.is_string())
                    throw DataError(context + ": labels of " + var.name + " must be strings");
                var.labels.push_back(label.get<std::string>());
            }
            if (var.labels.empty())
                throw DataError(context + ": \"labels\" of " + var.name + " is empty");
        } else if (v.contains("levels")) {
            if (!v["levels"].is_number_integer() || v["levels"].get<int>() < 1)
                throw DataError(context + ": \"levels\" of " + var.name +
                                " must be a positive integer");
            var.levels = v["levels"].get<int>();
        }
        vars.push_back(std::move(var));
    }
    if (vars.empty()) throw DataError(context + ": schema has no variables");
    try {
        return Schema(std::move(vars));
    } catch (const std::invalid_argument& e) {
        throw DataError(context + ": " + e.what());
    }
}

Schema load_schema(const std::filesystem::path& path) {
    return parse_schema_json(read_file(path), path.string());
}

namespace {

int resolve_variable(const Schema& schema, const json& entry, const std::string& context) {
    if (entry.is_string()) {
        const std::string name = entry.get<std::string>();
        if (std::optional<int> m = schema.index_of(name)) return *m;
        throw DataError(context + ": unknown variable '" + name + "'");
    }
    if (entry.is_number_integer()) {
        const int num = entry.get<int>();
        if (num < 1 || num > schema.k())
            throw DataError(context + ": variable number " + std::to_string(num) +
                            " out of range 1.." + std::to_string(schema.k()));
        return num - 1;
    }
    throw DataError(context + ": variable entries must be names or 1-based numbers");
}

}  // namespace

NormalizedClass parse_generating_class_json(const std::string& text, const Schema& schema,
                                            const std::string& context) {
    json doc = parse_json(text, context);
    if (!doc.is_array())
        throw DataError(context + ": expected an array of variable arrays");
    std::vector<VarSet> sets;
    for (const json& member : doc) {
        if (!member.is_array() || member.empty())
            throw DataError(context + ": each member must be a nonempty array");
        std::vector<int> vars;
        for (const json& entry : member) vars.push_back(resolve_variable(schema, entry, context));
        sets.emplace_back(VarSet(std::move(vars)));
    }
    if (sets.empty()) throw DataError(context + ": generating class has no members");
    try {
        return normalize_generating_class(std::move(sets), schema.k());
    } catch (const std::invalid_argument& e) {
        throw DataError(context + ": " + e.what());
    }
}

NormalizedClass load_generating_class(const std::filesystem::path& path, const Schema& schema) {
    return parse_generating_class_json(read_file(path), schema, path.string());
}

MicrodataTable load_microdata_file(const std::filesystem::path& path, const Schema& schema,
                                   const LoadOptions& opts) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path.string());
    try {
        return load_microdata(in, schema, opts);
    } catch (const DataError& e) {
        throw DataError(path.string() + ": " + e.what());
    }
}

void write_microdata(std::ostream& out, const MicrodataTable& data, char delimiter) {
    const Schema& schema = data.schema();
    if (data.had_header()) {
        for (int m = 0; m < schema.k(); ++m) {
            if (m) out << delimiter;
            out << schema.name(m);
        }
        out << "\n";
    }
    for (const Record& r : data.records()) {
        for (size_t f = 0; f < r.fields.size(); ++f) {
            if (f) out << delimiter;
            out << r.fields[f];
        }
        out << "\n";
    }
}

void write_microdata_file(const std::filesystem::path& path, const MicrodataTable& data,
                          char delimiter) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write " + path.string());
    write_microdata(out, data, delimiter);
    if (!out) throw DataError("failed while writing " + path.string());
}

namespace {

Cell parse_cell_json(const Schema& schema, const json& arr, const std::string& context) {
    if (!arr.is_array() || static_cast<int>(arr.size()) != schema.k())
        throw DataError(context + ": cell must be an array of " + std::to_string(schema.k()) +
                        " coordinates");
    std::vector<int> coords;
    for (int m = 0; m < schema.k(); ++m) {
        const json& entry = arr[static_cast<size_t>(m)];
        if (entry.is_string()) {
            const std::string label = entry.get<std::string>();
            if (std::optional<int> level = schema.level_of_label(m, label)) {
                coords.push_back(*level);
                continue;
            }
            throw DataError(context + ": unknown category '" + label + "' for variable '" +
                            schema.name(m) + "'");
        }
        if (entry.is_number_integer()) {
            const int num = entry.get<int>();
            if (num < 1 || num > schema.levels(m))
                throw DataError(context + ": coordinate " + std::to_string(num) +
                                " out of range for variable '" + schema.name(m) + "'");
            coords.push_back(num - 1);
            continue;
        }
        throw DataError(context + ": coordinates must be labels or 1-based numbers");
    }
    return Cell(std::move(coords));
}

}  // namespace

Move load_move(const std::filesystem::path& path, const Schema& schema) {
    const std::string context = path.string();
    json doc = parse_json(read_file(path), context);
    if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array())
        throw DataError(context + ": expected an object with an \"entries\" array");
    std::map<Cell, long long> entries;
    for (const json& e : doc["entries"]) {
        if (!e.is_object() || !e.contains("cell") || !e.contains("count") ||
            !e["count"].is_number_integer())
            throw DataError(context + ": each entry needs a \"cell\" array and an integer \"count\"");
        Cell cell = parse_cell_json(schema, e["cell"], context);
        long long count = e["count"].get<long long>();
        if (count == 0) throw DataError(context + ": zero count at " + to_string(cell));
        if (entries.count(cell))
            throw DataError(context + ": duplicate cell " + to_string(cell));
        entries.emplace(std::move(cell), count);
    }
    try {
        return Move(schema, std::move(entries));
    } catch (const std::invalid_argument& e) {
        throw DataError(context + ": " + e.what());
    }
}

void write_move(const std::filesystem::path& path, const Move& move) {
    json entries = json::array();
    for (const auto& [cell, count] : move.entries()) {
        json coords = json::array();
        for (int m = 0; m < cell.size(); ++m) coords.push_back(cell[m] + 1);
        entries.push_back(json{{"cell", coords}, {"count", count}});
    }
    std::ofstream out(path);
    if (!out) throw DataError("cannot write " + path.string());
    out << json{{"entries", entries}}.dump(2) << "\n";
    if (!out) throw DataError("failed while writing " + path.string());
}

Cell parse_cell(const Schema& schema, const std::string& text, char delimiter) {
    std::vector<std::string> fields = split(text, delimiter);
    if (static_cast<int>(fields.size()) != schema.k())
        throw DataError("cell '" + text + "' has " + std::to_string(fields.size()) +
                        " coordinates, expected " + std::to_string(schema.k()));
    std::vector<int> coords;
    for (int m = 0; m < schema.k(); ++m) {
        const std::string& field = fields[static_cast<size_t>(m)];
        if (std::optional<int> level = schema.level_of_label(m, field)) {
            coords.push_back(*level);
            continue;
        }
        int num = 0;
        size_t pos = 0;
        bool ok = false;
        try {
            num = std::stoi(field, &pos);
            ok = pos == field.size();
        } catch (const std::exception&) {
        }
        if (!ok || num < 1 || num > schema.levels(m))
            throw DataError("cell '" + text + "': '" + field +
                            "' is not a category of variable '" + schema.name(m) + "'");
        coords.push_back(num - 1);
    }
    return Cell(std::move(coords));
}

VarSet parse_varset(const Schema& schema, const std::string& text, char delimiter) {
    std::vector<std::string> fields = split(text, delimiter);
    std::vector<int> vars;
    for (const std::string& field : fields) {
        if (field.empty()) throw DataError("empty variable entry in '" + text + "'");
        if (std::optional<int> m = schema.index_of(field)) {
            vars.push_back(*m);
            continue;
        }
        int num = 0;
        size_t pos = 0;
        bool ok = false;
        try {
            num = std::stoi(field, &pos);
            ok = pos == field.size();
        } catch (const std::exception&) {
        }
        if (!ok || num < 1 || num > schema.k())
            throw DataError("'" + field + "' is not a variable name or number");
        vars.push_back(num - 1);
    }
    return VarSet(std::move(vars));
}

std::string format_cell(const Schema& schema, const Cell& cell, char delimiter) {
    std::string out;
    for (int m = 0; m < cell.size(); ++m) {
        if (m) out += delimiter;
        out += schema.label_of(m, cell[m]);
    }
    return out;
}

std::string format_varset(const Schema& schema, const VarSet& vars) {
    std::string out;
    bool first = true;
    for (int m : vars) {
        if (!first) out += ",";
        out += schema.name(m);
        first = false;
    }
    return out;
}

}  // namespace swapsafe
