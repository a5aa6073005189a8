#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "swapsafe/model.hpp"
#include "swapsafe/move.hpp"
#include "swapsafe/table.hpp"

namespace swapsafe {

/// Schema file: {"variables": [{"name": ..., "labels": [...]}, ...]}.
/// A variable may give "levels" instead of "labels" (numeric categories), or
/// neither (open: labels collected from data in first-appearance order).
Schema load_schema(const std::filesystem::path& path);
Schema parse_schema_json(const std::string& text, const std::string& context);

/// Generating-class file: a JSON array of variable arrays, e.g.
/// [["age","occupation"],["sex","residence"]]. Entries are variable names or
/// 1-based indices. Members are normalized (contained members dropped).
NormalizedClass load_generating_class(const std::filesystem::path& path, const Schema& schema);
NormalizedClass parse_generating_class_json(const std::string& text, const Schema& schema,
                                            const std::string& context);

MicrodataTable load_microdata_file(const std::filesystem::path& path, const Schema& schema,
                                   const LoadOptions& opts = {});

void write_microdata(std::ostream& out, const MicrodataTable& data, char delimiter = ',');
void write_microdata_file(const std::filesystem::path& path, const MicrodataTable& data,
                          char delimiter = ',');

/// Move file: {"entries": [{"cell": [...], "count": n}, ...]} with cells as
/// label tuples or 1-based index tuples and nonzero counts.
Move load_move(const std::filesystem::path& path, const Schema& schema);
void write_move(const std::filesystem::path& path, const Move& move);

/// Parses a cell given as a delimiter-separated tuple of category labels or
/// 1-based level numbers (labels take precedence per variable).
Cell parse_cell(const Schema& schema, const std::string& text, char delimiter = ',');

/// Parses a variable subset given as delimiter-separated names or 1-based
/// variable numbers.
VarSet parse_varset(const Schema& schema, const std::string& text, char delimiter = ',');

/// Display form of a cell: comma-joined category labels.
std::string format_cell(const Schema& schema, const Cell& cell, char delimiter = ',');

std::string format_varset(const Schema& schema, const VarSet& vars);

}  // namespace swapsafe
