#pragma once

#include <compare>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "swapsafe/varset.hpp"

namespace swapsafe {

/// Errors raised while ingesting or validating data files. Messages carry
/// the offending row number where one exists.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnknownLabelError : public DataError {
public:
    using DataError::DataError;
};

class ArityError : public DataError {
public:
    using DataError::DataError;
};

class EmptyInputError : public DataError {
public:
    using DataError::DataError;
};

struct Variable {
    std::string name;
    int levels = 0;                   // 0 means open: level set inferred on load
    std::vector<std::string> labels;  // empty means numeric categories 1..levels
};

/// The variable set of a categorized microdata set: k variables, each with a
/// fixed number of levels and optional category labels that pin the
/// label-to-index order.
class Schema {
public:
    Schema() = default;
    explicit Schema(std::vector<Variable> variables);

    int k() const { return static_cast<int>(vars_.size()); }
    const std::vector<Variable>& variables() const { return vars_; }
    const Variable& variable(int m) const { return vars_.at(static_cast<size_t>(m)); }
    int levels(int m) const { return vars_.at(static_cast<size_t>(m)).levels; }
    const std::string& name(int m) const { return vars_.at(static_cast<size_t>(m)).name; }

    std::optional<int> index_of(const std::string& name) const;

    /// 0-based level index for a category label of variable m, if known.
    std::optional<int> level_of_label(int m, const std::string& label) const;

    /// Display label for a level: the category label when pinned, otherwise
    /// the 1-based level number.
    std::string label_of(int m, int level) const;

    /// True when every variable has a fixed level count (>= 1).
    bool resolved() const;

    bool same_layout(const Schema& other) const;

private:
    std::vector<Variable> vars_;
};

/// A cell of the k-way contingency table: one coordinate per variable,
/// 0-based. Ordered lexicographically.
class Cell {
public:
    Cell() = default;
    explicit Cell(std::vector<int> coords) : coords_(std::move(coords)) {}

    int size() const { return static_cast<int>(coords_.size()); }
    int operator[](int m) const { return coords_.at(static_cast<size_t>(m)); }
    const std::vector<int>& coords() const { return coords_; }

    /// The marginal cell i_D: coordinates at the variables of `vars`, in
    /// sorted variable order.
    Cell project(const VarSet& vars) const;

    /// True when the two cells agree on every variable of `vars`.
    bool agrees_with(const Cell& other, const VarSet& vars) const;

    /// Coordinate-wise combination (a_E, b_{E^C}): a's coordinates on
    /// `from_a`, b's elsewhere.
    static Cell merge(const Cell& a, const Cell& b, const VarSet& from_a);

    auto operator<=>(const Cell&) const = default;

private:
    std::vector<int> coords_;
};

/// Renders as "(1,2,2,1)" with 1-based coordinates.
std::string to_string(const Cell& c);

struct Record {
    int id = 0;                       // 1-based record ordinal
    Cell cell;
    std::vector<std::string> fields;  // original text fields, kept for faithful rewriting
};

class MicrodataTable {
public:
    MicrodataTable(Schema schema, std::vector<Record> records, bool had_header = false);

    const Schema& schema() const { return schema_; }
    const std::vector<Record>& records() const { return records_; }
    int n() const { return static_cast<int>(records_.size()); }
    bool had_header() const { return had_header_; }

private:
    Schema schema_;
    std::vector<Record> records_;
    bool had_header_ = false;
};

/// Sparse k-way contingency table: cell -> positive count. Immutable; edits
/// produce new tables.
class ContingencyTable {
public:
    explicit ContingencyTable(Schema schema);
    ContingencyTable(Schema schema, std::map<Cell, long long> counts);

    const Schema& schema() const { return schema_; }
    const std::map<Cell, long long>& counts() const { return counts_; }
    long long count(const Cell& c) const;
    long long total() const { return total_; }

    /// A new table with the given signed deltas applied. Throws if any
    /// resulting count would be negative; zero counts are dropped.
    ContingencyTable with_deltas(const std::vector<std::pair<Cell, long long>>& deltas) const;

    bool operator==(const ContingencyTable& other) const {
        return counts_ == other.counts_;
    }

private:
    void validate() const;

    Schema schema_;
    std::map<Cell, long long> counts_;
    long long total_ = 0;
};

struct LoadOptions {
    char delimiter = ',';
};

/// Reads delimiter-separated microdata, one record per row. A first row equal
/// to the schema's variable names is consumed as a header. Variables with
/// pinned labels reject unknown categories; numeric variables expect 1-based
/// level numbers; open variables collect labels in first-appearance order.
MicrodataTable load_microdata(std::istream& in, const Schema& schema, const LoadOptions& opts = {});

ContingencyTable to_contingency(const MicrodataTable& data);

/// The schema restricted to the variables of `d`, in sorted order.
Schema sub_schema(const Schema& schema, const VarSet& d);

/// The D-marginal: counts summed over the variables outside `d`. The result
/// is a |d|-way table over the restricted schema.
ContingencyTable marginal(const ContingencyTable& table, const VarSet& d);

/// Marginal counts of a raw sparse array, keyed by projected cells.
std::map<Cell, long long> marginal_counts(const std::map<Cell, long long>& counts, const VarSet& d);

/// Cells with count exactly 1, in lexicographic order.
std::vector<Cell> sample_uniques(const ContingencyTable& table);

/// The slice-and-delete subtable used by the partner search: marginal counts
/// over separator ∪ gamma_alpha ∪ gamma_beta, restricted to cells that agree
/// with the anchor on the separator and disagree with it on both components.
struct DiagonalSubtable {
    Cell anchor;
    VarSet separator;
    VarSet gamma_alpha;
    VarSet gamma_beta;
    VarSet vars;  // separator | gamma_alpha | gamma_beta, sorted
    std::map<Cell, long long> entries;

    bool nonempty() const { return !entries.empty(); }
};

DiagonalSubtable diagonal_subtable(const ContingencyTable& table, const Cell& anchor,
                                   const VarSet& separator, const VarSet& gamma_alpha,
                                   const VarSet& gamma_beta);

}  // namespace swapsafe
