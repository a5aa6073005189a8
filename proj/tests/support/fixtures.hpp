#pragma once

// Hand-checked fixtures shared by the unit and acceptance suites.
//
// two_record_*: a two-person dataset whose records differ in every variable.
// Swapping only the occupation keeps all one-way marginals but breaks the
// {age, occupation} marginal; swapping age and occupation together keeps it.
//
// parity_*: the four even-parity cells of the 2x2x2 cube, one record each.
// Every pair of records differs in exactly two variables, so with all
// two-variable marginals protected no pair is swappable; yet adding one to
// every odd cell and subtracting one from every even cell leaves all
// two-way marginals untouched (a degree-4 move).

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "swapsafe/model.hpp"
#include "swapsafe/move.hpp"
#include "swapsafe/table.hpp"
#include "swapsafe/varset.hpp"

namespace fixtures {

using swapsafe::Cell;
using swapsafe::GeneratingClass;
using swapsafe::MicrodataTable;
using swapsafe::Move;
using swapsafe::Record;
using swapsafe::Schema;
using swapsafe::Variable;
using swapsafe::VarSet;

inline Schema two_record_schema() {
    return Schema({Variable{"sex", 0, {"male", "female"}},
                   Variable{"age", 0, {"55", "50"}},
                   Variable{"occupation", 0, {"nurse", "police officer"}},
                   Variable{"residence", 0, {"Tokyo", "Osaka"}}});
}

inline Cell two_record_cell_a() { return Cell({0, 0, 0, 0}); }
inline Cell two_record_cell_b() { return Cell({1, 1, 1, 1}); }

inline MicrodataTable two_record_data() {
    std::vector<Record> records;
    records.push_back(Record{1, two_record_cell_a(), {"male", "55", "nurse", "Tokyo"}});
    records.push_back(Record{2, two_record_cell_b(), {"female", "50", "police officer", "Osaka"}});
    return MicrodataTable(two_record_schema(), std::move(records), true);
}

inline std::string two_record_csv() {
    return "sex,age,occupation,residence\n"
           "male,55,nurse,Tokyo\n"
           "female,50,police officer,Osaka\n";
}

inline std::string two_record_schema_json() {
    return R"({"variables": [
  {"name": "sex", "labels": ["male", "female"]},
  {"name": "age", "labels": ["55", "50"]},
  {"name": "occupation", "labels": ["nurse", "police officer"]},
  {"name": "residence", "labels": ["Tokyo", "Osaka"]}
]})";
}

/// One protected marginal per variable.
inline GeneratingClass one_way_class() {
    return GeneratingClass({VarSet{0}, VarSet{1}, VarSet{2}, VarSet{3}}, 4);
}

/// {sex}, {age, occupation}, {residence}.
inline GeneratingClass split_class() {
    return GeneratingClass({VarSet{0}, VarSet{1, 2}, VarSet{3}}, 4);
}

inline std::string split_class_json() {
    return R"([["sex"], ["age", "occupation"], ["residence"]])";
}

inline Schema parity_schema() {
    return Schema({Variable{"x1", 2, {}}, Variable{"x2", 2, {}}, Variable{"x3", 2, {}}});
}

inline std::vector<Cell> parity_cells() {
    return {Cell({0, 0, 0}), Cell({0, 1, 1}), Cell({1, 0, 1}), Cell({1, 1, 0})};
}

inline std::vector<Cell> parity_shifted_cells() {
    return {Cell({0, 0, 1}), Cell({0, 1, 0}), Cell({1, 0, 0}), Cell({1, 1, 1})};
}

inline MicrodataTable parity_data() {
    std::vector<Record> records;
    int id = 1;
    for (const Cell& c : parity_cells()) {
        std::vector<std::string> fields;
        for (int m = 0; m < c.size(); ++m) fields.push_back(std::to_string(c[m] + 1));
        records.push_back(Record{id++, c, std::move(fields)});
    }
    return MicrodataTable(parity_schema(), std::move(records), true);
}

inline std::string parity_csv() {
    return "x1,x2,x3\n"
           "1,1,1\n"
           "1,2,2\n"
           "2,1,2\n"
           "2,2,1\n";
}

inline std::string parity_schema_json() {
    return R"({"variables": [
  {"name": "x1", "levels": 2},
  {"name": "x2", "levels": 2},
  {"name": "x3", "levels": 2}
]})";
}

/// All two-element subsets of {0, ..., k-1}.
inline GeneratingClass all_pairs_class(int k) {
    std::vector<VarSet> sets;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) sets.push_back(VarSet{a, b});
    return GeneratingClass(std::move(sets), k);
}

inline std::string parity_pairs_json() {
    return R"([["x1", "x2"], ["x1", "x3"], ["x2", "x3"]])";
}

/// +1 on every odd-parity cell, -1 on every even-parity cell: a degree-4
/// move for the all-pairs class that no single two-record swap produces.
inline Move parity_rotation() {
    std::map<Cell, long long> entries;
    for (const Cell& c : parity_cells()) entries[c] = -1;
    for (const Cell& c : parity_shifted_cells()) entries[c] = +1;
    return Move(parity_schema(), std::move(entries));
}

}  // namespace fixtures
