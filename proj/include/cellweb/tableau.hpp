#pragma once

// Standard Young tableaux with tau-invariants, f^YT maps, column-superstandard
// canonicalization, and Yamanouchi-word conversion (Fulton's correspondence).

#include "cellweb/laurent.hpp" // for Int (hook length counts)

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cellweb {

struct StandardTableau {
    std::vector<std::vector<int>> rows; // strictly increasing rows and columns; entries 1..n

    StandardTableau() = default;
    explicit StandardTableau(std::vector<std::vector<int>> r);

    int size() const; // number of boxes n
    std::vector<int> shape() const;
    int row_of(int entry) const;                 // 1-based row index
    std::pair<int, int> cell_of(int entry) const; // 1-based (row, col)

    bool operator==(const StandardTableau& o) const = default;
    auto operator<=>(const StandardTableau& o) const = default;
};

// A Yamanouchi word is a string over "+0-" whose every prefix has
// #(+) >= #(0) >= #(-); the balanced variant has n of each symbol.
using YamanouchiWord = std::string;

bool is_yamanouchi(const YamanouchiWord& w);
bool is_balanced_yamanouchi(const YamanouchiWord& w);

// {i : row(i+1) > row(i)}
std::set<int> tau(const StandardTableau& Y);
std::uint64_t tau_mask(const StandardTableau& Y);

bool in_descent_set(int i, int j, const StandardTableau& Y);
// the unique standard tableau in D^YT_{j,i} among {swap(i,i+1), swap(j,j+1)}
StandardTableau f_yt(int i, int j, const StandardTableau& Y);

bool is_column_superstandard(const StandardTableau& Y);
StandardTableau column_superstandard(const std::vector<int>& shape);
// list of (i,j) pairs; applying f_yt along them carries Y to a column
// superstandard tableau (construction follows the reduction lemma's proof)
std::vector<std::pair<int, int>> to_superstandard_path(const StandardTableau& Y);

// Fulton's correspondence for shape [n,n,n]: '+' if i is in the top row,
// '0' middle, '-' bottom; mutually inverse with yamanouchi_to_tableau.
YamanouchiWord tableau_to_yamanouchi(const StandardTableau& T);
StandardTableau yamanouchi_to_tableau(const YamanouchiWord& w);

// Text form: rows joined by "/", comma-separated entries: "1,3,5/2,4,7/6,8,9".
std::string yt_str(const StandardTableau& Y);
StandardTableau yt_parse(std::string_view s);

// enumeration helpers
std::vector<std::vector<int>> all_partitions(int n);
std::vector<StandardTableau> all_standard_tableaux(const std::vector<int>& shape);
std::vector<StandardTableau> all_standard_tableaux_n(int n); // all shapes of n boxes
Int hook_length_count(const std::vector<int>& shape);

} // namespace cellweb
