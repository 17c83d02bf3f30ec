#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pgq/permutation.hpp"

namespace pgq {

// An n-by-n operation table over {0..n-1}: cells[x][y] = x*y.
class CayleyTable {
public:
  // Row-major cells; validates n >= 1 and every entry in {0..n-1}.
  CayleyTable(int n, std::vector<int> cells);
  static CayleyTable from_rows(const std::vector<std::vector<int>>& rows);

  int order() const { return n_; }
  int at(int x, int y) const { return cells_[static_cast<std::size_t>(x) * n_ + y]; }

  std::vector<int> row(int x) const;
  std::vector<int> column(int y) const;

  // Unique x with a*x == b; throws no_unique_solution when the row has
  // zero or several matches.
  int left_divide(int a, int b) const;
  // Unique y with y*a == b, scanning column a.
  int right_divide(int b, int a) const;

  // Table with every label pushed through sigma: T'[s(x)][s(y)] = s(T[x][y]).
  CayleyTable relabeled(const Permutation& sigma) const;

  const std::vector<std::uint8_t>& cells() const { return cells_; }

  bool operator==(const CayleyTable&) const = default;
  auto operator<=>(const CayleyTable&) const = default;

private:
  int n_;
  std::vector<std::uint8_t> cells_;
};

// Accepts either the text form (optional "# order n" header, then n lines of
// n whitespace-separated integers) or the JSON form {"n": int, "cells": [[int]]}.
// Throws malformed_table / out_of_range.
CayleyTable parse_table(const std::string& source);

// Text form, one row per line, no header.
std::string format_table(const CayleyTable& table);

// {"n": int, "cells": [[int]]} with stable key order.
std::string table_to_json(const CayleyTable& table, int indent = 2);

}  // namespace pgq
