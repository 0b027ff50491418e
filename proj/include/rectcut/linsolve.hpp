#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "rectcut/errors.hpp"
#include "rectcut/field.hpp"

namespace rectcut {

template <FieldElement K>
struct Row {
  std::vector<K> coeffs;
  K rhs;
};

/// Linear equations sum_j coeffs[j] * variables[j] = rhs over K.
template <FieldElement K>
struct LinearSystem {
  std::vector<std::string> variables;
  std::vector<Row<K>> rows;

  std::size_t size() const { return variables.size(); }

  std::optional<std::size_t> find(std::string_view name) const {
    const auto it = std::find(variables.begin(), variables.end(), name);
    if (it == variables.end()) return std::nullopt;
    return static_cast<std::size_t>(it - variables.begin());
  }

  std::size_t index_of(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw DimensionError("unknown variable " + std::string(name));
  }

  /// Appends sum(coeff * var) = rhs; repeated variables accumulate.
  void add_equation(const std::vector<std::pair<std::size_t, K>>& terms, K rhs) {
    Row<K> row{std::vector<K>(variables.size(), K(0)), std::move(rhs)};
    for (const auto& [var, coeff] : terms) {
      if (var >= variables.size()) throw DimensionError("variable index out of range");
      row.coeffs[var] += coeff;
    }
    rows.push_back(std::move(row));
  }

  void check_dimensions() const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].coeffs.size() != variables.size()) {
        throw DimensionError("row " + std::to_string(i) + " has " + std::to_string(rows[i].coeffs.size()) +
                             " coefficients for " + std::to_string(variables.size()) + " variables");
      }
    }
  }

  /// Debug dump, one equation per line.
  std::string dump() const {
    std::ostringstream os;
    for (const Row<K>& row : rows) {
      bool first = true;
      for (std::size_t j = 0; j < row.coeffs.size(); ++j) {
        if (row.coeffs[j].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << row.coeffs[j].to_string() << ")*" << variables[j];
        first = false;
      }
      if (first) os << "0";
      os << " = " << row.rhs.to_string() << "\n";
    }
    return os.str();
  }
};

/// constant + sum coeff * free_variable
template <FieldElement K>
struct AffineExpr {
  K constant{0};
  std::vector<std::pair<std::size_t, K>> terms;
};

template <FieldElement K>
struct UniqueSolution {
  std::vector<K> values;  // indexed like LinearSystem::variables
};

template <FieldElement K>
struct ParametricSolution {
  std::vector<std::size_t> free;
  std::vector<std::pair<std::size_t, AffineExpr<K>>> bound;

  /// Full assignment for the given values of the free variables (same order as `free`).
  std::vector<K> instantiate(std::span<const K> free_values, std::size_t variable_count) const {
    if (free_values.size() != free.size()) throw DimensionError("wrong number of free values");
    std::vector<K> out(variable_count, K(0));
    for (std::size_t i = 0; i < free.size(); ++i) out[free[i]] = free_values[i];
    for (const auto& [var, expr] : bound) {
      K v = expr.constant;
      for (const auto& [f, c] : expr.terms) v += c * out[f];
      out[var] = v;
    }
    return out;
  }
};

template <FieldElement K>
struct InconsistentSystem {
  std::size_t row;  // index of the offending input row
  Row<K> reduced;   // its reduced form: all coefficients zero, rhs nonzero
};

template <FieldElement K>
using SolveOutcome = std::variant<UniqueSolution<K>, ParametricSolution<K>, InconsistentSystem<K>>;

/// Exact Gauss-Jordan elimination, one equation at a time.
///
/// Rows are visited in input order. A row's pivot is the first variable (in
/// variable order) that the row mentioned originally and that still has a
/// nonzero coefficient; if substitution removed all of those, the first
/// remaining nonzero variable is used. The pivot is then eliminated from every
/// other row. Rows reducing to 0 = 0 are dropped; the first row reducing to
/// 0 = c with c != 0 makes the system inconsistent.
template <FieldElement K>
SolveOutcome<K> gauss_jordan(const LinearSystem<K>& system) {
  system.check_dimensions();
  const std::size_t n = system.size();
  const std::size_t m = system.rows.size();
  std::vector<Row<K>> rows = system.rows;
  std::vector<bool> used(m, false);
  std::vector<std::optional<std::size_t>> pivot_row(n);

  for (std::size_t r = 0; r < m; ++r) {
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < n && !col; ++j) {
      if (!system.rows[r].coeffs[j].is_zero() && !rows[r].coeffs[j].is_zero()) col = j;
    }
    for (std::size_t j = 0; j < n && !col; ++j) {
      if (!rows[r].coeffs[j].is_zero()) col = j;
    }
    if (!col) continue;
    used[r] = true;
    pivot_row[*col] = r;
    Row<K>& p = rows[r];
    const K inv = p.coeffs[*col].inverse();
    for (K& c : p.coeffs) {
      if (!c.is_zero()) c = c * inv;
    }
    p.rhs = p.rhs * inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || rows[i].coeffs[*col].is_zero()) continue;
      const K factor = rows[i].coeffs[*col];
      for (std::size_t j = 0; j < n; ++j) {
        if (!p.coeffs[j].is_zero()) rows[i].coeffs[j] -= factor * p.coeffs[j];
      }
      rows[i].rhs -= factor * p.rhs;
    }
  }

  for (std::size_t r = 0; r < m; ++r) {
    if (!used[r] && !rows[r].rhs.is_zero()) return InconsistentSystem<K>{r, rows[r]};
  }

  std::vector<std::size_t> free;
  for (std::size_t col = 0; col < n; ++col) {
    if (!pivot_row[col]) free.push_back(col);
  }

  if (free.empty()) {
    UniqueSolution<K> out;
    out.values.reserve(n);
    for (std::size_t col = 0; col < n; ++col) out.values.push_back(rows[*pivot_row[col]].rhs);
    return out;
  }

  ParametricSolution<K> out;
  out.free = free;
  for (std::size_t col = 0; col < n; ++col) {
    if (!pivot_row[col]) continue;
    const Row<K>& row = rows[*pivot_row[col]];
    AffineExpr<K> expr;
    expr.constant = row.rhs;
    for (std::size_t f : free) {
      if (!row.coeffs[f].is_zero()) expr.terms.emplace_back(f, -row.coeffs[f]);
    }
    out.bound.emplace_back(col, std::move(expr));
  }
  return out;
}

/// True when every row holds exactly under the assignment.
template <FieldElement K>
bool satisfies(const LinearSystem<K>& system, std::span<const K> values) {
  if (values.size() != system.size()) return false;
  for (const Row<K>& row : system.rows) {
    K lhs(0);
    for (std::size_t j = 0; j < values.size(); ++j) {
      if (!row.coeffs[j].is_zero()) lhs += row.coeffs[j] * values[j];
    }
    if (!(lhs == row.rhs)) return false;
  }
  return true;
}

/// Plugs an outcome back into the original rows. Parametric outcomes are
/// checked as identities in the free variables; Inconsistent yields false.
template <FieldElement K>
bool substitute_and_verify(const LinearSystem<K>& system, const SolveOutcome<K>& outcome) {
  if (const auto* u = std::get_if<UniqueSolution<K>>(&outcome)) {
    return satisfies(system, std::span<const K>(u->values));
  }
  if (const auto* p = std::get_if<ParametricSolution<K>>(&outcome)) {
    const std::size_t n = system.size();
    // Express every variable as an affine form over the free variables.
    std::vector<AffineExpr<K>> forms(n);
    for (std::size_t f : p->free) forms[f].terms.emplace_back(f, K(1));
    for (const auto& [var, expr] : p->bound) forms[var] = expr;
    for (const Row<K>& row : system.rows) {
      if (row.coeffs.size() != n) return false;
      K constant(0);
      std::vector<K> free_coeff(n, K(0));
      for (std::size_t j = 0; j < n; ++j) {
        if (row.coeffs[j].is_zero()) continue;
        constant += row.coeffs[j] * forms[j].constant;
        for (const auto& [f, c] : forms[j].terms) free_coeff[f] += row.coeffs[j] * c;
      }
      if (!(constant == row.rhs)) return false;
      for (const K& c : free_coeff) {
        if (!c.is_zero()) return false;
      }
    }
    return true;
  }
  return false;
}

}  // namespace rectcut
