#pragma once

#include <unordered_map>
#include <vector>

#include "monoendo/blocks.hpp"
#include "monoendo/char_param.hpp"

namespace monoendo {

// Cap on |W°| for cell computations: MONOENDO_CELL_CAP, else 1000.
std::size_t default_cell_cap();

// Two-sided cells of a reflection subgroup, viewed as a Coxeter group.
// x <=_LR y when c_x occurs in some c_a c_y c_b. cells[0] = {e}, which is the
// maximum; the rest are sorted by minimal length, then by first element.
struct CellPartition {
  ReflectionSubgroup group;
  std::vector<std::vector<WeylElt>> cells;  // each sorted by W° length, then W order
  // order[a][b]: cells[a] <=_LR cells[b]
  std::vector<std::vector<char>> order;

  std::size_t size() const { return cells.size(); }
  std::size_t cell_of(const WeylElt& x) const;  // throws InputError
  bool leq(std::size_t a, std::size_t b) const { return order[a][b] != 0; }

  std::unordered_map<std::vector<int>, std::size_t, IntSeqHash> index;
};

CellPartition two_sided_cells(const ReflectionSubgroup& g, std::size_t cap = default_cell_cap());

// The two-sided cell [c] of W x orbit generated by a cell c of W°_L.
struct ExtendedCell {
  CharParam param;
  CellPartition partition;
  std::size_t cell = 0;
  OmegaGroup omega;
  // omega_on_cells[a][k]: image of cell k under conjugation by omega.reps[a]
  std::vector<std::vector<std::size_t>> omega_on_cells;
  std::vector<int> omega_c;                 // indices into omega.reps
  std::vector<std::size_t> neutral_cells;   // Omega_L-orbit of cell, sorted

  std::vector<WeylElt> neutral_slice() const;
  // [c] intersected with beta x {source}; beta may start at any orbit member.
  std::vector<WeylElt> slice(const Block& beta) const;
};

ExtendedCell extend_cell(const CharParam& chi, std::size_t cell, const CellPartition& partition);
ExtendedCell extend_cell(const CharParam& chi, std::size_t cell);

// One extended cell per Omega_L-orbit of cells of W°_L.
std::vector<ExtendedCell> extended_cells(const CharParam& chi);

// Checks both defining conditions of [c] over the whole orbit; throws InternalError.
void verify_extended_cell(const ExtendedCell& e, const OrbitData& orbit);

}  // namespace monoendo
