#pragma once

#include <string>
#include <vector>

#include "switchkit/graph.hpp"
#include "switchkit/induced.hpp"
#include "switchkit/nae.hpp"

namespace switchkit {

enum class ReductionTarget { P10, C7 };

std::string to_string(ReductionTarget t);

/// Path-target clause gadget (arity 5).
struct PathClause {
  /// Variable vertices x_i1..x_i5 in literal order.
  std::vector<int> literals;
  /// Independent set I_i, five vertices.
  std::vector<int> independent;
  /// paths[j] lists the nine vertices of B_i(j+1) in path order.
  std::vector<std::vector<int>> paths;
  /// Path end not joined to I_i, one per path.
  std::vector<int> free_ends;
};

/// P6 cell B_ijl with its ends.
struct Cell {
  std::vector<int> vertices;
  int p = -1;
  int q = -1;
};

/// Cycle-target clause gadget (arity 3).
struct CycleClause {
  std::vector<int> literals;
  /// I_i1..I_i4; the first and last are adjacent.
  std::vector<int> independent;
  /// levels[j][l] is cell B_i(j+1)(l+1), eight levels of four cells.
  std::vector<std::vector<Cell>> levels;
};

/// Graph of a reduction plus the role of every vertex.
///
/// Numbering: variable vertices first in variable order, then one block per
/// clause. A path block is I_i then B_i1..B_i5; a cycle block is I_i then
/// the cells level by level.
struct ReductionInstance {
  ReductionTarget target = ReductionTarget::P10;
  NaeFormula formula;
  Graph graph;
  std::vector<int> variable_vertices;
  std::vector<PathClause> path_clauses;
  std::vector<CycleClause> cycle_clauses;
};

/// Arity-5 formula to the P10 instance. Throws ArityMismatch otherwise.
ReductionInstance build_p10_instance(const NaeFormula& f);
/// Arity-3 formula to the C7 instance. Throws ArityMismatch otherwise.
ReductionInstance build_c7_instance(const NaeFormula& f);

VertexSet assignment_to_switching_set(const ReductionInstance& inst, const Assignment& a);
/// Throws NotVariableOnly when a leaves the variable vertices.
Assignment switching_set_to_assignment(const ReductionInstance& inst, const VertexSet& a);

/// The switched instance contains no induced target.
bool verify_instance(const ReductionInstance& inst, const Assignment& a, SearchBudget budget = {});

/// Vertex roles as JSON text.
std::string roles_json(const ReductionInstance& inst);

}  // namespace switchkit
