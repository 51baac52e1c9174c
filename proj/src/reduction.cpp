#include "switchkit/reduction.hpp"

#include <array>
#include <stdexcept>

#include <json.hpp>

#include "switchkit/errors.hpp"

namespace switchkit {

namespace {

constexpr int kPathLen = 9;
constexpr int kPathBlock = 5 + 5 * kPathLen;
constexpr int kLevels = 8;
constexpr int kCells = 4;
constexpr int kCellLen = 6;
constexpr int kCycleBlock = 4 + kLevels * kCells * kCellLen;

/// Variable positions (0-based within the clause) joined to each I_i vertex.
constexpr std::array<std::array<int, 4>, 5> kPathLinks{{
    {2, 3, 4, -1},
    {0, 3, 4, -1},
    {0, 1, 4, -1},
    {0, 1, 2, -1},
    {0, 1, 2, 3},
}};

constexpr std::array<std::array<int, 2>, 4> kCycleLinks{{
    {1, 2},
    {2, -1},
    {0, -1},
    {0, 1},
}};

void require_arity(const NaeFormula& f, int k) {
  if (f.k != k) {
    throw ArityMismatch("construction needs arity " + std::to_string(k) + ", got " + std::to_string(f.k));
  }
  f.validate();
}

bool induces_path(const Graph& h) {
  if (h.order() == 0 || h.edge_count() != static_cast<std::size_t>(h.order() - 1)) return false;
  for (int v = 0; v < h.order(); ++v) {
    if (h.degree(v) > 2) return false;
  }
  return components(h).size() == 1;
}

bool induces_cycle(const Graph& h) {
  for (int v = 0; v < h.order(); ++v) {
    if (h.degree(v) != 2) return false;
  }
  return h.order() >= 3 && components(h).size() == 1;
}

void join(Graph::Builder& b, const std::vector<int>& xs, const std::vector<int>& ys) {
  for (int x : xs) {
    for (int y : ys) {
      if (x != y) b.add_edge(x, y);
    }
  }
}

std::vector<int> interior(const Cell& c) { return {c.vertices.begin() + 1, c.vertices.end() - 1}; }

/// Both one-sided switches of L_i and I_i must induce the target on L_i + I_i.
void check_literal_gadget(const Graph& g, const std::vector<int>& lits, const std::vector<int>& ind, bool cycle) {
  const int n = g.order();
  VertexSet l = VertexSet::of(n, lits);
  VertexSet i = VertexSet::of(n, ind);
  for (const VertexSet& a : {l, i}) {
    const Graph h = induced(seidel_switch(g, a), l | i);
    if (!(cycle ? induces_cycle(h) : induces_path(h))) {
      throw std::logic_error("literal/independent-set adjacency does not realise the target");
    }
  }
}

}  // namespace

std::string to_string(ReductionTarget t) { return t == ReductionTarget::P10 ? "p10" : "c7"; }

ReductionInstance build_p10_instance(const NaeFormula& f) {
  require_arity(f, 5);
  const int n = f.num_vars;
  const int m = static_cast<int>(f.clauses.size());
  ReductionInstance inst;
  inst.target = ReductionTarget::P10;
  inst.formula = f;
  for (int v = 0; v < n; ++v) inst.variable_vertices.push_back(v);

  Graph::Builder b(n + kPathBlock * m);
  std::vector<std::vector<int>> blocks;
  for (int c = 0; c < m; ++c) {
    const int base = n + kPathBlock * c;
    PathClause pc;
    pc.literals = f.clauses[static_cast<std::size_t>(c)];
    for (int k = 0; k < 5; ++k) pc.independent.push_back(base + k);
    for (int j = 0; j < 5; ++j) {
      std::vector<int> path;
      for (int t = 0; t < kPathLen; ++t) path.push_back(base + 5 + kPathLen * j + t);
      for (int t = 0; t + 1 < kPathLen; ++t) b.add_edge(path[static_cast<std::size_t>(t)], path[static_cast<std::size_t>(t + 1)]);
      pc.free_ends.push_back(path.back());
      join(b, {path.begin(), path.end() - 1}, pc.independent);
      pc.paths.push_back(std::move(path));
    }
    for (int j = 0; j < 5; ++j) {
      const int x = pc.literals[static_cast<std::size_t>(j)];
      join(b, {x}, pc.paths[static_cast<std::size_t>(j)]);
      if (j > 0) join(b, {x}, pc.paths[static_cast<std::size_t>(j - 1)]);
    }
    for (int k = 0; k < 5; ++k) {
      for (int pos : kPathLinks[static_cast<std::size_t>(k)]) {
        if (pos >= 0) b.add_edge(pc.independent[static_cast<std::size_t>(k)], pc.literals[static_cast<std::size_t>(pos)]);
      }
    }
    std::vector<int> block;
    for (int v = base; v < base + kPathBlock; ++v) block.push_back(v);
    for (const auto& other : blocks) join(b, block, other);
    blocks.push_back(std::move(block));
    inst.path_clauses.push_back(std::move(pc));
  }
  inst.graph = b.build();

  for (const auto& pc : inst.path_clauses) {
    check_literal_gadget(inst.graph, pc.literals, pc.independent, false);
    std::vector<int> pick = pc.literals;
    for (const auto& path : pc.paths) pick.push_back(path.front());
    if (!induces_path(induced(inst.graph, VertexSet::of(inst.graph.order(), pick)))) {
      throw std::logic_error("literal/path adjacency does not realise the target");
    }
  }
  return inst;
}

ReductionInstance build_c7_instance(const NaeFormula& f) {
  require_arity(f, 3);
  const int n = f.num_vars;
  const int m = static_cast<int>(f.clauses.size());
  ReductionInstance inst;
  inst.target = ReductionTarget::C7;
  inst.formula = f;
  for (int v = 0; v < n; ++v) inst.variable_vertices.push_back(v);

  Graph::Builder b(n + kCycleBlock * m);
  for (int c = 0; c < m; ++c) {
    const int base = n + kCycleBlock * c;
    CycleClause cc;
    cc.literals = f.clauses[static_cast<std::size_t>(c)];
    for (int k = 0; k < 4; ++k) cc.independent.push_back(base + k);
    b.add_edge(cc.independent[0], cc.independent[3]);
    for (int j = 0; j < kLevels; ++j) {
      std::vector<Cell> level;
      for (int l = 0; l < kCells; ++l) {
        Cell cell;
        const int start = base + 4 + (j * kCells + l) * kCellLen;
        for (int t = 0; t < kCellLen; ++t) cell.vertices.push_back(start + t);
        for (int t = 0; t + 1 < kCellLen; ++t) b.add_edge(start + t, start + t + 1);
        cell.p = cell.vertices.front();
        cell.q = cell.vertices.back();
        level.push_back(std::move(cell));
      }
      cc.levels.push_back(std::move(level));
    }
    join(b, cc.levels[0][0].vertices, cc.levels[0][3].vertices);
    for (int j = 0; j + 1 < kLevels; ++j) {
      for (int l = 0; l < kCells; ++l) {
        join(b, interior(cc.levels[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)]),
             cc.levels[static_cast<std::size_t>(j + 1)][static_cast<std::size_t>(l)].vertices);
      }
    }
    for (int l = 0; l < kCells; ++l) {
      join(b, interior(cc.levels[kLevels - 1][static_cast<std::size_t>(l)]), cc.independent);
    }
    for (int l = 0; l < 3; ++l) {
      const int x = cc.literals[static_cast<std::size_t>(l)];
      join(b, {x}, cc.levels[0][static_cast<std::size_t>(l)].vertices);
      join(b, {x}, cc.levels[0][static_cast<std::size_t>(l + 1)].vertices);
    }
    for (int k = 0; k < 4; ++k) {
      for (int pos : kCycleLinks[static_cast<std::size_t>(k)]) {
        if (pos >= 0) b.add_edge(cc.independent[static_cast<std::size_t>(k)], cc.literals[static_cast<std::size_t>(pos)]);
      }
    }
    inst.cycle_clauses.push_back(std::move(cc));
  }

  auto first_level = [](const CycleClause& cc) {
    std::vector<int> out;
    for (const auto& cell : cc.levels[0]) out.insert(out.end(), cell.vertices.begin(), cell.vertices.end());
    return out;
  };
  std::vector<int> all_independent;
  for (const auto& cc : inst.cycle_clauses) {
    all_independent.insert(all_independent.end(), cc.independent.begin(), cc.independent.end());
  }
  for (std::size_t i = 0; i < inst.cycle_clauses.size(); ++i) {
    const auto& ci = inst.cycle_clauses[i];
    join(b, first_level(ci), all_independent);
    for (std::size_t j = 0; j < i; ++j) {
      const auto& cj = inst.cycle_clauses[j];
      join(b, first_level(ci), first_level(cj));
      join(b, ci.independent, cj.independent);
    }
  }
  inst.graph = b.build();

  for (const auto& cc : inst.cycle_clauses) {
    check_literal_gadget(inst.graph, cc.literals, cc.independent, true);
    std::vector<int> pick = cc.literals;
    for (const auto& cell : cc.levels[0]) pick.push_back(cell.p);
    if (!induces_cycle(induced(inst.graph, VertexSet::of(inst.graph.order(), pick)))) {
      throw std::logic_error("literal/cell adjacency does not realise the target");
    }
  }
  return inst;
}

VertexSet assignment_to_switching_set(const ReductionInstance& inst, const Assignment& a) {
  if (a.size() != inst.variable_vertices.size()) {
    throw SizeMismatch("assignment has " + std::to_string(a.size()) + " values for " +
                       std::to_string(inst.variable_vertices.size()) + " variables");
  }
  VertexSet s(inst.graph.order());
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (a[v]) s.insert(inst.variable_vertices[v]);
  }
  return s;
}

Assignment switching_set_to_assignment(const ReductionInstance& inst, const VertexSet& a) {
  if (a.universe() != inst.graph.order()) throw SizeMismatch("switching set does not match the instance");
  const VertexSet vars = VertexSet::of(inst.graph.order(), inst.variable_vertices);
  if (!a.is_subset_of(vars)) throw NotVariableOnly("switching set contains non-variable vertices");
  Assignment out(inst.variable_vertices.size(), false);
  for (std::size_t v = 0; v < out.size(); ++v) out[v] = a.contains(inst.variable_vertices[v]);
  return out;
}

bool verify_instance(const ReductionInstance& inst, const Assignment& a, SearchBudget budget) {
  const Graph s = seidel_switch(inst.graph, assignment_to_switching_set(inst, a));
  if (inst.target == ReductionTarget::P10) return !find_induced_path(s, 10, budget).has_value();
  return !find_induced_cycle(s, 7, budget).has_value();
}

std::string roles_json(const ReductionInstance& inst) {
  using nlohmann::json;
  json j;
  j["target"] = to_string(inst.target);
  j["num_vertices"] = inst.graph.order();
  j["num_vars"] = inst.formula.num_vars;
  j["L"] = inst.variable_vertices;
  json clauses = json::array();
  for (const auto& pc : inst.path_clauses) {
    clauses.push_back({{"literals", pc.literals}, {"I", pc.independent}, {"B", pc.paths}, {"v", pc.free_ends}});
  }
  for (const auto& cc : inst.cycle_clauses) {
    json levels = json::array();
    json ps = json::array();
    json qs = json::array();
    for (const auto& level : cc.levels) {
      json cells = json::array();
      json lp = json::array();
      json lq = json::array();
      for (const auto& cell : level) {
        cells.push_back(cell.vertices);
        lp.push_back(cell.p);
        lq.push_back(cell.q);
      }
      levels.push_back(cells);
      ps.push_back(lp);
      qs.push_back(lq);
    }
    clauses.push_back({{"literals", cc.literals}, {"I", cc.independent}, {"B", levels}, {"p", ps}, {"q", qs}});
  }
  j["clauses"] = clauses;
  return j.dump();
}

}  // namespace switchkit
