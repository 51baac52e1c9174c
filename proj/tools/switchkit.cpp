#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "switchkit/switchkit.hpp"

using namespace switchkit;
using nlohmann::json;

namespace {

enum Exit { kYes = 0, kNo = 1, kError = 2, kTooLarge = 3 };

struct Options {
  bool json = false;
  std::string file;
  int parallel = 1;
};

// Worst outcome over a batch: error, then too-large, then no.
struct Tally {
  bool no = false;
  bool error = false;
  bool large = false;

  int code() const { return error ? kError : large ? kTooLarge : no ? kNo : kYes; }
};

std::string read_input(const Options& opt) {
  if (opt.file.empty()) {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(opt.file);
  if (!in) throw MalformedInput("cannot open " + opt.file);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> input_lines(const Options& opt) {
  std::vector<std::string> out;
  std::istringstream in(read_input(opt));
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(first, last - first + 1));
  }
  if (out.empty()) throw MalformedInput("no input graphs");
  return out;
}

std::string witness_text(const VertexSet& a) { return a.empty() ? "{}" : a.to_string(); }

json witness_json(const VertexSet& a) { return a.to_vector(); }

// Runs body on every input graph. body prints its own result line and
// returns true for a yes-decision.
int for_each_graph(const Options& opt, const std::function<bool(const std::string&, const Graph&)>& body) {
  Tally tally;
  for (const auto& line : input_lines(opt)) {
    try {
      if (!body(line, parse_graph6(line))) tally.no = true;
    } catch (const TooLarge& e) {
      tally.large = true;
      std::cerr << "switchkit: " << line << ": " << e.what() << "\n";
      if (opt.json) {
        std::cout << json{{"graph6", line}, {"error", "too-large"}, {"message", e.what()}}.dump() << "\n";
      } else {
        std::cout << "too-large\n";
      }
    } catch (const BudgetExceeded& e) {
      tally.large = true;
      std::cerr << "switchkit: " << line << ": " << e.what() << "\n";
      std::cout << (opt.json ? json{{"graph6", line}, {"error", "budget-exceeded"}}.dump() : "budget-exceeded") << "\n";
    } catch (const std::exception& e) {
      tally.error = true;
      std::cerr << "switchkit: " << line << ": " << e.what() << "\n";
      std::cout << (opt.json ? json{{"graph6", line}, {"error", "malformed"}, {"message", e.what()}}.dump() : "error")
                << "\n";
    }
  }
  return tally.code();
}

VertexSet parse_vertex_list(const std::string& text, int n) {
  VertexSet a(n);
  if (text.empty() || text == "{}") return a;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw MalformedInput("bad vertex '" + tok + "'");
    }
    if (used != tok.size()) throw MalformedInput("bad vertex '" + tok + "'");
    if (v < 0 || v >= n) throw VertexOutOfRange("vertex " + tok + " out of range for order " + std::to_string(n));
    a.insert(v);
  }
  return a;
}

int cmd_switch(const Options& opt, const std::string& set) {
  return for_each_graph(opt, [&](const std::string& line, const Graph& g) {
    const VertexSet a = parse_vertex_list(set, g.order());
    const std::string out = to_graph6(seidel_switch(g, a));
    if (opt.json) {
      std::cout << json{{"graph6", line}, {"set", witness_json(a)}, {"switched", out}}.dump() << "\n";
    } else {
      std::cout << out << "\n";
    }
    return true;
  });
}

int cmd_class(const Options& opt) {
  return for_each_graph(opt, [&](const std::string& line, const Graph& g) {
    std::vector<std::string> members;
    for (const auto& h : switching_class(g)) members.push_back(to_graph6(h));
    if (opt.json) {
      std::cout << json{{"graph6", line}, {"size", members.size()}, {"members", members}}.dump() << "\n";
    } else {
      for (std::size_t i = 0; i < members.size(); ++i) std::cout << (i ? " " : "") << members[i];
      std::cout << "\n";
    }
    return true;
  });
}

int cmd_lower(const Options& opt, const std::string& name, bool use_oracle) {
  const auto id = parse_lower_class(name);
  if (!id) throw CLI::ValidationError("class-id", "unknown lower class '" + name + "'");
  return for_each_graph(opt, [&](const std::string& line, const Graph& g) {
    const bool member = use_oracle ? oracle_lower(g, lower_oracle_predicate(*id), OracleOptions{opt.parallel})
                                   : recognize_lower(g, *id);
    const auto prof = member && !use_oracle ? lower_profile(g, *id) : std::nullopt;
    if (opt.json) {
      json j{{"graph6", line}, {"class", name}, {"member", member}, {"mode", use_oracle ? "oracle" : "recognizer"}};
      j["profile"] = prof ? json(prof->to_string()) : json(nullptr);
      std::cout << j.dump() << "\n";
    } else {
      std::cout << (member ? "yes" : "no");
      if (prof) std::cout << " " << prof->to_string();
      std::cout << "\n";
    }
    return member;
  });
}

struct UpperRequest {
  std::string name;
  int p = 2;
  int q = 2;
  bool enumerate = false;
  bool oracle = false;
};

int print_upper(const Options& opt, const std::string& line, const std::string& name, const std::string& mode,
                const std::vector<VertexSet>& found, bool many) {
  if (opt.json) {
    json j{{"graph6", line}, {"class", name}, {"mode", mode}, {"member", !found.empty()}};
    if (many) {
      json all = json::array();
      for (const auto& a : found) all.push_back(witness_json(a));
      j["witnesses"] = all;
    } else {
      j["witness"] = found.empty() ? json(nullptr) : witness_json(found.front());
    }
    std::cout << j.dump() << "\n";
  } else if (found.empty()) {
    std::cout << "none\n";
  } else {
    for (std::size_t i = 0; i < found.size(); ++i) std::cout << (i ? " " : "") << witness_text(found[i]);
    std::cout << "\n";
  }
  return !found.empty();
}

int cmd_upper(const Options& opt, const UpperRequest& req) {
  const auto id = parse_upper_class(req.name);
  if (!id) throw CLI::ValidationError("class", "unknown upper class '" + req.name + "'");
  if (req.enumerate && !has_enumeration(*id) && !req.oracle) {
    throw CLI::ValidationError("--enumerate", "available for split and pseudo-split only");
  }
  if (*id == UpperClassId::StarCostar && (req.p < 2 || req.q < 2)) {
    throw CLI::ValidationError("--p/--q", "star-costar needs p, q >= 2");
  }
  const auto pred = upper_class_predicate(*id, req.p, req.q);
  return for_each_graph(opt, [&](const std::string& line, const Graph& g) {
    std::vector<VertexSet> found;
    if (req.enumerate) {
      found = req.oracle ? oracle_upper_all(g, pred) : enumerate_upper(g, *id);
    } else if (auto a = req.oracle ? oracle_upper(g, pred, OracleOptions{opt.parallel}) : solve_upper(g, *id, req.p, req.q)) {
      found.push_back(*a);
    }
    return print_upper(opt, line, req.name, req.oracle ? "oracle" : "algorithm", found, req.enumerate) != 0;
  });
}

int cmd_oracle(const Options& opt, const std::string& mode, const UpperRequest& req) {
  if (mode == "lower") {
    const auto id = parse_lower_class(req.name);
    if (!id) throw CLI::ValidationError("class", "unknown lower class '" + req.name + "'");
    return for_each_graph(opt, [&](const std::string& line, const Graph& g) {
      const bool member = oracle_lower(g, lower_oracle_predicate(*id), OracleOptions{opt.parallel});
      if (opt.json) {
        std::cout << json{{"graph6", line}, {"class", req.name}, {"mode", "oracle"}, {"member", member}}.dump() << "\n";
      } else {
        std::cout << (member ? "yes" : "no") << "\n";
      }
      return member;
    });
  }
  UpperRequest forced = req;
  forced.oracle = true;
  return cmd_upper(opt, forced);
}

NaeFormula fit_arity(NaeFormula f, int k, bool pad) {
  while (pad && f.k < k && f.k >= 3) f = pad_nae(f);
  return f;
}

ReductionTarget parse_target(const std::string& name) {
  if (name == "p10") return ReductionTarget::P10;
  if (name == "c7") return ReductionTarget::C7;
  throw CLI::ValidationError("target", "unknown target '" + name + "' (p10 or c7)");
}

ReductionInstance build(ReductionTarget t, const NaeFormula& f, bool pad) {
  return t == ReductionTarget::P10 ? build_p10_instance(fit_arity(f, 5, pad)) : build_c7_instance(f);
}

int cmd_reduce(const Options& opt, const std::string& target, bool pad, const std::string& roles_path) {
  const auto inst = build(parse_target(target), parse_nae(read_input(opt)), pad);
  const std::string g6 = to_graph6(inst.graph);
  const std::string roles = roles_json(inst);
  if (opt.json) {
    std::cout << json{{"graph6", g6}, {"roles", json::parse(roles)}}.dump() << "\n";
    return kYes;
  }
  std::cout << g6 << "\n";
  if (roles_path.empty()) {
    std::cout << json::parse(roles).dump() << "\n";
  } else {
    std::ofstream out(roles_path);
    if (!out) throw MalformedInput("cannot write " + roles_path);
    out << roles << "\n";
  }
  return kYes;
}

int cmd_verify(const Options& opt, const std::string& target, bool pad, const std::string& assignment,
               std::uint64_t budget) {
  const auto inst = build(parse_target(target), parse_nae(read_input(opt)), pad);
  Assignment a = parse_assignment(assignment);
  if (pad && a.size() < static_cast<std::size_t>(inst.formula.num_vars)) {
    throw SizeMismatch("assignment covers the original variables only; give values for the padded formula");
  }
  const bool free = verify_instance(inst, a, SearchBudget{budget});
  const bool nae = nae_eval(inst.formula, a);
  if (opt.json) {
    std::cout << json{{"target", target},
                      {"assignment", to_text(a)},
                      {"switching_set", witness_json(assignment_to_switching_set(inst, a))},
                      {"pattern_free", free},
                      {"nae", nae},
                      {"consistent", free == nae}}
                     .dump()
              << "\n";
  } else {
    std::cout << (free ? "pattern-free" : "pattern-found") << " nae=" << (nae ? "true" : "false") << "\n";
  }
  return free ? kYes : kNo;
}

int cmd_patterns(const Options& opt, const std::vector<std::string>& names) {
  const auto list = names.empty() ? pattern_names() : names;
  json all = json::array();
  for (const auto& name : list) {
    const std::string g6 = to_graph6(pattern(name));
    if (opt.json) {
      all.push_back(json{{"name", name}, {"graph6", g6}});
    } else {
      std::cout << name << " " << g6 << "\n";
    }
  }
  if (opt.json) std::cout << all.dump() << "\n";
  return kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seidel switching toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "Machine-readable output, one JSON object per line");
  app.add_option("--file", opt.file, "Read input from a file instead of stdin");
  app.add_option("--parallel", opt.parallel, "Worker threads for exhaustive searches")->check(CLI::Range(1, 256));

  std::string set;
  auto* sw = app.add_subcommand("switch", "Switch each input graph on a vertex set");
  sw->add_option("--set", set, "Comma-separated vertices, e.g. 0,2")->required();

  auto* cls = app.add_subcommand("class", "List the switching class of each input graph");

  std::string lower_name;
  bool lower_oracle = false;
  auto* low = app.add_subcommand("lower", "Decide membership in a lower switching class");
  low->add_option("class-id", lower_name, "Lower class id")->required();
  low->add_flag("--oracle", lower_oracle, "Brute force over all switches");

  UpperRequest up;
  auto* upc = app.add_subcommand("upper", "Find a switch into the class");
  upc->add_option("class", up.name, "Target class")->required();
  upc->add_option("--p", up.p, "Star size for star-costar");
  upc->add_option("--q", up.q, "Co-star size for star-costar");
  upc->add_flag("--enumerate", up.enumerate, "Every solution with vertex 0 fixed outside A");
  upc->add_flag("--oracle", up.oracle, "Brute force over all switches");

  std::string oracle_mode;
  UpperRequest orq;
  auto* orc = app.add_subcommand("oracle", "Exhaustive search over all switches");
  orc->add_option("mode", oracle_mode, "upper or lower")->required()->check(CLI::IsMember({"upper", "lower"}));
  orc->add_option("class", orq.name, "Class id")->required();
  orc->add_option("--p", orq.p, "Star size for star-costar");
  orc->add_option("--q", orq.q, "Co-star size for star-costar");
  orc->add_flag("--all", orq.enumerate, "Every solution (upper mode)");

  std::string target;
  bool pad = false;
  std::string roles_path;
  auto* red = app.add_subcommand("reduce", "Build the reduction graph of a NAE formula");
  red->add_option("target", target, "p10 or c7")->required();
  red->add_flag("--pad", pad, "Pad lower-arity formulas up to arity 5 (p10)");
  red->add_option("--roles", roles_path, "Write the role JSON to this path");

  std::string assignment;
  std::uint64_t budget = SearchBudget{}.max_nodes;
  auto* ver = app.add_subcommand("verify", "Check a switched reduction graph for the target pattern");
  ver->add_option("target", target, "p10 or c7")->required();
  ver->add_option("--assignment", assignment, "T/F string, one character per variable")->required();
  ver->add_option("--budget", budget, "Search node cap");
  ver->add_flag("--pad", pad, "Pad lower-arity formulas up to arity 5 (p10)");

  std::vector<std::string> pattern_list;
  auto* pat = app.add_subcommand("patterns", "List named patterns with their graph6");
  pat->add_option("names", pattern_list, "Names to print (default: all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kYes : kError;
  }

  try {
    if (*sw) return cmd_switch(opt, set);
    if (*cls) return cmd_class(opt);
    if (*low) return cmd_lower(opt, lower_name, lower_oracle);
    if (*upc) return cmd_upper(opt, up);
    if (*orc) return cmd_oracle(opt, oracle_mode, orq);
    if (*red) return cmd_reduce(opt, target, pad, roles_path);
    if (*ver) return cmd_verify(opt, target, pad, assignment, budget);
    if (*pat) return cmd_patterns(opt, pattern_list);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "switchkit: " << e.what() << "\n";
    return kError;
  } catch (const TooLarge& e) {
    std::cerr << "switchkit: " << e.what() << "\n";
    return kTooLarge;
  } catch (const BudgetExceeded& e) {
    std::cerr << "switchkit: " << e.what() << "\n";
    return kTooLarge;
  } catch (const std::exception& e) {
    std::cerr << "switchkit: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
