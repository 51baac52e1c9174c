#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace switchkit {

/// Monotone not-all-equal k-SAT formula. Variables are 0-based internally;
/// the text format is 1-based.
struct NaeFormula {
  int k = 0;
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;

  /// Throws MalformedInput unless every clause has k distinct in-range vars.
  void validate() const;

  friend bool operator==(const NaeFormula&, const NaeFormula&) = default;
};

using Assignment = std::vector<bool>;

/// Every clause has a TRUE and a FALSE literal.
bool nae_eval(const NaeFormula& f, const Assignment& a);

/// Arity k formula from arity k-1 (k >= 4): k fresh variables are appended
/// to each clause in turn, plus one clause of all fresh variables.
NaeFormula pad_nae(const NaeFormula& f);

/// Header "nae k n m" then m lines of k 1-based variable indices.
NaeFormula parse_nae(std::string_view text);
std::string to_text(const NaeFormula& f);

/// Assignment from a string of T/F (or 1/0) characters.
Assignment parse_assignment(std::string_view text);
std::string to_text(const Assignment& a);

}  // namespace switchkit
