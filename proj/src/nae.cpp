#include "switchkit/nae.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "switchkit/errors.hpp"

namespace switchkit {

void NaeFormula::validate() const {
  if (k < 1) throw MalformedInput("clause arity must be positive");
  if (num_vars < 0) throw MalformedInput("negative variable count");
  for (std::size_t c = 0; c < clauses.size(); ++c) {
    const auto& cl = clauses[c];
    if (static_cast<int>(cl.size()) != k) {
      throw ArityMismatch("clause " + std::to_string(c + 1) + " has " + std::to_string(cl.size()) +
                          " literals, expected " + std::to_string(k));
    }
    for (int v : cl) {
      if (v < 0 || v >= num_vars) throw MalformedInput("clause " + std::to_string(c + 1) + " uses unknown variable");
    }
    auto sorted = cl;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw MalformedInput("clause " + std::to_string(c + 1) + " repeats a variable");
    }
  }
}

bool nae_eval(const NaeFormula& f, const Assignment& a) {
  if (static_cast<int>(a.size()) != f.num_vars) {
    throw SizeMismatch("assignment has " + std::to_string(a.size()) + " values for " + std::to_string(f.num_vars) +
                       " variables");
  }
  for (const auto& cl : f.clauses) {
    bool any_true = false;
    bool any_false = false;
    for (int v : cl) (a[static_cast<std::size_t>(v)] ? any_true : any_false) = true;
    if (!any_true || !any_false) return false;
  }
  return true;
}

NaeFormula pad_nae(const NaeFormula& f) {
  f.validate();
  const int k = f.k + 1;
  if (k < 4) throw ArityMismatch("padding targets arity >= 4");
  NaeFormula out;
  out.k = k;
  out.num_vars = f.num_vars + k;
  for (const auto& cl : f.clauses) {
    for (int j = 0; j < k; ++j) {
      auto c = cl;
      c.push_back(f.num_vars + j);
      out.clauses.push_back(std::move(c));
    }
  }
  std::vector<int> fresh(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) fresh[static_cast<std::size_t>(j)] = f.num_vars + j;
  out.clauses.push_back(std::move(fresh));
  return out;
}

NaeFormula parse_nae(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tag;
  long long k = 0;
  long long n = 0;
  long long m = 0;
  if (!(in >> tag >> k >> n >> m) || tag != "nae" || k < 1 || n < 0 || m < 0) {
    throw MalformedInput("formula must start with 'nae k n m'");
  }
  NaeFormula f;
  f.k = static_cast<int>(k);
  f.num_vars = static_cast<int>(n);
  std::string line;
  std::getline(in, line);
  while (static_cast<long long>(f.clauses.size()) < m && std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<int> clause;
    long long v = 0;
    while (ls >> v) {
      if (v < 1 || v > n) throw MalformedInput("variable index " + std::to_string(v) + " out of range 1.." + std::to_string(n));
      clause.push_back(static_cast<int>(v - 1));
    }
    if (!ls.eof()) throw MalformedInput("non-numeric token in clause line");
    if (clause.empty()) continue;
    f.clauses.push_back(std::move(clause));
  }
  if (static_cast<long long>(f.clauses.size()) != m) {
    throw MalformedInput("expected " + std::to_string(m) + " clauses, found " + std::to_string(f.clauses.size()));
  }
  std::string rest;
  if (in >> rest) throw MalformedInput("trailing data after clauses");
  f.validate();
  return f;
}

std::string to_text(const NaeFormula& f) {
  std::string out = "nae " + std::to_string(f.k) + " " + std::to_string(f.num_vars) + " " +
                    std::to_string(f.clauses.size()) + "\n";
  for (const auto& cl : f.clauses) {
    for (std::size_t i = 0; i < cl.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(cl[i] + 1);
    }
    out += '\n';
  }
  return out;
}

Assignment parse_assignment(std::string_view text) {
  Assignment a;
  for (char c : text) {
    switch (std::toupper(static_cast<unsigned char>(c))) {
      case 'T':
      case '1':
        a.push_back(true);
        break;
      case 'F':
      case '0':
        a.push_back(false);
        break;
      case ',':
      case ' ':
        break;
      default:
        throw MalformedInput(std::string("assignment character '") + c + "' is not T/F/1/0");
    }
  }
  return a;
}

std::string to_text(const Assignment& a) {
  std::string out;
  for (bool b : a) out += b ? 'T' : 'F';
  return out;
}

}  // namespace switchkit
