#include "treepgm/factor.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

namespace treepgm {

Factor::Factor(std::vector<VarId> s, std::vector<double> t)
    : scope(std::move(s)), table(std::move(t)) {
  if (scope.empty()) throw structural_error("factor scope must not be empty");
  if (table.size() != (std::size_t{1} << scope.size()))
    throw structural_error("factor table size does not match scope");
}

std::size_t Factor::index_of(const Assignment& full) const {
  std::size_t idx = 0;
  for (VarId v : scope) {
    if (v < 0 || static_cast<std::size_t>(v) >= full.size())
      throw structural_error("factor scope variable out of range");
    idx = (idx << 1) | (full[v] ? 1u : 0u);
  }
  return idx;
}

void FactorNet::add_factor(Factor f) { factors.push_back(std::move(f)); }

void FactorNet::validate() const {
  std::vector<int> cpd_count(num_vars, 0);
  for (const auto& f : factors) {
    if (f.scope.empty()) throw structural_error("empty factor scope");
    if (f.table.size() != (std::size_t{1} << f.scope.size()))
      throw structural_error("factor table size does not match scope");
    for (VarId v : f.scope)
      if (v < 0 || v >= num_vars) throw structural_error("scope variable out of range");
    for (double x : f.table) {
      if (!std::isfinite(x)) throw structural_error("non-finite factor entry");
      if (x < 0.0) throw structural_error("negative factor entry");
    }
    if (kind == Kind::bayes) cpd_count[f.scope.back()]++;
  }
  if (kind == Kind::bayes) {
    for (int v = 0; v < num_vars; ++v)
      if (cpd_count[v] != 1)
        throw structural_error("bayes net needs exactly one CPD per variable");
    for (const auto& f : factors) {
      const std::size_t half = f.table.size() / 2;
      for (std::size_t row = 0; row < half; ++row) {
        const double s = f.table[2 * row] + f.table[2 * row + 1];
        if (std::fabs(s - 1.0) > 1e-9)
          throw structural_error("CPD row does not sum to 1");
      }
    }
  }
}

const char* to_string(FactorNet::Kind k) {
  return k == FactorNet::Kind::bayes ? "bayes" : "markov";
}

FactorNet::Kind kind_from_string(const std::string& s) {
  if (s == "bayes") return FactorNet::Kind::bayes;
  if (s == "markov") return FactorNet::Kind::markov;
  throw usage_error("unknown factornet kind: " + s);
}

void save_factornet(const FactorNet& net, std::ostream& os) {
  os << "factornet " << to_string(net.kind) << ' ' << net.num_vars << '\n';
  for (const auto& f : net.factors) {
    os << "factor";
    for (VarId v : f.scope) os << ' ' << v;
    os << " :";
    for (double x : f.table) os << ' ' << fmt_g17(x);
    os << '\n';
  }
}

void save_factornet_file(const FactorNet& net, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw usage_error("cannot open for writing: " + path);
  save_factornet(net, os);
}

FactorNet load_factornet(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw usage_error("empty factornet stream");
  std::istringstream head(line);
  std::string tag, kind_str;
  int num_vars = 0;
  if (!(head >> tag >> kind_str >> num_vars) || tag != "factornet")
    throw usage_error("bad factornet header: " + line);
  FactorNet net(num_vars, kind_from_string(kind_str));
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (word != "factor")
      throw usage_error("line " + std::to_string(lineno) + ": expected 'factor'");
    std::vector<VarId> scope;
    while (ls >> word) {
      if (word == ":") break;
      scope.push_back(std::stoi(word));
    }
    std::vector<double> table;
    double x;
    while (ls >> x) table.push_back(x);
    net.add_factor(Factor(std::move(scope), std::move(table)));
  }
  net.validate();
  return net;
}

FactorNet load_factornet_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw usage_error("cannot open: " + path);
  return load_factornet(is);
}

}  // namespace treepgm
