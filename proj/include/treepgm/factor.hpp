#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "treepgm/common.hpp"

namespace treepgm {

/// Index of a binary variable inside a FactorNet. Dense from 0.
using VarId = int;

/// Complete 0/1 assignment, one entry per variable.
using Assignment = std::vector<std::uint8_t>;

/// Partial assignment used as evidence.
using Evidence = std::map<VarId, int>;

/// Table potential over an ordered scope of binary variables.
///
/// The table has 2^|scope| entries indexed by the scope assignment with the
/// last scope variable varying fastest: for scope [a, b] the entry for
/// (a=1, b=0) sits at index 2.
struct Factor {
  std::vector<VarId> scope;
  std::vector<double> table;

  Factor() = default;
  Factor(std::vector<VarId> s, std::vector<double> t);

  std::size_t index_of(const Assignment& full) const;
  double at(const Assignment& full) const { return table[index_of(full)]; }
};

/// Discrete PGM over binary variables: a Bayesian network when every factor
/// is a CPD (one per variable, rows normalized), or a Markov network of
/// arbitrary nonnegative potentials.
struct FactorNet {
  enum class Kind { bayes, markov };

  int num_vars = 0;
  Kind kind = Kind::markov;
  std::vector<Factor> factors;

  FactorNet() = default;
  FactorNet(int n, Kind k) : num_vars(n), kind(k) {}

  void add_factor(Factor f);

  /// Checks scope ranges, table sizes and finiteness; for Bayes kind also
  /// checks the one-CPD-per-variable convention (child last in scope) and
  /// row normalization.
  void validate() const;
};

const char* to_string(FactorNet::Kind k);
FactorNet::Kind kind_from_string(const std::string& s);

// Plain-text serialization:
//   factornet <kind> <num_vars>
//   factor <scope ids...> : <2^|scope| table values>
void save_factornet(const FactorNet& net, std::ostream& os);
void save_factornet_file(const FactorNet& net, const std::string& path);
FactorNet load_factornet(std::istream& is);
FactorNet load_factornet_file(const std::string& path);

}  // namespace treepgm
