#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kampen/deleted_product.hpp"
#include "kampen/model.hpp"

namespace kampen {

enum class Preset { Full, Novik, Minimal, SubY, SubSubsets };

// Which subsets S of P_J restricted to K get a row in the sub_subsets preset.
// Pairs: singletons, pairs and the whole set. Singletons: singletons and the
// whole set. All: every nonempty subset.
enum class SubsetPolicy { Pairs, Singletons, All };

// How sum |lambda| <= r is written: auxiliary variables a >= +-lambda, or one
// row per sign pattern (no extra variables, 2^|P| rows).
enum class AbsEncoding { Auxiliary, SignPatterns };

struct SystemConfig {
  Preset preset = Preset::Full;
  bool symmetry_reduction = true;
  SubsetPolicy subset_policy = SubsetPolicy::Pairs;
  AbsEncoding abs_encoding = AbsEncoding::Auxiliary;
};

Preset parse_preset(std::string_view name);
std::string to_string(Preset p);
SubsetPolicy parse_subset_policy(std::string_view name);
std::string to_string(SubsetPolicy p);

// Number of elements of J other than min J lying in {1..k}.
int ell(const Simplex& j, int k);

// Parity of the permutation sorting (plus ascending, minus ascending).
int shuffle_sign(const Simplex& plus, const Simplex& minus);

// All cells plus x minus with plus u minus = J, min J in plus, minus nonempty.
struct PartitionFamily {
  Simplex j;
  std::vector<Cell> pairs;
};
PartitionFamily partition_family(const Simplex& j);

// Variable name of the deformation cochain value on a cell.
std::string lambda_name(const Cell& c);

Model build(const SimplicialComplex& k, int m, const SystemConfig& cfg);

}  // namespace kampen
