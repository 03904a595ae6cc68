#pragma once

#include <string>
#include <vector>

#include "group.hpp"

namespace charposet {

enum class Family {
  Cyclic,
  ElemAbelian,
  AbelianProduct,
  Dihedral,
  Quaternion,
  Semidihedral,
  Modular,
  Extraspecial,
  DirectProduct,
};

/// Parsed family descriptor such as "DirectProduct(Quaternion(8),Cyclic(2,1))".
struct FamilySpec {
  Family family = Family::Cyclic;
  std::vector<long long> params;
  bool plus = true;  ///< Extraspecial sign
  std::vector<FamilySpec> factors;

  /// Canonical text form; round-trips through parse_family_spec.
  std::string to_string() const;
  /// Group order, without building the table.
  long long order() const;
};

FamilySpec parse_family_spec(const std::string& text);

/// Builds the named group; throws OrderCapExceeded above limits.closure_cap.
GroupTable builtin(const FamilySpec& spec, const Limits& limits = {});
GroupTable builtin(const std::string& text, const Limits& limits = {});

struct FamilyInfo {
  std::string name;
  std::string parameters;
  std::string range;
  std::string example;
};

const std::vector<FamilyInfo>& family_catalog();

/// Built-in p-groups swept by default: 2-groups up to order 64, 3-groups up
/// to order 81 and 5-groups up to order 25.
std::vector<std::string> default_sweep_specs();

}  // namespace charposet
