// qeval :: interned symbol types for classes, roles and individuals.
#pragma once

#include <compare>
#include <functional>
#include <string>

namespace qeval {

// Names compare by spelling; two occurrences of the same spelling are the
// same symbol. The three kinds live in disjoint namespaces per ontology,
// which parse/validation enforces.

struct ClassName {
  std::string value;
  auto operator<=>(const ClassName&) const = default;
};

struct RoleName {
  std::string value;
  auto operator<=>(const RoleName&) const = default;
};

struct IndividualName {
  std::string value;
  auto operator<=>(const IndividualName&) const = default;
};

// Identifier grammar shared by all three kinds: letters, digits, underscore.
bool is_valid_name(const std::string& spelling);

}  // namespace qeval

template <>
struct std::hash<qeval::ClassName> {
  std::size_t operator()(const qeval::ClassName& n) const noexcept {
    return std::hash<std::string>{}(n.value);
  }
};
template <>
struct std::hash<qeval::RoleName> {
  std::size_t operator()(const qeval::RoleName& n) const noexcept {
    return std::hash<std::string>{}(n.value);
  }
};
template <>
struct std::hash<qeval::IndividualName> {
  std::size_t operator()(const qeval::IndividualName& n) const noexcept {
    return std::hash<std::string>{}(n.value);
  }
};
