// qeval :: ClassExpression — abstract syntax of EL-style class expressions.
//
// Expressions are immutable trees shared through reference-counted nodes, so
// copies are cheap and instances can be read concurrently. The raw (surface)
// shape is preserved as parsed; normalize() produces the canonical twin with
// conjunctions flattened, deduplicated and sorted.
#pragma once

#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "qeval/names.hpp"

namespace qeval {

class ClassExpression {
 public:
  enum class Kind { Atomic, Top, Conjunction, Existential };

  static ClassExpression atomic(ClassName name);
  static ClassExpression top();
  // Requires at least two members.
  static ClassExpression conjunction(std::vector<ClassExpression> members);
  static ClassExpression existential(RoleName role, ClassExpression filler);

  Kind kind() const { return node_->kind; }
  bool is_atomic() const { return node_->kind == Kind::Atomic; }
  bool is_top() const { return node_->kind == Kind::Top; }
  bool is_conjunction() const { return node_->kind == Kind::Conjunction; }
  bool is_existential() const { return node_->kind == Kind::Existential; }

  // Valid only for the matching kind.
  const ClassName& atom() const { return node_->atom; }
  std::span<const ClassExpression> conjuncts() const { return node_->children; }
  const RoleName& role() const { return node_->role; }
  const ClassExpression& filler() const { return node_->children.front(); }

  bool operator==(const ClassExpression& other) const;
  bool operator!=(const ClassExpression& other) const { return !(*this == other); }

 private:
  struct Node {
    Kind kind;
    ClassName atom;                         // Atomic
    RoleName role;                          // Existential
    std::vector<ClassExpression> children;  // Conjunction members / filler
  };

  explicit ClassExpression(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Signature {
  std::set<ClassName> classes;
  std::set<RoleName> roles;
  bool operator==(const Signature&) const = default;
};

// Concrete s-expression syntax: Name | "top" | (and e e ...) | (some r e).
std::string serialize(const ClassExpression& e);

// Flattens nested conjunctions, removes duplicate members, sorts members by
// their serialization, and collapses single-member conjunctions. Idempotent.
ClassExpression normalize(const ClassExpression& e);

// Exactly the class and role names occurring in e.
Signature signature(const ClassExpression& e);

// Total count of class and role name occurrences (repeats counted).
std::size_t name_occurrences(const ClassExpression& e);

// Maximum number of existentials on any root-to-leaf path.
std::size_t existential_depth(const ClassExpression& e);

}  // namespace qeval
