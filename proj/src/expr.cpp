#include "qeval/expr.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace qeval {

bool is_valid_name(const std::string& spelling) {
  if (spelling.empty()) return false;
  for (unsigned char c : spelling) {
    if (!std::isalnum(c) && c != '_') return false;
  }
  return spelling != "top" && spelling != "and" && spelling != "some";
}

ClassExpression ClassExpression::atomic(ClassName name) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Atomic;
  node->atom = std::move(name);
  return ClassExpression(std::move(node));
}

ClassExpression ClassExpression::top() {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Top;
  return ClassExpression(std::move(node));
}

ClassExpression ClassExpression::conjunction(std::vector<ClassExpression> members) {
  if (members.size() < 2) {
    throw std::invalid_argument("conjunction requires at least two members");
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::Conjunction;
  node->children = std::move(members);
  return ClassExpression(std::move(node));
}

ClassExpression ClassExpression::existential(RoleName role, ClassExpression filler) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Existential;
  node->role = std::move(role);
  node->children.push_back(std::move(filler));
  return ClassExpression(std::move(node));
}

bool ClassExpression::operator==(const ClassExpression& other) const {
  if (node_ == other.node_) return true;
  if (node_->kind != other.node_->kind) return false;
  switch (node_->kind) {
    case Kind::Top:
      return true;
    case Kind::Atomic:
      return node_->atom == other.node_->atom;
    case Kind::Existential:
      return node_->role == other.node_->role && filler() == other.filler();
    case Kind::Conjunction: {
      if (node_->children.size() != other.node_->children.size()) return false;
      for (std::size_t i = 0; i < node_->children.size(); ++i) {
        if (!(node_->children[i] == other.node_->children[i])) return false;
      }
      return true;
    }
  }
  return false;
}

namespace {

void serialize_into(const ClassExpression& e, std::string& out) {
  switch (e.kind()) {
    case ClassExpression::Kind::Atomic:
      out += e.atom().value;
      break;
    case ClassExpression::Kind::Top:
      out += "top";
      break;
    case ClassExpression::Kind::Conjunction:
      out += "(and";
      for (const auto& m : e.conjuncts()) {
        out += ' ';
        serialize_into(m, out);
      }
      out += ')';
      break;
    case ClassExpression::Kind::Existential:
      out += "(some ";
      out += e.role().value;
      out += ' ';
      serialize_into(e.filler(), out);
      out += ')';
      break;
  }
}

void flatten_conjuncts(const ClassExpression& e, std::vector<ClassExpression>& out) {
  if (e.is_conjunction()) {
    for (const auto& m : e.conjuncts()) flatten_conjuncts(m, out);
  } else {
    out.push_back(e);
  }
}

}  // namespace

std::string serialize(const ClassExpression& e) {
  std::string out;
  serialize_into(e, out);
  return out;
}

ClassExpression normalize(const ClassExpression& e) {
  switch (e.kind()) {
    case ClassExpression::Kind::Atomic:
    case ClassExpression::Kind::Top:
      return e;
    case ClassExpression::Kind::Existential:
      return ClassExpression::existential(e.role(), normalize(e.filler()));
    case ClassExpression::Kind::Conjunction: {
      std::vector<ClassExpression> flat;
      flatten_conjuncts(e, flat);
      std::vector<std::pair<std::string, ClassExpression>> keyed;
      keyed.reserve(flat.size());
      for (const auto& m : flat) {
        ClassExpression n = normalize(m);
        keyed.emplace_back(serialize(n), std::move(n));
      }
      std::sort(keyed.begin(), keyed.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      keyed.erase(std::unique(keyed.begin(), keyed.end(),
                              [](const auto& a, const auto& b) { return a.first == b.first; }),
                  keyed.end());
      if (keyed.size() == 1) return keyed.front().second;
      std::vector<ClassExpression> members;
      members.reserve(keyed.size());
      for (auto& [key, m] : keyed) members.push_back(std::move(m));
      return ClassExpression::conjunction(std::move(members));
    }
  }
  return e;
}

namespace {

void collect_signature(const ClassExpression& e, Signature& sig) {
  switch (e.kind()) {
    case ClassExpression::Kind::Atomic:
      sig.classes.insert(e.atom());
      break;
    case ClassExpression::Kind::Top:
      break;
    case ClassExpression::Kind::Conjunction:
      for (const auto& m : e.conjuncts()) collect_signature(m, sig);
      break;
    case ClassExpression::Kind::Existential:
      sig.roles.insert(e.role());
      collect_signature(e.filler(), sig);
      break;
  }
}

}  // namespace

Signature signature(const ClassExpression& e) {
  Signature sig;
  collect_signature(e, sig);
  return sig;
}

std::size_t name_occurrences(const ClassExpression& e) {
  switch (e.kind()) {
    case ClassExpression::Kind::Atomic:
      return 1;
    case ClassExpression::Kind::Top:
      return 0;
    case ClassExpression::Kind::Conjunction: {
      std::size_t total = 0;
      for (const auto& m : e.conjuncts()) total += name_occurrences(m);
      return total;
    }
    case ClassExpression::Kind::Existential:
      return 1 + name_occurrences(e.filler());
  }
  return 0;
}

std::size_t existential_depth(const ClassExpression& e) {
  switch (e.kind()) {
    case ClassExpression::Kind::Atomic:
    case ClassExpression::Kind::Top:
      return 0;
    case ClassExpression::Kind::Conjunction: {
      std::size_t deepest = 0;
      for (const auto& m : e.conjuncts()) deepest = std::max(deepest, existential_depth(m));
      return deepest;
    }
    case ClassExpression::Kind::Existential:
      return 1 + existential_depth(e.filler());
  }
  return 0;
}

}  // namespace qeval
