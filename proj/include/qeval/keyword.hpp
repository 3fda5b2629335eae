// qeval :: keyword queries — conjunctions of natural-language phrases.
#pragma once

#include <string>
#include <vector>

namespace qeval {

// One phrase is a non-empty sequence of lowercase tokens (letters, digits,
// hyphens). A query is a conjunction of one or more phrases; every phrase
// must match for a record to match.
struct KeywordQuery {
  std::vector<std::vector<std::string>> phrases;
  bool operator==(const KeywordQuery&) const = default;
};

// Concrete syntax: phrases separated by `+`, tokens by spaces,
// e.g. `pleural effusion + left`. Input is lowercased.
KeywordQuery parse_keyword_query(const std::string& text);

std::string serialize(const KeywordQuery& q);

}  // namespace qeval
