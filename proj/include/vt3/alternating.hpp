#pragma once

#include <span>
#include <string>
#include <vector>

#include "vt3/expression.hpp"

namespace vt3 {

/// A left-normed word pattern whose letters are either fixed generators or
/// slots of skew-symmetric (alternating) sets. Expansion sums the word over
/// independent permutations of each set's names, signed by the product of
/// permutation parities.
class AlternatingTemplate {
 public:
  struct Letter {
    std::string name;  // fixed generator; empty for slots
    int set = -1;      // alternating set id, -1 for fixed letters
    int pos = -1;      // 0-based position into that set's name list

    bool is_slot() const { return set >= 0; }
  };

  /// Validates: set names distinct within a set, slot references in range,
  /// every set used by at least one slot, word nonempty.
  AlternatingTemplate(std::vector<Letter> letters, std::vector<std::vector<std::string>> sets);

  const std::vector<Letter>& letters() const { return letters_; }
  const std::vector<std::vector<std::string>>& sets() const { return sets_; }

  /// Word length (= degree of every expanded term).
  int degree() const { return static_cast<int>(letters_.size()); }

  /// Product of the set factorials: term count before cancellation.
  size_t expansion_term_bound() const;

  /// Distinct generator names occurring in any expanded term, sorted.
  std::vector<std::string> generator_names() const;

  MultiElement expand() const;

  /// Text form, e.g. "x1 ~St3^2 ^St2^1 X1^3"; see parse for the grammar.
  std::string str() const;

  /// Grammar (whitespace-separated items):
  ///   item  = [deco] "St" SIZE ["^" POWER]   block of POWER standard words
  ///         | [deco] NAME                    single letter
  ///         | "X" INDEX "^" COUNT            COUNT right factors x<INDEX>
  ///   deco  = "~~" | "~" | "-" | "^"         one alternating set per symbol
  /// A decorated St-block of size j uses names x1..xj; decorated single
  /// letters must be one of those names and occupy the matching slot. A
  /// decoration used only on single letters collects them, in order, as its
  /// set. Throws std::invalid_argument naming the offending token.
  static AlternatingTemplate parse(const std::string& text);

 private:
  std::vector<Letter> letters_;
  std::vector<std::vector<std::string>> sets_;
};

/// St_n over the given distinct names as a left-normed MultiElement with n!
/// terms; the identity permutation carries sign +1.
MultiElement standard_polynomial(int n, std::span<const std::string> names);

}  // namespace vt3
