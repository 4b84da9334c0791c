#pragma once

// Reference word-rewriting engine. Words over the three generators are
// reduced by repeatedly rewriting the leftmost out-of-order adjacent pair
// with one of the rules below. It is slow and serves as the independent
// check for the multiplication kernels.

#include <map>
#include <string>
#include <vector>

#include "uqsl2/element.hpp"

namespace uqsl2::rewrite {

// gen: 0 = x/e, 1 = y/k, 2 = z/f. Only gen 1 may carry a negative power.
struct Letter {
    int gen = 0;
    int power = 1;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;
using Combination = std::map<Word, RationalFunction>;

// Merges adjacent equal generators and drops zero powers.
Word collapse(const Word& w);

struct Rule {
    std::string name;    // e.g. "z*x"
    Word lhs;            // two unit letters
    Combination rhs;
    Combination relation;  // defining relation (equal to zero) containing lhs
};

const std::vector<Rule>& rules(Basis basis);

// Reduces a combination of words to normal form.
NormalElement reduce(Basis basis, const Combination& input);
NormalElement multiply(const NormalElement& lhs, const NormalElement& rhs);

struct SoundnessEntry {
    Basis basis;
    std::string rule;
    bool sound;
};

// Substitutes each rule into its relation and checks the result vanishes.
std::vector<SoundnessEntry> check_rule_soundness();

}  // namespace uqsl2::rewrite
