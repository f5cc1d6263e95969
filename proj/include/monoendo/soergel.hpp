#pragma once

#include <vector>

#include "monoendo/blocks.hpp"
#include "monoendo/hecke.hpp"

namespace monoendo {

struct BslRewrite {
  // Positions in the simple roots of W°_{wL}, read as w = t_word[0] t_word[1] ... w^beta.
  std::vector<int> t_word;
  Block beta;
};

// w = s_{word[0]} ... s_{word[n-1]} with source chi. Throws InputError on a
// non-reduced word.
BslRewrite bsl_rewrite(const std::vector<int>& word, const CharParam& chi);

// c_{s_{word[0]}} ... c_{s_{word[n-1]}} 1_{L_k}, each factor at the parameter it meets.
HeckeElt bsl_character(const HeckeAlgebra& h, const std::vector<int>& word, std::size_t k);

}  // namespace monoendo
