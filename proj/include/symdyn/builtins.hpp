#ifndef SYMDYN_BUILTINS_HPP
#define SYMDYN_BUILTINS_HPP

#include <functional>

#include "symdyn/shifts.hpp"

namespace symdyn {

// Built-in shifts used by the example-reproduction suite.
//   even    two-letter shift whose delimited 1-blocks have even length
//   sft001  {0,1} forbidding "001"
//   golden  {0,1} forbidding "11"
//   full2   full shift on {0,1}
//   markov3 vertex shift on {1,2,3} with edges out of 1 only into {2,3} and
//           {2,3} complete (forbidden: 11, 21, 31)
//   pow2    {0,1} delimited 1-blocks of power-of-two length (rule-based)
//   ex14    {0,1,2}: the full {1,2} shift plus the single point 0.z for the
//           substitution fixed point z of 1 -> 12, 2 -> 21 (rule-based)
Subshift builtin_shift(std::string const& name);
std::vector<std::string> builtin_shift_names();

// The substitution fixed point z over {1,2} used by ex14, as 0-based symbol
// indices into its alphabet {0,1,2}.
Word ex14_z_prefix(std::size_t n);

// Built-in point families for the limit command.
//   even-odd-ones   k -> 1^(2k+1) 0^inf  (over the even shift's alphabet)
std::function<EvPeriodic(std::size_t)> builtin_family(std::string const& name,
                                                      Alphabet const& alph);
std::vector<std::string> builtin_family_names();

void ensure_builtin_rules_registered();

}  // namespace symdyn

#endif  // SYMDYN_BUILTINS_HPP
