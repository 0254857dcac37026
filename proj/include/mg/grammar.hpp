#pragma once

#include "mg/lexicon.hpp"
#include "mg/tree.hpp"

namespace mg {

// (t1, t2) with sel(feat(t1)) = feat(t2).  False when either head label is
// empty.
bool in_dom_merge(const TreePtr& t1, const TreePtr& t2);

// feat(t) is a licensor and exactly one maximal projection carries the
// matching licensee (shortest move condition).
bool in_dom_move(const TreePtr& t);

// Structure building.  A simple selector head attaches its complement to the
// right under '<'; a complex selecting tree attaches the selected tree as its
// specifier on the left under '>'.  Both heads lose one feature.
TreePtr merge(const TreePtr& t1, const TreePtr& t2);

// Moves the unique licensee-bearing maximal projection into specifier
// position, leaving an empty leaf behind; licensor and licensee are consumed.
TreePtr move(const TreePtr& t);

// Address of the maximal projection move would displace.
NodeAddress move_target(const TreePtr& t);

}  // namespace mg
