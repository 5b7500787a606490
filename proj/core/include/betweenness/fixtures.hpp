#pragma once

#include "betweenness/orderlat.hpp"
#include "betweenness/relation.hpp"

namespace btw::fixtures {

/// {a,b,c}: bottom plus both orientations of (a,b,c) and (a,c,b).
TernaryRelation tri();

/// The seven-point relation on {a,b,c,x,d1,d2,y} whose antisymmetric
/// closure needs two rounds. (a,c,d2) is not listed.
TernaryRelation ex7();

/// ex7 with d1,d2 glued into d1: bottom plus (a,b,c),(a,d1,c),(b,x,d1),(a,c,x).
TernaryRelation relation_1();

/// ex7 together with a primed copy {a',b',c',x',d1',d2'} of its first six
/// points, linked by (x,d1',d2') and (c,d2',d1').
TernaryRelation ex7_extended();

/// The three-element chain 0 < 1 < 2.
FiniteLattice c3();
/// Four-element boolean lattice 0 < p,q < 1.
FiniteLattice b4();
/// Pentagon 0 < a < b < 1, 0 < c < 1.
FiniteLattice n5();
/// Diamond 0 < x,y,z < 1.
FiniteLattice m3();

}  // namespace btw::fixtures
