#pragma once

#include "qmeas/polymeasure.hpp"
#include "qmeas/rng.hpp"

namespace qmeas {

// k atoms labeled "a", "b", ... (k <= 16, so single letters suffice).
SpacePtr default_space(unsigned k);

// Independent rational values on all 2^k subsets, in mask order.
SetFunction random_set_function(const SpacePtr& space, SeededRng& rng, long bound);

// Independent rational tensor entries, row-major.
PolyMeasure random_polymeasure(std::vector<SpacePtr> factors, SeededRng& rng, long bound);

// Upper triangle drawn, lower mirrored: symmetric with small denominators.
PolyMeasure random_symmetric_bimeasure(const SpacePtr& space, SeededRng& rng, long bound);

// Diagonal of a random symmetric bimeasure: grade-2 additive and grounded
// by construction.
SetFunction random_grade2_measure(const SpacePtr& space, SeededRng& rng, long bound);

// Each atom lands in one of the m components or in none.
std::vector<MSet> random_disjoint_tuple(const SpacePtr& space, unsigned m, SeededRng& rng);

} // namespace qmeas
