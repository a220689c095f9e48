#pragma once

#include "qmeas/polymeasure.hpp"

namespace qmeas {

/**
 * The symmetric bimeasure with diagonal mu, via
 *
 *   lambda(A,B) = ( mu(A u B) + mu(A n B) - mu(A \ B) - mu(B \ A) ) / 2.
 *
 * Total on every SetFunction and always symmetric; it inverts the diagonal
 * map exactly when mu is grade-2 additive with mu(empty) = 0.
 */
PolyMeasure reconstruct(const SetFunction& mu);

// True iff diagonal(reconstruct(mu)) == mu, i.e. mu lies in the image of
// the diagonal map over symmetric bimeasures.
bool roundtrip_check(const SetFunction& mu);

// True iff reconstruct(diagonal(lambda)) == lambda. Requires a symmetric
// rank-2 polymeasure with equal factors.
bool inverse_roundtrip_check(const PolyMeasure& lambda);

// Evaluated biconditional: [mu >= 0 everywhere] <=> [reconstruct(mu) is
// diagonally positive]. Requires roundtrip_check(mu).
bool positivity_correspondence(const SetFunction& mu);

// sup |mu(A)| over all measurable sets.
Scalar sup_bound(const SetFunction& mu);

} // namespace qmeas
