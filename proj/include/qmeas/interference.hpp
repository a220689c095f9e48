#pragma once

#include "qmeas/set_function.hpp"

#include <optional>
#include <span>

namespace qmeas {

struct GradeWitness {
    std::vector<MSet> sets; // pairwise disjoint (d+1)-tuple
    Scalar value;           // its nonzero interference
};

struct GradeReport {
    bool additive = false;
    std::optional<GradeWitness> witness; // present iff !additive
};

/**
 * Interference operator I_d on a (d+1)-tuple of pairwise disjoint sets:
 *
 *   I_d mu(S_0,...,S_d) = sum over nonempty T subset of {0..d} of
 *                         (-1)^(|T|-1) mu(union of S_i, i in T).
 *
 * For d = 1 this is mu(S_0) + mu(S_1) - mu(S_0 u S_1), the two-slit
 * interference term; its vanishing for every disjoint tuple is grade-d
 * additivity.
 */
Scalar interference(const SetFunction& mu, std::span<const MSet> sets);

/**
 * Difference operator: (delta_S nu)(T) = nu(T) - nu(S u T), defined on the
 * subspace of atoms outside S. The returned function lives on that
 * subspace (atom order inherited from the parent space).
 */
SetFunction delta(const SetFunction& nu, const MSet& s);

// Parent-space set translated onto the subspace delta produced. The set
// must avoid the removed atoms.
MSet restrict_to_subspace(const MSet& parent_set, const MSet& removed, const SpacePtr& subspace);

/**
 * Residual of the combinatorial recursion between interference operators,
 *
 *   I_{d-1} (delta_{S_0} nu)(S_1,...,S_d)  -  ( I_d nu(S_0,...,S_d) - nu(S_0) ),
 *
 * evaluated through two genuinely distinct code paths (the delta table on
 * the subspace vs. direct interference). The identity says it is always
 * zero, for arbitrary set functions.
 */
Scalar recursion_residual(const SetFunction& nu, const MSet& s0, std::span<const MSet> rest);

/**
 * Exhaustive grade-d additivity check: evaluates the interference over
 * every pairwise-disjoint (d+1)-tuple (empty components included) in
 * enumeration order, reporting the first nonzero witness if any.
 */
GradeReport is_grade_additive(const SetFunction& mu, unsigned grade);

// Smallest d <= max_grade at which mu is grade-d additive, if any.
std::optional<unsigned> grade_of(const SetFunction& mu, unsigned max_grade);

} // namespace qmeas
