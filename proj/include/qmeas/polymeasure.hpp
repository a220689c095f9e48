#pragma once

#include "qmeas/set_function.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>

namespace qmeas {

/**
 * A finite polymeasure on a product of finite spaces: a dense rank-d
 * tensor of rationals indexed by atom tuples, one atom index per factor.
 *
 * Evaluation on cylinders sums the tensor over the member atom tuples, so
 * separate additivity in every slot holds by construction.
 */
class PolyMeasure {
public:
    // Row-major tensor, axis 0 (slot 0) outermost.
    PolyMeasure(std::vector<SpacePtr> factors, std::vector<Scalar> tensor);

    static PolyMeasure zero(std::vector<SpacePtr> factors);

    unsigned rank() const { return static_cast<unsigned>(factors_.size()); } // d
    const std::vector<SpacePtr>& factors() const { return factors_; }
    const std::vector<Scalar>& tensor() const { return tensor_; }

    std::size_t flat_index(std::span<const unsigned> atom_tuple) const;
    const Scalar& entry(std::span<const unsigned> atom_tuple) const;
    Scalar& entry_mut(std::span<const unsigned> atom_tuple);

    bool equal_factors() const;

    friend bool operator==(const PolyMeasure& a, const PolyMeasure& b);

private:
    std::vector<SpacePtr> factors_;
    std::vector<Scalar> tensor_;
    std::vector<std::size_t> strides_;
};

// Value on the cylinder sets[0] x ... x sets[d-1]; zero whenever some
// component is empty.
Scalar evaluate(const PolyMeasure& lambda, std::span<const MSet> sets);

// Diagonal A |-> lambda(A,...,A); requires equal factors.
SetFunction diagonal(const PolyMeasure& lambda);

// Measure obtained by fixing every slot but one to the full set.
SetFunction marginal(const PolyMeasure& lambda, unsigned slot);

// Lower-rank polymeasure obtained by fixing 1..d-1 slots to given sets.
PolyMeasure fix_arguments(const PolyMeasure& lambda,
                          const std::map<unsigned, MSet>& assignment);

// Average over all permutations of the arguments; requires equal factors.
PolyMeasure symmetrize(const PolyMeasure& lambda);

/**
 * Polarization: for pairwise disjoint sets A_1..A_d,
 *
 *   sum over T subset of {1..d} of (-1)^(d-|T|) mu(union of A_i, i in T).
 *
 * When mu is the diagonal of a polymeasure lambda with equal factors this
 * recovers the permutation sum  sum_{sigma} lambda(A_{sigma(1)},...,A_{sigma(d)}),
 * i.e. d! times the symmetrized cylinder value.
 */
Scalar polarization_recover(const SetFunction& mu, std::span<const MSet> sets);

struct DiagonalPositivityReport {
    bool positive = false;
    std::optional<MSet> witness; // first set with negative diagonal value
};

DiagonalPositivityReport is_diagonally_positive(const PolyMeasure& lambda);

// Total variation: sup of sum |lambda(cylinder)| over finite disjoint
// cylinder families. On a finite space the atom partition attains the
// supremum, so this is the sum of absolute tensor entries.
Scalar variation(const PolyMeasure& lambda);

// Semivariation: sup over +-1 sign vectors per slot of
// |sum signs * lambda(atom cylinder)|.
Scalar semivariation_exact(const PolyMeasure& lambda);

// Best value over `trials` seeded random sign choices: a certified lower
// bound for the semivariation.
Scalar semivariation_sampled(const PolyMeasure& lambda, std::uint64_t seed, unsigned trials);

/**
 * Ingestion format for externally supplied cylinder data: a (possibly
 * partial) table from d-tuples of measurable sets to values, to be
 * validated against separate additivity before compression to a tensor.
 */
class RawCylinderTable {
public:
    explicit RawCylinderTable(std::vector<SpacePtr> factors);

    void set(std::span<const MSet> sets, Scalar value);
    const std::vector<SpacePtr>& factors() const { return factors_; }
    std::optional<Scalar> get(std::span<const std::uint32_t> masks) const;
    std::size_t entry_count() const { return entries_.size(); }
    const std::map<std::vector<std::uint32_t>, Scalar>& entries() const { return entries_; }

private:
    std::vector<SpacePtr> factors_;
    std::map<std::vector<std::uint32_t>, Scalar> entries_;
};

struct AdditivityViolation {
    unsigned slot = 0;
    std::vector<MSet> context; // d-tuple whose `slot` component is B u C
    MSet part_b;
    MSet part_c;
    Scalar whole;     // value at B u C
    Scalar parts_sum; // value at B plus value at C
};

struct SeparateAdditivityReport {
    bool additive = false;
    std::optional<AdditivityViolation> violation;
};

// Slot-wise additivity check over every fixing of the other slots and
// every disjoint pair; the table must be total on all cylinders.
SeparateAdditivityReport check_separate_additivity(const RawCylinderTable& raw);

// Full cylinder table of a polymeasure (for ingestion round trips).
RawCylinderTable to_cylinder_table(const PolyMeasure& lambda);

// Validates separate additivity, then compresses to the atom tensor.
PolyMeasure compress(const RawCylinderTable& raw);

} // namespace qmeas
