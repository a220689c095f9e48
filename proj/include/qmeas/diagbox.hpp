#pragma once

#include "qmeas/scalar.hpp"

#include <optional>
#include <span>
#include <vector>

namespace qmeas {

// Closed rational subinterval of [0,1]. Empty intersections are
// represented by absence (std::nullopt), never by lo > hi.
struct RInterval {
    RInterval(Scalar lo_, Scalar hi_);

    Scalar lo;
    Scalar hi;

    Scalar length() const { return hi - lo; }
    bool contains(const Scalar& t) const { return lo <= t && t <= hi; }
};

// Axis-aligned rational box in [0,1]^d.
struct Box {
    explicit Box(std::vector<RInterval> sides_);

    std::vector<RInterval> sides;

    unsigned dim() const { return static_cast<unsigned>(sides.size()); }
    bool contains(std::span<const Scalar> point) const;
};

/**
 * A finite union of boxes of one dimension. Boxes may overlap; all the
 * functionals below are well defined on arbitrary finite unions.
 */
class BoxUnion {
public:
    BoxUnion(unsigned dim, std::vector<Box> boxes);

    static BoxUnion full_cube(unsigned dim);

    unsigned dim() const { return dim_; }
    const std::vector<Box>& boxes() const { return boxes_; }

    // Whether the union is all of [0,1]^dim, decided exactly by
    // subdividing at the box endpoints and testing cell midpoints.
    bool covers_cube() const;

private:
    unsigned dim_;
    std::vector<Box> boxes_;
};

// Lebesgue measure of a finite union of intervals: sort, merge, sum.
Scalar interval_union_length(std::vector<RInterval> intervals);

// Parameter interval of {t : (t,...,t) in box}; nullopt when the box
// misses the diagonal.
std::optional<RInterval> diagonal_trace(const Box& box);

// Length of {t in [0,1] : (t,...,t) in T}.
Scalar diag_length(const BoxUnion& t);

/**
 * Marginal of the diagonal-length functional in one slot, evaluated on an
 * interval union s: the diag_length of the union of boxes with s in the
 * given slot and [0,1] elsewhere. Only defined when t is the full cube
 * (the total-mass-1 model); equals the Lebesgue length of s.
 */
Scalar marginal_slice_length(const BoxUnion& t, unsigned slot,
                             const std::vector<RInterval>& s);

} // namespace qmeas
