#include "qmeas/diagbox.hpp"

#include "qmeas/error.hpp"

#include <algorithm>

namespace qmeas {

RInterval::RInterval(Scalar lo_, Scalar hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (lo.sign() < 0 || hi > Scalar(1))
        throw Error("interval endpoints must lie in [0,1]");
    if (lo > hi) throw Error("interval endpoints must be ordered");
}

Box::Box(std::vector<RInterval> sides_) : sides(std::move(sides_)) {
    if (sides.empty()) throw Error("a box needs at least one side");
}

bool Box::contains(std::span<const Scalar> point) const {
    if (point.size() != sides.size()) throw Error("point dimension mismatch");
    for (std::size_t j = 0; j < sides.size(); ++j)
        if (!sides[j].contains(point[j])) return false;
    return true;
}

BoxUnion::BoxUnion(unsigned dim, std::vector<Box> boxes)
    : dim_(dim), boxes_(std::move(boxes)) {
    if (dim_ == 0) throw Error("dimension must be at least 1");
    for (const auto& b : boxes_)
        if (b.dim() != dim_) throw Error("box dimension mismatch");
}

BoxUnion BoxUnion::full_cube(unsigned dim) {
    std::vector<RInterval> sides(dim, RInterval(Scalar(0), Scalar(1)));
    return BoxUnion(dim, {Box(std::move(sides))});
}

bool BoxUnion::covers_cube() const {
    // Endpoints partition each axis into cells; within an open cell every
    // box either contains the whole cell or misses it, so testing one
    // midpoint per cell decides coverage exactly.
    std::vector<std::vector<Scalar>> cuts(dim_);
    for (unsigned j = 0; j < dim_; ++j) cuts[j] = {Scalar(0), Scalar(1)};
    for (const auto& b : boxes_)
        for (unsigned j = 0; j < dim_; ++j) {
            cuts[j].push_back(b.sides[j].lo);
            cuts[j].push_back(b.sides[j].hi);
        }
    const Scalar half(1, 2);
    std::vector<std::vector<Scalar>> mids(dim_);
    std::size_t cells = 1;
    for (unsigned j = 0; j < dim_; ++j) {
        std::sort(cuts[j].begin(), cuts[j].end());
        cuts[j].erase(std::unique(cuts[j].begin(), cuts[j].end()), cuts[j].end());
        for (std::size_t i = 0; i + 1 < cuts[j].size(); ++i)
            mids[j].push_back((cuts[j][i] + cuts[j][i + 1]) * half);
        if (mids[j].empty()) return false;
        if (cells > (std::size_t{1} << 20) / mids[j].size())
            throw Error("cover check too large");
        cells *= mids[j].size();
    }
    std::vector<std::size_t> pos(dim_, 0);
    std::vector<Scalar> point(dim_, Scalar(0));
    for (;;) {
        for (unsigned j = 0; j < dim_; ++j) point[j] = mids[j][pos[j]];
        bool hit = false;
        for (const auto& b : boxes_)
            if (b.contains(point)) { hit = true; break; }
        if (!hit) return false;
        std::size_t j = dim_;
        for (;;) {
            if (j-- == 0) return true;
            if (++pos[j] < mids[j].size()) break;
            pos[j] = 0;
        }
    }
}

Scalar interval_union_length(std::vector<RInterval> intervals) {
    if (intervals.empty()) return Scalar();
    std::sort(intervals.begin(), intervals.end(),
              [](const RInterval& a, const RInterval& b) {
                  return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
              });
    Scalar total;
    Scalar lo = intervals.front().lo;
    Scalar hi = intervals.front().hi;
    for (std::size_t i = 1; i < intervals.size(); ++i) {
        if (intervals[i].lo <= hi) {
            if (intervals[i].hi > hi) hi = intervals[i].hi;
        } else {
            total += hi - lo;
            lo = intervals[i].lo;
            hi = intervals[i].hi;
        }
    }
    total += hi - lo;
    return total;
}

std::optional<RInterval> diagonal_trace(const Box& box) {
    Scalar lo = box.sides.front().lo;
    Scalar hi = box.sides.front().hi;
    for (const auto& side : box.sides) {
        if (side.lo > lo) lo = side.lo;
        if (side.hi < hi) hi = side.hi;
    }
    if (lo > hi) return std::nullopt;
    return RInterval(std::move(lo), std::move(hi));
}

Scalar diag_length(const BoxUnion& t) {
    std::vector<RInterval> traces;
    for (const auto& b : t.boxes())
        if (auto trace = diagonal_trace(b)) traces.push_back(std::move(*trace));
    return interval_union_length(std::move(traces));
}

Scalar marginal_slice_length(const BoxUnion& t, unsigned slot,
                             const std::vector<RInterval>& s) {
    if (slot >= t.dim()) throw Error("slot out of range");
    if (!t.covers_cube()) throw Error("marginal defined for the full-mass model");
    std::vector<Box> slabs;
    slabs.reserve(s.size());
    for (const auto& interval : s) {
        std::vector<RInterval> sides(t.dim(), RInterval(Scalar(0), Scalar(1)));
        sides[slot] = interval;
        slabs.emplace_back(std::move(sides));
    }
    return diag_length(BoxUnion(t.dim(), std::move(slabs)));
}

} // namespace qmeas
