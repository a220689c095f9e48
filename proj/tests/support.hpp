#pragma once

// Shared test oracles: independent re-derivations of the library results,
// structured differently from the production code on purpose.

#include "qmeas/diagbox.hpp"
#include "qmeas/interference.hpp"
#include "qmeas/polymeasure.hpp"
#include "qmeas/rng.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace testsupport {

using qmeas::Box;
using qmeas::BoxUnion;
using qmeas::MSet;
using qmeas::PolyMeasure;
using qmeas::RInterval;
using qmeas::Scalar;
using qmeas::SeededRng;
using qmeas::SetFunction;

// I_d written as the printed double sum: for each size l+1 walk the
// combinations i_0 < ... < i_l explicitly (the library instead walks
// subset masks).
inline Scalar oracle_interference(const SetFunction& mu, const std::vector<MSet>& sets) {
    const unsigned n = static_cast<unsigned>(sets.size());
    Scalar total;
    for (unsigned size = 1; size <= n; ++size) {
        std::vector<unsigned> comb(size);
        std::iota(comb.begin(), comb.end(), 0u);
        for (;;) {
            std::uint32_t member_union = 0;
            for (unsigned i : comb) member_union |= sets[i].bits();
            if ((size - 1) % 2 != 0)
                total -= mu.at_mask(member_union);
            else
                total += mu.at_mask(member_union);
            int j = static_cast<int>(size) - 1;
            while (j >= 0 && comb[static_cast<unsigned>(j)] == n - size + static_cast<unsigned>(j)) --j;
            if (j < 0) break;
            ++comb[static_cast<unsigned>(j)];
            for (unsigned i = static_cast<unsigned>(j) + 1; i < size; ++i) comb[i] = comb[i - 1] + 1;
        }
    }
    return total;
}

// (delta_S nu)(T) evaluated on parent masks directly, with an embedding
// table built here rather than by the library.
inline Scalar oracle_delta_value(const SetFunction& nu, const MSet& s, std::uint32_t sub_mask) {
    std::vector<unsigned> outside;
    for (unsigned a = 0; a < nu.space()->size(); ++a)
        if (!s.contains(a)) outside.push_back(a);
    std::uint32_t parent = 0;
    for (std::size_t i = 0; i < outside.size(); ++i)
        if ((sub_mask >> i) & 1u) parent |= 1u << outside[i];
    return nu.at_mask(parent) - nu.at_mask(parent | s.bits());
}

// sum over all permutations sigma of evaluate(lambda, sets[sigma]).
inline Scalar oracle_permutation_sum(const PolyMeasure& lambda, const std::vector<MSet>& sets) {
    std::vector<unsigned> perm(sets.size());
    std::iota(perm.begin(), perm.end(), 0u);
    Scalar total;
    do {
        std::vector<MSet> arranged;
        arranged.reserve(sets.size());
        for (unsigned i : perm) arranged.push_back(sets[i]);
        total += evaluate(lambda, arranged);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Every set partition of {0..k-1} into nonempty blocks (as mask lists).
inline void partitions_rec(unsigned k, unsigned atom, std::vector<std::uint32_t>& blocks,
                           std::vector<std::vector<std::uint32_t>>& out) {
    if (atom == k) {
        out.push_back(blocks);
        return;
    }
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        blocks[i] |= 1u << atom;
        partitions_rec(k, atom + 1, blocks, out);
        blocks[i] &= ~(1u << atom);
    }
    blocks.push_back(1u << atom);
    partitions_rec(k, atom + 1, blocks, out);
    blocks.pop_back();
}

inline std::vector<std::vector<std::uint32_t>> all_partitions(unsigned k) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> blocks;
    partitions_rec(k, 0, blocks, out);
    return out;
}

// Exact rank over the rationals by plain Gaussian elimination.
inline std::size_t oracle_rank(std::vector<std::vector<Scalar>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][col].is_zero()) continue;
            Scalar factor = rows[r][col] / rows[rank][col];
            for (std::size_t c = col; c < cols; ++c)
                rows[r][c] -= factor * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

// Diagonal-trace length by subdividing [0,1] at every box endpoint and
// testing one midpoint per cell for membership of (m,...,m); no interval
// merging involved.
inline Scalar oracle_diag_length(const BoxUnion& t) {
    std::vector<Scalar> cuts{Scalar(0), Scalar(1)};
    for (const auto& box : t.boxes())
        for (const auto& side : box.sides) {
            cuts.push_back(side.lo);
            cuts.push_back(side.hi);
        }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    const Scalar half(1, 2);
    Scalar total;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Scalar mid = (cuts[i] + cuts[i + 1]) * half;
        bool inside = false;
        for (const auto& box : t.boxes()) {
            bool in_box = true;
            for (const auto& side : box.sides)
                if (mid < side.lo || side.hi < mid) { in_box = false; break; }
            if (in_box) { inside = true; break; }
        }
        if (inside) total += cuts[i + 1] - cuts[i];
    }
    return total;
}

// Random rational in [0,1] with denominator up to 12.
inline Scalar random_unit_scalar(SeededRng& rng) {
    long den = rng.int_in(1, 12);
    long num = rng.int_in(0, den);
    return Scalar(num, den);
}

inline RInterval random_interval(SeededRng& rng) {
    Scalar a = random_unit_scalar(rng);
    Scalar b = random_unit_scalar(rng);
    if (b < a) std::swap(a, b);
    return RInterval(std::move(a), std::move(b));
}

inline BoxUnion random_box_union(SeededRng& rng, unsigned dim, unsigned max_boxes) {
    const unsigned count = static_cast<unsigned>(rng.below(max_boxes + 1));
    std::vector<Box> boxes;
    boxes.reserve(count);
    for (unsigned i = 0; i < count; ++i) {
        std::vector<RInterval> sides;
        sides.reserve(dim);
        for (unsigned j = 0; j < dim; ++j) sides.push_back(random_interval(rng));
        boxes.emplace_back(std::move(sides));
    }
    return BoxUnion(dim, std::move(boxes));
}

} // namespace testsupport
