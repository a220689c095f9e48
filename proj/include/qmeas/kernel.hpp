#pragma once

#include "qmeas/polymeasure.hpp"

#include <cstdint>
#include <vector>

namespace qmeas {

// Square matrix a(s,t) of rationals: the kernel of a discrete bimeasure
// lambda(S,T) = sum over s in S, t in T of a(s,t) on {0..n-1}^2.
class KernelMatrix {
public:
    KernelMatrix(std::size_t n, std::vector<Scalar> entries); // row-major, n*n

    std::size_t n() const { return n_; }
    const Scalar& at(std::size_t s, std::size_t t) const { return entries_[s * n_ + t]; }
    const std::vector<Scalar>& entries() const { return entries_; }

private:
    std::size_t n_;
    std::vector<Scalar> entries_;
};

// Truncation size after `blocks` Walsh blocks: 2 + 4 + ... + 2^K.
std::size_t walsh_block_size(unsigned blocks);

// Single k-th Walsh block: the 2^k x 2^k Sylvester-Hadamard matrix
// H[i][j] = (-1)^popcount(i & j), scaled by 1/(2^k * k).
KernelMatrix walsh_block(unsigned k);

/**
 * Block-diagonal kernel with Walsh blocks k = 1..blocks. Block k
 * contributes exactly 2^k/k to the variation, so the variation of the
 * truncation sequence diverges while sign cancellation inside each block
 * keeps signed sums small.
 */
KernelMatrix walsh_block_kernel(unsigned blocks);

// Dense rank-2 polymeasure on two n-atom spaces; n <= 16 only, since
// consumers materialize power sets.
PolyMeasure kernel_to_bimeasure(const KernelMatrix& kernel);

// Sum of |a(s,t)|, straight off the matrix (no power sets).
Scalar kernel_variation(const KernelMatrix& kernel);

// Exact semivariation max over sign vectors epsilon, eta in {-1,1}^n of
// |epsilon^T A eta|; the epsilon maximization is closed-form, the eta side
// walks a Gray code. Guarded to n <= 20.
Scalar kernel_semivariation_exact(const KernelMatrix& kernel);

// Best value over seeded random eta draws: a certified lower bound.
Scalar kernel_semivariation_sampled(const KernelMatrix& kernel,
                                    std::uint64_t seed, unsigned trials);

struct GrowthRow {
    unsigned blocks = 0; // K
    std::size_t n = 0;
    Scalar variation;
    Scalar semivar_lb;
};

// One row per truncation K = 1..max_blocks: exact variation and a sampled
// semivariation lower bound.
std::vector<GrowthRow> variation_growth_report(unsigned max_blocks,
                                               unsigned trials,
                                               std::uint64_t seed);

} // namespace qmeas
