#include "qmeas/kernel.hpp"

#include "qmeas/error.hpp"
#include "qmeas/rng.hpp"

#include <bit>
#include <string>

namespace qmeas {

namespace {

constexpr unsigned kMaxBlocks = 8;

Scalar best_row_signs(const std::vector<Scalar>& row_sums) {
    Scalar total;
    for (const auto& r : row_sums) total += r.abs();
    return total;
}

// Row sums of A restricted to +1 columns minus the -1 columns; optimal
// epsilon then contributes sum of absolute row sums.
Scalar score_for_eta(const KernelMatrix& kernel, const std::vector<int>& eta) {
    const std::size_t n = kernel.n();
    std::vector<Scalar> row(n);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) {
            if (eta[t] > 0)
                row[s] += kernel.at(s, t);
            else
                row[s] -= kernel.at(s, t);
        }
    return best_row_signs(row);
}

} // namespace

KernelMatrix::KernelMatrix(std::size_t n, std::vector<Scalar> entries)
    : n_(n), entries_(std::move(entries)) {
    if (n_ == 0) throw Error("kernel must have at least one row");
    if (entries_.size() != n_ * n_) throw Error("kernel entries must form a square matrix");
}

std::size_t walsh_block_size(unsigned blocks) {
    return (std::size_t{2} << blocks) - 2; // 2 + 4 + ... + 2^K
}

KernelMatrix walsh_block(unsigned k) {
    if (k == 0) throw Error("block index starts at 1");
    if (k > kMaxBlocks) throw Error("at most 8 blocks");
    const std::size_t side = std::size_t{1} << k;
    const long divisor = static_cast<long>(side) * static_cast<long>(k);
    std::vector<Scalar> entries(side * side);
    for (std::size_t i = 0; i < side; ++i)
        for (std::size_t j = 0; j < side; ++j) {
            const bool neg = std::popcount(i & j) % 2 != 0;
            entries[i * side + j] = Scalar(neg ? -1 : 1, divisor);
        }
    return KernelMatrix(side, std::move(entries));
}

KernelMatrix walsh_block_kernel(unsigned blocks) {
    if (blocks == 0) throw Error("need at least one block");
    if (blocks > kMaxBlocks) throw Error("at most 8 blocks");
    const std::size_t n = walsh_block_size(blocks);
    std::vector<Scalar> entries(n * n);
    std::size_t offset = 0;
    for (unsigned k = 1; k <= blocks; ++k) {
        KernelMatrix block = walsh_block(k);
        for (std::size_t i = 0; i < block.n(); ++i)
            for (std::size_t j = 0; j < block.n(); ++j)
                entries[(offset + i) * n + (offset + j)] = block.at(i, j);
        offset += block.n();
    }
    return KernelMatrix(n, std::move(entries));
}

PolyMeasure kernel_to_bimeasure(const KernelMatrix& kernel) {
    if (kernel.n() > FiniteSpace::kMaxAtoms)
        throw Error("kernel too large to materialize; use the streaming report");
    std::vector<std::string> labels(kernel.n());
    for (std::size_t i = 0; i < kernel.n(); ++i) labels[i] = std::to_string(i);
    SpacePtr rows = make_space(labels);
    SpacePtr cols = make_space(labels);
    return PolyMeasure({std::move(rows), std::move(cols)}, kernel.entries());
}

Scalar kernel_variation(const KernelMatrix& kernel) {
    Scalar total;
    for (const auto& entry : kernel.entries()) total += entry.abs();
    return total;
}

Scalar kernel_semivariation_exact(const KernelMatrix& kernel) {
    const std::size_t n = kernel.n();
    if (n > 20) throw Error("sign enumeration too large; use sampled mode");
    std::vector<Scalar> row(n);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) row[s] += kernel.at(s, t);
    Scalar best = best_row_signs(row);
    std::vector<int> eta(n, 1);
    const Scalar two(2);
    for (std::uint64_t code = 1; code < (std::uint64_t{1} << n); ++code) {
        // Gray-code walk: one eta sign flips per step, so every row sum
        // moves by 2 * eta_t * a(s,t).
        const unsigned t = static_cast<unsigned>(std::countr_zero(code));
        eta[t] = -eta[t];
        for (std::size_t s = 0; s < n; ++s) {
            Scalar delta = kernel.at(s, t) * two;
            if (eta[t] > 0)
                row[s] += delta;
            else
                row[s] -= delta;
        }
        Scalar candidate = best_row_signs(row);
        if (candidate > best) best = candidate;
    }
    return best;
}

Scalar kernel_semivariation_sampled(const KernelMatrix& kernel,
                                    std::uint64_t seed, unsigned trials) {
    if (trials == 0) throw Error("trials must be at least 1");
    const std::size_t n = kernel.n();
    std::vector<int> eta(n);
    Scalar best;
    for (unsigned trial = 0; trial < trials; ++trial) {
        SeededRng rng = SeededRng::for_trial(seed, trial);
        for (std::size_t t = 0; t < n; ++t) eta[t] = rng.coin() ? 1 : -1;
        Scalar candidate = score_for_eta(kernel, eta);
        if (candidate > best) best = candidate;
    }
    return best;
}

std::vector<GrowthRow> variation_growth_report(unsigned max_blocks,
                                               unsigned trials,
                                               std::uint64_t seed) {
    if (max_blocks == 0) throw Error("need at least one block");
    if (max_blocks > kMaxBlocks) throw Error("at most 8 blocks");
    std::vector<GrowthRow> rows;
    rows.reserve(max_blocks);
    for (unsigned blocks = 1; blocks <= max_blocks; ++blocks) {
        KernelMatrix kernel = walsh_block_kernel(blocks);
        GrowthRow row;
        row.blocks = blocks;
        row.n = kernel.n();
        row.variation = kernel_variation(kernel);
        row.semivar_lb = kernel_semivariation_sampled(kernel, seed, trials);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace qmeas
