#include "qmeas/interference.hpp"

#include "qmeas/error.hpp"

#include <bit>

namespace qmeas {

namespace {

// Core sum over nonempty index subsets; masks must already be pairwise
// disjoint and within mu's space.
Scalar interference_masks(const SetFunction& mu, std::span<const std::uint32_t> masks) {
    const std::uint32_t tuple_count = 1u << masks.size();
    Scalar acc;
    for (std::uint32_t t = 1; t < tuple_count; ++t) {
        std::uint32_t u = 0;
        for (std::size_t i = 0; i < masks.size(); ++i)
            if ((t >> i) & 1u) u |= masks[i];
        if (std::popcount(t) % 2 == 1)
            acc += mu.at_mask(u);
        else
            acc -= mu.at_mask(u);
    }
    return acc;
}

void check_tuple(const SetFunction& mu, std::span<const MSet> sets) {
    std::uint32_t used = 0;
    for (const auto& s : sets) {
        if (!same_space(s.space(), mu.space())) throw Error("space mismatch");
        if (used & s.bits()) throw Error("arguments must be pairwise disjoint");
        used |= s.bits();
    }
}

std::vector<std::uint32_t> bits_of(std::span<const MSet> sets) {
    std::vector<std::uint32_t> masks;
    masks.reserve(sets.size());
    for (const auto& s : sets) masks.push_back(s.bits());
    return masks;
}

} // namespace

Scalar interference(const SetFunction& mu, std::span<const MSet> sets) {
    if (sets.size() < 2) throw Error("grade must be at least 1");
    check_tuple(mu, sets);
    return interference_masks(mu, bits_of(sets));
}

SetFunction delta(const SetFunction& nu, const MSet& s) {
    if (!same_space(s.space(), nu.space())) throw Error("space mismatch");
    const FiniteSpace& parent = *nu.space();

    std::vector<std::string> sub_atoms;
    std::vector<unsigned> parent_index; // subspace atom -> parent atom
    for (unsigned i = 0; i < parent.size(); ++i) {
        if (!s.contains(i)) {
            sub_atoms.push_back(parent.atoms()[i]);
            parent_index.push_back(i);
        }
    }
    // For s = X the result would live on a zero-atom space, which
    // FiniteSpace cannot represent (k >= 1).
    if (sub_atoms.empty()) throw Error("delta over the full space leaves no atoms");
    SpacePtr subspace = make_space(std::move(sub_atoms));

    const std::uint32_t sub_count = subspace->subset_count();
    std::vector<Scalar> values;
    values.reserve(sub_count);
    for (std::uint32_t t = 0; t < sub_count; ++t) {
        std::uint32_t embedded = 0;
        for (unsigned j = 0; j < parent_index.size(); ++j)
            if ((t >> j) & 1u) embedded |= 1u << parent_index[j];
        values.push_back(nu.at_mask(embedded) - nu.at_mask(s.bits() | embedded));
    }
    return SetFunction(std::move(subspace), std::move(values));
}

MSet restrict_to_subspace(const MSet& parent_set, const MSet& removed, const SpacePtr& subspace) {
    if (!same_space(parent_set.space(), removed.space())) throw Error("space mismatch");
    if ((parent_set.bits() & removed.bits()) != 0)
        throw Error("set meets the removed atoms");
    std::uint32_t sub_bits = 0;
    unsigned j = 0;
    for (unsigned i = 0; i < parent_set.space()->size(); ++i) {
        if (removed.contains(i)) continue;
        if (parent_set.contains(i)) sub_bits |= 1u << j;
        ++j;
    }
    return MSet(subspace, sub_bits);
}

Scalar recursion_residual(const SetFunction& nu, const MSet& s0, std::span<const MSet> rest) {
    if (rest.size() < 2) throw Error("recursion residual needs at least two trailing sets");
    std::vector<MSet> all;
    all.reserve(rest.size() + 1);
    all.push_back(s0);
    all.insert(all.end(), rest.begin(), rest.end());
    check_tuple(nu, all);

    Scalar lhs;
    if (s0.bits() == nu.space()->full_mask()) {
        // Every trailing set is empty, so delta_{S_0} nu lives on the
        // zero-atom subspace and I_{d-1} collapses to the single value
        // (delta nu)(emptyset) times an alternating binomial sum of 1.
        lhs = nu.at_mask(0) - nu.at(s0);
    } else {
        SetFunction reduced = delta(nu, s0);
        std::vector<MSet> mapped;
        mapped.reserve(rest.size());
        for (const auto& r : rest)
            mapped.push_back(restrict_to_subspace(r, s0, reduced.space()));
        lhs = interference(reduced, mapped);
    }
    Scalar rhs = interference(nu, all) - nu.at(s0);
    return lhs - rhs;
}

GradeReport is_grade_additive(const SetFunction& mu, unsigned grade) {
    if (grade < 1) throw Error("grade must be at least 1");
    DisjointTuples tuples(mu.space(), grade + 1);
    for (auto it = tuples.begin(); it != tuples.end(); ++it) {
        Scalar v = interference_masks(mu, *it);
        if (!v.is_zero()) {
            GradeReport report;
            report.additive = false;
            report.witness = GradeWitness{tuples.to_msets(*it), std::move(v)};
            return report;
        }
    }
    return GradeReport{true, std::nullopt};
}

std::optional<unsigned> grade_of(const SetFunction& mu, unsigned max_grade) {
    if (max_grade < 1) throw Error("grade must be at least 1");
    for (unsigned d = 1; d <= max_grade; ++d)
        if (is_grade_additive(mu, d).additive) return d;
    return std::nullopt;
}

} // namespace qmeas
