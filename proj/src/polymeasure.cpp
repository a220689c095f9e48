#include "qmeas/polymeasure.hpp"

#include "qmeas/error.hpp"
#include "qmeas/rng.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace qmeas {

namespace {

std::vector<SpacePtr> checked_factors(std::vector<SpacePtr> factors) {
    if (factors.empty()) throw Error("a polymeasure needs at least one factor");
    for (const auto& f : factors)
        if (!f) throw Error("a polymeasure needs at least one factor");
    return factors;
}

std::size_t tensor_extent(const std::vector<SpacePtr>& factors) {
    std::size_t total = 1;
    for (const auto& f : factors) {
        if (total > (std::size_t{1} << 32) / f->size()) throw Error("tensor too large");
        total *= f->size();
    }
    return total;
}

// Mixed-radix odometer over atom tuples, last slot fastest (so stepping
// alongside a flat tensor index walks entries in storage order). Returns
// false once every slot has wrapped.
bool advance_atoms(std::vector<unsigned>& idx, const std::vector<SpacePtr>& factors) {
    std::size_t j = idx.size();
    while (j-- > 0) {
        if (++idx[j] < factors[j]->size()) return true;
        idx[j] = 0;
    }
    return false;
}

// Same stepping over subset masks instead of atom indices.
bool advance_masks(std::vector<std::uint32_t>& masks, const std::vector<SpacePtr>& factors) {
    std::size_t j = masks.size();
    while (j-- > 0) {
        if (++masks[j] < factors[j]->subset_count()) return true;
        masks[j] = 0;
    }
    return false;
}

void check_arguments(const PolyMeasure& lambda, std::span<const MSet> sets) {
    if (sets.size() != lambda.rank()) throw Error("need one set per factor");
    for (std::size_t j = 0; j < sets.size(); ++j)
        if (!same_space(sets[j].space(), lambda.factors()[j])) throw Error("space mismatch");
}

// Slot whose factor has the most atoms; contracting it first shrinks the
// sign enumeration by the largest power of two.
unsigned widest_slot(const PolyMeasure& lambda) {
    unsigned j0 = 0;
    for (unsigned j = 1; j < lambda.rank(); ++j)
        if (lambda.factors()[j]->size() > lambda.factors()[j0]->size()) j0 = j;
    return j0;
}

/**
 * Best |sum of signed tensor entries| once the signs of every slot except
 * j0 are fixed by sign_masks (bit a set = atom a gets -1). Slot j0 is
 * contracted optimally: collecting coefficients per j0-atom and summing
 * absolute values picks the best j0 signs in closed form, which also means
 * every value returned here is attained by a genuine sign vector.
 */
Scalar signed_contraction(const PolyMeasure& lambda, unsigned j0,
                          const std::vector<std::uint32_t>& sign_masks) {
    const auto& factors = lambda.factors();
    const auto& tensor = lambda.tensor();
    std::vector<Scalar> coeff(factors[j0]->size());
    std::vector<unsigned> idx(lambda.rank(), 0);
    std::size_t flat = 0;
    do {
        bool neg = false;
        for (unsigned j = 0; j < lambda.rank(); ++j)
            if (j != j0 && ((sign_masks[j] >> idx[j]) & 1u)) neg = !neg;
        if (neg)
            coeff[idx[j0]] -= tensor[flat];
        else
            coeff[idx[j0]] += tensor[flat];
        ++flat;
    } while (advance_atoms(idx, factors));
    Scalar best;
    for (const auto& c : coeff) best += c.abs();
    return best;
}

} // namespace

PolyMeasure::PolyMeasure(std::vector<SpacePtr> factors, std::vector<Scalar> tensor)
    : factors_(checked_factors(std::move(factors))), tensor_(std::move(tensor)) {
    if (tensor_.size() != tensor_extent(factors_))
        throw Error("tensor size must match the product of factor sizes");
    strides_.assign(factors_.size(), 1);
    for (std::size_t j = factors_.size(); j-- > 1;)
        strides_[j - 1] = strides_[j] * factors_[j]->size();
}

PolyMeasure PolyMeasure::zero(std::vector<SpacePtr> factors) {
    auto checked = checked_factors(std::move(factors));
    std::vector<Scalar> tensor(tensor_extent(checked));
    return PolyMeasure(std::move(checked), std::move(tensor));
}

std::size_t PolyMeasure::flat_index(std::span<const unsigned> atom_tuple) const {
    if (atom_tuple.size() != factors_.size())
        throw Error("atom tuple arity must match the rank");
    std::size_t flat = 0;
    for (std::size_t j = 0; j < factors_.size(); ++j) {
        if (atom_tuple[j] >= factors_[j]->size())
            throw Error("atom index past the factor");
        flat += strides_[j] * atom_tuple[j];
    }
    return flat;
}

const Scalar& PolyMeasure::entry(std::span<const unsigned> atom_tuple) const {
    return tensor_[flat_index(atom_tuple)];
}

Scalar& PolyMeasure::entry_mut(std::span<const unsigned> atom_tuple) {
    return tensor_[flat_index(atom_tuple)];
}

bool PolyMeasure::equal_factors() const {
    for (std::size_t j = 1; j < factors_.size(); ++j)
        if (!same_space(factors_[0], factors_[j])) return false;
    return true;
}

bool operator==(const PolyMeasure& a, const PolyMeasure& b) {
    if (a.factors_.size() != b.factors_.size()) return false;
    for (std::size_t j = 0; j < a.factors_.size(); ++j)
        if (!same_space(a.factors_[j], b.factors_[j])) return false;
    return a.tensor_ == b.tensor_;
}

Scalar evaluate(const PolyMeasure& lambda, std::span<const MSet> sets) {
    check_arguments(lambda, sets);
    std::vector<std::vector<unsigned>> members(sets.size());
    for (std::size_t j = 0; j < sets.size(); ++j) {
        members[j] = sets[j].members();
        if (members[j].empty()) return Scalar();
    }
    std::vector<std::size_t> pos(sets.size(), 0);
    std::vector<unsigned> tuple(sets.size());
    Scalar total;
    for (;;) {
        for (std::size_t j = 0; j < sets.size(); ++j) tuple[j] = members[j][pos[j]];
        total += lambda.entry(tuple);
        std::size_t j = sets.size();
        for (;;) {
            if (j-- == 0) return total;
            if (++pos[j] < members[j].size()) break;
            pos[j] = 0;
        }
    }
}

SetFunction diagonal(const PolyMeasure& lambda) {
    if (!lambda.equal_factors()) throw Error("diagonal requires equal factors");
    const SpacePtr& space = lambda.factors().front();
    std::vector<Scalar> values(space->subset_count());
    std::vector<MSet> args(lambda.rank(), MSet::empty(space));
    for (std::uint32_t m = 0; m < space->subset_count(); ++m) {
        std::fill(args.begin(), args.end(), MSet(space, m));
        values[m] = evaluate(lambda, args);
    }
    return SetFunction(space, std::move(values));
}

SetFunction marginal(const PolyMeasure& lambda, unsigned slot) {
    if (slot >= lambda.rank()) throw Error("slot out of range");
    const SpacePtr& space = lambda.factors()[slot];
    std::size_t stride = 1;
    for (std::size_t j = lambda.rank(); j-- > slot + 1;)
        stride *= lambda.factors()[j]->size();
    std::vector<Scalar> per_atom(space->size());
    const auto& tensor = lambda.tensor();
    for (std::size_t flat = 0; flat < tensor.size(); ++flat)
        per_atom[(flat / stride) % space->size()] += tensor[flat];
    std::vector<Scalar> values(space->subset_count());
    for (std::uint32_t m = 0; m < space->subset_count(); ++m)
        for (unsigned a = 0; a < space->size(); ++a)
            if ((m >> a) & 1u) values[m] += per_atom[a];
    return SetFunction(space, std::move(values));
}

PolyMeasure fix_arguments(const PolyMeasure& lambda,
                          const std::map<unsigned, MSet>& assignment) {
    const unsigned d = lambda.rank();
    if (assignment.empty() || assignment.size() >= d)
        throw Error("fix at least one and at most d-1 slots");
    for (const auto& [slot, set] : assignment) {
        if (slot >= d) throw Error("slot out of range");
        if (!same_space(set.space(), lambda.factors()[slot])) throw Error("space mismatch");
    }
    std::vector<SpacePtr> out_factors;
    std::vector<unsigned> free_slots;
    for (unsigned j = 0; j < d; ++j) {
        if (assignment.count(j)) continue;
        out_factors.push_back(lambda.factors()[j]);
        free_slots.push_back(j);
    }
    PolyMeasure out = PolyMeasure::zero(std::move(out_factors));
    const auto& tensor = lambda.tensor();
    std::vector<unsigned> idx(d, 0);
    std::vector<unsigned> out_idx(free_slots.size());
    std::size_t flat = 0;
    do {
        bool keep = true;
        for (const auto& [slot, set] : assignment)
            if (!set.contains(idx[slot])) { keep = false; break; }
        if (keep) {
            for (std::size_t j = 0; j < free_slots.size(); ++j) out_idx[j] = idx[free_slots[j]];
            out.entry_mut(out_idx) += tensor[flat];
        }
        ++flat;
    } while (advance_atoms(idx, lambda.factors()));
    return out;
}

PolyMeasure symmetrize(const PolyMeasure& lambda) {
    if (!lambda.equal_factors()) throw Error("symmetrize requires equal factors");
    const unsigned d = lambda.rank();
    std::vector<std::vector<unsigned>> perms;
    std::vector<unsigned> perm(d);
    std::iota(perm.begin(), perm.end(), 0u);
    do perms.push_back(perm); while (std::next_permutation(perm.begin(), perm.end()));
    const Scalar inv_count(1, static_cast<long>(perms.size()));
    PolyMeasure out = PolyMeasure::zero(lambda.factors());
    std::vector<unsigned> idx(d, 0);
    std::vector<unsigned> permuted(d);
    do {
        Scalar acc;
        for (const auto& p : perms) {
            for (unsigned j = 0; j < d; ++j) permuted[j] = idx[p[j]];
            acc += lambda.entry(permuted);
        }
        out.entry_mut(idx) = acc * inv_count;
    } while (advance_atoms(idx, lambda.factors()));
    return out;
}

Scalar polarization_recover(const SetFunction& mu, std::span<const MSet> sets) {
    if (sets.empty()) throw Error("polarization needs at least one set");
    if (sets.size() > 24) throw Error("tuple arity too large");
    for (const auto& s : sets)
        if (!same_space(s.space(), mu.space())) throw Error("space mismatch");
    if (!pairwise_disjoint(sets)) throw Error("arguments must be pairwise disjoint");
    const unsigned d = static_cast<unsigned>(sets.size());
    Scalar total;
    for (std::uint32_t t = 0; t < (1u << d); ++t) {
        std::uint32_t member_union = 0;
        for (unsigned i = 0; i < d; ++i)
            if ((t >> i) & 1u) member_union |= sets[i].bits();
        if ((d - std::popcount(t)) % 2 != 0)
            total -= mu.at_mask(member_union);
        else
            total += mu.at_mask(member_union);
    }
    return total;
}

DiagonalPositivityReport is_diagonally_positive(const PolyMeasure& lambda) {
    SetFunction diag = diagonal(lambda);
    for (std::uint32_t m = 0; m < diag.subset_count(); ++m)
        if (diag.at_mask(m).sign() < 0)
            return {false, MSet(diag.space(), m)};
    return {true, std::nullopt};
}

Scalar variation(const PolyMeasure& lambda) {
    Scalar total;
    for (const auto& entry : lambda.tensor()) total += entry.abs();
    return total;
}

Scalar semivariation_exact(const PolyMeasure& lambda) {
    std::size_t sign_bits = 0;
    for (const auto& f : lambda.factors()) sign_bits += f->size();
    if (sign_bits > 24) throw Error("sign enumeration too large; use sampled mode");
    const unsigned d = lambda.rank();
    const unsigned j0 = widest_slot(lambda);
    std::vector<std::uint32_t> masks(d, 0);
    Scalar best;
    for (;;) {
        Scalar candidate = signed_contraction(lambda, j0, masks);
        if (candidate > best) best = candidate;
        bool done = true;
        unsigned j = d;
        while (j-- > 0) {
            if (j == j0) continue;
            if (++masks[j] < lambda.factors()[j]->subset_count()) { done = false; break; }
            masks[j] = 0;
        }
        if (done) return best;
    }
}

Scalar semivariation_sampled(const PolyMeasure& lambda, std::uint64_t seed, unsigned trials) {
    if (trials == 0) throw Error("trials must be at least 1");
    const unsigned d = lambda.rank();
    const unsigned j0 = widest_slot(lambda);
    std::vector<std::uint32_t> masks(d, 0);
    Scalar best;
    for (unsigned t = 0; t < trials; ++t) {
        SeededRng rng = SeededRng::for_trial(seed, t);
        for (unsigned j = 0; j < d; ++j)
            masks[j] = (j == j0)
                           ? 0
                           : static_cast<std::uint32_t>(rng.below(lambda.factors()[j]->subset_count()));
        Scalar candidate = signed_contraction(lambda, j0, masks);
        if (candidate > best) best = candidate;
    }
    return best;
}

RawCylinderTable::RawCylinderTable(std::vector<SpacePtr> factors)
    : factors_(checked_factors(std::move(factors))) {}

void RawCylinderTable::set(std::span<const MSet> sets, Scalar value) {
    if (sets.size() != factors_.size()) throw Error("need one set per factor");
    std::vector<std::uint32_t> key(sets.size());
    for (std::size_t j = 0; j < sets.size(); ++j) {
        if (!same_space(sets[j].space(), factors_[j])) throw Error("space mismatch");
        key[j] = sets[j].bits();
    }
    entries_.insert_or_assign(std::move(key), std::move(value));
}

std::optional<Scalar> RawCylinderTable::get(std::span<const std::uint32_t> masks) const {
    auto it = entries_.find(std::vector<std::uint32_t>(masks.begin(), masks.end()));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

SeparateAdditivityReport check_separate_additivity(const RawCylinderTable& raw) {
    const auto& factors = raw.factors();
    const unsigned d = static_cast<unsigned>(factors.size());
    std::uint64_t total = 1;
    for (const auto& f : factors) {
        // A table too large to hold in memory cannot be total either.
        if (total > (std::uint64_t{1} << 40) / f->subset_count()) throw Error("partial table");
        total *= f->subset_count();
    }
    if (raw.entry_count() != total) throw Error("partial table");

    std::vector<std::uint32_t> context(d, 0);
    for (unsigned j = 0; j < d; ++j) {
        std::fill(context.begin(), context.end(), 0);
        for (;;) {
            const std::uint32_t full = factors[j]->full_mask();
            for (std::uint32_t b = 0; b <= full; ++b) {
                const std::uint32_t rest = full & ~b;
                std::uint32_t c = 0;
                for (;;) {
                    context[j] = b | c;
                    Scalar whole = *raw.get(context);
                    context[j] = b;
                    Scalar left = *raw.get(context);
                    context[j] = c;
                    Scalar right = *raw.get(context);
                    Scalar parts = left + right;
                    if (whole != parts) {
                        context[j] = b | c;
                        std::vector<MSet> where;
                        where.reserve(d);
                        for (unsigned i = 0; i < d; ++i) where.emplace_back(factors[i], context[i]);
                        AdditivityViolation violation{j, std::move(where),
                                                      MSet(factors[j], b), MSet(factors[j], c),
                                                      std::move(whole), std::move(parts)};
                        return {false, std::move(violation)};
                    }
                    if (c == rest) break;
                    c = (c - rest) & rest; // next submask of rest, ascending
                }
            }
            bool done = true;
            unsigned i = d;
            while (i-- > 0) {
                if (i == j) continue;
                if (++context[i] < factors[i]->subset_count()) { done = false; break; }
                context[i] = 0;
            }
            if (done) break;
        }
    }
    return {true, std::nullopt};
}

RawCylinderTable to_cylinder_table(const PolyMeasure& lambda) {
    std::size_t mask_bits = 0;
    for (const auto& f : lambda.factors()) mask_bits += f->size();
    if (mask_bits > 24) throw Error("cylinder table too large");
    RawCylinderTable out(lambda.factors());
    std::vector<std::uint32_t> masks(lambda.rank(), 0);
    std::vector<MSet> sets;
    do {
        sets.clear();
        for (unsigned j = 0; j < lambda.rank(); ++j) sets.emplace_back(lambda.factors()[j], masks[j]);
        out.set(sets, evaluate(lambda, sets));
    } while (advance_masks(masks, lambda.factors()));
    return out;
}

PolyMeasure compress(const RawCylinderTable& raw) {
    SeparateAdditivityReport report = check_separate_additivity(raw);
    if (!report.additive) throw Error("table is not separately additive");
    PolyMeasure out = PolyMeasure::zero(raw.factors());
    std::vector<unsigned> idx(raw.factors().size(), 0);
    std::vector<std::uint32_t> key(raw.factors().size());
    do {
        for (std::size_t j = 0; j < key.size(); ++j) key[j] = 1u << idx[j];
        out.entry_mut(idx) = *raw.get(key);
    } while (advance_atoms(idx, raw.factors()));
    return out;
}

} // namespace qmeas
