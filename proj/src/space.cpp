#include "qmeas/space.hpp"

#include "qmeas/error.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <unordered_set>

namespace qmeas {

FiniteSpace::FiniteSpace(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty()) throw Error("a space needs at least one atom");
    if (atoms_.size() > kMaxAtoms)
        throw Error("at most 16 atoms are supported (all 2^k subsets are materialized)");
    std::unordered_set<std::string_view> seen;
    for (const auto& a : atoms_)
        if (!seen.insert(a).second) throw Error("atom labels must be pairwise distinct");
}

SpacePtr make_space(std::vector<std::string> atoms) {
    return std::make_shared<const FiniteSpace>(std::move(atoms));
}

bool same_space(const SpacePtr& a, const SpacePtr& b) {
    return a == b || (a && b && *a == *b);
}

MSet::MSet(SpacePtr space, std::uint32_t bits) : space_(std::move(space)), bits_(bits) {
    if (!space_) throw Error("measurable set without a space");
    if (bits_ > space_->full_mask()) throw Error("set contains atom indices past the space");
}

MSet MSet::full(SpacePtr space) {
    std::uint32_t m = space->full_mask();
    return MSet(std::move(space), m);
}

MSet MSet::of(SpacePtr space, std::initializer_list<unsigned> members) {
    std::uint32_t bits = 0;
    for (unsigned i : members) {
        if (i >= space->size()) throw Error("set contains atom indices past the space");
        bits |= 1u << i;
    }
    return MSet(std::move(space), bits);
}

std::size_t MSet::cardinality() const {
    return static_cast<std::size_t>(std::popcount(bits_));
}

std::vector<unsigned> MSet::members() const {
    std::vector<unsigned> out;
    for (unsigned i = 0; i < space_->size(); ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

bool operator==(const MSet& a, const MSet& b) {
    return a.bits_ == b.bits_ && same_space(a.space_, b.space_);
}

std::uint32_t mask_from_key(const FiniteSpace& space, std::string_view key) {
    if (key.empty()) return 0;
    std::uint32_t bits = 0;
    int prev = -1;
    std::size_t pos = 0;
    while (pos <= key.size()) {
        std::size_t comma = key.find(',', pos);
        std::string_view part = key.substr(pos, comma == std::string_view::npos ? key.size() - pos : comma - pos);
        unsigned idx = 0;
        auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), idx);
        if (ec != std::errc() || p != part.data() + part.size() ||
            (part.size() > 1 && part.front() == '0'))
            throw Error("bad set key \"" + std::string(key) + "\"");
        if (idx >= space.size()) throw Error("set key index past the space");
        if (static_cast<int>(idx) <= prev)
            throw Error("set key indices must be strictly increasing");
        prev = static_cast<int>(idx);
        bits |= 1u << idx;
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
        if (pos == key.size()) throw Error("bad set key \"" + std::string(key) + "\"");
    }
    return bits;
}

std::string key_from_mask(std::uint32_t bits) {
    std::string out;
    for (unsigned i = 0; i < 32; ++i) {
        if ((bits >> i) & 1u) {
            if (!out.empty()) out += ',';
            out += std::to_string(i);
        }
    }
    return out;
}

MSet MSet::from_key(SpacePtr space, std::string_view key) {
    std::uint32_t bits = mask_from_key(*space, key);
    return MSet(std::move(space), bits);
}

std::string MSet::key() const {
    return key_from_mask(bits_);
}

namespace {

const SpacePtr& check_same(const MSet& a, const MSet& b) {
    if (!same_space(a.space(), b.space())) throw Error("space mismatch");
    return a.space();
}

} // namespace

MSet set_union(const MSet& a, const MSet& b) {
    return MSet(check_same(a, b), a.bits() | b.bits());
}

MSet set_intersection(const MSet& a, const MSet& b) {
    return MSet(check_same(a, b), a.bits() & b.bits());
}

MSet set_difference(const MSet& a, const MSet& b) {
    return MSet(check_same(a, b), a.bits() & ~b.bits());
}

MSet set_complement(const MSet& a) {
    return MSet(a.space(), a.space()->full_mask() & ~a.bits());
}

bool disjoint(const MSet& a, const MSet& b) {
    check_same(a, b);
    return (a.bits() & b.bits()) == 0;
}

bool pairwise_disjoint(std::span<const MSet> sets) {
    std::uint32_t used = 0;
    for (const auto& s : sets) {
        if (!sets.empty() && !same_space(s.space(), sets.front().space()))
            throw Error("space mismatch");
        if (used & s.bits()) return false;
        used |= s.bits();
    }
    return true;
}

namespace {

std::uint64_t checked_tuple_count(std::size_t k, unsigned m) {
    // (m+1)^k with the feasibility guard applied.
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < k; ++i) {
        n *= m + 1;
        if (n > DisjointTuples::kMaxTuples) throw Error("enumeration too large");
    }
    return n;
}

} // namespace

DisjointTuples::DisjointTuples(SpacePtr space, unsigned m) : space_(std::move(space)), m_(m) {
    if (m_ < 1) throw Error("tuple arity must be at least 1");
    if (m_ + 1 > kMaxBins + 1) throw Error("tuple arity past the bin bound");
    size_ = checked_tuple_count(space_->size(), m_);
}

DisjointTuples::iterator::iterator(const DisjointTuples* owner)
    : owner_(owner), masks_(owner->m_, 0), free_(owner->m_, 0) {
    std::uint32_t full = owner_->space_->full_mask();
    for (unsigned i = 0; i < owner_->m_; ++i) free_[i] = full;
}

DisjointTuples::iterator& DisjointTuples::iterator::operator++() {
    // Advance the last component to its next submask (ascending numeric
    // order via s -> (s - M) & M); on wrap-around carry leftwards, then
    // reset everything to the right to the empty set.
    int i = static_cast<int>(owner_->m_) - 1;
    while (i >= 0) {
        masks_[i] = (masks_[i] - free_[i]) & free_[i];
        if (masks_[i] != 0) break; // 0 only on wrap
        --i;
    }
    if (i < 0) {
        done_ = true;
        return *this;
    }
    std::uint32_t used = (i == 0 ? 0u : owner_->space_->full_mask() & ~free_[i]) ;
    used |= masks_[i];
    for (unsigned j = i + 1; j < owner_->m_; ++j) {
        masks_[j] = 0;
        free_[j] = owner_->space_->full_mask() & ~used;
    }
    return *this;
}

std::vector<MSet> DisjointTuples::at(std::uint64_t index) const {
    if (index >= size_) throw Error("tuple index out of range");
    // Walk components left to right; for a candidate prefix, the number of
    // completions is (bins remaining + 1)^(free atoms).
    std::vector<MSet> out;
    out.reserve(m_);
    std::uint32_t free = space_->full_mask();
    for (unsigned comp = 0; comp < m_; ++comp) {
        unsigned bins_after = m_ - comp - 1;
        std::uint32_t s = 0;
        for (;;) {
            std::uint64_t block = 1;
            std::size_t free_atoms = static_cast<std::size_t>(std::popcount(free & ~s));
            for (std::size_t i = 0; i < free_atoms; ++i) block *= bins_after + 1;
            if (index < block) break;
            index -= block;
            s = (s - free) & free;
        }
        out.emplace_back(space_, s);
        free &= ~s;
    }
    return out;
}

std::vector<MSet> DisjointTuples::to_msets(std::span<const std::uint32_t> masks) const {
    std::vector<MSet> out;
    out.reserve(masks.size());
    for (std::uint32_t b : masks) out.emplace_back(space_, b);
    return out;
}

} // namespace qmeas
