#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qmeas {

/**
 * A finite measurable space, given by its ordered list of atoms. The
 * sigma-algebra is the full power set of the atom list, so a measurable
 * set is just a subset of atoms.
 *
 * At most 16 atoms: every consumer materializes all 2^k subsets.
 */
class FiniteSpace {
public:
    static constexpr std::size_t kMaxAtoms = 16;

    explicit FiniteSpace(std::vector<std::string> atoms);

    std::size_t size() const { return atoms_.size(); }          // k
    std::uint32_t subset_count() const { return 1u << atoms_.size(); } // 2^k
    std::uint32_t full_mask() const { return subset_count() - 1; }
    const std::vector<std::string>& atoms() const { return atoms_; }

    friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
        return a.atoms_ == b.atoms_;
    }

private:
    std::vector<std::string> atoms_;
};

using SpacePtr = std::shared_ptr<const FiniteSpace>;

SpacePtr make_space(std::vector<std::string> atoms);

bool same_space(const SpacePtr& a, const SpacePtr& b);

/**
 * A measurable set: a subset of a space's atoms, stored as a bit mask
 * (bit i set = atom i is a member).
 */
class MSet {
public:
    MSet(SpacePtr space, std::uint32_t bits);

    static MSet empty(SpacePtr space) { return MSet(std::move(space), 0); }
    static MSet full(SpacePtr space);
    static MSet of(SpacePtr space, std::initializer_list<unsigned> members);

    // Canonical key: member indices ascending, comma separated ("" for the
    // empty set, "0,2" for {0,2}).
    static MSet from_key(SpacePtr space, std::string_view key);
    std::string key() const;

    std::uint32_t bits() const { return bits_; }
    std::size_t cardinality() const;
    std::vector<unsigned> members() const;
    bool contains(unsigned atom) const { return (bits_ >> atom) & 1u; }
    bool is_empty() const { return bits_ == 0; }
    const SpacePtr& space() const { return space_; }

    friend bool operator==(const MSet& a, const MSet& b);

private:
    SpacePtr space_;
    std::uint32_t bits_;
};

std::uint32_t mask_from_key(const FiniteSpace& space, std::string_view key);
std::string key_from_mask(std::uint32_t bits);

// Boolean set algebra. Both arguments must live on the same space.
MSet set_union(const MSet& a, const MSet& b);
MSet set_intersection(const MSet& a, const MSet& b);
MSet set_difference(const MSet& a, const MSet& b);
MSet set_complement(const MSet& a);

bool disjoint(const MSet& a, const MSet& b);
bool pairwise_disjoint(std::span<const MSet> sets);

/**
 * The stream of all m-tuples (S_1,...,S_m) of pairwise disjoint measurable
 * sets of a space, in lexicographic order of the tuple of set masks
 * (component 0 most significant). Components may be empty; there are
 * exactly (m+1)^k tuples in total (each atom is assigned to one of the m
 * components or to none).
 *
 * The stream is restartable and random-accessible by index, so it can be
 * partitioned across workers by index range.
 */
class DisjointTuples {
public:
    static constexpr unsigned kMaxBins = 8;
    static constexpr std::uint64_t kMaxTuples = 100'000'000;

    DisjointTuples(SpacePtr space, unsigned m);

    std::uint64_t size() const { return size_; }
    unsigned arity() const { return m_; }
    const SpacePtr& space() const { return space_; }

    // Tuple at a given position of the stream.
    std::vector<MSet> at(std::uint64_t index) const;

    class iterator {
    public:
        using value_type = std::vector<std::uint32_t>;

        iterator() : owner_(nullptr), done_(true) {}
        explicit iterator(const DisjointTuples* owner);

        // Masks of the current tuple, component 0 first.
        const std::vector<std::uint32_t>& operator*() const { return masks_; }
        iterator& operator++();
        friend bool operator==(const iterator& a, const iterator& b) {
            return a.done_ == b.done_ && (a.done_ || a.masks_ == b.masks_);
        }
        friend bool operator!=(const iterator& a, const iterator& b) { return !(a == b); }

    private:
        const DisjointTuples* owner_;
        std::vector<std::uint32_t> masks_;
        std::vector<std::uint32_t> free_; // free_[i]: atoms unused by components < i
        bool done_ = false;
    };

    iterator begin() const { return iterator(this); }
    iterator end() const { return iterator(); }

    std::vector<MSet> to_msets(std::span<const std::uint32_t> masks) const;

private:
    SpacePtr space_;
    unsigned m_;
    std::uint64_t size_;
};

} // namespace qmeas
