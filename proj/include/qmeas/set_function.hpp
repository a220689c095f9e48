#pragma once

#include "qmeas/scalar.hpp"
#include "qmeas/space.hpp"

#include <functional>
#include <vector>

namespace qmeas {

/**
 * An arbitrary rational-valued function on all measurable sets of a
 * FiniteSpace: a total table of 2^k values indexed by subset mask.
 *
 * Nothing is enforced beyond totality; positivity and grounding
 * (mu(emptyset) = 0) are reported by checkers, not by the type.
 */
class SetFunction {
public:
    SetFunction(SpacePtr space, std::vector<Scalar> values);

    static SetFunction zero(SpacePtr space);
    static SetFunction tabulate(SpacePtr space,
                                const std::function<Scalar(const MSet&)>& f);

    const SpacePtr& space() const { return space_; }
    std::uint32_t subset_count() const { return space_->subset_count(); }

    const Scalar& at(const MSet& s) const;
    const Scalar& at_mask(std::uint32_t bits) const { return values_[bits]; }
    const std::vector<Scalar>& values() const { return values_; }

    friend bool operator==(const SetFunction& a, const SetFunction& b) {
        return same_space(a.space_, b.space_) && a.values_ == b.values_;
    }

private:
    SpacePtr space_;
    std::vector<Scalar> values_;
};

} // namespace qmeas
