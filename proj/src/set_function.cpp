#include "qmeas/set_function.hpp"

#include "qmeas/error.hpp"

namespace qmeas {

SetFunction::SetFunction(SpacePtr space, std::vector<Scalar> values)
    : space_(std::move(space)), values_(std::move(values)) {
    if (!space_) throw Error("set function without a space");
    if (values_.size() != space_->subset_count())
        throw Error("set function table must cover all 2^k subsets");
}

SetFunction SetFunction::zero(SpacePtr space) {
    std::vector<Scalar> v(space->subset_count());
    return SetFunction(std::move(space), std::move(v));
}

SetFunction SetFunction::tabulate(SpacePtr space,
                                  const std::function<Scalar(const MSet&)>& f) {
    std::vector<Scalar> v;
    v.reserve(space->subset_count());
    for (std::uint32_t bits = 0; bits < space->subset_count(); ++bits)
        v.push_back(f(MSet(space, bits)));
    return SetFunction(std::move(space), std::move(v));
}

const Scalar& SetFunction::at(const MSet& s) const {
    if (!same_space(s.space(), space_)) throw Error("space mismatch");
    return values_[s.bits()];
}

} // namespace qmeas
