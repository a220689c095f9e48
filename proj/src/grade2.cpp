#include "qmeas/grade2.hpp"

#include "qmeas/error.hpp"

namespace qmeas {

PolyMeasure reconstruct(const SetFunction& mu) {
    const SpacePtr& space = mu.space();
    const unsigned k = static_cast<unsigned>(space->size());
    const Scalar half(1, 2);
    std::vector<Scalar> tensor(static_cast<std::size_t>(k) * k);
    for (unsigned a = 0; a < k; ++a) {
        for (unsigned b = 0; b < k; ++b) {
            const std::uint32_t ma = 1u << a;
            const std::uint32_t mb = 1u << b;
            Scalar value = mu.at_mask(ma | mb) + mu.at_mask(ma & mb)
                         - mu.at_mask(ma & ~mb) - mu.at_mask(mb & ~ma);
            tensor[static_cast<std::size_t>(a) * k + b] = value * half;
        }
    }
    return PolyMeasure({space, space}, std::move(tensor));
}

bool roundtrip_check(const SetFunction& mu) {
    return diagonal(reconstruct(mu)) == mu;
}

bool inverse_roundtrip_check(const PolyMeasure& lambda) {
    if (lambda.rank() != 2) throw Error("needs a rank-2 polymeasure");
    if (!lambda.equal_factors()) throw Error("diagonal requires equal factors");
    const unsigned k = static_cast<unsigned>(lambda.factors().front()->size());
    for (unsigned a = 0; a < k; ++a)
        for (unsigned b = a + 1; b < k; ++b) {
            const unsigned ab[] = {a, b};
            const unsigned ba[] = {b, a};
            if (lambda.entry(ab) != lambda.entry(ba)) throw Error("symmetrize first");
        }
    return reconstruct(diagonal(lambda)) == lambda;
}

bool positivity_correspondence(const SetFunction& mu) {
    if (!roundtrip_check(mu)) throw Error("not a grade-2 measure");
    bool mu_positive = true;
    for (const auto& v : mu.values())
        if (v.sign() < 0) { mu_positive = false; break; }
    return mu_positive == is_diagonally_positive(reconstruct(mu)).positive;
}

Scalar sup_bound(const SetFunction& mu) {
    Scalar best;
    for (const auto& v : mu.values()) {
        Scalar a = v.abs();
        if (a > best) best = a;
    }
    return best;
}

} // namespace qmeas
