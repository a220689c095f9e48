#include "qmeas/random_gen.hpp"

#include "qmeas/error.hpp"

namespace qmeas {

SpacePtr default_space(unsigned k) {
    if (k == 0 || k > FiniteSpace::kMaxAtoms) throw Error("at most 16 atoms in a space");
    std::vector<std::string> atoms(k);
    for (unsigned i = 0; i < k; ++i) atoms[i] = std::string(1, static_cast<char>('a' + i));
    return make_space(std::move(atoms));
}

SetFunction random_set_function(const SpacePtr& space, SeededRng& rng, long bound) {
    std::vector<Scalar> values(space->subset_count());
    for (auto& v : values) v = rng.rational(bound);
    return SetFunction(space, std::move(values));
}

PolyMeasure random_polymeasure(std::vector<SpacePtr> factors, SeededRng& rng, long bound) {
    PolyMeasure out = PolyMeasure::zero(std::move(factors));
    std::vector<Scalar> tensor = out.tensor();
    for (auto& v : tensor) v = rng.rational(bound);
    return PolyMeasure(out.factors(), std::move(tensor));
}

PolyMeasure random_symmetric_bimeasure(const SpacePtr& space, SeededRng& rng, long bound) {
    PolyMeasure out = PolyMeasure::zero({space, space});
    const unsigned k = static_cast<unsigned>(space->size());
    for (unsigned a = 0; a < k; ++a)
        for (unsigned b = a; b < k; ++b) {
            Scalar v = rng.rational(bound);
            const unsigned ab[] = {a, b};
            const unsigned ba[] = {b, a};
            out.entry_mut(ab) = v;
            out.entry_mut(ba) = std::move(v);
        }
    return out;
}

SetFunction random_grade2_measure(const SpacePtr& space, SeededRng& rng, long bound) {
    return diagonal(random_symmetric_bimeasure(space, rng, bound));
}

std::vector<MSet> random_disjoint_tuple(const SpacePtr& space, unsigned m, SeededRng& rng) {
    if (m == 0) throw Error("tuple arity must be at least 1");
    std::vector<std::uint32_t> masks(m, 0);
    for (unsigned atom = 0; atom < space->size(); ++atom) {
        std::uint64_t bin = rng.below(m + 1);
        if (bin > 0) masks[bin - 1] |= 1u << atom;
    }
    std::vector<MSet> out;
    out.reserve(m);
    for (std::uint32_t mask : masks) out.emplace_back(space, mask);
    return out;
}

} // namespace qmeas
