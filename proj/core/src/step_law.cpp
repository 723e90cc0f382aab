#include "latwalk/step_law.hpp"

#include <algorithm>
#include <map>

namespace latwalk {

StepLaw StepLaw::validate(std::vector<Atom> atoms, BigInt denominator) {
    if (denominator <= 0)
        raise(Errc::non_positive_denominator,
              "denominator must be a positive integer, got " + to_string(denominator));
    if (atoms.empty()) raise(Errc::empty_support, "a step law needs at least one atom");

    std::sort(atoms.begin(), atoms.end(),
              [](const Atom& a, const Atom& b) { return a.first < b.first; });
    BigInt sum = 0;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        const auto& [p, w] = atoms[i];
        if (w <= 0)
            raise(Errc::non_positive_weight, "atom (" + std::to_string(p.x) + "," +
                                                 std::to_string(p.y) + ") has weight " +
                                                 to_string(w));
        if (i > 0 && atoms[i - 1].first == p)
            raise(Errc::duplicate_atom,
                  "atom (" + std::to_string(p.x) + "," + std::to_string(p.y) + ") listed twice");
        sum += w;
    }
    if (sum != denominator)
        raise(Errc::weight_sum_mismatch, "weights sum to " + to_string(sum) +
                                             " but denominator is " + to_string(denominator));

    StepLaw law;
    law.den_ = std::move(denominator);
    law.atoms_ = std::move(atoms);
    for (const auto& [p, w] : law.atoms_)
        law.radius_ = std::max({law.radius_, std::abs(p.x), std::abs(p.y)});
    return law;
}

BigInt StepLaw::weight_at(LatticePoint p) const {
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), p,
                               [](const Atom& a, LatticePoint q) { return a.first < q; });
    if (it != atoms_.end() && it->first == p) return it->second;
    return 0;
}

bool is_symmetric(const StepLaw& law) {
    for (const auto& [p, w] : law.atoms())
        if (law.weight_at(-p) != w) return false;
    return true;
}

StepLaw reflect(const StepLaw& law) {
    std::vector<StepLaw::Atom> atoms;
    atoms.reserve(law.atom_count());
    for (const auto& [p, w] : law.atoms()) atoms.emplace_back(-p, w);
    return StepLaw::validate(std::move(atoms), law.denominator());
}

StepLaw convolve_laws(const StepLaw& a, const StepLaw& b) {
    std::map<LatticePoint, BigInt> acc;
    for (const auto& [pa, wa] : a.atoms())
        for (const auto& [pb, wb] : b.atoms()) acc[pa + pb] += wa * wb;
    std::vector<StepLaw::Atom> atoms(acc.begin(), acc.end());
    return StepLaw::validate(std::move(atoms), a.denominator() * b.denominator());
}

StepLaw difference_law(const StepLaw& law) { return convolve_laws(law, reflect(law)); }

std::pair<Rational, Rational> mean(const StepLaw& law) {
    BigInt sx = 0, sy = 0;
    for (const auto& [p, w] : law.atoms()) {
        sx += w * p.x;
        sy += w * p.y;
    }
    return {make_rational(sx, law.denominator()), make_rational(sy, law.denominator())};
}

BigInt weighted_norm2_sum(const StepLaw& law) {
    BigInt s = 0;
    for (const auto& [p, w] : law.atoms()) s += w * norm2(p);
    return s;
}

Rational second_moment(const StepLaw& law) {
    return make_rational(weighted_norm2_sum(law), law.denominator());
}

} // namespace latwalk
