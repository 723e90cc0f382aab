#pragma once

#include "latwalk/bigint.hpp"
#include "latwalk/error.hpp"
#include "latwalk/point.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace latwalk {

/// Finitely-supported increment law on Z^2: positive integer weights over a
/// common denominator D, with sum(weights) == D. Immutable after
/// construction; all operations on laws are pure functions, so values can be
/// shared freely across threads.
class StepLaw {
  public:
    using Atom = std::pair<LatticePoint, BigInt>;

    /// Builds a law from raw atoms, enforcing every invariant. Throws
    /// EmptySupport, NonPositiveDenominator, NonPositiveWeight,
    /// DuplicateAtom or WeightSumMismatch.
    static StepLaw validate(std::vector<Atom> atoms, BigInt denominator);

    const BigInt& denominator() const noexcept { return den_; }
    /// Atoms in row-major (y, x) order; every stored weight is positive.
    const std::vector<Atom>& atoms() const noexcept { return atoms_; }
    std::size_t atom_count() const noexcept { return atoms_.size(); }
    /// Weight of p, zero when p is not an atom.
    BigInt weight_at(LatticePoint p) const;
    /// max over atoms of max(|x|, |y|).
    std::int64_t radius() const noexcept { return radius_; }

    friend bool operator==(const StepLaw& a, const StepLaw& b) {
        return a.den_ == b.den_ && a.atoms_ == b.atoms_;
    }

  private:
    StepLaw() = default;
    BigInt den_;
    std::vector<Atom> atoms_;
    std::int64_t radius_ = 0;
};

/// True iff w(p) == w(-p) for every atom (missing atom counts as weight 0).
bool is_symmetric(const StepLaw& law);

/// Law of -X: each atom p -> w becomes -p -> w.
StepLaw reflect(const StepLaw& law);

/// Law of X + Y for independent X ~ a, Y ~ b. Denominator D_a * D_b.
StepLaw convolve_laws(const StepLaw& a, const StepLaw& b);

/// Increment law of the difference of two i.i.d. walks:
/// convolve_laws(law, reflect(law)). Always symmetric.
StepLaw difference_law(const StepLaw& law);

/// Exact componentwise expectation (E X^x, E X^y), reduced.
std::pair<Rational, Rational> mean(const StepLaw& law);

/// Exact E ||X||^2, reduced.
Rational second_moment(const StepLaw& law);

/// sum_p w(p) * ||p||^2, the unreduced numerator of second_moment over D.
BigInt weighted_norm2_sum(const StepLaw& law);

} // namespace latwalk
