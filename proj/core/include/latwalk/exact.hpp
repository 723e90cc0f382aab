#pragma once

#include "latwalk/bigint.hpp"
#include "latwalk/error.hpp"
#include "latwalk/point.hpp"
#include "latwalk/step_law.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace latwalk {

/// Exact n-step distribution: integer numerators over the implicit
/// denominator D^n. Immutable snapshot; stored dense over its bounding box
/// when occupancy is at least 1/8, as a sorted sparse list below that.
class ExactDist {
  public:
    ExactDist() = default;

    /// n = 0 distribution: unit mass at the origin.
    static ExactDist point_mass(const StepLaw& law);

    /// Wraps a row-major dense grid of numerators, choosing the storage
    /// representation by occupancy.
    static ExactDist from_dense(int n, BigInt base_den, Box box, std::vector<BigInt> cells);

    int n() const noexcept { return n_; }
    const BigInt& base_denominator() const noexcept { return base_den_; }
    /// D^n.
    BigInt denominator() const { return bigint_pow(base_den_, static_cast<unsigned long>(n_)); }
    const Box& box() const noexcept { return box_; }
    bool dense_storage() const noexcept { return dense_; }
    std::size_t support_size() const noexcept { return nnz_; }

    BigInt mass_at(LatticePoint p) const;
    BigInt origin_mass() const { return mass_at({0, 0}); }
    /// Checksum: sum of all numerators (equals D^n for a valid distribution).
    BigInt mass_total() const;
    /// mass_at(p) / D^n, reduced.
    Rational mass_fraction(LatticePoint p) const;

    /// Visits nonzero cells in row-major order as f(LatticePoint, const BigInt&).
    template <class F> void for_each(F&& f) const {
        if (dense_) {
            std::size_t i = 0;
            for (std::int64_t y = box_.ymin; y <= box_.ymax; ++y)
                for (std::int64_t x = box_.xmin; x <= box_.xmax; ++x, ++i)
                    if (mpz_sgn(cells_[i].get_mpz_t()) != 0) f(LatticePoint{x, y}, cells_[i]);
        } else {
            for (const auto& [p, m] : sparse_) f(p, m);
        }
    }

    /// Same n, same base denominator, identical mass function.
    friend bool operator==(const ExactDist& a, const ExactDist& b);

  private:
    int n_ = 0;
    BigInt base_den_ = 1;
    Box box_{0, 0, 0, 0};
    bool dense_ = false;
    std::size_t nnz_ = 0;
    std::vector<BigInt> cells_;
    std::vector<std::pair<LatticePoint, BigInt>> sparse_{{{0, 0}, BigInt(1)}};
};

/// One convolution with the increment law: the distribution of S_{n+1}.
/// Throws DenominatorMismatch when dist and law disagree on D.
ExactDist step(const ExactDist& dist, const StepLaw& law);

/// Distribution of the sum of two independent walks with the given exact
/// distributions (same base denominator required). n = a.n + b.n.
ExactDist convolve_dists(const ExactDist& a, const ExactDist& b);

/// Distribution at 2n from the distribution at n.
ExactDist self_convolve(const ExactDist& dist);

enum class ExactStrategy {
    automatic, // doubling while supports stay small, stepping otherwise
    doubling,  // binary decomposition of n via self-convolution
    stepping,  // n single convolutions with the law
};

struct ExactConfig {
    int cap = 512; // largest n served by the exact backend
    ExactStrategy strategy = ExactStrategy::automatic;
};

/// Exact n-step distribution. Throws ExactCapExceeded beyond cfg.cap
/// (the float backend has no such cap) and InvalidArgument for n < 0.
ExactDist distribution_at(const StepLaw& law, int n, const ExactConfig& cfg = {});

/// P[S_n = 0], reduced.
Rational return_prob(const StepLaw& law, int n, const ExactConfig& cfg = {});

/// Exact E ||S_n||^2 of a computed distribution, reduced.
Rational second_moment_of_dist(const ExactDist& dist);

/// sum_p mass(p) * ||p||^2, the unreduced numerator over D^n.
BigInt norm2_weighted_sum(const ExactDist& dist);

/// sum_p mass(p)^2, the unreduced numerator of sum_x P[S_n=x]^2 over D^(2n).
BigInt sum_of_squares(const ExactDist& dist);

// --- lattice discs -------------------------------------------------------
// The disc {p : ||p||^2 * tden < tnum} with a strict integer comparison.

long long disc_point_count(const BigInt& tnum, const BigInt& tden);
std::vector<LatticePoint> disc_points(const BigInt& tnum, const BigInt& tden);

/// B_n = {x : ||x||^2 < 2 n m2} in row-major order. Requires n >= 1 and
/// m2 > 0 (throws ZeroSecondMoment on a degenerate walk).
std::vector<LatticePoint> ball_points(long n, const Rational& m2);
long long ball_point_count(long n, const Rational& m2);

/// Exact sum of dist masses over the given points, reduced over D^n.
Rational mass_in_ball(const ExactDist& dist, std::span<const LatticePoint> ball);

// --- incremental stepping engine ------------------------------------------

/// Walks the exact distribution forward one convolution at a time with
/// buffer reuse; the cheap accessors read the current distribution without
/// copying. snapshot() produces an immutable ExactDist.
class ExactWalker {
  public:
    explicit ExactWalker(StepLaw law);

    const StepLaw& law() const noexcept { return law_; }
    int n() const noexcept { return n_; }
    /// D^n for the current n.
    const BigInt& denominator() const noexcept { return den_pow_; }

    void advance();
    void advance_to(int n);

    BigInt mass_at(LatticePoint p) const;
    BigInt origin_mass() const { return mass_at({0, 0}); }
    BigInt mass_total() const;
    BigInt norm2_weighted_sum() const;
    BigInt sum_of_squares() const;
    /// Sum of masses over {p : ||p||^2 * tden < tnum}.
    BigInt mass_in_disc(const BigInt& tnum, const BigInt& tden) const;
    std::size_t support_size() const;
    const Box& active_box() const noexcept { return active_; }

    ExactDist snapshot() const;

  private:
    void ensure_capacity(const Box& needed);

    StepLaw law_;
    std::vector<unsigned long> atom_w_ui_; // weights, when all fit an unsigned long
    bool ui_weights_ = false;
    std::int64_t axmin_ = 0, axmax_ = 0, aymin_ = 0, aymax_ = 0; // atom offset extremes

    int n_ = 0;
    BigInt den_pow_ = 1;
    Box cap_{0, -1, 0, -1};    // allocated box (both buffers share this layout)
    Box active_{0, 0, 0, 0};   // tight support bounding box
    std::vector<BigInt> cur_, next_;
};

// --- return-probability series ---------------------------------------------

enum class Backend { exact, floating };

struct SeriesRow {
    long n = 0;
    std::optional<Rational> p_exact; // populated by the exact backend
    double p_return = 0.0;
    double partial_sum = 0.0; // sum of p_return over all rows up to n
};

struct FloatConfig; // see float_walk.hpp

/// Rows for n = 0..n_max, computed by incremental stepping (one convolution
/// per n). Exact backend: p_exact reduced, partial sums accumulated exactly
/// and rendered to double. Float backend: compensated summation.
std::vector<SeriesRow> return_series(const StepLaw& law, long n_max, Backend backend,
                                     const ExactConfig& cfg = {});

} // namespace latwalk
