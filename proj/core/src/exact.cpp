#include "latwalk/exact.hpp"

#include "latwalk/float_walk.hpp"

#include <algorithm>
#include <cassert>

namespace latwalk {

namespace {

Box minkowski(const Box& a, const Box& b) {
    return {a.xmin + b.xmin, a.xmax + b.xmax, a.ymin + b.ymin, a.ymax + b.ymax};
}

Box atom_box(const StepLaw& law) {
    Box b{law.atoms().front().first.x, law.atoms().front().first.x,
          law.atoms().front().first.y, law.atoms().front().first.y};
    for (const auto& [p, w] : law.atoms()) {
        b.xmin = std::min(b.xmin, p.x);
        b.xmax = std::max(b.xmax, p.x);
        b.ymin = std::min(b.ymin, p.y);
        b.ymax = std::max(b.ymax, p.y);
    }
    return b;
}

std::int64_t checked_si(const BigInt& z, const char* what) {
    if (!z.fits_slong_p()) raise(Errc::invalid_argument, std::string(what) + " out of range");
    return z.get_si();
}

} // namespace

ExactDist ExactDist::point_mass(const StepLaw& law) {
    ExactDist d;
    d.n_ = 0;
    d.base_den_ = law.denominator();
    d.box_ = {0, 0, 0, 0};
    d.dense_ = true;
    d.nnz_ = 1;
    d.cells_.emplace_back(1);
    d.sparse_.clear();
    return d;
}

ExactDist ExactDist::from_dense(int n, BigInt base_den, Box box, std::vector<BigInt> cells) {
    assert(static_cast<std::int64_t>(cells.size()) == box.cells());
    ExactDist d;
    d.n_ = n;
    d.base_den_ = std::move(base_den);
    d.box_ = box;
    d.nnz_ = 0;
    for (const auto& c : cells)
        if (mpz_sgn(c.get_mpz_t()) != 0) ++d.nnz_;
    if (static_cast<std::int64_t>(d.nnz_) * 8 >= box.cells()) {
        d.dense_ = true;
        d.cells_ = std::move(cells);
        d.sparse_.clear();
    } else {
        d.dense_ = false;
        d.sparse_.clear();
        d.sparse_.reserve(d.nnz_);
        std::size_t i = 0;
        for (std::int64_t y = box.ymin; y <= box.ymax; ++y)
            for (std::int64_t x = box.xmin; x <= box.xmax; ++x, ++i)
                if (mpz_sgn(cells[i].get_mpz_t()) != 0)
                    d.sparse_.emplace_back(LatticePoint{x, y}, std::move(cells[i]));
    }
    return d;
}

BigInt ExactDist::mass_at(LatticePoint p) const {
    if (!box_.contains(p)) return 0;
    if (dense_) return cells_[box_.index(p)];
    auto it = std::lower_bound(sparse_.begin(), sparse_.end(), p,
                               [](const auto& a, LatticePoint q) { return a.first < q; });
    if (it != sparse_.end() && it->first == p) return it->second;
    return 0;
}

BigInt ExactDist::mass_total() const {
    BigInt s = 0;
    for_each([&](LatticePoint, const BigInt& m) { s += m; });
    return s;
}

Rational ExactDist::mass_fraction(LatticePoint p) const {
    return make_rational(mass_at(p), denominator());
}

bool operator==(const ExactDist& a, const ExactDist& b) {
    if (a.n_ != b.n_ || a.base_den_ != b.base_den_ || a.nnz_ != b.nnz_) return false;
    bool equal = true;
    a.for_each([&](LatticePoint p, const BigInt& m) {
        if (equal && b.mass_at(p) != m) equal = false;
    });
    return equal;
}

ExactDist step(const ExactDist& dist, const StepLaw& law) {
    if (dist.base_denominator() != law.denominator())
        raise(Errc::denominator_mismatch, "distribution over D=" +
                                              to_string(dist.base_denominator()) +
                                              " stepped with law over D=" +
                                              to_string(law.denominator()));
    Box out = minkowski(dist.box(), atom_box(law));
    std::vector<BigInt> cells(static_cast<std::size_t>(out.cells()));
    dist.for_each([&](LatticePoint p, const BigInt& m) {
        for (const auto& [a, w] : law.atoms()) {
            BigInt& c = cells[out.index(p + a)];
            mpz_addmul(c.get_mpz_t(), m.get_mpz_t(), w.get_mpz_t());
        }
    });
    return ExactDist::from_dense(dist.n() + 1, dist.base_denominator(), out, std::move(cells));
}

ExactDist convolve_dists(const ExactDist& a, const ExactDist& b) {
    if (a.base_denominator() != b.base_denominator())
        raise(Errc::denominator_mismatch, "convolving distributions over different D");
    Box out = minkowski(a.box(), b.box());
    std::vector<BigInt> cells(static_cast<std::size_t>(out.cells()));
    a.for_each([&](LatticePoint pa, const BigInt& ma) {
        b.for_each([&](LatticePoint pb, const BigInt& mb) {
            BigInt& c = cells[out.index(pa + pb)];
            mpz_addmul(c.get_mpz_t(), ma.get_mpz_t(), mb.get_mpz_t());
        });
    });
    return ExactDist::from_dense(a.n() + b.n(), a.base_denominator(), out, std::move(cells));
}

ExactDist self_convolve(const ExactDist& dist) { return convolve_dists(dist, dist); }

ExactDist distribution_at(const StepLaw& law, int n, const ExactConfig& cfg) {
    if (n < 0) raise(Errc::invalid_argument, "step count must be non-negative");
    if (n > cfg.cap)
        raise(Errc::exact_cap_exceeded, "n=" + std::to_string(n) + " exceeds the exact cap " +
                                            std::to_string(cfg.cap) +
                                            "; use the float backend or raise the cap");
    if (n == 0) return ExactDist::point_mass(law);

    ExactStrategy s = cfg.strategy;
    if (s == ExactStrategy::automatic) {
        // Self-convolution is quadratic in support size; stepping is linear in
        // atom count per cell. Doubling only pays off while supports are tiny.
        s = (law.atom_count() <= 2 || n <= 32) ? ExactStrategy::doubling : ExactStrategy::stepping;
    }
    if (s == ExactStrategy::stepping) {
        ExactWalker w(law);
        w.advance_to(n);
        return w.snapshot();
    }
    ExactDist result = ExactDist::point_mass(law);
    ExactDist base = step(result, law);
    unsigned m = static_cast<unsigned>(n);
    while (m != 0) {
        if (m & 1u) result = convolve_dists(result, base);
        m >>= 1u;
        if (m != 0) base = self_convolve(base);
    }
    return result;
}

Rational return_prob(const StepLaw& law, int n, const ExactConfig& cfg) {
    ExactDist d = distribution_at(law, n, cfg);
    return make_rational(d.origin_mass(), d.denominator());
}

BigInt norm2_weighted_sum(const ExactDist& dist) {
    BigInt s = 0;
    dist.for_each([&](LatticePoint p, const BigInt& m) {
        mpz_addmul_ui(s.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(norm2(p)));
    });
    return s;
}

Rational second_moment_of_dist(const ExactDist& dist) {
    return make_rational(norm2_weighted_sum(dist), dist.denominator());
}

BigInt sum_of_squares(const ExactDist& dist) {
    BigInt s = 0;
    dist.for_each([&](LatticePoint, const BigInt& m) {
        mpz_addmul(s.get_mpz_t(), m.get_mpz_t(), m.get_mpz_t());
    });
    return s;
}

// --- discs ------------------------------------------------------------------

namespace {

// Largest |v| with v^2 * tden < rem, or -1 when none. rem may be <= 0.
std::int64_t strict_axis_bound(const BigInt& rem, const BigInt& tden) {
    if (rem <= 0) return -1;
    BigInt q = (rem - 1) / tden;
    return checked_si(isqrt(q), "disc radius");
}

} // namespace

long long disc_point_count(const BigInt& tnum, const BigInt& tden) {
    std::int64_t R = strict_axis_bound(tnum, tden);
    long long count = 0;
    for (std::int64_t y = -R; y <= R; ++y) {
        std::int64_t xb = strict_axis_bound(tnum - tden * (y * y), tden);
        if (xb >= 0) count += 2 * xb + 1;
    }
    return count;
}

std::vector<LatticePoint> disc_points(const BigInt& tnum, const BigInt& tden) {
    std::int64_t R = strict_axis_bound(tnum, tden);
    std::vector<LatticePoint> pts;
    for (std::int64_t y = -R; y <= R; ++y) {
        std::int64_t xb = strict_axis_bound(tnum - tden * (y * y), tden);
        for (std::int64_t x = -xb; x <= xb; ++x) pts.push_back({x, y});
    }
    return pts;
}

std::vector<LatticePoint> ball_points(long n, const Rational& m2) {
    if (n < 1) raise(Errc::invalid_argument, "ball index n must be >= 1");
    if (m2 <= 0)
        raise(Errc::zero_second_moment, "B_n is undefined for a walk with E||X||^2 = 0");
    return disc_points(BigInt(2 * n) * m2.get_num(), m2.get_den());
}

long long ball_point_count(long n, const Rational& m2) {
    if (n < 1) raise(Errc::invalid_argument, "ball index n must be >= 1");
    if (m2 <= 0)
        raise(Errc::zero_second_moment, "B_n is undefined for a walk with E||X||^2 = 0");
    return disc_point_count(BigInt(2 * n) * m2.get_num(), m2.get_den());
}

Rational mass_in_ball(const ExactDist& dist, std::span<const LatticePoint> ball) {
    BigInt s = 0;
    for (LatticePoint p : ball) s += dist.mass_at(p);
    return make_rational(s, dist.denominator());
}

// --- walker -----------------------------------------------------------------

ExactWalker::ExactWalker(StepLaw law) : law_(std::move(law)) {
    Box ab = atom_box(law_);
    axmin_ = ab.xmin;
    axmax_ = ab.xmax;
    aymin_ = ab.ymin;
    aymax_ = ab.ymax;
    ui_weights_ = true;
    for (const auto& [p, w] : law_.atoms()) {
        if (!w.fits_ulong_p()) {
            ui_weights_ = false;
            break;
        }
        atom_w_ui_.push_back(w.get_ui());
    }
    if (!ui_weights_) atom_w_ui_.clear();
    ensure_capacity({-1, 1, -1, 1});
    cur_[cap_.index({0, 0})] = 1;
    active_ = {0, 0, 0, 0};
}

void ExactWalker::ensure_capacity(const Box& needed) {
    Box want{std::min(needed.xmin, active_.xmin), std::max(needed.xmax, active_.xmax),
             std::min(needed.ymin, active_.ymin), std::max(needed.ymax, active_.ymax)};
    if (cap_.contains(want)) return;
    // Pad by 64 steps worth of growth per axis to amortize re-layout.
    const std::int64_t mx = 64 * std::max<std::int64_t>(std::max(-axmin_, axmax_), 1);
    const std::int64_t my = 64 * std::max<std::int64_t>(std::max(-aymin_, aymax_), 1);
    Box fresh = want.expanded(mx, mx, my, my);

    std::vector<BigInt> ncur(static_cast<std::size_t>(fresh.cells()));
    std::vector<BigInt> nnext(static_cast<std::size_t>(fresh.cells()));
    if (!cur_.empty()) {
        for (std::int64_t y = active_.ymin; y <= active_.ymax; ++y)
            for (std::int64_t x = active_.xmin; x <= active_.xmax; ++x)
                std::swap(ncur[fresh.index({x, y})], cur_[cap_.index({x, y})]);
    }
    cur_ = std::move(ncur);
    next_ = std::move(nnext);
    cap_ = fresh;
}

void ExactWalker::advance() {
    const Box in = active_;
    const Box out{in.xmin + axmin_, in.xmax + axmax_, in.ymin + aymin_, in.ymax + aymax_};
    ensure_capacity(out);

    const auto& atoms = law_.atoms();
    for (std::int64_t y = out.ymin; y <= out.ymax; ++y) {
        BigInt* dst_row = &next_[cap_.index({out.xmin, y})];
        const std::int64_t row_len = out.xmax - out.xmin + 1;
        for (std::int64_t i = 0; i < row_len; ++i) mpz_set_ui(dst_row[i].get_mpz_t(), 0);
        for (std::size_t k = 0; k < atoms.size(); ++k) {
            const LatticePoint a = atoms[k].first;
            const std::int64_t sy = y - a.y;
            if (sy < in.ymin || sy > in.ymax) continue;
            const std::int64_t xlo = std::max(out.xmin, in.xmin + a.x);
            const std::int64_t xhi = std::min(out.xmax, in.xmax + a.x);
            if (xlo > xhi) continue;
            const BigInt* src = &cur_[cap_.index({xlo - a.x, sy})];
            BigInt* dst = dst_row + (xlo - out.xmin);
            const std::int64_t len = xhi - xlo + 1;
            if (ui_weights_) {
                const unsigned long w = atom_w_ui_[k];
                for (std::int64_t i = 0; i < len; ++i)
                    if (mpz_size(src[i].get_mpz_t()) != 0)
                        mpz_addmul_ui(dst[i].get_mpz_t(), src[i].get_mpz_t(), w);
            } else {
                const BigInt& w = atoms[k].second;
                for (std::int64_t i = 0; i < len; ++i)
                    if (mpz_size(src[i].get_mpz_t()) != 0)
                        mpz_addmul(dst[i].get_mpz_t(), src[i].get_mpz_t(), w.get_mpz_t());
            }
        }
    }
    std::swap(cur_, next_);
    active_ = out;
    ++n_;
    den_pow_ *= law_.denominator();
}

void ExactWalker::advance_to(int n) {
    if (n < n_) raise(Errc::invalid_argument, "walker cannot step backwards");
    while (n_ < n) advance();
}

BigInt ExactWalker::mass_at(LatticePoint p) const {
    if (!active_.contains(p)) return 0;
    return cur_[cap_.index(p)];
}

BigInt ExactWalker::mass_total() const {
    BigInt s = 0;
    for (std::int64_t y = active_.ymin; y <= active_.ymax; ++y) {
        const BigInt* row = &cur_[cap_.index({active_.xmin, y})];
        for (std::int64_t i = 0; i < active_.width(); ++i) s += row[i];
    }
    return s;
}

BigInt ExactWalker::norm2_weighted_sum() const {
    BigInt s = 0;
    for (std::int64_t y = active_.ymin; y <= active_.ymax; ++y) {
        const BigInt* row = &cur_[cap_.index({active_.xmin, y})];
        for (std::int64_t x = active_.xmin; x <= active_.xmax; ++x) {
            const BigInt& c = row[x - active_.xmin];
            if (mpz_size(c.get_mpz_t()) != 0)
                mpz_addmul_ui(s.get_mpz_t(), c.get_mpz_t(),
                              static_cast<unsigned long>(x * x + y * y));
        }
    }
    return s;
}

BigInt ExactWalker::sum_of_squares() const {
    BigInt s = 0;
    for (std::int64_t y = active_.ymin; y <= active_.ymax; ++y) {
        const BigInt* row = &cur_[cap_.index({active_.xmin, y})];
        for (std::int64_t i = 0; i < active_.width(); ++i)
            if (mpz_size(row[i].get_mpz_t()) != 0)
                mpz_addmul(s.get_mpz_t(), row[i].get_mpz_t(), row[i].get_mpz_t());
    }
    return s;
}

BigInt ExactWalker::mass_in_disc(const BigInt& tnum, const BigInt& tden) const {
    BigInt s = 0;
    std::int64_t R = strict_axis_bound(tnum, tden);
    const std::int64_t ylo = std::max(-R, active_.ymin), yhi = std::min(R, active_.ymax);
    for (std::int64_t y = ylo; y <= yhi; ++y) {
        std::int64_t xb = strict_axis_bound(tnum - tden * (y * y), tden);
        if (xb < 0) continue;
        const std::int64_t xlo = std::max(-xb, active_.xmin), xhi = std::min(xb, active_.xmax);
        if (xlo > xhi) continue;
        const BigInt* row = &cur_[cap_.index({xlo, y})];
        for (std::int64_t i = 0; i <= xhi - xlo; ++i) s += row[i];
    }
    return s;
}

std::size_t ExactWalker::support_size() const {
    std::size_t nnz = 0;
    for (std::int64_t y = active_.ymin; y <= active_.ymax; ++y) {
        const BigInt* row = &cur_[cap_.index({active_.xmin, y})];
        for (std::int64_t i = 0; i < active_.width(); ++i)
            if (mpz_size(row[i].get_mpz_t()) != 0) ++nnz;
    }
    return nnz;
}

ExactDist ExactWalker::snapshot() const {
    std::vector<BigInt> cells(static_cast<std::size_t>(active_.cells()));
    std::size_t i = 0;
    for (std::int64_t y = active_.ymin; y <= active_.ymax; ++y) {
        const BigInt* row = &cur_[cap_.index({active_.xmin, y})];
        for (std::int64_t x = 0; x < active_.width(); ++x, ++i) cells[i] = row[x];
    }
    return ExactDist::from_dense(n_, law_.denominator(), active_, std::move(cells));
}

// --- series -----------------------------------------------------------------

std::vector<SeriesRow> return_series(const StepLaw& law, long n_max, Backend backend,
                                     const ExactConfig& cfg) {
    if (n_max < 0) raise(Errc::invalid_argument, "n_max must be non-negative");
    std::vector<SeriesRow> rows;
    rows.reserve(static_cast<std::size_t>(n_max) + 1);

    if (backend == Backend::exact) {
        if (n_max > cfg.cap)
            raise(Errc::exact_cap_exceeded,
                  "series to n=" + std::to_string(n_max) + " exceeds the exact cap " +
                      std::to_string(cfg.cap) + "; use the float backend or raise the cap");
        ExactWalker w(law);
        Rational sum = 0;
        for (long n = 0; n <= n_max; ++n) {
            if (n > 0) w.advance();
            Rational p = make_rational(w.origin_mass(), w.denominator());
            sum += p;
            rows.push_back({n, p, to_double(p), to_double(sum)});
        }
        return rows;
    }

    FloatWalker w(law);
    double sum = 0.0, comp = 0.0;
    for (long n = 0; n <= n_max; ++n) {
        if (n > 0) w.advance();
        const double p = w.origin_mass();
        const double t = p - comp;
        const double next = sum + t;
        comp = (next - sum) - t;
        sum = next;
        rows.push_back({n, std::nullopt, p, sum});
    }
    return rows;
}

} // namespace latwalk
