#include "frmbank/fir_design.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "frmbank/detail/fft.hpp"

namespace frmbank {

namespace {

// ---------------------------------------------------------------------------
// Remez exchange on the cosine basis.
//
// Type I (odd N):  A(w) = sum_{k=0}^{r-1} a_k cos(kw),           r = (N+1)/2
// Type II (even N): A(w) = cos(w/2) * sum_{k=0}^{r-1} p_k cos(kw), r = N/2
//
// Even lengths run the exchange on the modified problem D' = D/Q, W' = W*Q
// with Q(w) = cos(w/2), which forces the structural zero at w = pi.
// ---------------------------------------------------------------------------

struct Extremal {
    double omega;
    double x; // cos(omega)
    double des;
    double wt;
};

class RemezSolver {
  public:
    RemezSolver(std::span<const Band> bands, int length, const RemezOptions& opts)
        : bands_(bands.begin(), bands.end()), length_(length), opts_(opts) {
        validate_bands();
        even_ = (length_ % 2 == 0);
        r_ = even_ ? length_ / 2 : (length_ + 1) / 2;
        build_grid();
    }

    RemezResult solve() {
        init_extremals();
        double prev_delta = std::numeric_limits<double>::quiet_NaN();
        int iter = 0;
        for (; iter < opts_.max_iterations; ++iter) {
            compute_reference();
            std::vector<Extremal> next = exchange();
            const bool stable = same_reference(next);
            const bool delta_converged =
                iter > 0 && std::abs(std::abs(delta_) - std::abs(prev_delta)) <=
                                opts_.convergence * std::abs(delta_) + 1e-15;
            prev_delta = delta_;
            ext_ = std::move(next);
            if (stable || delta_converged) { ++iter; break; }
        }
        if (iter >= opts_.max_iterations)
            throw numeric_error("remez_design: exchange did not converge");
        compute_reference();
        RemezResult res{reconstruct(), std::abs(delta_), iter, {}};
        res.extremal_freqs.reserve(ext_.size());
        for (const Extremal& e : ext_) res.extremal_freqs.push_back(e.omega);
        return res;
    }

  private:
    void validate_bands() {
        if (bands_.empty())
            throw spec_error("remez_design: no bands");
        if (length_ < 1)
            throw spec_error("remez_design: length must be positive");
        double prev_hi = -1.0;
        for (const Band& b : bands_) {
            if (!(b.lo >= 0.0 && b.lo < b.hi && b.hi <= kPi))
                throw spec_error("remez_design: band edges must satisfy 0 <= lo < hi <= pi");
            if (b.lo <= prev_hi)
                throw spec_error("remez_design: bands must be ascending and disjoint");
            if (!(b.weight > 0.0) || !std::isfinite(b.desired))
                throw spec_error("remez_design: invalid band weight or desired value");
            prev_hi = b.hi;
        }
        if (length_ % 2 == 0 && bands_.back().hi >= kPi - 1e-12 &&
            bands_.back().desired != 0.0)
            throw spec_error("remez_design: even length forces a zero at pi");
    }

    void build_grid() {
        // cap even-length grids just below pi where Q vanishes
        const double omega_max = even_ ? kPi * (1.0 - 1e-9) : kPi;
        double step = kPi / (static_cast<double>(opts_.grid_density) * static_cast<double>(r_));
        double total_width = 0.0;
        for (const Band& b : bands_) total_width += b.hi - b.lo;
        // ensure enough points to seed r+1 extremals with room to spare
        step = std::min(step, total_width / (2.5 * static_cast<double>(r_ + 1)));

        grid_omega_.clear();
        grid_des_.clear();
        grid_wt_.clear();
        band_begin_.clear();
        for (const Band& b : bands_) {
            band_begin_.push_back(grid_omega_.size());
            const double hi = std::min(b.hi, omega_max);
            const int npts = std::max(2, static_cast<int>(std::ceil((hi - b.lo) / step)) + 1);
            for (int i = 0; i < npts; ++i) {
                const double w =
                    b.lo + (hi - b.lo) * static_cast<double>(i) / static_cast<double>(npts - 1);
                grid_omega_.push_back(w);
                grid_des_.push_back(mod_desired(b, w));
                grid_wt_.push_back(mod_weight(b, w));
            }
        }
        band_begin_.push_back(grid_omega_.size());
    }

    double q_factor(double w) const { return even_ ? std::cos(0.5 * w) : 1.0; }
    double mod_desired(const Band& b, double w) const { return b.desired / q_factor(w); }
    double mod_weight(const Band& b, double w) const { return b.weight * q_factor(w); }

    void init_extremals() {
        const std::size_t n = grid_omega_.size();
        ext_.clear();
        ext_.reserve(r_ + 1);
        for (int i = 0; i <= r_; ++i) {
            const std::size_t idx =
                static_cast<std::size_t>(std::llround(static_cast<double>(i) *
                                                      static_cast<double>(n - 1) /
                                                      static_cast<double>(r_)));
            ext_.push_back(make_extremal(grid_omega_[idx], grid_des_[idx], grid_wt_[idx]));
        }
    }

    Extremal make_extremal(double w, double des, double wt) const {
        return Extremal{w, std::cos(w), des, wt};
    }

    // Barycentric weights (normalized) and the reference deviation delta.
    void compute_reference() {
        const std::size_t m = ext_.size();
        gamma_.assign(m, 0.0);
        std::vector<double> lg(m, 0.0);
        std::vector<double> sg(m, 1.0);
        double lgmax = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < m; ++i) {
            double l = 0.0, s = 1.0;
            for (std::size_t j = 0; j < m; ++j) {
                if (j == i) continue;
                const double d = ext_[i].x - ext_[j].x;
                s = d < 0 ? -s : s;
                l -= std::log(std::abs(d));
            }
            lg[i] = l;
            sg[i] = s;
            lgmax = std::max(lgmax, l);
        }
        for (std::size_t i = 0; i < m; ++i) gamma_[i] = sg[i] * std::exp(lg[i] - lgmax);

        double num = 0.0, den = 0.0;
        double sign = 1.0;
        for (std::size_t i = 0; i < m; ++i) {
            num += gamma_[i] * ext_[i].des;
            den += sign * gamma_[i] / ext_[i].wt;
            sign = -sign;
        }
        if (den == 0.0)
            throw numeric_error("remez_design: degenerate reference set");
        delta_ = num / den;

        cvals_.assign(m, 0.0);
        sign = 1.0;
        for (std::size_t i = 0; i < m; ++i) {
            cvals_[i] = ext_[i].des - sign * delta_ / ext_[i].wt;
            sign = -sign;
        }
    }

    // Barycentric interpolation through the reference values; exact at nodes.
    double eval_poly(double x) const {
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < ext_.size(); ++i) {
            const double d = x - ext_[i].x;
            if (std::abs(d) < 1e-14) return cvals_[i];
            const double t = gamma_[i] / d;
            num += t * cvals_[i];
            den += t;
        }
        return num / den;
    }

    double weighted_error(double w, double des, double wt) const {
        return (eval_poly(std::cos(w)) - des) * wt;
    }

    struct Candidate {
        double omega, err, des, wt;
    };

    std::vector<Extremal> exchange() {
        std::vector<Candidate> cands;
        for (std::size_t b = 0; b + 1 < band_begin_.size(); ++b) {
            const std::size_t lo = band_begin_[b], hi = band_begin_[b + 1];
            std::vector<double> err(hi - lo);
            for (std::size_t i = lo; i < hi; ++i)
                err[i - lo] = (eval_poly(std::cos(grid_omega_[i])) - grid_des_[i]) * grid_wt_[i];
            for (std::size_t i = lo; i < hi; ++i) {
                const double a = std::abs(err[i - lo]);
                if (a == 0.0) continue;
                const bool pos = err[i - lo] > 0.0;
                // a sign change bounds the lobe just like a band edge does
                const bool left_ok = (i == lo) || (err[i - lo - 1] > 0.0) != pos ||
                                     a >= std::abs(err[i - lo - 1]);
                const bool right_ok = (i + 1 == hi) || (err[i - lo + 1] > 0.0) != pos ||
                                      a > std::abs(err[i - lo + 1]);
                if (!(left_ok && right_ok)) continue;
                Candidate c{grid_omega_[i], err[i - lo], grid_des_[i], grid_wt_[i]};
                if (i > lo && i + 1 < hi && (err[i - lo - 1] > 0.0) == pos &&
                    (err[i - lo + 1] > 0.0) == pos)
                    refine(c, grid_omega_[i - 1], std::abs(err[i - lo - 1]), grid_omega_[i + 1],
                           std::abs(err[i - lo + 1]), bands_[b]);
                cands.push_back(c);
            }
        }
        if (cands.size() < static_cast<std::size_t>(r_ + 1)) {
            // a perfect fit (e.g. the desired response is exactly representable)
            // produces no error lobes at all; keep the current reference
            double emax = 0.0;
            for (const Candidate& c : cands) emax = std::max(emax, std::abs(c.err));
            if (emax <= 1e-12 * (1.0 + std::abs(delta_)))
                return ext_;
            throw numeric_error("remez_design: too few error extrema (numerically infeasible)");
        }

        // enforce sign alternation, keeping the larger of same-sign neighbors
        std::vector<Candidate> alt;
        for (const Candidate& c : cands) {
            if (!alt.empty() && (alt.back().err > 0) == (c.err > 0)) {
                if (std::abs(c.err) > std::abs(alt.back().err)) alt.back() = c;
            } else {
                alt.push_back(c);
            }
        }
        while (alt.size() > static_cast<std::size_t>(r_ + 1)) {
            if (std::abs(alt.front().err) < std::abs(alt.back().err))
                alt.erase(alt.begin());
            else
                alt.pop_back();
        }
        if (alt.size() < static_cast<std::size_t>(r_ + 1))
            throw numeric_error("remez_design: alternation collapsed (numerically infeasible)");

        std::vector<Extremal> next;
        next.reserve(alt.size());
        for (const Candidate& c : alt) next.push_back(make_extremal(c.omega, c.des, c.wt));
        return next;
    }

    // Local quadratic refinement of a grid extremum; keeps the grid point if
    // the refined value is not an improvement.
    void refine(Candidate& c, double wl, double al, double wr, double ar, const Band& band) {
        const double ac = std::abs(c.err);
        const double d1 = (ac - al) / (c.omega - wl);
        const double d2 = (ar - ac) / (wr - c.omega);
        const double dd = (d2 - d1) / (wr - wl);
        if (dd >= 0.0) return; // not a parabolic maximum
        const double w = 0.5 * (wl + c.omega) - d1 / (2.0 * dd);
        if (!(w > wl && w < wr)) return;
        const double des = mod_desired(band, w);
        const double wt = mod_weight(band, w);
        const double e = weighted_error(w, des, wt);
        if (std::abs(e) > ac && (e > 0) == (c.err > 0)) {
            c.omega = w;
            c.err = e;
            c.des = des;
            c.wt = wt;
        }
    }

    bool same_reference(const std::vector<Extremal>& next) const {
        if (next.size() != ext_.size()) return false;
        for (std::size_t i = 0; i < next.size(); ++i)
            if (next[i].omega != ext_[i].omega) return false;
        return true;
    }

    Fir reconstruct() const {
        const int n = length_;
        std::vector<double> h(static_cast<std::size_t>(n), 0.0);
        if (!even_) {
            const int half = (n - 1) / 2;
            std::vector<double> samples(static_cast<std::size_t>(half) + 1);
            for (int j = 0; j <= half; ++j)
                samples[static_cast<std::size_t>(j)] =
                    eval_poly(std::cos(kTwoPi * j / static_cast<double>(n)));
            for (int m = 0; m <= half; ++m) {
                double acc = samples[0];
                for (int j = 1; j <= half; ++j)
                    acc += 2.0 * samples[static_cast<std::size_t>(j)] *
                           std::cos(kTwoPi * j * (m - half) / static_cast<double>(n));
                h[static_cast<std::size_t>(m)] = acc / static_cast<double>(n);
                h[static_cast<std::size_t>(n - 1 - m)] = h[static_cast<std::size_t>(m)];
            }
        } else {
            const int half = n / 2;
            std::vector<double> samples(static_cast<std::size_t>(half));
            for (int j = 0; j < half; ++j) {
                const double w = kPi * (j + 0.5) / static_cast<double>(half);
                samples[static_cast<std::size_t>(j)] =
                    std::cos(0.5 * w) * eval_poly(std::cos(w));
            }
            for (int k = 1; k <= half; ++k) {
                double acc = 0.0;
                for (int j = 0; j < half; ++j) {
                    const double w = kPi * (j + 0.5) / static_cast<double>(half);
                    acc += samples[static_cast<std::size_t>(j)] * std::cos((k - 0.5) * w);
                }
                const double bk = 2.0 * acc / static_cast<double>(half);
                h[static_cast<std::size_t>(half - k)] = 0.5 * bk;
                h[static_cast<std::size_t>(half - 1 + k)] = 0.5 * bk;
            }
        }
        return Fir::real(std::move(h));
    }

    std::vector<Band> bands_;
    int length_;
    RemezOptions opts_;
    bool even_ = false;
    int r_ = 0;

    std::vector<double> grid_omega_, grid_des_, grid_wt_;
    std::vector<std::size_t> band_begin_;

    std::vector<Extremal> ext_;
    std::vector<double> gamma_, cvals_;
    double delta_ = 0.0;
};

} // namespace

RemezResult remez_design(std::span<const Band> bands, int length, const RemezOptions& opts) {
    return RemezSolver(bands, length, opts).solve();
}

int estimate_order(const FilterSpec& spec) {
    spec.validate();
    if (spec.transition_width() < 1e-5 * kPi)
        throw spec_error("estimate_order: transition width below 1e-5*pi floor");
    const double dp = spec.passband_delta();
    const double ds = spec.stopband_delta();
    const double df = spec.transition_width() / kTwoPi;
    const double l1 = std::log10(dp);
    const double l2 = std::log10(ds);
    const double dinf = (0.005309 * l1 * l1 + 0.07114 * l1 - 0.4761) * l2 -
                        (0.00266 * l1 * l1 + 0.5941 * l1 + 0.4278);
    const double f = 11.01217 + 0.51244 * (l1 - l2);
    const double x = dinf / df - f * df + 1.0;
    const long n = 2 * std::lround((x - 1.0) / 2.0) + 1;
    return static_cast<int>(std::max(3L, n));
}

namespace {

std::vector<Band> lowpass_bands(const FilterSpec& spec) {
    return {Band{0.0, spec.passband_edge, 1.0, 1.0 / spec.passband_delta()},
            Band{spec.stopband_edge, kPi, 0.0, 1.0 / spec.stopband_delta()}};
}

} // namespace

Fir equiripple_design(const FilterSpec& spec, std::optional<int> length,
                      const DesignOptions& opts) {
    spec.validate();
    const std::vector<Band> bands = lowpass_bands(spec);
    if (length) {
        if (*length < 1 || *length % 2 == 0)
            throw spec_error("equiripple_design: explicit length must be a positive odd integer");
        return remez_design(bands, *length, opts.remez).filter;
    }
    int n = std::max(3, estimate_order(spec) - opts.search_back);
    if (n % 2 == 0) ++n;
    for (; n <= opts.max_length; n += 2) {
        Fir f = remez_design(bands, n, opts.remez).filter;
        if (meets_spec(measure_spec(f, spec), spec, opts.slack_db))
            return f;
    }
    throw numeric_error("equiripple_design: length cap exceeded (unachievable spec)");
}

std::vector<cplx> freq_response(const Fir& filter, std::span<const double> grid) {
    for (double w : grid)
        if (!(w >= 0.0 && w < kTwoPi))
            throw spec_error("freq_response: grid values must lie in [0, 2*pi)");
    std::vector<cplx> out(grid.size());
    for (std::size_t g = 0; g < grid.size(); ++g) out[g] = freq_response_at(filter, grid[g]);
    return out;
}

cplx freq_response_at(const Fir& filter, double omega) {
    // Horner evaluation in z^{-1} = e^{-jw}
    const cplx z = std::polar(1.0, -omega);
    const std::span<const cplx> h = filter.coeffs();
    cplx acc = h[h.size() - 1];
    for (std::size_t i = h.size() - 1; i-- > 0;) acc = acc * z + h[i];
    return acc;
}

BandMeasurement measure_spec(const Fir& filter, const FilterSpec& spec) {
    spec.validate();
    const std::size_t grid =
        std::min<std::size_t>(1u << 20, detail::next_pow2(std::max<std::size_t>(
                                            16 * filter.length(), 4096)));
    const std::vector<double> mag = detail::magnitude_grid(filter.coeffs(), grid);
    const double th = spec.passband_edge;
    const double ph = spec.stopband_edge;

    double pmax = 0.0, pmin = std::numeric_limits<double>::infinity(), smax = 0.0;
    for (std::size_t k = 0; k < mag.size(); ++k) {
        const double w = kTwoPi * static_cast<double>(k) / static_cast<double>(mag.size());
        if (w <= th || w >= kTwoPi - th) {
            pmax = std::max(pmax, mag[k]);
            pmin = std::min(pmin, mag[k]);
        } else if (w >= ph && w <= kTwoPi - ph) {
            smax = std::max(smax, mag[k]);
        }
    }
    for (double w : {th, kTwoPi - th}) {
        if (w >= kTwoPi) continue;
        const double v = std::abs(freq_response_at(filter, w));
        pmax = std::max(pmax, v);
        pmin = std::min(pmin, v);
    }
    for (double w : {ph, kTwoPi - ph}) {
        if (w >= kTwoPi) continue;
        smax = std::max(smax, std::abs(freq_response_at(filter, w)));
    }

    BandMeasurement m;
    m.transition_width = spec.transition_width();
    m.achieved_passband_ripple_db =
        (pmin > 0.0 && pmax > 0.0) ? 20.0 * std::log10(pmax / pmin) : 300.0;
    m.achieved_stopband_atten_db = smax > 0.0 ? -20.0 * std::log10(smax) : 300.0;
    return m;
}

bool meets_spec(const BandMeasurement& meas, const FilterSpec& spec, double slack_db) {
    return meas.achieved_passband_ripple_db <= spec.passband_ripple_db + slack_db &&
           meas.achieved_stopband_atten_db >= spec.stopband_atten_db - slack_db;
}

} // namespace frmbank
