#pragma once

#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace frmbank {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Invalid user input: bad band edges, bad configuration, malformed files.
/// Maps to CLI exit code 2.
struct spec_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Numerical failure: non-convergence, infeasible design, cap exceeded.
/// Maps to CLI exit code 3.
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Symmetry { EvenSymmetric, None };

/// Immutable FIR coefficient sequence. Coefficients are stored as complex;
/// real filters keep imaginary parts exactly zero. Symmetry is detected on
/// construction by exact comparison, so designed linear-phase filters (whose
/// mirror taps are assigned, not recomputed) always carry the tag.
class Fir {
  public:
    explicit Fir(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty())
            throw spec_error("Fir: empty coefficient sequence");
        for (const cplx& c : coeffs_)
            if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
                throw spec_error("Fir: non-finite coefficient");
        real_ = true;
        for (const cplx& c : coeffs_)
            if (c.imag() != 0.0) { real_ = false; break; }
        symmetry_ = Symmetry::EvenSymmetric;
        const std::size_t n = coeffs_.size();
        for (std::size_t i = 0; i < n / 2; ++i)
            if (coeffs_[i] != coeffs_[n - 1 - i]) { symmetry_ = Symmetry::None; break; }
    }

    static Fir real(std::vector<double> c) {
        std::vector<cplx> v(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) v[i] = cplx(c[i], 0.0);
        return Fir(std::move(v));
    }

    /// Unit impulse [1].
    static Fir impulse() { return Fir::real({1.0}); }

    /// Pure delay z^{-d}: length d+1 with a single one at index d.
    static Fir delay(std::size_t d) {
        std::vector<double> c(d + 1, 0.0);
        c[d] = 1.0;
        return Fir::real(std::move(c));
    }

    std::size_t length() const { return coeffs_.size(); }
    Symmetry symmetry() const { return symmetry_; }
    bool is_real() const { return real_; }
    std::span<const cplx> coeffs() const { return coeffs_; }
    const cplx& operator[](std::size_t i) const { return coeffs_[i]; }

    /// Group delay in samples, (N-1)/2. Meaningful for linear-phase filters.
    double group_delay() const { return 0.5 * static_cast<double>(coeffs_.size() - 1); }

    std::vector<double> real_coeffs() const {
        if (!real_)
            throw spec_error("Fir: real_coeffs() on complex filter");
        std::vector<double> out(coeffs_.size());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i].real();
        return out;
    }

    bool operator==(const Fir& o) const { return coeffs_ == o.coeffs_; }

  private:
    std::vector<cplx> coeffs_;
    Symmetry symmetry_ = Symmetry::None;
    bool real_ = false;
};

/// Two-band lowpass design target. Edges are normalized angular frequencies
/// in (0, pi]; ripple is peak-to-peak passband deviation in dB, attenuation
/// is minimum stopband attenuation in dB.
struct FilterSpec {
    double passband_edge = 0.0;
    double stopband_edge = 0.0;
    double passband_ripple_db = 0.0;
    double stopband_atten_db = 0.0;

    void validate() const {
        if (!(passband_edge > 0.0 && passband_edge < stopband_edge && stopband_edge <= kPi))
            throw spec_error("FilterSpec: need 0 < passband_edge < stopband_edge <= pi");
        if (!(passband_ripple_db > 0.0))
            throw spec_error("FilterSpec: passband_ripple_db must be > 0");
        if (!(stopband_atten_db > 0.0))
            throw spec_error("FilterSpec: stopband_atten_db must be > 0");
    }

    double transition_width() const { return stopband_edge - passband_edge; }

    /// Linear passband deviation for a peak-to-peak ripple of r dB:
    /// delta_p = (10^{r/20} - 1) / (10^{r/20} + 1).
    double passband_delta() const {
        const double g = std::pow(10.0, passband_ripple_db / 20.0);
        return (g - 1.0) / (g + 1.0);
    }

    /// Linear stopband deviation, delta_s = 10^{-a/20}.
    double stopband_delta() const { return std::pow(10.0, -stopband_atten_db / 20.0); }
};

/// Measured counterparts of a FilterSpec, from a dense-grid sweep.
struct BandMeasurement {
    double achieved_passband_ripple_db = 0.0;
    double achieved_stopband_atten_db = 0.0;
    double transition_width = 0.0;
};

} // namespace frmbank
