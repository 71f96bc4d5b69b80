// pulses.hpp - closed-form raised-cosine pulses (symmetric and asymmetric),
// the frequency-domain RC prototype, and warped pulse synthesis.

#pragma once

#include <cmath>
#include <numbers>

#include "warpwave/spectral.hpp"
#include "warpwave/types.hpp"

namespace warpwave::pulses {

/// One pulse's roll-off pair; alpha_left shapes the negative-x side.
struct PulseSpec {
    double alpha_left = 0.0;
    double alpha_right = 0.0;

    void validate() const {
        if (alpha_left < 0.0 || alpha_left > 1.0 || alpha_right < 0.0 || alpha_right > 1.0)
            throw ValidationError("PulseSpec alphas must lie in [0,1]");
    }
    bool symmetric() const { return alpha_left == alpha_right; }
};

inline double sinc(double x) {
    if (x == 0.0) return 1.0;
    const double px = std::numbers::pi * x;
    return std::sin(px) / px;
}

// tolerance for the removable singularity at x = +-1/(2 alpha)
inline constexpr double kSingularTol = 1e-9;

/// Time-domain raised cosine, unit peak, zero crossings at nonzero integers.
inline double rc_time(double alpha, double x) {
    if (alpha == 0.0) return sinc(x);
    const double den = 1.0 - (2.0 * alpha * x) * (2.0 * alpha * x);
    if (std::abs(den) < kSingularTol)
        return (std::numbers::pi / 4.0) * sinc(1.0 / (2.0 * alpha));
    return sinc(x) * std::cos(std::numbers::pi * alpha * x) / den;
}

/// Asymmetric raised cosine: the left-alpha branch for x < 0, the right-alpha
/// branch for x >= 0. Continuous at x = 0 with value 1.
inline double asym_rc_time(const PulseSpec& spec, double x) {
    return x < 0.0 ? rc_time(spec.alpha_left, x) : rc_time(spec.alpha_right, x);
}

/// Frequency-domain RC prototype R(nu): flat passband, cosine transition,
/// zero beyond |nu| > (1+alpha)/2. alpha = 0 degenerates to a rectangle;
/// the optional flag reports that case.
inline double rc_freq_prototype(double alpha, double nu, bool* degenerate = nullptr) {
    if (degenerate) *degenerate = (alpha == 0.0);
    const double an = std::abs(nu);
    if (alpha == 0.0) return an <= 0.5 ? 1.0 : 0.0;
    if (an <= (1.0 - alpha) / 2.0) return 1.0;
    if (an <= (1.0 + alpha) / 2.0)
        return 0.5 * (1.0 + std::cos(std::numbers::pi / alpha * (an - (1.0 - alpha) / 2.0)));
    return 0.0;
}

/// Samples of pulse n under the map: sample k = P(eval(k) - n). No sqrt(w')
/// amplitude factor is applied; all pulses keep unit peak so the data
/// constellation is unchanged (orthogonality is preserved, energy is not).
inline SampledSignal warped_pulse_samples(const PulseSpec& spec, const WarpingMap& map,
                                          int n, size_t length) {
    spec.validate();
    map.anchor(n);  // throws if the pulse has no anchor
    if (static_cast<long long>(length) - 1 > map.last_knot() || map.first_knot() > 0)
        throw ValidationError("warped_pulse_samples: length outside map domain");
    SampledSignal out;
    out.v = map.v;
    out.samples.resize(length);
    for (size_t k = 0; k < length; ++k) {
        const double xt = map.eval(static_cast<double>(k));
        out.samples[k] = asym_rc_time(spec, xt - static_cast<double>(n));
    }
    return out;
}

/// Zero-padded spectrum of a warped pulse. fft_len must be a power of two.
inline cvec warped_pulse_spectrum(const PulseSpec& spec, const WarpingMap& map,
                                  int n, size_t fft_len) {
    if (fft_len == 0 || (fft_len & (fft_len - 1)) != 0)
        throw ValidationError("warped_pulse_spectrum: fft_len must be a power of two");
    const size_t len = static_cast<size_t>(map.last_knot()) + 1;
    if (fft_len < len)
        throw ValidationError("warped_pulse_spectrum: fft_len shorter than the signal");
    SampledSignal sig = warped_pulse_samples(spec, map, n, len);
    sig.samples.resize(fft_len, cplx{0.0, 0.0});
    spectral::Radix2Engine eng(fft_len);
    return eng.fft(sig.samples).values;
}

}  // namespace warpwave::pulses
