// types.hpp - shared domain types for the warped-waveform toolkit.
//
// Everything here is an immutable value object once validated; instances can
// be shared freely across threads.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace warpwave {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;

/// Thrown when a config or argument fails validation. Collects every
/// violation found so the caller sees them all at once.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<std::string> issues)
        : std::runtime_error(join(issues)), issues_(std::move(issues)) {}
    explicit ValidationError(const std::string& one)
        : ValidationError(std::vector<std::string>{one}) {}
    const std::vector<std::string>& issues() const { return issues_; }

private:
    static std::string join(const std::vector<std::string>& v) {
        std::string s = "validation failed:";
        for (const auto& e : v) { s += "\n  - "; s += e; }
        return s;
    }
    std::vector<std::string> issues_;
};

/// Thrown by iterative solvers that exhaust their budget. Carries the last
/// iterate so callers can report partial results.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, std::vector<double> last)
        : std::runtime_error(what), last_iterate(std::move(last)) {}
    std::vector<double> last_iterate;
};

/// Runtime numerical failure (singular equalizer bin, non-monotone map, ...).
class NumericError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------

/// Complex baseband sample sequence at oversampling ratio v relative to the
/// data-symbol duration T_N. origin is the sample index of t = 0.
struct SampledSignal {
    cvec samples;
    int v = 1;
    long long origin = 0;

    void validate() const {
        std::vector<std::string> bad;
        if (samples.empty()) bad.push_back("SampledSignal.samples must be non-empty");
        if (v < 1) bad.push_back("SampledSignal.v must be >= 1");
        if (!bad.empty()) throw ValidationError(bad);
    }
};

/// Per-pulse roll-off pair (left side, right side), ordered from symbol start
/// to symbol end. Mirror-symmetric: pair k equals the swapped pair N-1-k.
struct RolloffProfile {
    struct Pair {
        double alpha_left = 0.0;
        double alpha_right = 0.0;
    };
    std::vector<Pair> pairs;

    void validate() const {
        std::vector<std::string> bad;
        const size_t n = pairs.size();
        if (n == 0) bad.push_back("RolloffProfile.pairs must be non-empty");
        for (size_t k = 0; k < n; ++k) {
            const auto& p = pairs[k];
            if (p.alpha_left < 0.0 || p.alpha_left > 1.0 ||
                p.alpha_right < 0.0 || p.alpha_right > 1.0)
                bad.push_back("alpha out of [0,1] at pulse " + std::to_string(k));
        }
        for (size_t k = 0; k < n; ++k) {
            const auto& a = pairs[k];
            const auto& b = pairs[n - 1 - k];
            if (std::abs(a.alpha_left - b.alpha_right) > 1e-12 ||
                std::abs(a.alpha_right - b.alpha_left) > 1e-12)
                bad.push_back("profile not mirror-symmetric at pulse " + std::to_string(k));
        }
        // edge-facing alphas must not increase toward the center
        for (size_t k = 0; k + 1 < (n + 1) / 2; ++k) {
            if (pairs[k + 1].alpha_left > pairs[k].alpha_left + 1e-12)
                bad.push_back("edge-facing alphas increase at pulse " + std::to_string(k + 1));
        }
        if (!bad.empty()) throw ValidationError(bad);
    }

    /// Build a mirror-symmetric profile for n pulses from an outside-to-inside
    /// list of half-profile alphas (symmetric pulses).
    static RolloffProfile mirrored_symmetric(const std::vector<double>& half, size_t n_pulses) {
        RolloffProfile p;
        p.pairs.resize(n_pulses);
        for (size_t k = 0; k < n_pulses; ++k) {
            const size_t d = std::min(k, n_pulses - 1 - k);
            const double a = half[std::min(d, half.size() - 1)];
            p.pairs[k] = {a, a};
        }
        return p;
    }
};

/// Parameters of the double-sigmoid warping derivative: slope s_out at the
/// symbol edges, s_in on the inner plateau, sigmoid centers t1 < t2 and
/// progression constant t_cap (all time quantities in T_N units).
struct WarpDerivativeParams {
    double s_out = 1.0;
    double s_in = 1.0;
    double t1 = -1.0;
    double t2 = 1.0;
    double t_cap = 1.0;

    void validate() const {
        std::vector<std::string> bad;
        if (!(s_out > 0.0)) bad.push_back("s_out must be > 0");
        if (s_out > s_in + 1e-15) bad.push_back("s_out must be <= s_in");
        if (s_in > 1.0 + 1e-15) bad.push_back("s_in must be <= 1");
        if (!(t1 < t2)) bad.push_back("t1 must be < t2");
        if (!(t_cap > 0.0)) bad.push_back("t_cap must be > 0");
        if (!bad.empty()) throw ValidationError(bad);
    }

    bool boxed_ok() const {
        return s_out > 0.0 && s_out <= s_in && s_in <= 1.0 && t1 < t2 && t_cap > 0.0;
    }
};

// ---------------------------------------------------------------------------

/// Piecewise cubic-spline warping map with integer sample anchors. The spline
/// passes through (anchors[k], index0 + k); segment i covers
/// [knots[i], knots[i+1]] with coefficients relative to the left knot:
///   value(x) = ((a*dx + b)*dx + c)*dx + d,  dx = x - knots[i].
struct WarpingMap {
    struct Segment {
        double a = 0.0, b = 0.0, c = 0.0, d = 0.0;
    };
    std::vector<Segment> segments;
    std::vector<long long> knots;    // segment boundaries (== anchors here)
    std::vector<long long> anchors;  // integer sample position of each index
    int index0 = 0;                  // warped value at anchors[0]
    int v = 1;                       // oversampling ratio of the anchor grid

    size_t size() const { return anchors.size(); }
    long long first_knot() const { return knots.front(); }
    long long last_knot() const { return knots.back(); }

    size_t segment_of(double x) const {
        if (x < static_cast<double>(knots.front()) || x > static_cast<double>(knots.back()))
            throw std::domain_error("warp map: position outside domain");
        auto it = std::upper_bound(knots.begin(), knots.end(), x,
                                   [](double v, long long k) { return v < static_cast<double>(k); });
        size_t i = static_cast<size_t>(it - knots.begin());
        if (i > 0) --i;
        if (i >= segments.size()) i = segments.size() - 1;
        return i;
    }

    /// Spline evaluation; exact integer result at anchors.
    double eval(double x) const {
        const size_t i = segment_of(x);
        if (x == static_cast<double>(knots[i])) return static_cast<double>(index0 + static_cast<int>(i));
        if (x == static_cast<double>(knots[i + 1])) return static_cast<double>(index0 + static_cast<int>(i) + 1);
        const double dx = x - static_cast<double>(knots[i]);
        const auto& s = segments[i];
        return ((s.a * dx + s.b) * dx + s.c) * dx + s.d;
    }

    double derivative(double x) const {
        const size_t i = segment_of(x);
        const double dx = x - static_cast<double>(knots[i]);
        const auto& s = segments[i];
        return (3.0 * s.a * dx + 2.0 * s.b) * dx + s.c;
    }

    /// Integer sample position of pulse index n (n counted in map units,
    /// i.e. the anchor whose warped value is exactly n).
    long long anchor(int n) const {
        const long long k = static_cast<long long>(n) - index0;
        if (k < 0 || k >= static_cast<long long>(anchors.size()))
            throw std::out_of_range("warp_anchor: pulse index out of range");
        return anchors[static_cast<size_t>(k)];
    }

    /// Natural C2 cubic spline through (anchors[k], index0+k).
    static WarpingMap from_anchors(std::vector<long long> a, int index0 = 0, int v = 1);

    void check_monotone() const {
        for (size_t i = 0; i < segments.size(); ++i) {
            const double h = static_cast<double>(knots[i + 1] - knots[i]);
            const auto& s = segments[i];
            // derivative q'(dx) = 3a dx^2 + 2b dx + c on [0, h]
            double mn = std::min(s.c, (3.0 * s.a * h + 2.0 * s.b) * h + s.c);
            if (s.a != 0.0) {
                const double xv = -s.b / (3.0 * s.a);
                if (xv > 0.0 && xv < h)
                    mn = std::min(mn, (3.0 * s.a * xv + 2.0 * s.b) * xv + s.c);
            }
            if (!(mn > 0.0))
                throw NumericError("warping map not strictly increasing in segment " +
                                   std::to_string(i));
        }
    }
};

inline WarpingMap WarpingMap::from_anchors(std::vector<long long> a, int index0, int v) {
    const size_t n = a.size();
    if (n < 2) throw ValidationError("WarpingMap needs at least two anchors");
    for (size_t i = 1; i < n; ++i)
        if (a[i] <= a[i - 1])
            throw ValidationError("anchors must be strictly increasing (oversampling too low?)");

    // tridiagonal solve for second derivatives, natural end conditions
    std::vector<double> h(n - 1), rhs(n, 0.0), m(n, 0.0);
    for (size_t i = 0; i + 1 < n; ++i) h[i] = static_cast<double>(a[i + 1] - a[i]);
    std::vector<double> cdiag(n, 0.0), lower(n, 0.0), upper(n, 0.0);
    cdiag[0] = cdiag[n - 1] = 1.0;
    for (size_t i = 1; i + 1 < n; ++i) {
        lower[i] = h[i - 1];
        cdiag[i] = 2.0 * (h[i - 1] + h[i]);
        upper[i] = h[i];
        rhs[i] = 6.0 * (1.0 / h[i] - 1.0 / h[i - 1]);  // y values are consecutive integers
    }
    // Thomas algorithm
    for (size_t i = 1; i < n; ++i) {
        const double w = lower[i] / cdiag[i - 1];
        cdiag[i] -= w * upper[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    m[n - 1] = rhs[n - 1] / cdiag[n - 1];
    for (size_t i = n - 1; i-- > 0;) m[i] = (rhs[i] - upper[i] * m[i + 1]) / cdiag[i];

    WarpingMap map;
    map.anchors = a;
    map.knots = std::move(a);
    map.index0 = index0;
    map.v = v;
    map.segments.resize(n - 1);
    for (size_t i = 0; i + 1 < n; ++i) {
        const double hi = h[i];
        auto& s = map.segments[i];
        s.a = (m[i + 1] - m[i]) / (6.0 * hi);
        s.b = m[i] / 2.0;
        s.c = 1.0 / hi - hi * (2.0 * m[i] + m[i + 1]) / 6.0;
        s.d = static_cast<double>(index0 + static_cast<int>(i));
    }
    return map;
}

/// Identity map: anchors at 0, v, 2v, ... with unit index spacing.
inline WarpingMap identity_map(size_t n_anchors, int v = 1, int index0 = 0) {
    std::vector<long long> a(n_anchors);
    for (size_t i = 0; i < n_anchors; ++i) a[i] = static_cast<long long>(i) * v;
    return WarpingMap::from_anchors(std::move(a), index0, v);
}

// wavecore op-style wrappers
inline double warp_eval(const WarpingMap& map, double x_t) { return map.eval(x_t); }
inline long long warp_anchor(const WarpingMap& map, int n) { return map.anchor(n); }

// ---------------------------------------------------------------------------

/// Full warped-waveform configuration: N data pulses framed by z_h / z_t
/// unmodulated guard positions, all anchored by one warping map.
struct WaveformConfig {
    int n_pulses = 0;
    int z_h = 0;
    int z_t = 0;
    int v = 1;
    int qam_order = 4;
    RolloffProfile profile;
    WarpingMap warp;

    void validate() const {
        std::vector<std::string> bad;
        if (n_pulses < 1) bad.push_back("n_pulses must be >= 1");
        if (z_h < 0 || z_t < 0) bad.push_back("z_h and z_t must be >= 0");
        const int q = qam_order;
        if (q < 4 || (q & (q - 1)) != 0) bad.push_back("qam_order must be a power of 2 >= 4");
        if (static_cast<int>(profile.pairs.size()) != n_pulses)
            bad.push_back("profile size must equal n_pulses");
        if (static_cast<int>(warp.size()) != n_pulses + z_h + z_t)
            bad.push_back("warp anchor count must equal n_pulses + z_h + z_t");
        if (!bad.empty()) throw ValidationError(bad);
        profile.validate();
    }

    int symbol_len() const { return static_cast<int>(warp.last_knot()) + 1; }
    /// map index of data pulse n
    int map_index(int n) const { return z_h + n; }
};

/// One BER experiment: channel, neighbor-symbol, and noise configuration.
struct LinkScenario {
    double tau_rms = 0.0;       // RMS delay spread, in sample periods T_s
    int time_offset = 0;        // overlap t_s of the preceding symbol, samples
    double freq_offset_bins = 0.0;  // neighbor-carrier shift fi_c, nominal-grid bins
    double p_imb_time_db = 0.0;
    double p_imb_freq_db = 0.0;
    double snr_db = 0.0;
    std::uint64_t seed = 0;
    std::uint64_t n_bits = 0;

    void validate() const {
        std::vector<std::string> bad;
        if (tau_rms < 0.0) bad.push_back("tau_rms must be >= 0");
        if (n_bits == 0) bad.push_back("n_bits must be > 0");
        if (!bad.empty()) throw ValidationError(bad);
    }
};

}  // namespace warpwave
