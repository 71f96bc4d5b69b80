// spectral.hpp - reference DFT oracle, radix-2 DIF/DIT transforms, and pruned
// kernels with operation counting.
//
// Supported transform lengths are 2^k and 3*2^k (the receiver and the split
// transmitter need 768- and 384-point kernels); odd residues are handled by a
// direct 3-point base block. Operation counts: `butterflies` is the number of
// executed add/sub pair operations, `complex_mults` the number of executed
// complex multiplies. For a full power-of-two transform the butterfly count
// is exactly (N/2) log2 N.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <memory>
#include <numbers>
#include <span>
#include <vector>

#include "warpwave/types.hpp"

namespace warpwave::spectral {

struct OpCount {
    std::uint64_t butterflies = 0;
    std::uint64_t complex_mults = 0;
};

/// Which transform entries matter: nonzero inputs (Markel pruning) and
/// required outputs (Skinner pruning).
struct PruneSpec {
    std::vector<size_t> input_nonzero;
    std::vector<size_t> output_keep;
    size_t size = 0;

    static bool supported_size(size_t n) {
        if (n == 0) return false;
        while (n % 2 == 0) n /= 2;
        return n == 1 || n == 3;
    }

    void validate() const {
        std::vector<std::string> bad;
        if (!supported_size(size))
            bad.push_back("PruneSpec.size must be 2^k or 3*2^k");
        if (input_nonzero.empty()) bad.push_back("input_nonzero must be non-empty");
        if (output_keep.empty()) bad.push_back("output_keep must be non-empty");
        for (size_t i : input_nonzero)
            if (i >= size) { bad.push_back("input index out of range"); break; }
        for (size_t i : output_keep)
            if (i >= size) { bad.push_back("output index out of range"); break; }
        if (!bad.empty()) throw ValidationError(bad);
    }
};

/// Direct O(N^2) DFT; the correctness oracle for every fast kernel.
inline cvec dft_ref(std::span<const cplx> x) {
    const size_t n = x.size();
    cvec out(n);
    for (size_t f = 0; f < n; ++f) {
        cplx acc{0.0, 0.0};
        for (size_t t = 0; t < n; ++t)
            acc += x[t] * std::polar(1.0, -2.0 * std::numbers::pi *
                                              static_cast<double>(f) * static_cast<double>(t) /
                                              static_cast<double>(n));
        out[f] = acc;
    }
    return out;
}

/// Direct inverse DFT with 1/N scaling.
inline cvec idft_ref(std::span<const cplx> x) {
    const size_t n = x.size();
    cvec out(n);
    for (size_t t = 0; t < n; ++t) {
        cplx acc{0.0, 0.0};
        for (size_t f = 0; f < n; ++f)
            acc += x[f] * std::polar(1.0, 2.0 * std::numbers::pi *
                                             static_cast<double>(f) * static_cast<double>(t) /
                                             static_cast<double>(n));
        out[t] = acc / static_cast<double>(n);
    }
    return out;
}

namespace detail {

// Pruning plan: the keep / nonzero index lists split down the recursion tree,
// built once per PruneSpec and reusable across calls.
struct PlanNode {
    std::vector<size_t> keep;     // local output indices needed (sorted)
    std::vector<size_t> nonzero;  // local input indices that may be nonzero (sorted)
    int child_even = -1;
    int child_odd = -1;
};

}  // namespace detail

class PrunePlan {
public:
    enum class Kind { DifFft, DitIfft };

    PrunePlan(const PruneSpec& spec, Kind kind) : spec_(spec), kind_(kind) {
        spec_.validate();
        std::sort(spec_.input_nonzero.begin(), spec_.input_nonzero.end());
        std::sort(spec_.output_keep.begin(), spec_.output_keep.end());
        build(spec_.size, spec_.output_keep,
              kind == Kind::DitIfft ? spec_.input_nonzero : all_indices(spec_.size));
    }

    const PruneSpec& spec() const { return spec_; }
    Kind kind() const { return kind_; }
    const detail::PlanNode& node(int id) const { return nodes_[static_cast<size_t>(id)]; }
    int root() const { return 0; }

private:
    static std::vector<size_t> all_indices(size_t n) {
        std::vector<size_t> v(n);
        for (size_t i = 0; i < n; ++i) v[i] = i;
        return v;
    }

    int build(size_t b, std::vector<size_t> keep, std::vector<size_t> nonzero) {
        const int id = static_cast<int>(nodes_.size());
        nodes_.push_back({});
        nodes_[static_cast<size_t>(id)].keep = std::move(keep);
        nodes_[static_cast<size_t>(id)].nonzero = std::move(nonzero);
        const auto& me = nodes_[static_cast<size_t>(id)];
        if (b % 2 != 0 || me.keep.empty() || me.nonzero.empty()) return id;

        const size_t h = b / 2;
        std::vector<size_t> ke, ko, ze, zo;
        if (kind_ == Kind::DifFft) {
            // DIF splits outputs by parity; all inputs feed both children.
            for (size_t j : me.keep) (j % 2 == 0 ? ke : ko).push_back(j / 2);
            ze = all_indices(h);
            zo = ze;
        } else {
            // DIT splits inputs by parity; child output j feeds parent j and j+h.
            for (size_t j : me.nonzero) (j % 2 == 0 ? ze : zo).push_back(j / 2);
            std::vector<size_t> sub;
            for (size_t j : me.keep) sub.push_back(j % h);
            std::sort(sub.begin(), sub.end());
            sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
            ke = sub;
            ko = std::move(sub);
        }
        const int ce = build(h, std::move(ke), std::move(ze));
        const int co = build(h, std::move(ko), std::move(zo));
        nodes_[static_cast<size_t>(id)].child_even = ce;
        nodes_[static_cast<size_t>(id)].child_odd = co;
        return id;
    }

    PruneSpec spec_;
    Kind kind_;
    std::vector<detail::PlanNode> nodes_;
    friend class Radix2Engine;
};

/// Radix-2 transform engine with a per-size twiddle table. Reentrant over
/// distinct buffers once constructed; the table is read-only.
class Radix2Engine {
public:
    struct Result {
        cvec values;
        OpCount ops;
    };

    explicit Radix2Engine(size_t n) : n_(n) {
        if (!PruneSpec::supported_size(n))
            throw ValidationError("transform size must be 2^k or 3*2^k, got " + std::to_string(n));
        tw_.resize(n);
        for (size_t k = 0; k < n; ++k)
            tw_[k] = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(k) /
                                         static_cast<double>(n));
    }

    size_t size() const { return n_; }

    /// Strict power-of-two full FFT (the classic radix-2 contract).
    Result fft_radix2(std::span<const cplx> x) const {
        require_pow2();
        return fft(x);
    }
    Result ifft_radix2(std::span<const cplx> x) const {
        require_pow2();
        return ifft(x);
    }

    /// Full transform on any supported size.
    Result fft(std::span<const cplx> x) const {
        check_len(x.size());
        Result r;
        r.values.assign(n_, cplx{0.0, 0.0});
        cvec work(x.begin(), x.end());
        dif_rec(work.data(), n_, 0, 1, nullptr, -1, r.values, r.ops, false);
        return r;
    }
    Result ifft(std::span<const cplx> x) const {
        check_len(x.size());
        Result r;
        r.values.assign(n_, cplx{0.0, 0.0});
        cvec work(x.begin(), x.end());
        dif_rec(work.data(), n_, 0, 1, nullptr, -1, r.values, r.ops, true);
        const double s = 1.0 / static_cast<double>(n_);
        for (auto& v : r.values) v *= s;
        return r;
    }

    /// DIF FFT with Skinner output pruning. values[i] is the spectrum at
    /// plan.spec().output_keep[i].
    Result fft_dif_pruned(std::span<const cplx> x, const PrunePlan& plan) const {
        check_plan(plan, PrunePlan::Kind::DifFft);
        check_len(x.size());
        Result r;
        cvec full(n_, cplx{0.0, 0.0});
        cvec work(x.begin(), x.end());
        dif_rec(work.data(), n_, 0, 1, &plan, plan.root(), full, r.ops, false);
        r.values.reserve(plan.spec().output_keep.size());
        for (size_t i : plan.spec().output_keep) r.values.push_back(full[i]);
        return r;
    }
    Result fft_dif_pruned(std::span<const cplx> x, const PruneSpec& spec) const {
        return fft_dif_pruned(x, PrunePlan(spec, PrunePlan::Kind::DifFft));
    }

    /// DIT IFFT with Markel input pruning and Skinner output pruning.
    /// values[i] is the time sample at plan.spec().output_keep[i]; spectrum
    /// entries outside input_nonzero are treated as zero.
    Result ifft_dit_pruned(std::span<const cplx> spectrum, const PrunePlan& plan) const {
        check_plan(plan, PrunePlan::Kind::DitIfft);
        check_len(spectrum.size());
        Result r;
        cvec out(n_, cplx{0.0, 0.0});
        dit_rec(spectrum, n_, 0, 1, plan, plan.root(), out, r.ops);
        const double s = 1.0 / static_cast<double>(n_);
        r.values.reserve(plan.spec().output_keep.size());
        for (size_t i : plan.spec().output_keep) r.values.push_back(out[i] * s);
        return r;
    }
    Result ifft_dit_pruned(std::span<const cplx> spectrum, const PruneSpec& spec) const {
        return ifft_dit_pruned(spectrum, PrunePlan(spec, PrunePlan::Kind::DitIfft));
    }

private:
    void require_pow2() const {
        if ((n_ & (n_ - 1)) != 0)
            throw ValidationError("fft_radix2/ifft_radix2 require a power-of-two length");
    }
    void check_len(size_t len) const {
        if (len != n_) throw ValidationError("signal length does not match engine size");
    }
    void check_plan(const PrunePlan& plan, PrunePlan::Kind kind) const {
        if (plan.spec().size != n_) throw ValidationError("prune plan size mismatch");
        if (plan.kind() != kind) throw ValidationError("prune plan kind mismatch");
    }

    // conj-symmetric twiddle access: forward W_n^k, inverse conj
    cplx w(size_t k, bool inverse) const {
        const cplx t = tw_[k % n_];
        return inverse ? std::conj(t) : t;
    }

    // DIF recursion. x: mutable block of length b. Outputs of this block map
    // to global bins g0 + j*gstep. plan/node prune the output set (node < 0
    // means keep everything).
    void dif_rec(cplx* x, size_t b, size_t g0, size_t gstep, const PrunePlan* plan,
                 int node, cvec& out, OpCount& ops, bool inverse) const {
        const detail::PlanNode* nd = (plan && node >= 0) ? &plan->node(node) : nullptr;
        if (nd && nd->keep.empty()) return;
        if (b == 1) {
            out[g0] = x[0];
            return;
        }
        if (b % 2 != 0) {  // direct base block (size 3)
            base_dft(x, b, g0, gstep, nd, out, ops, inverse);
            return;
        }
        const size_t h = b / 2;
        const size_t tstep = n_ / b;
        const bool even_alive = !nd || (nd->child_even >= 0 && !plan->node(nd->child_even).keep.empty());
        const bool odd_alive = !nd || (nd->child_odd >= 0 && !plan->node(nd->child_odd).keep.empty());
        if (!even_alive && !odd_alive) return;
        for (size_t k = 0; k < h; ++k) {
            const cplx a = x[k], c = x[k + h];
            if (even_alive) x[k] = a + c;
            if (odd_alive) {
                cplx v = a - c;
                if (k != 0) {
                    v *= w(k * tstep, inverse);
                    ++ops.complex_mults;
                }
                x[k + h] = v;
            }
            ++ops.butterflies;
        }
        if (even_alive)
            dif_rec(x, h, g0, gstep * 2, plan, nd ? nd->child_even : -1, out, ops, inverse);
        if (odd_alive)
            dif_rec(x + h, h, g0 + gstep, gstep * 2, plan, nd ? nd->child_odd : -1, out, ops, inverse);
    }

    void base_dft(const cplx* x, size_t m, size_t g0, size_t gstep,
                  const detail::PlanNode* nd, cvec& out, OpCount& ops, bool inverse) const {
        const size_t tstep = n_ / m;
        for (size_t r = 0; r < m; ++r) {
            if (nd && !std::binary_search(nd->keep.begin(), nd->keep.end(), r)) continue;
            cplx acc = x[0];
            for (size_t j = 1; j < m; ++j) {
                acc += x[j] * w((j * r % m) * tstep, inverse);
                if (j * r % m != 0) ++ops.complex_mults;
            }
            out[g0 + r * gstep] = acc;
            ops.butterflies += m - 1;
        }
    }

    // DIT inverse recursion. Reads spectrum bins i0 + k*istep directly from
    // the input; writes time samples 0..b-1 of this subtransform (unscaled).
    void dit_rec(std::span<const cplx> spec, size_t b, size_t i0, size_t istep,
                 const PrunePlan& plan, int node, cvec& out, OpCount& ops) const {
        const auto& nd = plan.node(node);
        if (nd.keep.empty() || nd.nonzero.empty()) return;  // all-zero or unneeded
        if (b == 1) {
            out[0] = spec[i0];
            return;
        }
        if (b % 2 != 0) {  // direct base block
            const size_t tstep = n_ / b;
            for (size_t r : nd.keep) {
                cplx acc{0.0, 0.0};
                for (size_t j : nd.nonzero) {
                    const size_t e = j * r % b;
                    acc += spec[i0 + j * istep] * std::conj(tw_[e * tstep]);
                    if (e != 0) ++ops.complex_mults;
                }
                out[r] = acc;
                ops.butterflies += nd.nonzero.size() > 1 ? nd.nonzero.size() - 1 : 0;
            }
            return;
        }
        const size_t h = b / 2;
        const size_t tstep = n_ / b;
        const auto& ne = plan.node(nd.child_even);
        const auto& no = plan.node(nd.child_odd);
        const bool even_alive = !ne.nonzero.empty() && !ne.keep.empty();
        const bool odd_alive = !no.nonzero.empty() && !no.keep.empty();
        cvec eb, ob;
        if (even_alive) {
            eb.assign(h, cplx{0.0, 0.0});
            dit_rec(spec, h, i0, istep * 2, plan, nd.child_even, eb, ops);
        }
        if (odd_alive) {
            ob.assign(h, cplx{0.0, 0.0});
            dit_rec(spec, h, i0 + istep, istep * 2, plan, nd.child_odd, ob, ops);
        }
        for (size_t k = 0; k < h; ++k) {
            const bool need_lo = std::binary_search(nd.keep.begin(), nd.keep.end(), k);
            const bool need_hi = std::binary_search(nd.keep.begin(), nd.keep.end(), k + h);
            if (!need_lo && !need_hi) continue;
            const cplx e = even_alive ? eb[k] : cplx{0.0, 0.0};
            cplx o{0.0, 0.0};
            if (odd_alive) {
                o = ob[k];
                if (k != 0) {  // W^{k+h} = -W^k is folded into the subtraction
                    o *= std::conj(tw_[k * tstep]);
                    ++ops.complex_mults;
                }
            }
            if (even_alive && odd_alive) ++ops.butterflies;
            if (need_lo) out[k] = e + o;
            if (need_hi) out[k + h] = e - o;
        }
    }

    size_t n_;
    cvec tw_;
};

/// Convenience single-shot helpers.
inline Radix2Engine::Result fft_radix2(std::span<const cplx> x) {
    return Radix2Engine(x.size()).fft_radix2(x);
}
inline Radix2Engine::Result ifft_radix2(std::span<const cplx> x) {
    return Radix2Engine(x.size()).ifft_radix2(x);
}

}  // namespace warpwave::spectral
