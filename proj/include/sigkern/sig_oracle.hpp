#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "sigkern/path.hpp"

namespace sigkern {

/// Dense truncated tensor-series element: level k holds dim^k coefficients.
/// Brute-force representation used as the independent oracle throughout.
template <class S>
struct TruncatedTensor {
    int dim = 0;
    int depth = 0;
    std::vector<std::vector<S>> levels;  // levels[k].size() == dim^k

    static TruncatedTensor unit(int dim, int depth) {
        TruncatedTensor t;
        t.dim = dim;
        t.depth = depth;
        t.levels.resize(depth + 1);
        std::size_t sz = 1;
        for (int k = 0; k <= depth; ++k) {
            t.levels[k].assign(sz, S(0));
            sz *= dim;
        }
        t.levels[0][0] = S(1);
        return t;
    }
};

/// Signature of one linear segment with displacement v*dt: level k is
/// (v*dt)^{tensor k} / k!.
template <class S>
TruncatedTensor<S> segment_signature(const std::vector<S>& v, double dt, int depth) {
    if (!(dt > 0)) throw std::invalid_argument("segment_signature: duration must be > 0");
    if (depth < 0) throw std::invalid_argument("segment_signature: depth must be >= 0");
    const int d = static_cast<int>(v.size());
    auto out = TruncatedTensor<S>::unit(d, depth);
    std::vector<S> x(v);
    for (auto& c : x) c *= dt;
    for (int k = 1; k <= depth; ++k) {
        const auto& prev = out.levels[k - 1];
        auto& cur = out.levels[k];
        for (std::size_t i = 0; i < prev.size(); ++i)
            for (int c = 0; c < d; ++c)
                cur[i * d + c] = prev[i] * x[c] / static_cast<double>(k);
    }
    return out;
}

/// Truncated tensor product: level k of the result is sum_l a_l (x) b_{k-l}.
template <class S>
TruncatedTensor<S> chen_concat(const TruncatedTensor<S>& a, const TruncatedTensor<S>& b) {
    if (a.dim != b.dim || a.depth != b.depth)
        throw std::invalid_argument("chen_concat: shape mismatch");
    const int d = a.dim;
    auto out = TruncatedTensor<S>::unit(d, a.depth);
    out.levels[0][0] = a.levels[0][0] * b.levels[0][0];
    for (int k = 1; k <= a.depth; ++k) {
        auto& dst = out.levels[k];
        std::fill(dst.begin(), dst.end(), S(0));
        for (int l = 0; l <= k; ++l) {
            const auto& al = a.levels[l];
            const auto& br = b.levels[k - l];
            const std::size_t nb = br.size();
            for (std::size_t i = 0; i < al.size(); ++i) {
                if (al[i] == S(0)) continue;
                const S ai = al[i];
                S* row = dst.data() + i * nb;
                for (std::size_t j = 0; j < nb; ++j) row[j] += ai * br[j];
            }
        }
    }
    return out;
}

/// Exact truncated signature of a piecewise-linear path: fold of
/// chen_concat over per-segment closed forms.
inline TruncatedTensor<double> truncated_signature(const PiecewiseLinearPath& path, int depth) {
    auto sig = TruncatedTensor<double>::unit(path.dim(), depth);
    for (std::size_t j = 0; j < path.num_segments(); ++j)
        sig = chen_concat(sig, segment_signature(path.velocity(j), path.segment_duration(j), depth));
    return sig;
}

/// Signature of the path restricted to [t_begin, s]; unit tensor at s == t_begin.
inline TruncatedTensor<double> truncated_signature_to(const PiecewiseLinearPath& path, double s,
                                                      int depth) {
    if (std::abs(s - path.t_begin()) < 1e-15)
        return TruncatedTensor<double>::unit(path.dim(), depth);
    return truncated_signature(path.restrict_to(s), depth);
}

/// Complex-scaled signature, used by scaling-identity checks.
inline TruncatedTensor<Complex> truncated_signature_scaled(const PiecewiseLinearPath& path,
                                                           Complex theta, int depth) {
    auto sig = TruncatedTensor<Complex>::unit(path.dim(), depth);
    for (std::size_t j = 0; j < path.num_segments(); ++j) {
        auto v = path.velocity(j);
        std::vector<Complex> vc(v.size());
        for (std::size_t c = 0; c < v.size(); ++c) vc[c] = theta * v[c];
        sig = chen_concat(sig, segment_signature(vc, path.segment_duration(j), depth));
    }
    return sig;
}

/// Hilbert-Schmidt inner product of level k.
template <class S>
S level_inner(const TruncatedTensor<S>& a, const TruncatedTensor<S>& b, int k) {
    S s(0);
    const auto& x = a.levels[k];
    const auto& y = b.levels[k];
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

template <class S>
double level_norm(const TruncatedTensor<S>& a, int k) {
    double s = 0;
    for (const auto& x : a.levels[k]) s += std::norm(std::complex<double>(x));
    return std::sqrt(s);
}

/// Truncated phi-kernel sum_{k<=N} phi(k) <S(gamma)^k_{a,s}, S(sigma)^k_{a,t}>.
template <class Phi>
auto truncated_phi_kernel(const PiecewiseLinearPath& gamma, const PiecewiseLinearPath& sigma,
                          Phi&& phi, int depth, double s, double t) -> decltype(phi(0)) {
    const auto sa = truncated_signature_to(gamma, s, depth);
    const auto sb = truncated_signature_to(sigma, t, depth);
    decltype(phi(0)) acc{};
    for (int k = 0; k <= depth; ++k) acc += phi(k) * level_inner(sa, sb, k);
    return acc;
}

/// Tail bound sum_{k>N} |phi(k)| (Lg*Ls)^k / (k!)^2, summed until the terms
/// are negligible.  Throws if the partial sums look divergent (phi violating
/// the summability condition).
double truncation_error_bound(const std::function<double(int)>& phi_abs, double len_gamma,
                              double len_sigma, int depth);

/// Even iterated-integral contraction of order n:
///   sum_{i_1..i_n} S^{2n}[i_1,i_1,i_2,i_2,...,i_n,i_n],
/// i.e. the coefficient multiplying z^{2n} in the development corner series.
double even_contraction(const TruncatedTensor<double>& sig, int n);

}  // namespace sigkern
