#include "sigkern/goursat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sigkern {

namespace {

bool power_of_two(int r) { return r >= 1 && (r & (r - 1)) == 0; }

// Refined grid times and the exact per-cell displacement vectors.
void refine(const PiecewiseLinearPath& p, int refinement, std::vector<double>& grid,
            std::vector<double>& cell_inc /* ncells x d, row-major */) {
    const int d = p.dim();
    const std::size_t nseg = p.num_segments();
    grid.resize(nseg * refinement + 1);
    cell_inc.resize(nseg * refinement * d);
    grid[0] = p.times()[0];
    for (std::size_t s = 0; s < nseg; ++s) {
        const double t0 = p.times()[s], t1 = p.times()[s + 1];
        const auto inc = p.increment(s);
        for (int c = 0; c < refinement; ++c) {
            const std::size_t cell = s * refinement + c;
            grid[cell + 1] = (c + 1 == refinement)
                                 ? t1
                                 : t0 + (t1 - t0) * (c + 1) / static_cast<double>(refinement);
            for (int k = 0; k < d; ++k) cell_inc[cell * d + k] = inc[k] / refinement;
        }
    }
}

struct Prepared {
    std::vector<double> s_grid, t_grid;
    std::vector<double> inc;  // ns x nt cell inner products <dgamma_i, dsigma_j>
    std::size_t ns = 0, nt = 0;
};

Prepared prepare(const PiecewiseLinearPath& gamma, const PiecewiseLinearPath& sigma,
                 int refinement) {
    if (!power_of_two(refinement))
        throw std::invalid_argument("solve: refinement must be a power of two >= 1");
    if (gamma.dim() != sigma.dim()) throw std::invalid_argument("solve: dimension mismatch");
    Prepared p;
    std::vector<double> dg, ds;
    refine(gamma, refinement, p.s_grid, dg);
    refine(sigma, refinement, p.t_grid, ds);
    const int d = gamma.dim();
    p.ns = p.s_grid.size() - 1;
    p.nt = p.t_grid.size() - 1;
    p.inc.resize(p.ns * p.nt);
    for (std::size_t i = 0; i < p.ns; ++i)
        for (std::size_t j = 0; j < p.nt; ++j) {
            double v = 0;
            for (int k = 0; k < d; ++k) v += dg[i * d + k] * ds[j * d + k];
            p.inc[i * p.nt + j] = v;
        }
    return p;
}

inline void update_cell(std::vector<Complex>& K, std::size_t cols, Complex theta,
                        const double* inc, std::size_t ncellt, std::size_t i, std::size_t j) {
    const Complex left = K[(i + 1) * cols + j];
    const Complex up = K[i * cols + j + 1];
    const Complex diag = K[i * cols + j];
    const Complex coef = theta * inc[i * ncellt + j] * 0.5;
    K[(i + 1) * cols + j + 1] = left + up - diag + coef * (left + up);
}

KernelSurface assemble(Prepared&& p, std::vector<Complex>&& K, Complex theta) {
    KernelSurface surf;
    surf.s_grid = std::move(p.s_grid);
    surf.t_grid = std::move(p.t_grid);
    surf.values = std::move(K);
    surf.theta = theta;
    return surf;
}

}  // namespace

KernelSurface solve_serial(const PiecewiseLinearPath& gamma, const PiecewiseLinearPath& sigma,
                           Complex theta, int refinement) {
    auto p = prepare(gamma, sigma, refinement);
    const std::size_t cols = p.nt + 1;
    std::vector<Complex> K((p.ns + 1) * cols, Complex(1.0, 0.0));
    for (std::size_t i = 0; i < p.ns; ++i)
        for (std::size_t j = 0; j < p.nt; ++j)
            update_cell(K, cols, theta, p.inc.data(), p.nt, i, j);
    return assemble(std::move(p), std::move(K), theta);
}

KernelSurface solve(const PiecewiseLinearPath& gamma, const PiecewiseLinearPath& sigma,
                    Complex theta, int refinement) {
    auto p = prepare(gamma, sigma, refinement);
    const std::size_t cols = p.nt + 1;
    std::vector<Complex> K((p.ns + 1) * cols, Complex(1.0, 0.0));
    // Anti-diagonal wavefront: every cell on diagonal w = i + j depends only
    // on cells of diagonals w-1 and w-2, so each diagonal parallelizes with
    // results identical to the sequential sweep.
    const std::ptrdiff_t ns = static_cast<std::ptrdiff_t>(p.ns);
    const std::ptrdiff_t nt = static_cast<std::ptrdiff_t>(p.nt);
    for (std::ptrdiff_t w = 0; w < ns + nt - 1; ++w) {
        const std::ptrdiff_t ilo = std::max<std::ptrdiff_t>(0, w - nt + 1);
        const std::ptrdiff_t ihi = std::min(w, ns - 1);
#pragma omp parallel for schedule(static) if (ihi - ilo > 64)
        for (std::ptrdiff_t i = ilo; i <= ihi; ++i)
            update_cell(K, cols, theta, p.inc.data(), p.nt, static_cast<std::size_t>(i),
                        static_cast<std::size_t>(w - i));
    }
    return assemble(std::move(p), std::move(K), theta);
}

Complex value_at(const KernelSurface& surface, double s, double t) {
    const auto& sg = surface.s_grid;
    const auto& tg = surface.t_grid;
    const double eps = 1e-12;
    if (s < sg.front() - eps || s > sg.back() + eps || t < tg.front() - eps ||
        t > tg.back() + eps)
        throw std::out_of_range("value_at: point outside grid");
    s = std::clamp(s, sg.front(), sg.back());
    t = std::clamp(t, tg.front(), tg.back());
    const auto cell = [](const std::vector<double>& g, double x) {
        auto it = std::upper_bound(g.begin(), g.end(), x);
        std::size_t j = static_cast<std::size_t>(it - g.begin());
        if (j == 0) j = 1;
        if (j >= g.size()) j = g.size() - 1;
        return j - 1;
    };
    const std::size_t i = cell(sg, s), j = cell(tg, t);
    const double fs = (s - sg[i]) / (sg[i + 1] - sg[i]);
    const double ft = (t - tg[j]) / (tg[j + 1] - tg[j]);
    return (1 - fs) * (1 - ft) * surface.at(i, j) + fs * (1 - ft) * surface.at(i + 1, j) +
           (1 - fs) * ft * surface.at(i, j + 1) + fs * ft * surface.at(i + 1, j + 1);
}

std::pair<KernelSurface, KernelSurface> solve_rotation_pair(const PiecewiseLinearPath& gamma,
                                                            const PiecewiseLinearPath& sigma,
                                                            double x, int refinement) {
    auto p = prepare(gamma, sigma, refinement);
    const std::size_t cols = p.nt + 1;
    std::vector<double> Re((p.ns + 1) * cols, 1.0), Im((p.ns + 1) * cols, 0.0);
    const double cx = std::cos(x), sx = std::sin(x);
    for (std::size_t i = 0; i < p.ns; ++i)
        for (std::size_t j = 0; j < p.nt; ++j) {
            const double g = p.inc[i * p.nt + j] * 0.5;
            const double rl = Re[(i + 1) * cols + j], ru = Re[i * cols + j + 1];
            const double il = Im[(i + 1) * cols + j], iu = Im[i * cols + j + 1];
            const double rsum = rl + ru, isum = il + iu;
            Re[(i + 1) * cols + j + 1] =
                rl + ru - Re[i * cols + j] + g * (cx * rsum - sx * isum);
            Im[(i + 1) * cols + j + 1] =
                il + iu - Im[i * cols + j] + g * (sx * rsum + cx * isum);
        }
    KernelSurface re, im;
    re.s_grid = im.s_grid = p.s_grid;
    re.t_grid = im.t_grid = p.t_grid;
    re.theta = im.theta = Complex(cx, sx);
    re.values.resize(Re.size());
    im.values.resize(Im.size());
    for (std::size_t k = 0; k < Re.size(); ++k) {
        re.values[k] = Complex(Re[k], 0.0);
        im.values[k] = Complex(Im[k], 0.0);
    }
    return {std::move(re), std::move(im)};
}

double corner_value(const PiecewiseLinearPath& gamma, const PiecewiseLinearPath& sigma,
                    double theta, int refinement) {
    if (!power_of_two(refinement))
        throw std::invalid_argument("corner_value: refinement must be a power of two >= 1");
    if (gamma.dim() != sigma.dim())
        throw std::invalid_argument("corner_value: dimension mismatch");
    const int d = gamma.dim();
    std::vector<double> s_grid, t_grid, dg, ds;
    refine(gamma, refinement, s_grid, dg);
    refine(sigma, refinement, t_grid, ds);
    const std::size_t ns = s_grid.size() - 1, nt = t_grid.size() - 1;
    // Row i of the surface; the sweep below matches solve_serial's update.
    std::vector<double> row(nt + 1, 1.0);
    for (std::size_t i = 0; i < ns; ++i) {
        double diag = row[0];  // K[i][j] before row[j] is overwritten
        for (std::size_t j = 0; j < nt; ++j) {
            double ip = 0;
            for (int k = 0; k < d; ++k) ip += dg[i * d + k] * ds[j * d + k];
            const double left = row[j];         // K[i+1][j]
            const double up = row[j + 1];       // K[i][j+1]
            const double next = left + up - diag + theta * ip * 0.5 * (left + up);
            diag = up;
            row[j + 1] = next;
        }
    }
    return row[nt];
}

}  // namespace sigkern
