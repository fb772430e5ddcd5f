#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>

#include "sigkern/contour.hpp"
#include "sigkern/experiments.hpp"
#include "sigkern/goursat.hpp"
#include "sigkern/hyperbolic.hpp"
#include "sigkern/measures.hpp"
#include "sigkern/phi_kernel.hpp"
#include "sigkern/quadrature.hpp"
#include "sigkern/wiener.hpp"

using namespace sigkern;

namespace {

ContourFamily parse_family(const std::string& s) {
    if (s == "circle") return ContourFamily::circle;
    if (s == "parabolic") return ContourFamily::parabolic;
    if (s == "hyperbolic") return ContourFamily::hyperbolic;
    if (s == "cotangent") return ContourFamily::cotangent;
    throw CLI::ValidationError("unknown contour family " + s);
}

std::vector<PiecewiseLinearPath> read_path_list(const std::vector<std::string>& files) {
    std::vector<PiecewiseLinearPath> paths;
    for (const auto& f : files) paths.push_back(read_path_csv(f));
    return paths;
}

void print_measure_report(const GramSystem& sys, const Eigen::VectorXd& lambda) {
    const double qn = lambda.dot(sys.K * lambda);
    double d2 = qn - 2.0 * lambda.dot(sys.h) + sys.wiener_norm_sq;
    if (d2 < 0 && d2 > -1e-10) d2 = 0.0;
    const double align = lambda.dot(sys.h) / (std::sqrt(qn) * std::sqrt(sys.wiener_norm_sq));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sys.K);
    std::cout << "{\n  \"lambda\": [";
    for (int i = 0; i < lambda.size(); ++i)
        std::cout << (i ? ", " : "") << lambda(i);
    std::cout << "],\n  \"objective\": " << 0.5 * qn - sys.h.dot(lambda)
              << ",\n  \"mmd\": " << std::sqrt(d2) << ",\n  \"alignment\": " << align
              << ",\n  \"min_eig\": " << eig.eigenvalues().minCoeff() << "\n}\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted signature kernels, Wiener-measure kernels, and optimal measures"};
    app.require_subcommand(1);
    std::cout << std::setprecision(12);

    // kernel: base PDE solve
    auto* kernel = app.add_subcommand("kernel", "solve the kernel PDE for two paths");
    std::string path_a, path_b, out_csv;
    double theta_re = 1.0, theta_im = 0.0;
    int refine = 64;
    kernel->add_option("--path-a", path_a)->required();
    kernel->add_option("--path-b", path_b)->required();
    kernel->add_option("--theta-re", theta_re);
    kernel->add_option("--theta-im", theta_im);
    kernel->add_option("--refine", refine);
    kernel->add_option("--out", out_csv);
    kernel->callback([&] {
        const auto a = read_path_csv(path_a), b = read_path_csv(path_b);
        const auto surf = solve(a, b, Complex(theta_re, theta_im), refine);
        std::ostream* os = &std::cout;
        std::ofstream f;
        if (!out_csv.empty()) {
            f.open(out_csv);
            os = &f;
        }
        *os << "s,t,re,im\n" << std::setprecision(17);
        for (std::size_t i = 0; i < surf.s_grid.size(); ++i)
            for (std::size_t j = 0; j < surf.t_grid.size(); ++j)
                *os << surf.s_grid[i] << ',' << surf.t_grid[j] << ',' << surf.at(i, j).real()
                    << ',' << surf.at(i, j).imag() << '\n';
    });

    // quad: print a quadrature rule
    auto* quad = app.add_subcommand("quad", "print quadrature nodes and weights");
    std::string family = "legendre01";
    int qn = 10;
    double qalpha = 0.0, qbeta = 0.0;
    quad->add_option("--family", family,
                     "legendre01|chebyshev|jacobi|hermite|laguerre|rayleigh");
    quad->add_option("--n", qn);
    quad->add_option("--alpha", qalpha);
    quad->add_option("--beta", qbeta);
    quad->callback([&] {
        QuadratureRule rule;
        if (family == "legendre01") rule = make_rule(QuadFamily::legendre01, qn);
        else if (family == "chebyshev") rule = make_rule(QuadFamily::chebyshev, qn);
        else if (family == "jacobi") rule = make_rule(QuadFamily::jacobi, qn, qalpha, qbeta);
        else if (family == "hermite") rule = make_rule(QuadFamily::hermite_probabilist, qn);
        else if (family == "laguerre") rule = make_rule(QuadFamily::laguerre, qn, qalpha);
        else if (family == "rayleigh") rule = rayleigh_rule(qn);
        else throw CLI::ValidationError("unknown family");
        std::cout << "node,weight\n" << std::setprecision(17);
        for (int i = 0; i < rule.order; ++i)
            std::cout << rule.nodes[i] << ',' << rule.weights[i] << '\n';
    });

    // phikernel: weighted kernel by a representation
    auto* pk = app.add_subcommand("phikernel", "weighted kernel of two paths");
    std::string method = "random", phi = "uniform";
    int nodes = 20;
    double theta_u = 1.0, mellin_beta = 0.0;
    pk->add_option("--path-a", path_a)->required();
    pk->add_option("--path-b", path_b)->required();
    pk->add_option("--method", method, "random|fourier|mellin");
    pk->add_option("--phi", phi, "uniform|arcsine|beta:m|rayleigh|xsq|expcos|theta");
    pk->add_option("--nodes", nodes);
    pk->add_option("--refine", refine);
    pk->add_option("--u", theta_u);
    pk->add_option("--mellin-beta", mellin_beta);
    pk->callback([&] {
        const auto a = read_path_csv(path_a), b = read_path_csv(path_b);
        const double s = a.t_end(), t = b.t_end();
        double v;
        if (method == "random") {
            RandomisationTag tag;
            double m = 0;
            if (phi == "uniform") tag = RandomisationTag::uniform01;
            else if (phi == "arcsine") tag = RandomisationTag::arcsine;
            else if (phi == "rayleigh") tag = RandomisationTag::rayleigh;
            else if (phi.rfind("beta:", 0) == 0) {
                tag = RandomisationTag::beta1m;
                m = std::stod(phi.substr(5));
            } else throw CLI::ValidationError("bad phi for random method");
            v = kernel_by_randomisation(a, b, tag, nodes, refine, s, t, m);
        } else if (method == "fourier") {
            FourierTag tag;
            if (phi == "xsq") tag = FourierTag::xsq;
            else if (phi == "expcos") tag = FourierTag::expcos;
            else if (phi == "theta") tag = FourierTag::theta;
            else throw CLI::ValidationError("bad phi for fourier method");
            v = kernel_by_fourier(a, b, tag, nodes, refine, s, t, theta_u).value;
        } else if (method == "mellin") {
            v = kernel_by_mellin(a, b, mellin_beta, nodes, refine, s, t);
        } else {
            throw CLI::ValidationError("unknown method");
        }
        std::cout << v << '\n';
    });

    // develop: hyperbolic development of a path
    auto* dev = app.add_subcommand("develop", "development matrix of a path");
    double z_re = 1.0, z_im = 0.0;
    dev->add_option("--path", path_a)->required();
    dev->add_option("--z-re", z_re);
    dev->add_option("--z-im", z_im);
    dev->callback([&] {
        const auto p = read_path_csv(path_a);
        const auto G = develop(p, Complex(z_re, z_im));
        std::cout << G << "\ncorner: " << G(p.dim(), p.dim()) << '\n';
    });

    // wiener: cross-kernel with Brownian motion
    auto* wn = app.add_subcommand("wiener", "expected kernel against Wiener measure");
    double ws = 1.0;
    std::string wphi = "half-factorial", contour = "circle";
    int cn = 32;
    wn->add_option("--path", path_a)->required();
    wn->add_option("--phi", wphi, "half-factorial|one|beta:m");
    wn->add_option("--s", ws);
    wn->add_option("--contour", contour);
    wn->add_option("--n", cn);
    wn->callback([&] {
        const auto p = read_path_csv(path_a);
        ContourSpec spec;
        spec.family = parse_family(contour);
        spec.n_points = cn;
        double v;
        if (wphi == "half-factorial") v = expected_kernel_half_factorial(p, ws, p.t_end());
        else if (wphi == "one") v = expected_kernel_original(p, ws, p.t_end(), spec);
        else if (wphi.rfind("beta:", 0) == 0)
            v = expected_kernel_beta(p, ws, p.t_end(), std::stod(wphi.substr(5)), 24, spec);
        else throw CLI::ValidationError("bad phi");
        std::cout << v << '\n';
    });

    // rgamma: reciprocal gamma debug aid
    auto* rg = app.add_subcommand("rgamma", "reciprocal gamma by contour quadrature");
    double pval = 1.0;
    rg->add_option("--p", pval)->required();
    rg->add_option("--method", contour);
    rg->add_option("--n", cn);
    rg->callback([&] {
        ContourSpec spec;
        spec.family = parse_family(contour);
        spec.n_points = cn;
        std::cout << reciprocal_gamma(pval, spec) << '\n';
    });

    // mmd / optimal: Gram reports
    for (const char* name : {"mmd", "optimal"}) {
        auto* cmd = app.add_subcommand(
            name, std::string(name) == "mmd" ? "MMD of a weighted path set vs Wiener measure"
                                             : "optimal simplex weights for a path set");
        auto files = std::make_shared<std::vector<std::string>>();
        auto weights_csv = std::make_shared<std::string>();
        auto gphi = std::make_shared<std::string>("half-factorial");
        auto gmethod = std::make_shared<std::string>("oracle");
        cmd->add_option("--paths", *files, "path CSV files")->required()->expected(-1);
        cmd->add_option("--weights", *weights_csv, "one weight per line (mmd only)");
        cmd->add_option("--phi", *gphi);
        cmd->add_option("--method", *gmethod);
        const bool is_mmd = std::string(name) == "mmd";
        cmd->callback([files, weights_csv, gphi, gmethod, is_mmd] {
            const auto paths = read_path_list(*files);
            GramConfig gc;
            gc.phi = *gphi;
            gc.method = *gmethod;
            const GramSystem sys = gram(paths, gc);
            Eigen::VectorXd lambda;
            if (is_mmd) {
                const int n = static_cast<int>(paths.size());
                lambda = Eigen::VectorXd::Constant(n, 1.0 / n);
                if (!weights_csv->empty()) {
                    std::ifstream f(*weights_csv);
                    if (!f) throw CLI::ValidationError("cannot open " + *weights_csv);
                    for (int i = 0; i < n; ++i) f >> lambda(i);
                }
            } else {
                lambda = optimal_measure(sys).lambda;
            }
            print_measure_report(sys, lambda);
        });
    }

    // experiment: batch runner
    auto* ex = app.add_subcommand("experiment", "run a configured experiment");
    std::string cfg_file, out_file;
    ex->add_option("--config", cfg_file)->required();
    ex->add_option("--out", out_file);
    ex->callback([&] {
        const auto cfg = load_config(cfg_file);
        const std::string report = run_experiment(cfg, out_file);
        if (out_file.empty()) std::cout << report;
    });

    CLI11_PARSE(app, argc, argv);
    return 0;
}
