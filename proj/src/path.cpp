#include "sigkern/path.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sigkern {

PiecewiseLinearPath::PiecewiseLinearPath(std::vector<double> times,
                                         std::vector<double> flat_points, int dim)
    : times_(std::move(times)), pts_(std::move(flat_points)), dim_(dim) {
    if (dim_ < 1) throw std::invalid_argument("path dimension must be >= 1");
    if (times_.size() < 2) throw std::invalid_argument("path needs at least two vertices");
    if (pts_.size() != times_.size() * static_cast<std::size_t>(dim_))
        throw std::invalid_argument("times/points length mismatch");
    for (std::size_t i = 1; i < times_.size(); ++i)
        if (!(times_[i] > times_[i - 1]))
            throw std::invalid_argument("timestamps must be strictly increasing");
    for (double x : pts_)
        if (!std::isfinite(x)) throw std::invalid_argument("non-finite vertex coordinate");
}

PiecewiseLinearPath PiecewiseLinearPath::from_samples(
    const std::vector<double>& times, const std::vector<std::vector<double>>& points) {
    if (times.size() != points.size())
        throw std::invalid_argument("times/points length mismatch");
    if (points.empty()) throw std::invalid_argument("empty path");
    const int d = static_cast<int>(points.front().size());
    std::vector<double> flat;
    flat.reserve(times.size() * d);
    for (const auto& p : points) {
        if (static_cast<int>(p.size()) != d)
            throw std::invalid_argument("inconsistent vertex dimension");
        flat.insert(flat.end(), p.begin(), p.end());
    }
    return PiecewiseLinearPath(times, std::move(flat), d);
}

std::vector<double> PiecewiseLinearPath::velocity(std::size_t seg) const {
    std::vector<double> v(dim_);
    const double dt = segment_duration(seg);
    for (int c = 0; c < dim_; ++c) v[c] = (point(seg + 1, c) - point(seg, c)) / dt;
    return v;
}

std::vector<double> PiecewiseLinearPath::increment(std::size_t seg) const {
    std::vector<double> v(dim_);
    for (int c = 0; c < dim_; ++c) v[c] = point(seg + 1, c) - point(seg, c);
    return v;
}

double PiecewiseLinearPath::length_to(double s) const {
    if (s < t_begin() - 1e-12 || s > t_end() + 1e-12)
        throw std::out_of_range("length_to: time outside path domain");
    s = std::min(std::max(s, t_begin()), t_end());
    double acc = 0.0;
    for (std::size_t j = 0; j + 1 < times_.size(); ++j) {
        if (s <= times_[j]) break;
        const double frac = std::min(1.0, (s - times_[j]) / segment_duration(j));
        double seg2 = 0.0;
        for (int c = 0; c < dim_; ++c) {
            const double dx = point(j + 1, c) - point(j, c);
            seg2 += dx * dx;
        }
        acc += frac * std::sqrt(seg2);
    }
    return acc;
}

PiecewiseLinearPath PiecewiseLinearPath::restrict_to(double s) const {
    if (!(s > t_begin()) || s > t_end() + 1e-12)
        throw std::out_of_range("restrict_to: time outside (t_begin, t_end]");
    s = std::min(s, t_end());
    std::vector<double> t;
    std::vector<double> p;
    for (std::size_t i = 0; i < times_.size() && times_[i] < s - 1e-15; ++i) {
        t.push_back(times_[i]);
        for (int c = 0; c < dim_; ++c) p.push_back(point(i, c));
    }
    // interpolated (or coincident) final vertex
    const std::size_t j = t.size() - 1;  // last full vertex index
    const double frac = (s - times_[j]) / segment_duration(j);
    t.push_back(s);
    for (int c = 0; c < dim_; ++c)
        p.push_back(point(j, c) + frac * (point(j + 1, c) - point(j, c)));
    return PiecewiseLinearPath(std::move(t), std::move(p), dim_);
}

PiecewiseLinearPath PiecewiseLinearPath::scale(double theta) const {
    std::vector<double> p(pts_);
    for (double& x : p) x *= theta;
    return PiecewiseLinearPath(times_, std::move(p), dim_);
}

ComplexPath scale(const PiecewiseLinearPath& path, Complex theta) {
    return ComplexPath{path.scale(theta.real()), path.scale(theta.imag())};
}

PiecewiseLinearPath read_path_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty path CSV");
    std::vector<double> times;
    std::vector<std::vector<double>> points;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        std::vector<double> row;
        while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
        if (row.size() < 2) throw std::runtime_error("path CSV row needs t and >=1 coordinate");
        times.push_back(row.front());
        points.emplace_back(row.begin() + 1, row.end());
    }
    return PiecewiseLinearPath::from_samples(times, points);
}

PiecewiseLinearPath read_path_csv(const std::string& filename) {
    std::ifstream f(filename);
    if (!f) throw std::runtime_error("cannot open path CSV: " + filename);
    return read_path_csv(f);
}

void write_path_csv(std::ostream& out, const PiecewiseLinearPath& path) {
    out << "t";
    for (int c = 0; c < path.dim(); ++c) out << ",x" << (c + 1);
    out << "\n";
    out.precision(17);
    for (std::size_t i = 0; i < path.num_vertices(); ++i) {
        out << path.times()[i];
        for (int c = 0; c < path.dim(); ++c) out << "," << path.point(i, c);
        out << "\n";
    }
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

}  // namespace sigkern
