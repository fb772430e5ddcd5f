#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace sigkern {

using Complex = std::complex<double>;

/// Piecewise-linear path in R^d: strictly increasing timestamps and one
/// vertex per timestamp.  Immutable after construction.
class PiecewiseLinearPath {
public:
    PiecewiseLinearPath(std::vector<double> times, std::vector<double> flat_points, int dim);

    static PiecewiseLinearPath from_samples(const std::vector<double>& times,
                                            const std::vector<std::vector<double>>& points);

    int dim() const { return dim_; }
    std::size_t num_vertices() const { return times_.size(); }
    std::size_t num_segments() const { return times_.size() - 1; }
    const std::vector<double>& times() const { return times_; }
    double t_begin() const { return times_.front(); }
    double t_end() const { return times_.back(); }

    /// Coordinate c of vertex i.
    double point(std::size_t i, int c) const { return pts_[i * dim_ + c]; }

    /// Segment derivative vector (p_{j+1}-p_j)/(t_{j+1}-t_j).
    std::vector<double> velocity(std::size_t seg) const;
    /// Segment displacement p_{j+1}-p_j.
    std::vector<double> increment(std::size_t seg) const;
    double segment_duration(std::size_t seg) const { return times_[seg + 1] - times_[seg]; }

    /// Euclidean arc length of the path restricted to [t_begin, s].
    double length_to(double s) const;
    double length() const { return length_to(t_end()); }

    /// Sub-path on [t_begin, s]; the last vertex is interpolated when s
    /// falls inside a segment.  Requires s > t_begin.
    PiecewiseLinearPath restrict_to(double s) const;

    /// Vertices multiplied by a real scalar.
    PiecewiseLinearPath scale(double theta) const;

private:
    std::vector<double> times_;
    std::vector<double> pts_;   // row-major, num_vertices x dim
    int dim_;
};

/// Complex-rescaled path stored as a (re, im) pair sharing one time mesh.
struct ComplexPath {
    PiecewiseLinearPath re;
    PiecewiseLinearPath im;
};

/// Vertices multiplied coordinatewise by a complex scalar.
ComplexPath scale(const PiecewiseLinearPath& path, Complex theta);

/// CSV format: header "t,x1,...,xd", one row per vertex, rows sorted by t.
PiecewiseLinearPath read_path_csv(const std::string& filename);
PiecewiseLinearPath read_path_csv(std::istream& in);
void write_path_csv(std::ostream& out, const PiecewiseLinearPath& path);

double dot(const std::vector<double>& a, const std::vector<double>& b);
double norm2(const std::vector<double>& a);

}  // namespace sigkern
