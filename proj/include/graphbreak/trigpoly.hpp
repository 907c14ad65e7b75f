#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace graphbreak {

using Cplx = std::complex<double>;
using MultiIndex = std::vector<int>;

/// Real samples on the uniform grid {i/R}^d over [0,1)^d, row-major with
/// axis 0 slowest.
class GridFn {
public:
    GridFn(int dim, int resolution);

    template <typename Fn>
    static GridFn from_function(int dim, int resolution, Fn&& f) {
        GridFn g(dim, resolution);
        std::vector<double> x(static_cast<std::size_t>(dim));
        for (std::size_t flat = 0; flat < g.values.size(); ++flat) {
            g.point_at(flat, x);
            g.values[flat] = f(std::span<const double>(x));
        }
        return g;
    }

    int dim() const noexcept { return dim_; }
    int resolution() const noexcept { return resolution_; }
    std::size_t size() const noexcept { return values.size(); }

    double mean() const;
    double max_abs() const;

    // flat index <-> grid coordinates
    void point_at(std::size_t flat, std::vector<double>& x) const;
    std::size_t flat_index(std::span<const int> idx) const;

    std::vector<double> values;

private:
    int dim_;
    int resolution_;
};

/// Real trigonometric polynomial on the d-torus, stored as sparse complex
/// Fourier coefficients f(x) = sum_k c_k exp(2*pi*i k.x) with the reality
/// constraint c_{-k} = conj(c_k) enforced on every write.
class TrigPoly {
public:
    explicit TrigPoly(int dim);

    static TrigPoly constant(int dim, double value);
    static TrigPoly cosine(int dim, const MultiIndex& k, double amplitude);
    static TrigPoly sine(int dim, const MultiIndex& k, double amplitude);

    int dim() const noexcept { return dim_; }
    /// Per-axis maximal stored frequency.
    int degree() const;
    const std::map<MultiIndex, Cplx>& coeffs() const noexcept { return coeffs_; }
    std::size_t mode_count() const noexcept { return coeffs_.size(); }

    void set_mode(const MultiIndex& k, Cplx c);
    Cplx mode(const MultiIndex& k) const;

    double eval(std::span<const double> x) const;
    double eval_deriv(std::span<const double> x, const MultiIndex& order) const;
    void gradient(std::span<const double> x, std::span<double> out) const;
    /// Row-major d*d Hessian.
    void hessian(std::span<const double> x, std::span<double> out) const;

    TrigPoly derivative(const MultiIndex& order) const;
    TrigPoly partial(int axis) const;
    TrigPoly laplacian() const;

    double mean() const;
    /// Zero-mean antiderivative; requires dim == 1 and mean 0.
    TrigPoly antiderivative_1d() const;
    /// Phi with Laplacian(Phi) = p and mean(Phi) = 0; requires mean(p) = 0.
    TrigPoly inverse_laplacian() const;

    TrigPoly& operator+=(const TrigPoly& rhs);
    TrigPoly& operator*=(double s);
    friend TrigPoly operator+(TrigPoly lhs, const TrigPoly& rhs) { return lhs += rhs; }
    friend TrigPoly operator*(TrigPoly p, double s) { return p *= s; }
    friend TrigPoly operator*(double s, TrigPoly p) { return p *= s; }

    /// Drop modes below rel_tol relative to the largest amplitude (c_0 kept).
    void prune(double rel_tol = kPruneRelTol);

    /// Alias-free sampling; requires resolution >= 2*degree()+1.
    GridFn sample(int resolution) const;

    /// Discrete Fourier analysis of grid samples, keeping |k_j| <= max_degree.
    static TrigPoly analyze(const GridFn& g, int max_degree);

    static constexpr double kPruneRelTol = 1e-15;

private:
    int dim_;
    std::map<MultiIndex, Cplx> coeffs_;
};

struct HolderNorm {
    double order = 0.0;  // s = integer_part + frac_part
    int integer_part = 0;
    double frac_part = 0.0;
    double value = 0.0;
    int grid_resolution = 0;       // method metadata
    std::uint64_t pair_count = 0;  // pairs sampled for the seminorm
};

struct Extrema {
    double min = 0.0;
    double max = 0.0;
    std::vector<double> argmin;
    std::vector<double> argmax;
};

struct ExtremaNorms {
    Extrema extrema;
    HolderNorm norm;
};

/// Grid scan at `resolution` per axis followed by damped-Newton polish.
Extrema refined_extrema(const TrigPoly& p, int resolution);

/// Extrema plus the C^s Holder norm: sum over derivative orders m <= r of
/// max_{|a|=m} sup|D^a p|, plus (for sigma > 0) the max sigma-quotient of the
/// order-r derivatives over grid pairs within distance 0.1 and random pairs.
/// Requires resolution >= 4*degree+1.
ExtremaNorms extrema_and_norms(const TrigPoly& p, double s, int resolution,
                               std::uint64_t seed = 0x9e3779b97f4a7c15ULL);

/// max_{|a|=m} sup|D^a p| for m = 0..max_order (refined extrema per index).
std::vector<double> derivative_sup_norms(const TrigPoly& p, int max_order, int resolution);

/// All multi-indices a in N^d with |a| = total.
std::vector<MultiIndex> multi_indices_of_order(int dim, int total);

}  // namespace graphbreak
