#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "swdl/lct.hpp"
#include "swdl/signal.hpp"
#include "swdl/symplectic.hpp"

namespace swdl {

enum class Method { definition, equivalent };

/// Complex distribution values over a rectangular (t, u) lattice, together
/// with the matrices and computation path that produced them.
struct TFGrid {
    double t0 = 0.0, dt = 0.0;
    double u0 = 0.0, du = 0.0;
    std::size_t nt = 0, nu = 0;
    std::vector<cplx> values; ///< row-major, index [t][u]
    SymplecticMatrix a1{1, 0, 0, 1};
    SymplecticMatrix a2{0, 1, -1, 0};
    Method method = Method::definition;

    cplx& at(std::size_t it, std::size_t iu) { return values[it * nu + iu]; }
    const cplx& at(std::size_t it, std::size_t iu) const { return values[it * nu + iu]; }
    double t_at(std::size_t it) const { return t0 + static_cast<double>(it) * dt; }
    double u_at(std::size_t iu) const { return u0 + static_cast<double>(iu) * du; }
    double peak_abs() const;
    bool same_axes(const TFGrid& other) const;
};

/// chi(u,t) of the LCT-domain form:
/// e^{j(d2/(2b2) u^2 + a1/(b2 c1) u t + a2 a1 b1/(2 b2 c1 d1) t^2)} / sqrt(j b2 c1 d1).
cplx chi_prefactor(const SymplecticMatrix& a1, const SymplecticMatrix& a2, double u,
                   double t);

/// Direct form: for every cell, oscillation-aware quadrature of
/// f(b1 t + d1 e) conj(f(a1 t + c1 e)) K^{A2}(u, e) over the e-range where both
/// arguments stay inside the signal support (exact zero when that range is
/// empty). Requires b2 != 0.
TFGrid swdl_definition(const Signal& f, const SymplecticMatrix& a1,
                       const SymplecticMatrix& a2, const AxisSpec& t_grid,
                       const AxisSpec& u_grid);

/// LCT-product form: chi(u,t)/sqrt(2 pi) times the v-integral of the
/// chirp-corrected transforms of the A3/A4 matrices. Requires all entries of
/// a1 nonzero and b2 != 0.
TFGrid swdl_equivalent(const Signal& f, const SymplecticMatrix& a1,
                       const SymplecticMatrix& a2, const AxisSpec& t_grid,
                       const AxisSpec& u_grid);

TFGrid swdl(const Signal& f, const SymplecticMatrix& a1, const SymplecticMatrix& a2,
            const AxisSpec& t_grid, const AxisSpec& u_grid, Method method);

enum class SpecialCase { wd, swd, wdl };

/// Table of reductions: WD = (wd_a1, L1); SWD(A1) = (A1, L1); WDL(A2) = (wd_a1, A2).
TFGrid special_case(const Signal& f, SpecialCase which,
                    std::optional<SymplecticMatrix> a1,
                    std::optional<SymplecticMatrix> a2, const AxisSpec& t_grid,
                    const AxisSpec& u_grid);

struct MarginalResult {
    std::vector<cplx> values;
    bool truncation_warning = false; ///< |W| at grid edge exceeded 1e-6 of peak
};

/// u-quadrature of W(t,u) K^{A2^{-1}}(0,u); equals f(b1 t) conj(f(a1 t)).
MarginalResult marginal_time(const TFGrid& grid, const SymplecticMatrix& a2);

/// t-quadrature of W(t,u) K^{A5^{-1}}(t,0); equals
/// L^{A3}f(a1 d1 u) conj(L^{A4}f(b1 c1 u)). Requires all entries of a1 nonzero.
MarginalResult marginal_lcf(const TFGrid& grid, const SymplecticMatrix& a1,
                            const SymplecticMatrix& a2);

/// f(t) = (1/conj(f0)) Int W(-c1 t, u) K^{A2^{-1}}(a1 t, u) du, with
/// windowed-sinc interpolation of the grid along t. Throws ZeroAtOrigin when
/// |f0| < 1e-12.
SampledSignal reconstruct(const TFGrid& grid, const SymplecticMatrix& a1,
                          const SymplecticMatrix& a2, cplx f0,
                          const AxisSpec& t_out);

// Energy-conservation functionals; each equals ||f||^2 under its side
// condition on the grid's matrices.
/// |b1| Int W(t,u) K^{A2^{-1}}(0,u) dt du; side condition a1 = b1.
cplx energy_time(const TFGrid& grid);
/// |b1| conj(sqrt(c1)) sqrt(d1) Int W(t,u) K^{A5^{-1}}(t,0) dt du; side
/// conditions a1 = b1 and a2 = d2 = 0. Square roots take the principal
/// branch; for c1 < 0 the source identity leaves the branch of sqrt(c1)
/// unpinned and the principal choice flips the sign.
cplx energy_lcf(const TFGrid& grid);
/// |d1| sqrt(j 2 pi b2) W(0,0); side conditions c1 = d1 and a2 = 0. W(0,0)
/// is windowed-sinc interpolated when the origin is off-lattice.
cplx energy_origin(const TFGrid& grid);

/// Windowed-sinc interpolation of the grid at an arbitrary (t, u) inside it.
cplx grid_interpolate(const TFGrid& grid, double t, double u);

/// 2-D lattice inner product <Wf, Wg>; equals |<f,g>|^2. Axes must match.
cplx moyal_inner(const TFGrid& f_grid, const TFGrid& g_grid);

/// sqrt of the 2-D lattice integral of |W|^2.
double grid_l2_norm(const TFGrid& grid);

/// Relative L2 distance between two grids on identical axes.
double grid_rel_l2_distance(const TFGrid& x, const TFGrid& y);

} // namespace swdl
