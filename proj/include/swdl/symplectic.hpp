#pragma once

#include <string>

#include "swdl/errors.hpp"

namespace swdl {

/// Real 2x2 matrix with unit determinant, the parameter of a 1-D linear
/// canonical transform. Immutable after construction; construction validates
/// |ad - bc - 1| <= det_tolerance and finiteness of all entries.
class SymplecticMatrix {
  public:
    static constexpr double det_tolerance = 1e-9;

    SymplecticMatrix(double a, double b, double c, double d);

    double a() const { return a_; }
    double b() const { return b_; }
    double c() const { return c_; }
    double d() const { return d_; }

    double det() const { return a_ * d_ - b_ * c_; }

    /// [[d,-b],[-c,a]]; product with *this is the identity to ~1e-12.
    SymplecticMatrix inverse() const;

    /// Flat record "a,b,c,d", row-major, full double precision.
    std::string to_csv() const;
    static SymplecticMatrix from_csv(const std::string& record);

  private:
    double a_, b_, c_, d_;
};

bool operator==(const SymplecticMatrix& x, const SymplecticMatrix& y);

/// Plain 2x2 matrix for the auxiliary coordinate maps (J, N, M, P_sigma);
/// two of them have determinant -1 and are deliberately not SymplecticMatrix.
struct Mat2 {
    double a, b, c, d;
};

Mat2 mul(const Mat2& x, const Mat2& y);
Mat2 as_mat2(const SymplecticMatrix& m);

namespace matrices {

/// [[0,1],[-1,0]]; the LCT with this matrix is the Fourier transform up to 1/sqrt(j).
SymplecticMatrix l1();

/// [[1,1],[-1/2,1/2]]; the coordinate matrix that reduces the symplectic
/// Wigner distribution to the classical one.
SymplecticMatrix wd_a1();

Mat2 j_swap();              ///< [[0,1],[1,0]] (det -1)
Mat2 n_flip();              ///< [[-1,0],[0,1]] (det -1)
Mat2 m_shear();             ///< [[0,-1],[1,1]]
Mat2 p_scale(double sigma); ///< [[1/sigma,0],[0,sigma]]

} // namespace matrices

/// Validate four entries as a symplectic matrix. Throws NotSymplectic with the
/// determinant residual on failure.
SymplecticMatrix validate(double a, double b, double c, double d);

/// A3 = [[a2*a1, b2*d1],[c2/d1, d2/a1]]. Requires a1,d1 != 0 (ZeroEntry).
SymplecticMatrix derive_a3(const SymplecticMatrix& a1, const SymplecticMatrix& a2);

/// A4 = [[a2*b1, b2*c1],[c2/c1, d2/b1]]. Requires b1,c1 != 0 (ZeroEntry).
SymplecticMatrix derive_a4(const SymplecticMatrix& a1, const SymplecticMatrix& a2);

/// A5 = [[a2*a1*b1, b2*c1*d1],[c2/(c1*d1), d2/(a1*b1)]]. Requires a1,b1,c1,d1 != 0.
SymplecticMatrix derive_a5(const SymplecticMatrix& a1, const SymplecticMatrix& a2);

/// Closed-form completion of (a1,b1) that minimizes c1^2 + d1^2 over all
/// symplectic completions: c1 = -b1/(a1^2+b1^2), d1 = a1/(a1^2+b1^2).
/// Throws DegenerateInput when a1 = b1 = 0.
SymplecticMatrix optimal_a1(double a1, double b1);

/// Kernel matrix matched to an LFM frequency rate beta so that, paired with
/// optimal_a1(a1,b1), the distribution of exp(j(alpha t + beta t^2)) collapses
/// onto a line: a2 = 2 beta (b1^2-a1^2) b2 / (a1^2+b1^2)^2, c2 = (a2 d2 - 1)/b2.
/// Throws ZeroEntry when b2 = 0.
SymplecticMatrix lfm_a2(double beta, double b2, double d2, double a1, double b1);

/// Signal-independent resolution lower bound b2^2 (c1^2+d1^2)^2 / 4.
double resolution_bound(const SymplecticMatrix& a1, const SymplecticMatrix& a2);

struct SuperresolutionFlags {
    bool beats_swd; ///< 0 < |b2| < 1
    bool beats_wdl; ///< 0 < c1^2 + d1^2 < 1/2
};

SuperresolutionFlags superresolution_flags(const SymplecticMatrix& a1,
                                           const SymplecticMatrix& a2);

} // namespace swdl
