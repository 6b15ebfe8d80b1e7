#include "swdl/symplectic.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "swdl/io.hpp"

namespace swdl {

SymplecticMatrix::SymplecticMatrix(double a, double b, double c, double d)
    : a_(a), b_(b), c_(c), d_(d) {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(d)) {
        throw NotSymplectic("symplectic matrix entries must be finite",
                            std::numeric_limits<double>::quiet_NaN());
    }
    const double residual = a * d - b * c - 1.0;
    if (std::abs(residual) > det_tolerance) {
        std::ostringstream msg;
        msg << "matrix [[" << a << "," << b << "],[" << c << "," << d
            << "]] is not symplectic: det residual " << residual;
        throw NotSymplectic(msg.str(), residual);
    }
}

SymplecticMatrix SymplecticMatrix::inverse() const {
    return SymplecticMatrix(d_, -b_, -c_, a_);
}

std::string SymplecticMatrix::to_csv() const {
    return io::format_double(a_) + "," + io::format_double(b_) + "," +
           io::format_double(c_) + "," + io::format_double(d_);
}

SymplecticMatrix SymplecticMatrix::from_csv(const std::string& record) {
    const auto fields = io::split_csv_line(record);
    if (fields.size() != 4) {
        throw ConfigError("matrix record must have four fields \"a,b,c,d\", got \"" +
                          record + "\"");
    }
    double e[4];
    for (int i = 0; i < 4; ++i) {
        e[i] = io::parse_double(fields[i]);
    }
    return validate(e[0], e[1], e[2], e[3]);
}

bool operator==(const SymplecticMatrix& x, const SymplecticMatrix& y) {
    return x.a() == y.a() && x.b() == y.b() && x.c() == y.c() && x.d() == y.d();
}

Mat2 mul(const Mat2& x, const Mat2& y) {
    return Mat2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2 as_mat2(const SymplecticMatrix& m) {
    return Mat2{m.a(), m.b(), m.c(), m.d()};
}

namespace matrices {

SymplecticMatrix l1() { return SymplecticMatrix(0.0, 1.0, -1.0, 0.0); }

SymplecticMatrix wd_a1() { return SymplecticMatrix(1.0, 1.0, -0.5, 0.5); }

Mat2 j_swap() { return Mat2{0.0, 1.0, 1.0, 0.0}; }

Mat2 n_flip() { return Mat2{-1.0, 0.0, 0.0, 1.0}; }

Mat2 m_shear() { return Mat2{0.0, -1.0, 1.0, 1.0}; }

Mat2 p_scale(double sigma) { return Mat2{1.0 / sigma, 0.0, 0.0, sigma}; }

} // namespace matrices

SymplecticMatrix validate(double a, double b, double c, double d) {
    return SymplecticMatrix(a, b, c, d);
}

namespace {

void require_nonzero(double value, const char* name) {
    if (value == 0.0) {
        throw ZeroEntry(std::string("entry ") + name + " must be nonzero");
    }
}

} // namespace

SymplecticMatrix derive_a3(const SymplecticMatrix& a1, const SymplecticMatrix& a2) {
    require_nonzero(a1.a(), "a1");
    require_nonzero(a1.d(), "d1");
    return SymplecticMatrix(a2.a() * a1.a(), a2.b() * a1.d(),
                            a2.c() / a1.d(), a2.d() / a1.a());
}

SymplecticMatrix derive_a4(const SymplecticMatrix& a1, const SymplecticMatrix& a2) {
    require_nonzero(a1.b(), "b1");
    require_nonzero(a1.c(), "c1");
    return SymplecticMatrix(a2.a() * a1.b(), a2.b() * a1.c(),
                            a2.c() / a1.c(), a2.d() / a1.b());
}

SymplecticMatrix derive_a5(const SymplecticMatrix& a1, const SymplecticMatrix& a2) {
    require_nonzero(a1.a(), "a1");
    require_nonzero(a1.b(), "b1");
    require_nonzero(a1.c(), "c1");
    require_nonzero(a1.d(), "d1");
    return SymplecticMatrix(a2.a() * a1.a() * a1.b(), a2.b() * a1.c() * a1.d(),
                            a2.c() / (a1.c() * a1.d()), a2.d() / (a1.a() * a1.b()));
}

SymplecticMatrix optimal_a1(double a1, double b1) {
    const double s = a1 * a1 + b1 * b1;
    if (s == 0.0) {
        throw DegenerateInput("optimal_a1 requires (a1,b1) != (0,0)");
    }
    return SymplecticMatrix(a1, b1, -b1 / s, a1 / s);
}

SymplecticMatrix lfm_a2(double beta, double b2, double d2, double a1, double b1) {
    require_nonzero(b2, "b2");
    const double s = a1 * a1 + b1 * b1;
    const double a2 = 2.0 * beta * (b1 * b1 - a1 * a1) * b2 / (s * s);
    const double c2 = (a2 * d2 - 1.0) / b2;
    return SymplecticMatrix(a2, b2, c2, d2);
}

double resolution_bound(const SymplecticMatrix& a1, const SymplecticMatrix& a2) {
    require_nonzero(a2.b(), "b2");
    const double q = a1.c() * a1.c() + a1.d() * a1.d();
    return a2.b() * a2.b() * q * q / 4.0;
}

SuperresolutionFlags superresolution_flags(const SymplecticMatrix& a1,
                                           const SymplecticMatrix& a2) {
    const double ab2 = std::abs(a2.b());
    const double q = a1.c() * a1.c() + a1.d() * a1.d();
    return SuperresolutionFlags{ab2 > 0.0 && ab2 < 1.0, q > 0.0 && q < 0.5};
}

} // namespace swdl
