#ifndef EDEN_PRINCIPAL_HPP
#define EDEN_PRINCIPAL_HPP

#include <complex>
#include <string>
#include <vector>

#include "eden/geometry.hpp"

namespace eden {

// f in Z[t, t^-1]: coeffs[i] multiplies t^(offset + i); canonical form has
// nonzero first and last coefficients.
struct LaurentPoly {
    std::vector<long> coeffs;
    long offset = 0;

    long lo() const { return offset; }
    long hi() const { return offset + static_cast<long>(coeffs.size()) - 1; }
    long coeff(long k) const {
        long i = k - offset;
        return (i >= 0 && i < static_cast<long>(coeffs.size())) ? coeffs[i] : 0;
    }
    double l1() const;
};

LaurentPoly make_poly(std::vector<long> coeffs, long offset);
LaurentPoly parse_poly(const std::string& text);    // "f = c_lo,...,c_hi @ offset"
std::string format_poly(const LaurentPoly& f);

double mod1_dist(double a);                          // distance to 0 in R/Z

struct InvertibilityResult {
    bool invertible = false;
    double margin = 0.0;                             // certified min |f| on the circle
    std::complex<double> witness{0.0, 0.0};          // near-root when not invertible
};

// No zeros on the unit circle (Wiener): certified by exact checks at z = +-1
// plus a circle grid with a Lipschitz slack.
InvertibilityResult is_l1_invertible(const LaurentPoly& f);

// Truncated w ~ f^-1 in l1(Z), with a certified geometric tail.
struct SummableHomoclinic {
    long M = 0;                                      // support [-M, M]
    std::vector<double> w;                           // w[i] = w_{i - M}
    double residual = 0.0;                           // ||f*w - delta_0||_1 on the truncation
    double tail_bound = 0.0;                         // certified bound on the dropped tail
    double decay_rate = 0.0;                         // |w_n| <= decay_C * decay_rate^|n|
    double decay_C = 0.0;

    double at(long n) const {
        long i = n + M;
        return (i >= 0 && i < static_cast<long>(w.size())) ? w[i] : 0.0;
    }
    double l1() const;
};

SummableHomoclinic l1_inverse(const LaurentPoly& f, double tol);

// A concretely represented point of X_f: values on [lo, lo + size), zero
// (mod 1) outside up to tail_bound.
struct PrincipalPoint {
    long lo = 0;
    std::vector<double> values;                      // in [0, 1)
    double residual = 0.0;                           // max |(f x)_n mod 1| over the window
    double tail_bound = 0.0;

    double at(long n) const {
        long i = n - lo;
        return (i >= 0 && i < static_cast<long>(values.size())) ? values[i] : 0.0;
    }
    double summability() const;                      // sum of mod-1 distances to 0
};

PrincipalPoint fundamental_homoclinic(const LaurentPoly& f, double tol = 1e-9);

struct GlueTarget {
    Window window;                                   // d = 1
    std::vector<double> values;                      // mod-1 values per window cell
};

// One point eps-matching every target on its window; targets must be windows
// of integer combinations of homoclinic translates, recovered by a Toeplitz
// solve with integer rounding and post-hoc verification.
PrincipalPoint glue_specification(const LaurentPoly& f, const std::vector<GlueTarget>& targets,
                                  double eps);

// Separation beyond which cross-window interference of unit-coefficient
// gluing stays below eps/2 (used in error messages and tests).
long required_separation(const LaurentPoly& f, double eps);

} // namespace eden

#endif
