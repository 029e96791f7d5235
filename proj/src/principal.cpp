#include "eden/principal.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace eden {

double LaurentPoly::l1() const {
    double s = 0.0;
    for (long c : coeffs) s += std::abs(static_cast<double>(c));
    return s;
}

double SummableHomoclinic::l1() const {
    double s = 0.0;
    for (double v : w) s += std::abs(v);
    return s;
}

double PrincipalPoint::summability() const {
    double s = 0.0;
    for (double v : values) s += mod1_dist(v);
    return s;
}

double mod1_dist(double a) {
    double f = a - std::floor(a);
    return std::min(f, 1.0 - f);
}

namespace {

double signed_mod1(double a) {
    // representative in [-1/2, 1/2)
    double f = a - std::floor(a);
    return f < 0.5 ? f : f - 1.0;
}

} // namespace

LaurentPoly make_poly(std::vector<long> coeffs, long offset) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    while (!coeffs.empty() && coeffs.front() == 0) { coeffs.erase(coeffs.begin()); ++offset; }
    if (coeffs.empty()) throw InvalidInputError("zero Laurent polynomial");
    LaurentPoly f;
    f.coeffs = std::move(coeffs);
    f.offset = offset;
    return f;
}

LaurentPoly parse_poly(const std::string& text) {
    std::string t = text;
    auto eq = t.find('=');
    if (eq != std::string::npos) t = t.substr(eq + 1);
    long offset = 0;
    auto at = t.find('@');
    if (at != std::string::npos) {
        offset = std::stol(t.substr(at + 1));
        t = t.substr(0, at);
    }
    std::vector<long> coeffs;
    std::istringstream in(t);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
        if (tok.empty()) throw InvalidInputError("empty coefficient in polynomial");
        std::size_t used = 0;
        long v = std::stol(tok, &used);
        if (used != tok.size()) throw InvalidInputError("bad coefficient: " + tok);
        coeffs.push_back(v);
    }
    return make_poly(std::move(coeffs), offset);
}

std::string format_poly(const LaurentPoly& f) {
    std::ostringstream os;
    os << "f = ";
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) os << (i ? "," : "") << f.coeffs[i];
    os << " @ " << f.offset;
    return os.str();
}

namespace {

std::complex<double> eval_on_circle(const LaurentPoly& f, double theta) {
    std::complex<double> s{0.0, 0.0};
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        double e = static_cast<double>(f.offset + static_cast<long>(i)) * theta;
        s += static_cast<double>(f.coeffs[i]) * std::complex<double>(std::cos(e), std::sin(e));
    }
    return s;
}

std::vector<std::complex<double>> poly_roots(const LaurentPoly& f) {
    // roots of sum coeffs[i] z^i; the t^offset unit does not move circle roots
    long d = static_cast<long>(f.coeffs.size()) - 1;
    if (d == 0) return {};
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
    double lead = static_cast<double>(f.coeffs.back());
    for (long i = 0; i < d; ++i) {
        companion(i, d - 1) = -static_cast<double>(f.coeffs[i]) / lead;
        if (i > 0) companion(i, i - 1) = 1.0;
    }
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion);
    std::vector<std::complex<double>> roots;
    for (long i = 0; i < d; ++i) roots.push_back(solver.eigenvalues()(i));
    return roots;
}

} // namespace

InvertibilityResult is_l1_invertible(const LaurentPoly& f) {
    InvertibilityResult out;
    // exact integer zeros at z = +-1
    long at1 = 0, atm1 = 0;
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        at1 += f.coeffs[i];
        long e = f.offset + static_cast<long>(i);
        bool odd = ((e % 2) + 2) % 2 == 1;
        atm1 += odd ? -f.coeffs[i] : f.coeffs[i];
    }
    if (at1 == 0) {
        out.invertible = false;
        out.witness = {1.0, 0.0};
        return out;
    }
    if (atm1 == 0) {
        out.invertible = false;
        out.witness = {-1.0, 0.0};
        return out;
    }
    double lip = 0.0;
    for (std::size_t i = 0; i < f.coeffs.size(); ++i)
        lip += std::abs(static_cast<double>(f.coeffs[i])) *
               std::abs(static_cast<double>(f.offset + static_cast<long>(i)));
    if (lip == 0.0) {
        // constant times a unit
        out.invertible = true;
        out.margin = std::abs(static_cast<double>(f.coeffs[0]));
        return out;
    }
    for (long N = 1 << 12; N <= (1 << 22); N <<= 2) {
        double min_abs = std::numeric_limits<double>::infinity();
        double min_theta = 0.0;
        for (long j = 0; j < N; ++j) {
            double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(N);
            double v = std::abs(eval_on_circle(f, theta));
            if (v < min_abs) { min_abs = v; min_theta = theta; }
        }
        double slack = lip * std::numbers::pi / static_cast<double>(N);
        if (min_abs > slack) {
            out.invertible = true;
            out.margin = min_abs - slack;
            return out;
        }
        if (min_abs < 1e-9 && N >= (1 << 18)) {
            out.invertible = false;
            out.margin = min_abs;
            out.witness = {std::cos(min_theta), std::sin(min_theta)};
            return out;
        }
    }
    // the grid cannot certify either way: fall back to the companion roots
    // (cyclotomic-type factors put zeros on the circle away from +-1)
    for (const auto& r : poly_roots(f)) {
        if (std::abs(std::abs(r) - 1.0) > 1e-8) continue;
        std::complex<double> z = r / std::abs(r);
        if (std::abs(eval_on_circle(f, std::arg(z))) < 1e-8) {
            out.invertible = false;
            out.margin = std::abs(eval_on_circle(f, std::arg(z)));
            out.witness = z;
            return out;
        }
    }
    throw InconclusiveError("could not separate " + format_poly(f) + " from the unit circle");
}

namespace {

struct Decay {
    double rate;     // certified rho < 1
    double C;        // |w_n| <= C * rate^|n|
};

Decay certified_decay(const LaurentPoly& f) {
    auto roots = poly_roots(f);
    double rho = 0.0;
    for (const auto& r : roots) {
        double a = std::abs(r);
        if (a < 1e-14) continue;                 // z = 0 factor, harmless unit
        rho = std::max(rho, a < 1.0 ? a : 1.0 / a);
    }
    rho += 1e-6;                                 // decay-rate safety margin
    if (roots.empty()) rho = 0.0;
    if (rho >= 1.0) throw CapacityError("root too close to the unit circle for a certified tail");

    // partial fractions: 1/p = sum A_j / (t - r_j), |A_j| = 1/|p'(r_j)|
    double C = 0.0;
    if (roots.empty()) {
        C = 1.0 / std::abs(static_cast<double>(f.coeffs[0]));
    } else {
        double lead = std::abs(static_cast<double>(f.coeffs.back()));
        for (std::size_t j = 0; j < roots.size(); ++j) {
            std::complex<double> dp{lead, 0.0};
            // p'(r_j) = lead * prod_{i != j} (r_j - r_i)
            std::complex<double> prod{1.0, 0.0};
            for (std::size_t i = 0; i < roots.size(); ++i)
                if (i != j) prod *= roots[j] - roots[i];
            dp = lead * prod;
            double a = std::abs(dp);
            if (a < 1e-12) throw CapacityError("repeated root: no certified partial-fraction bound");
            double rmod = std::abs(roots[j]);
            if (rmod < 1e-14) continue;
            C += 1.0 / (a * rmod);
        }
        C *= 1.0 + 1e-9;                         // numeric slack
    }
    // the t^offset unit shifts indices; absorb into the constant
    C *= std::pow(std::max(rho, 1e-12), -static_cast<double>(std::labs(f.offset)));
    if (f.offset != 0 && rho == 0.0) C = 1.0 / std::abs(static_cast<double>(f.coeffs[0]));
    return {rho, std::max(C, 1e-300)};
}

} // namespace

SummableHomoclinic l1_inverse(const LaurentPoly& f, double tol) {
    if (tol <= 0.0) throw InvalidInputError("tolerance must be positive");
    auto inv = is_l1_invertible(f);
    if (!inv.invertible) throw InvalidInputError(format_poly(f) + " is not invertible in l1");
    Decay d = certified_decay(f);

    long deg = static_cast<long>(f.coeffs.size()) - 1 + std::labs(f.offset);
    long M;
    if (d.rate <= 0.0) {
        M = deg + 2;
    } else {
        double target = tol * (1.0 - d.rate) / (4.0 * d.C);
        M = static_cast<long>(std::ceil(std::log(std::max(target, 1e-300)) / std::log(d.rate)));
        M = std::max(M, deg + 2);
    }

    for (int attempt = 0; attempt < 6; ++attempt, M *= 2) {
        if (M > (1 << 16)) throw CapacityError("truncation radius exceeds capacity");
        long N = 4 * (M + deg) + 8;
        SummableHomoclinic h;
        h.M = M;
        h.w.assign(static_cast<std::size_t>(2 * M + 1), 0.0);
        for (long n = -M; n <= M; ++n) {
            std::complex<double> acc{0.0, 0.0};
            for (long j = 0; j < N; ++j) {
                double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(N);
                std::complex<double> F = eval_on_circle(f, theta);
                std::complex<double> e{std::cos(theta * static_cast<double>(n)),
                                       -std::sin(theta * static_cast<double>(n))};
                acc += e / F;
            }
            h.w[static_cast<std::size_t>(n + M)] = acc.real() / static_cast<double>(N);
        }
        // residual of f*w - delta_0 over the full truncated support
        double res = 0.0;
        for (long n = -(M + deg); n <= M + deg; ++n) {
            double s = 0.0;
            for (long k = f.lo(); k <= f.hi(); ++k)
                s += static_cast<double>(f.coeff(k)) * h.at(n - k);
            if (n == 0) s -= 1.0;
            res += std::abs(s);
        }
        h.residual = res;
        h.decay_rate = d.rate;
        h.decay_C = d.C;
        h.tail_bound = d.rate > 0.0
                           ? 2.0 * d.C * std::pow(d.rate, static_cast<double>(M + 1)) / (1.0 - d.rate)
                           : 0.0;
        if (h.residual + h.tail_bound <= tol) return h;
    }
    throw CapacityError("tolerance unachievable within capacity");
}

PrincipalPoint fundamental_homoclinic(const LaurentPoly& f, double tol) {
    SummableHomoclinic h = l1_inverse(f, tol);
    PrincipalPoint x;
    x.lo = -h.M;
    x.values.reserve(h.w.size());
    for (double v : h.w) x.values.push_back(v - std::floor(v));
    x.tail_bound = h.tail_bound;
    // residual of f x mod 1: f*w = delta_0 + error, and delta_0 vanishes mod 1
    double worst = 0.0;
    for (long n = -(h.M + static_cast<long>(f.coeffs.size())); n <= h.M + static_cast<long>(f.coeffs.size()); ++n) {
        double s = 0.0;
        for (long k = f.lo(); k <= f.hi(); ++k)
            s += static_cast<double>(f.coeff(k)) * x.at(n - k);
        worst = std::max(worst, mod1_dist(s));
    }
    x.residual = worst;
    return x;
}

long required_separation(const LaurentPoly& f, double eps) {
    if (eps <= 0.0 || eps >= 1.0) throw InvalidInputError("eps must be in (0, 1)");
    Decay d = certified_decay(f);
    if (d.rate <= 0.0) return 1;
    double target = (eps / 2.0) * (1.0 - d.rate) / d.C;
    long g = static_cast<long>(std::ceil(std::log(std::max(target, 1e-300)) / std::log(d.rate)));
    return std::max<long>(g, 1);
}

PrincipalPoint glue_specification(const LaurentPoly& f, const std::vector<GlueTarget>& targets,
                                  double eps) {
    if (targets.empty()) throw InvalidInputError("no gluing targets");
    if (eps <= 0.0 || eps >= 0.5) throw InvalidInputError("eps must be in (0, 1/2)");
    SummableHomoclinic h = l1_inverse(f, std::min(eps / 16.0, 1e-9));

    // per-window integer coefficients by Toeplitz least squares + rounding
    struct Solved {
        long klo = 0;
        std::vector<long> c;
    };
    std::vector<Solved> solved;
    for (const auto& tgt : targets) {
        if (tgt.window.empty() || tgt.window.dim() != 1)
            throw InvalidInputError("gluing targets must use nonempty 1D windows");
        if (tgt.values.size() != tgt.window.size())
            throw InvalidInputError("target value count mismatch");
        long wlo = tgt.window.lo()[0], whi = tgt.window.hi()[0];
        long klo = wlo, khi = whi;
        long rows = static_cast<long>(tgt.window.size());
        long cols = khi - klo + 1;
        Eigen::MatrixXd A(rows, cols);
        for (long i = 0; i < rows; ++i) {
            long s = tgt.window.cells()[static_cast<std::size_t>(i)][0];
            for (long j = 0; j < cols; ++j) A(i, j) = h.at(s - (klo + j));
        }
        // lift refinement: adjust the integer part of the target until the
        // rounded solve reproduces it mod 1
        Eigen::VectorXd lift(rows);
        for (long i = 0; i < rows; ++i) lift(i) = signed_mod1(tgt.values[static_cast<std::size_t>(i)]);
        std::vector<long> c(static_cast<std::size_t>(cols), 0);
        bool ok = false;
        for (int iter = 0; iter < 60 && !ok; ++iter) {
            Eigen::VectorXd creal = A.colPivHouseholderQr().solve(lift);
            for (long j = 0; j < cols; ++j) c[static_cast<std::size_t>(j)] = std::lround(creal(j));
            ok = true;
            for (long i = 0; i < rows; ++i) {
                double ach = 0.0;
                for (long j = 0; j < cols; ++j)
                    ach += static_cast<double>(c[static_cast<std::size_t>(j)]) * A(i, j);
                double err = signed_mod1(tgt.values[static_cast<std::size_t>(i)] - ach);
                if (std::abs(err) > eps / 4.0) ok = false;
                lift(i) = ach + err;         // move the lift toward the achieved branch
            }
        }
        if (!ok)
            throw InvalidInputError("target not recognized as a homoclinic combination");
        solved.push_back({klo, std::move(c)});
    }

    // synthesize the glued point and verify every window post hoc
    long lo = targets[0].window.lo()[0], hi = targets[0].window.hi()[0];
    for (const auto& tgt : targets) {
        lo = std::min(lo, tgt.window.lo()[0]);
        hi = std::max(hi, tgt.window.hi()[0]);
    }
    lo -= h.M;
    hi += h.M;
    PrincipalPoint x;
    x.lo = lo;
    x.values.assign(static_cast<std::size_t>(hi - lo + 1), 0.0);
    double c_l1 = 0.0;
    auto real_at = [&](long n) {
        double s = 0.0;
        for (std::size_t t = 0; t < solved.size(); ++t)
            for (std::size_t j = 0; j < solved[t].c.size(); ++j)
                s += static_cast<double>(solved[t].c[j]) * h.at(n - (solved[t].klo + static_cast<long>(j)));
        return s;
    };
    for (long n = lo; n <= hi; ++n) {
        double v = real_at(n);
        x.values[static_cast<std::size_t>(n - lo)] = v - std::floor(v);
    }
    for (const auto& s : solved)
        for (long cj : s.c) c_l1 += std::abs(static_cast<double>(cj));
    x.tail_bound = c_l1 * h.tail_bound;
    x.residual = c_l1 * (h.residual + h.tail_bound);

    for (std::size_t t = 0; t < targets.size(); ++t) {
        double worst = 0.0;
        for (std::size_t i = 0; i < targets[t].window.size(); ++i) {
            long s = targets[t].window.cells()[i][0];
            worst = std::max(worst, mod1_dist(real_at(s) - targets[t].values[i]));
        }
        if (worst > eps) {
            std::ostringstream os;
            os << "windows too close: achieved distance " << worst << " > eps; separate windows by at least "
               << required_separation(f, eps) << " cells";
            throw InvalidInputError(os.str());
        }
    }
    return x;
}

} // namespace eden
