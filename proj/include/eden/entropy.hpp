#ifndef EDEN_ENTROPY_HPP
#define EDEN_ENTROPY_HPP

#include <cstdint>
#include <string>

#include "eden/specification.hpp"
#include "eden/subshift.hpp"

namespace eden {

enum class EntropyMethod { ExactPerron, SepEstimate };

struct EntropyValue {
    double value = 0.0;             // natural log units
    EntropyMethod method = EntropyMethod::ExactPerron;
    long n = 0;                     // box parameter for estimates
    double error_bound = 0.0;
};

std::string entropy_method_name(EntropyMethod m);

// log of the Perron eigenvalue of the deterministic presentation's adjacency
// matrix, enclosed to width <= 1e-10.
EntropyValue entropy_exact_1d(const Subshift& X);

// sep(X, rho_{F_n}, eps) = |language(X, F_n dilated by metric_radius(eps))|.
std::uint64_t sep_count(const Subshift& X, long n, double eps);
double log_sep_count(const Subshift& X, long n, double eps);

// (1 / |F_n|) * log sep_count, with a C/n error bound.
EntropyValue entropy_estimate(const Subshift& X, long n, double eps);

// Deterministic eta for the gap bound: largest 2^-k not exceeding
// min(1/10, separation of a shortest Y-word missing from Z).
double default_eta(const Subshift& Y, const Subshift& Z);

// Quantitative entropy gap for Z a proper subsystem of a strongly irreducible
// Y: returns (1/|F|) log(1 + 1/sep(Z, rho_F, eta)) <= htop(Y) - htop(Z),
// where F = [-g', g'] and g' is Y's gluing gap widened for shadowing
// tolerance eta/4. Pass eta <= 0 to use default_eta.
double entropy_gap_bound(const Subshift& Y, const Subshift& Z, double eta = 0.0);

} // namespace eden

#endif
