#ifndef EDEN_SPECIFICATION_HPP
#define EDEN_SPECIFICATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "eden/subshift.hpp"

namespace eden {

// Certifies gluing with gap g: any two allowed words placed with at least g
// free cells between them extend to a common point for every placement.
struct GluingCertificate {
    long gap = 0;
    std::string witness_policy;
    long checked_length = 0;
};

// A concrete failed placement: u, then `separation` free cells, then v, with
// no admissible fill.
struct GluingFailure {
    std::vector<int> u, v;
    long separation = 0;
};

struct IndependenceReport {
    std::vector<Pattern> tuple;
    Window K;
    std::vector<Cell> independence_subset;
    long phi = 0;                       // max independence-set size
    double density = 0.0;               // phi / |K|
};

struct Rational {
    long num = 0, den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// Smallest gap g <= max_gap certifying gluing, or nullopt if no such gap
// exists. The analysis runs on the end-set/start-set families of the graph
// presentation and is conclusive for every word length (checked_length
// reports the word length the reported failure/certificate corresponds to).
// If out_failure is non-null and the result is nullopt, a concrete failure at
// separation max_gap is produced when one exists at that separation.
std::optional<GluingCertificate> strong_irreducibility_gap(
    const Subshift& X, long max_gap, long L = 0, GluingFailure* out_failure = nullptr);

// Bounded-exhaustive weak specification check: families of up to 3 boxed
// targets, word lengths <= len_bound, extra separations 0..slack beyond the
// minimum implied by g and eps.
bool weak_specification_check(const Subshift& X, double eps, long g,
                              long len_bound = 4, long slack = 3,
                              GluingFailure* out_failure = nullptr);

IndependenceReport independence_density(const Subshift& X,
                                        const std::vector<Pattern>& tuple,
                                        const Window& K);

// Prop-5.1-style lower bound 1/(2g+1) on the independence density of tuples
// of allowed cylinders, valid under the given certificate.
Rational ie_density_bound(const Subshift& X, const GluingCertificate& cert);

} // namespace eden

#endif
