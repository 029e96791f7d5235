#include "eden/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace eden {

std::string entropy_method_name(EntropyMethod m) {
    switch (m) {
        case EntropyMethod::ExactPerron: return "exact_perron";
        case EntropyMethod::SepEstimate: return "sep_estimate";
    }
    return "unknown";
}

namespace {

// iterative Tarjan strongly connected components
std::vector<std::vector<int>> sccs(const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());
    std::vector<int> index(n, -1), low(n, 0), on_stack(n, 0);
    std::vector<int> stack;
    std::vector<std::vector<int>> out;
    int counter = 0;
    struct Frame { int v; std::size_t edge; };
    for (int root = 0; root < n; ++root) {
        if (index[root] >= 0) continue;
        std::vector<Frame> call{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.edge < adj[f.v].size()) {
                int w = adj[f.v][f.edge++];
                if (index[w] < 0) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                if (low[f.v] == index[f.v]) {
                    std::vector<int> comp;
                    while (true) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp.push_back(w);
                        if (w == f.v) break;
                    }
                    out.push_back(std::move(comp));
                }
                int v = f.v;
                call.pop_back();
                if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            }
        }
    }
    return out;
}

// Perron eigenvalue enclosure for an irreducible nonnegative integer matrix,
// via Collatz-Wielandt ratios of powers of (M + I), which is primitive.
std::pair<double, double> perron_enclosure(const std::vector<std::vector<long>>& M) {
    int n = static_cast<int>(M.size());
    std::vector<double> x(n, 1.0), y(n);
    double lo = 0.0, hi = 0.0;
    for (int iter = 0; iter < 200000; ++iter) {
        for (int i = 0; i < n; ++i) {
            double s = x[i];                        // the +I term
            for (int j = 0; j < n; ++j) s += static_cast<double>(M[i][j]) * x[j];
            y[i] = s;
        }
        lo = std::numeric_limits<double>::infinity();
        hi = 0.0;
        for (int i = 0; i < n; ++i) {
            double r = y[i] / x[i];
            lo = std::min(lo, r);
            hi = std::max(hi, r);
        }
        double norm = 0.0;
        for (double v : y) norm = std::max(norm, v);
        for (int i = 0; i < n; ++i) x[i] = y[i] / norm;
        // in an essential component lambda >= 1, so compare in log space there
        double vlo = std::log(std::max(lo - 1.0, 1.0));
        double vhi = std::log(std::max(hi - 1.0, 1.0));
        if (vhi - vlo <= 1e-11) break;
    }
    return {lo - 1.0, hi - 1.0};                    // undo the +I shift
}

} // namespace

EntropyValue entropy_exact_1d(const Subshift& X) {
    if (X.dim() != 1) throw InvalidInputError("entropy_exact_1d requires dim = 1");
    const Presentation& det = X.det_presentation();
    if (det.n == 0) throw InvalidInputError("empty subshift has no entropy");

    std::vector<std::vector<int>> adj(det.n);
    for (int v = 0; v < det.n; ++v)
        for (int a = 0; a < det.k; ++a)
            for (int t : det.succ[v][a]) adj[v].push_back(t);

    double best_lo = 0.0, best_hi = 0.0;           // lambda >= 1 in an essential graph
    bool found = false;
    for (const auto& comp : sccs(adj)) {
        std::vector<int> pos(det.n, -1);
        for (std::size_t i = 0; i < comp.size(); ++i) pos[comp[i]] = static_cast<int>(i);
        std::vector<std::vector<long>> M(comp.size(), std::vector<long>(comp.size(), 0));
        bool has_edge = false;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (int t : adj[comp[i]])
                if (pos[t] >= 0) { M[i][pos[t]] += 1; has_edge = true; }
        if (!has_edge) continue;                   // transient single vertex
        auto [lo, hi] = perron_enclosure(M);
        if (!found || lo > best_lo) { best_lo = lo; best_hi = hi; found = true; }
    }
    if (!found) throw InternalError("essential presentation without a cycle");
    double vlo = std::log(std::max(best_lo, 1.0));
    double vhi = std::log(std::max(best_hi, 1.0));
    EntropyValue out;
    out.value = 0.5 * (vlo + vhi);
    out.method = EntropyMethod::ExactPerron;
    out.error_bound = 0.5 * (vhi - vlo);
    if (out.error_bound > 1e-10) throw InternalError("Perron enclosure did not converge");
    return out;
}

std::uint64_t sep_count(const Subshift& X, long n, double eps) {
    if (n < 0) throw InvalidInputError("box parameter must be >= 0");
    long m = metric_radius(eps);
    return X.count_words(2 * n + 1 + 2 * m);
}

double log_sep_count(const Subshift& X, long n, double eps) {
    if (n < 0) throw InvalidInputError("box parameter must be >= 0");
    long m = metric_radius(eps);
    return X.log_count_words(2 * n + 1 + 2 * m);
}

EntropyValue entropy_estimate(const Subshift& X, long n, double eps) {
    if (n < 1) throw InvalidInputError("estimate needs n >= 1");
    long m = metric_radius(eps);
    EntropyValue out;
    out.value = log_sep_count(X, n, eps) / static_cast<double>(2 * n + 1);
    out.method = EntropyMethod::SepEstimate;
    out.n = n;
    out.error_bound =
        static_cast<double>(2 * m + 1) * std::log(static_cast<double>(X.alphabet().size)) /
        static_cast<double>(n);
    return out;
}

namespace {

std::vector<int> separating_word(const Subshift& Y, const Subshift& Z) {
    std::vector<int> witness;
    if (!Z.language_subset_of(Y))
        throw InvalidInputError("Z is not contained in Y");
    if (Y.language_subset_of(Z, &witness))
        throw InvalidInputError("Z is not a proper subsystem of Y");
    return witness;
}

} // namespace

double default_eta(const Subshift& Y, const Subshift& Z) {
    std::vector<int> w = separating_word(Y, Z);
    // center the witness word: every Z-point differs from a Y-point carrying
    // it within radius R, so dist(y0, Z) >= 2^-R
    long r = static_cast<long>(w.size());
    long R = (r - 1 + 1) / 2;                      // ceil((r-1)/2)
    long k = std::max<long>(4, R);                 // 2^-4 <= 1/10
    return std::ldexp(1.0, static_cast<int>(-k));
}

double entropy_gap_bound(const Subshift& Y, const Subshift& Z, double eta) {
    if (Y.dim() != 1 || Z.dim() != 1) throw InvalidInputError("gap bound requires dim = 1");
    if (Z.is_empty() || Y.is_empty()) throw InvalidInputError("both subshifts must be nonempty");
    (void)separating_word(Y, Z);                   // validates proper containment
    if (eta <= 0.0) eta = default_eta(Y, Z);
    if (eta > 0.1 + 1e-12) throw InvalidInputError("eta must be <= 1/10");

    auto cert = strong_irreducibility_gap(Y, 64);
    if (!cert) throw InconclusiveError("Y carries no gluing certificate with gap <= 64");

    long m_shadow = metric_radius(eta / 4.0);
    long g_prime = cert->gap + 2 * m_shadow;       // specification set F = [-g', g']
    double F = static_cast<double>(2 * g_prime + 1);
    double log_sep = log_sep_count(Z, g_prime, eta);
    return std::log1p(std::exp(-log_sep)) / F;
}

} // namespace eden
