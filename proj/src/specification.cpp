#include "eden/specification.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace eden {

namespace {

// Masks reachable from the all-states mask under subset steps, each with a
// shortest witness word realizing it as the end-set (or start-set) of a word.
struct SetFamily {
    std::vector<std::uint64_t> masks;
    std::vector<std::vector<int>> witness;   // a word whose end/start-set is masks[i]
};

SetFamily reachable_sets(const Presentation& p, bool forward) {
    SetFamily fam;
    std::map<std::uint64_t, std::size_t> seen;
    std::uint64_t root = p.full_mask();
    seen[root] = 0;
    fam.masks.push_back(root);
    fam.witness.push_back({});
    for (std::size_t i = 0; i < fam.masks.size(); ++i) {
        if (fam.masks.size() > capacity_limit())
            throw CapacityError("end-set family exceeded capacity");
        for (int a = 0; a < p.k; ++a) {
            std::uint64_t nxt = forward ? p.step(fam.masks[i], a) : p.step_back(fam.masks[i], a);
            if (!nxt || seen.count(nxt)) continue;
            seen[nxt] = fam.masks.size();
            fam.masks.push_back(nxt);
            std::vector<int> w = fam.witness[i];
            if (forward) w.push_back(a);
            else w.insert(w.begin(), a);
            fam.witness.push_back(std::move(w));
        }
    }
    return fam;
}

using BoolMat = std::vector<std::uint64_t>;   // row-major adjacency bitrows

BoolMat identity_mat(int n) {
    BoolMat m(n, 0);
    for (int i = 0; i < n; ++i) m[i] = 1ull << i;
    return m;
}

BoolMat mul(const BoolMat& a, const BoolMat& b) {
    int n = static_cast<int>(a.size());
    BoolMat out(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (a[i] >> j & 1) out[i] |= b[j];
    return out;
}

// Can some vertex of E reach some vertex of S in exactly the steps encoded by m?
bool connects(const BoolMat& m, std::uint64_t E, std::uint64_t S) {
    int n = static_cast<int>(m.size());
    for (int i = 0; i < n; ++i)
        if (E >> i & 1)
            if (m[i] & S) return true;
    return false;
}

} // namespace

std::optional<GluingCertificate> strong_irreducibility_gap(
    const Subshift& X, long max_gap, long L, GluingFailure* out_failure) {
    const Presentation& p = X.presentation();
    if (p.n == 0) {
        // empty shift: no word pairs, gluing vacuous
        return GluingCertificate{0, "vacuous (empty shift)", 0};
    }
    SetFamily ends = reachable_sets(p, true);
    SetFamily starts = reachable_sets(p, false);

    BoolMat adj(p.n, 0);
    for (int v = 0; v < p.n; ++v)
        for (int a = 0; a < p.k; ++a)
            for (int t : p.succ[v][a]) adj[v] |= 1ull << t;

    // Boolean powers adj^s are eventually periodic; walking one full cycle
    // decides every separation s >= 0 at once.
    std::map<BoolMat, long> power_index;
    std::vector<BoolMat> powers;
    BoolMat cur = identity_mat(p.n);
    long mu = -1, lambda = 0;
    while (true) {
        auto it = power_index.find(cur);
        if (it != power_index.end()) {
            mu = it->second;
            lambda = static_cast<long>(powers.size()) - mu;
            break;
        }
        power_index[cur] = static_cast<long>(powers.size());
        powers.push_back(cur);
        cur = mul(cur, adj);
    }

    auto bad_pair_at = [&](long s) -> std::optional<std::pair<std::size_t, std::size_t>> {
        const BoolMat& m = powers[s < mu ? s : mu + (s - mu) % lambda];
        for (std::size_t i = 0; i < ends.masks.size(); ++i)
            for (std::size_t j = 0; j < starts.masks.size(); ++j)
                if (!connects(m, ends.masks[i], starts.masks[j])) return std::make_pair(i, j);
        return std::nullopt;
    };

    // if any separation inside the cycle fails, failures recur unboundedly
    long horizon = mu + lambda;
    long max_bad = -1;
    bool unbounded = false;
    for (long s = 0; s < horizon; ++s) {
        if (bad_pair_at(s)) {
            max_bad = s;
            if (s >= mu) unbounded = true;
        }
    }
    long checked = 0;
    for (const auto& w : ends.witness) checked = std::max<long>(checked, static_cast<long>(w.size()));
    for (const auto& w : starts.witness) checked = std::max<long>(checked, static_cast<long>(w.size()));

    checked = std::max(checked, L);

    long gap = max_bad + 1;
    if (!unbounded && gap <= max_gap) {
        return GluingCertificate{
            gap, "end-set/start-set closure with boolean-power cycle analysis", checked};
    }
    if (out_failure) {
        long s = max_bad;
        if (unbounded) {
            // failures recur inside the cycle; surface one at separation >= max_gap
            s = -1;
            for (long cand = std::max(mu, max_gap); cand <= std::max(mu, max_gap) + lambda; ++cand)
                if (bad_pair_at(cand)) { s = cand; break; }
        }
        if (s >= 0) {
            if (auto pr = bad_pair_at(s)) {
                out_failure->u = ends.witness[pr->first];
                out_failure->v = starts.witness[pr->second];
                out_failure->separation = s;
            }
        }
    }
    return std::nullopt;
}

namespace {

// place words at given offsets, fill unspecified cells later via pattern_allowed
bool family_glueable(const Subshift& X, const std::vector<long>& offsets,
                     const std::vector<std::vector<int>>& targets) {
    std::vector<Cell> cells;
    std::vector<int> syms;
    std::map<long, int> assign;
    for (std::size_t j = 0; j < targets.size(); ++j)
        for (std::size_t i = 0; i < targets[j].size(); ++i) {
            long pos = offsets[j] + static_cast<long>(i);
            auto it = assign.find(pos);
            if (it != assign.end()) {
                if (it->second != targets[j][i]) return false;  // conflicting overlap
            } else {
                assign[pos] = targets[j][i];
            }
        }
    for (const auto& [pos, s] : assign) {
        cells.push_back(cell1(pos));
        syms.push_back(s);
    }
    return pattern_allowed(X, Pattern(Window(1, cells), syms));
}

} // namespace

bool weak_specification_check(const Subshift& X, double eps, long g,
                              long len_bound, long slack,
                              GluingFailure* out_failure) {
    if (X.dim() != 1) throw InvalidInputError("weak_specification_check requires dim = 1");
    if (g < 0) throw InvalidInputError("gap must be >= 0");
    long m = metric_radius(eps);
    if (X.is_empty()) return true;

    // allowed target words per (dilated) length
    std::vector<std::vector<std::vector<int>>> words_by_len(len_bound + 1);
    for (long l = 1; l <= len_bound; ++l) words_by_len[l] = X.words(l + 2 * m);

    // families of 2 and 3 boxes; boxes of length l dilate by m on both sides,
    // separations counted between the undilated boxes
    for (int count = 2; count <= 3; ++count) {
        std::vector<long> lens(count, 1);
        while (true) {
            std::vector<long> seps(count - 1, g);
            while (true) {
                // offsets of the dilated words
                std::vector<long> offsets(count);
                long cursor = 0;
                for (int j = 0; j < count; ++j) {
                    offsets[j] = cursor;
                    cursor += lens[j] + 2 * m;               // dilated word length
                    if (j < count - 1) cursor += seps[j] - 2 * m;
                }
                // all tuples of allowed dilated words
                std::vector<std::size_t> pick(count, 0);
                bool tuples_done = words_by_len[lens[0]].empty();
                while (!tuples_done) {
                    std::vector<std::vector<int>> targets;
                    for (int j = 0; j < count; ++j) targets.push_back(words_by_len[lens[j]][pick[j]]);
                    if (!family_glueable(X, offsets, targets)) {
                        if (out_failure) {
                            out_failure->u = targets.front();
                            out_failure->v = targets.back();
                            out_failure->separation = seps[0];
                        }
                        return false;
                    }
                    int j = count - 1;
                    while (j >= 0 && ++pick[j] == words_by_len[lens[j]].size()) pick[j--] = 0;
                    if (j < 0) tuples_done = true;
                }
                int j = count - 2;
                while (j >= 0 && ++seps[j] == g + slack + 1) seps[j--] = g;
                if (j < 0) break;
            }
            int j = count - 1;
            while (j >= 0 && ++lens[j] == len_bound + 1) lens[j--] = 1;
            if (j < 0) break;
        }
    }
    return true;
}

namespace {

// every map from chosen cells to tuple indices must be simultaneously realizable
bool is_independence_set(const Subshift& X, const std::vector<Pattern>& tuple,
                         const std::vector<Cell>& cells) {
    std::size_t t = tuple.size();
    std::vector<std::size_t> omega(cells.size(), 0);
    while (true) {
        bool consistent = true;
        std::map<long, int> assign;
        for (std::size_t i = 0; i < cells.size() && consistent; ++i) {
            const Pattern& cyl = tuple[omega[i]];
            for (std::size_t c = 0; c < cyl.window().size() && consistent; ++c) {
                long pos = cyl.window().cells()[c][0] + cells[i][0];
                int sym = cyl.symbols()[c];
                auto it = assign.find(pos);
                if (it != assign.end() && it->second != sym) consistent = false;
                else assign[pos] = sym;
            }
        }
        if (consistent) {
            std::vector<Cell> pc;
            std::vector<int> ps;
            for (const auto& [pos, sym] : assign) { pc.push_back(cell1(pos)); ps.push_back(sym); }
            consistent = pattern_allowed(X, Pattern(Window(1, pc), ps));
        }
        if (!consistent) return false;
        std::size_t i = 0;
        while (i < omega.size() && ++omega[i] == t) omega[i++] = 0;
        if (i == omega.size()) return true;
    }
}

} // namespace

IndependenceReport independence_density(const Subshift& X,
                                        const std::vector<Pattern>& tuple,
                                        const Window& K) {
    if (X.dim() != 1) throw InvalidInputError("independence_density requires dim = 1");
    if (tuple.empty()) throw InvalidInputError("cylinder tuple must be nonempty");
    if (K.empty() || K.size() > 20) throw InvalidInputError("window K must have 1..20 cells");
    for (const auto& cyl : tuple)
        if (!pattern_allowed(X, cyl))
            throw InvalidInputError("cylinder not in the language of the subshift");

    std::vector<Cell> best;
    std::vector<Cell> cur;
    const auto& cells = K.cells();
    // branch and bound; independence sets are subset-closed, so pruning on
    // the remaining-cell count is sound
    std::function<void(std::size_t)> go = [&](std::size_t idx) {
        if (cur.size() > best.size()) best = cur;
        if (idx == cells.size()) return;
        if (cur.size() + (cells.size() - idx) <= best.size()) return;
        cur.push_back(cells[idx]);
        if (is_independence_set(X, tuple, cur)) go(idx + 1);
        cur.pop_back();
        go(idx + 1);
    };
    go(0);

    IndependenceReport rep;
    rep.tuple = tuple;
    rep.K = K;
    rep.independence_subset = best;
    rep.phi = static_cast<long>(best.size());
    rep.density = static_cast<double>(rep.phi) / static_cast<double>(K.size());
    return rep;
}

Rational ie_density_bound(const Subshift& X, const GluingCertificate& cert) {
    (void)X;
    if (cert.gap < 0) throw InvalidInputError("certificate gap must be >= 0");
    return Rational{1, 2 * cert.gap + 1};
}

} // namespace eden
