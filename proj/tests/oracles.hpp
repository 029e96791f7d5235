#ifndef EDEN_TESTS_ORACLES_HPP
#define EDEN_TESTS_ORACLES_HPP

// Brute-force reference implementations shared by the unit and acceptance
// tests. Everything here is written from first principles (run-length
// combinatorics, exhaustive enumeration) and deliberately avoids the library's
// graph machinery.

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace oracles {

inline std::vector<std::vector<int>> all_words(int k, long n) {
    std::vector<std::vector<int>> out;
    std::vector<int> w(n, 0);
    while (true) {
        out.push_back(w);
        long i = n - 1;
        while (i >= 0 && ++w[i] == k) w[i--] = 0;
        if (i < 0) break;
    }
    return out;
}

// Membership for the named corpus shifts; returns nullopt for unknown names.
inline std::optional<bool> allowed(const std::string& name, const std::vector<int>& w) {
    auto has_factor = [&](std::initializer_list<int> f) {
        std::vector<int> fac(f);
        if (w.size() < fac.size()) return false;
        for (std::size_t i = 0; i + fac.size() <= w.size(); ++i) {
            bool hit = true;
            for (std::size_t j = 0; j < fac.size(); ++j)
                if (w[i + j] != fac[j]) hit = false;
            if (hit) return true;
        }
        return false;
    };
    auto internal_zero_runs_have_parity = [&](int parity) {
        long last_one = -1;
        for (long i = 0; i < static_cast<long>(w.size()); ++i) {
            if (w[i] != 1) continue;
            if (last_one >= 0 && (i - last_one - 1) % 2 != parity) return false;
            last_one = i;
        }
        return true;
    };
    if (name == "full-2" || name == "full-3") return true;
    if (name == "golden-mean") return !has_factor({1, 1});
    if (name == "no-000") return !has_factor({0, 0, 0});
    if (name == "alternating") return !has_factor({0, 0}) && !has_factor({1, 1});
    if (name == "rll-1-3") return !has_factor({1, 1}) && !has_factor({0, 0, 0, 0});
    if (name == "even") return internal_zero_runs_have_parity(0);
    if (name == "odd") return internal_zero_runs_have_parity(1);
    if (name == "spaced-ones") {
        for (std::size_t i = 0; i + 2 < w.size(); ++i)
            if (w[i] == 1 && w[i + 2] == 1) return false;
        return true;
    }
    if (name == "singleton-0") {
        for (int a : w)
            if (a != 0) return false;
        return true;
    }
    return std::nullopt;
}

// Exhaustive gluing check at one separation: every pair of allowed words of
// length <= len_bound admits a fill of exactly `sep` cells.
inline bool glues_at_separation(const std::string& name, int k, long sep, long len_bound,
                                std::vector<int>* bad_u = nullptr,
                                std::vector<int>* bad_v = nullptr) {
    std::vector<std::vector<int>> words;
    for (long n = 1; n <= len_bound; ++n)
        for (const auto& w : all_words(k, n))
            if (*allowed(name, w)) words.push_back(w);
    std::vector<std::vector<int>> fills = all_words(k, sep);
    if (sep == 0) fills = {{}};
    for (const auto& u : words)
        for (const auto& v : words) {
            bool ok = false;
            for (const auto& m : fills) {
                std::vector<int> joined = u;
                joined.insert(joined.end(), m.begin(), m.end());
                joined.insert(joined.end(), v.begin(), v.end());
                if (*allowed(name, joined)) {
                    ok = true;
                    break;
                }
            }
            if (!ok) {
                if (bad_u) *bad_u = u;
                if (bad_v) *bad_v = v;
                return false;
            }
        }
    return true;
}

// Minimal gluing gap by exhaustive search: smallest g such that every
// separation in [g, g + probe) glues, or nullopt if no g <= max_gap works.
inline std::optional<long> min_gap(const std::string& name, int k, long max_gap,
                                   long len_bound = 5, long probe = 4) {
    for (long g = 0; g <= max_gap; ++g) {
        bool ok = true;
        for (long s = g; s < g + probe && ok; ++s)
            if (!glues_at_separation(name, k, s, len_bound)) ok = false;
        if (ok) return g;
    }
    return std::nullopt;
}

// Elementary CA local map with Wolfram bit numbering.
inline std::vector<int> eca_apply(int rule, const std::vector<int>& w) {
    std::vector<int> out;
    for (std::size_t i = 0; i + 2 < w.size(); ++i)
        out.push_back((rule >> (w[i] * 4 + w[i + 1] * 2 + w[i + 2])) & 1);
    return out;
}

// Balance test: an ECA is surjective iff every length-n word has exactly 4
// preimages of length n + 2, for every n. Checked for n <= max_n.
inline bool eca_balanced(int rule, long max_n) {
    for (long n = 1; n <= max_n; ++n) {
        std::vector<long> counts(1l << n, 0);
        for (const auto& w : all_words(2, n + 2)) {
            long idx = 0;
            for (int b : eca_apply(rule, w)) idx = idx * 2 + b;
            ++counts[idx];
        }
        for (long c : counts)
            if (c != 4) return false;
    }
    return true;
}

} // namespace oracles

#endif
