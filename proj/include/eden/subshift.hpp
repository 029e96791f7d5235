#ifndef EDEN_SUBSHIFT_HPP
#define EDEN_SUBSHIFT_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "eden/geometry.hpp"

namespace eden {

struct Alphabet {
    int size = 0;
    std::vector<std::string> names;   // optional, defaults to "0".."k-1"

    explicit Alphabet(int k = 0) : size(k) {
        if (k < 1) throw InvalidInputError("alphabet size must be >= 1");
    }
    std::string name(int s) const {
        if (s < 0 || s >= size) throw InvalidInputError("symbol out of range");
        return s < static_cast<int>(names.size()) ? names[s] : std::to_string(s);
    }
};

struct LabeledGraph {
    int vertices = 0;
    struct Edge { int src, dst, label; };
    std::vector<Edge> edges;
};

// Essential labeled-graph presentation, adjacency indexed by label.
struct Presentation {
    int k = 0;                                        // alphabet size
    int n = 0;                                        // vertices
    std::vector<std::vector<std::vector<int>>> succ;  // succ[v][a] = targets
    std::vector<std::vector<std::vector<int>>> pred;  // pred[v][a] = sources
    bool deterministic = false;

    std::uint64_t step(std::uint64_t mask, int a) const;       // forward subset step
    std::uint64_t step_back(std::uint64_t mask, int a) const;
    std::uint64_t full_mask() const { return n == 64 ? ~0ull : (1ull << n) - 1; }
};

// Deterministic automaton whose length-n paths from `initial` are exactly the
// distinct allowed n-words of the shift.
struct WordDfa {
    int k = 0;
    int initial = 0;
    std::vector<std::vector<int>> delta;              // delta[state][a] = state or -1
    int states() const { return static_cast<int>(delta.size()); }
};

enum class ShiftKind { Full, Sft, Sofic };

class Subshift {
public:
    static Subshift full_shift(int alphabet, int dim = 1);
    static Subshift sft(int alphabet, int dim, std::vector<Pattern> forbidden);
    static Subshift sofic(int alphabet, LabeledGraph graph);

    ShiftKind kind() const { return kind_; }
    const Alphabet& alphabet() const { return alphabet_; }
    int dim() const { return dim_; }
    const std::vector<Pattern>& forbidden() const { return forbidden_; }
    const LabeledGraph& graph() const { return graph_; }

    // 1D machinery (lazily built, cached, internally synchronized)
    const Presentation& presentation() const;        // essential, right-resolving for Full/SFT
    const Presentation& det_presentation() const;    // essential + deterministic
    const WordDfa& word_dfa() const;

    bool is_empty() const;

    // Pattern language on a window. d = 1: any finite window. d = 2: box
    // windows of height <= strip_bound, with strip-extendability semantics.
    std::vector<Pattern> language(const Window& w) const;

    std::vector<std::vector<int>> words(long n) const;      // distinct allowed n-words, sorted
    bool word_allowed(const std::vector<int>& word) const;  // d = 1
    std::uint64_t count_words(long n) const;                // exact; CapacityError on overflow
    double log_count_words(long n) const;                   // scaled DP, no overflow

    bool contains(const Configuration& x) const;

    Subshift determinize() const;                    // d = 1 sofic/SFT -> right-resolving sofic
    Subshift minimized() const;                      // determinize + follower-set merging

    // Set equality/containment of 1D shift spaces; on failure *witness (if
    // non-null) receives a shortest, lexicographically least separating word.
    bool equal_language(const Subshift& other, std::vector<int>* witness = nullptr) const;
    bool language_subset_of(const Subshift& other, std::vector<int>* witness = nullptr) const;

    static long strip_bound();                       // d = 2 capacity (default 8)

private:
    Subshift() : alphabet_(1) {}

    ShiftKind kind_ = ShiftKind::Full;
    Alphabet alphabet_;
    int dim_ = 1;
    std::vector<Pattern> forbidden_;
    LabeledGraph graph_;

    struct Cache;
    std::shared_ptr<Cache> cache_;
};

// Shared helpers
Presentation essentialize(const Presentation& p);
Presentation presentation_from_graph(int alphabet, const LabeledGraph& g);
LabeledGraph graph_from_presentation(const Presentation& p);
bool is_right_resolving(const Presentation& p);

// Enumeration capacity, overridable via EDEN_CAPACITY.
std::uint64_t capacity_limit();

// Extendability of a (possibly gappy) pattern to a point, d = 1.
bool pattern_allowed(const Subshift& X, const Pattern& p);

// Parse/format the shift text formats from docs/formats.md.
Subshift parse_subshift(const std::string& text);
Subshift load_subshift(const std::string& path_or_name);  // corpus name or file path
std::string format_subshift(const Subshift& s);

} // namespace eden

#endif
