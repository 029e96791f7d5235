#ifndef EDEN_GEOMETRY_HPP
#define EDEN_GEOMETRY_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "eden/errors.hpp"

namespace eden {

// Lattice cell in Z^d, d <= 2. For d = 1 the second coordinate is 0.
using Cell = std::array<long, 2>;

inline Cell cell1(long x) { return Cell{x, 0}; }
inline Cell cell2(long x, long y) { return Cell{x, y}; }
inline Cell operator+(const Cell& a, const Cell& b) { return Cell{a[0] + b[0], a[1] + b[1]}; }
inline Cell operator-(const Cell& a, const Cell& b) { return Cell{a[0] - b[0], a[1] - b[1]}; }

// Finite subset of Z^d, cells kept sorted lexicographically and deduplicated.
class Window {
public:
    Window() = default;
    Window(int dim, std::vector<Cell> cells);

    static Window box(int dim, const Cell& lo, const Cell& hi);
    static Window interval(long lo, long hi);     // d = 1 box [lo, hi]
    static Window singleton(int dim, const Cell& c);

    int dim() const { return dim_; }
    const std::vector<Cell>& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }

    bool contains(const Cell& c) const;
    std::optional<std::size_t> index_of(const Cell& c) const;

    Window translated(const Cell& v) const;
    Window dilated_box(long radius) const;        // hull box grown by radius in every axis
    Window union_with(const Window& other) const;

    // Bounding box corners; invalid on the empty window.
    Cell lo() const;
    Cell hi() const;

    bool operator==(const Window& other) const { return dim_ == other.dim_ && cells_ == other.cells_; }

private:
    int dim_ = 1;
    std::vector<Cell> cells_;
};

// Symbol assignment over a window. Symbols are alphabet indices.
class Pattern {
public:
    Pattern() = default;
    Pattern(Window w, std::vector<int> symbols);

    // 1D convenience: word placed on [offset, offset + word.size() - 1].
    static Pattern word(const std::vector<int>& symbols, long offset = 0);

    const Window& window() const { return window_; }
    const std::vector<int>& symbols() const { return symbols_; }

    int at(const Cell& c) const;
    std::optional<int> try_at(const Cell& c) const;

    bool operator==(const Pattern& other) const {
        return window_ == other.window_ && symbols_ == other.symbols_;
    }
    bool operator<(const Pattern& other) const;

    std::string key() const;                       // canonical form, for hashing/dedup

private:
    Window window_;
    std::vector<int> symbols_;
};

Pattern translate(const Pattern& p, const Cell& v);

// Folner box F_n = [-n, n]^d.
Window folner_box(long n, int dim);

// Radius m = ceil(log2(1/eps)); agreement on [-m, m]^d forces distance <= eps
// under the 2^{-first-difference} metric.
long metric_radius(double eps);
Window metric_window(double eps, int dim);

// Total configurations of A^{Z^d}: periodic or finite-support.
class Configuration {
public:
    static Configuration periodic(int dim, const Cell& period, std::vector<int> symbols);
    static Configuration periodic_word(const std::vector<int>& word);     // d = 1
    static Configuration constant(int dim, int symbol);
    static Configuration finite_support(int dim, int background, Pattern exceptional);

    int dim() const { return dim_; }
    bool is_periodic() const { return periodic_; }
    int at(const Cell& c) const;
    Pattern restrict_to(const Window& w) const;

    const Cell& period() const { return period_; }
    const std::vector<int>& period_symbols() const { return symbols_; }
    int background() const { return background_; }
    const Pattern& exceptional() const { return exceptional_; }

    bool operator==(const Configuration& other) const;

private:
    Configuration() = default;
    int dim_ = 1;
    bool periodic_ = true;
    Cell period_{1, 1};
    std::vector<int> symbols_;    // fundamental domain, row-major over period
    int background_ = 0;
    Pattern exceptional_;         // cells differing from the background
};

// Text formats (docs/formats.md).
std::string format_window(const Window& w);
std::string format_pattern(const Pattern& p);
Pattern parse_pattern(const std::string& text);
std::string format_configuration(const Configuration& c);
Configuration parse_configuration(const std::string& text);

} // namespace eden

#endif
