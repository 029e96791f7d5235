#include "eden/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace eden {

namespace {

void check_dim(int dim) {
    if (dim != 1 && dim != 2)
        throw InvalidInputError("dimension must be 1 or 2, got " + std::to_string(dim));
}

long positive_mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace

Window::Window(int dim, std::vector<Cell> cells) : dim_(dim), cells_(std::move(cells)) {
    check_dim(dim);
    for (auto& c : cells_)
        if (dim == 1) c[1] = 0;
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

Window Window::box(int dim, const Cell& lo, const Cell& hi) {
    check_dim(dim);
    if (lo[0] > hi[0] || (dim == 2 && lo[1] > hi[1]))
        throw InvalidInputError("box corners out of order");
    std::vector<Cell> cells;
    long y_lo = dim == 2 ? lo[1] : 0, y_hi = dim == 2 ? hi[1] : 0;
    for (long x = lo[0]; x <= hi[0]; ++x)
        for (long y = y_lo; y <= y_hi; ++y)
            cells.push_back(Cell{x, y});
    return Window(dim, std::move(cells));
}

Window Window::interval(long lo, long hi) { return box(1, cell1(lo), cell1(hi)); }

Window Window::singleton(int dim, const Cell& c) { return Window(dim, {c}); }

bool Window::contains(const Cell& c) const {
    return std::binary_search(cells_.begin(), cells_.end(), c);
}

std::optional<std::size_t> Window::index_of(const Cell& c) const {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
    if (it == cells_.end() || *it != c) return std::nullopt;
    return static_cast<std::size_t>(it - cells_.begin());
}

Window Window::translated(const Cell& v) const {
    std::vector<Cell> cells;
    cells.reserve(cells_.size());
    for (const auto& c : cells_) cells.push_back(c + v);
    return Window(dim_, std::move(cells));
}

Window Window::dilated_box(long radius) const {
    if (empty()) throw InvalidInputError("cannot dilate the empty window");
    Cell l = lo(), h = hi();
    l[0] -= radius; h[0] += radius;
    if (dim_ == 2) { l[1] -= radius; h[1] += radius; }
    return box(dim_, l, h);
}

Window Window::union_with(const Window& other) const {
    if (dim_ != other.dim_) throw InvalidInputError("window dimension mismatch");
    std::vector<Cell> cells = cells_;
    cells.insert(cells.end(), other.cells_.begin(), other.cells_.end());
    return Window(dim_, std::move(cells));
}

Cell Window::lo() const {
    if (empty()) throw InvalidInputError("empty window has no bounding box");
    Cell l = cells_.front();
    for (const auto& c : cells_) { l[0] = std::min(l[0], c[0]); l[1] = std::min(l[1], c[1]); }
    return l;
}

Cell Window::hi() const {
    if (empty()) throw InvalidInputError("empty window has no bounding box");
    Cell h = cells_.front();
    for (const auto& c : cells_) { h[0] = std::max(h[0], c[0]); h[1] = std::max(h[1], c[1]); }
    return h;
}

Pattern::Pattern(Window w, std::vector<int> symbols) : window_(std::move(w)), symbols_(std::move(symbols)) {
    if (window_.size() != symbols_.size())
        throw InvalidInputError("pattern needs exactly one symbol per window cell");
    for (int s : symbols_)
        if (s < 0) throw InvalidInputError("negative symbol index");
}

Pattern Pattern::word(const std::vector<int>& symbols, long offset) {
    if (symbols.empty()) return Pattern();
    Window w = Window::interval(offset, offset + static_cast<long>(symbols.size()) - 1);
    return Pattern(w, symbols);
}

int Pattern::at(const Cell& c) const {
    auto idx = window_.index_of(c);
    if (!idx) throw InvalidInputError("cell not in pattern window");
    return symbols_[*idx];
}

std::optional<int> Pattern::try_at(const Cell& c) const {
    auto idx = window_.index_of(c);
    if (!idx) return std::nullopt;
    return symbols_[*idx];
}

bool Pattern::operator<(const Pattern& other) const {
    if (window_.cells() != other.window_.cells()) return window_.cells() < other.window_.cells();
    return symbols_ < other.symbols_;
}

std::string Pattern::key() const {
    std::ostringstream os;
    os << window_.dim();
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        const Cell& c = window_.cells()[i];
        os << '|' << c[0] << ',' << c[1] << ':' << symbols_[i];
    }
    return os.str();
}

Pattern translate(const Pattern& p, const Cell& v) {
    // cells stay aligned: translation preserves lexicographic cell order
    std::vector<Cell> cells;
    cells.reserve(p.window().size());
    for (const auto& c : p.window().cells()) cells.push_back(c + v);
    return Pattern(Window(p.window().dim(), std::move(cells)), p.symbols());
}

Window folner_box(long n, int dim) {
    if (n < 0) throw InvalidInputError("folner_box needs n >= 0");
    return Window::box(dim, Cell{-n, -n}, Cell{n, n});
}

long metric_radius(double eps) {
    if (!(eps > 0.0) || eps > 1.0)
        throw InvalidInputError("eps must lie in (0, 1]");
    double m = std::ceil(std::log2(1.0 / eps) - 1e-9);
    return m < 0 ? 0 : static_cast<long>(m);
}

Window metric_window(double eps, int dim) {
    return folner_box(metric_radius(eps), dim);
}

Configuration Configuration::periodic(int dim, const Cell& period, std::vector<int> symbols) {
    check_dim(dim);
    Configuration c;
    c.dim_ = dim;
    c.periodic_ = true;
    c.period_ = period;
    if (dim == 1) c.period_[1] = 1;
    if (c.period_[0] < 1 || c.period_[1] < 1)
        throw InvalidInputError("period components must be >= 1");
    if (static_cast<long>(symbols.size()) != c.period_[0] * c.period_[1])
        throw InvalidInputError("fundamental domain size mismatch");
    c.symbols_ = std::move(symbols);
    return c;
}

Configuration Configuration::periodic_word(const std::vector<int>& word) {
    return periodic(1, Cell{static_cast<long>(word.size()), 1}, word);
}

Configuration Configuration::constant(int dim, int symbol) {
    return periodic(dim, Cell{1, 1}, {symbol});
}

Configuration Configuration::finite_support(int dim, int background, Pattern exceptional) {
    check_dim(dim);
    Configuration c;
    c.dim_ = dim;
    c.periodic_ = false;
    c.background_ = background;
    // normalize: drop cells that agree with the background
    std::vector<Cell> cells;
    std::vector<int> syms;
    for (std::size_t i = 0; i < exceptional.window().size(); ++i) {
        if (exceptional.symbols()[i] != background) {
            cells.push_back(exceptional.window().cells()[i]);
            syms.push_back(exceptional.symbols()[i]);
        }
    }
    if (cells.empty()) return constant(dim, background);
    c.exceptional_ = Pattern(Window(dim, std::move(cells)), std::move(syms));
    return c;
}

int Configuration::at(const Cell& c) const {
    if (periodic_) {
        long x = positive_mod(c[0], period_[0]);
        long y = dim_ == 2 ? positive_mod(c[1], period_[1]) : 0;
        return symbols_[static_cast<std::size_t>(x * period_[1] + y)];
    }
    if (auto s = exceptional_.try_at(c)) return *s;
    return background_;
}

Pattern Configuration::restrict_to(const Window& w) const {
    std::vector<int> syms;
    syms.reserve(w.size());
    for (const auto& c : w.cells()) syms.push_back(at(c));
    return Pattern(w, std::move(syms));
}

bool Configuration::operator==(const Configuration& other) const {
    if (dim_ != other.dim_ || periodic_ != other.periodic_) return false;
    if (periodic_)
        return period_ == other.period_ && symbols_ == other.symbols_;
    return background_ == other.background_ && exceptional_ == other.exceptional_;
}

// ---- text formats ----

namespace {

std::string format_cell(const Cell& c, int dim) {
    std::ostringstream os;
    os << '(' << c[0];
    if (dim == 2) os << ',' << c[1];
    os << ')';
    return os.str();
}

struct Cursor {
    const std::string& s;
    std::size_t i = 0;
    void skip_ws() { while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i; }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) { ++i; return true; }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw InvalidInputError("expected '" + std::string(1, c) + "' in: " + s);
    }
    long number() {
        skip_ws();
        std::size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw InvalidInputError("expected number in: " + s);
        return std::stol(s.substr(start, i - start));
    }
    bool match(const std::string& word) {
        skip_ws();
        if (s.compare(i, word.size(), word) == 0) { i += word.size(); return true; }
        return false;
    }
    bool done() { skip_ws(); return i >= s.size(); }
};

Cell parse_cell(Cursor& cur, int dim) {
    cur.expect('(');
    Cell c{cur.number(), 0};
    if (cur.eat(',')) c[1] = cur.number();
    cur.expect(')');
    if (dim == 1 && c[1] != 0) throw InvalidInputError("2D cell in 1D pattern");
    return c;
}

} // namespace

std::string format_window(const Window& w) {
    std::ostringstream os;
    bool first = true;
    for (const auto& c : w.cells()) {
        if (!first) os << ',';
        os << format_cell(c, w.dim());
        first = false;
    }
    return os.str();
}

std::string format_pattern(const Pattern& p) {
    std::ostringstream os;
    os << "dim=" << p.window().dim() << "; cells=";
    for (std::size_t i = 0; i < p.window().size(); ++i) {
        if (i) os << ',';
        os << format_cell(p.window().cells()[i], p.window().dim()) << ':' << p.symbols()[i];
    }
    return os.str();
}

Pattern parse_pattern(const std::string& text) {
    Cursor cur{text};
    if (!cur.match("dim=")) throw InvalidInputError("pattern must start with dim=: " + text);
    int dim = static_cast<int>(cur.number());
    cur.expect(';');
    if (!cur.match("cells=")) throw InvalidInputError("pattern needs cells=: " + text);
    std::vector<Cell> cells;
    std::vector<int> syms;
    while (!cur.done()) {
        cells.push_back(parse_cell(cur, dim));
        cur.expect(':');
        syms.push_back(static_cast<int>(cur.number()));
        if (!cur.eat(',')) break;
    }
    if (!cur.done()) throw InvalidInputError("trailing junk in pattern: " + text);
    Window w(dim, cells);
    if (w.size() != cells.size()) throw InvalidInputError("duplicate cells in pattern: " + text);
    // reorder symbols to canonical cell order
    std::vector<int> canon(w.size());
    for (std::size_t i = 0; i < cells.size(); ++i)
        canon[*w.index_of(cells[i])] = syms[i];
    return Pattern(w, canon);
}

std::string format_configuration(const Configuration& c) {
    std::ostringstream os;
    os << "dim=" << c.dim() << "; ";
    if (c.is_periodic()) {
        os << "period=(" << c.period()[0];
        if (c.dim() == 2) os << ',' << c.period()[1];
        os << "); symbols=";
        for (std::size_t i = 0; i < c.period_symbols().size(); ++i) {
            if (i) os << ',';
            os << c.period_symbols()[i];
        }
    } else {
        os << "background=" << c.background() << "; cells=";
        const Pattern& p = c.exceptional();
        for (std::size_t i = 0; i < p.window().size(); ++i) {
            if (i) os << ',';
            os << format_cell(p.window().cells()[i], c.dim()) << ':' << p.symbols()[i];
        }
    }
    return os.str();
}

Configuration parse_configuration(const std::string& text) {
    Cursor cur{text};
    if (!cur.match("dim=")) throw InvalidInputError("configuration must start with dim=: " + text);
    int dim = static_cast<int>(cur.number());
    cur.expect(';');
    if (cur.match("period=")) {
        cur.expect('(');
        Cell period{cur.number(), 1};
        if (cur.eat(',')) period[1] = cur.number();
        cur.expect(')');
        cur.expect(';');
        if (!cur.match("symbols=")) throw InvalidInputError("periodic configuration needs symbols=");
        std::vector<int> syms;
        while (!cur.done()) {
            syms.push_back(static_cast<int>(cur.number()));
            if (!cur.eat(',')) break;
        }
        return Configuration::periodic(dim, period, std::move(syms));
    }
    if (cur.match("background=")) {
        int bg = static_cast<int>(cur.number());
        cur.expect(';');
        if (!cur.match("cells="))
            throw InvalidInputError("finite-support configuration needs cells=");
        std::vector<Cell> cells;
        std::vector<int> syms;
        while (!cur.done()) {
            cells.push_back(parse_cell(cur, dim));
            cur.expect(':');
            syms.push_back(static_cast<int>(cur.number()));
            if (!cur.eat(',')) break;
        }
        Window w(dim, cells);
        std::vector<int> canon(w.size());
        for (std::size_t i = 0; i < cells.size(); ++i)
            canon[*w.index_of(cells[i])] = syms[i];
        return Configuration::finite_support(dim, bg, Pattern(w, canon));
    }
    throw InvalidInputError("configuration needs period= or background=: " + text);
}

} // namespace eden
