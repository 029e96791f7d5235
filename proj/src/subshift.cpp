#include "eden/subshift.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace eden {

std::uint64_t capacity_limit() {
    if (const char* env = std::getenv("EDEN_CAPACITY")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 1ull << 20;
}

std::uint64_t Presentation::step(std::uint64_t mask, int a) const {
    std::uint64_t out = 0;
    for (int v = 0; v < n; ++v)
        if (mask >> v & 1)
            for (int t : succ[v][a]) out |= 1ull << t;
    return out;
}

std::uint64_t Presentation::step_back(std::uint64_t mask, int a) const {
    std::uint64_t out = 0;
    for (int v = 0; v < n; ++v)
        if (mask >> v & 1)
            for (int s : pred[v][a]) out |= 1ull << s;
    return out;
}

namespace {

Presentation make_presentation(int k, int n) {
    Presentation p;
    p.k = k;
    p.n = n;
    p.succ.assign(n, std::vector<std::vector<int>>(k));
    p.pred.assign(n, std::vector<std::vector<int>>(k));
    return p;
}

void add_edge(Presentation& p, int src, int dst, int label) {
    p.succ[src][label].push_back(dst);
    p.pred[dst][label].push_back(src);
}

} // namespace

bool is_right_resolving(const Presentation& p) {
    for (int v = 0; v < p.n; ++v)
        for (int a = 0; a < p.k; ++a)
            if (p.succ[v][a].size() > 1) return false;
    return true;
}

Presentation essentialize(const Presentation& p) {
    std::vector<char> alive(p.n, 1);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < p.n; ++v) {
            if (!alive[v]) continue;
            bool has_out = false, has_in = false;
            for (int a = 0; a < p.k && !has_out; ++a)
                for (int t : p.succ[v][a])
                    if (alive[t]) { has_out = true; break; }
            for (int a = 0; a < p.k && !has_in; ++a)
                for (int s : p.pred[v][a])
                    if (alive[s]) { has_in = true; break; }
            if (!has_out || !has_in) { alive[v] = 0; changed = true; }
        }
    }
    std::vector<int> id(p.n, -1);
    int n = 0;
    for (int v = 0; v < p.n; ++v)
        if (alive[v]) id[v] = n++;
    Presentation q = make_presentation(p.k, n);
    q.deterministic = p.deterministic;
    for (int v = 0; v < p.n; ++v) {
        if (!alive[v]) continue;
        for (int a = 0; a < p.k; ++a)
            for (int t : p.succ[v][a])
                if (alive[t]) add_edge(q, id[v], id[t], a);
    }
    return q;
}

Presentation presentation_from_graph(int alphabet, const LabeledGraph& g) {
    Presentation p = make_presentation(alphabet, g.vertices);
    for (const auto& e : g.edges) {
        if (e.src < 0 || e.src >= g.vertices || e.dst < 0 || e.dst >= g.vertices)
            throw InvalidInputError("graph edge endpoint out of range");
        if (e.label < 0 || e.label >= alphabet)
            throw InvalidInputError("graph edge label out of range");
        add_edge(p, e.src, e.dst, e.label);
    }
    // drop duplicate parallel edges: they never change the shift
    for (int v = 0; v < p.n; ++v)
        for (int a = 0; a < alphabet; ++a) {
            auto dedup = [](std::vector<int>& xs) {
                std::sort(xs.begin(), xs.end());
                xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
            };
            dedup(p.succ[v][a]);
            dedup(p.pred[v][a]);
        }
    return essentialize(p);
}

LabeledGraph graph_from_presentation(const Presentation& p) {
    LabeledGraph g;
    g.vertices = p.n;
    for (int v = 0; v < p.n; ++v)
        for (int a = 0; a < p.k; ++a)
            for (int t : p.succ[v][a]) g.edges.push_back({v, t, a});
    return g;
}

// ---------- cache ----------

struct Subshift::Cache {
    std::mutex mu;
    std::optional<Presentation> pres;
    std::optional<Presentation> det;
    std::optional<WordDfa> dfa;
};

// ---------- construction ----------

Subshift Subshift::full_shift(int alphabet, int dim) {
    Subshift s;
    s.kind_ = ShiftKind::Full;
    s.alphabet_ = Alphabet(alphabet);
    s.dim_ = dim;
    if (dim != 1 && dim != 2) throw InvalidInputError("subshift dim must be 1 or 2");
    s.cache_ = std::make_shared<Cache>();
    return s;
}

Subshift Subshift::sft(int alphabet, int dim, std::vector<Pattern> forbidden) {
    Subshift s;
    s.kind_ = ShiftKind::Sft;
    s.alphabet_ = Alphabet(alphabet);
    s.dim_ = dim;
    if (dim != 1 && dim != 2) throw InvalidInputError("subshift dim must be 1 or 2");
    for (const auto& p : forbidden) {
        if (p.window().empty())
            throw InvalidInputError("forbidden pattern must have a nonempty window");
        if (p.window().dim() != dim)
            throw InvalidInputError("forbidden pattern dimension mismatch");
        for (int sym : p.symbols())
            if (sym >= alphabet) throw InvalidInputError("forbidden pattern symbol out of range");
    }
    s.forbidden_ = std::move(forbidden);
    s.cache_ = std::make_shared<Cache>();
    return s;
}

Subshift Subshift::sofic(int alphabet, LabeledGraph graph) {
    Subshift s;
    s.kind_ = ShiftKind::Sofic;
    s.alphabet_ = Alphabet(alphabet);
    s.dim_ = 1;
    s.graph_ = std::move(graph);
    s.cache_ = std::make_shared<Cache>();
    return s;
}

// ---------- presentation ----------

namespace {

// Expand a (possibly gappy) 1D forbidden pattern into concrete words on its hull.
void expand_forbidden(const Pattern& p, int k, std::vector<std::vector<int>>& out) {
    long lo = p.window().lo()[0], hi = p.window().hi()[0];
    long len = hi - lo + 1;
    std::vector<int> word(static_cast<std::size_t>(len), -1);
    for (std::size_t i = 0; i < p.window().size(); ++i)
        word[static_cast<std::size_t>(p.window().cells()[i][0] - lo)] = p.symbols()[i];
    std::vector<std::size_t> free_slots;
    for (std::size_t i = 0; i < word.size(); ++i)
        if (word[i] < 0) free_slots.push_back(i);
    std::uint64_t combos = 1;
    for (std::size_t i = 0; i < free_slots.size(); ++i) {
        combos *= static_cast<std::uint64_t>(k);
        if (combos > capacity_limit())
            throw CapacityError("forbidden pattern expansion too large");
    }
    for (std::uint64_t c = 0; c < combos; ++c) {
        std::vector<int> w = word;
        std::uint64_t rest = c;
        for (std::size_t slot : free_slots) {
            w[slot] = static_cast<int>(rest % k);
            rest /= k;
        }
        out.push_back(std::move(w));
    }
}

bool has_forbidden_factor(const std::vector<int>& word, const std::vector<std::vector<int>>& bad) {
    for (const auto& f : bad) {
        if (f.size() > word.size()) continue;
        for (std::size_t off = 0; off + f.size() <= word.size(); ++off) {
            bool match = true;
            for (std::size_t i = 0; i < f.size(); ++i)
                if (word[off + i] != f[i]) { match = false; break; }
            if (match) return true;
        }
    }
    return false;
}

// De Bruijn style presentation with memory m-1, m = longest forbidden word.
Presentation sft_presentation(int k, const std::vector<Pattern>& forbidden) {
    std::vector<std::vector<int>> bad;
    for (const auto& p : forbidden) expand_forbidden(p, k, bad);
    std::size_t m = 1;
    for (const auto& w : bad) m = std::max(m, w.size());
    std::size_t h = m - 1;

    std::uint64_t nverts = 1;
    for (std::size_t i = 0; i < h; ++i) {
        nverts *= static_cast<std::uint64_t>(k);
        if (nverts > capacity_limit()) throw CapacityError("SFT block length too large");
    }

    // vertices = words of length m-1 free of forbidden factors
    std::vector<std::vector<int>> verts;
    std::map<std::vector<int>, int> vert_id;
    std::vector<int> cur(h, 0);
    for (std::uint64_t code = 0; code < nverts; ++code) {
        std::uint64_t rest = code;
        for (std::size_t i = 0; i < h; ++i) { cur[i] = static_cast<int>(rest % k); rest /= k; }
        if (!has_forbidden_factor(cur, bad)) {
            vert_id[cur] = static_cast<int>(verts.size());
            verts.push_back(cur);
        }
    }
    Presentation p = make_presentation(k, static_cast<int>(verts.size()));
    p.deterministic = true;
    std::vector<int> ext;
    for (std::size_t v = 0; v < verts.size(); ++v) {
        for (int a = 0; a < k; ++a) {
            ext = verts[v];
            ext.push_back(a);
            if (has_forbidden_factor(ext, bad)) continue;
            std::vector<int> nxt(ext.begin() + (h > 0 ? 1 : 0), ext.end());
            if (h == 0) nxt.clear();
            auto it = vert_id.find(nxt);
            if (it == vert_id.end()) continue;
            add_edge(p, static_cast<int>(v), it->second, a);
        }
    }
    return essentialize(p);
}

} // namespace

const Presentation& Subshift::presentation() const {
    if (dim_ != 1) throw InvalidInputError("graph presentation requires dim = 1");
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (!cache_->pres) {
        switch (kind_) {
            case ShiftKind::Full: {
                Presentation p = make_presentation(alphabet_.size, 1);
                p.deterministic = true;
                for (int a = 0; a < alphabet_.size; ++a) add_edge(p, 0, 0, a);
                cache_->pres = std::move(p);
                break;
            }
            case ShiftKind::Sft:
                cache_->pres = sft_presentation(alphabet_.size, forbidden_);
                break;
            case ShiftKind::Sofic:
                cache_->pres = presentation_from_graph(alphabet_.size, graph_);
                break;
        }
        cache_->pres->deterministic = is_right_resolving(*cache_->pres);
    }
    return *cache_->pres;
}

namespace {

WordDfa subset_dfa(const Presentation& p) {
    if (p.n > 64) throw CapacityError("presentation too large for subset construction");
    WordDfa dfa;
    dfa.k = p.k;
    if (p.n == 0) {
        dfa.delta.assign(1, std::vector<int>(p.k, -1));
        dfa.initial = 0;
        return dfa;
    }
    std::unordered_map<std::uint64_t, int> id;
    std::vector<std::uint64_t> masks;
    auto intern = [&](std::uint64_t mask) {
        auto it = id.find(mask);
        if (it != id.end()) return it->second;
        int i = static_cast<int>(masks.size());
        id[mask] = i;
        masks.push_back(mask);
        dfa.delta.emplace_back(p.k, -1);
        return i;
    };
    dfa.initial = intern(p.full_mask());
    for (std::size_t i = 0; i < masks.size(); ++i) {
        if (masks.size() > capacity_limit())
            throw CapacityError("subset construction exceeded capacity");
        for (int a = 0; a < p.k; ++a) {
            std::uint64_t nxt = p.step(masks[i], a);
            if (nxt) dfa.delta[i][a] = intern(nxt);
        }
    }
    return dfa;
}

Presentation dfa_presentation(const WordDfa& dfa) {
    Presentation p = make_presentation(dfa.k, dfa.states());
    p.deterministic = true;
    for (int v = 0; v < dfa.states(); ++v)
        for (int a = 0; a < dfa.k; ++a)
            if (dfa.delta[v][a] >= 0) add_edge(p, v, dfa.delta[v][a], a);
    return essentialize(p);
}

} // namespace

const WordDfa& Subshift::word_dfa() const {
    const Presentation& p = presentation();
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (!cache_->dfa) cache_->dfa = subset_dfa(p);
    return *cache_->dfa;
}

const Presentation& Subshift::det_presentation() const {
    const Presentation& p = presentation();
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        if (cache_->det) return *cache_->det;
    }
    Presentation det = p.deterministic ? p : dfa_presentation(subset_dfa(p));
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (!cache_->det) cache_->det = std::move(det);
    return *cache_->det;
}

bool Subshift::is_empty() const {
    if (dim_ == 1) return presentation().n == 0;
    // d = 2: desk-scale proxy, emptiness of the height-1 strip
    return language(Window::box(2, Cell{0, 0}, Cell{0, 0})).empty();
}

// ---------- language ----------

std::vector<std::vector<int>> Subshift::words(long n) const {
    if (n < 0) throw InvalidInputError("word length must be >= 0");
    const WordDfa& dfa = word_dfa();
    const Presentation& p = presentation();
    std::vector<std::vector<int>> out;
    if (p.n == 0) return out;
    if (n == 0) { out.push_back({}); return out; }
    std::vector<int> word;
    // iterative DFS in label order keeps the output sorted
    struct Frame { int state; int next_label; };
    std::vector<Frame> stack{{dfa.initial, 0}};
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (static_cast<long>(word.size()) == n) {
            out.push_back(word);
            if (out.size() > capacity_limit()) throw CapacityError("language enumeration too large");
            word.pop_back();
            stack.pop_back();
            continue;
        }
        if (f.next_label >= dfa.k) {
            if (!word.empty()) word.pop_back();
            stack.pop_back();
            continue;
        }
        int a = f.next_label++;
        int t = dfa.delta[f.state][a];
        if (t >= 0) {
            word.push_back(a);
            stack.push_back({t, 0});
        }
    }
    return out;
}

bool Subshift::word_allowed(const std::vector<int>& word) const {
    const WordDfa& dfa = word_dfa();
    if (presentation().n == 0) return false;
    int s = dfa.initial;
    for (int a : word) {
        if (a < 0 || a >= dfa.k) throw InvalidInputError("symbol out of range");
        s = dfa.delta[s][a];
        if (s < 0) return false;
    }
    return true;
}

std::uint64_t Subshift::count_words(long n) const {
    if (n < 0) throw InvalidInputError("word length must be >= 0");
    const WordDfa& dfa = word_dfa();
    if (presentation().n == 0) return 0;
    std::vector<std::uint64_t> cnt(dfa.states(), 0);
    cnt[dfa.initial] = 1;
    for (long step = 0; step < n; ++step) {
        std::vector<std::uint64_t> nxt(dfa.states(), 0);
        for (int s = 0; s < dfa.states(); ++s) {
            if (!cnt[s]) continue;
            for (int a = 0; a < dfa.k; ++a) {
                int t = dfa.delta[s][a];
                if (t < 0) continue;
                std::uint64_t before = nxt[t];
                nxt[t] += cnt[s];
                if (nxt[t] < before) throw CapacityError("word count overflows 64 bits");
            }
        }
        cnt.swap(nxt);
    }
    std::uint64_t total = 0;
    for (std::uint64_t c : cnt) {
        std::uint64_t before = total;
        total += c;
        if (total < before) throw CapacityError("word count overflows 64 bits");
    }
    return total;
}

double Subshift::log_count_words(long n) const {
    if (n < 0) throw InvalidInputError("word length must be >= 0");
    const WordDfa& dfa = word_dfa();
    if (presentation().n == 0) throw InvalidInputError("empty subshift has no words");
    std::vector<double> cnt(dfa.states(), 0.0);
    cnt[dfa.initial] = 1.0;
    double log_scale = 0.0;
    for (long step = 0; step < n; ++step) {
        std::vector<double> nxt(dfa.states(), 0.0);
        for (int s = 0; s < dfa.states(); ++s) {
            if (cnt[s] == 0.0) continue;
            for (int a = 0; a < dfa.k; ++a)
                if (dfa.delta[s][a] >= 0) nxt[dfa.delta[s][a]] += cnt[s];
        }
        double peak = 0.0;
        for (double v : nxt) peak = std::max(peak, v);
        if (peak == 0.0) return -std::numeric_limits<double>::infinity();
        for (double& v : nxt) v /= peak;
        log_scale += std::log(peak);
        cnt.swap(nxt);
    }
    double total = 0.0;
    for (double v : cnt) total += v;
    return log_scale + std::log(total);
}

namespace {

// Column-transfer language for 2D SFT boxes of bounded height.
std::vector<Pattern> strip_language(const Subshift& X, const Window& w) {
    Cell lo = w.lo(), hi = w.hi();
    long width = hi[0] - lo[0] + 1, height = hi[1] - lo[1] + 1;
    if (w.size() != static_cast<std::size_t>(width * height))
        throw InvalidInputError("2D language queries require box windows");
    if (height > Subshift::strip_bound())
        throw CapacityError("window height exceeds the strip bound");
    int k = X.alphabet().size;
    std::uint64_t ncols = 1;
    for (long i = 0; i < height; ++i) {
        ncols *= static_cast<std::uint64_t>(k);
        if (ncols > capacity_limit()) throw CapacityError("column alphabet too large");
    }
    auto col_symbol = [&](const std::vector<int>& grid, long x) {
        // grid is row-major: grid[y * width + x]
        std::uint64_t code = 0;
        for (long y = height - 1; y >= 0; --y) code = code * k + grid[y * width + x];
        return static_cast<int>(code);
    };
    long mx = 1;
    for (const auto& f : X.forbidden())
        mx = std::max(mx, f.window().hi()[0] - f.window().lo()[0] + 1);

    // forbidden super-words: all m_x-wide, full-height grids containing a
    // forbidden translate entirely inside the strip
    auto grid_bad = [&](const std::vector<int>& grid, long gw) {
        for (const auto& f : X.forbidden()) {
            Cell flo = f.window().lo(), fhi = f.window().hi();
            long fw = fhi[0] - flo[0] + 1, fh = fhi[1] - flo[1] + 1;
            if (fw > gw || fh > height) continue;
            for (long dx = 0; dx + fw <= gw; ++dx)
                for (long dy = 0; dy + fh <= height; ++dy) {
                    bool match = true;
                    for (std::size_t i = 0; i < f.window().size() && match; ++i) {
                        Cell c = f.window().cells()[i];
                        long gx = c[0] - flo[0] + dx, gy = c[1] - flo[1] + dy;
                        if (grid[gy * gw + gx] != f.symbols()[i]) match = false;
                    }
                    if (match) return true;
                }
        }
        return false;
    };

    std::uint64_t ngrids = 1;
    for (long i = 0; i < mx * height; ++i) {
        ngrids *= static_cast<std::uint64_t>(k);
        if (ngrids > capacity_limit()) throw CapacityError("2D transfer enumeration too large");
    }
    std::vector<Pattern> super_forbidden;
    std::vector<int> grid(static_cast<std::size_t>(mx * height));
    for (std::uint64_t code = 0; code < ngrids; ++code) {
        std::uint64_t rest = code;
        for (auto& cellv : grid) { cellv = static_cast<int>(rest % k); rest /= k; }
        if (!grid_bad(grid, mx)) continue;
        std::vector<int> word(static_cast<std::size_t>(mx));
        for (long x = 0; x < mx; ++x) word[x] = col_symbol(grid, x);
        super_forbidden.push_back(Pattern::word(word));
    }
    Subshift strip = Subshift::sft(static_cast<int>(ncols), 1, std::move(super_forbidden));
    std::vector<Pattern> out;
    for (const auto& word : strip.words(width)) {
        std::vector<int> syms;
        syms.reserve(w.size());
        for (const auto& c : w.cells()) {
            long x = c[0] - lo[0], y = c[1] - lo[1];
            std::uint64_t code = static_cast<std::uint64_t>(word[x]);
            for (long i = 0; i < y; ++i) code /= k;
            syms.push_back(static_cast<int>(code % k));
        }
        out.push_back(Pattern(w, std::move(syms)));
    }
    return out;
}

} // namespace

std::vector<Pattern> Subshift::language(const Window& w) const {
    if (w.dim() != dim_) throw InvalidInputError("window dimension mismatch");
    if (w.empty()) return {Pattern()};
    if (dim_ == 2) {
        if (kind_ == ShiftKind::Sofic) throw InvalidInputError("sofic shifts are 1D only");
        return strip_language(*this, w);
    }
    long lo = w.lo()[0], n = w.hi()[0] - lo + 1;
    std::set<std::vector<int>> seen;
    std::vector<Pattern> out;
    for (const auto& word : words(n)) {
        std::vector<int> syms;
        syms.reserve(w.size());
        for (const auto& c : w.cells()) syms.push_back(word[c[0] - lo]);
        if (seen.insert(syms).second) out.push_back(Pattern(w, std::move(syms)));
    }
    return out;
}

long Subshift::strip_bound() {
    if (const char* env = std::getenv("EDEN_STRIP_BOUND")) {
        long v = std::atol(env);
        if (v > 0) return v;
    }
    return 8;
}

// ---------- membership ----------

namespace {

bool sft_contains(const Subshift& X, const Configuration& x) {
    // occurrence positions reduce to a finite test region in both representations
    std::vector<Cell> shifts;
    if (x.is_periodic()) {
        long px = x.period()[0], py = x.dim() == 2 ? x.period()[1] : 1;
        for (long i = 0; i < px; ++i)
            for (long j = 0; j < py; ++j) shifts.push_back(Cell{i, j});
    }
    for (const auto& f : X.forbidden()) {
        if (x.is_periodic()) {
            for (const auto& t : shifts) {
                bool match = true;
                for (std::size_t i = 0; i < f.window().size() && match; ++i)
                    if (x.at(f.window().cells()[i] + t) != f.symbols()[i]) match = false;
                if (match) return false;
            }
        } else {
            // background-only occurrence
            bool bg_match = true;
            for (int s : f.symbols())
                if (s != x.background()) { bg_match = false; break; }
            if (bg_match) return false;
            // occurrences overlapping the support
            if (x.exceptional().window().empty()) continue;
            Cell slo = x.exceptional().window().lo(), shi = x.exceptional().window().hi();
            Cell flo = f.window().lo(), fhi = f.window().hi();
            for (long tx = slo[0] - fhi[0]; tx <= shi[0] - flo[0]; ++tx) {
                long ty_lo = x.dim() == 2 ? slo[1] - fhi[1] : 0;
                long ty_hi = x.dim() == 2 ? shi[1] - flo[1] : 0;
                for (long ty = ty_lo; ty <= ty_hi; ++ty) {
                    bool match = true;
                    for (std::size_t i = 0; i < f.window().size() && match; ++i)
                        if (x.at(f.window().cells()[i] + Cell{tx, ty}) != f.symbols()[i])
                            match = false;
                    if (match) return false;
                }
            }
        }
    }
    return true;
}

// states with unbounded histories of the given label word, via mask iteration
std::uint64_t limit_mask(const Presentation& p, const std::vector<int>& word, bool forward) {
    std::uint64_t mask = p.full_mask();
    std::vector<std::uint64_t> seen;
    while (true) {
        for (std::size_t i = 0; i < seen.size(); ++i) {
            if (seen[i] == mask) {
                std::uint64_t acc = 0;
                for (std::size_t j = i; j < seen.size(); ++j) acc |= seen[j];
                return acc;
            }
        }
        seen.push_back(mask);
        std::uint64_t nxt = mask;
        if (forward) {
            for (int a : word) nxt = p.step(nxt, a);
        } else {
            for (auto it = word.rbegin(); it != word.rend(); ++it) nxt = p.step_back(nxt, *it);
        }
        mask = nxt;
        if (!mask) return 0;
    }
}

bool sofic_contains(const Subshift& X, const Configuration& x) {
    const Presentation& p = X.presentation();
    if (p.n == 0) return false;
    if (x.is_periodic()) {
        std::vector<int> u = x.period_symbols();
        return limit_mask(p, u, true) != 0;
    }
    std::vector<int> bg{x.background()};
    std::uint64_t left = limit_mask(p, bg, true);        // states with infinite bg past
    std::uint64_t right = limit_mask(p, bg, false);      // states with infinite bg future
    if (!left || !right) return false;
    if (x.exceptional().window().empty()) return true;
    long lo = x.exceptional().window().lo()[0], hi = x.exceptional().window().hi()[0];
    std::uint64_t mask = left;
    for (long i = lo; i <= hi; ++i) mask = p.step(mask, x.at(cell1(i)));
    return (mask & right) != 0;
}

} // namespace

bool Subshift::contains(const Configuration& x) const {
    if (x.dim() != dim_) throw InvalidInputError("configuration dimension mismatch");
    auto check_symbol = [&](int s) {
        if (s < 0 || s >= alphabet_.size) throw InvalidInputError("configuration symbol out of range");
    };
    if (x.is_periodic())
        for (int s : x.period_symbols()) check_symbol(s);
    else {
        check_symbol(x.background());
        for (int s : x.exceptional().symbols()) check_symbol(s);
    }
    switch (kind_) {
        case ShiftKind::Full: return true;
        case ShiftKind::Sft: return sft_contains(*this, x);
        case ShiftKind::Sofic: return sofic_contains(*this, x);
    }
    return false;
}

// ---------- normal forms ----------

Subshift Subshift::determinize() const {
    if (dim_ != 1) throw InvalidInputError("determinize requires dim = 1");
    return Subshift::sofic(alphabet_.size, graph_from_presentation(det_presentation()));
}

Subshift Subshift::minimized() const {
    const Presentation& det = det_presentation();
    if (det.n == 0) return Subshift::sofic(alphabet_.size, LabeledGraph{});
    // follower-set merging: refine classes by (label -> class of successor)
    std::vector<int> cls(det.n, 0);
    int nclasses = 1;
    while (true) {
        std::map<std::vector<int>, int> sig_id;
        std::vector<int> next_cls(det.n);
        for (int v = 0; v < det.n; ++v) {
            std::vector<int> sig{cls[v]};
            for (int a = 0; a < det.k; ++a)
                sig.push_back(det.succ[v][a].empty() ? -1 : cls[det.succ[v][a][0]]);
            auto it = sig_id.find(sig);
            if (it == sig_id.end()) it = sig_id.emplace(sig, static_cast<int>(sig_id.size())).first;
            next_cls[v] = it->second;
        }
        int n = static_cast<int>(sig_id.size());
        cls.swap(next_cls);
        if (n == nclasses) break;
        nclasses = n;
    }
    LabeledGraph g;
    g.vertices = nclasses;
    std::set<std::tuple<int, int, int>> edges;
    for (int v = 0; v < det.n; ++v)
        for (int a = 0; a < det.k; ++a)
            for (int t : det.succ[v][a]) edges.insert({cls[v], cls[t], a});
    for (const auto& [s, t, a] : edges) g.edges.push_back({s, t, a});
    return Subshift::sofic(alphabet_.size, std::move(g));
}

// ---------- comparison ----------

namespace {

// BFS over the synchronous product of two word DFAs, tracking a dead sink on
// each side. `mode_subset` reports only left-alive/right-dead mismatches.
bool compare_languages(const Subshift& X, const Subshift& Y, bool mode_subset,
                       std::vector<int>* witness) {
    if (X.alphabet().size != Y.alphabet().size)
        throw InvalidInputError("language comparison needs equal alphabets");
    if (X.dim() != 1 || Y.dim() != 1)
        throw InvalidInputError("language comparison requires dim = 1");
    const WordDfa& A = X.word_dfa();
    const WordDfa& B = Y.word_dfa();
    bool a_empty = X.presentation().n == 0, b_empty = Y.presentation().n == 0;
    int k = A.k;
    auto enc = [&](int s, int t) { return static_cast<long long>(s + 1) * (B.states() + 1) + (t + 1); };
    std::set<long long> seen;
    struct Node { int s, t; int parent; int label; };
    std::deque<int> queue;
    std::vector<Node> nodes;
    auto push = [&](int s, int t, int parent, int label) -> std::optional<std::vector<int>> {
        bool s_dead = s < 0, t_dead = t < 0;
        bool bad = mode_subset ? (!s_dead && t_dead) : (s_dead != t_dead);
        if (bad) {
            std::vector<int> w;
            int cur = static_cast<int>(nodes.size());
            nodes.push_back({s, t, parent, label});
            while (cur >= 0 && nodes[cur].label >= 0) {
                w.push_back(nodes[cur].label);
                cur = nodes[cur].parent;
            }
            std::reverse(w.begin(), w.end());
            return w;
        }
        if (s_dead && t_dead) return std::nullopt;
        if (!seen.insert(enc(s, t)).second) return std::nullopt;
        nodes.push_back({s, t, parent, label});
        queue.push_back(static_cast<int>(nodes.size()) - 1);
        return std::nullopt;
    };
    if (auto w = push(a_empty ? -1 : A.initial, b_empty ? -1 : B.initial, -1, -1)) {
        if (witness) *witness = *w;
        return false;
    }
    while (!queue.empty()) {
        int id = queue.front();
        queue.pop_front();
        int s = nodes[id].s, t = nodes[id].t;
        for (int a = 0; a < k; ++a) {
            int s2 = s < 0 ? -1 : A.delta[s][a];
            int t2 = t < 0 ? -1 : B.delta[t][a];
            if (auto w = push(s2, t2, id, a)) {
                if (witness) *witness = *w;
                return false;
            }
        }
    }
    return true;
}

} // namespace

bool Subshift::equal_language(const Subshift& other, std::vector<int>* witness) const {
    return compare_languages(*this, other, false, witness);
}

bool Subshift::language_subset_of(const Subshift& other, std::vector<int>* witness) const {
    return compare_languages(*this, other, true, witness);
}

bool pattern_allowed(const Subshift& X, const Pattern& p) {
    if (X.dim() != 1) throw InvalidInputError("pattern_allowed requires dim = 1");
    if (p.window().empty()) return !X.is_empty();
    if (p.window().dim() != 1) throw InvalidInputError("pattern dimension mismatch");
    for (int s : p.symbols())
        if (s < 0 || s >= X.alphabet().size) throw InvalidInputError("pattern symbol out of range");
    const WordDfa& dfa = X.word_dfa();
    if (X.presentation().n == 0) return false;
    long lo = p.window().lo()[0], n = p.window().hi()[0] - lo + 1;
    std::vector<int> fixed(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < p.window().size(); ++i)
        fixed[p.window().cells()[i][0] - lo] = p.symbols()[i];
    // DFS with (position, state) failure memoization
    std::set<std::pair<long, int>> dead;
    std::function<bool(long, int)> go = [&](long pos, int state) -> bool {
        if (pos == n) return true;
        if (dead.count({pos, state})) return false;
        for (int a = 0; a < dfa.k; ++a) {
            if (fixed[pos] >= 0 && a != fixed[pos]) continue;
            int t = dfa.delta[state][a];
            if (t >= 0 && go(pos + 1, t)) return true;
        }
        dead.insert({pos, state});
        return false;
    };
    return go(0, dfa.initial);
}

// ---------- text format ----------

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        // strip comments and whitespace
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        auto e = line.find_last_not_of(" \t\r");
        lines.push_back(line.substr(b, e - b + 1));
    }
    return lines;
}

} // namespace

Subshift parse_subshift(const std::string& text) {
    auto lines = split_lines(text);
    if (lines.empty()) throw InvalidInputError("empty subshift description");
    int k = -1, dim = 1;
    {
        std::istringstream hdr(lines[0]);
        std::string tok;
        while (std::getline(hdr, tok, ';')) {
            auto eq = tok.find('=');
            if (eq == std::string::npos) continue;
            std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
            key.erase(std::remove_if(key.begin(), key.end(), ::isspace), key.end());
            val.erase(std::remove_if(val.begin(), val.end(), ::isspace), val.end());
            if (key == "alphabet") k = std::stoi(val);
            else if (key == "dim") dim = std::stoi(val);
        }
    }
    if (k < 1) throw InvalidInputError("subshift header needs alphabet=<k>");
    bool sofic = false;
    for (std::size_t i = 1; i < lines.size(); ++i)
        if (lines[i].find("->") != std::string::npos) sofic = true;
    if (sofic) {
        if (dim != 1) throw InvalidInputError("sofic shifts are 1D only");
        LabeledGraph g;
        for (std::size_t i = 1; i < lines.size(); ++i) {
            // edge syntax: src -label-> dst
            int src, label, dst;
            char d1, d2, gt;
            std::istringstream es(lines[i]);
            if (!(es >> src >> d1 >> label >> d2 >> gt >> dst) || d1 != '-' || d2 != '-' || gt != '>')
                throw InvalidInputError("bad sofic edge line: " + lines[i]);
            g.vertices = std::max(g.vertices, std::max(src, dst) + 1);
            g.edges.push_back({src, dst, label});
        }
        return Subshift::sofic(k, std::move(g));
    }
    if (lines.size() == 1) return Subshift::full_shift(k, dim);
    std::vector<Pattern> forbidden;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::string& line = lines[i];
        if (line.rfind("dim=", 0) == 0 || line.rfind("cells=", 0) == 0) {
            std::string text = line.rfind("dim=", 0) == 0
                                   ? line
                                   : "dim=" + std::to_string(dim) + "; " + line;
            forbidden.push_back(parse_pattern(text));
        } else {
            // bare word, one digit per symbol
            std::vector<int> word;
            for (char c : line) {
                if (c < '0' || c > '9') throw InvalidInputError("bad forbidden word: " + line);
                word.push_back(c - '0');
            }
            forbidden.push_back(Pattern::word(word));
        }
    }
    return Subshift::sft(k, dim, std::move(forbidden));
}

std::string format_subshift(const Subshift& s) {
    std::ostringstream os;
    os << "alphabet=" << s.alphabet().size << "; dim=" << s.dim() << "\n";
    if (s.kind() == ShiftKind::Sft) {
        for (const auto& f : s.forbidden()) os << format_pattern(f) << "\n";
    } else if (s.kind() == ShiftKind::Sofic) {
        for (const auto& e : s.graph().edges)
            os << e.src << " -" << e.label << "-> " << e.dst << "\n";
    }
    return os.str();
}

} // namespace eden
