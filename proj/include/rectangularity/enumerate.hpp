#pragma once

// Exhaustive census of rectangular groupoids, central groupoids and one-element
// blow-ups of rectangular bands.

#include "construct.hpp"
#include "core.hpp"
#include "isotopy.hpp"
#include "properties.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <thread>
#include <vector>

namespace rectangularity {

enum class CountMode { labeled, isomorphism, isotopy };

struct EnumerateOptions {
    unsigned jobs = 1;      // worker threads; output does not depend on it
    bool long_run = false;  // unlocks the order-16 central census
};

struct Census {
    std::size_t order = 0;
    std::size_t count = 0;
    std::vector<Groupoid> tables; // sorted; empty when only the count is available
    std::string diagnostic;
};

inline constexpr std::size_t max_labeled_listing_order = 3;
inline constexpr std::size_t max_labeled_count_order = 4;
inline constexpr std::size_t max_isomorphism_census_order = 4;
inline constexpr std::size_t max_isotopy_census_order = 3;
inline constexpr std::size_t max_band_blow_up_order = 12;

namespace detail {

    /// Runs task(i) for i in [0, count) on `jobs` threads. Each task writes only its own slot.
    template <typename Task>
    void run_parallel(std::size_t count, unsigned jobs, Task && task)
    {
        jobs = std::max(1U, jobs);
        if (jobs == 1 || count <= 1) {
            for (std::size_t i = 0; i < count; ++i)
                task(i);
            return;
        }
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        for (unsigned w = 0; w < std::min<std::size_t>(jobs, count); ++w)
            workers.emplace_back([&] {
                for (std::size_t i; (i = next.fetch_add(1)) < count;)
                    task(i);
            });
        for (auto & t : workers)
            t.join();
    }

    /// Backtracking filler for (partial) tables that keeps every partial table pair
    /// disjoint: no two distinct symbols share both a row and a column. On a completely
    /// filled table this is exactly the rectangle condition.
    ///
    /// Symbols must be below 64.
    class PairDisjointFiller {
    public:
        using Mask = std::uint64_t;
        static constexpr Symbol empty = static_cast<Symbol>(-1);

        explicit PairDisjointFiller(std::size_t n)
            : n_(n), cells_(n * n, empty), row_syms_(n, 0), col_syms_(n, 0), row_pairs_(n, 0), col_pairs_(n, 0)
        {
        }

        std::size_t order() const noexcept { return n_; }
        Symbol at(std::size_t r, std::size_t c) const noexcept { return cells_[r * n_ + c]; }

        /// Places x at (r, c) if the table stays pair disjoint. Returns false and leaves the
        /// state untouched otherwise.
        bool place(std::size_t r, std::size_t c, Symbol x)
        {
            const Mask bx = Mask{1} << x;
            const Mask new_row = row_syms_[r] & ~bx;
            const Mask new_col = col_syms_[c] & ~bx;
            if ((row_pairs_[x] | new_row) & (col_pairs_[x] | new_col))
                return false;
            row_pairs_[x] |= new_row;
            col_pairs_[x] |= new_col;
            for (Mask m = new_row; m; m &= m - 1)
                row_pairs_[std::countr_zero(m)] |= bx;
            for (Mask m = new_col; m; m &= m - 1)
                col_pairs_[std::countr_zero(m)] |= bx;
            row_syms_[r] |= bx;
            col_syms_[c] |= bx;
            cells_[r * n_ + c] = x;
            return true;
        }

        struct Snapshot {
            Mask row_syms, col_syms;
            std::vector<Mask> row_pairs, col_pairs;
        };

        Snapshot snapshot(std::size_t r, std::size_t c) const
        {
            return {row_syms_[r], col_syms_[c], row_pairs_, col_pairs_};
        }

        void restore(std::size_t r, std::size_t c, const Snapshot & s)
        {
            row_syms_[r] = s.row_syms;
            col_syms_[c] = s.col_syms;
            row_pairs_ = s.row_pairs;
            col_pairs_ = s.col_pairs;
            cells_[r * n_ + c] = empty;
        }

        Groupoid to_groupoid() const { return Groupoid(n_, cells_); }

    private:
        std::size_t n_;
        std::vector<Symbol> cells_;
        std::vector<Mask> row_syms_, col_syms_;   // symbols present per row / column
        std::vector<Mask> row_pairs_, col_pairs_; // per symbol: partners sharing a row / column
    };

    /// Depth-first completion of a list of free cells.
    ///
    /// allowed: symbols admissible in every free cell. first_occurrence: a symbol may be
    /// used only if every smaller symbol already occurs (symbol-relabelling symmetry
    /// breaking; only meaningful when all cells are free).
    class CellSearch {
    public:
        using Cell = std::pair<std::size_t, std::size_t>;

        CellSearch(PairDisjointFiller filler, std::vector<Cell> cells, std::uint64_t allowed, bool first_occurrence)
            : filler_(std::move(filler)), cells_(std::move(cells)), allowed_(allowed), first_occurrence_(first_occurrence)
        {
        }

        /// Calls visit(filler) for every completion; a false return stops the search.
        template <typename Visit>
        bool run(Visit && visit, std::size_t depth = 0, Symbol next_new = 0)
        {
            if (depth == cells_.size())
                return visit(filler_);
            auto [r, c] = cells_[depth];
            for (Symbol x = 0; x < filler_.order(); ++x) {
                if (!((allowed_ >> x) & 1U))
                    continue;
                if (first_occurrence_ && x > next_new)
                    break;
                auto snap = filler_.snapshot(r, c);
                if (!filler_.place(r, c, x))
                    continue;
                bool go_on = run(visit, depth + 1, std::max<Symbol>(next_new, x + 1));
                filler_.restore(r, c, snap);
                if (!go_on)
                    return false;
            }
            return true;
        }

        /// All consistent assignments of the first `depth` cells, as start states for
        /// independent workers, in search order.
        std::vector<std::pair<CellSearch, Symbol>> split(std::size_t depth)
        {
            std::vector<std::pair<CellSearch, Symbol>> out;
            collect(depth, 0, 0, out);
            return out;
        }

        std::size_t start_depth() const noexcept { return start_; }

    private:
        void collect(std::size_t depth, std::size_t at, Symbol next_new, std::vector<std::pair<CellSearch, Symbol>> & out)
        {
            if (at == depth || at == cells_.size()) {
                CellSearch copy = *this;
                copy.start_ = at;
                out.emplace_back(std::move(copy), next_new);
                return;
            }
            auto [r, c] = cells_[at];
            for (Symbol x = 0; x < filler_.order(); ++x) {
                if (!((allowed_ >> x) & 1U))
                    continue;
                if (first_occurrence_ && x > next_new)
                    break;
                auto snap = filler_.snapshot(r, c);
                if (!filler_.place(r, c, x))
                    continue;
                collect(depth, at + 1, std::max<Symbol>(next_new, x + 1), out);
                filler_.restore(r, c, snap);
            }
        }

        PairDisjointFiller filler_;
        std::vector<Cell> cells_;
        std::uint64_t allowed_;
        bool first_occurrence_;
        std::size_t start_ = 0;
    };

    inline std::vector<CellSearch::Cell> row_major_cells(std::size_t n)
    {
        std::vector<CellSearch::Cell> cells;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                cells.emplace_back(r, c);
        return cells;
    }

    inline std::uint64_t low_mask(std::size_t k)
    {
        return k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    }

    /// Rectangular tables of order n in row-major lexicographic order, collected in
    /// parallel by splitting on the first row.
    inline std::vector<Groupoid> rectangular_tables(std::size_t n, bool first_occurrence, unsigned jobs)
    {
        CellSearch root(PairDisjointFiller(n), row_major_cells(n), low_mask(n), first_occurrence);
        auto tasks = root.split(std::min<std::size_t>(n, n * n));
        std::vector<std::vector<Groupoid>> found(tasks.size());
        run_parallel(tasks.size(), jobs, [&](std::size_t i) {
            auto & [search, next_new] = tasks[i];
            search.run(
                [&](const PairDisjointFiller & f) {
                    found[i].push_back(f.to_groupoid());
                    return true;
                },
                search.start_depth(), next_new);
        });
        std::vector<Groupoid> all;
        for (auto & v : found)
            all.insert(all.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
        return all;
    }

    /// The canonical forms of every member of the isomorphism classes meeting `tables`
    /// after arbitrary symbol relabelling.
    inline std::set<Groupoid> canonical_closure_under_symbol_relabelling(const std::vector<Groupoid> & tables,
                                                                           unsigned jobs)
    {
        std::vector<std::set<Groupoid>> partial(tables.size());
        run_parallel(tables.size(), jobs, [&](std::size_t i) {
            const auto & g = tables[i];
            const auto n = g.order();
            std::vector<Symbol> tau(n);
            std::iota(tau.begin(), tau.end(), Symbol{0});
            do {
                std::vector<Symbol> t(n * n);
                for (std::size_t k = 0; k < n * n; ++k)
                    t[k] = tau[g.table()[k]];
                partial[i].insert(canonical_form(Groupoid(n, std::move(t))));
            } while (std::next_permutation(tau.begin(), tau.end()));
        });
        std::set<Groupoid> all;
        for (auto & s : partial)
            all.merge(s);
        return all;
    }

} // namespace detail

/// Streams every labelled rectangular groupoid of order n (row-major lexicographic order).
template <typename Visit>
void for_each_rectangular(std::size_t n, Visit && visit, unsigned jobs = 1)
{
    if (n == 0 || n > max_labeled_count_order)
        throw CapacityError("labelled enumeration is limited to orders 1.." + std::to_string(max_labeled_count_order));
    for (const auto & g : detail::rectangular_tables(n, false, jobs))
        visit(g);
}

/// Census of rectangular groupoids of order n.
///
/// labeled: every table (n <= 3) or only the count (n = 4). isomorphism: canonical forms
/// (n <= 4). isotopy: one representative per isotopy class, the least canonical form of
/// the class (n <= 3). Tables are sorted.
inline Census enumerate_rectangular(std::size_t n, CountMode mode, const EnumerateOptions & opts = {})
{
    if (n == 0)
        throw SizeError("order must be at least 1");
    Census census;
    census.order = n;
    switch (mode) {
    case CountMode::labeled: {
        if (n > max_labeled_count_order)
            throw CapacityError("labelled census is limited to order " + std::to_string(max_labeled_count_order));
        auto tables = detail::rectangular_tables(n, false, opts.jobs);
        census.count = tables.size();
        if (n <= max_labeled_listing_order)
            census.tables = std::move(tables);
        else
            census.diagnostic = "order " + std::to_string(n) + ": count only";
        break;
    }
    case CountMode::isomorphism:
    case CountMode::isotopy: {
        const auto bound = mode == CountMode::isomorphism ? max_isomorphism_census_order : max_isotopy_census_order;
        if (n > bound)
            throw CapacityError(std::string(mode == CountMode::isomorphism ? "isomorphism" : "isotopy")
                                + " census is limited to order " + std::to_string(bound));
        auto reps = detail::rectangular_tables(n, true, opts.jobs);
        auto classes = detail::canonical_closure_under_symbol_relabelling(reps, opts.jobs);
        census.tables.assign(classes.begin(), classes.end());
        if (mode == CountMode::isotopy) {
            // Merge isomorphism classes joined by an isotopy; keep the least member.
            std::vector<Groupoid> kept;
            for (const auto & g : census.tables) {
                bool merged = false;
                for (const auto & k : kept)
                    if (are_isotopic(k, g)) {
                        merged = true;
                        break;
                    }
                if (!merged)
                    kept.push_back(g);
            }
            census.tables = std::move(kept);
        }
        census.count = census.tables.size();
        break;
    }
    }
    return census;
}

// ---------------------------------------------------------------------------
// Central groupoids: 0/1 matrices B with BB = J.

namespace detail {

    /// Row-by-row search for BB = J of order k^2, with the first k rows normalised:
    /// row 0 = {0..k-1} (0 carries a loop) and row j = {jk..jk+k-1} for 0 < j < k. Every
    /// solution is isomorphic to one of this shape since B has exactly k loops and the
    /// rows indexed by any out-neighbourhood partition the nodes.
    class CentralSearch {
    public:
        using Mask = std::uint64_t;

        explicit CentralSearch(std::size_t k) : k_(k), n_(k * k), rows_(n_, 0), cover_(n_, 0), col_count_(n_, 0)
        {
            for (std::size_t j = 0; j < k_; ++j) {
                Mask block = ((Mask{1} << k_) - 1) << (j * k_);
                assign(j, block); // always consistent
            }
            for (Mask s = (Mask{1} << k_) - 1; s < (Mask{1} << n_); s = next_subset(s))
                subsets_.push_back(s);
        }

        std::size_t order() const noexcept { return n_; }

        /// Start states for workers: every consistent choice of row k.
        std::vector<CentralSearch> split() const
        {
            std::vector<CentralSearch> out;
            if (k_ == 1) {
                out.push_back(*this);
                return out;
            }
            for (Mask s : subsets_) {
                CentralSearch copy = *this;
                if (copy.assign(k_, s)) {
                    copy.next_row_ = k_ + 1;
                    out.push_back(std::move(copy));
                }
            }
            return out;
        }

        template <typename Visit>
        void run(Visit && visit)
        {
            if (next_row_ == n_) {
                if (verify())
                    visit(rows_);
                return;
            }
            const auto i = next_row_;
            for (Mask s : subsets_) {
                auto saved_cover = cover_;
                auto saved_count = col_count_;
                auto saved_full = full_cols_;
                auto saved_loops = loops_;
                if (assign(i, s)) {
                    ++next_row_;
                    run(visit);
                    --next_row_;
                }
                rows_[i] = 0;
                cover_ = std::move(saved_cover);
                col_count_ = std::move(saved_count);
                full_cols_ = saved_full;
                loops_ = saved_loops;
            }
        }

    private:
        static Mask next_subset(Mask s)
        {
            Mask c = s & -s;
            Mask r = s + c;
            return (((r ^ s) >> 2) / c) | r;
        }

        // Sets row i to s if every constraint visible from rows 0..i still holds.
        bool assign(std::size_t i, Mask s)
        {
            if (s & full_cols_)
                return false;
            const bool loop = (s >> i) & 1U;
            if (loop && loops_ + 1 > k_)
                return false;
            // Rows of the assigned out-neighbours of i must be pairwise disjoint.
            Mask acc = 0;
            for (Mask m = s; m; m &= m - 1) {
                auto u = static_cast<std::size_t>(std::countr_zero(m));
                if (u > i)
                    continue;
                Mask ru = u == i ? s : rows_[u];
                if (acc & ru)
                    return false;
                acc |= ru;
            }
            // Earlier rows containing i gain row i in their cover.
            for (std::size_t v = 0; v < i; ++v)
                if (((rows_[v] >> i) & 1U) && (cover_[v] & s))
                    return false;
            for (std::size_t v = 0; v < i; ++v)
                if ((rows_[v] >> i) & 1U)
                    cover_[v] |= s;
            rows_[i] = s;
            cover_[i] = acc;
            loops_ += loop ? 1 : 0;
            for (Mask m = s; m; m &= m - 1) {
                auto c = static_cast<std::size_t>(std::countr_zero(m));
                if (++col_count_[c] == k_)
                    full_cols_ |= Mask{1} << c;
            }
            return true;
        }

        bool verify() const
        {
            const Mask all = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
            for (std::size_t v = 0; v < n_; ++v) {
                Mask acc = 0;
                for (Mask m = rows_[v]; m; m &= m - 1) {
                    Mask r = rows_[std::countr_zero(m)];
                    if (acc & r)
                        return false;
                    acc |= r;
                }
                if (acc != all)
                    return false;
            }
            return true;
        }

        std::size_t k_, n_;
        std::vector<Mask> rows_, cover_;
        std::vector<std::size_t> col_count_;
        std::vector<Mask> subsets_;
        Mask full_cols_ = 0;
        std::size_t loops_ = 0;
        std::size_t next_row_ = 0;

    public:
        void start_after_prefix() { next_row_ = k_; }
    };

    /// Isomorphism-invariant form of a digraph with BB = J: least relabelled row list over
    /// the relabellings that normalise it the way CentralSearch does ((k!)^k candidates).
    inline std::vector<std::uint64_t> central_matrix_form(const std::vector<std::uint64_t> & rows, std::size_t k)
    {
        using Mask = std::uint64_t;
        const auto n = rows.size();
        std::vector<Mask> best;
        std::vector<Symbol> label(n);
        auto relabelled = [&] {
            std::vector<Mask> out(n, 0);
            for (std::size_t v = 0; v < n; ++v) {
                Mask m = 0;
                for (Mask r = rows[v]; r; r &= r - 1)
                    m |= Mask{1} << label[std::countr_zero(r)];
                out[label[v]] = m;
            }
            return out;
        };
        auto members = [](Mask m) {
            std::vector<Symbol> v;
            for (; m; m &= m - 1)
                v.push_back(static_cast<Symbol>(std::countr_zero(m)));
            return v;
        };
        for (std::size_t v = 0; v < n; ++v) {
            if (!((rows[v] >> v) & 1U))
                continue;
            auto others = members(rows[v] & ~(Mask{1} << v));
            do {
                // blocks[j] = out-neighbourhood of the j-th vertex of N(v) (v first).
                std::vector<std::vector<Symbol>> blocks(k);
                label[v] = 0;
                for (std::size_t j = 1; j < k; ++j)
                    label[others[j - 1]] = static_cast<Symbol>(j);
                for (std::size_t j = 1; j < k; ++j)
                    blocks[j] = members(rows[others[j - 1]]);
                // Odometer over the orderings of blocks 1..k-1.
                auto rec = [&](auto & self, std::size_t j) -> void {
                    if (j == k) {
                        auto cand = relabelled();
                        if (best.empty() || cand < best)
                            best = std::move(cand);
                        return;
                    }
                    auto & b = blocks[j];
                    std::sort(b.begin(), b.end());
                    do {
                        for (std::size_t i = 0; i < k; ++i)
                            label[b[i]] = static_cast<Symbol>(j * k + i);
                        self(self, j + 1);
                    } while (std::next_permutation(b.begin(), b.end()));
                };
                rec(rec, 1);
            } while (std::next_permutation(others.begin(), others.end()));
        }
        return best;
    }

    inline Groupoid central_groupoid_of(const std::vector<std::uint64_t> & rows)
    {
        const auto n = rows.size();
        std::vector<Symbol> t(n * n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                std::uint64_t mid = 0;
                for (std::uint64_t m = rows[a]; m; m &= m - 1) {
                    auto c = static_cast<std::size_t>(std::countr_zero(m));
                    if ((rows[c] >> b) & 1U)
                        mid = c;
                }
                t[a * n + b] = static_cast<Symbol>(mid);
            }
        return Groupoid(n, std::move(t));
    }

} // namespace detail

inline constexpr std::size_t max_central_desk_order = 9;
inline constexpr std::size_t max_central_order = 16;

/// Central groupoids of order n up to isomorphism, from 0/1 matrices B with BB = J.
///
/// n must be a perfect square; orders above 9 need opts.long_run, above 16 are refused.
/// Tables are canonical forms (order <= 9) sorted ascending.
inline Census enumerate_central(std::size_t n, const EnumerateOptions & opts = {})
{
    Census census;
    census.order = n;
    if (n > max_central_order)
        throw CapacityError("central census is limited to order " + std::to_string(max_central_order));
    std::size_t k = 0;
    while ((k + 1) * (k + 1) <= n)
        ++k;
    if (n == 0 || k * k != n) {
        census.diagnostic = "order " + std::to_string(n) + " is not a perfect square; no central groupoids exist";
        return census;
    }
    if (n > max_central_desk_order && !opts.long_run)
        throw CapacityError("central census of order " + std::to_string(n) + " needs the long-run flag");

    detail::CentralSearch root(k);
    root.start_after_prefix();
    auto tasks = root.split();
    std::vector<std::set<std::vector<std::uint64_t>>> forms(tasks.size());
    detail::run_parallel(tasks.size(), opts.jobs, [&](std::size_t i) {
        tasks[i].run([&](const std::vector<std::uint64_t> & rows) { forms[i].insert(detail::central_matrix_form(rows, k)); });
    });
    std::set<std::vector<std::uint64_t>> all;
    for (auto & s : forms)
        all.merge(s);

    std::vector<std::vector<std::uint64_t>> reps(all.begin(), all.end());
    census.tables.resize(reps.size());
    detail::run_parallel(reps.size(), opts.jobs, [&](std::size_t i) {
        auto g = detail::central_groupoid_of(reps[i]);
        census.tables[i] = n <= default_canonical_bound ? canonical_form(g) : g;
    });
    std::sort(census.tables.begin(), census.tables.end());
    census.count = census.tables.size();
    return census;
}

// ---------------------------------------------------------------------------
// One-element blow-ups of rectangular bands

/// Number of ways to add one element e to rectangular_band(n, m) such that the table stays
/// rectangular and every product (row e, column e and e*e) lies in the band.
inline std::size_t enumerate_band_blow_ups(std::size_t n, std::size_t m)
{
    if (n == 0 || m == 0)
        throw SizeError("band sizes must be at least 1");
    const auto band_order = n * m;
    if (band_order > max_band_blow_up_order)
        throw CapacityError("band blow-up count is limited to n*m <= " + std::to_string(max_band_blow_up_order));
    const auto band = rectangular_band(n, m);
    const auto e = band_order;
    detail::PairDisjointFiller filler(band_order + 1);
    for (std::size_t x = 0; x < band_order; ++x)
        for (std::size_t y = 0; y < band_order; ++y)
            filler.place(x, y, band(x, y));
    std::vector<detail::CellSearch::Cell> cells;
    for (std::size_t x = 0; x < band_order; ++x) {
        cells.emplace_back(e, x);
        cells.emplace_back(x, e);
    }
    cells.emplace_back(e, e);
    detail::CellSearch search(std::move(filler), std::move(cells), detail::low_mask(band_order), false);
    std::size_t count = 0;
    search.run([&](const detail::PairDisjointFiller &) {
        ++count;
        return true;
    });
    return count;
}

} // namespace rectangularity
