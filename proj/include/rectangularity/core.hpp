#pragma once

#include "bool_matrix.hpp"
#include "error.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rectangularity {

/// Element of a carrier 0..n-1. Rows, columns, symbols and graph nodes all use it.
using Symbol = std::uint32_t;

namespace detail {
    inline std::string cell_str(std::size_t r, std::size_t c)
    {
        return "(" + std::to_string(r) + "," + std::to_string(c) + ")";
    }
} // namespace detail

/// Finite groupoid given by its Cayley table; entry (a, b) is a * b.
class Groupoid {
public:
    Groupoid() = default;

    /// Validating constructor; `table` is row-major and must hold order^2 entries in 0..order-1.
    Groupoid(std::size_t order, std::vector<Symbol> table) : order_(order), table_(std::move(table))
    {
        if (order_ == 0)
            throw SizeError("groupoid order must be at least 1");
        if (table_.size() != order_ * order_)
            throw SizeError("groupoid of order " + std::to_string(order_) + " needs " + std::to_string(order_ * order_)
                            + " entries, got " + std::to_string(table_.size()));
        for (std::size_t i = 0; i < table_.size(); ++i)
            if (table_[i] >= order_)
                throw ValidationError("entry " + std::to_string(table_[i]) + " out of range at "
                                      + detail::cell_str(i / order_, i % order_));
    }

    static Groupoid from_rows(std::initializer_list<std::initializer_list<Symbol>> rows)
    {
        std::vector<Symbol> flat;
        std::size_t r = 0;
        for (const auto & row : rows) {
            if (row.size() != rows.size())
                throw SizeError("row " + std::to_string(r) + " has " + std::to_string(row.size()) + " entries, expected "
                                + std::to_string(rows.size()));
            flat.insert(flat.end(), row.begin(), row.end());
            ++r;
        }
        return Groupoid(rows.size(), std::move(flat));
    }

    std::size_t order() const noexcept { return order_; }

    Symbol operator()(std::size_t a, std::size_t b) const noexcept { return table_[a * order_ + b]; }

    std::span<const Symbol> table() const noexcept { return table_; }
    std::span<const Symbol> row(std::size_t a) const noexcept { return {table_.data() + a * order_, order_}; }

    friend bool operator==(const Groupoid &, const Groupoid &) = default;
    friend auto operator<=>(const Groupoid & x, const Groupoid & y)
    {
        if (auto c = x.order_ <=> y.order_; c != 0)
            return c;
        return std::lexicographical_compare_three_way(x.table_.begin(), x.table_.end(), y.table_.begin(), y.table_.end());
    }

private:
    std::size_t order_ = 0;
    std::vector<Symbol> table_;
};

/// Builds a groupoid from signed input (e.g. parsed text), reporting range errors with coordinates.
inline Groupoid make_groupoid(std::size_t order, std::span<const long long> entries)
{
    if (order == 0)
        throw SizeError("groupoid order must be at least 1");
    if (entries.size() != order * order)
        throw SizeError("groupoid of order " + std::to_string(order) + " needs " + std::to_string(order * order)
                        + " entries, got " + std::to_string(entries.size()));
    std::vector<Symbol> table(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        auto e = entries[i];
        if (e < 0 || static_cast<unsigned long long>(e) >= order)
            throw ValidationError("entry " + std::to_string(e) + " out of range at "
                                  + detail::cell_str(i / order, i % order));
        table[i] = static_cast<Symbol>(e);
    }
    return Groupoid(order, std::move(table));
}

/// The opposite groupoid: a +' b = b * a.
inline Groupoid opposite(const Groupoid & g)
{
    const auto n = g.order();
    std::vector<Symbol> t(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            t[a * n + b] = g(b, a);
    return Groupoid(n, std::move(t));
}

/// Two edge relations on the nodes 0..n-1.
struct GraphPair {
    BoolMatrix red;
    BoolMatrix green;

    GraphPair() = default;
    GraphPair(BoolMatrix r, BoolMatrix g) : red(std::move(r)), green(std::move(g))
    {
        if (red.order() != green.order())
            throw SizeError("red and green relations have different orders");
    }

    using Edge = std::pair<Symbol, Symbol>;

    static GraphPair from_edges(std::size_t order, std::span<const Edge> red_edges, std::span<const Edge> green_edges)
    {
        BoolMatrix r(order), g(order);
        auto add = [order](BoolMatrix & m, const Edge & e) {
            if (e.first >= order || e.second >= order)
                throw ValidationError("edge " + detail::cell_str(e.first, e.second) + " has an endpoint outside 0.."
                                      + std::to_string(order - 1));
            m.set(e.first, e.second);
        };
        for (const auto & e : red_edges)
            add(r, e);
        for (const auto & e : green_edges)
            add(g, e);
        return GraphPair(std::move(r), std::move(g));
    }

    std::size_t order() const noexcept { return red.order(); }

    friend bool operator==(const GraphPair &, const GraphPair &) = default;
};

/// Dual pair: red' is the reversed green relation, green' the reversed red one.
inline GraphPair dual_graph_pair(const GraphPair & gp)
{
    return GraphPair(transpose(gp.green), transpose(gp.red));
}

/// n x n array whose cells are either empty or hold a symbol in 0..n-1.
class PartialArray {
public:
    using Cell = std::optional<Symbol>;

    PartialArray() = default;

    explicit PartialArray(std::size_t order) : order_(order), cells_(order * order) {}

    PartialArray(std::size_t order, std::vector<Cell> cells) : order_(order), cells_(std::move(cells))
    {
        if (cells_.size() != order_ * order_)
            throw SizeError("partial array of order " + std::to_string(order_) + " needs " + std::to_string(order_ * order_)
                            + " cells, got " + std::to_string(cells_.size()));
        for (std::size_t i = 0; i < cells_.size(); ++i)
            if (cells_[i] && *cells_[i] >= order_)
                throw ValidationError("entry " + std::to_string(*cells_[i]) + " out of range at "
                                      + detail::cell_str(i / order_, i % order_));
    }

    static PartialArray from_groupoid(const Groupoid & g)
    {
        std::vector<Cell> cells(g.table().begin(), g.table().end());
        return PartialArray(g.order(), std::move(cells));
    }

    std::size_t order() const noexcept { return order_; }
    const Cell & operator()(std::size_t r, std::size_t c) const noexcept { return cells_[r * order_ + c]; }
    std::span<const Cell> cells() const noexcept { return cells_; }

    friend bool operator==(const PartialArray &, const PartialArray &) = default;

private:
    std::size_t order_ = 0;
    std::vector<Cell> cells_;
};

/// Bijection of 0..n-1.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<Symbol> images) : images_(std::move(images))
    {
        std::vector<bool> seen(images_.size(), false);
        for (std::size_t i = 0; i < images_.size(); ++i) {
            auto x = images_[i];
            if (x >= images_.size() || seen[x])
                throw ValidationError("image " + std::to_string(x) + " at position " + std::to_string(i)
                                      + " breaks the bijection on 0.." + std::to_string(images_.size() - 1));
            seen[x] = true;
        }
    }

    static Permutation identity(std::size_t n)
    {
        std::vector<Symbol> v(n);
        std::iota(v.begin(), v.end(), Symbol{0});
        return Permutation(std::move(v));
    }

    std::size_t order() const noexcept { return images_.size(); }
    Symbol operator()(std::size_t i) const noexcept { return images_[i]; }
    std::span<const Symbol> images() const noexcept { return images_; }

    Permutation inverse() const
    {
        std::vector<Symbol> inv(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i)
            inv[images_[i]] = static_cast<Symbol>(i);
        return Permutation(std::move(inv));
    }

    /// (*this after other)(i) = (*this)(other(i)).
    Permutation after(const Permutation & other) const
    {
        if (other.order() != order())
            throw SizeError("composing permutations of different orders");
        std::vector<Symbol> v(order());
        for (std::size_t i = 0; i < order(); ++i)
            v[i] = images_[other(i)];
        return Permutation(std::move(v));
    }

    bool is_identity() const noexcept
    {
        for (std::size_t i = 0; i < images_.size(); ++i)
            if (images_[i] != i)
                return false;
        return true;
    }

    friend bool operator==(const Permutation &, const Permutation &) = default;

private:
    std::vector<Symbol> images_;
};

/// Row map alpha, column map beta, symbol map gamma; see apply_isotopy for the orientation.
struct IsotopyTriple {
    Permutation alpha;
    Permutation beta;
    Permutation gamma;

    IsotopyTriple() = default;
    IsotopyTriple(Permutation a, Permutation b, Permutation c)
        : alpha(std::move(a)), beta(std::move(b)), gamma(std::move(c))
    {
        if (alpha.order() != beta.order() || beta.order() != gamma.order())
            throw SizeError("isotopy triple components have different orders");
    }

    static IsotopyTriple identity(std::size_t n)
    {
        return {Permutation::identity(n), Permutation::identity(n), Permutation::identity(n)};
    }

    std::size_t order() const noexcept { return alpha.order(); }

    friend bool operator==(const IsotopyTriple &, const IsotopyTriple &) = default;
};

/// Partition of 0..n-1. Blocks are stored sorted and ordered by least element.
class Partition {
public:
    Partition() = default;

    Partition(std::size_t order, std::vector<std::vector<Symbol>> blocks) : order_(order), blocks_(std::move(blocks))
    {
        block_of_.assign(order_, static_cast<std::size_t>(-1));
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            if (blocks_[b].empty())
                throw ValidationError("partition block " + std::to_string(b) + " is empty");
            for (auto x : blocks_[b]) {
                if (x >= order_)
                    throw ValidationError("partition element " + std::to_string(x) + " outside 0.."
                                          + std::to_string(order_ - 1));
                if (block_of_[x] != static_cast<std::size_t>(-1))
                    throw ValidationError("partition element " + std::to_string(x) + " lies in two blocks");
                block_of_[x] = b;
            }
        }
        for (std::size_t x = 0; x < order_; ++x)
            if (block_of_[x] == static_cast<std::size_t>(-1))
                throw ValidationError("partition does not cover element " + std::to_string(x));
        for (auto & b : blocks_)
            std::sort(b.begin(), b.end());
        std::sort(blocks_.begin(), blocks_.end(), [](const auto & x, const auto & y) { return x.front() < y.front(); });
        for (std::size_t b = 0; b < blocks_.size(); ++b)
            for (auto x : blocks_[b])
                block_of_[x] = b;
    }

    /// Partition from a block label per element; labels need not be contiguous.
    static Partition from_labels(std::span<const std::size_t> labels)
    {
        std::vector<std::vector<Symbol>> blocks;
        std::vector<std::pair<std::size_t, std::size_t>> seen; // label -> block index
        for (std::size_t x = 0; x < labels.size(); ++x) {
            auto it = std::find_if(seen.begin(), seen.end(), [&](const auto & p) { return p.first == labels[x]; });
            if (it == seen.end()) {
                seen.emplace_back(labels[x], blocks.size());
                blocks.push_back({static_cast<Symbol>(x)});
            }
            else
                blocks[it->second].push_back(static_cast<Symbol>(x));
        }
        return Partition(labels.size(), std::move(blocks));
    }

    static Partition discrete(std::size_t n)
    {
        std::vector<std::vector<Symbol>> blocks(n);
        for (std::size_t i = 0; i < n; ++i)
            blocks[i] = {static_cast<Symbol>(i)};
        return Partition(n, std::move(blocks));
    }

    static Partition single_block(std::size_t n)
    {
        std::vector<Symbol> all(n);
        std::iota(all.begin(), all.end(), Symbol{0});
        return Partition(n, {std::move(all)});
    }

    std::size_t order() const noexcept { return order_; }
    std::size_t size() const noexcept { return blocks_.size(); }
    const std::vector<Symbol> & block(std::size_t b) const noexcept { return blocks_[b]; }
    const std::vector<std::vector<Symbol>> & blocks() const noexcept { return blocks_; }
    std::size_t block_of(std::size_t x) const noexcept { return block_of_[x]; }

    /// True iff `set` meets every block exactly once.
    bool has_transversal(std::span<const Symbol> set) const
    {
        if (set.size() != blocks_.size())
            return false;
        std::vector<bool> hit(blocks_.size(), false);
        for (auto x : set) {
            if (x >= order_ || hit[block_of_[x]])
                return false;
            hit[block_of_[x]] = true;
        }
        return true;
    }

    friend bool operator==(const Partition & x, const Partition & y)
    {
        return x.order_ == y.order_ && x.blocks_ == y.blocks_;
    }

private:
    std::size_t order_ = 0;
    std::vector<std::vector<Symbol>> blocks_;
    std::vector<std::size_t> block_of_;
};

/// A base partition together with one companion partition per base block, each base
/// block being a transversal of its companion.
class PartitionSystem {
public:
    PartitionSystem(Partition base, std::vector<Partition> companions)
        : base_(std::move(base)), companions_(std::move(companions))
    {
        if (companions_.size() != base_.size())
            throw SizeError("partition system needs one companion per base block: " + std::to_string(base_.size())
                            + " blocks, " + std::to_string(companions_.size()) + " companions");
        for (std::size_t b = 0; b < base_.size(); ++b) {
            if (companions_[b].order() != base_.order())
                throw SizeError("companion " + std::to_string(b) + " has a different order than the base");
            if (!companions_[b].has_transversal(base_.block(b)))
                throw ValidationError("base block " + std::to_string(b) + " is not a transversal of companion "
                                      + std::to_string(b));
        }
    }

    std::size_t order() const noexcept { return base_.order(); }
    const Partition & base() const noexcept { return base_; }
    const Partition & companion(std::size_t block) const noexcept { return companions_[block]; }

    friend bool operator==(const PartitionSystem &, const PartitionSystem &) = default;

private:
    Partition base_;
    std::vector<Partition> companions_;
};

/// Finite group given by a Cayley table.
class FiniteGroup {
public:
    explicit FiniteGroup(Groupoid table) : table_(std::move(table))
    {
        const auto n = table_.order();
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    if (table_(table_(a, b), c) != table_(a, table_(b, c)))
                        throw ValidationError("group table is not associative at (" + std::to_string(a) + ","
                                              + std::to_string(b) + "," + std::to_string(c) + ")");
        std::optional<Symbol> e;
        for (std::size_t x = 0; x < n && !e; ++x) {
            bool ok = true;
            for (std::size_t y = 0; y < n && ok; ++y)
                ok = table_(x, y) == y && table_(y, x) == y;
            if (ok)
                e = static_cast<Symbol>(x);
        }
        if (!e)
            throw ValidationError("group table has no identity element");
        identity_ = *e;
        inverse_.resize(n);
        for (std::size_t x = 0; x < n; ++x) {
            auto row = table_.row(x);
            auto it = std::find(row.begin(), row.end(), identity_);
            if (it == row.end() || table_(static_cast<std::size_t>(it - row.begin()), x) != identity_)
                throw ValidationError("element " + std::to_string(x) + " has no inverse");
            inverse_[x] = static_cast<Symbol>(it - row.begin());
        }
    }

    static FiniteGroup cyclic(std::size_t n)
    {
        std::vector<Symbol> t(n * n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                t[a * n + b] = static_cast<Symbol>((a + b) % n);
        return FiniteGroup(Groupoid(n, std::move(t)));
    }

    /// Z_{m1} x Z_{m2} x ..., elements flattened row-major with the first factor major.
    static FiniteGroup cyclic_product(std::span<const std::size_t> moduli)
    {
        std::size_t n = 1;
        for (auto m : moduli)
            n *= m;
        auto digits = [&](std::size_t x) {
            std::vector<std::size_t> d(moduli.size());
            for (std::size_t i = moduli.size(); i-- > 0;) {
                d[i] = x % moduli[i];
                x /= moduli[i];
            }
            return d;
        };
        std::vector<Symbol> t(n * n);
        for (std::size_t a = 0; a < n; ++a) {
            auto da = digits(a);
            for (std::size_t b = 0; b < n; ++b) {
                auto db = digits(b);
                std::size_t v = 0;
                for (std::size_t i = 0; i < moduli.size(); ++i)
                    v = v * moduli[i] + (da[i] + db[i]) % moduli[i];
                t[a * n + b] = static_cast<Symbol>(v);
            }
        }
        return FiniteGroup(Groupoid(n, std::move(t)));
    }

    /// Symmetric group on k points; elements are the permutations in lexicographic order,
    /// product x*y = x after y.
    static FiniteGroup symmetric(std::size_t k)
    {
        std::vector<std::vector<Symbol>> perms;
        std::vector<Symbol> p(k);
        std::iota(p.begin(), p.end(), Symbol{0});
        do
            perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        const auto n = perms.size();
        std::vector<Symbol> t(n * n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                std::vector<Symbol> c(k);
                for (std::size_t i = 0; i < k; ++i)
                    c[i] = perms[a][perms[b][i]];
                t[a * n + b] = static_cast<Symbol>(std::lower_bound(perms.begin(), perms.end(), c) - perms.begin());
            }
        return FiniteGroup(Groupoid(n, std::move(t)));
    }

    std::size_t order() const noexcept { return table_.order(); }
    Symbol operator()(std::size_t a, std::size_t b) const noexcept { return table_(a, b); }
    Symbol identity() const noexcept { return identity_; }
    Symbol inverse(std::size_t x) const noexcept { return inverse_[x]; }
    const Groupoid & table() const noexcept { return table_; }

private:
    Groupoid table_;
    Symbol identity_ = 0;
    std::vector<Symbol> inverse_;
};

/// n cells, one per row and one per column.
class Transversal {
public:
    using Cell = std::pair<Symbol, Symbol>;

    explicit Transversal(std::vector<Cell> cells) : cells_(std::move(cells))
    {
        const auto n = cells_.size();
        std::vector<bool> rows(n, false), cols(n, false);
        for (auto [r, c] : cells_) {
            if (r >= n || c >= n || rows[r] || cols[c])
                throw ValidationError("transversal cells do not hit every row and column once");
            rows[r] = cols[c] = true;
        }
    }

    std::size_t order() const noexcept { return cells_.size(); }
    const std::vector<Cell> & cells() const noexcept { return cells_; }

    friend bool operator==(const Transversal &, const Transversal &) = default;

private:
    std::vector<Cell> cells_;
};

/// Total map from 0..d-1 into 0..codomain-1; need not be injective.
class Mapping {
public:
    Mapping(std::size_t codomain, std::vector<Symbol> images) : codomain_(codomain), images_(std::move(images))
    {
        for (std::size_t i = 0; i < images_.size(); ++i)
            if (images_[i] >= codomain_)
                throw ValidationError("mapping image " + std::to_string(images_[i]) + " of " + std::to_string(i)
                                      + " outside codomain of size " + std::to_string(codomain_));
    }

    std::size_t domain_size() const noexcept { return images_.size(); }
    std::size_t codomain_size() const noexcept { return codomain_; }
    Symbol operator()(std::size_t x) const noexcept { return images_[x]; }
    std::span<const Symbol> images() const noexcept { return images_; }

private:
    std::size_t codomain_;
    std::vector<Symbol> images_;
};

} // namespace rectangularity
