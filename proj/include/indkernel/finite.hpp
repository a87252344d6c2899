#pragma once

// Finite sets with interned element names, total maps between them, subsets
// as bitsets, and the constructions built from them (fibers, images,
// pullbacks, composition).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "indkernel/errors.hpp"

namespace indkernel {

/// An ordered list of distinct element names. Elements are addressed by
/// their dense index in declaration order. Copies share storage.
class Carrier {
public:
    Carrier();
    explicit Carrier(std::vector<std::string> names);
    Carrier(std::initializer_list<std::string> names);

    std::size_t size() const noexcept { return data_->names.size(); }
    bool empty() const noexcept { return size() == 0; }

    const std::string& name(std::size_t index) const;
    const std::vector<std::string>& names() const noexcept { return data_->names; }

    std::optional<std::size_t> find(std::string_view name) const;
    /// Throws UnknownElement when the name is not declared.
    std::size_t index_of(std::string_view name) const;
    bool contains(std::string_view name) const { return find(name).has_value(); }

    /// Same names in the same order.
    friend bool operator==(const Carrier& lhs, const Carrier& rhs);

private:
    struct Data {
        std::vector<std::string> names;
        std::unordered_map<std::string, std::size_t> index;
    };
    std::shared_ptr<const Data> data_;
};

/// Canonical name of a constructed pair element, "(x,y)".
std::string pair_name(std::string_view first, std::string_view second);

/// A subset of a carrier stored as a bitset over its indices.
class Subset {
public:
    explicit Subset(Carrier of);
    Subset(Carrier of, std::initializer_list<std::size_t> indices);
    Subset(Carrier of, std::span<const std::size_t> indices);

    static Subset full(Carrier of);
    /// Throws UnknownElement for undeclared names.
    static Subset of_names(Carrier of, std::span<const std::string> names);
    static Subset of_names(Carrier of, std::initializer_list<std::string_view> names);

    const Carrier& carrier() const noexcept { return carrier_; }

    bool contains(std::size_t index) const noexcept;
    void insert(std::size_t index);
    void erase(std::size_t index);

    std::size_t count() const noexcept;
    bool empty() const noexcept;
    bool is_subset_of(const Subset& other) const;

    Subset& operator|=(const Subset& other);
    Subset& operator&=(const Subset& other);
    friend Subset operator|(Subset lhs, const Subset& rhs) { return lhs |= rhs; }
    friend Subset operator&(Subset lhs, const Subset& rhs) { return lhs &= rhs; }

    std::vector<std::size_t> indices() const;
    std::vector<std::string> names() const;
    /// The members as a carrier of their own, keeping names and order.
    Carrier as_carrier() const;
    /// "{a, b}" in carrier order.
    std::string to_string() const;

    std::span<const std::uint64_t> words() const noexcept { return words_; }

    friend bool operator==(const Subset& lhs, const Subset& rhs);
    /// Total order used for canonical sorting: by size, then by the sorted
    /// index sequence.
    friend std::strong_ordering operator<=>(const Subset& lhs, const Subset& rhs);

private:
    void check_same_carrier(const Subset& other) const;

    Carrier carrier_;
    std::vector<std::uint64_t> words_;
};

/// A total function between carriers, stored as one codomain index per
/// domain index.
class FinMap {
public:
    FinMap(Carrier dom, Carrier cod, std::vector<std::size_t> table);

    static FinMap identity(Carrier on);
    /// Build from (domain name, codomain name) pairs; every domain element
    /// must appear exactly once.
    static FinMap from_pairs(Carrier dom, Carrier cod,
                             std::span<const std::pair<std::string, std::string>> pairs);

    const Carrier& dom() const noexcept { return dom_; }
    const Carrier& cod() const noexcept { return cod_; }
    std::span<const std::size_t> table() const noexcept { return table_; }

    std::size_t operator()(std::size_t x) const { return table_.at(x); }

    Subset image() const;

    friend bool operator==(const FinMap& lhs, const FinMap& rhs);

private:
    Carrier dom_;
    Carrier cod_;
    std::vector<std::size_t> table_;
};

/// { b in dom(f) : f(b) = a }. Throws UnknownElement if a is not in cod(f).
Subset fiber(const FinMap& f, std::size_t a);
Subset fiber(const FinMap& f, std::string_view a);

/// The fiber as a carrier of its own (names and order inherited from dom).
Carrier fiber_carrier(const FinMap& f, std::size_t a);

bool is_surjection(const FinMap& f);

/// outer ∘ inner. Throws CodomainMismatch unless cod(inner) = dom(outer).
FinMap compose(const FinMap& outer, const FinMap& inner);

struct Pullback {
    Carrier carrier;
    FinMap first;
    FinMap second;
};

/// { (b,c) : f(b) = p(c) } with its projections, ordered lexicographically
/// in (dom f, dom p) order. Throws CodomainMismatch if cod(f) != cod(p).
Pullback pullback(const FinMap& f, const FinMap& p);

} // namespace indkernel
