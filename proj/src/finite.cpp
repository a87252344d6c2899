#include "indkernel/finite.hpp"

#include <algorithm>
#include <bit>

namespace indkernel {

// Carrier ---------------------------------------------------------------

Carrier::Carrier() : data_(std::make_shared<const Data>()) {}

Carrier::Carrier(std::vector<std::string> names) {
    auto data = std::make_shared<Data>();
    data->index.reserve(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
        auto [it, inserted] = data->index.emplace(names[i], i);
        if (!inserted) {
            throw DuplicateName("duplicate element name '" + names[i] + "'");
        }
    }
    data->names = std::move(names);
    data_ = std::move(data);
}

Carrier::Carrier(std::initializer_list<std::string> names)
    : Carrier(std::vector<std::string>(names)) {}

const std::string& Carrier::name(std::size_t index) const {
    if (index >= size()) {
        throw UnknownElement("element index " + std::to_string(index) + " out of range");
    }
    return data_->names[index];
}

std::optional<std::size_t> Carrier::find(std::string_view name) const {
    auto it = data_->index.find(std::string(name));
    if (it == data_->index.end()) return std::nullopt;
    return it->second;
}

std::size_t Carrier::index_of(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw UnknownElement("unknown element '" + std::string(name) + "'");
}

bool operator==(const Carrier& lhs, const Carrier& rhs) {
    return lhs.data_ == rhs.data_ || lhs.data_->names == rhs.data_->names;
}

std::string pair_name(std::string_view first, std::string_view second) {
    std::string out;
    out.reserve(first.size() + second.size() + 3);
    out += '(';
    out += first;
    out += ',';
    out += second;
    out += ')';
    return out;
}

// Subset ----------------------------------------------------------------

namespace {
std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }
} // namespace

Subset::Subset(Carrier of) : carrier_(std::move(of)), words_(word_count(carrier_.size()), 0) {}

Subset::Subset(Carrier of, std::initializer_list<std::size_t> indices)
    : Subset(std::move(of), std::span<const std::size_t>(indices.begin(), indices.size())) {}

Subset::Subset(Carrier of, std::span<const std::size_t> indices) : Subset(std::move(of)) {
    for (auto i : indices) insert(i);
}

Subset Subset::full(Carrier of) {
    Subset s(std::move(of));
    for (std::size_t i = 0; i < s.carrier_.size(); ++i) s.insert(i);
    return s;
}

Subset Subset::of_names(Carrier of, std::span<const std::string> names) {
    Subset s(std::move(of));
    for (const auto& n : names) s.insert(s.carrier_.index_of(n));
    return s;
}

Subset Subset::of_names(Carrier of, std::initializer_list<std::string_view> names) {
    Subset s(std::move(of));
    for (auto n : names) s.insert(s.carrier_.index_of(n));
    return s;
}

bool Subset::contains(std::size_t index) const noexcept {
    return index < carrier_.size() && (words_[index / 64] >> (index % 64)) & 1U;
}

void Subset::insert(std::size_t index) {
    if (index >= carrier_.size()) {
        throw UnknownElement("element index " + std::to_string(index) + " out of range");
    }
    words_[index / 64] |= std::uint64_t{1} << (index % 64);
}

void Subset::erase(std::size_t index) {
    if (index < carrier_.size()) words_[index / 64] &= ~(std::uint64_t{1} << (index % 64));
}

std::size_t Subset::count() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool Subset::empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

void Subset::check_same_carrier(const Subset& other) const {
    if (!(carrier_ == other.carrier_)) {
        throw CodomainMismatch("subsets of different carriers");
    }
}

bool Subset::is_subset_of(const Subset& other) const {
    check_same_carrier(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
}

Subset& Subset::operator|=(const Subset& other) {
    check_same_carrier(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

Subset& Subset::operator&=(const Subset& other) {
    check_same_carrier(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

std::vector<std::size_t> Subset::indices() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        auto bits = words_[w];
        while (bits) {
            out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

std::vector<std::string> Subset::names() const {
    std::vector<std::string> out;
    for (auto i : indices()) out.push_back(carrier_.name(i));
    return out;
}

Carrier Subset::as_carrier() const { return Carrier(names()); }

std::string Subset::to_string() const {
    std::string out = "{";
    bool first = true;
    for (auto i : indices()) {
        if (!first) out += ", ";
        out += carrier_.name(i);
        first = false;
    }
    out += "}";
    return out;
}

bool operator==(const Subset& lhs, const Subset& rhs) {
    return lhs.words_ == rhs.words_ && lhs.carrier_ == rhs.carrier_;
}

std::strong_ordering operator<=>(const Subset& lhs, const Subset& rhs) {
    lhs.check_same_carrier(rhs);
    if (auto c = lhs.count() <=> rhs.count(); c != 0) return c;
    auto a = lhs.indices();
    auto b = rhs.indices();
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

// FinMap ----------------------------------------------------------------

FinMap::FinMap(Carrier dom, Carrier cod, std::vector<std::size_t> table)
    : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
    if (table_.size() != dom_.size()) {
        throw InvalidArgument("map table has " + std::to_string(table_.size()) +
                              " entries for a domain of size " + std::to_string(dom_.size()));
    }
    for (std::size_t x = 0; x < table_.size(); ++x) {
        if (table_[x] >= cod_.size()) {
            throw UnknownElement("map sends '" + dom_.name(x) + "' outside its codomain");
        }
    }
}

FinMap FinMap::identity(Carrier on) {
    std::vector<std::size_t> table(on.size());
    for (std::size_t i = 0; i < table.size(); ++i) table[i] = i;
    return FinMap(on, on, std::move(table));
}

FinMap FinMap::from_pairs(Carrier dom, Carrier cod,
                          std::span<const std::pair<std::string, std::string>> pairs) {
    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> table(dom.size(), unset);
    for (const auto& [x, y] : pairs) {
        auto i = dom.index_of(x);
        if (table[i] != unset) throw DuplicateName("map assigns '" + x + "' twice");
        table[i] = cod.index_of(y);
    }
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (table[i] == unset) throw InvalidArgument("map is undefined on '" + dom.name(i) + "'");
    }
    return FinMap(std::move(dom), std::move(cod), std::move(table));
}

Subset FinMap::image() const {
    Subset s(cod_);
    for (auto y : table_) s.insert(y);
    return s;
}

bool operator==(const FinMap& lhs, const FinMap& rhs) {
    return lhs.table_ == rhs.table_ && lhs.dom_ == rhs.dom_ && lhs.cod_ == rhs.cod_;
}

Subset fiber(const FinMap& f, std::size_t a) {
    if (a >= f.cod().size()) {
        throw UnknownElement("element index " + std::to_string(a) + " is not in the codomain");
    }
    Subset s(f.dom());
    auto table = f.table();
    for (std::size_t b = 0; b < table.size(); ++b) {
        if (table[b] == a) s.insert(b);
    }
    return s;
}

Subset fiber(const FinMap& f, std::string_view a) { return fiber(f, f.cod().index_of(a)); }

Carrier fiber_carrier(const FinMap& f, std::size_t a) { return fiber(f, a).as_carrier(); }

bool is_surjection(const FinMap& f) { return f.image().count() == f.cod().size(); }

FinMap compose(const FinMap& outer, const FinMap& inner) {
    if (!(inner.cod() == outer.dom())) {
        throw CodomainMismatch("cannot compose: codomain of the inner map is not the domain of the outer map");
    }
    std::vector<std::size_t> table;
    table.reserve(inner.dom().size());
    for (auto y : inner.table()) table.push_back(outer(y));
    return FinMap(inner.dom(), outer.cod(), std::move(table));
}

Pullback pullback(const FinMap& f, const FinMap& p) {
    if (!(f.cod() == p.cod())) throw CodomainMismatch("pullback of maps with different codomains");
    std::vector<std::string> names;
    std::vector<std::size_t> first;
    std::vector<std::size_t> second;
    for (std::size_t b = 0; b < f.dom().size(); ++b) {
        for (std::size_t c = 0; c < p.dom().size(); ++c) {
            if (f(b) != p(c)) continue;
            names.push_back(pair_name(f.dom().name(b), p.dom().name(c)));
            first.push_back(b);
            second.push_back(c);
        }
    }
    Carrier carrier(std::move(names));
    return Pullback{carrier, FinMap(carrier, f.dom(), std::move(first)),
                    FinMap(carrier, p.dom(), std::move(second))};
}

} // namespace indkernel
