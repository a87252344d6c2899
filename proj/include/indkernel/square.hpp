#pragma once

// Finite-instance checkers for covering squares, collection squares and
// surjection families, plus the constructions that produce them.
//
// All checks are classical searches over finite data. At this scale every
// covering square is a collection square and every inhabited family of
// surjections witnesses multiple choice; the checkers still perform the
// full quantifier search and report the witnesses they find.

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "indkernel/finite.hpp"

namespace indkernel {

/// A commuting square
///
///     D --q--> B
///     |        |
///     g        f
///     v        v
///     C --p--> A
class Square {
public:
    /// Throws CodomainMismatch if the carriers do not line up and
    /// NotCommuting if f∘q != p∘g.
    Square(FinMap f, FinMap p, FinMap g, FinMap q);

    const Carrier& a() const noexcept { return f_.cod(); }
    const Carrier& b() const noexcept { return f_.dom(); }
    const Carrier& c() const noexcept { return p_.dom(); }
    const Carrier& d() const noexcept { return g_.dom(); }

    const FinMap& f() const noexcept { return f_; }
    const FinMap& p() const noexcept { return p_; }
    const FinMap& g() const noexcept { return g_; }
    const FinMap& q() const noexcept { return q_; }

private:
    FinMap f_;
    FinMap p_;
    FinMap g_;
    FinMap q_;
};

/// An indexed list of surjections p_i: Y_i ->> X onto a common base.
class SurjectionFamily {
public:
    /// Throws CodomainMismatch or NotASurjection for a bad member.
    SurjectionFamily(Carrier base, std::vector<FinMap> members);

    const Carrier& base() const noexcept { return base_; }
    const std::vector<FinMap>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }

private:
    Carrier base_;
    std::vector<FinMap> members_;
};

/// One surjection E ->> target per fiber-size vector, for every |E| up to
/// `max_domain`. Domain elements are named e0, e1, ... and laid out fiber
/// by fiber in target order. Ordered by |E|, then lexicographically by the
/// fiber sizes.
std::vector<FinMap> surjections_up_to_renaming(const Carrier& target, std::size_t max_domain);

/// |f⁻¹(y)| for each y in cod(f).
std::vector<std::size_t> fiber_sizes(const FinMap& f);

struct CoveringReport {
    bool holds = false;
    /// An element of A outside the image of p.
    std::optional<std::size_t> uncovered_point;
    /// A pair (b, c) with f(b) = p(c) that no d maps to.
    std::optional<std::pair<std::size_t, std::size_t>> unmatched_pair;
};

CoveringReport covering_report(const Square& sq);
bool check_covering_square(const Square& sq);

/// For a point a and a surjection e: E ->> B_a, the chosen c over a and
/// h: D_c -> E with e∘h = q restricted to D_c.
struct CollectionWitness {
    std::size_t point;
    FinMap cover;
    std::size_t c;
    FinMap lift;
};

struct CollectionFailure {
    std::size_t point;
    FinMap cover;
};

struct CollectionReport {
    bool holds = false;
    std::size_t bound = 0;
    std::vector<CollectionWitness> witnesses;
    std::optional<CollectionFailure> failure;
};

/// Searches every a in A and every surjection onto B_a with at most
/// `bound` elements; stops at the first failure. Throws InvalidArgument if
/// bound is 0.
CollectionReport collection_report(const Square& sq, std::size_t bound);
bool check_collection_square(const Square& sq, std::size_t bound);

/// max_a |B_a| + 2.
std::size_t default_square_bound(const Square& sq);

/// The square with C = A, p = id and D = {(c, t, x) : t in T_c, x in dom t},
/// g(c,t,x) = c, q(c,t,x) = t(x). `families[a]` lists surjections onto the
/// fiber carrier of f over a.
///
/// Throws EmptyFamily, NotASurjection or CodomainMismatch.
Square build_amc_square(const FinMap& f, const std::vector<std::vector<FinMap>>& families);

/// The pointwise-least map r: dom(p) -> dom(q) with q∘r = p, or nullopt if
/// image(p) is not contained in image(q). Throws CodomainMismatch.
std::optional<FinMap> refines(const FinMap& p, const FinMap& q);

struct AmcWitness {
    FinMap cover;
    std::size_t index;
    FinMap lift;
};

struct AmcFamilyReport {
    bool holds = false;
    std::size_t bound = 0;
    std::vector<AmcWitness> witnesses;
    std::optional<FinMap> failure;
};

/// For every surjection p: Y ->> base with |Y| <= bound, look for i and
/// f: Y_i -> Y with p∘f = p_i. Throws InvalidArgument if bound < |base|.
AmcFamilyReport amc_family_report(const SurjectionFamily& fam, std::size_t bound);
bool is_amc_witness_family(const SurjectionFamily& fam, std::size_t bound);

struct CollectionFamilyWitness {
    std::size_t index;
    FinMap cover;
    std::size_t refining_index;
    FinMap refining_map;
    FinMap lift;
};

struct CollectionFamilyFailure {
    std::size_t index;
    FinMap cover;
};

struct CollectionFamilyReport {
    bool holds = false;
    std::size_t bound = 0;
    std::vector<CollectionFamilyWitness> witnesses;
    std::optional<CollectionFamilyFailure> failure;
};

/// For each i and each surjection p: E ->> Y_i with |E| <= bound, look for
/// i', a surjection q: Y_i' ->> Y_i and f: Y_i' -> E with p∘f = q.
CollectionFamilyReport collection_family_report(std::span<const Carrier> family, std::size_t bound);
bool is_collection_family(std::span<const Carrier> family, std::size_t bound);

struct StrongFactor {
    std::size_t index;
    FinMap map;
};

/// Given f: Z ->> X, returns j and g: Y_j -> Z with f∘g = p_j. Pulls p_0
/// back along f and refines the resulting cover of Y_0 by some member over X.
///
/// Throws NotASurjection, CodomainMismatch, or NoFactorization when no
/// member refines the pulled-back cover.
StrongFactor strong_amc_factor(const SurjectionFamily& fam, const FinMap& f);

} // namespace indkernel
