#include "indkernel/square.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace indkernel {

namespace {

void require_same(const Carrier& lhs, const Carrier& rhs, const char* what) {
    if (!(lhs == rhs)) throw CodomainMismatch(what);
}

// Position of each codomain element of f inside the carrier of fiber(f, a).
std::vector<std::size_t> fiber_positions(const FinMap& f, std::size_t a) {
    std::vector<std::size_t> pos(f.dom().size(), static_cast<std::size_t>(-1));
    std::size_t k = 0;
    for (std::size_t b = 0; b < f.dom().size(); ++b) {
        if (f(b) == a) pos[b] = k++;
    }
    return pos;
}

// Least x with e(x) = y, per y; empty entries where the fiber is empty.
std::vector<std::optional<std::size_t>> least_preimages(const FinMap& e) {
    std::vector<std::optional<std::size_t>> out(e.cod().size());
    for (std::size_t x = 0; x < e.dom().size(); ++x) {
        if (!out[e(x)]) out[e(x)] = x;
    }
    return out;
}

} // namespace

Square::Square(FinMap f, FinMap p, FinMap g, FinMap q)
    : f_(std::move(f)), p_(std::move(p)), g_(std::move(g)), q_(std::move(q)) {
    require_same(f_.cod(), p_.cod(), "square: f and p must share their codomain A");
    require_same(g_.cod(), p_.dom(), "square: g must land in the domain C of p");
    require_same(q_.cod(), f_.dom(), "square: q must land in the domain B of f");
    require_same(g_.dom(), q_.dom(), "square: g and q must share their domain D");
    for (std::size_t x = 0; x < d().size(); ++x) {
        if (f_(q_(x)) != p_(g_(x))) {
            throw NotCommuting("square does not commute at '" + d().name(x) + "'");
        }
    }
}

SurjectionFamily::SurjectionFamily(Carrier base, std::vector<FinMap> members)
    : base_(std::move(base)), members_(std::move(members)) {
    for (std::size_t i = 0; i < members_.size(); ++i) {
        require_same(members_[i].cod(), base_, "family member does not map onto the base");
        if (!is_surjection(members_[i])) {
            throw NotASurjection("family member " + std::to_string(i) + " is not a surjection");
        }
    }
}

std::vector<FinMap> surjections_up_to_renaming(const Carrier& target, std::size_t max_domain) {
    std::vector<FinMap> out;
    const auto t = target.size();
    if (t == 0) {
        out.emplace_back(Carrier(), target, std::vector<std::size_t>{});
        return out;
    }

    std::vector<std::size_t> sizes(t);
    auto emit = [&](std::size_t m) {
        std::vector<std::string> names;
        std::vector<std::size_t> table;
        names.reserve(m);
        table.reserve(m);
        for (std::size_t y = 0; y < t; ++y) {
            for (std::size_t k = 0; k < sizes[y]; ++k) {
                names.push_back("e" + std::to_string(names.size()));
                table.push_back(y);
            }
        }
        out.emplace_back(Carrier(std::move(names)), target, std::move(table));
    };
    // Compositions of m into t positive parts, lexicographic.
    std::function<void(std::size_t, std::size_t, std::size_t)> place = [&](std::size_t y, std::size_t left,
                                                                           std::size_t m) {
        if (y + 1 == t) {
            sizes[y] = left;
            emit(m);
            return;
        }
        const auto slots_after = t - y - 1;
        for (std::size_t k = 1; k + slots_after <= left; ++k) {
            sizes[y] = k;
            place(y + 1, left - k, m);
        }
    };
    for (std::size_t m = t; m <= max_domain; ++m) place(0, m, m);
    return out;
}

std::vector<std::size_t> fiber_sizes(const FinMap& f) {
    std::vector<std::size_t> sizes(f.cod().size(), 0);
    for (auto y : f.table()) ++sizes[y];
    return sizes;
}

// Covering --------------------------------------------------------------

CoveringReport covering_report(const Square& sq) {
    CoveringReport report;
    auto image = sq.p().image();
    for (std::size_t a = 0; a < sq.a().size(); ++a) {
        if (!image.contains(a)) {
            report.uncovered_point = a;
            return report;
        }
    }
    std::vector<bool> hit(sq.b().size() * sq.c().size(), false);
    for (std::size_t x = 0; x < sq.d().size(); ++x) hit[sq.q()(x) * sq.c().size() + sq.g()(x)] = true;
    for (std::size_t b = 0; b < sq.b().size(); ++b) {
        for (std::size_t c = 0; c < sq.c().size(); ++c) {
            if (sq.f()(b) == sq.p()(c) && !hit[b * sq.c().size() + c]) {
                report.unmatched_pair = std::pair{b, c};
                return report;
            }
        }
    }
    report.holds = true;
    return report;
}

bool check_covering_square(const Square& sq) { return covering_report(sq).holds; }

// Collection ------------------------------------------------------------

CollectionReport collection_report(const Square& sq, std::size_t bound) {
    if (bound == 0) throw InvalidArgument("collection bound must be at least 1");
    CollectionReport report;
    report.bound = bound;

    for (std::size_t a = 0; a < sq.a().size(); ++a) {
        auto fiber_b = fiber_carrier(sq.f(), a);
        auto pos = fiber_positions(sq.f(), a);
        auto over_a = fiber(sq.p(), a).indices();

        for (auto& e : surjections_up_to_renaming(fiber_b, bound)) {
            auto preimage = least_preimages(e);
            std::optional<CollectionWitness> found;
            for (auto c : over_a) {
                auto d_c = fiber(sq.g(), c);
                std::vector<std::size_t> h;
                bool ok = true;
                for (auto x : d_c.indices()) {
                    // q(x) lies over a because the square commutes.
                    const auto& lifted = preimage[pos[sq.q()(x)]];
                    if (!lifted) {
                        ok = false;
                        break;
                    }
                    h.push_back(*lifted);
                }
                if (ok) {
                    found = CollectionWitness{a, e, c, FinMap(d_c.as_carrier(), e.dom(), std::move(h))};
                    break;
                }
            }
            if (!found) {
                report.failure = CollectionFailure{a, std::move(e)};
                return report;
            }
            report.witnesses.push_back(std::move(*found));
        }
    }
    report.holds = true;
    return report;
}

bool check_collection_square(const Square& sq, std::size_t bound) { return collection_report(sq, bound).holds; }

std::size_t default_square_bound(const Square& sq) {
    auto sizes = fiber_sizes(sq.f());
    std::size_t widest = sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
    return widest + 2;
}

Square build_amc_square(const FinMap& f, const std::vector<std::vector<FinMap>>& families) {
    const auto& a_set = f.cod();
    if (families.size() != a_set.size()) {
        throw InvalidArgument("expected one family per element of A (" + std::to_string(a_set.size()) +
                              "), got " + std::to_string(families.size()));
    }

    std::vector<std::string> d_names;
    std::vector<std::size_t> g_table;
    std::vector<std::size_t> q_table;
    for (std::size_t a = 0; a < a_set.size(); ++a) {
        const auto& family = families[a];
        if (family.empty()) throw EmptyFamily("no surjections given over '" + a_set.name(a) + "'");
        auto fiber_b = fiber(f, a);
        auto fiber_elems = fiber_b.indices();
        auto fiber_names = fiber_b.as_carrier();
        for (std::size_t ti = 0; ti < family.size(); ++ti) {
            const auto& t = family[ti];
            if (!(t.cod() == fiber_names)) {
                throw CodomainMismatch("surjection " + std::to_string(ti) + " over '" + a_set.name(a) +
                                       "' does not map onto the fiber");
            }
            if (!is_surjection(t)) {
                throw NotASurjection("map " + std::to_string(ti) + " over '" + a_set.name(a) +
                                     "' is not a surjection");
            }
            for (std::size_t x = 0; x < t.dom().size(); ++x) {
                d_names.push_back("(" + a_set.name(a) + ",t" + std::to_string(ti) + "," + t.dom().name(x) + ")");
                g_table.push_back(a);
                q_table.push_back(fiber_elems[t(x)]);
            }
        }
    }
    Carrier d(std::move(d_names));
    return Square(f, FinMap::identity(a_set), FinMap(d, a_set, std::move(g_table)),
                  FinMap(d, f.dom(), std::move(q_table)));
}

// Families --------------------------------------------------------------

std::optional<FinMap> refines(const FinMap& p, const FinMap& q) {
    require_same(p.cod(), q.cod(), "refines: maps have different codomains");
    auto preimage = least_preimages(q);
    std::vector<std::size_t> table;
    table.reserve(p.dom().size());
    for (auto x : p.table()) {
        if (!preimage[x]) return std::nullopt;
        table.push_back(*preimage[x]);
    }
    return FinMap(p.dom(), q.dom(), std::move(table));
}

AmcFamilyReport amc_family_report(const SurjectionFamily& fam, std::size_t bound) {
    if (bound < fam.base().size()) {
        throw InvalidArgument("bound " + std::to_string(bound) + " is below the base size " +
                              std::to_string(fam.base().size()));
    }
    AmcFamilyReport report;
    report.bound = bound;
    for (auto& cover : surjections_up_to_renaming(fam.base(), bound)) {
        std::optional<AmcWitness> found;
        for (std::size_t i = 0; i < fam.size() && !found; ++i) {
            if (auto lift = refines(fam.members()[i], cover)) found = AmcWitness{cover, i, std::move(*lift)};
        }
        if (!found) {
            report.failure = std::move(cover);
            return report;
        }
        report.witnesses.push_back(std::move(*found));
    }
    report.holds = true;
    return report;
}

bool is_amc_witness_family(const SurjectionFamily& fam, std::size_t bound) {
    return amc_family_report(fam, bound).holds;
}

namespace {

// Some surjection from `from` onto `onto`: the first |onto| elements map
// bijectively, the rest collapse onto the first element.
std::optional<FinMap> some_surjection(const Carrier& from, const Carrier& onto) {
    if (from.size() < onto.size() || (onto.empty() && !from.empty())) return std::nullopt;
    std::vector<std::size_t> table(from.size(), 0);
    for (std::size_t y = 0; y < from.size(); ++y) table[y] = y < onto.size() ? y : 0;
    return FinMap(from, onto, std::move(table));
}

} // namespace

CollectionFamilyReport collection_family_report(std::span<const Carrier> family, std::size_t bound) {
    if (bound == 0) throw InvalidArgument("collection bound must be at least 1");
    CollectionFamilyReport report;
    report.bound = bound;
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (auto& cover : surjections_up_to_renaming(family[i], bound)) {
            std::optional<CollectionFamilyWitness> found;
            for (std::size_t j = 0; j < family.size() && !found; ++j) {
                auto q = some_surjection(family[j], family[i]);
                if (!q) continue;
                auto lift = refines(*q, cover);
                if (!lift || !(compose(cover, *lift) == *q)) continue;
                found = CollectionFamilyWitness{i, cover, j, std::move(*q), std::move(*lift)};
            }
            if (!found) {
                report.failure = CollectionFamilyFailure{i, std::move(cover)};
                return report;
            }
            report.witnesses.push_back(std::move(*found));
        }
    }
    report.holds = true;
    return report;
}

bool is_collection_family(std::span<const Carrier> family, std::size_t bound) {
    return collection_family_report(family, bound).holds;
}

StrongFactor strong_amc_factor(const SurjectionFamily& fam, const FinMap& f) {
    require_same(f.cod(), fam.base(), "strong_amc_factor: map does not land in the family's base");
    if (!is_surjection(f)) throw NotASurjection("strong_amc_factor: the map to factor through is not onto");
    if (fam.size() == 0) throw NoFactorization("strong_amc_factor: the family is empty");

    const auto& p0 = fam.members().front();
    auto pb = pullback(f, p0);  // T with T -> Z and g: T ->> Y_0

    for (std::size_t j = 0; j < fam.size(); ++j) {
        const auto& pj = fam.members()[j];
        // h: Y_j ->> Y_0 over X, built fiber by fiber.
        std::vector<std::size_t> h(pj.dom().size());
        bool ok = true;
        for (std::size_t x = 0; x < fam.base().size() && ok; ++x) {
            auto src = fiber(pj, x).indices();
            auto dst = fiber(p0, x).indices();
            if (src.size() < dst.size()) {
                ok = false;
                break;
            }
            for (std::size_t k = 0; k < src.size(); ++k) h[src[k]] = dst[k < dst.size() ? k : 0];
        }
        if (!ok) continue;
        FinMap h_map(pj.dom(), p0.dom(), std::move(h));
        auto through_pullback = refines(h_map, pb.second);
        if (!through_pullback) continue;
        auto g = compose(pb.first, *through_pullback);
        if (!(compose(f, g) == pj)) throw std::logic_error("strong_amc_factor produced a non-factorization");
        return StrongFactor{j, std::move(g)};
    }
    throw NoFactorization("no family member refines the pulled-back cover");
}

} // namespace indkernel
