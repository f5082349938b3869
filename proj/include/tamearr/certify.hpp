#ifndef TAMEARR_CERTIFY_HPP
#define TAMEARR_CERTIFY_HPP

#include <array>
#include <functional>
#include <map>
#include <optional>

#include "tamearr/localfree.hpp"
#include "tamearr/multi.hpp"

namespace tamearr {

/// Tameness derivation rules. Axioms carry no premises; the others consume
/// premise certificates plus recomputable evidence.
enum class RuleId {
    LOW_RANK,          // rank <= 3: every multiarrangement is tame
    RANK2_FREE,        // rank-2 multiarrangements are free
    VERIFIED_FREE,     // freeness checked directly (Saito), free => tame
    EMPTY,             // the empty arrangement
    GENERIC_MULTI,     // generic irreducible arrangement, any multiplicity
    GENERIC_ADD,       // tame + generically placed hyperplane added
    ADD_I,             // deletion tame + both locally free along H
    ADD_II,            // restriction tame + deletion tame + deletion loc free
    RESTRICT,          // both tame + loc free along H => restriction tame
    DELETE,            // tame + restriction free + loc free => deletion tame
    FREE_PAIR_DELETE,  // (A,m) and (A^H,m^*) free => deletion tame
    ZIEGLER_REST,      // tame + loc free along H => Ziegler restriction tame
    YOSHINAGA_4,       // rank 4: deletion tame + loc free (addition route)
    YOSHINAGA_5,       // rank >= 5: Ziegler restriction tame + loc free
    EQUIV_5,           // rank >= 5 + loc free: tameness transfers both ways
    MS_LOCALLY_FREE,   // globally locally free + pd of 1-forms <= 1
};

const char* rule_name(RuleId r);

struct Conclusion {
    std::string property;  // "tame" or "free"
    Arrangement arr;
};

bool same_arrangement(const Arrangement& a, const Arrangement& b);

struct Certificate {
    RuleId rule = RuleId::LOW_RANK;
    Arrangement input;  // the arrangement the rule was applied to
    std::vector<Conclusion> conclusions;
    int h = -1;  // hyperplane of the primary target used by the rule, if any
    std::vector<Certificate> premises;
    // evidence, all recomputable by verify_certificate
    std::vector<std::pair<std::string, LocalFreeEvidence>> local_free;
    std::vector<std::pair<std::string, std::vector<int>>> free_claims;
    bool generic_checked = false;

    const Conclusion& primary() const { return conclusions.front(); }
    std::string to_json() const;
    int size() const
    {
        int s = 1;
        for (const auto& p : premises) s += p.size();
        return s;
    }
};

struct CertifyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// H given by alpha is generically placed with respect to a: H belongs to a
/// or contains a nonzero flat of a in no other way than transversally.
bool generic_hyperplane(const Arrangement& a, const Form& alpha);

namespace detail {

inline Conclusion tame_of(const Arrangement& a) { return {"tame", a}; }

template <class K>
std::vector<int> verified_exponents(const Arrangement& a,
                                    const typename FieldOps<K>::Context& ctx,
                                    const Budget& budget)
{
    auto [ess, trivial] = essentialize(a);
    auto fr = is_free<K>(ess, ctx, budget);
    if (!fr.free) throw CertifyError("arrangement is not free");
    std::vector<int> e = fr.exponents;
    e.insert(e.begin(), trivial, 0);
    return e;
}

template <class K>
bool is_free_quiet(const Arrangement& a, const typename FieldOps<K>::Context& ctx,
                   const Budget& budget)
{
    auto [ess, trivial] = essentialize(a);
    (void)trivial;
    if (ess.dim == 0) return true;
    return is_free<K>(ess, ctx, budget).free;
}

}  // namespace detail

/// Build a single-rule certificate, checking all evidence; premises must
/// already conclude what the rule consumes. Throws CertifyError on any
/// unsatisfied hypothesis or rank-range violation.
template <class K>
Certificate apply_rule(RuleId rule, const Arrangement& a, int h,
                       std::vector<Certificate> premises,
                       const typename FieldOps<K>::Context& ctx,
                       const Budget& budget = Budget::unlimited())
{
    auto need_premise = [&](size_t i, const Arrangement& want) -> const Certificate& {
        if (i >= premises.size()) throw CertifyError("missing premise");
        const Certificate& c = premises[i];
        for (const auto& con : c.conclusions)
            if (con.property == "tame" && same_arrangement(con.arr, want)) return c;
        throw CertifyError("premise does not conclude tameness of the required target");
    };
    auto need_h = [&] {
        if (h < 0 || h >= a.n()) throw CertifyError("rule needs a hyperplane of the target");
    };
    Certificate c;
    c.rule = rule;
    c.input = a;
    c.h = h;
    int r = a.rank();
    switch (rule) {
    case RuleId::EMPTY:
        if (!a.empty()) throw CertifyError("EMPTY applies to the empty arrangement");
        c.conclusions = {detail::tame_of(a)};
        break;
    case RuleId::LOW_RANK:
        if (r > 3) throw CertifyError("LOW_RANK needs rank <= 3");
        c.conclusions = {detail::tame_of(a)};
        break;
    case RuleId::RANK2_FREE:
        if (r != 2) throw CertifyError("RANK2_FREE needs rank 2");
        c.free_claims.push_back({"target", rank2_exponents(a)});
        c.conclusions = {{"free", a}, detail::tame_of(a)};
        break;
    case RuleId::VERIFIED_FREE:
        c.free_claims.push_back({"target", detail::verified_exponents<K>(a, ctx, budget)});
        c.conclusions = {{"free", a}, detail::tame_of(a)};
        break;
    case RuleId::GENERIC_MULTI:
        if (!is_generic_arrangement(a.simple()) || !is_irreducible(a.simple()))
            throw CertifyError("GENERIC_MULTI needs a generic irreducible arrangement");
        c.generic_checked = true;
        c.conclusions = {detail::tame_of(a)};
        break;
    case RuleId::GENERIC_ADD: {
        need_h();
        if (!a.is_simple()) throw CertifyError("GENERIC_ADD applies to simple arrangements");
        Arrangement del = a.deleted(h);
        if (!generic_hyperplane(del, a.forms[h]))
            throw CertifyError("hyperplane is not generically placed");
        need_premise(0, del);
        c.generic_checked = true;
        c.premises = std::move(premises);
        c.conclusions = {detail::tame_of(a)};
        break;
    }
    case RuleId::ADD_I: {
        need_h();
        Arrangement del = a.reduced_at(h);
        need_premise(0, del);
        auto lf1 = locally_free_along<K>(a, h, ctx, budget);
        auto lf2 = locally_free_along_form<K>(del, a.forms[h], ctx, budget);
        if (!lf1.locally_free || !lf2.locally_free)
            throw CertifyError("local freeness along H fails");
        c.local_free = {{"target", lf1}, {"deletion", lf2}};
        c.premises = std::move(premises);
        c.conclusions = {detail::tame_of(a), detail::tame_of(euler_restriction(a, h).arr)};
        break;
    }
    case RuleId::ADD_II: {
        need_h();
        Arrangement del = a.reduced_at(h);
        need_premise(0, euler_restriction(a, h).arr);
        need_premise(1, del);
        auto lf = locally_free_along_form<K>(del, a.forms[h], ctx, budget);
        if (!lf.locally_free) throw CertifyError("deletion is not locally free along H");
        c.local_free = {{"deletion", lf}};
        c.premises = std::move(premises);
        c.conclusions = {detail::tame_of(a)};
        break;
    }
    case RuleId::RESTRICT: {
        need_h();
        need_premise(0, a);
        need_premise(1, a.reduced_at(h));
        auto lf = locally_free_along<K>(a, h, ctx, budget);
        if (!lf.locally_free) throw CertifyError("target is not locally free along H");
        c.local_free = {{"target", lf}};
        c.premises = std::move(premises);
        c.conclusions = {detail::tame_of(euler_restriction(a, h).arr)};
        break;
    }
    case RuleId::DELETE: {
        need_h();
        need_premise(0, a);
        Arrangement rest = euler_restriction(a, h).arr;
        c.free_claims.push_back(
            {"restriction", detail::verified_exponents<K>(rest, ctx, budget)});
        auto lf = locally_free_along<K>(a, h, ctx, budget);
        if (!lf.locally_free) throw CertifyError("target is not locally free along H");
        c.local_free = {{"target", lf}};
        c.premises = std::move(premises);
        c.conclusions = {detail::tame_of(a.reduced_at(h))};
        break;
    }
    case RuleId::FREE_PAIR_DELETE: {
        need_h();
        c.free_claims.push_back({"target", detail::verified_exponents<K>(a, ctx, budget)});
        c.free_claims.push_back({"restriction", detail::verified_exponents<K>(
                                                    euler_restriction(a, h).arr, ctx, budget)});
        c.conclusions = {detail::tame_of(a.reduced_at(h))};
        break;
    }
    case RuleId::ZIEGLER_REST: {
        need_h();
        if (!a.is_simple()) throw CertifyError("ZIEGLER_REST applies to simple arrangements");
        need_premise(0, a);
        auto lf = locally_free_along<K>(a, h, ctx, budget);
        if (!lf.locally_free) throw CertifyError("target is not locally free along H");
        c.local_free = {{"target", lf}};
        c.premises = std::move(premises);
        c.conclusions = {detail::tame_of(ziegler_restriction(a, h).arr)};
        break;
    }
    case RuleId::YOSHINAGA_4: {
        need_h();
        if (r != 4) throw CertifyError("YOSHINAGA_4 needs rank 4");
        if (!a.is_simple()) throw CertifyError("YOSHINAGA_4 applies to simple arrangements");
        // already routed (a re-verification pass): accept the addition node
        if (premises.size() == 1 && premises[0].rule == RuleId::ADD_II &&
            same_arrangement(premises[0].input, a) && premises[0].h == h) {
            c.premises = std::move(premises);
            c.conclusions = {detail::tame_of(a)};
            break;
        }
        // the addition route: the restriction has rank 3, hence is tame
        Certificate rest =
            apply_rule<K>(RuleId::LOW_RANK, euler_restriction(a, h).arr, -1, {}, ctx, budget);
        std::vector<Certificate> inner;
        inner.push_back(std::move(rest));
        inner.push_back(need_premise(0, a.reduced_at(h)));
        Certificate via = apply_rule<K>(RuleId::ADD_II, a, h, std::move(inner), ctx, budget);
        c.premises.push_back(std::move(via));
        c.conclusions = {detail::tame_of(a)};
        break;
    }
    case RuleId::YOSHINAGA_5: {
        need_h();
        if (r == 4)
            throw CertifyError("rank 4 must use YOSHINAGA_4");
        if (r < 5) throw CertifyError("YOSHINAGA_5 needs rank >= 5");
        if (!a.is_simple()) throw CertifyError("YOSHINAGA_5 applies to simple arrangements");
        need_premise(0, ziegler_restriction(a, h).arr);
        auto lf = locally_free_along<K>(a, h, ctx, budget);
        if (!lf.locally_free) throw CertifyError("target is not locally free along H");
        c.local_free = {{"target", lf}};
        c.premises = std::move(premises);
        c.conclusions = {detail::tame_of(a)};
        break;
    }
    case RuleId::EQUIV_5: {
        need_h();
        if (r < 5) throw CertifyError("EQUIV_5 needs rank >= 5");
        if (!a.is_simple()) throw CertifyError("EQUIV_5 applies to simple arrangements");
        auto lf = locally_free_along<K>(a, h, ctx, budget);
        if (!lf.locally_free) throw CertifyError("target is not locally free along H");
        c.local_free = {{"target", lf}};
        Arrangement zrest = ziegler_restriction(a, h).arr;
        // one direction as premise, the other as conclusion
        bool fwd = false;
        for (const auto& con : premises.empty() ? std::vector<Conclusion>{}
                                                : premises[0].conclusions)
            if (con.property == "tame" && same_arrangement(con.arr, a)) fwd = true;
        if (fwd)
            c.conclusions = {detail::tame_of(zrest)};
        else {
            need_premise(0, zrest);
            c.conclusions = {detail::tame_of(a)};
        }
        c.premises = std::move(premises);
        break;
    }
    case RuleId::MS_LOCALLY_FREE: {
        auto lf = locally_free_along<K>(a, -1, ctx, budget);
        if (!lf.locally_free) throw CertifyError("target is not globally locally free");
        auto [ess, trivial] = essentialize(a);
        (void)trivial;
        int l = ess.dim;
        // pd of the module of logarithmic 1-forms, via the degree-shift
        // identification with (l-1)-derivations
        auto gens = dp_generators<K>(ess, l - 1, ctx, budget);
        auto res = resolve_module(gens, std::vector<int>((int)subsets_of(l, l - 1).size(), 0),
                                  l + 1, budget);
        if (res.pd > 1) throw CertifyError("1-forms have projective dimension > 1");
        c.local_free = {{"target", lf}};
        c.conclusions = {detail::tame_of(a)};
        break;
    }
    }
    return c;
}

/// Recheck a certificate bottom-up: every premise, every piece of evidence,
/// every rank range. Returns false instead of throwing.
template <class K>
bool verify_certificate(const Certificate& c, const typename FieldOps<K>::Context& ctx,
                        const Budget& budget = Budget::unlimited())
{
    try {
        for (const auto& p : c.premises)
            if (!verify_certificate<K>(p, ctx, budget)) return false;
        Certificate redo = apply_rule<K>(c.rule, c.input, c.h, c.premises, ctx, budget);
        // conclusions must match what the rule really yields
        if (redo.conclusions.size() != c.conclusions.size()) return false;
        for (size_t i = 0; i < redo.conclusions.size(); ++i) {
            if (redo.conclusions[i].property != c.conclusions[i].property) return false;
            if (!same_arrangement(redo.conclusions[i].arr, c.conclusions[i].arr)) return false;
        }
        for (const auto& [label, exps] : c.free_claims) {
            bool found = false;
            for (const auto& [rl, re] : redo.free_claims)
                if (rl == label && re == exps) found = true;
            if (!found) return false;
        }
        return true;
    } catch (const CertifyError&) {
        return false;
    } catch (const InputError&) {
        return false;
    } catch (const std::logic_error&) {
        return false;
    }
}

/// Bounded backward search for a tameness certificate. Returns nullopt when
/// the budget runs out or no rule chain is found (undecided).
template <class K>
class Certifier {
public:
    Certifier(const typename FieldOps<K>::Context& ctx, const Budget& budget)
        : ctx_(ctx), budget_(budget) {}

    std::optional<Certificate> certify(const Arrangement& a)
    {
        try {
            return search(a, 0);
        } catch (const BudgetExceeded&) {
            return std::nullopt;
        }
    }

private:
    std::optional<Certificate> search(const Arrangement& a, int depth)
    {
        budget_.check();
        std::string key = arrangement_to_json(a);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        auto res = search_uncached(a, depth);
        memo_[key] = res;
        return res;
    }

    std::optional<Certificate> search_uncached(const Arrangement& a, int depth)
    {
        auto rule = [&](RuleId r, int h, std::vector<Certificate> prem)
            -> std::optional<Certificate> {
            try {
                return apply_rule<K>(r, a, h, std::move(prem), ctx_, budget_);
            } catch (const CertifyError&) {
                return std::nullopt;
            } catch (const InputError&) {
                return std::nullopt;
            }
        };
        if (a.empty()) return rule(RuleId::EMPTY, -1, {});
        int r = a.rank();
        if (r == 2 && !a.is_simple())
            if (auto c = rule(RuleId::RANK2_FREE, -1, {})) return c;
        if (r <= 3) return rule(RuleId::LOW_RANK, -1, {});
        if (detail::is_free_quiet<K>(a, ctx_, budget_))
            return rule(RuleId::VERIFIED_FREE, -1, {});
        if (auto c = rule(RuleId::GENERIC_MULTI, -1, {})) return c;
        if (depth >= max_depth_) return std::nullopt;

        // addition of a generically placed hyperplane
        if (a.is_simple()) {
            for (int h = 0; h < a.n(); ++h) {
                if (!generic_hyperplane(a.deleted(h), a.forms[h])) continue;
                if (auto sub = search(a.deleted(h), depth + 1))
                    if (auto c = rule(RuleId::GENERIC_ADD, h, {*sub})) return c;
            }
        }

        // deletion recursion, small restrictions first
        std::vector<std::pair<int, int>> order;
        for (int h = 0; h < a.n(); ++h)
            order.push_back({(int)restrict_arrangement(a, h).arr.n(), h});
        std::sort(order.begin(), order.end());
        for (auto [sz, h] : order) {
            (void)sz;
            Arrangement del = a.reduced_at(h);
            bool lf_del =
                locally_free_along_form<K>(del, a.forms[h], ctx_, budget_).locally_free;
            if (!lf_del) continue;
            auto del_cert = search(del, depth + 1);
            if (!del_cert) continue;
            if (locally_free_along<K>(a, h, ctx_, budget_).locally_free)
                if (auto c = rule(RuleId::ADD_I, h, {*del_cert})) return c;
            if (auto rest_cert = search(euler_restriction(a, h).arr, depth + 1))
                if (auto c = rule(RuleId::ADD_II, h, {*rest_cert, *del_cert})) return c;
        }

        // Ziegler-restriction route for higher rank
        if (a.is_simple() && r >= 5) {
            for (auto [sz, h] : order) {
                (void)sz;
                if (!locally_free_along<K>(a, h, ctx_, budget_).locally_free) continue;
                if (auto z = search(ziegler_restriction(a, h).arr, depth + 1))
                    if (auto c = rule(RuleId::YOSHINAGA_5, h, {*z})) return c;
            }
        }

        if (auto c = rule(RuleId::MS_LOCALLY_FREE, -1, {})) return c;
        return std::nullopt;
    }

    typename FieldOps<K>::Context ctx_;
    Budget budget_;
    int max_depth_ = 12;
    std::map<std::string, std::optional<Certificate>> memo_;
};

template <class K>
std::optional<Certificate> certify_tame(const Arrangement& a,
                                        const typename FieldOps<K>::Context& ctx,
                                        const Budget& budget = Budget::unlimited())
{
    return Certifier<K>(ctx, budget).certify(a);
}

/// Membership in the inductively defined class of combinatorially tame
/// arrangements: rank <= 3 and empty are members; higher ranks enter through
/// an addition step or an addition-restriction step whose local-freeness
/// hypotheses hold under the supplied predicate (default: plain freeness of
/// every localization, checked exactly).
using LocalFreePredicate =
    std::function<bool(const Arrangement& a, const Form& alpha)>;

template <class K>
LocalFreePredicate exact_local_freeness(const typename FieldOps<K>::Context& ctx,
                                        const Budget& budget = Budget::unlimited())
{
    return [ctx, budget](const Arrangement& a, const Form& alpha) {
        return locally_free_along_form<K>(a, alpha, ctx, budget).locally_free;
    };
}

bool inductively_tame(const Arrangement& a, const LocalFreePredicate& pred,
                      const Budget& budget = Budget::unlimited());

/// The four equivalent conditions for a rank >= 5 simple arrangement that is
/// locally free along hyperplane h: (0) the arrangement is tame, (1) its
/// 1-forms have pd <= 1, (2) the Ziegler restriction is tame, (3) the Ziegler
/// restriction's 1-forms have pd <= 1. All four must agree.
template <class K>
std::array<bool, 4> equivalence_conditions(const Arrangement& a, int h,
                                           const typename FieldOps<K>::Context& ctx,
                                           const Budget& budget = Budget::unlimited())
{
    auto pd_one_forms = [&](const Arrangement& x) {
        auto [ess, trivial] = essentialize(x);
        (void)trivial;
        int l = ess.dim;
        auto gens = dp_generators<K>(ess, l - 1, ctx, budget);
        auto res = resolve_module(gens, std::vector<int>((int)subsets_of(l, l - 1).size(), 0),
                                  l + 1, budget);
        return res.pd;
    };
    Arrangement zr = ziegler_restriction(a, h).arr;
    return {is_tame<K>(a, ctx, budget), pd_one_forms(a) <= 1, is_tame<K>(zr, ctx, budget),
            pd_one_forms(zr) <= 1};
}

/// Coefficient comparison between the once-reduced characteristic polynomial
/// of a simple arrangement and the characteristic polynomial of its Ziegler
/// restriction: with both written as sum_i c_i (-1)^{l-1-i} t^{l-1-i},
/// tameness plus local freeness along h forces b0_i >= sigma_i >= 0.
struct BettiComparison {
    std::vector<long long> b0;     // from chi(A;t)/(t-1)
    std::vector<long long> sigma;  // from chi(A^H, m^H; t)
    bool nonneg = false;           // sigma_i >= 0
    bool dominates = false;        // b0_i >= sigma_i
};

template <class K>
BettiComparison betti_inequality_check(const Arrangement& a, int h,
                                       const typename FieldOps<K>::Context& ctx,
                                       const Budget& budget = Budget::unlimited())
{
    if (!a.is_simple()) throw InputError("the comparison needs a simple arrangement");
    auto signless_desc = [](const IntPoly& p) {
        auto u = unsigned_coeffs(p);
        std::reverse(u.begin(), u.end());  // index i <-> power l-1-i
        return u;
    };
    BettiComparison out;
    out.b0 = signless_desc(reduced_char_poly(characteristic_polynomial(a)));
    out.sigma = signless_desc(multi_char_poly<K>(ziegler_restriction(a, h).arr, ctx, budget));
    out.nonneg = true;
    out.dominates = true;
    for (size_t i = 0; i < out.sigma.size(); ++i) {
        if (out.sigma[i] < 0) out.nonneg = false;
        long long b = i < out.b0.size() ? out.b0[i] : 0;
        if (b < out.sigma[i]) out.dominates = false;
    }
    return out;
}

}  // namespace tamearr

#endif
