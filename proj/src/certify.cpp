#include "tamearr/certify.hpp"

#include <json.hpp>

#include "tamearr/lattice.hpp"

namespace tamearr {

const char* rule_name(RuleId r)
{
    switch (r) {
    case RuleId::LOW_RANK: return "LOW_RANK";
    case RuleId::RANK2_FREE: return "RANK2_FREE";
    case RuleId::VERIFIED_FREE: return "VERIFIED_FREE";
    case RuleId::EMPTY: return "EMPTY";
    case RuleId::GENERIC_MULTI: return "GENERIC_MULTI";
    case RuleId::GENERIC_ADD: return "GENERIC_ADD";
    case RuleId::ADD_I: return "ADD_I";
    case RuleId::ADD_II: return "ADD_II";
    case RuleId::RESTRICT: return "RESTRICT";
    case RuleId::DELETE: return "DELETE";
    case RuleId::FREE_PAIR_DELETE: return "FREE_PAIR_DELETE";
    case RuleId::ZIEGLER_REST: return "ZIEGLER_REST";
    case RuleId::YOSHINAGA_4: return "YOSHINAGA_4";
    case RuleId::YOSHINAGA_5: return "YOSHINAGA_5";
    case RuleId::EQUIV_5: return "EQUIV_5";
    case RuleId::MS_LOCALLY_FREE: return "MS_LOCALLY_FREE";
    }
    return "?";
}

bool same_arrangement(const Arrangement& a, const Arrangement& b)
{
    return a.dim == b.dim && a.forms == b.forms && a.mult == b.mult;
}

bool generic_hyperplane(const Arrangement& a, const Form& alpha)
{
    Form al = normalize_form(Form(alpha));
    if (a.find_form(al) >= 0) return false;
    Lattice l = intersection_lattice(a);
    for (const auto& f : l.flats) {
        if (f.codim == 0 || f.codim >= a.dim) continue;  // skip V and {0}
        std::vector<Form> fs;
        for (int g : f.hyps) fs.push_back(a.forms[g]);
        fs.push_back(al);
        if (forms_rank(fs, a.dim) != f.codim + 1) return false;  // alpha contains the flat
    }
    return true;
}

namespace {

bool it_rec(const Arrangement& a, const LocalFreePredicate& pred, const Budget& budget,
            std::map<std::string, bool>& memo)
{
    budget.check();
    if (a.empty()) return true;
    if (a.rank() <= 3) return true;
    std::string key = arrangement_to_json(a);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    memo[key] = false;  // treat cycles (impossible here) as failures
    bool ok = false;
    for (int h = 0; h < a.n() && !ok; ++h) {
        Arrangement del = a.deleted(h);
        if (!pred(del, a.forms[h])) continue;
        if (!it_rec(del, pred, budget, memo)) continue;
        // addition step: the full arrangement is also locally free along H
        if (pred(a, a.forms[h])) {
            ok = true;
            break;
        }
        // addition-restriction step: the restriction is in the class too
        if (it_rec(restrict_arrangement(a, h).arr, pred, budget, memo)) ok = true;
    }
    memo[key] = ok;
    return ok;
}

}  // namespace

bool inductively_tame(const Arrangement& a, const LocalFreePredicate& pred,
                      const Budget& budget)
{
    if (!a.is_simple()) throw InputError("class membership is defined for simple arrangements");
    std::map<std::string, bool> memo;
    return it_rec(a, pred, budget, memo);
}

namespace {

nlohmann::json evidence_json(const Certificate& c)
{
    nlohmann::json ev = nlohmann::json::object();
    if (!c.local_free.empty()) {
        nlohmann::json lf = nlohmann::json::object();
        for (const auto& [label, e] : c.local_free) {
            nlohmann::json flats = nlohmann::json::array();
            for (const auto& fc : e.flats)
                flats.push_back({{"hyperplanes", fc.hyps},
                                 {"rank", fc.rank},
                                 {"free", fc.free},
                                 {"exponents", fc.exponents},
                                 {"by_rank2", fc.by_rank2}});
            lf[label] = {{"locally_free", e.locally_free}, {"flats_checked", flats}};
        }
        ev["local_free"] = lf;
    }
    if (!c.free_claims.empty()) {
        nlohmann::json fc = nlohmann::json::object();
        for (const auto& [label, exps] : c.free_claims) fc[label] = exps;
        ev["free"] = fc;
    }
    if (c.generic_checked) ev["generic"] = true;
    return ev;
}

nlohmann::json cert_json(const Certificate& c)
{
    nlohmann::json j;
    j["rule"] = rule_name(c.rule);
    j["input"] = nlohmann::json::parse(arrangement_to_json(c.input));
    nlohmann::json cons = nlohmann::json::array();
    for (const auto& con : c.conclusions)
        cons.push_back({{"property", con.property},
                        {"arrangement", nlohmann::json::parse(arrangement_to_json(con.arr))}});
    j["conclusions"] = cons;
    if (c.h >= 0) j["hyperplane"] = c.h;
    j["evidence"] = evidence_json(c);
    nlohmann::json prem = nlohmann::json::array();
    for (const auto& p : c.premises) prem.push_back(cert_json(p));
    j["premises"] = prem;
    return j;
}

}  // namespace

std::string Certificate::to_json() const { return cert_json(*this).dump(2); }

}  // namespace tamearr
