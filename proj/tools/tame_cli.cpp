// Command-line surface: analyses of one arrangement file plus a corpus
// runner that sweeps the invariant suite over a directory.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "tamearr/certify.hpp"
#include "tamearr/sequences.hpp"

using namespace tamearr;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Options {
    std::string command;
    std::string path;
    std::string field = "Q";
    std::string mode = "exact";
    long budget_ms = 0;  // 0 = unlimited
    int dmax = -1;       // -1 = deg Q + 2
    int p = -1;          // -1 = all orders
    std::string hyperplane;
    std::string out;
};

int exit_decided = 0, exit_input_error = 1, exit_undecided = 2;

json intpoly_json(const IntPoly& q)
{
    json j;
    j["coeffs_ascending"] = q.c;
    j["str"] = q.str();
    return j;
}

json arr_json(const Arrangement& a) { return json::parse(arrangement_to_json(a)); }

int resolve_hyperplane(const Arrangement& a, const std::string& sel)
{
    if (sel.empty()) throw InputError("this command needs --hyperplane");
    if (sel.find(',') == std::string::npos) {
        size_t pos = 0;
        int h = std::stoi(sel, &pos);
        if (pos != sel.size() || h < 0 || h >= a.n())
            throw InputError("hyperplane index out of range: " + sel);
        return h;
    }
    Form f;
    std::stringstream ss(sel);
    std::string tok;
    while (std::getline(ss, tok, ',')) f.push_back(rat_from_string(tok));
    if ((int)f.size() != a.dim) throw InputError("hyperplane form has wrong length");
    int h = a.find_form(normalize_form(std::move(f)));
    if (h < 0) throw InputError("no hyperplane with form " + sel);
    return h;
}

void emit(const Options& o, const json& report)
{
    if (!o.out.empty()) {
        std::ofstream f(o.out);
        f << report.dump(2) << "\n";
    }
    std::cout << report.dump(2) << "\n";
}

const char* kind_name(SequenceKind k)
{
    switch (k) {
    case SequenceKind::Euler: return "euler";
    case SequenceKind::C: return "c";
    case SequenceKind::Ziegler: return "ziegler";
    }
    return "?";
}

json sequence_json(const SequenceReport& r)
{
    return {{"kind", kind_name(r.kind)},     {"p", r.p},
            {"hyperplane", r.h},             {"dmax", r.dmax},
            {"left_exact", r.left_exact},    {"middle_exact", r.middle_exact},
            {"maps_into_target", r.maps_into_target},
            {"right_exact", r.right_exact},  {"fst_hypotheses", r.fst_hypotheses},
            {"hypothesis_violation", r.hypothesis_violation},
            {"failed_degrees", r.failed_degrees}};
}

template <class K>
int run_command(const Options& o, const Arrangement& a,
                const typename FieldOps<K>::Context& ctx)
{
    Budget budget = o.budget_ms > 0 ? Budget::from_ms(o.budget_ms) : Budget::unlimited();
    int dmax = o.dmax >= 0 ? o.dmax : (int)a.total_mult() + 2;
    json rep;
    rep["command"] = o.command;
    rep["input"] = arr_json(a);
    rep["mode"] = o.mode == "fast" ? "fast" : "exact";
    rep["field"] = o.field;
    try {
        if (o.command == "lattice") {
            Lattice l = intersection_lattice(a);
            json flats = json::array();
            for (const auto& f : l.flats)
                flats.push_back({{"hyperplanes", f.hyps},
                                 {"codim", f.codim},
                                 {"mobius", f.mobius}});
            rep["flats"] = flats;
            rep["chi"] = intpoly_json(characteristic_polynomial(l));
        } else if (o.command == "chi") {
            rep["chi"] = intpoly_json(a.is_simple() ? characteristic_polynomial(a)
                                                    : multi_char_poly<K>(a, ctx, budget));
        } else if (o.command == "free") {
            auto [ess, trivial] = essentialize(a);
            auto fr = is_free<K>(ess, ctx, budget);
            rep["free"] = fr.free;
            if (fr.free) {
                std::vector<int> e = fr.exponents;
                e.insert(e.begin(), trivial, 0);
                rep["exponents"] = e;
            }
        } else if (o.command == "tame") {
            auto [ess, trivial] = essentialize(a);
            (void)trivial;
            auto prof = pd_profile<K>(ess, ctx, budget);
            rep["tame"] = prof.tame;
            rep["pd_omega"] = prof.pd_omega;
        } else if (o.command == "certify") {
            auto c = certify_tame<K>(a, ctx, budget);
            if (!c) {
                rep["status"] = "undecided";
                emit(o, rep);
                return exit_undecided;
            }
            rep["status"] = "decided";
            rep["tame"] = true;
            rep["certificate"] = json::parse(c->to_json());
            rep["verified"] = verify_certificate<K>(*c, ctx, budget);
        } else if (o.command == "restrict") {
            int h = resolve_hyperplane(a, o.hyperplane);
            auto r = restrict_arrangement(a, h);
            rep["restriction"] = arr_json(r.arr);
            rep["trace_of"] = r.trace_of;
            rep["preimage"] = r.preimage;
        } else if (o.command == "euler") {
            int h = resolve_hyperplane(a, o.hyperplane);
            auto r = euler_restriction(a, h);
            rep["restriction"] = arr_json(r.arr);
            rep["trace_of"] = r.trace_of;
        } else if (o.command == "ziegler") {
            int h = resolve_hyperplane(a, o.hyperplane);
            auto r = ziegler_restriction(a, h);
            rep["restriction"] = arr_json(r.arr);
            rep["trace_of"] = r.trace_of;
        } else if (o.command == "sequences") {
            int h = resolve_hyperplane(a, o.hyperplane);
            json seqs = json::array();
            int plo = o.p >= 0 ? o.p : 0;
            int phi = o.p >= 0 ? o.p : a.dim;
            bool all_ok = true;
            for (int p = plo; p <= phi; ++p) {
                SequenceChecker<K> sc(a, h, p, ctx, budget);
                std::vector<SequenceReport> rs = {sc.check_euler(dmax), sc.check_c(dmax)};
                if (a.is_simple()) rs.push_back(sc.check_ziegler(dmax));
                for (const auto& r : rs) {
                    seqs.push_back(sequence_json(r));
                    if (!r.left_exact || !r.middle_exact || !r.maps_into_target ||
                        r.hypothesis_violation)
                        all_ok = false;
                }
            }
            rep["dmax"] = dmax;
            rep["sequences"] = seqs;
            rep["all_exact"] = all_ok;
        } else if (o.command == "betti-check") {
            int h = resolve_hyperplane(a, o.hyperplane);
            auto bc = betti_inequality_check<K>(a, h, ctx, budget);
            rep["b0"] = bc.b0;
            rep["sigma"] = bc.sigma;
            rep["nonneg"] = bc.nonneg;
            rep["dominates"] = bc.dominates;
        } else if (o.command == "it-class") {
            rep["inductively_tame"] =
                inductively_tame(a, exact_local_freeness<K>(ctx, budget), budget);
        } else {
            throw InputError("unknown command: " + o.command);
        }
    } catch (const BudgetExceeded&) {
        rep["status"] = "undecided";
        emit(o, rep);
        return exit_undecided;
    }
    if (!rep.contains("status")) rep["status"] = "decided";
    emit(o, rep);
    return exit_decided;
}

// ---------------------------------------------------------------------------
// corpus runner: invariant suite over a directory of arrangement files

uint64_t fnv1a(const std::string& s)
{
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

template <class K>
json corpus_instance(const Arrangement& a, const typename FieldOps<K>::Context& ctx,
                     const Budget& budget)
{
    json row;
    auto [ess, trivial] = essentialize(a);
    (void)trivial;
    int l = ess.dim;
    row["rank"] = l;
    row["n"] = a.n();
    row["total_mult"] = a.total_mult();

    // direct tameness oracle
    auto prof = pd_profile<K>(ess, ctx, budget);
    row["pd_omega"] = prof.pd_omega;
    row["tame"] = prof.tame;

    // certificate soundness: any certificate found must agree with the oracle
    auto cert = certify_tame<K>(a, ctx, budget);
    if (cert) {
        bool sound = prof.tame && verify_certificate<K>(*cert, ctx, budget);
        row["certificate_rule"] = rule_name(cert->rule);
        row["certificate_sound"] = sound;
    } else {
        row["certificate_rule"] = nullptr;
    }

    // identification: pd of p-forms equals pd of (l-p)-derivations
    bool ident_ok = true;
    for (int p = 1; p < l; ++p) {
        auto og = omega_generators_direct<K>(ess, p, ctx, budget);
        auto dg = dp_generators<K>(ess, l - p, ctx, budget);
        int no = (int)subsets_of(l, p).size();
        int nd = (int)subsets_of(l, l - p).size();
        auto ro = resolve_module(og, std::vector<int>(no, 0), l + 1, budget);
        auto rd = resolve_module(dg, std::vector<int>(nd, 0), l + 1, budget);
        if (ro.pd != rd.pd) ident_ok = false;
    }
    row["identification"] = ident_ok;

    // localization monotonicity for 1-forms
    bool mono_ok = true;
    {
        auto gens = dp_generators<K>(ess, l - 1, ctx, budget);
        int nc = (int)subsets_of(l, l - 1).size();
        int pd_full = resolve_module(gens, std::vector<int>(nc, 0), l + 1, budget).pd;
        for (const auto& f : intersection_lattice(ess).flats) {
            if (f.codim < 3 || f.codim >= l) continue;
            auto [le, lt] = essentialize(localize(ess, f.hyps));
            (void)lt;
            int ll = le.dim;
            auto lg = dp_generators<K>(le, ll - 1, ctx, budget);
            int lc = (int)subsets_of(ll, ll - 1).size();
            int pd_loc = resolve_module(lg, std::vector<int>(lc, 0), ll + 1, budget).pd;
            if (pd_loc > pd_full) mono_ok = false;
        }
    }
    row["localization_monotone"] = mono_ok;

    // characteristic polynomial oracles
    bool chi_ok = true;
    auto mchi = multi_char_poly<K>(ess, ctx, budget);
    if (ess.is_simple() && !(mchi == characteristic_polynomial(ess))) chi_ok = false;
    if (l <= 3) {
        auto fr = is_free<K>(ess, ctx, budget);
        if (fr.free) {
            std::vector<int> e = fr.exponents;
            if (!(mchi == IntPoly::from_roots(e))) chi_ok = false;
        }
    }
    row["chi_oracles"] = chi_ok;

    // coefficient inequalities against the Ziegler restriction
    if (ess.is_simple() && prof.tame) {
        bool betti_ok = true;
        for (int h = 0; h < ess.n(); ++h) {
            if (!locally_free_along<K>(ess, h, ctx, budget).locally_free) continue;
            auto bc = betti_inequality_check<K>(ess, h, ctx, budget);
            if (!bc.nonneg || !bc.dominates) betti_ok = false;
        }
        row["betti_inequalities"] = betti_ok;
    }
    return row;
}

template <class K>
int run_corpus(const Options& o, const typename FieldOps<K>::Context& ctx)
{
    Budget budget = o.budget_ms > 0 ? Budget::from_ms(o.budget_ms) : Budget::unlimited();
    json rows = json::object();
    bool all_ok = true;
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(o.path))
        if (e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());

    fs::path cache_dir = fs::temp_directory_path() / "tamearr-cache";
    if (const char* env = std::getenv("TAMEARR_CACHE")) cache_dir = env;
    for (const auto& f : files) {
        std::ifstream in(f);
        std::stringstream ss;
        ss << in.rdbuf();
        std::string text = ss.str();
        std::string key = std::to_string(fnv1a(text + "|v1|" + o.field));
        fs::path cached = cache_dir / (key + ".json");
        json row;
        if (fs::exists(cached)) {
            std::ifstream cf(cached);
            row = json::parse(cf);
            row["cache"] = "hit";
        } else {
            try {
                Arrangement a = parse_arrangement(text);
                row = corpus_instance<K>(a, ctx, budget);
                std::error_code ec;
                fs::create_directories(cache_dir, ec);
                if (!ec) {
                    std::ofstream cf(cached);
                    cf << row.dump(2) << "\n";
                }
            } catch (const InputError& e) {
                row = {{"error", std::string("input: ") + e.what()}};
            } catch (const BudgetExceeded&) {
                row = {{"error", "budget exhausted"}};
            }
        }
        for (auto it = row.begin(); it != row.end(); ++it)
            if (it.value().is_boolean() && !it.value().get<bool>() &&
                it.key() != "tame")
                all_ok = false;
        if (row.contains("error")) all_ok = false;
        rows[f.filename().string()] = row;
    }
    json rep = {{"command", "corpus"}, {"instances", rows}, {"all_pass", all_ok}};
    emit(o, rep);
    return exit_decided;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"hyperplane multiarrangement analyses"};
    Options o;
    app.require_subcommand(1);
    std::vector<std::string> commands = {"lattice", "chi",    "free",      "tame",
                                         "certify", "restrict", "euler",   "ziegler",
                                         "sequences", "betti-check", "it-class", "corpus"};
    std::vector<CLI::App*> subs;
    for (const auto& c : commands) {
        CLI::App* s = app.add_subcommand(c);
        s->add_option("path", o.path, c == "corpus" ? "directory of arrangement files"
                                                    : "arrangement JSON file")
            ->required();
        s->add_option("--field", o.field, "Q or Fp:<prime>");
        s->add_option("--mode", o.mode, "exact or fast")
            ->check(CLI::IsMember({"exact", "fast"}));
        s->add_option("--budget-ms", o.budget_ms, "time budget in milliseconds");
        s->add_option("--dmax", o.dmax, "degree cutoff for degreewise checks");
        s->add_option("--p", o.p, "restrict to one form order");
        s->add_option("--hyperplane", o.hyperplane, "hyperplane index or comma form");
        s->add_option("--out", o.out, "write the JSON report here");
        subs.push_back(s);
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : exit_input_error;
    }
    for (size_t i = 0; i < subs.size(); ++i)
        if (subs[i]->parsed()) o.command = commands[i];

    try {
        bool fast = o.mode == "fast" || o.field.rfind("Fp", 0) == 0;
        uint64_t prime = kDefaultPrime;
        if (o.field.rfind("Fp:", 0) == 0) prime = std::stoull(o.field.substr(3));
        else if (o.field != "Q" && o.field != "Fp")
            throw InputError("--field must be Q or Fp:<prime>");
        if (fast) o.field = "Fp:" + std::to_string(prime);

        if (o.command == "corpus") {
            if (!fs::is_directory(o.path)) throw InputError("corpus needs a directory");
            return fast ? run_corpus<Fp>(o, prime) : run_corpus<Rational>(o, 0);
        }
        Arrangement a = load_arrangement(o.path);
        return fast ? run_command<Fp>(o, a, prime) : run_command<Rational>(o, a, 0);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    }
}
