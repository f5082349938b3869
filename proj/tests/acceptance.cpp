// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. argv[1] is the corpus directory.
#include <array>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "tamearr/certify.hpp"
#include "tamearr/sequences.hpp"

using namespace tamearr;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail)
{
    std::cout << "CRITERION " << criterion << ": " << (ok ? "PASS" : "FAIL") << " - "
              << detail << "\n"
              << std::flush;
    if (!ok) ++failures;
}

long ms_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

std::vector<Arrangement> load_corpus(const std::string& dir)
{
    std::vector<std::pair<std::string, Arrangement>> named;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".json")
            named.push_back({e.path().filename().string(), load_arrangement(e.path().string())});
    std::sort(named.begin(), named.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Arrangement> out;
    for (auto& [n, a] : named) out.push_back(std::move(a));
    return out;
}

Arrangement braidlike4()
{
    std::vector<std::vector<long>> rows = {{1, 0, 0, 0},  {0, 1, 0, 0},  {0, 0, 1, 0},
                                           {0, 0, 0, 1},  {1, -1, 0, 0}, {1, 0, -1, 0},
                                           {1, 0, 0, -1}, {0, 1, -1, 0}, {0, 1, 0, -1},
                                           {0, 0, 1, -1}};
    Arrangement a;
    a.dim = 4;
    for (auto& r : rows) {
        Form f;
        for (long v : r) f.push_back(Rational(v));
        a.forms.push_back(normalize_form(std::move(f)));
    }
    a.mult.assign(a.n(), 1);
    return a;
}

Arrangement ex163()
{
    Arrangement a;
    a.dim = 5;
    std::vector<std::vector<long>> rows = {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0},
                                           {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}, {1, 1, 1, 1, 1},
                                           {1, 1, 1, 0, 0}};
    for (auto& r : rows) {
        Form f;
        for (long v : r) f.push_back(Rational(v));
        a.forms.push_back(normalize_form(std::move(f)));
    }
    a.mult.assign(a.n(), 1);
    return a;
}

Arrangement edelman_reiner()
{
    Arrangement a;
    a.dim = 5;
    for (int i = 0; i < 5; ++i) {
        Form f(5, Rational(0));
        f[i] = 1;
        a.forms.push_back(std::move(f));
    }
    for (int s = 0; s < 16; ++s) {
        Form f = {Rational(1), Rational(0), Rational(0), Rational(0), Rational(0)};
        for (int k = 0; k < 4; ++k) f[k + 1] = (s >> k & 1) ? -1 : 1;
        a.forms.push_back(normalize_form(std::move(f)));
    }
    a.mult.assign(a.n(), 1);
    return a;
}

int pd_of(const Arrangement& ess, int p, const std::vector<MVec<Rational>>& gens)
{
    return resolve_module(gens, std::vector<int>((int)subsets_of(ess.dim, p).size(), 0),
                          ess.dim + 1, Budget::unlimited())
        .pd;
}

// criterion 1: the rank-4 free arrangement with exponents (1,2,3,4)
void criterion1()
{
    auto t0 = std::chrono::steady_clock::now();
    auto fr = is_free<Rational>(braidlike4(), 0);
    long ms = ms_since(t0);
    bool ok = fr.free && fr.exponents == std::vector<int>{1, 2, 3, 4} && ms < 60000;
    report(1, ok, "freeness with exponents (1,2,3,4), exact mode, " + std::to_string(ms) + "ms");
}

// criterion 2: the rank-5 7-hyperplane example: tame, not free, certified
void criterion2()
{
    auto t0 = std::chrono::steady_clock::now();
    auto a = ex163();
    auto prof = pd_profile<Rational>(a, 0);
    bool tame = prof.tame;
    bool notfree = !is_free<Rational>(a, 0).free;
    auto cert = certify_tame<Rational>(a, 0);
    bool has = cert.has_value() && cert->rule == RuleId::ADD_II;
    bool verified = has && verify_certificate<Rational>(*cert, 0);
    long ms = ms_since(t0);
    bool ok = tame && notfree && has && verified && ms < 600000;
    report(2, ok,
           std::string("tame + not free + addition certificate verified, ") +
               std::to_string(ms) + "ms");
}

// criterion 3: certificate soundness across the corpus
void criterion3(const std::vector<Arrangement>& corpus)
{
    int certified = 0;
    bool ok = true;
    for (const auto& a : corpus) {
        auto cert = certify_tame<Rational>(a, 0);
        if (!cert) continue;
        ++certified;
        auto [ess, trivial] = essentialize(a);
        (void)trivial;
        if (!ess.empty() && !pd_profile<Rational>(ess, 0).tame) ok = false;
        if (!verify_certificate<Rational>(*cert, 0)) ok = false;
    }
    report(3, ok && certified > 0,
           std::to_string(certified) + " certificates, all conclusions confirmed by the oracle");
}

// criterion 4: randomized sequence exactness
void criterion4()
{
    std::mt19937 rng(417);
    auto rnd = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    int done = 0, checked = 0;
    bool ok = true;
    while (done < 25) {
        // rank-4 draws stay simple with small coefficients: degreewise spans at
        // dmax = |m|+2 grow fast with both rank and multiplicity
        int l = std::array<int, 4>{2, 3, 3, 4}[rnd(0, 3)];
        int n = l == 4 ? rnd(4, 6) : rnd(l, std::min(7, l + 3));
        int cmax = l == 4 ? 1 : 2;
        Arrangement a;
        a.dim = l;
        try {
            for (int i = 0; i < n; ++i) {
                Form f;
                bool nz = false;
                for (int j = 0; j < l; ++j) {
                    f.push_back(Rational(rnd(-cmax, cmax)));
                    if (f.back() != 0) nz = true;
                }
                if (!nz) throw InputError("zero row");
                a.forms.push_back(normalize_form(std::move(f)));
            }
            a.mult.assign(n, 1);
            long budget_m = l == 4 ? 0 : 10 - n;
            for (int i = 0; i < n && budget_m > 0; ++i) {
                int extra = std::min<long>(rnd(0, 2), budget_m);
                a.mult[i] += extra;
                budget_m -= extra;
            }
            a.validate();
        } catch (const InputError&) {
            continue;
        }
        if (a.rank() < 2) continue;
        ++done;
        auto ti = std::chrono::steady_clock::now();
        int dmax = (int)a.total_mult() + 2;
        int h = rnd(0, n - 1);
        std::vector<int> ps = {1};
        if (l == 3) ps.push_back(rnd(0, 3));
        if (l == 4) ps.push_back(rnd(0, 1) ? 0 : 2);
        for (int p : ps) {
            SequenceChecker<Rational> sc(a, h, p, 0);
            std::vector<SequenceReport> rs = {sc.check_euler(dmax), sc.check_c(dmax)};
            if (a.is_simple()) rs.push_back(sc.check_ziegler(dmax));
            for (const auto& r : rs) {
                ++checked;
                if (!r.left_exact || !r.middle_exact || !r.maps_into_target) ok = false;
                if (r.hypothesis_violation) ok = false;
                if (r.fst_hypotheses && !r.right_exact) ok = false;
            }
        }
        std::cerr << "  instance " << done << "/25: l=" << l << " n=" << n << " |m|="
                  << a.total_mult() << ", " << ms_since(ti) << "ms\n"
                  << std::flush;
    }
    report(4, ok,
           std::to_string(done) + " random instances, " + std::to_string(checked) +
               " sequences exact, surjectivity holds whenever mandated");
}

// criterion 5: form/derivation identification + localization monotonicity
void criterion5(const std::vector<Arrangement>& corpus)
{
    bool ok = true;
    int pairs = 0, locs = 0;
    for (const auto& a : corpus) {
        auto [ess, trivial] = essentialize(a);
        (void)trivial;
        int l = ess.dim;
        if (l == 0) continue;
        for (int p = 1; p < l; ++p) {
            ++pairs;
            int po = pd_of(ess, p, omega_generators_direct<Rational>(ess, p, 0));
            int pd = pd_of(ess, l - p, dp_generators<Rational>(ess, l - p, 0));
            if (po != pd) ok = false;
        }
        if (l < 3) continue;
        int pd_full = pd_of(ess, l - 1, dp_generators<Rational>(ess, l - 1, 0));
        for (const auto& f : intersection_lattice(ess).flats) {
            if (f.codim < 3 || f.codim >= l) continue;
            auto [le, lt] = essentialize(localize(ess, f.hyps));
            (void)lt;
            ++locs;
            int pd_loc = pd_of(le, le.dim - 1, dp_generators<Rational>(le, le.dim - 1, 0));
            if (pd_loc > pd_full) ok = false;
        }
    }
    report(5, ok,
           std::to_string(pairs) + " identification pairs, " + std::to_string(locs) +
               " localization comparisons");
}

// criterion 6: characteristic polynomial oracles
void criterion6(const std::vector<Arrangement>& corpus)
{
    bool ok = true;
    int mob = 0, fact = 0;
    for (const auto& a : corpus) {
        auto [ess, trivial] = essentialize(a);
        (void)trivial;
        if (ess.empty()) continue;
        auto chi = multi_char_poly<Rational>(ess, 0);
        if (ess.is_simple()) {
            ++mob;
            if (!(chi == characteristic_polynomial(ess))) ok = false;
        }
        if (ess.dim <= 3) {
            auto fr = is_free<Rational>(ess, 0);
            if (fr.free) {
                ++fact;
                if (!(chi == IntPoly::from_roots(fr.exponents))) ok = false;
            }
        }
    }
    report(6, ok,
           std::to_string(mob) + " Mobius matches, " + std::to_string(fact) +
               " free factorizations");
}

// criterion 7: the four equivalent tameness conditions at rank 5
void criterion7(const std::vector<Arrangement>& corpus)
{
    bool ok = true;
    int tested = 0;
    for (const auto& a : corpus) {
        if (a.rank() != 5 || !a.is_simple() || a.dim != 5) continue;
        for (int h = 0; h < a.n(); ++h) {
            if (!locally_free_along<Rational>(a, h, 0).locally_free) continue;
            auto conds = equivalence_conditions<Rational>(a, h, 0);
            if (!(conds[0] == conds[1] && conds[1] == conds[2] && conds[2] == conds[3]))
                ok = false;
            ++tested;
            break;  // one hyperplane per instance
        }
    }
    report(7, ok && tested >= 3,
           std::to_string(tested) + " rank-5 instances, all four conditions agree");
}

// criterion 8: coefficient inequalities, equality in the free case
void criterion8(const std::vector<Arrangement>& corpus)
{
    bool ok = true;
    int checked = 0, equalities = 0;
    for (const auto& a : corpus) {
        if (!a.is_simple()) continue;
        auto [ess, trivial] = essentialize(a);
        (void)trivial;
        if (ess.empty() || ess.dim < 2) continue;
        if (!pd_profile<Rational>(ess, 0).tame) continue;
        bool free = is_free<Rational>(ess, 0).free;
        for (int h = 0; h < ess.n(); ++h) {
            if (!locally_free_along<Rational>(ess, h, 0).locally_free) continue;
            auto bc = betti_inequality_check<Rational>(ess, h, 0);
            ++checked;
            if (!bc.nonneg || !bc.dominates) ok = false;
            if (free) {
                ++equalities;
                if (bc.b0 != bc.sigma) ok = false;
            }
        }
    }
    report(8, ok && checked > 0,
           std::to_string(checked) + " inequality checks, " + std::to_string(equalities) +
               " free equalities");
}

// criterion 9: the 21-hyperplane rank-5 stretch instance, fast mode
void criterion9()
{
    auto t0 = std::chrono::steady_clock::now();
    auto er = edelman_reiner();
    uint64_t prime = kDefaultPrime;
    auto fr = is_free<Fp>(er, prime);
    bool free_ok = fr.free && fr.exponents == std::vector<int>{1, 5, 5, 5, 5};
    auto rest = euler_restriction(er, 0).arr;
    auto rr = is_free<Fp>(rest, prime);
    bool rest_ok = rr.free && rr.exponents == std::vector<int>{1, 3, 3, 5};
    bool cert_ok = false;
    try {
        auto c = apply_rule<Fp>(RuleId::FREE_PAIR_DELETE, er, 0, {}, prime);
        cert_ok = verify_certificate<Fp>(c, prime);
    } catch (const CertifyError&) {
    }
    long ms = ms_since(t0);
    report(9, free_ok && rest_ok && cert_ok,
           "exponents (1,5,5,5,5), restriction (1,3,3,5), deletion certified tame; F_p prime " +
               std::to_string(prime) + ", " + std::to_string(ms) + "ms");
}

}  // namespace

int main(int argc, char** argv)
{
    if (argc < 2) {
        std::cerr << "usage: acceptance <corpus-dir>\n";
        return 1;
    }
    auto corpus = load_corpus(argv[1]);
    std::cout << "corpus: " << corpus.size() << " instances from " << argv[1] << "\n";
    criterion1();
    criterion2();
    criterion3(corpus);
    criterion4();
    criterion5(corpus);
    criterion6(corpus);
    criterion7(corpus);
    criterion8(corpus);
    criterion9();
    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "FAILURES: " + std::to_string(failures))
              << "\n";
    return failures == 0 ? 0 : 1;
}
