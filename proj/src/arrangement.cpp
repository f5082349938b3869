#include "tamearr/arrangement.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "tamearr/linalg.hpp"

namespace tamearr {

Form normalize_form(Form f)
{
    for (auto& x : f) x.canonicalize();
    auto it = std::find_if(f.begin(), f.end(), [](const Rational& x) { return x != 0; });
    if (it == f.end()) throw InputError("zero linear form");
    Rational lead = *it;
    for (auto& x : f) x /= lead;
    return f;
}

bool forms_proportional(const Form& a, const Form& b)
{
    // both normalized, so proportional means equal
    return a == b;
}

std::string form_str(const Form& f)
{
    static const char* names[] = {"x", "y", "z", "w", "u", "v", "s", "t"};
    std::string out;
    for (int i = 0; i < (int)f.size(); ++i) {
        if (f[i] == 0) continue;
        std::string c = rat_to_string(f[i]);
        if (out.empty()) {
            if (c == "1") c.clear();
            else if (c == "-1") c = "-";
            else c += "*";
        } else {
            if (f[i] > 0) { out += " + "; if (c == "1") c.clear(); else c += "*"; }
            else {
                out += " - ";
                c = rat_to_string(-f[i]);
                if (c == "1") c.clear(); else c += "*";
            }
        }
        out += c + names[i];
    }
    return out.empty() ? "0" : out;
}

int forms_rank(const std::vector<Form>& forms, int dim)
{
    RowSpace<Rational> rs(dim);
    for (const auto& f : forms) rs.insert(f);
    return rs.rank();
}

bool Arrangement::is_simple() const
{
    return std::all_of(mult.begin(), mult.end(), [](int m) { return m == 1; });
}

long Arrangement::total_mult() const
{
    long s = 0;
    for (int m : mult) s += m;
    return s;
}

Arrangement Arrangement::simple() const
{
    Arrangement r = *this;
    std::fill(r.mult.begin(), r.mult.end(), 1);
    return r;
}

Arrangement Arrangement::with_mult(std::vector<int> m) const
{
    if ((int)m.size() != n()) throw InputError("multiplicity count mismatch");
    Arrangement r = *this;
    r.mult = std::move(m);
    return r;
}

Arrangement Arrangement::deleted(int h) const
{
    Arrangement r = *this;
    r.forms.erase(r.forms.begin() + h);
    r.mult.erase(r.mult.begin() + h);
    if ((int)r.labels.size() > h) r.labels.erase(r.labels.begin() + h);
    return r;
}

Arrangement Arrangement::reduced_at(int h) const
{
    if (mult[h] == 1) return deleted(h);
    Arrangement r = *this;
    r.mult[h] -= 1;
    return r;
}

Arrangement Arrangement::subarrangement(std::vector<int> idx) const
{
    Arrangement r;
    r.dim = dim;
    r.field = field;
    for (int i : idx) {
        r.forms.push_back(forms[i]);
        r.mult.push_back(mult[i]);
        if ((int)labels.size() > i) r.labels.push_back(labels[i]);
    }
    return r;
}

std::string Arrangement::label(int h) const
{
    if (h < (int)labels.size() && !labels[h].empty()) return labels[h];
    return form_str(forms[h]);
}

int Arrangement::find_form(const Form& f) const
{
    Form g = normalize_form(f);
    for (int h = 0; h < n(); ++h)
        if (forms[h] == g) return h;
    return -1;
}

void Arrangement::validate() const
{
    if (dim < 1 || dim > kMaxVars)
        throw InputError("dimension out of supported range [1, " + std::to_string(kMaxVars) + "]");
    if ((int)mult.size() != n()) throw InputError("multiplicity count mismatch");
    for (int m : mult)
        if (m < 1) throw InputError("multiplicities must be positive");
    for (const auto& f : forms) {
        if ((int)f.size() != dim) throw InputError("form length does not match dim");
        if (std::all_of(f.begin(), f.end(), [](const Rational& x) { return x == 0; }))
            throw InputError("zero linear form");
    }
    for (int i = 0; i < n(); ++i)
        for (int j = i + 1; j < n(); ++j)
            if (forms_proportional(forms[i], forms[j]))
                throw InputError("proportional forms at indices " + std::to_string(i) + ", " +
                                 std::to_string(j) + " (use multiplicities instead)");
}

Restriction restrict_arrangement(const Arrangement& a, int h)
{
    if (h < 0 || h >= a.n()) throw InputError("hyperplane index out of range");
    const Form& alpha = a.forms[h];
    int dim = a.dim;
    int piv = 0;
    while (alpha[piv] == 0) ++piv;

    // basis of ker(alpha): for each k != piv, b_k = e_k - alpha_k e_piv
    // (alpha_piv = 1 after normalization); trace of beta has coordinates
    // gamma_k = beta_k - alpha_k * beta_piv in the order of k
    Restriction out;
    out.arr.dim = dim - 1;
    out.arr.field = a.field;
    out.trace_of.assign(a.n(), -1);
    for (int g = 0; g < a.n(); ++g) {
        if (g == h) continue;
        const Form& beta = a.forms[g];
        Form gamma;
        gamma.reserve(dim - 1);
        for (int k = 0; k < dim; ++k) {
            if (k == piv) continue;
            gamma.push_back(beta[k] - alpha[k] * beta[piv]);
        }
        gamma = normalize_form(gamma);  // beta not proportional to alpha, so nonzero
        int idx = out.arr.find_form(gamma);
        if (idx < 0) {
            idx = out.arr.n();
            out.arr.forms.push_back(gamma);
            out.arr.mult.push_back(1);
            out.preimage.emplace_back();
        }
        out.trace_of[g] = idx;
        out.preimage[idx].push_back(g);
    }
    return out;
}

Arrangement localize(const Arrangement& a, const std::vector<int>& hyps)
{
    return a.subarrangement(hyps);
}

std::pair<Arrangement, int> essentialize(const Arrangement& a)
{
    // RREF basis w_1..w_r of the span of the forms; each form is a unique
    // combination sum c_i w_i and maps to (c_1,...,c_r) in K^r
    RowSpace<Rational> rs(a.dim);
    for (const auto& f : a.forms) rs.insert(f);
    int r = rs.rank();
    Arrangement out;
    out.dim = r;
    out.field = a.field;
    out.mult = a.mult;
    out.labels = a.labels;
    for (const auto& f : a.forms) {
        // coefficients read off at the pivot columns (rows are reduced)
        Form c(r);
        for (int i = 0; i < r; ++i) c[i] = f[rs.pivots()[i]];
        out.forms.push_back(normalize_form(std::move(c)));
    }
    return {std::move(out), a.dim - r};
}

Arrangement cone_arrangement(const std::vector<std::pair<Form, Rational>>& affine, int dim)
{
    Arrangement out;
    out.dim = dim + 1;
    for (const auto& [f, c] : affine) {
        if ((int)f.size() != dim) throw InputError("affine form length mismatch");
        Form g = f;
        g.push_back(-c);
        out.forms.push_back(normalize_form(std::move(g)));
        out.mult.push_back(1);
    }
    Form inf(dim + 1, Rational(0));
    inf[dim] = 1;
    if (out.find_form(inf) < 0) {
        out.forms.push_back(inf);
        out.mult.push_back(1);
    }
    out.validate();
    return out;
}

Arrangement product_arrangement(const Arrangement& a, const Arrangement& b)
{
    Arrangement out;
    out.dim = a.dim + b.dim;
    out.field = a.field;
    for (int h = 0; h < a.n(); ++h) {
        Form f = a.forms[h];
        f.resize(out.dim, Rational(0));
        out.forms.push_back(std::move(f));
        out.mult.push_back(a.mult[h]);
    }
    for (int h = 0; h < b.n(); ++h) {
        Form f(a.dim, Rational(0));
        f.insert(f.end(), b.forms[h].begin(), b.forms[h].end());
        out.forms.push_back(std::move(f));
        out.mult.push_back(b.mult[h]);
    }
    out.validate();
    return out;
}

bool is_generic_arrangement(const Arrangement& a)
{
    int k = std::min(a.n(), a.dim - 1);
    // every subset of size <= k must be independent; by matroid exchange it
    // is enough to check subsets of size exactly k
    std::vector<int> idx(k);
    std::vector<Form> sub(k);
    std::function<bool(int, int)> rec = [&](int pos, int start) -> bool {
        if (pos == k) {
            for (int i = 0; i < k; ++i) sub[i] = a.forms[idx[i]];
            return forms_rank(sub, a.dim) == k;
        }
        for (int i = start; i <= a.n() - (k - pos); ++i) {
            idx[pos] = i;
            if (!rec(pos + 1, i + 1)) return false;
        }
        return true;
    };
    return rec(0, 0);
}

bool is_irreducible(const Arrangement& a)
{
    int n = a.n();
    if (n == 0) return false;
    if (n == 1) return true;
    if (n > 20) throw InputError("irreducibility search capped at 20 hyperplanes");
    int full = a.rank();
    // nontrivial bipartition with additive rank => product decomposition
    for (uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
        std::vector<Form> s, t;
        for (int i = 0; i < n; ++i)
            (mask >> i & 1 ? s : t).push_back(a.forms[i]);
        if (forms_rank(s, a.dim) + forms_rank(t, a.dim) == full) return false;
    }
    return true;
}

namespace {

Rational json_to_rational(const nlohmann::json& v)
{
    if (v.is_number_integer()) return Rational((long)v.get<long long>());
    if (v.is_string()) return rat_from_string(v.get<std::string>());
    throw InputError("rational entries must be integers or \"a/b\" strings");
}

}  // namespace

Arrangement parse_arrangement(const std::string& json_text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    Arrangement a;
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw InputError("missing integer field \"dim\"");
    a.dim = j["dim"].get<int>();
    if (j.contains("field")) {
        const auto& f = j["field"];
        if (f.is_string() && f.get<std::string>() == "Q") {
            a.field = FieldMode::rationals();
        } else if (f.is_object() && f.contains("Fp")) {
            a.field = FieldMode::prime_field(f["Fp"].get<uint64_t>());
        } else {
            throw InputError("field must be \"Q\" or {\"Fp\": prime}");
        }
    }
    if (!j.contains("hyperplanes") || !j["hyperplanes"].is_array())
        throw InputError("missing array field \"hyperplanes\"");
    for (const auto& row : j["hyperplanes"]) {
        if (!row.is_array()) throw InputError("hyperplane rows must be arrays");
        Form f;
        for (const auto& v : row) f.push_back(json_to_rational(v));
        if ((int)f.size() != a.dim) throw InputError("form length does not match dim");
        a.forms.push_back(normalize_form(std::move(f)));
    }
    if (j.contains("multiplicities")) {
        for (const auto& v : j["multiplicities"]) a.mult.push_back(v.get<int>());
    } else {
        a.mult.assign(a.forms.size(), 1);
    }
    if (j.contains("labels"))
        for (const auto& v : j["labels"]) a.labels.push_back(v.get<std::string>());
    a.validate();
    return a;
}

std::string arrangement_to_json(const Arrangement& a)
{
    nlohmann::json j;
    j["dim"] = a.dim;
    if (a.field.exact)
        j["field"] = "Q";
    else
        j["field"] = {{"Fp", a.field.prime}};
    auto rows = nlohmann::json::array();
    for (const auto& f : a.forms) {
        auto row = nlohmann::json::array();
        for (const auto& x : f) {
            if (x.get_den() == 1 && x.get_num().fits_slong_p())
                row.push_back((long long)x.get_num().get_si());
            else
                row.push_back(rat_to_string(x));
        }
        rows.push_back(std::move(row));
    }
    j["hyperplanes"] = std::move(rows);
    j["multiplicities"] = a.mult;
    if (!a.labels.empty()) j["labels"] = a.labels;
    return j.dump(2);
}

Arrangement load_arrangement(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_arrangement(ss.str());
}

}  // namespace tamearr
