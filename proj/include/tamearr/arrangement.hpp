#ifndef TAMEARR_ARRANGEMENT_HPP
#define TAMEARR_ARRANGEMENT_HPP

#include <string>
#include <utility>
#include <vector>

#include "tamearr/field.hpp"
#include "tamearr/poly.hpp"

namespace tamearr {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Defining linear form of a hyperplane: coefficient vector of length dim,
/// normalized so the first nonzero entry is 1.
using Form = std::vector<Rational>;

Form normalize_form(Form f);
bool forms_proportional(const Form& a, const Form& b);
std::string form_str(const Form& f);
int forms_rank(const std::vector<Form>& forms, int dim);

/// Central hyperplane (multi)arrangement in K^dim. Coefficients are kept as
/// exact rationals; the field tag only routes downstream module computations.
struct Arrangement {
    int dim = 0;
    std::vector<Form> forms;
    std::vector<int> mult;
    std::vector<std::string> labels;
    FieldMode field = FieldMode::rationals();

    int n() const { return (int)forms.size(); }
    bool empty() const { return forms.empty(); }
    bool is_simple() const;
    long total_mult() const;  // |m|
    int rank() const { return forms_rank(forms, dim); }
    bool is_essential() const { return rank() == dim; }

    Arrangement simple() const;                  // same hyperplanes, m = 1
    Arrangement with_mult(std::vector<int> m) const;
    Arrangement deleted(int h) const;            // remove hyperplane h entirely
    Arrangement reduced_at(int h) const;         // m - delta_h (drops h at m=1)
    Arrangement subarrangement(std::vector<int> idx) const;
    std::string label(int h) const;

    /// Index of the hyperplane with this form, or -1.
    int find_form(const Form& f) const;

    void validate() const;  // throws InputError
};

/// Restriction of A to the hyperplane h, in deterministic coordinates of h.
/// arr is the simple restriction (all multiplicities 1); trace_of maps each
/// hyperplane index of A (except h, mapped to -1) to its trace in arr.
struct Restriction {
    Arrangement arr;
    std::vector<int> trace_of;
    std::vector<std::vector<int>> preimage;  // per trace, hyperplane indices of A
};
Restriction restrict_arrangement(const Arrangement& a, int h);

/// Sub-arrangement of hyperplanes containing a flat (indices given), with
/// inherited multiplicities; still lives in K^dim.
Arrangement localize(const Arrangement& a, const std::vector<int>& hyps);

/// Quotient to the span of the forms: an essential arrangement of the same
/// rank, plus the dimension of the trivial factor that was removed.
std::pair<Arrangement, int> essentialize(const Arrangement& a);

/// Cone of an affine arrangement {alpha . x = c}: homogenize with a new last
/// variable and add the hyperplane at infinity.
Arrangement cone_arrangement(const std::vector<std::pair<Form, Rational>>& affine, int dim);

Arrangement product_arrangement(const Arrangement& a, const Arrangement& b);

/// Every subset of at most min(n, dim-1) hyperplanes is independent.
bool is_generic_arrangement(const Arrangement& a);

/// Matroid connectivity: no nontrivial rank-additive 2-partition.
bool is_irreducible(const Arrangement& a);

// JSON round-trip (schema: dim / field / hyperplanes / multiplicities / labels)
Arrangement parse_arrangement(const std::string& json_text);
std::string arrangement_to_json(const Arrangement& a);
Arrangement load_arrangement(const std::string& path);

template <class K>
Poly<K> form_to_poly(const Form& f, const typename FieldOps<K>::Context& ctx)
{
    Poly<K> p;
    for (int i = 0; i < (int)f.size(); ++i) {
        if (f[i] == 0) continue;
        p.t.push_back({Mono::var(i), FieldOps<K>::from_rational(f[i], ctx)});
    }
    return p;
}

/// Q(A,m) = prod alpha_H^{m(H)}.
template <class K>
Poly<K> defining_poly(const Arrangement& a, const typename FieldOps<K>::Context& ctx)
{
    Poly<K> q = Poly<K>::constant(FieldOps<K>::one(ctx));
    for (int h = 0; h < a.n(); ++h)
        q = q * poly_pow(form_to_poly<K>(a.forms[h], ctx), a.mult[h], ctx);
    return q;
}

}  // namespace tamearr

#endif
