#ifndef TAMEARR_LOCALFREE_HPP
#define TAMEARR_LOCALFREE_HPP

#include "tamearr/lattice.hpp"
#include "tamearr/logmodule.hpp"

namespace tamearr {

struct FlatCheck {
    std::vector<int> hyps;
    int rank = 0;
    bool free = false;
    std::vector<int> exponents;
    bool by_rank2 = false;  // rank <= 2 flats are free without computation
};

struct LocalFreeEvidence {
    bool locally_free = false;
    std::vector<FlatCheck> flats;
};

/// Freeness of every localization at a nonzero flat contained in hyperplane h
/// (h = -1: every nonzero proper flat, i.e. global local freeness). The
/// center {0} of an essential arrangement is excluded.
template <class K>
LocalFreeEvidence locally_free_along(const Arrangement& a, int h,
                                     const typename FieldOps<K>::Context& ctx,
                                     const Budget& budget = Budget::unlimited())
{
    LocalFreeEvidence out;
    out.locally_free = true;
    Lattice l = intersection_lattice(a);
    int center = forms_rank(a.forms, a.dim) == a.dim ? a.dim : -1;
    for (const auto& f : l.flats) {
        if (f.codim == 0) continue;
        if (f.codim == center) continue;  // the origin is excluded
        if (h >= 0 && !std::binary_search(f.hyps.begin(), f.hyps.end(), h)) continue;
        FlatCheck fc;
        fc.hyps = f.hyps;
        fc.rank = f.codim;
        if (f.codim <= 2) {
            fc.free = true;
            fc.by_rank2 = true;
        } else {
            budget.check();
            auto [ess, trivial] = essentialize(localize(a, f.hyps));
            (void)trivial;
            auto fr = is_free<K>(ess, ctx, budget);
            fc.free = fr.free;
            fc.exponents = fr.exponents;
            if (!fc.free) out.locally_free = false;
        }
        out.flats.push_back(std::move(fc));
    }
    return out;
}

/// Freeness of every localization at a nonzero flat contained in the
/// hyperplane {alpha = 0}, which need not belong to the arrangement (the
/// typical case: local freeness of a deletion along the deleted hyperplane).
template <class K>
LocalFreeEvidence locally_free_along_form(const Arrangement& a, const Form& alpha,
                                          const typename FieldOps<K>::Context& ctx,
                                          const Budget& budget = Budget::unlimited())
{
    int h = a.find_form(alpha);
    if (h >= 0) return locally_free_along<K>(a, h, ctx, budget);
    // adjoin the hyperplane to stratify its points by flats, then localize
    // the original arrangement at each stratum
    Arrangement aug = a;
    aug.forms.push_back(normalize_form(Form(alpha)));
    aug.mult.push_back(1);
    if (!aug.labels.empty()) aug.labels.push_back("");
    int hn = aug.n() - 1;
    LocalFreeEvidence out;
    out.locally_free = true;
    Lattice l = intersection_lattice(aug);
    for (const auto& f : l.flats) {
        if (f.codim <= 1) continue;      // the hyperplane itself localizes to {}
        if (f.codim == a.dim) continue;  // the origin is excluded
        if (!std::binary_search(f.hyps.begin(), f.hyps.end(), hn)) continue;
        FlatCheck fc;
        for (int g : f.hyps)
            if (g != hn) fc.hyps.push_back(g);
        fc.rank = forms_rank([&] {
            std::vector<Form> fs;
            for (int g : fc.hyps) fs.push_back(a.forms[g]);
            return fs;
        }(), a.dim);
        if (fc.rank <= 2) {
            fc.free = true;
            fc.by_rank2 = true;
        } else {
            budget.check();
            auto [ess, trivial] = essentialize(a.subarrangement(fc.hyps));
            (void)trivial;
            auto fr = is_free<K>(ess, ctx, budget);
            fc.free = fr.free;
            fc.exponents = fr.exponents;
            if (!fc.free) out.locally_free = false;
        }
        out.flats.push_back(std::move(fc));
    }
    return out;
}

}  // namespace tamearr

#endif
