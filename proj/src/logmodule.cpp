#include "tamearr/logmodule.hpp"

namespace tamearr {

std::vector<std::vector<int>> subsets_of(int l, int p)
{
    std::vector<std::vector<int>> out;
    if (p < 0 || p > l) return out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if ((int)cur.size() == p) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i <= l - (p - (int)cur.size()); ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

int subset_index(const std::vector<std::vector<int>>& subs, const std::vector<int>& s)
{
    for (int i = 0; i < (int)subs.size(); ++i)
        if (subs[i] == s) return i;
    throw std::logic_error("subset not found (internal bug)");
}

}  // namespace tamearr
