#include "tlr/list_tuple.hpp"

#include <algorithm>
#include <string>

namespace tlr {

bool ListTuple::contains(std::size_t i, fe_t sym) const {
    const auto& s = sets[i];
    return std::binary_search(s.begin(), s.end(), sym);
}

void ListTuple::validate(const Field& f) const {
    if (sets.size() != n) throw ValidationError("list tuple: expected " + std::to_string(n) + " sets");
    if (ell == 0) throw ValidationError("list tuple: ell must be >= 1");
    for (std::size_t i = 0; i < n; ++i) {
        const auto& s = sets[i];
        if (s.empty()) throw ValidationError("list tuple: empty set at coordinate " + std::to_string(i));
        if (s.size() > ell)
            throw ValidationError("list tuple: set at coordinate " + std::to_string(i) + " larger than ell");
        for (std::size_t j = 0; j < s.size(); ++j) {
            if (!f.contains(s[j])) throw ValidationError("list tuple: symbol outside field");
            if (j > 0 && s[j] <= s[j - 1])
                throw ValidationError("list tuple: set at coordinate " + std::to_string(i) + " not sorted unique");
        }
    }
}

void canonicalize(ListTuple& tuple) {
    for (auto& s : tuple.sets) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }
}

Rational dist_to_lists(const std::vector<fe_t>& x, const ListTuple& tuple) {
    if (x.size() != tuple.n)
        throw ValidationError("dist_to_lists: word length " + std::to_string(x.size()) + " != tuple length " +
                              std::to_string(tuple.n));
    std::int64_t violations = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!tuple.contains(i, x[i])) ++violations;
    return Rational(violations, static_cast<std::int64_t>(x.size()));
}

Rational dist_words(const std::vector<fe_t>& x, const std::vector<fe_t>& y) {
    if (x.size() != y.size()) throw ValidationError("dist_words: length mismatch");
    std::int64_t diff = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != y[i]) ++diff;
    return Rational(diff, static_cast<std::int64_t>(x.size()));
}

}  // namespace tlr
