#include "seb/bijections.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "seb/core_numbers.hpp"

namespace seb {

namespace {

std::vector<int> sorted_subset(std::vector<int> s, int n, const char* who) {
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw std::invalid_argument(std::string(who) + ": repeated element");
    if (!s.empty() && (s.front() < 1 || s.back() > n))
        throw std::invalid_argument(std::string(who) + ": element outside 1..n");
    return s;
}

std::vector<int> complement_of(const std::vector<int>& s, int n) {
    std::vector<int> out;
    std::size_t t = 0;
    for (int v = 1; v <= n; ++v) {
        if (t < s.size() && s[t] == v)
            ++t;
        else
            out.push_back(v);
    }
    return out;
}

std::string subset_str(const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

}  // namespace

RelabelMap::RelabelMap(int n, std::vector<int> u, std::vector<int> v)
    : n_(n),
      u_(sorted_subset(std::move(u), n, "RelabelMap")),
      v_(sorted_subset(std::move(v), n, "RelabelMap")),
      tau_(TypeAPermutation::identity(n)) {
    if (u_.size() != v_.size())
        throw std::invalid_argument("RelabelMap: |U| != |V|");
    std::vector<int> image(n + 1, 0);
    for (std::size_t t = 0; t < u_.size(); ++t) image[u_[t]] = v_[t];
    auto cu = complement_of(u_, n), cv = complement_of(v_, n);
    for (std::size_t t = 0; t < cu.size(); ++t) image[cu[t]] = cv[t];
    std::vector<int> entries(image.begin() + 1, image.end());
    tau_ = TypeAPermutation(std::move(entries));
}

int RelabelMap::apply(int value) const {
    if (value == 0) return 0;
    return value > 0 ? tau_.entry(value) : -tau_.entry(-value);
}

RelabelMap build_relabel(int n, const std::vector<int>& u, const std::vector<int>& v) {
    return RelabelMap(n, u, v);
}

SignedPermutation apply_relabel(const RelabelMap& map, const SignedPermutation& sigma) {
    if (sigma.n() != map.n())
        throw std::invalid_argument("apply_relabel: size mismatch");
    if (stats(sigma).negative_set != map.u())
        throw std::invalid_argument("apply_relabel: negative set of " + sigma.str() +
                                    " is not " + subset_str(map.u()));
    std::vector<int> entries;
    entries.reserve(sigma.n());
    for (int i = 1; i <= sigma.n(); ++i) entries.push_back(map.apply(sigma.entry(i)));
    return SignedPermutation(std::move(entries));
}

bool fn_image_predicate(const SignedPermutation& tau) {
    // negative set must be an initial segment of 1..n in absolute value
    auto neg = stats(tau).negative_set;
    for (std::size_t t = 0; t < neg.size(); ++t)
        if (neg[t] != static_cast<int>(t) + 1) return false;
    return true;
}

SignedPermutation f_map(const TypeAPermutation& sigma) {
    const int n = sigma.n() - 1;
    if (n < 0) throw std::invalid_argument("f_map: empty permutation");
    const int first = sigma.entry(1);
    std::vector<int> entries;
    entries.reserve(n);
    for (int i = 1; i <= n; ++i) {
        int next = sigma.entry(i + 1);
        entries.push_back(next < first ? next - first : next - 1);
    }
    return SignedPermutation(std::move(entries));
}

TypeAPermutation f_inverse(const SignedPermutation& tau) {
    if (!fn_image_predicate(tau))
        throw NotInImageError("f_inverse: " + tau.str() +
                              " has a positive entry below a negative one");
    const int n = tau.n();
    const int first = stats(tau).neg + 1;
    std::vector<int> entries;
    entries.reserve(n + 1);
    entries.push_back(first);
    for (int i = 1; i <= n; ++i) {
        int v = tau.entry(i);
        entries.push_back(v < 0 ? v + first : v + 1);
    }
    return TypeAPermutation(std::move(entries));
}

Report verify_relabel_theorem(int n_max, int cap) {
    Report rep("relabel-bijection");
    for (int n = 0; n <= n_max; ++n) {
        // subsets by size
        std::vector<std::vector<std::vector<int>>> by_size(n + 1);
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> s;
            for (int v = 1; v <= n; ++v)
                if (mask & (1u << (v - 1))) s.push_back(v);
            by_size[s.size()].push_back(std::move(s));
        }

        auto counts = oracle_b_set_table(n, cap);
        auto mask_of = [&](const std::vector<int>& s) {
            std::uint32_t m = 0;
            for (int v : s) m |= 1u << (v - 1);
            return m;
        };

        for (int j = 0; j <= n; ++j)
            for (const auto& u : by_size[j])
                for (const auto& v : by_size[j])
                    for (int k = 0; k <= n; ++k)
                        rep.check_eq(counts[k][mask_of(u)], counts[k][mask_of(v)],
                                     "|B(n,k,U)| = |B(n,k,V)| when |U| = |V|",
                                     "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                         " U=" + subset_str(u) + " V=" + subset_str(v));

        for_each_signed_permutation(
            n,
            [&](std::span<const int> seq) {
                SignedPermutation sigma(std::vector<int>(seq.begin() + 1, seq.end()));
                DescentStats before = stats(sigma);
                for (const auto& v : by_size[before.neg]) {
                    RelabelMap fwd(n, before.negative_set, v);
                    SignedPermutation image = apply_relabel(fwd, sigma);
                    DescentStats after = stats(image);
                    rep.check(after.des == before.des, "relabeling preserves descents",
                              sigma.str() + " -> " + image.str());
                    rep.check(after.negative_set == v, "relabeled negative set is V",
                              sigma.str() + " -> " + image.str());
                    RelabelMap back(n, v, before.negative_set);
                    rep.check(apply_relabel(back, image) == sigma,
                              "inverse relabeling restores the input", sigma.str());
                }
            },
            cap);
    }
    return rep;
}

Report verify_bijection_theorem(int n_max, int cap) {
    Report rep("fold-down-bijection");
    for (int n = 0; n <= n_max; ++n) {
        LittleBTable little(n);
        std::set<std::vector<int>> images;
        std::map<std::pair<int, int>, long long> source_cells;

        for_each_type_a_permutation(
            n + 1,
            [&](std::span<const int> seq) {
                TypeAPermutation sigma(std::vector<int>(seq.begin(), seq.end()));
                SignedPermutation folded = f_map(sigma);
                DescentStats st = stats(folded);
                int k = sigma.descent_count();
                rep.check(st.des == k, "fold preserves descent count",
                          sigma.str() + " -> " + folded.str());
                rep.check(st.neg == sigma.entry(1) - 1, "sign count is first letter minus one",
                          sigma.str() + " -> " + folded.str());
                rep.check(fn_image_predicate(folded), "image satisfies the predicate",
                          folded.str());
                rep.check(f_inverse(folded) == sigma, "inverse undoes fold", sigma.str());
                images.insert(folded.sequence());
                ++source_cells[{k, sigma.entry(1) - 1}];
            },
            std::max(cap + 1, kTypeAEnumCap));

        rep.check_eq(factorial(n + 1), BigInt(images.size()), "fold is injective",
                     "n=" + std::to_string(n));

        // image = predicate set, and target cells have the predicted sizes
        std::map<std::pair<int, int>, long long> target_cells;
        for_each_signed_permutation(
            n,
            [&](std::span<const int> seq) {
                SignedPermutation tau(std::vector<int>(seq.begin() + 1, seq.end()));
                bool in_image = images.count(tau.sequence()) > 0;
                rep.check(fn_image_predicate(tau) == in_image,
                          "predicate characterizes the image", tau.str());
                if (in_image) {
                    DescentStats st = stats(tau);
                    ++target_cells[{st.des, st.neg}];
                }
            },
            cap);

        for (int k = 0; k <= n; ++k)
            for (int j = 0; j <= n; ++j) {
                auto s = source_cells.find({k, j});
                auto t = target_cells.find({k, j});
                long long sc = s == source_cells.end() ? 0 : s->second;
                long long tc = t == target_cells.end() ? 0 : t->second;
                rep.check_eq(sc, tc, "cell sizes match across the bijection",
                             "(n,k,j)=(" + std::to_string(n) + "," + std::to_string(k) + "," +
                                 std::to_string(j) + ")");
                rep.check_eq(little.at(n, k, j), BigInt(tc),
                             "image cell size equals b(n,k,j)",
                             "(n,k,j)=(" + std::to_string(n) + "," + std::to_string(k) + "," +
                                 std::to_string(j) + ")");
            }
    }
    return rep;
}

}  // namespace seb
