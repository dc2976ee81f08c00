#include "hoc/finite.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace hoc {

void validate_group(const FiniteGroup& gp) {
    const std::size_t n = gp.order;
    if (n == 0 || gp.cayley.size() != n)
        throw input_error("group '" + gp.name + "': Cayley table size mismatch");
    for (const auto& row : gp.cayley) {
        if (row.size() != n)
            throw input_error("group '" + gp.name + "': Cayley row size mismatch");
        for (int x : row)
            if (x < 0 || static_cast<std::size_t>(x) >= n)
                throw input_error("group '" + gp.name + "': Cayley entry out of range");
    }
    for (std::size_t g = 0; g < n; ++g) {
        if (gp.mul(0, static_cast<int>(g)) != static_cast<int>(g) ||
            gp.mul(static_cast<int>(g), 0) != static_cast<int>(g))
            throw input_error("group '" + gp.name + "': element 0 is not the identity");
    }
    if (gp.inverses.size() != n)
        throw input_error("group '" + gp.name + "': inverse table size mismatch");
    for (std::size_t g = 0; g < n; ++g)
        if (gp.mul(static_cast<int>(g), gp.inv(static_cast<int>(g))) != 0 ||
            gp.mul(gp.inv(static_cast<int>(g)), static_cast<int>(g)) != 0)
            throw input_error("group '" + gp.name + "': inverse table is wrong at element " +
                              std::to_string(g));
    // associativity spot check on random triples
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);
    std::size_t trials = std::min<std::size_t>(n * n, 500);
    for (std::size_t t = 0; t < trials; ++t) {
        int a = pick(rng), b = pick(rng), c = pick(rng);
        if (gp.mul(gp.mul(a, b), c) != gp.mul(a, gp.mul(b, c)))
            throw input_error("group '" + gp.name + "': associativity fails on (" +
                              std::to_string(a) + "," + std::to_string(b) + "," +
                              std::to_string(c) + ")");
    }
    if (gp.generators.empty())
        throw input_error("group '" + gp.name + "': no generators");
    for (int g : gp.generators)
        if (g < 0 || static_cast<std::size_t>(g) >= n)
            throw input_error("group '" + gp.name + "': generator out of range");
    // generator closure
    std::set<int> reached{0};
    std::vector<int> frontier{0};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier)
            for (int g : gp.generators) {
                int y = gp.mul(g, x);
                if (reached.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    if (reached.size() != n)
        throw input_error("group '" + gp.name + "': generators do not generate");
    // Sigma: contains identity, closed under product, inverse, conjugation
    std::set<int> sigma(gp.sigma.begin(), gp.sigma.end());
    if (!sigma.count(0))
        throw input_error("group '" + gp.name + "': Sigma must contain the identity");
    for (int a : sigma) {
        if (a < 0 || static_cast<std::size_t>(a) >= n)
            throw input_error("group '" + gp.name + "': Sigma element out of range");
        if (!sigma.count(gp.inv(a)))
            throw input_error("group '" + gp.name + "': Sigma not closed under inversion");
        for (int b : sigma)
            if (!sigma.count(gp.mul(a, b)))
                throw input_error("group '" + gp.name + "': Sigma not closed under product");
        for (int g : gp.generators) {
            int conj = gp.mul(gp.mul(g, a), gp.inv(g));
            if (!sigma.count(conj))
                throw input_error("group '" + gp.name + "': Sigma not normal, conjugate of " +
                                  std::to_string(a) + " by generator " + std::to_string(g) +
                                  " escapes");
        }
    }
}

namespace {

FiniteGroup from_permutations(std::string name, std::vector<std::vector<int>> elements,
                              const std::vector<std::vector<int>>& generator_perms) {
    auto compose = [](const std::vector<int>& p, const std::vector<int>& q) {
        std::vector<int> r(p.size());
        for (std::size_t i = 0; i < p.size(); ++i)
            r[i] = p[static_cast<std::size_t>(q[i])];
        return r;
    };
    // identity first
    std::vector<int> id(elements[0].size());
    std::iota(id.begin(), id.end(), 0);
    std::stable_sort(elements.begin(), elements.end(),
                     [&](const auto& a, const auto& b) { return (a == id) > (b == id); });
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < elements.size(); ++i) index[elements[i]] = static_cast<int>(i);

    FiniteGroup gp;
    gp.name = std::move(name);
    gp.order = elements.size();
    gp.cayley.assign(gp.order, std::vector<int>(gp.order));
    gp.inverses.assign(gp.order, 0);
    for (std::size_t a = 0; a < gp.order; ++a)
        for (std::size_t b = 0; b < gp.order; ++b)
            gp.cayley[a][b] = index.at(compose(elements[a], elements[b]));
    for (std::size_t a = 0; a < gp.order; ++a) {
        std::vector<int> inv(elements[a].size());
        for (std::size_t i = 0; i < inv.size(); ++i)
            inv[static_cast<std::size_t>(elements[a][i])] = static_cast<int>(i);
        gp.inverses[a] = index.at(inv);
    }
    for (const auto& p : generator_perms) gp.generators.push_back(index.at(p));
    gp.sigma = {0};
    validate_group(gp);
    return gp;
}

std::vector<std::vector<int>> all_permutations(int k, bool even_only) {
    std::vector<int> base(static_cast<std::size_t>(k));
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> out;
    std::vector<int> p = base;
    do {
        if (even_only) {
            int inversions = 0;
            for (std::size_t i = 0; i < p.size(); ++i)
                for (std::size_t j = i + 1; j < p.size(); ++j)
                    if (p[i] > p[j]) ++inversions;
            if (inversions % 2) continue;
        }
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

} // namespace

FiniteGroup cyclic_group(int n) {
    if (n < 1) throw input_error("cyclic_group: order must be >= 1");
    FiniteGroup gp;
    gp.name = "Z" + std::to_string(n);
    gp.order = static_cast<std::size_t>(n);
    gp.cayley.assign(gp.order, std::vector<int>(gp.order));
    gp.inverses.assign(gp.order, 0);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            gp.cayley[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
        gp.inverses[static_cast<std::size_t>(a)] = (n - a) % n;
    }
    gp.generators = {n > 1 ? 1 : 0};
    gp.sigma = {0};
    validate_group(gp);
    return gp;
}

FiniteGroup symmetric_3() {
    auto elems = all_permutations(3, false);
    return from_permutations("S3", elems, {{1, 0, 2}, {1, 2, 0}});
}

FiniteGroup alternating_5() {
    auto elems = all_permutations(5, true);
    // (0 1 2) and (0 1 2 3 4), both even
    std::vector<int> c3{1, 2, 0, 3, 4};
    std::vector<int> c5{1, 2, 3, 4, 0};
    return from_permutations("A5", elems, {c3, c5});
}

bool perfect_check(const FiniteGroup& gp) {
    // I = I^2 over every field iff the abelianization vanishes; over Q the
    // equality is automatic, so test each prime dividing the order
    FiniteGroup plain = gp;
    plain.sigma = {0};
    std::size_t rem = gp.order;
    for (std::size_t p = 2; p <= rem; ++p) {
        if (rem % p != 0) continue;
        while (rem % p == 0) rem /= p;
        auto t = ideal_tower(plain, Fp(1, std::uint32_t(p)), 2);
        if (t[0].dim() != t[1].dim()) return false;
    }
    return true;
}

} // namespace hoc
