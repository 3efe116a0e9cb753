#include "legdef/semigroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace legdef {

bool SemigroupData::contains(int n) const {
    if (n < 0) return false;
    if (n >= conductor) return true;
    return !std::binary_search(gaps.begin(), gaps.end(), n);
}

SemigroupData semigroup_from_generators(const std::vector<int>& gens) {
    int g = 0;
    for (int v : gens) {
        if (v <= 0) throw std::invalid_argument("semigroup: generators must be positive");
        g = std::gcd(g, v);
    }
    if (g != 1) throw std::invalid_argument("semigroup: generators must have gcd 1");

    int bound = 1;
    for (int v : gens) bound = std::max(bound, v);
    bound = bound * bound + 1;  // Frobenius number < max^2 for gcd-1 sets
    std::vector<char> in(bound + 1, 0);
    in[0] = 1;
    for (int n = 1; n <= bound; ++n)
        for (int v : gens)
            if (n >= v && in[n - v]) {
                in[n] = 1;
                break;
            }

    SemigroupData s;
    int conductor = 0;
    for (int n = bound; n >= 1; --n)
        if (!in[n]) {
            conductor = n + 1;
            break;
        }
    s.conductor = conductor;
    for (int n = 1; n < conductor; ++n)
        if (!in[n]) s.gaps.push_back(n);
    for (int n = 1; n <= bound; ++n) {
        if (!in[n]) continue;
        bool sum = false;
        for (int v = 1; v < n && !sum; ++v)
            if (in[v] && v >= 1 && in[n - v] && n - v >= 1) sum = true;
        if (!sum) s.generators.push_back(n);
        if (n >= conductor + *std::max_element(gens.begin(), gens.end())) break;
    }
    return s;
}

namespace {

// Orders realized by the reduced basis, echelonized by leading degree.
struct OrderBasis {
    int limit;  // orders certified strictly below this
    std::map<int, TruncSeries> by_order;

    // Reduce s against the basis; insert if a new order below limit
    // appears. Returns true if the basis grew.
    bool absorb(TruncSeries s) {
        for (;;) {
            if (s.known_zero()) return false;
            int o = s.order();
            if (o >= limit) return false;
            auto it = by_order.find(o);
            if (it == by_order.end()) {
                by_order[o] = s * (1 / s.coeff(o));
                return true;
            }
            s = s - it->second * s.coeff(o);
        }
    }
};

}  // namespace

SemigroupData semigroup_of_subring(const std::vector<TruncSeries>& raw_gens) {
    if (raw_gens.empty()) throw std::invalid_argument("semigroup_of_subring: no generators");
    int limit = raw_gens.front().trunc;
    for (auto& g : raw_gens) limit = std::min(limit, g.trunc);

    // Drop constant parts so every generator has positive order.
    std::vector<TruncSeries> gens;
    for (auto& g : raw_gens) {
        TruncSeries h = g.truncated(limit);
        h.set(0, Rat(0));
        if (!h.known_zero()) gens.push_back(h);
    }
    if (gens.empty()) throw std::invalid_argument("semigroup_of_subring: all generators constant");

    OrderBasis basis{limit, {}};
    basis.absorb(TruncSeries::monomial(0, 1, limit));

    // Degree-D monomials in the generators, tagged with the last factor
    // index so each multiset is built once.
    std::vector<std::pair<TruncSeries, size_t>> layer{{TruncSeries::monomial(0, 1, limit), 0}};
    const int max_degree = 60;
    std::set<int> prev_orders;

    for (int degree = 1; degree <= max_degree; ++degree) {
        std::vector<std::pair<TruncSeries, size_t>> next;
        for (auto& [m, last] : layer)
            for (size_t i = last; i < gens.size(); ++i) {
                TruncSeries p = m * gens[i];
                if (p.known_zero() || p.order() >= limit) continue;
                next.push_back({std::move(p), i});
            }
        for (auto& [p, last] : next) basis.absorb(p);
        layer = std::move(next);

        std::set<int> orders;
        for (auto& [o, s] : basis.by_order) orders.insert(o);

        int g = 0;
        for (int o : orders)
            if (o > 0) g = std::gcd(g, o);
        bool stable = (orders == prev_orders);
        prev_orders = orders;
        if (g != 1 || !stable || degree < 2) continue;

        // candidate conductor: start of the full tail below the limit
        int c = limit;
        while (c > 0 && orders.count(c - 1)) --c;
        if (c >= limit - 1) continue;  // no certified tail yet

        // closure under addition within the certified window
        bool closed = true;
        for (int a : orders) {
            if (!closed) break;
            for (int b : orders) {
                if (a + b >= limit) break;
                if (!orders.count(a + b)) {
                    closed = false;
                    break;
                }
            }
        }
        if (!closed) continue;

        SemigroupData s;
        s.conductor = c;
        for (int n = 1; n < c; ++n)
            if (!orders.count(n)) s.gaps.push_back(n);
        int smallest = 0;
        for (int n : orders)
            if (n > 0) {
                smallest = n;
                break;
            }
        // minimal generators lie below c + smallest; the max keeps the
        // single generator of the full semigroup (c = 0) in range
        for (int n : orders) {
            if (n <= 0) continue;
            if (n >= std::max(c, 1) + smallest) break;
            bool sum = false;
            for (int a : orders) {
                if (a <= 0) continue;
                if (a >= n) break;
                if (n - a >= 1 && orders.count(n - a)) {
                    sum = true;
                    break;
                }
            }
            if (!sum) s.generators.push_back(n);
        }
        return s;
    }
    throw StabilizationFailure(
        "semigroup_of_subring: failed to stabilize; raise the truncation order of the inputs");
}

std::vector<int> char_exponents(const SemigroupData& s) {
    const std::vector<int>& v = s.generators;
    if (v.empty()) throw std::invalid_argument("char_exponents: empty generator list");
    std::vector<int> beta{v[0]};
    if (v[0] == 1) return beta;
    int e_prev = v[0];
    for (size_t i = 1; i < v.size(); ++i) {
        int e = std::gcd(e_prev, v[i]);
        if (e == e_prev) throw std::invalid_argument("char_exponents: generator does not refine gcd");
        if (i == 1)
            beta.push_back(v[1]);
        else
            beta.push_back(v[i] - (e_prev / e) * v[i - 1] + beta.back());
        e_prev = e;
        if (e == 1 && i + 1 < v.size()) {
            // remaining generators lie in the semigroup already
            break;
        }
    }
    if (e_prev != 1) throw std::invalid_argument("char_exponents: gcd chain does not reach 1");
    return beta;
}

}  // namespace legdef
