#include "paths.hpp"

#include "local_ops.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace fmz {

PathProfile to_path(const ConfigWord& w) {
    PathProfile p;
    p.heights.reserve(w.length() + 1);
    int h = 0;
    p.heights.push_back(h);
    for (Step s : w.steps()) {
        if (s == Step::U) ++h;
        else if (s == Step::D) --h;
        p.heights.push_back(h);
    }
    return p;
}

namespace {

/// Codes reachable from `w` by one cyclic adjacent (u,f) or (d,f) swap.
std::vector<int64_t> move_neighbors(const ConfigWord& w) {
    const int L = w.length();
    std::vector<int64_t> out;
    for (int i = 0; i < L; ++i) {
        const int k = (i + 1) % L;
        Step a = w.steps()[i], b = w.steps()[k];
        bool swappable = (a == Step::F) != (b == Step::F);  // exactly one flat
        if (!swappable) continue;
        std::vector<Step> steps = w.steps();
        std::swap(steps[i], steps[k]);
        out.push_back(ConfigWord(std::move(steps)).code());
    }
    return out;
}

Orbit orbit_from_codes(int L, const std::set<int64_t>& codes) {
    Orbit o{ConfigWord::from_code(L, *codes.begin()), {}, {}};
    o.members.reserve(codes.size());
    for (int64_t c : codes) o.members.push_back(ConfigWord::from_code(L, c));
    o.sector = sector_of(o.representative);
    return o;
}

}  // namespace

Orbit orbit_of(const ConfigWord& w) {
    const int L = w.length();
    std::set<int64_t> seen{w.code()};
    std::queue<int64_t> frontier;
    frontier.push(w.code());
    while (!frontier.empty()) {
        ConfigWord cur = ConfigWord::from_code(L, frontier.front());
        frontier.pop();
        for (int64_t n : move_neighbors(cur))
            if (seen.insert(n).second) frontier.push(n);
    }
    return orbit_from_codes(L, seen);
}

std::vector<Orbit> all_orbits(int L) {
    if (L < 1) throw std::invalid_argument("zero-length chain");
    std::vector<bool> assigned(pow3(L), false);
    std::vector<Orbit> out;
    for (int64_t c = 0; c < pow3(L); ++c) {
        if (assigned[c]) continue;
        Orbit o = orbit_of(ConfigWord::from_code(L, c));
        for (const ConfigWord& m : o.members) assigned[m.code()] = true;
        out.push_back(std::move(o));
    }
    return out;
}

std::vector<ConfigWord> product_ground_states(int L) {
    if (L < 1) throw std::invalid_argument("zero-length chain");
    std::vector<ConfigWord> out;
    out.reserve((int64_t(1) << L) + 1);
    for (int64_t mask = 0; mask < (int64_t(1) << L); ++mask) {
        std::vector<Step> steps(L);
        for (int i = 0; i < L; ++i)
            steps[i] = (mask >> (L - 1 - i)) & 1 ? Step::D : Step::U;
        out.emplace_back(std::move(steps));
    }
    out.push_back(ConfigWord::all_flat(L));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Orbit> entangled_orbit_classes(int L) {
    if (L < 2) throw std::invalid_argument("need L >= 2");
    std::vector<Orbit> out;
    for (Orbit& o : all_orbits(L)) {
        int f = o.flats();
        if (f >= 1 && f <= L - 1) out.push_back(std::move(o));
    }
    return out;
}

std::vector<Rational> orbit_superposition(const Orbit& o) {
    std::vector<Rational> v(pow3(o.representative.length()), Rational(0));
    for (const ConfigWord& m : o.members) v[m.code()] = 1;
    return v;
}

int64_t necklace_count(int m) {
    if (m < 1) throw std::invalid_argument("necklace length must be positive");
    auto phi = [](int n) {
        int r = n;
        for (int p = 2; p * p <= n; ++p) {
            if (n % p) continue;
            while (n % p == 0) n /= p;
            r -= r / p;
        }
        if (n > 1) r -= r / n;
        return r;
    };
    int64_t total = 0;
    for (int d = 1; d <= m; ++d)
        if (m % d == 0) total += int64_t(phi(d)) * (int64_t(1) << (m / d));
    return total / m;
}

GsdReport gsd(int L, bool with_kernel) {
    if (L < 2) throw std::invalid_argument("need L >= 2");
    GsdReport rep;
    rep.L = L;
    rep.product_count = (int64_t(1) << L) + 1;
    rep.claimed_total = (int64_t(1) << (L + 1)) - 1;
    rep.orbits_per_flat_count.assign(L - 1, 0);
    rep.claimed_per_flat_count.assign(L - 1, 0);
    for (int f = 1; f <= L - 1; ++f)
        rep.claimed_per_flat_count[f - 1] = int64_t(1) << (L - f);
    for (const Orbit& o : entangled_orbit_classes(L)) {
        ++rep.entangled_count;
        ++rep.orbits_per_flat_count[o.flats() - 1];
    }
    rep.constructed_total = rep.product_count + rep.entangled_count;
    rep.matches_claimed = (rep.constructed_total == rep.claimed_total);
    if (with_kernel) {
        ExactMatrix h = hamiltonian({L, 0});
        rep.exact_kernel_dim = h.dim() - exact_rank(h);
        rep.construction_matches_kernel = (*rep.exact_kernel_dim == rep.constructed_total);
        if (!rep.construction_matches_kernel)
            throw std::runtime_error("GSD inconsistency");
    }
    return rep;
}

bool ground_states_span_kernel(int L) {
    ExactMatrix h = hamiltonian({L, 0});
    std::vector<std::map<int64_t, Rational>> candidates;
    auto push = [&](const std::vector<Rational>& v) {
        // every candidate must be exactly annihilated
        for (const Rational& x : h.apply(v))
            if (x != 0) return false;
        std::map<int64_t, Rational> row;
        for (int64_t i = 0; i < static_cast<int64_t>(v.size()); ++i)
            if (v[i] != 0) row.emplace(i, v[i]);
        candidates.push_back(std::move(row));
        return true;
    };
    for (const ConfigWord& w : product_ground_states(L)) {
        std::vector<Rational> v(pow3(L), Rational(0));
        v[w.code()] = 1;
        if (!push(v)) return false;
    }
    for (const Orbit& o : entangled_orbit_classes(L))
        if (!push(orbit_superposition(o))) return false;
    int64_t kernel = h.dim() - exact_rank(h);
    return exact_rank(std::move(candidates)) == kernel;
}

}  // namespace fmz
