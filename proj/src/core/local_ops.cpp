#include "local_ops.hpp"

#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace fmz {

namespace {

struct KetPair {
    int coef;  // +1 / -1
    Step a, b;
};

// |psi><psi| on links (j, j+1) tensored with identity, psi = sum coef |a_j b_{j+1}>.
ExactMatrix two_link_outer(int j, int L, const std::vector<KetPair>& psi) {
    if (L < 2) throw std::invalid_argument("chain too short for a two-link operator");
    if (j < 1 || j > L) throw std::invalid_argument("link index out of range");
    const int j0 = j - 1;
    const int j1 = j % L;
    const int64_t dim = pow3(L);
    ExactMatrix m(dim);
    for (int64_t code = 0; code < dim; ++code) {
        ConfigWord w = ConfigWord::from_code(L, code);
        int amp = 0;
        for (const auto& kp : psi)
            if (w.steps()[j0] == kp.a && w.steps()[j1] == kp.b) amp += kp.coef;
        if (amp == 0) continue;
        for (const auto& kp : psi) {
            std::vector<Step> steps = w.steps();
            steps[j0] = kp.a;
            steps[j1] = kp.b;
            m.add(ConfigWord(std::move(steps)).code(), code, Rational(kp.coef * amp));
        }
    }
    return m;
}

const std::vector<KetPair>& psi_U() {
    static const std::vector<KetPair> p{{1, Step::U, Step::F}, {-1, Step::F, Step::U}};
    return p;
}
const std::vector<KetPair>& psi_D() {
    static const std::vector<KetPair> p{{1, Step::D, Step::F}, {-1, Step::F, Step::D}};
    return p;
}
const std::vector<KetPair>& psi_F() {
    static const std::vector<KetPair> p{{1, Step::F, Step::F}, {-1, Step::U, Step::D}};
    return p;
}

}  // namespace

ExactMatrix local_U(int j, int L) { return two_link_outer(j, L, psi_U()); }
ExactMatrix local_D(int j, int L) { return two_link_outer(j, L, psi_D()); }
ExactMatrix local_F(int j, int L) { return two_link_outer(j, L, psi_F()); }

ExactMatrix local_e(int j, int L) { return local_U(j, L) + local_D(j, L); }

ExactMatrix hamiltonian(const HamiltonianSpec& spec) {
    const int L = spec.length;
    if (L < 2) throw std::invalid_argument("hamiltonian needs L >= 2");
    if (spec.epsilon < 0) throw std::invalid_argument("epsilon must be nonnegative");
    ExactMatrix h(pow3(L));
    for (int j = 1; j <= L; ++j) {
        h = h + local_e(j, L);
        if (spec.epsilon != 0) h = h + local_F(j, L).scaled(spec.epsilon);
    }
    return h;
}

ExactMatrix sector_hamiltonian(int L, const SectorLabel& sector) {
    if (L < 2) throw std::invalid_argument("hamiltonian needs L >= 2");
    auto words = enumerate_sector(L, sector);
    std::unordered_map<int64_t, int64_t> index;
    index.reserve(words.size());
    for (int64_t i = 0; i < static_cast<int64_t>(words.size()); ++i)
        index[words[i].code()] = i;
    ExactMatrix h(static_cast<int64_t>(words.size()));
    for (int64_t i = 0; i < static_cast<int64_t>(words.size()); ++i) {
        const auto& w = words[i].steps();
        for (int j = 1; j <= L; ++j) {
            const int j0 = j - 1;
            const int j1 = j % L;
            for (const auto* psi : {&psi_U(), &psi_D()}) {
                int amp = 0;
                for (const auto& kp : *psi)
                    if (w[j0] == kp.a && w[j1] == kp.b) amp += kp.coef;
                if (amp == 0) continue;
                for (const auto& kp : *psi) {
                    std::vector<Step> steps = w;
                    steps[j0] = kp.a;
                    steps[j1] = kp.b;
                    h.add(index.at(ConfigWord(std::move(steps)).code()), i,
                          Rational(kp.coef * amp));
                }
            }
        }
    }
    return h;
}

NumberOps number_ops(int L) {
    if (L < 1) throw std::invalid_argument("zero-length chain");
    const int64_t dim = pow3(L);
    NumberOps ops{ExactMatrix(dim), ExactMatrix(dim), ExactMatrix(dim)};
    for (int64_t code = 0; code < dim; ++code) {
        SectorLabel s = sector_of(ConfigWord::from_code(L, code));
        ops.n_u.set(code, code, s.u);
        ops.n_d.set(code, code, s.d);
        ops.n_f.set(code, code, s.f());
    }
    return ops;
}

ExactMatrix projector_Pd(int L) {
    if (L < 1) throw std::invalid_argument("zero-length chain");
    const int64_t dim = pow3(L);
    ExactMatrix p(dim);
    for (int64_t code = 0; code < dim; ++code) {
        ConfigWord w = ConfigWord::from_code(L, code);
        std::vector<Step> steps = w.steps();
        for (Step& s : steps)
            if (s == Step::D) s = Step::U;
        p.add(ConfigWord(std::move(steps)).code(), code, 1);
    }
    return p;
}

ExactMatrix interchange_op(int L) {
    if (L < 1) throw std::invalid_argument("zero-length chain");
    const int64_t dim = pow3(L);
    ExactMatrix s(dim);
    for (int64_t code = 0; code < dim; ++code)
        s.set(ConfigWord::from_code(L, code).swapped_ud().code(), code, 1);
    return s;
}

ExactMatrix translation_op(int L) {
    if (L < 1) throw std::invalid_argument("zero-length chain");
    const int64_t dim = pow3(L);
    ExactMatrix t(dim);
    for (int64_t code = 0; code < dim; ++code)
        t.set(ConfigWord::from_code(L, code).translated(1).code(), code, 1);
    return t;
}

ExactMatrix two_site_sum(int L, const SiteMatrix& a, const SiteMatrix& b) {
    if (L < 2) throw std::invalid_argument("chain too short");
    const int64_t dim = pow3(L);
    ExactMatrix m(dim);
    for (int j = 1; j <= L; ++j) {
        const int j0 = j - 1;
        const int j1 = j % L;
        for (int64_t code = 0; code < dim; ++code) {
            ConfigWord w = ConfigWord::from_code(L, code);
            const int sa = static_cast<int>(w.steps()[j0]);
            const int sb = static_cast<int>(w.steps()[j1]);
            for (int ta = 0; ta < 3; ++ta) {
                if (a[ta][sa] == 0) continue;
                for (int tb = 0; tb < 3; ++tb) {
                    if (b[tb][sb] == 0) continue;
                    std::vector<Step> steps = w.steps();
                    steps[j0] = static_cast<Step>(ta);
                    steps[j1] = static_cast<Step>(tb);
                    m.add(ConfigWord(std::move(steps)).code(), code, a[ta][sa] * b[tb][sb]);
                }
            }
        }
    }
    return m;
}

namespace site {

namespace {
SiteMatrix zero() { return SiteMatrix{}; }
}  // namespace

SiteMatrix one_u() {
    auto m = zero();
    m[0][0] = 1;
    m[1][1] = 1;
    return m;
}
SiteMatrix one_d() {
    auto m = zero();
    m[1][1] = 1;
    m[2][2] = 1;
    return m;
}
SiteMatrix u_z() {
    auto m = zero();
    m[0][0] = 1;
    m[1][1] = -1;
    return m;
}
SiteMatrix d_z() {
    auto m = zero();
    m[1][1] = 1;
    m[2][2] = -1;
    return m;
}
SiteMatrix u_plus() {
    auto m = zero();
    m[0][1] = 1;  // |u><f|
    return m;
}
SiteMatrix u_minus() {
    auto m = zero();
    m[1][0] = 1;  // |f><u|
    return m;
}
SiteMatrix d_plus() {
    auto m = zero();
    m[1][2] = 1;  // |f><d|
    return m;
}
SiteMatrix d_minus() {
    auto m = zero();
    m[2][1] = 1;  // |d><f|
    return m;
}

}  // namespace site

}  // namespace fmz
