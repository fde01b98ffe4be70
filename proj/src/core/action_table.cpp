#include "action_table.hpp"

#include "local_ops.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace fmz {

namespace {

int wrap_pos(int p, int L) { return (p - 1 + L) % L + 1; }

struct Ket {
    int p1, p2;  // positions of particle 1 and particle 2 (flavor-tied)
};

struct Expected {
    std::map<int64_t, Rational> amplitudes;
    bool wrap_involved = false;
    bool collision = false;
};

int64_t place(int L, const std::string& flavors, int p1, int p2) {
    std::vector<Step> steps(L, Step::F);
    steps[p1 - 1] = flavors[0] == 'u' ? Step::U : Step::D;
    steps[p2 - 1] = flavors[1] == 'u' ? Step::U : Step::D;
    return ConfigWord(std::move(steps)).code();
}

std::string describe(int L, const std::map<int64_t, Rational>& amps) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [code, c] : amps) {
        if (!first) os << " + ";
        first = false;
        os << format_rational(c) << "*|" << ConfigWord::from_code(L, code).str() << ">";
    }
    return first ? "0" : os.str();
}

}  // namespace

ActionTableReport action_table(int L, const std::string& flavors) {
    if (L < 4) throw std::invalid_argument("need L >= 4");
    if (flavors.size() != 2 || flavors.find_first_not_of("ud") != std::string::npos)
        throw std::invalid_argument("flavors must be two symbols over {u, d}");

    ActionTableReport rep;
    rep.L = L;
    rep.flavors = flavors;

    struct Equation {
        std::string name;
        ExactMatrix op;
        // expected ket per the printed case split; shift positions cyclically
        std::function<Expected(int n1, int n2)> expect;
    };

    auto hop = [&](int dp1_adj, int dp2_adj, bool zero_adj, int dp1_sep, int dp2_sep) {
        return [=, this_L = L, fl = flavors](int n1, int n2) {
            Expected e;
            bool adjacent = (n2 == n1 + 1);
            int q1, q2;
            if (adjacent) {
                if (zero_adj) return e;  // printed action is 0
                q1 = n1 + dp1_adj;
                q2 = n1 + dp2_adj;
            } else {
                q1 = n1 + dp1_sep;
                q2 = n2 + dp2_sep;
            }
            int w1 = wrap_pos(q1, this_L), w2 = wrap_pos(q2, this_L);
            e.wrap_involved = (w1 != q1) || (w2 != q2);
            if (w1 == w2) {
                e.collision = true;
                return e;
            }
            e.amplitudes.emplace(place(this_L, fl, w1, w2), Rational(1));
            return e;
        };
    };

    auto scalar_eq = [&](const Rational& adj, const Rational& sep) {
        return [=, this_L = L, fl = flavors](int n1, int n2) {
            Expected e;
            Rational c = (n2 == n1 + 1) ? adj : sep;
            if (c != 0) e.amplitudes.emplace(place(this_L, fl, n1, n2), c);
            return e;
        };
    };

    std::vector<Equation> eqs;
    eqs.push_back({"sum 1u_j 1u_{j+1} / 2 = (L-2)/2",
                   two_site_sum(L, site::one_u(), site::one_u()).scaled(Rational(1, 2)),
                   scalar_eq(Rational(L - 2, 2), Rational(L - 2, 2))});
    eqs.push_back({"sum 1d_j 1d_{j+1} / 2 = (L-2)/2",
                   two_site_sum(L, site::one_d(), site::one_d()).scaled(Rational(1, 2)),
                   scalar_eq(Rational(L - 2, 2), Rational(L - 2, 2))});
    eqs.push_back({"sum u+_j u-_{j+1}", two_site_sum(L, site::u_plus(), site::u_minus()),
                   hop(-1, +1, false, -1, 0)});
    eqs.push_back({"sum d+_j d-_{j+1}", two_site_sum(L, site::d_plus(), site::d_minus()),
                   hop(0, 0, true, 0, -1)});
    eqs.push_back({"sum u-_j u+_{j+1}", two_site_sum(L, site::u_minus(), site::u_plus()),
                   hop(0, 0, true, +1, 0)});
    eqs.push_back({"sum d-_j d+_{j+1}", two_site_sum(L, site::d_minus(), site::d_plus()),
                   hop(0, +2, false, 0, +1)});
    eqs.push_back({"sum (uz_j/2)(uz_{j+1}/2)",
                   two_site_sum(L, site::u_z(), site::u_z()).scaled(Rational(1, 4)),
                   scalar_eq(Rational(L - 4, 4), Rational(L - 6, 4))});
    eqs.push_back({"sum (dz_j/2)(dz_{j+1}/2)",
                   two_site_sum(L, site::d_z(), site::d_z()).scaled(Rational(1, 4)),
                   scalar_eq(Rational(L - 4, 4), Rational(L - 6, 4))});

    for (Equation& eq : eqs) {
        EquationAudit audit;
        audit.equation = eq.name;
        for (int n1 = 1; n1 <= L; ++n1) {
            for (int n2 = n1 + 1; n2 <= L; ++n2) {
                ActionCase ac;
                ac.n1 = n1;
                ac.n2 = n2;
                ac.adjacent = (n2 == n1 + 1);

                std::vector<Rational> unit(pow3(L), Rational(0));
                unit[place(L, flavors, n1, n2)] = 1;
                std::vector<Rational> image = eq.op.apply(unit);
                std::map<int64_t, Rational> actual;
                for (int64_t i = 0; i < static_cast<int64_t>(image.size()); ++i)
                    if (image[i] != 0) actual.emplace(i, image[i]);

                Expected exp = eq.expect(n1, n2);
                ac.wrap_involved = exp.wrap_involved || (n1 == 1 && n2 == L);
                if (exp.collision) {
                    ac.match = false;
                    ac.note = "printed ket collides two particles; actual: " +
                              describe(L, actual);
                } else {
                    ac.match = (actual == exp.amplitudes);
                    if (!ac.match) ac.note = "actual: " + describe(L, actual);
                }
                (ac.match ? audit.matches : audit.mismatches)++;
                audit.cases.push_back(std::move(ac));
            }
        }
        rep.total_matches += audit.matches;
        rep.total_mismatches += audit.mismatches;
        rep.equations.push_back(std::move(audit));
    }
    return rep;
}

}  // namespace fmz
