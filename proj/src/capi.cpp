#include "fmz.h"

#include "core/action_table.hpp"
#include "core/bethe.hpp"
#include "core/local_ops.hpp"
#include "core/paths.hpp"
#include "core/spectra.hpp"
#include "core/tl_algebra.hpp"

#include <json.hpp>

#include <exception>
#include <random>
#include <string>

using nlohmann::json;

struct fmz_report {
    std::string json_text;
    bool passed = false;
};

namespace {

thread_local std::string g_last_error;

fmz_status finish(fmz_report** out, json doc, bool passed) {
    auto* rep = new fmz_report;
    rep->json_text = doc.dump(2);
    rep->passed = passed;
    *out = rep;
    return passed ? FMZ_OK : FMZ_CHECK_FAILED;
}

template <typename Fn>
fmz_status guarded(fmz_report** out, Fn&& fn) {
    if (out == nullptr) {
        g_last_error = "null output pointer";
        return FMZ_INVALID_ARGUMENT;
    }
    *out = nullptr;
    try {
        return fn();
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return FMZ_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return FMZ_INTERNAL_ERROR;
    } catch (...) {
        g_last_error = "unknown error";
        return FMZ_INTERNAL_ERROR;
    }
}

json relation_json(const fmz::RelationReport& r) {
    json j{{"relation", r.relation},
           {"L", r.L},
           {"j", r.j},
           {"exact_equal", r.exact_equal},
           {"defect_num", numerator(r.defect).str()},
           {"defect_den", denominator(r.defect).str()}};
    if (r.scalar) j["scalar"] = fmz::format_rational(*r.scalar);
    if (r.actual) j["actual"] = *r.actual;
    return j;
}

fmz_status relations_report(fmz_report** out, const std::vector<fmz::RelationReport>& reps) {
    json arr = json::array();
    bool passed = true;
    for (const auto& r : reps) {
        arr.push_back(relation_json(r));
        passed = passed && r.exact_equal;
    }
    return finish(out, std::move(arr), passed);
}

json solution_json(const fmz::BetheSolution& s) {
    json k_re = json::array(), k_im = json::array();
    for (auto k : s.k) {
        k_re.push_back(k.real());
        k_im.push_back(k.imag());
    }
    json j{{"L", s.L},
           {"r", s.r},
           {"class", fmz::bethe_class_name(s.cls)},
           {"m", s.m},
           {"k_re", k_re},
           {"k_im", k_im},
           {"energy", s.energy},
           {"residual", s.bethe_residual}};
    if (s.string_limit) j["string_limit"] = true;
    return j;
}

std::string rational_str(const fmz::Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace

extern "C" {

const char* fmz_version(void) { return "1.0.0"; }

const char* fmz_last_error(void) { return g_last_error.c_str(); }

const char* fmz_report_json(const fmz_report* report) {
    return report ? report->json_text.c_str() : "";
}

int fmz_report_passed(const fmz_report* report) {
    return report && report->passed ? 1 : 0;
}

void fmz_report_free(fmz_report* report) { delete report; }

fmz_status fmz_spectrum(int length, const char* epsilon, int u, int d, double tol,
                        fmz_report** out) {
    return guarded(out, [&]() -> fmz_status {
        if (tol <= 0) throw std::invalid_argument("tol must be positive");
        fmz::Rational eps = fmz::parse_rational(epsilon ? epsilon : "0");
        if (eps < 0) throw std::invalid_argument("epsilon must be nonnegative");
        if (u >= 0 && d >= 0) {
            if (eps != 0) throw std::invalid_argument("sectors not conserved at epsilon != 0");
            fmz::SectorLabel sector{u, d, length};
            if (!sector.valid()) throw std::invalid_argument("invalid sector");
            auto evals = fmz::sector_spectrum(length, sector);
            auto distinct = fmz::distinct_eigenvalues(evals);
            json dj = json::array();
            for (const auto& dv : distinct)
                dj.push_back({{"value", dv.value}, {"multiplicity", dv.multiplicity}});
            bool psd = evals.empty() || evals.front() >= -tol;
            json doc{{"L", length},
                     {"epsilon", fmz::format_rational(eps)},
                     {"sectors",
                      json::array({{{"u", u},
                                    {"d", d},
                                    {"dim", static_cast<int64_t>(evals.size())},
                                    {"eigenvalues", evals},
                                    {"kernel_dim",
                                     static_cast<int64_t>(std::lower_bound(evals.begin(),
                                                                           evals.end(), tol) -
                                                          evals.begin())}}})},
                     {"distinct", dj}};
            return finish(out, std::move(doc), psd);
        }
        fmz::SpectrumReport rep = fmz::dense_spectrum(length, eps, tol);
        json sectors = json::array();
        for (const auto& ss : rep.sectors)
            sectors.push_back({{"u", ss.sector.u},
                               {"d", ss.sector.d},
                               {"dim", static_cast<int64_t>(ss.eigenvalues.size())},
                               {"eigenvalues", ss.eigenvalues},
                               {"kernel_dim", ss.kernel_dim}});
        json dj = json::array();
        for (const auto& dv : rep.distinct)
            dj.push_back({{"value", dv.value}, {"multiplicity", dv.multiplicity}});
        bool psd = rep.eigenvalues.empty() || rep.eigenvalues.front() >= -tol;
        json doc{{"L", rep.L},
                 {"epsilon", fmz::format_rational(rep.epsilon)},
                 {"sectors", sectors},
                 {"kernel_dim", rep.kernel_dim},
                 {"smallest_nonzero", rep.smallest_nonzero},
                 {"gap_ambiguity", rep.gap_ambiguity},
                 {"distinct", dj}};
        return finish(out, std::move(doc), psd && !rep.gap_ambiguity);
    });
}

fmz_status fmz_gsd(int length, int with_kernel, fmz_report** out) {
    return guarded(out, [&]() -> fmz_status {
        fmz::GsdReport rep = fmz::gsd(length, with_kernel != 0);
        json doc{{"L", rep.L},
                 {"product_count", rep.product_count},
                 {"entangled_count", rep.entangled_count},
                 {"constructed_total", rep.constructed_total},
                 {"claimed_total", rep.claimed_total},
                 {"orbits_per_flat_count", rep.orbits_per_flat_count},
                 {"claimed_per_flat_count", rep.claimed_per_flat_count},
                 {"matches_claimed", rep.matches_claimed}};
        if (rep.exact_kernel_dim) {
            doc["exact_kernel_dim"] = *rep.exact_kernel_dim;
            doc["construction_matches_kernel"] = rep.construction_matches_kernel;
        }
        bool passed = rep.exact_kernel_dim ? rep.construction_matches_kernel : true;
        return finish(out, std::move(doc), passed);
    });
}

fmz_status fmz_algebra_ptl(int length, fmz_report** out) {
    return guarded(out, [&] { return relations_report(out, fmz::check_ptl(length)); });
}

fmz_status fmz_algebra_flat(int length, fmz_report** out) {
    return guarded(out, [&] { return relations_report(out, fmz::check_flat_algebra(length)); });
}

fmz_status fmz_algebra_s21(int length, fmz_report** out) {
    return guarded(out, [&] { return relations_report(out, fmz::check_s21(length)); });
}

fmz_status fmz_algebra_ybe(int length, const char* lambda1, const char* lambda2,
                           fmz_report** out) {
    return guarded(out, [&] {
        fmz::Rational l1 = fmz::parse_rational(lambda1 ? lambda1 : "");
        fmz::Rational l2 = fmz::parse_rational(lambda2 ? lambda2 : "");
        return relations_report(out, {fmz::check_ybe(l1, l2, length)});
    });
}

fmz_status fmz_algebra_ybe_random(int length, int count, unsigned long seed,
                                  fmz_report** out) {
    return guarded(out, [&] {
        if (count < 1) throw std::invalid_argument("count must be positive");
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
        std::vector<fmz::RelationReport> reps;
        while (static_cast<int>(reps.size()) < count) {
            fmz::Rational l1(num(rng), den(rng));
            fmz::Rational l2(num(rng), den(rng));
            if (l1 == 0 || l2 == 0 || l1 + l2 == 0) continue;  // pole, resample
            reps.push_back(fmz::check_ybe(l1, l2, length));
        }
        return relations_report(out, reps);
    });
}

fmz_status fmz_bethe_one(int length, fmz_report** out) {
    return guarded(out, [&]() -> fmz_status {
        json arr = json::array();
        for (const auto& s : fmz::one_particle_solutions(length))
            arr.push_back(solution_json(s));
        return finish(out, std::move(arr), true);
    });
}

fmz_status fmz_bethe_two(int length, fmz_report** out) {
    return guarded(out, [&]() -> fmz_status {
        auto sols = fmz::solve_two_particle(length);
        json arr = json::array();
        bool passed = sols.size() == static_cast<size_t>(length) * (length - 1) / 2;
        for (const auto& s : sols) {
            arr.push_back(solution_json(s));
            passed = passed && s.bethe_residual < 1e-8;
        }
        return finish(out, std::move(arr), passed);
    });
}

fmz_status fmz_bethe_state(int length, const double* momenta_re, const double* momenta_im,
                           int r, const char* flavors, int with_amplitudes,
                           fmz_report** out) {
    return guarded(out, [&]() -> fmz_status {
        if (momenta_re == nullptr || flavors == nullptr)
            throw std::invalid_argument("null momenta or flavors");
        std::vector<fmz::Complex> k(r);
        for (int i = 0; i < r; ++i)
            k[i] = fmz::Complex(momenta_re[i], momenta_im ? momenta_im[i] : 0.0);
        Eigen::VectorXcd v = fmz::r_particle_state(length, k, flavors);
        double energy = fmz::magnon_energy(k);
        double residual = fmz::eigen_residual(v, energy, fmz::hamiltonian({length, 0}));
        json doc{{"L", length},
                 {"r", r},
                 {"flavors", flavors},
                 {"energy", energy},
                 {"residual", residual}};
        if (with_amplitudes) {
            json amps = json::object();
            for (int64_t i = 0; i < v.size(); ++i) {
                if (std::abs(v[i]) < 1e-14) continue;
                amps[fmz::ConfigWord::from_code(length, i).str()] =
                    json::array({v[i].real(), v[i].imag()});
            }
            doc["amplitudes"] = std::move(amps);
        }
        return finish(out, std::move(doc), residual < 1e-8);
    });
}

fmz_status fmz_compare_xxx(int length, double tol, fmz_report** out) {
    return guarded(out, [&]() -> fmz_status {
        fmz::ComparisonReport rep = fmz::compare_to_xxx(length, tol);
        json sectors = json::array();
        for (const auto& sc : rep.sectors)
            sectors.push_back({{"r", sc.r},
                               {"zero_modes", sc.zero_modes},
                               {"expected_zero_modes", sc.expected_zero_modes},
                               {"zero_modes_match", sc.zero_modes_match},
                               {"nonzero_count", sc.nonzero_count},
                               {"nonzero_ratio_match", sc.nonzero_ratio_match},
                               {"detail", sc.detail}});
        json doc{{"L", rep.L},
                 {"tol", rep.tol},
                 {"distinct_match", rep.distinct_match},
                 {"distinct_fm", rep.distinct_fm},
                 {"distinct_xxx", rep.distinct_xxx},
                 {"fm_only", rep.fm_only},
                 {"xxx_only", rep.xxx_only},
                 {"sectors", sectors},
                 {"all_match", rep.all_match}};
        return finish(out, std::move(doc), rep.all_match);
    });
}

fmz_status fmz_paths_orbit(const char* config, fmz_report** out) {
    return guarded(out, [&]() -> fmz_status {
        if (config == nullptr || *config == '\0')
            throw std::invalid_argument("empty configuration word");
        fmz::Orbit o = fmz::orbit_of(fmz::ConfigWord::from_string(config));
        json members = json::array();
        for (const auto& m : o.members) members.push_back(m.str());
        json doc{{"representative", o.representative.str()},
                 {"size", o.size()},
                 {"sector", {{"u", o.sector.u}, {"d", o.sector.d}}},
                 {"members", members}};
        return finish(out, std::move(doc), true);
    });
}

fmz_status fmz_paths_ground_states(int length, fmz_report** out) {
    return guarded(out, [&]() -> fmz_status {
        fmz::ExactMatrix h = fmz::hamiltonian({length, 0});
        json products = json::array();
        bool annihilated = true;
        for (const auto& w : fmz::product_ground_states(length)) {
            products.push_back(w.str());
            std::vector<fmz::Rational> v(fmz::pow3(length), fmz::Rational(0));
            v[w.code()] = 1;
            for (const auto& x : h.apply(v))
                if (x != 0) annihilated = false;
        }
        json entangled = json::array();
        for (const auto& o : fmz::entangled_orbit_classes(length)) {
            json amps = json::object();
            for (const auto& m : o.members) amps[std::to_string(m.code())] = "1/1";
            entangled.push_back({{"representative", o.representative.str()},
                                 {"flats", o.flats()},
                                 {"orbit_size", o.size()},
                                 {"amplitudes", std::move(amps)}});
            auto v = fmz::orbit_superposition(o);
            for (const auto& x : h.apply(v))
                if (x != 0) annihilated = false;
        }
        bool spans = true;
        bool span_checked = length <= 6;
        if (span_checked) spans = fmz::ground_states_span_kernel(length);
        json doc{{"L", length},
                 {"product", products},
                 {"entangled", entangled},
                 {"all_annihilated", annihilated},
                 {"span_checked", span_checked},
                 {"spans_kernel", spans}};
        return finish(out, std::move(doc), annihilated && spans);
    });
}

fmz_status fmz_action_table(int length, const char* flavors, fmz_report** out) {
    return guarded(out, [&]() -> fmz_status {
        fmz::ActionTableReport rep =
            fmz::action_table(length, flavors && *flavors ? flavors : "ud");
        json eqs = json::array();
        for (const auto& eq : rep.equations) {
            json cases = json::array();
            for (const auto& c : eq.cases) {
                json cj{{"n1", c.n1},
                        {"n2", c.n2},
                        {"adjacent", c.adjacent},
                        {"wrap_involved", c.wrap_involved},
                        {"match", c.match}};
                if (!c.note.empty()) cj["note"] = c.note;
                cases.push_back(std::move(cj));
            }
            eqs.push_back({{"equation", eq.equation},
                           {"matches", eq.matches},
                           {"mismatches", eq.mismatches},
                           {"cases", std::move(cases)}});
        }
        json doc{{"L", rep.L},
                 {"flavors", rep.flavors},
                 {"equations", std::move(eqs)},
                 {"total_matches", rep.total_matches},
                 {"total_mismatches", rep.total_mismatches}};
        // fidelity audit: discrepancies are report content, not failures
        return finish(out, std::move(doc), true);
    });
}

}  // extern "C"
