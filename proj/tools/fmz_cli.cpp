#include <fmz.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

struct CommonOpts {
    std::string format = "json";
    std::string out_path;
};

int status_to_exit(fmz_status st) {
    switch (st) {
        case FMZ_OK: return 0;
        case FMZ_CHECK_FAILED: return 1;
        case FMZ_INVALID_ARGUMENT: return 2;
        case FMZ_INTERNAL_ERROR: return 2;
    }
    return 2;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

/// relation-array reports (algebra subcommands)
void render_relations(const json& doc, const std::string& format, std::ostream& os) {
    if (format == "csv") {
        os << "relation,L,j,exact_equal,defect\n";
        for (const auto& r : doc)
            os << csv_quote(r["relation"].get<std::string>()) << ',' << r["L"] << ','
               << r["j"] << ',' << (r["exact_equal"].get<bool>() ? "true" : "false") << ','
               << csv_quote(r["defect_num"].get<std::string>() + "/" +
                            r["defect_den"].get<std::string>())
               << '\n';
        return;
    }
    for (const auto& r : doc) {
        os << (r["exact_equal"].get<bool>() ? "OK   " : "FAIL ")
           << r["relation"].get<std::string>() << "  (L=" << r["L"] << ", j=" << r["j"]
           << ")";
        if (!r["exact_equal"].get<bool>())
            os << "  defect " << r["defect_num"].get<std::string>() << "/"
               << r["defect_den"].get<std::string>();
        if (r.contains("scalar")) os << "  scalar " << r["scalar"].get<std::string>();
        if (r.contains("actual")) os << "  actual " << r["actual"].get<std::string>();
        os << '\n';
    }
}

void render_solutions(const json& doc, const std::string& format, std::ostream& os) {
    if (format == "csv") {
        os << "class,m,k_re,k_im,energy,residual\n";
        for (const auto& s : doc) {
            std::ostringstream m, kre, kim;
            for (size_t i = 0; i < s["m"].size(); ++i) {
                if (i) { m << ' '; kre << ' '; kim << ' '; }
                m << s["m"][i];
                kre << s["k_re"][i];
                kim << s["k_im"][i];
            }
            os << s["class"].get<std::string>() << ',' << csv_quote(m.str()) << ','
               << csv_quote(kre.str()) << ',' << csv_quote(kim.str()) << ',' << s["energy"]
               << ',' << s["residual"] << '\n';
        }
        return;
    }
    for (const auto& s : doc) {
        os << s["class"].get<std::string>();
        if (s.contains("string_limit")) os << " (string limit)";
        os << "  m=[";
        for (size_t i = 0; i < s["m"].size(); ++i) os << (i ? "," : "") << s["m"][i];
        os << "] k=[";
        for (size_t i = 0; i < s["k_re"].size(); ++i) {
            if (i) os << ", ";
            os << s["k_re"][i].get<double>();
            double im = s["k_im"][i].get<double>();
            if (im != 0) os << (im > 0 ? "+" : "") << im << "i";
        }
        os << "]  E=" << s["energy"].get<double>() << "  res=" << s["residual"].get<double>()
           << '\n';
    }
}

void render_spectrum(const json& doc, const std::string& format, std::ostream& os) {
    if (format == "csv") {
        os << "sector_u,sector_d,eigenvalue\n";
        for (const auto& s : doc["sectors"])
            for (const auto& e : s["eigenvalues"])
                os << s["u"] << ',' << s["d"] << ',' << e << '\n';
        return;
    }
    os << "L=" << doc["L"] << " epsilon=" << doc["epsilon"].get<std::string>() << '\n';
    for (const auto& s : doc["sectors"])
        os << "sector (" << s["u"] << "," << s["d"] << "): dim " << s["dim"] << ", kernel "
           << s["kernel_dim"] << '\n';
    if (doc.contains("kernel_dim")) os << "kernel_dim " << doc["kernel_dim"] << '\n';
    if (doc.contains("distinct")) os << "distinct eigenvalues " << doc["distinct"].size() << '\n';
}

void render_text(const std::string& cmd, const json& doc, std::ostream& os) {
    if (cmd == "gsd") {
        os << "L=" << doc["L"] << ": constructed " << doc["constructed_total"] << " ("
           << doc["product_count"] << " product + " << doc["entangled_count"]
           << " entangled), claimed " << doc["claimed_total"];
        if (doc.contains("exact_kernel_dim")) os << ", exact kernel " << doc["exact_kernel_dim"];
        os << '\n';
        os << "matches_claimed " << (doc["matches_claimed"].get<bool>() ? "yes" : "no") << '\n';
    } else if (cmd == "compare-xxx") {
        os << "L=" << doc["L"] << " distinct_match "
           << (doc["distinct_match"].get<bool>() ? "yes" : "no") << " (" << doc["distinct_fm"]
           << " vs " << doc["distinct_xxx"] << ")\n";
        for (const auto& s : doc["sectors"]) {
            os << "r=" << s["r"] << ": zero modes " << s["zero_modes"] << "/"
               << s["expected_zero_modes"] << ", nonzero ratio "
               << (s["nonzero_ratio_match"].get<bool>() ? "ok" : "mismatch") << '\n';
            std::string d = s["detail"].get<std::string>();
            if (!d.empty()) os << "    " << d << '\n';
        }
    } else if (cmd == "orbit") {
        for (const auto& m : doc["members"]) os << m.get<std::string>() << '\n';
    } else if (cmd == "ground-states") {
        os << "L=" << doc["L"] << ": " << doc["product"].size() << " product states, "
           << doc["entangled"].size() << " entangled states\n";
        os << "all_annihilated " << (doc["all_annihilated"].get<bool>() ? "yes" : "no") << '\n';
        if (doc["span_checked"].get<bool>())
            os << "spans_kernel " << (doc["spans_kernel"].get<bool>() ? "yes" : "no") << '\n';
    } else if (cmd == "action-table") {
        for (const auto& eq : doc["equations"]) {
            os << eq["equation"].get<std::string>() << ": " << eq["matches"] << " match, "
               << eq["mismatches"] << " mismatch\n";
            for (const auto& c : eq["cases"])
                if (!c["match"].get<bool>())
                    os << "    (" << c["n1"] << "," << c["n2"] << ") "
                       << c.value("note", std::string{}) << '\n';
        }
        os << "total " << doc["total_matches"] << " match, " << doc["total_mismatches"]
           << " mismatch\n";
    } else if (cmd == "bethe-state") {
        os << "L=" << doc["L"] << " r=" << doc["r"] << " flavors "
           << doc["flavors"].get<std::string>() << ": E=" << doc["energy"].get<double>()
           << " residual=" << doc["residual"].get<double>() << '\n';
    } else {
        os << doc.dump(2) << '\n';
    }
}

int emit(const std::string& cmd, fmz_status st, fmz_report* rep, const CommonOpts& common) {
    if (rep == nullptr) {
        std::cerr << "error: " << fmz_last_error() << '\n';
        return status_to_exit(st);
    }
    json doc = json::parse(fmz_report_json(rep));
    std::ostringstream body;
    if (common.format == "json") {
        body << doc.dump(2) << '\n';
    } else if (cmd == "spectrum") {
        render_spectrum(doc, common.format, body);
    } else if (cmd == "algebra") {
        render_relations(doc, common.format, body);
    } else if (cmd == "bethe-one" || cmd == "bethe-two") {
        render_solutions(doc, common.format, body);
    } else if (common.format == "csv") {
        std::cerr << "error: csv output is not defined for this subcommand\n";
        fmz_report_free(rep);
        return 2;
    } else {
        render_text(cmd, doc, body);
    }
    fmz_report_free(rep);
    if (!common.out_path.empty()) {
        std::ofstream f(common.out_path, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot open " << common.out_path << '\n';
            return 2;
        }
        f << body.str();
    } else {
        std::cout << body.str();
    }
    return status_to_exit(st);
}

bool parse_momenta(const std::string& text, std::vector<double>& re, std::vector<double>& im) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        double r = 0, i = 0;
        auto colon = item.find(':');
        try {
            if (colon == std::string::npos) {
                r = std::stod(item);
            } else {
                r = std::stod(item.substr(0, colon));
                i = std::stod(item.substr(colon + 1));
            }
        } catch (const std::exception&) {
            return false;
        }
        re.push_back(r);
        im.push_back(i);
    }
    return !re.empty();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Free Motzkin chain: spectra, Bethe ansatz, operator algebra"};
    app.require_subcommand(1);
    CommonOpts common;
    app.add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--out", common.out_path, "Write the report to a file instead of stdout");

    int L = 0;
    std::string epsilon = "0";
    std::string sector;
    double tol = 1e-10;
    unsigned long seed = 0;
    int random_count = 0;

    auto* spectrum = app.add_subcommand("spectrum", "Exact-diagonalization spectrum");
    spectrum->add_option("-L,--length", L, "Chain length")->required();
    spectrum->add_option("--epsilon", epsilon, "Flat-term coupling p/q");
    spectrum->add_option("--sector", sector, "Restrict to a (u,d) sector, e.g. 1,1");
    spectrum->add_option("--tol", tol, "Zero threshold");

    auto* gsd = app.add_subcommand("gsd", "Ground-state degeneracy");
    gsd->add_option("-L,--length", L, "Chain length")->required();
    bool no_kernel = false;
    gsd->add_flag("--no-kernel", no_kernel, "Skip the exact kernel cross-check");

    auto* algebra = app.add_subcommand("algebra", "Operator-algebra verification");
    algebra->require_subcommand(1);
    auto* ptl = algebra->add_subcommand("ptl", "Periodic Temperley-Lieb relations");
    ptl->add_option("-L,--length", L, "Chain length")->required();
    auto* flat = algebra->add_subcommand("flat", "Flat-move g/h relations");
    flat->add_option("-L,--length", L, "Chain length")->required();
    auto* s21 = algebra->add_subcommand("s21", "Symmetric inverse semigroup tables");
    s21->add_option("-L,--length", L, "Chain length")->required();
    auto* ybe = algebra->add_subcommand("ybe", "Yang-Baxter equation");
    ybe->add_option("-L,--length", L, "Chain length")->required();
    std::string lambda1 = "1", lambda2 = "2";
    ybe->add_option("--lambda1", lambda1, "Spectral parameter p/q");
    ybe->add_option("--lambda2", lambda2, "Spectral parameter p/q");
    ybe->add_option("--random", random_count, "Check N seeded random rational pairs");
    ybe->add_option("--seed", seed, "Random seed");

    auto* bethe = app.add_subcommand("bethe", "Coordinate Bethe ansatz");
    bethe->require_subcommand(1);
    auto* bethe_one = bethe->add_subcommand("one", "One-particle solutions");
    bethe_one->add_option("-L,--length", L, "Chain length")->required();
    auto* bethe_two = bethe->add_subcommand("two", "Two-particle solutions");
    bethe_two->add_option("-L,--length", L, "Chain length")->required();
    std::string momenta, flavors;
    auto* bethe_state = bethe->add_subcommand("state", "Construct a Bethe state");
    bethe_state->add_option("-L,--length", L, "Chain length")->required();
    bethe_state->add_option("--momenta", momenta, "Momenta k1,k2,... (complex as re:im)")
        ->required();
    bethe_state->add_option("--flavors", flavors, "Flavor word over {u,d}")->required();
    auto* bethe_residual = bethe->add_subcommand("residual", "Residual of a Bethe state");
    bethe_residual->add_option("-L,--length", L, "Chain length")->required();
    bethe_residual->add_option("--momenta", momenta, "Momenta k1,k2,... (complex as re:im)")
        ->required();
    bethe_residual->add_option("--flavors", flavors, "Flavor word over {u,d}")->required();

    auto* compare = app.add_subcommand("compare-xxx", "Compare against the XXX oracle");
    compare->add_option("-L,--length", L, "Chain length")->required();
    double cmp_tol = 1e-9;
    compare->add_option("--tol", cmp_tol, "Matching tolerance");

    auto* paths = app.add_subcommand("paths", "Motzkin-path orbits and ground states");
    paths->require_subcommand(1);
    std::string config;
    auto* orbit = paths->add_subcommand("orbit", "Equivalence-move orbit of a word");
    orbit->add_option("--config", config, "Configuration word over {u,f,d}")->required();
    auto* ground = paths->add_subcommand("ground-states", "Explicit ground states");
    ground->add_option("-L,--length", L, "Chain length")->required();

    auto* action = app.add_subcommand("action-table", "(1,1) operator-action audit");
    action->add_option("-L,--length", L, "Chain length")->required();
    std::string action_flavors = "ud";
    action->add_option("--flavors", action_flavors, "Two-symbol flavor word");

    // let --format/--out appear after any subcommand
    for (auto* sub : app.get_subcommands({})) {
        sub->fallthrough();
        for (auto* nested : sub->get_subcommands({})) nested->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    fmz_report* rep = nullptr;
    fmz_status st = FMZ_INTERNAL_ERROR;

    if (*spectrum) {
        int u = -1, d = -1;
        if (!sector.empty() &&
            std::sscanf(sector.c_str(), "%d,%d", &u, &d) != 2) {
            std::cerr << "error: --sector expects u,d\n";
            return 2;
        }
        if (sector.empty() && L > 8) {
            std::cerr << "error: above dense cap; use --sector\n";
            return 2;
        }
        st = fmz_spectrum(L, epsilon.c_str(), u, d, tol, &rep);
        return emit("spectrum", st, rep, common);
    }
    if (*gsd) {
        st = fmz_gsd(L, no_kernel ? 0 : (L <= 6 ? 1 : 0), &rep);
        return emit("gsd", st, rep, common);
    }
    if (*ptl) {
        st = fmz_algebra_ptl(L, &rep);
        return emit("algebra", st, rep, common);
    }
    if (*flat) {
        st = fmz_algebra_flat(L, &rep);
        return emit("algebra", st, rep, common);
    }
    if (*s21) {
        st = fmz_algebra_s21(L, &rep);
        return emit("algebra", st, rep, common);
    }
    if (*ybe) {
        st = random_count > 0
                 ? fmz_algebra_ybe_random(L, random_count, seed, &rep)
                 : fmz_algebra_ybe(L, lambda1.c_str(), lambda2.c_str(), &rep);
        return emit("algebra", st, rep, common);
    }
    if (*bethe_one) {
        st = fmz_bethe_one(L, &rep);
        return emit("bethe-one", st, rep, common);
    }
    if (*bethe_two) {
        st = fmz_bethe_two(L, &rep);
        return emit("bethe-two", st, rep, common);
    }
    if (*bethe_state || *bethe_residual) {
        std::vector<double> re, im;
        if (!parse_momenta(momenta, re, im)) {
            std::cerr << "error: --momenta expects k1,k2,... (complex as re:im)\n";
            return 2;
        }
        st = fmz_bethe_state(L, re.data(), im.data(), static_cast<int>(re.size()),
                             flavors.c_str(), *bethe_state ? 1 : 0, &rep);
        return emit("bethe-state", st, rep, common);
    }
    if (*compare) {
        st = fmz_compare_xxx(L, cmp_tol, &rep);
        return emit("compare-xxx", st, rep, common);
    }
    if (*orbit) {
        st = fmz_paths_orbit(config.c_str(), &rep);
        return emit("orbit", st, rep, common);
    }
    if (*ground) {
        st = fmz_paths_ground_states(L, &rep);
        return emit("ground-states", st, rep, common);
    }
    if (*action) {
        st = fmz_action_table(L, action_flavors.c_str(), &rep);
        return emit("action-table", st, rep, common);
    }

    std::cerr << "error: no subcommand\n";
    return 2;
}
