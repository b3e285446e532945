#include "tate/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>

#include "tate/json_io.hpp"
#include "tate/random_lattice.hpp"
#include "tate/window.hpp"

namespace tate {

namespace {

struct RunConfig {
    long long q = 2;
    long prec = 16;
    std::uint64_t seed = 0;
    int retries = 4;
    std::string output = "json";
};

long precision_cap() {
    if (const char* env = std::getenv("TATE_MAX_PREC")) {
        long cap = std::atol(env);
        if (cap > 0) return cap;
    }
    return 64;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open '" + path + "'");
    json j;
    in >> j;
    return j;
}

void emit(std::ostream& out, const RunConfig& cfg, const json& report) {
    if (cfg.output == "table") {
        for (const auto& [k, v] : report.items())
            out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    } else {
        out << report.dump() << "\n";
    }
}

// Runs fn at increasing working precision until it stops signalling
// precision loss; rethrows past the retry budget or the cap.
json with_precision_retries(const RunConfig& cfg, const std::function<json(long)>& fn) {
    long prec = std::max(cfg.prec, 2L);
    const long cap = precision_cap();
    for (int attempt = 0;; ++attempt) {
        try {
            return fn(prec);
        } catch (const precision_error&) {
            if (attempt >= cfg.retries || prec >= cap) throw;
            prec = std::min(prec * 2, cap);
        }
    }
}

json index_to_json(const IndexBundle& b) {
    return json{{"pos", b.pos}, {"neg", b.neg}, {"net", b.net()}};
}

json gr_check_report(const RunConfig& cfg, int n, long trials) {
    const FieldInfo* f = field_from_order(cfg.q);
    Rng rng(cfg.seed);
    TateSpace space{n, f, std::max(cfg.prec, 24L)};
    json report{{"n", n},         {"trials", trials},  {"seed", cfg.seed},
                {"q", cfg.q},     {"prec", space.default_prec}, {"passed", 0},
                {"failed", 0},    {"warning", nullptr}};
    if (trials == 0) {
        report["warning"] = "zero trials: vacuous pass";
        return report;
    }
    long passed = 0;
    for (long trial = 0; trial < trials; ++trial) {
        Lattice l0 = random_lattice(rng, space);
        Lattice l1 = random_lattice(rng, space);
        Lattice l2 = random_lattice(rng, space);
        std::string fail;
        try {
            Lattice meet = lattice_meet(l0, l1);
            Lattice join = lattice_join(l0, l1);
            if (!lattice_leq(meet, l0) || !lattice_leq(meet, l1)) fail = "meet is not a lower bound";
            if (fail.empty() && (!lattice_leq(l0, join) || !lattice_leq(l1, join)))
                fail = "join is not an upper bound";
            for (int c = 0; c < 50 && fail.empty(); ++c) {
                Lattice cand = random_lattice(rng, space);
                if (lattice_leq(cand, l0) && lattice_leq(cand, l1) && !lattice_leq(cand, meet))
                    fail = "meet is not the greatest lower bound";
                if (fail.empty() && lattice_leq(l0, cand) && lattice_leq(l1, cand) &&
                    !lattice_leq(join, cand))
                    fail = "join is not the least upper bound";
            }
            if (fail.empty()) {
                for (long e : quotient_dims(meet, l0))
                    if (e < 0) fail = "negative quotient exponent";
                for (long e : quotient_dims(l1, join))
                    if (e < 0) fail = "negative quotient exponent";
            }
            if (fail.empty()) {
                IndexBundle b01 = index_bundle(l0, l1), b12 = index_bundle(l1, l2),
                            b02 = index_bundle(l0, l2);
                if (b01.net() != det_val(l0.basis().inverse() * l1.basis()))
                    fail = "index does not match det valuation";
                else if (b02.net() != b01.net() + b12.net())
                    fail = "index cocycle violated";
            }
            if (fail.empty() && n <= 2 && cfg.q == 2) {
                long w = 8;
                if (window_oracle::lattice_fits(l0, w) && window_oracle::lattice_fits(l1, w) &&
                    window_oracle::lattice_fits(meet, w) && window_oracle::lattice_fits(join, w)) {
                    FieldMatrix s0 = window_oracle::span_of_lattice(l0, w);
                    FieldMatrix s1 = window_oracle::span_of_lattice(l1, w);
                    if (!window_oracle::subspace_eq(window_oracle::span_of_lattice(meet, w),
                                                    window_oracle::subspace_intersection(s0, s1)))
                        fail = "meet disagrees with the window oracle";
                    else if (!window_oracle::subspace_eq(window_oracle::span_of_lattice(join, w),
                                                         window_oracle::subspace_sum(s0, s1)))
                        fail = "join disagrees with the window oracle";
                }
            }
        } catch (const std::exception& e) {
            fail = std::string("exception: ") + e.what();
        }
        if (fail.empty()) {
            ++passed;
        } else if (!report.contains("first_failure")) {
            report["first_failure"] = json{{"trial", trial},
                                           {"check", fail},
                                           {"l0", lattice_to_json(l0)},
                                           {"l1", lattice_to_json(l1)}};
        }
    }
    report["passed"] = passed;
    report["failed"] = trials - passed;
    return report;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact lattice algebra in k((t))^n, adeles of P^1, and diagram calculus"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--q", cfg.q, "field order (prime power)")->capture_default_str();
    app.add_option("--prec", cfg.prec, "working precision")->capture_default_str();
    app.add_option("--seed", cfg.seed, "PRNG seed")->capture_default_str();
    app.add_option("--retries", cfg.retries, "precision retry budget")->capture_default_str();
    app.add_option("--output", cfg.output, "json|table")->capture_default_str();

    // lattice {join,meet,index,leq}
    auto* lat = app.add_subcommand("lattice", "lattice algebra in k((t))^n");
    std::vector<std::string> lat_in;
    std::string lat_op;
    lat->add_option("op", lat_op, "join|meet|index|leq")->required();
    lat->add_option("--in", lat_in, "two lattice JSON files")->expected(2)->required();

    // lattice2 {join,meet,quotient}
    auto* lat2 = app.add_subcommand("lattice2", "monomial 2-lattice algebra");
    std::vector<std::string> lat2_in;
    std::string lat2_op;
    lat2->add_option("op", lat2_op, "join|meet|quotient")->required();
    lat2->add_option("--in", lat2_in, "two staircase JSON files")->expected(2)->required();

    // diagram {check,colim,hom,straighten}
    auto* dia = app.add_subcommand("diagram", "admissible Ind-diagram calculus");
    std::vector<std::string> dia_in;
    std::string dia_op, dia_map;
    dia->add_option("op", dia_op, "check|colim|hom|straighten")->required();
    dia->add_option("--in", dia_in, "diagram JSON files")->expected(1, 2)->required();
    dia->add_option("--map", dia_map, "matrix JSON for straighten");

    // residue-sum
    auto* res = app.add_subcommand("residue-sum", "residues of f dg over all places");
    std::string res_num = "1", res_den = "1", res_g = "x";
    res->add_option("--num", res_num, "numerator polynomial in x");
    res->add_option("--den", res_den, "denominator polynomial in x");
    res->add_option("--g", res_g, "g as polynomial or p/q");

    // adele {cohomology,structure,ses-check}
    auto* ade = app.add_subcommand("adele", "truncated adeles of P^1");
    std::string ade_op;
    int ade_d = 0, ade_bigd = 1, ade_n = 0, ade_rank = 1;
    bool ade_json = false;
    ade->add_option("op", ade_op, "cohomology|structure|ses-check")->required();
    ade->add_option("--d", ade_d, "twist degree")->required();
    ade->add_option("--D", ade_bigd, "max place degree")->capture_default_str();
    ade->add_option("--N", ade_n, "digit window")->required();
    ade->add_option("--rank", ade_rank, "sheaf rank (0 or 1)")->capture_default_str();
    ade->add_flag("--json", ade_json, "force JSON output");

    // gr-check
    auto* gr = app.add_subcommand("gr-check", "randomized Grassmannian property suite");
    int gr_n = 2;
    long gr_trials = 100;
    gr->add_option("--n", gr_n, "ambient rank (<= 4)")->capture_default_str();
    gr->add_option("--trials", gr_trials, "number of trials (<= 10000)")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 1;
    }

    try {
        const FieldInfo* f = field_from_order(cfg.q);

        if (lat->parsed()) {
            json a = load_json(lat_in[0]), b = load_json(lat_in[1]);
            json report = with_precision_retries(cfg, [&](long prec) -> json {
                Lattice l0 = lattice_from_json(f, a, prec);
                Lattice l1 = lattice_from_json(f, b, prec);
                if (lat_op == "join") return lattice_to_json(lattice_join(l0, l1));
                if (lat_op == "meet") return lattice_to_json(lattice_meet(l0, l1));
                if (lat_op == "index") return index_to_json(index_bundle(l0, l1));
                if (lat_op == "leq") return json{{"leq", lattice_leq(l0, l1)}};
                throw domain_error("unknown lattice op '" + lat_op + "'");
            });
            emit(out, cfg, report);
            return 0;
        }

        if (lat2->parsed()) {
            Staircase2 a = staircase_from_json(load_json(lat2_in[0]));
            Staircase2 b = staircase_from_json(load_json(lat2_in[1]));
            json report;
            if (lat2_op == "join") report = staircase_to_json(lattice2_join(a, b));
            else if (lat2_op == "meet") report = staircase_to_json(lattice2_meet(a, b));
            else if (lat2_op == "quotient") {
                json layers = json::array();
                for (const auto& [j, d] : quotient2_descriptor(a, b))
                    layers.push_back(json{{"j", j},
                                          {"finite_dim", d.finite_dim},
                                          {"pro", d.pro_part},
                                          {"ind", d.ind_part}});
                report = json{{"layers", layers}};
            } else {
                throw domain_error("unknown lattice2 op '" + lat2_op + "'");
            }
            emit(out, cfg, report);
            return 0;
        }

        if (dia->parsed()) {
            IndDiagram x = ind_diagram_from_json(f, load_json(dia_in[0]));
            json report;
            if (dia_op == "check") {
                report = json{{"admissible", check_admissible(x)}};
            } else if (dia_op == "colim") {
                Realization r = realize_colim(x);
                report = json{{"dim", r.obj.dim}};
                json legs = json::object();
                for (int i = 0; i < x.poset.size(); ++i)
                    legs[x.poset.name(i)] = field_matrix_to_json(r.cocone[i]);
                report["cocone"] = legs;
            } else if (dia_op == "hom") {
                if (dia_in.size() != 2) throw domain_error("hom needs two diagrams");
                IndDiagram y = ind_diagram_from_json(f, load_json(dia_in[1]));
                report = json{{"dim", hom_ind(x, y).dim}};
            } else if (dia_op == "straighten") {
                if (dia_in.size() != 2 || dia_map.empty())
                    throw domain_error("straighten needs two diagrams and --map");
                IndDiagram y = ind_diagram_from_json(f, load_json(dia_in[1]));
                FieldMatrix fm = field_matrix_from_json(f, load_json(dia_map));
                Straightening s = straighten(x, y, fm);
                json elems = json::array();
                for (size_t i = 0; i < s.pairs.size(); ++i)
                    elems.push_back(json{{"i", x.poset.name(s.pairs[i].first)},
                                         {"j", y.poset.name(s.pairs[i].second)},
                                         {"alpha", field_matrix_to_json(s.component[i])}});
                bool roundtrip = realize_straightening(x, y, s) == fm;
                report = json{{"size", s.pairs.size()},
                              {"left_final", s.left_final},
                              {"right_final", s.right_final},
                              {"round_trip", roundtrip},
                              {"squares", elems}};
            } else {
                throw domain_error("unknown diagram op '" + dia_op + "'");
            }
            emit(out, cfg, report);
            return 0;
        }

        if (res->parsed()) {
            Poly num = Poly::parse(f, res_num);
            Poly den = Poly::parse(f, res_den);
            RationalFunction rf(num, den);
            RationalFunction g = [&] {
                auto slash = res_g.find('/');
                if (slash == std::string::npos) return RationalFunction::from_poly(Poly::parse(f, res_g));
                return RationalFunction(Poly::parse(f, res_g.substr(0, slash)),
                                        Poly::parse(f, res_g.substr(slash + 1)));
            }();
            ResidueReport rep = residue_sum(rf, g);
            json per = json::object();
            for (const auto& [p, r] : rep.per_place) per[p.name()] = r.index();
            emit(out, cfg, json{{"sum", rep.sum.index()}, {"per_place", per}});
            return 0;
        }

        if (ade->parsed()) {
            json report;
            if (ade_op == "cohomology") {
                AdeleCohomology c = adelic_cohomology(f, ade_d, ade_bigd, ade_n);
                report = json{{"h0", c.h0}, {"h1", c.h1}, {"stable", c.stable}};
            } else if (ade_op == "structure") {
                AdeleTateStructure s = adele_tate_structure(f, ade_d, ade_bigd, ade_n, ade_rank);
                report = json{{"pro_dim", s.pro_dim}, {"ind_dim", s.ind_dim}, {"total", s.total}};
            } else if (ade_op == "ses-check") {
                report = json{{"exact", ses_adeles_check(f, ade_d, ade_bigd, ade_n)}};
            } else {
                throw domain_error("unknown adele op '" + ade_op + "'");
            }
            emit(out, cfg, report);
            return 0;
        }

        if (gr->parsed()) {
            if (gr_n > 4 || gr_n < 0) throw domain_error("gr-check rank must be in [0, 4]");
            if (gr_trials < 0 || gr_trials > 10000) throw domain_error("gr-check trials must be in [0, 10000]");
            emit(out, cfg, gr_check_report(cfg, gr_n, gr_trials));
            return 0;
        }
    } catch (const precision_error& e) {
        err << "precision exhausted: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << app.help();
    return 1;
}

}  // namespace tate
