// qinv: exact quadratic-invariance checks for decentralized control over
// commutative rings. Subcommands: check-qi, h-map, closed-loop, oracle,
// vandermonde. Exit codes: 0 property holds, 3 property fails, 4 verdict
// unknown, 2 usage or input error.

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "qinv/problem_io.hpp"
#include "qinv/vandermonde.hpp"

using namespace qinv;

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 3;
constexpr int kExitUnknown = 4;
constexpr int kExitError = 2;

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_argument_error("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw invalid_argument_error("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

int verdict_exit(Verdict v) {
    switch (v) {
        case Verdict::True: return kExitHolds;
        case Verdict::False: return kExitFails;
        case Verdict::Unknown: return kExitUnknown;
    }
    return kExitUnknown;
}

template <commutative_ring R>
void print_report_text(const std::string& name, const QiReport<R>& rep) {
    std::cout << name << ": " << to_string(rep.verdict) << " (method " << to_string(rep.method) << ")\n";
    for (const auto& p : rep.preconditions)
        std::cout << "  precondition: " << p.name << " [" << Precondition::status_string(p.status) << "]\n";
    if (rep.witness) {
        if (rep.witness->generator_pair)
            std::cout << "  witness generators: (" << rep.witness->generator_pair->first << ", "
                      << rep.witness->generator_pair->second << ")\n";
        if (rep.witness->witness_k) std::cout << "  witness K = " << rep.witness->witness_k->to_string() << "\n";
        if (rep.witness->violating) std::cout << "  violating matrix = " << rep.witness->violating->to_string() << "\n";
        std::cout << "  detail: " << rep.witness->detail << "\n";
    }
}

int cmd_check_qi(const std::string& file, const std::string& method, bool as_json) {
    Json j = load_json_file(file);
    return with_problem(j, [&](auto problem) {
        using R = std::decay_t<decltype(problem.ring)>;
        QiMethodFlag flag = QiMethodFlag::Auto;
        if (method == "generators") flag = QiMethodFlag::GeneratorsOnly;
        if (method == "sparsity" && problem.set.kind() != ControllerSet<R>::Sparsity)
            throw invalid_argument_error("--method sparsity requires a sparsity controller set");

        auto qi = check_qi(problem.plant, problem.set, flag);
        auto adj = adjugate_invariance(problem.plant, problem.set);
        auto hinv = h_invariance(problem.plant, problem.set);

        bool warn = qi.verdict == Verdict::True && adj.verdict == Verdict::False;
        if (as_json) {
            Json out;
            out["format"] = 1;
            out["check_qi"] = report_to_json(qi);
            out["adjugate_invariance"] = report_to_json(adj);
            out["h_invariance"] = report_to_json(hinv);
            if (warn)
                out["warning"] =
                    "S is QI but some K adj(I - GK) leaves S; the 2_R unit hypothesis fails for this ring";
            std::cout << out.dump(2) << "\n";
        } else {
            print_report_text("check_qi", qi);
            print_report_text("adjugate_invariance", adj);
            print_report_text("h_invariance", hinv);
            if (warn)
                std::cout << "warning: S is QI but some K adj(I - GK) leaves S; "
                             "the 2_R unit hypothesis fails for this ring\n";
        }
        return verdict_exit(qi.verdict);
    });
}

int cmd_h_map(const std::string& file, const std::string& kfile, bool as_json) {
    Json j = load_json_file(file);
    Json kj = load_json_file(kfile);
    return with_problem(j, [&](auto problem) {
        using R = std::decay_t<decltype(problem.ring)>;
        const Json& kmat = kj.is_object() && kj.contains("k") ? kj.at("k") : kj;
        Matrix<R> k = matrix_from_json(problem.ring, kmat);
        auto h = h_map(k, problem.plant);
        if (auto* ni = std::get_if<NotInM<R>>(&h)) {
            if (as_json) {
                Json out{{"format", 1}, {"not_in_m", true}, {"det", problem.ring.to_string(ni->det)}};
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "NotInM: det(I - GK) = " << problem.ring.to_string(ni->det)
                          << " is not a unit of " << problem.ring.name() << "\n";
            }
            return kExitFails;
        }
        const auto& hm = std::get<Matrix<R>>(h);
        if (as_json) {
            Json out{{"format", 1}, {"h", matrix_to_json(hm)}};
            std::cout << out.dump(2) << "\n";
        } else if (hm.rows() == 1 && hm.cols() == 1) {
            std::cout << problem.ring.to_string(hm.at(0, 0)) << "\n";
        } else {
            std::cout << hm.to_string() << "\n";
        }
        return kExitHolds;
    });
}

int cmd_closed_loop(const std::string& file, bool as_json) {
    Json j = load_json_file(file);
    return with_problem(j, [&](auto problem) {
        if (!problem.p11 || !problem.p12 || !problem.p21)
            throw invalid_argument_error("closed-loop needs p11, p12 and p21 in the problem file");
        auto cl = closed_loop_set(*problem.p11, *problem.p12, *problem.p21, problem.plant, problem.set);
        if (!cl.set) {
            if (as_json) {
                Json out;
                out["format"] = 1;
                out["closed_loop"] = "unknown";
                out["h_invariance"] = report_to_json(cl.h_report);
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "closed-loop set: unknown (h-invariance was not established)\n";
                print_report_text("h_invariance", cl.h_report);
            }
            int code = verdict_exit(cl.h_report.verdict);
            return code == kExitHolds ? kExitUnknown : code;
        }
        if (as_json) {
            Json out;
            out["format"] = 1;
            out["offset"] = matrix_to_json(cl.set->offset);
            Json imgs = Json::array();
            for (const auto& mimg : cl.set->images) imgs.push_back(matrix_to_json(mimg));
            out["images"] = std::move(imgs);
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "offset = " << cl.set->offset.to_string() << "\n";
            for (std::size_t i = 0; i < cl.set->images.size(); ++i)
                std::cout << "image " << (i + 1) << " = " << cl.set->images[i].to_string() << "\n";
        }
        return kExitHolds;
    });
}

int cmd_oracle(long p, int m, int n, int gens, int trials, std::uint64_t seed, bool as_json) {
    oracle::ExperimentConfig cfg;
    cfg.p = Int(p);
    cfg.m = m;
    cfg.n = n;
    cfg.gen_count = gens;
    cfg.trials = trials;
    cfg.seed = seed;
    auto t0 = std::chrono::steady_clock::now();
    auto rep = oracle::run_equivalence_experiment(cfg);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    // stdout stays byte-identical across runs; timing goes to stderr
    std::cerr << "# runtime_ms: " << ms << "\n";
    if (as_json) {
        std::cout << oracle_report_to_json(rep).dump(2) << "\n";
    } else {
        std::cout << "trials: " << rep.trials << "\n";
        std::cout << "agreements: " << rep.agreements << "\n";
        std::cout << "discrepancies: " << rep.discrepancies.size() << "\n";
        for (const auto& d : rep.discrepancies)
            std::cout << "  trial " << d.trial << ": qi=" << (d.qi ? "true" : "false")
                      << " h_invariance=" << (d.h_inv ? "true" : "false") << "\n";
    }
    return rep.discrepancies.empty() ? kExitHolds : kExitFails;
}

template <commutative_ring R>
int vandermonde_in_ring(const R& ring, const std::vector<std::string>& point_exprs, int width, int n_max,
                        bool as_json) {
    std::vector<typename R::elem> candidates;
    for (const auto& e : point_exprs) candidates.push_back(parse_scalar(ring, e));
    auto res = search_left_invertible(ring, width, candidates, n_max);
    if (!res) {
        if (as_json) {
            Json out{{"format", 1}, {"found", false}};
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "no left-invertible Vandermonde matrix over the supplied candidates\n";
        }
        return kExitFails;
    }
    auto v = vandermonde_build(VandermondeSpec<R>(ring, res->points, width));
    bool ok = verify_left_inverse(res->left_inverse, v);
    if (as_json) {
        Json out;
        out["format"] = 1;
        out["found"] = true;
        Json pts = Json::array();
        for (const auto& pt : res->points) pts.push_back(ring.to_string(pt));
        out["points"] = std::move(pts);
        out["vandermonde"] = matrix_to_json(v);
        out["left_inverse"] = matrix_to_json(res->left_inverse);
        out["product_is_identity"] = ok;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "points:";
        for (const auto& pt : res->points) std::cout << " " << ring.to_string(pt);
        std::cout << "\nV = " << v.to_string() << "\n";
        std::cout << "L = " << res->left_inverse.to_string() << "\n";
        std::cout << "L*V = " << matmul(res->left_inverse, v).to_string() << (ok ? " (identity)" : "") << "\n";
    }
    return ok ? kExitHolds : kExitFails;
}

int cmd_vandermonde(const std::string& ring_name, const std::string& points_csv, int width, int n_max,
                    bool as_json) {
    std::vector<std::string> exprs;
    std::string cur;
    for (char c : points_csv) {
        if (c == ',') {
            exprs.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) exprs.push_back(cur);
    if (exprs.empty()) throw invalid_argument_error("--points must list at least one point");
    if (n_max <= 0) n_max = static_cast<int>(exprs.size());

    if (ring_name == "integers") return vandermonde_in_ring(IntRing{}, exprs, width, n_max, as_json);
    if (ring_name == "rationals") return vandermonde_in_ring(RatRing{}, exprs, width, n_max, as_json);
    if (ring_name == "zbeta") return vandermonde_in_ring(ZBetaRing{}, exprs, width, n_max, as_json);
    if (ring_name.rfind("mod:", 0) == 0)
        return vandermonde_in_ring(ModRing{Int(ring_name.substr(4), 10)}, exprs, width, n_max, as_json);
    throw invalid_argument_error("--ring must be integers, rationals, zbeta or mod:<p>");
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("QINV_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw invalid_argument_error("QINV_SEED must be an unsigned integer");
        }
    }
    return 42;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact quadratic-invariance toolkit for decentralized control over commutative rings"};
    app.require_subcommand(1);

    std::string file, method = "auto", kfile;
    bool as_json = false;

    auto* check = app.add_subcommand("check-qi", "decide QI, adjugate invariance and h-invariance");
    check->add_option("file", file, "problem JSON file")->required();
    check->add_option("--method", method, "auto|generators|sparsity")
        ->check(CLI::IsMember({"auto", "generators", "sparsity"}));
    check->add_flag("--json", as_json, "emit a JSON report");

    auto* hmap = app.add_subcommand("h-map", "apply h(K) = -K (I - GK)^-1");
    hmap->add_option("file", file, "problem JSON file")->required();
    hmap->add_option("--k", kfile, "JSON file holding K as an array of expression rows")->required();
    hmap->add_flag("--json", as_json, "emit a JSON report");

    auto* closed = app.add_subcommand("closed-loop", "offset and generator images of the closed-loop set");
    closed->add_option("file", file, "problem JSON file")->required();
    closed->add_flag("--json", as_json, "emit a JSON report");

    long p = 7;
    int m = 2, n = 2, gens = 3, trials = 200, width = 3, n_max = 0;
    std::uint64_t seed = 0;
    bool seed_given = false;
    auto* orc = app.add_subcommand("oracle", "exhaustive QI <-> h-invariance experiment over Z/pZ");
    orc->add_option("--p", p, "prime modulus");
    orc->add_option("--m", m, "plant rows");
    orc->add_option("--n", n, "plant cols");
    orc->add_option("--gens", gens, "generator count");
    orc->add_option("--trials", trials, "number of random instances");
    orc->add_option("--seed", seed, "instance stream seed")->each([&](const std::string&) { seed_given = true; });
    orc->add_flag("--json", as_json, "emit a JSON report");

    std::string vring = "integers", points;
    auto* vand = app.add_subcommand("vandermonde", "search for a left-invertible Vandermonde matrix");
    vand->add_option("--ring", vring, "integers|rationals|zbeta|mod:<p>");
    vand->add_option("--points", points, "comma-separated candidate points")->required();
    vand->add_option("--n", width, "matrix width")->required();
    vand->add_option("--n-max", n_max, "tallest matrix to try (default: all candidates)");
    vand->add_flag("--json", as_json, "emit a JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitError;
    }

    try {
        if (check->parsed()) return cmd_check_qi(file, method, as_json);
        if (hmap->parsed()) return cmd_h_map(file, kfile, as_json);
        if (closed->parsed()) return cmd_closed_loop(file, as_json);
        if (orc->parsed()) return cmd_oracle(p, m, n, gens, trials, seed_given ? seed : default_seed(), as_json);
        if (vand->parsed()) return cmd_vandermonde(vring, points, width, n_max, as_json);
    } catch (const qinv::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
