#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "holodyn/dynamics.hpp"
#include "holodyn/error.hpp"
#include "holodyn/fock.hpp"
#include "holodyn/graded.hpp"
#include "holodyn/henon.hpp"
#include "holodyn/json_io.hpp"
#include "holodyn/linalg.hpp"
#include "holodyn/rigidity.hpp"
#include "holodyn/sphere_search.hpp"

namespace holodyn::cli {

namespace {

using nlohmann::json;
namespace jio = holodyn::json_io;

struct Common {
    std::uint64_t seed = 0;
    int threads = 1;
    std::string format = "json";
    Tolerances tol;
};

// A result ready to print, with the exit code it implies.
struct Outcome {
    json body;
    int code = kOk;
    std::string csv;  // used instead of the flattened JSON when set
};

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError(path, "cannot open file");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError(path, std::string("invalid JSON: ") + e.what());
    }
}

Weight read_weight(const std::string& path, int dim) {
    if (path.empty()) return Weight::one(dim);
    return jio::weight_from_json(read_json_file(path), dim);
}

Vector parse_point(const std::string& text, int dim) {
    std::vector<Complex> coords;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) coords.push_back(parse_complex(item));
    if (static_cast<int>(coords.size()) != dim)
        throw SchemaError("--point", "expected " + std::to_string(dim) + " comma-separated coordinates");
    Vector p(dim);
    for (int i = 0; i < dim; ++i) p[i] = coords[static_cast<std::size_t>(i)];
    return p;
}

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
    } else if (j.is_array() && !j.empty() && (j[0].is_structured())) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
    } else if (j.is_string()) {
        rows.emplace_back(prefix, j.get<std::string>());
    } else {
        rows.emplace_back(prefix, j.dump());
    }
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void emit(const Outcome& o, const Common& common, std::ostream& out) {
    if (common.format == "json") {
        out << o.body.dump(2) << "\n";
        return;
    }
    if (common.format == "csv" && !o.csv.empty()) {
        out << o.csv;
        return;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(o.body, "", rows);
    if (common.format == "csv") {
        out << "key,value\n";
        for (const auto& [k, v] : rows) out << csv_field(k) << "," << csv_field(v) << "\n";
    } else {
        std::size_t width = 0;
        for (const auto& r : rows) width = std::max(width, r.first.size());
        for (const auto& [k, v] : rows) out << std::left << std::setw(static_cast<int>(width)) << k << "  " << v << "\n";
    }
}

json header(const std::string& command, const Common& c) {
    return {{"command", command}, {"seed", c.seed}, {"tolerances", jio::to_json(c.tol)}};
}

int verdict_code(Verdict v) { return v == Verdict::Inapplicable ? kInapplicable : kOk; }

// graded ------------------------------------------------------------------

struct GradedArgs {
    std::string map, weight, point;
    int n = 1;
};

Outcome cmd_graded(const GradedArgs& a, const Common& c) {
    const PolyMap f = jio::polymap_from_json(read_json_file(a.map));
    const Weight u = read_weight(a.weight, f.dim());
    if (!u.has_jets()) throw PreconditionError("graded matrices need a weight with jets");
    if (a.n < 0) throw SchemaError("--n", "must be >= 0");
    const Vector p = a.point.empty() ? Vector(Vector::Zero(f.dim())) : parse_point(a.point, f.dim());
    const int cap = std::max(a.n, 1);

    const auto brute = graded_matrix_bruteforce(u.jet_at(p, cap), f.to_jet_map(p, cap), a.n, c.tol.base);
    Outcome o;
    o.body = header("graded", c);
    o.body["point"] = jio::to_json(p);
    o.body["n"] = a.n;
    o.body["bruteforce"] = jio::to_json(brute);

    const Vector fp = f(p);
    const bool fixed = (fp - p).norm() <= c.tol.orbit * rel_scale(p.norm());
    o.body["fixed_point"] = fixed;
    if (!fixed) {
        o.body["note"] = "p is not fixed by f: columns are expressed at f(p), rows at p; no eigenvalue law";
        return o;
    }
    const Complex up = u(p);
    const Matrix A = f.jacobian(p);
    const auto formula = graded_matrix_formula(up, A, a.n);
    const double scale = std::max(1.0, spectral_norm(formula.entries));
    const double entry_diff = (formula.entries - brute.entries).cwiseAbs().maxCoeff() / scale;
    const auto eig = graded_eigenvalues(formula);
    const auto law = graded_eigenvalue_law(up, eigenvalues(A), a.n);
    const double eig_dist = multiset_distance(eig, law);

    o.body["formula"] = jio::to_json(formula);
    o.body["eigenvalues"] = jio::to_json(eig);
    o.body["predicted_eigenvalues"] = jio::to_json(law);
    o.body["max_entry_difference"] = entry_diff;
    o.body["eigenvalue_distance"] = eig_dist;
    const bool ok = entry_diff <= c.tol.eig && eig_dist <= c.tol.eig;
    o.body["consistent"] = ok;
    if (!ok) o.code = kSelfCheck;
    return o;
}

// certify -----------------------------------------------------------------

struct CertifyArgs {
    std::string map, weight, mode = "bounded", point;
    int r = 1;
    int r_max = 4;
    int starts = 2000;
    std::vector<std::string> lambdas;
};

ObstructionCertificate certify_local_search(const PolyMap& f, const Weight& u, const CertifyArgs& a, const Common& c,
                                            bool compact) {
    const auto run = [&](const PeriodicOrbit& orbit) {
        return compact ? certify_compact(f, u, orbit, c.tol) : certify_bounded(f, u, orbit, c.tol);
    };
    if (!a.point.empty()) {
        const Vector p = parse_point(a.point, f.dim());
        return run(make_orbit(f, p, a.r, u, c.tol));
    }
    SearchConfig cfg;
    cfg.seed = c.seed;
    cfg.threads = c.threads;
    cfg.starts = a.starts;
    const auto search = find_periodic_orbits(f, u, a.r_max, cfg, c.tol);
    std::optional<ObstructionCertificate> fallback;
    for (const auto& orbit : search.orbits) {
        auto cert = run(orbit);
        cert.search_complete = search.complete;
        if (cert.verdict == Verdict::Unbounded || cert.verdict == Verdict::NonCompact) return cert;
        if (!fallback || (fallback->verdict == Verdict::Inapplicable && cert.verdict == Verdict::NoObstruction))
            fallback = std::move(cert);
    }
    if (fallback) return *fallback;
    ObstructionCertificate none;
    none.tolerances = c.tol;
    none.search_complete = search.complete;
    none.notes.push_back("no periodic orbit of period <= " + std::to_string(a.r_max) + " was found");
    return none;
}

Outcome cmd_certify(const CertifyArgs& a, const Common& c) {
    const PolyMap f = jio::polymap_from_json(read_json_file(a.map));
    const Weight u = read_weight(a.weight, f.dim());
    if (a.r < 1) throw SchemaError("--r", "must be >= 1");
    if (a.r_max < 1) throw SchemaError("--r-max", "must be >= 1");
    std::vector<Complex> levels;
    for (const auto& s : a.lambdas) levels.push_back(parse_complex(s));

    ObstructionCertificate cert;
    if (a.mode == "bounded" || a.mode == "compact") {
        cert = certify_local_search(f, u, a, c, a.mode == "compact");
    } else if (a.mode == "hypercyclic") {
        SearchConfig cfg;
        cfg.seed = c.seed;
        cfg.threads = c.threads;
        cfg.starts = a.starts;
        const auto search = find_periodic_orbits(f, u, a.r_max, cfg, c.tol);
        cert = certify_hypercyclic(f, search.orbits, search.complete, c.tol);
    } else if (a.mode == "cyclic") {
        if (f.dim() == 1) {
            cert = certify_cyclic(f, u, a.r, levels, c.tol);
        } else {
            SearchConfig cfg;
            cfg.seed = c.seed;
            cfg.threads = c.threads;
            cfg.starts = a.starts;
            const auto set = periodic_points_2d(f, a.r, cfg, c.tol);
            std::vector<Complex> values;
            for (const auto& p : set.points) {
                Complex prod = 1.0;
                Vector z = p;
                for (int j = 0; j < a.r; ++j) {
                    prod *= u(z);
                    z = f(z);
                }
                values.push_back(prod);
            }
            cert = certify_cyclic_points(set.points, values, a.r, false, levels, c.tol);
        }
    } else {
        throw SchemaError("--mode", "expected bounded, compact, cyclic or hypercyclic");
    }

    Outcome o;
    o.body = header("certify", c);
    o.body["mode"] = a.mode;
    o.body["certificate"] = jio::to_json(cert);
    if (f.dim() == 1 && (a.mode == "bounded" || a.mode == "compact")) {
        const auto av = affine_verdict_1d(f, 8, c.tol);
        json j = {{"affine", av.affine}, {"consistent_with_boundedness", av.consistent_with_boundedness},
                  {"message", av.message}};
        if (av.alpha) j["alpha"] = jio::to_json(*av.alpha);
        if (av.witness) j["witness"] = jio::to_json(*av.witness);
        o.body["one_variable_verdict"] = j;
    }
    o.code = verdict_code(cert.verdict);
    return o;
}

// search-repelling --------------------------------------------------------

struct RepellingArgs {
    std::string map, profile_out;
    std::vector<double> s_range{-2.0, 4.0};
    int steps = 25;
    int starts = 200;
};

Outcome cmd_search_repelling(const RepellingArgs& a, const Common& c) {
    const PolyMap f = jio::polymap_from_json(read_json_file(a.map));
    if (a.s_range.size() != 2 || !(a.s_range[1] > a.s_range[0]))
        throw SchemaError("--s-range", "expected two increasing numbers");
    RepellingOptions opt;
    opt.s_lo = a.s_range[0];
    opt.s_hi = a.s_range[1];
    opt.steps = a.steps;
    opt.budget.starts = a.starts;
    opt.budget.seed = c.seed;
    opt.budget.threads = c.threads;
    const auto rc = construct_repelling(f, opt);

    if (!a.profile_out.empty()) {
        std::ofstream prof(a.profile_out);
        if (!prof) throw SchemaError("--profile-out", "cannot open file for writing");
        prof << "s,H,H'\n" << std::setprecision(17);
        for (const auto& s : rc.profile.samples) prof << s.s << "," << s.H << "," << s.dH << "\n";
    }
    Outcome o;
    o.body = header("search-repelling", c);
    o.body["construction"] = jio::to_json(rc);
    o.body["profile"] = jio::to_json(rc.profile);
    return o;
}

// fock --------------------------------------------------------------------

struct FockArgs {
    std::string map, weight;
    int N = -1;
    bool profile = false;
    bool dump_matrix = false;
};

Outcome cmd_fock(const FockArgs& a, const Common& c) {
    const PolyMap f = jio::polymap_from_json(read_json_file(a.map));
    const Weight u = read_weight(a.weight, f.dim());
    if (!u.has_jets()) throw PreconditionError("the Fock model needs a weight with jets");
    const int N = a.N >= 0 ? a.N : (f.dim() == 1 ? 40 : 12);

    std::vector<int> caps;
    for (int k = 0; k <= N; ++k) caps.push_back(k);
    const auto sweep = norm_sweep(u, f, caps);

    Outcome o;
    o.body = header("fock", c);
    o.body["N"] = N;
    json rows = json::array();
    for (const auto& r : sweep) rows.push_back({{"N", r.N}, {"norm", r.norm}, {"truncation_loss", r.truncation_loss}});
    o.body["sweep"] = rows;
    o.body["note"] = "finite sections give lower bounds for the operator norm; truncation keeps lower bounds valid";
    o.csv = norm_sweep_csv(sweep);

    const auto m = operator_matrix(u, f, N);
    if (a.profile) {
        const auto prof = restriction_norm_profile(m);
        json pj = json::array();
        for (std::size_t i = 0; i < prof.levels.size(); ++i)
            pj.push_back({{"n", prof.levels[i]}, {"norm", prof.norms[i]}});
        o.body["profile"] = {{"rows", pj}, {"truncation_loss", prof.truncation_loss}};
        if (!prof.warning.empty()) o.body["profile"]["warning"] = prof.warning;
        o.csv += "\n" + restriction_profile_csv(prof);
    }
    if (a.dump_matrix) o.body["matrix"] = jio::to_json(m);
    return o;
}

// henon -------------------------------------------------------------------

struct HenonArgs {
    std::string henon, weight;
    int r_max = 4;
    int starts = 400;
};

Outcome cmd_henon(const HenonArgs& a, const Common& c) {
    const HenonComposition h = jio::henon_from_json(read_json_file(a.henon));
    const Weight u = read_weight(a.weight, 2);
    if (a.r_max < 1) throw SchemaError("--r-max", "must be >= 1");
    SaddleSearchOptions opt;
    opt.r_max = a.r_max;
    opt.search.starts = a.starts;
    opt.search.seed = c.seed;
    opt.search.threads = c.threads;
    const auto cert = saddle_certificate(h, u, opt, c.tol);

    Outcome o;
    o.body = header("henon", c);
    o.body["jacobian_determinant"] = jio::to_json(h.jacobian_determinant());
    if (h.factors().size() == 1) {
        json fps = json::array();
        for (const auto& fp : fixed_points(h.factors().front(), c.tol))
            fps.push_back({{"point", jio::to_json(fp.point)},
                           {"multipliers", jio::to_json(fp.multipliers)},
                           {"stability", to_string(fp.stability)},
                           {"residual", fp.residual}});
        o.body["fixed_points"] = fps;
    }
    o.body["certificate"] = jio::to_json(cert);
    o.code = verdict_code(cert.verdict);
    return o;
}

// duality -----------------------------------------------------------------

Outcome cmd_duality(const std::string& path, const Common& c) {
    const json in = read_json_file(path);
    if (!in.is_object() || !in.contains("L")) throw SchemaError("L", "missing");
    if (!in.contains("B")) throw SchemaError("B", "missing");
    const Matrix L = jio::matrix_from_json(in["L"], "L");
    const Matrix B = jio::matrix_from_json(in["B"], "B");
    if (L.rows() != B.rows()) throw SchemaError("L", "row count differs from B");
    Outcome o;
    o.body = header("duality", c);
    o.body["result"] = jio::to_json(duality_check(L, B, c.tol.rank));
    return o;
}

}  // namespace

std::complex<double> parse_complex(const std::string& raw) {
    std::string s;
    for (char ch : raw) {
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    }
    if (s.empty()) throw SchemaError("complex", "empty value");
    const auto to_double = [&](const std::string& t) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(t, &used);
        } catch (const std::exception&) {
            throw SchemaError("complex", "cannot parse '" + raw + "'");
        }
        if (used != t.size() || !std::isfinite(v)) throw SchemaError("complex", "cannot parse '" + raw + "'");
        return v;
    };
    if (s.back() != 'i' && s.back() != 'j') return {to_double(s), 0.0};

    s.pop_back();
    // Split at the last sign that is not a leading sign or an exponent sign.
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    const std::string re = split == std::string::npos ? "" : s.substr(0, split);
    std::string im = split == std::string::npos ? s : s.substr(split);
    if (im.empty() || im == "+") im = "1";
    if (im == "-") im = "-1";
    return {re.empty() ? 0.0 : to_double(re), to_double(im)};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weighted composition operators: graded jets, periodic-point certificates and finite models",
                 "holodyn"};
    app.require_subcommand(1);
    app.fallthrough();

    Common common;
    app.add_option("--seed", common.seed, "random seed (default from HOLO_SEED, else 0)")
        ->envname("HOLO_SEED")
        ->capture_default_str();
    app.add_option("--threads", common.threads, "worker thread cap")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--format", common.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "human"}))
        ->capture_default_str();
    app.add_option("--tol-base", common.tol.base, "composition base match (relative)")->capture_default_str();
    app.add_option("--tol-eig", common.tol.eig, "eigenvalue pairing (relative)")->capture_default_str();
    app.add_option("--tol-orbit", common.tol.orbit, "periodicity residual (relative)")->capture_default_str();
    app.add_option("--tol-classify", common.tol.classify, "band around |mu| = 1")->capture_default_str();
    app.add_option("--tol-level", common.tol.level, "u_r level grouping (relative)")->capture_default_str();
    app.add_option("--tol-rank", common.tol.rank, "numerical rank cutoff")->capture_default_str();
    app.add_option("--tol-cluster", common.tol.cluster, "periodic point dedup radius")->capture_default_str();
    app.add_option("--tol-vanish", common.tol.vanish, "|u_r| treated as zero")->capture_default_str();

    GradedArgs ga;
    auto* graded = app.add_subcommand("graded", "graded operator matrix at a point");
    graded->add_option("--map", ga.map, "polynomial map JSON")->required();
    graded->add_option("--weight", ga.weight, "weight JSON (default u = 1)");
    graded->add_option("--point", ga.point, "comma-separated coordinates (default 0)");
    graded->add_option("--n", ga.n, "graded degree")->required();

    CertifyArgs ca;
    auto* certify = app.add_subcommand("certify", "obstruction certificate");
    certify->add_option("--map", ca.map, "polynomial map JSON")->required();
    certify->add_option("--weight", ca.weight, "weight JSON (default u = 1)");
    certify->add_option("--mode", ca.mode, "property to test")
        ->check(CLI::IsMember({"bounded", "compact", "cyclic", "hypercyclic"}))
        ->capture_default_str();
    certify->add_option("--r", ca.r, "period")->capture_default_str();
    certify->add_option("--r-max", ca.r_max, "largest period searched")->capture_default_str();
    certify->add_option("--point", ca.point, "start of a periodic orbit (bounded/compact)");
    certify->add_option("--lambda", ca.lambdas, "level of u_r (repeatable)");
    certify->add_option("--starts", ca.starts, "Newton starts for d = 2")->capture_default_str();

    RepellingArgs ra;
    auto* repel = app.add_subcommand("search-repelling", "sphere construction of an expanding fixed point");
    repel->add_option("--map", ra.map, "polynomial map JSON")->required();
    repel->add_option("--s-range", ra.s_range, "log-radius interval")->expected(2)->delimiter(',')->capture_default_str();
    repel->add_option("--steps", ra.steps, "grid points")->check(CLI::Range(3, 100000))->capture_default_str();
    repel->add_option("--starts", ra.starts, "ascent starts per radius")->capture_default_str();
    repel->add_option("--profile-out", ra.profile_out, "CSV file for the Hadamard profile");

    FockArgs fa;
    auto* fock = app.add_subcommand("fock", "finite Fock-space sections");
    fock->add_option("--map", fa.map, "polynomial map JSON")->required();
    fock->add_option("--weight", fa.weight, "weight JSON (default u = 1)");
    fock->add_option("--N", fa.N, "degree cap (default 40 for d = 1, 12 for d = 2)");
    fock->add_flag("--profile", fa.profile, "emit the restriction-norm profile");
    fock->add_flag("--dump-matrix", fa.dump_matrix, "include the matrix at the cap");

    HenonArgs ha;
    auto* henon = app.add_subcommand("henon", "saddle certificate for a Henon composition");
    henon->add_option("--henon", ha.henon, "Henon composition JSON")->required();
    henon->add_option("--weight", ha.weight, "weight JSON on C^2 (default u = 1)");
    henon->add_option("--r-max", ha.r_max, "largest period searched")->capture_default_str();
    henon->add_option("--starts", ha.starts, "Newton starts at period 1 (doubling)")->capture_default_str();

    std::string duality_input;
    auto* duality = app.add_subcommand("duality", "image condition versus kernel condition");
    duality->add_option("--input", duality_input, "JSON with matrices L and B")->required();

    try {
        std::vector<std::string> rev(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
        std::reverse(rev.begin(), rev.end());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        Outcome o;
        if (graded->parsed()) {
            o = cmd_graded(ga, common);
        } else if (certify->parsed()) {
            o = cmd_certify(ca, common);
        } else if (repel->parsed()) {
            o = cmd_search_repelling(ra, common);
        } else if (fock->parsed()) {
            o = cmd_fock(fa, common);
        } else if (henon->parsed()) {
            o = cmd_henon(ha, common);
        } else {
            o = cmd_duality(duality_input, common);
        }
        emit(o, common, out);
        if (o.code == kSelfCheck) err << "self-check failed: see the consistency fields in the output\n";
        return o.code;
    } catch (const SchemaError& e) {
        err << e.what() << "\n";
        return kUsage;
    } catch (const RecoverableSearchError& e) {
        err << e.what() << "\n";
        return kPrecondition;
    } catch (const PreconditionError& e) {
        err << "precondition: " << e.what() << "\n";
        return kPrecondition;
    } catch (const NotPeriodicError& e) {
        err << "precondition: " << e.what() << "\n";
        return kPrecondition;
    } catch (const TermOverflowError& e) {
        err << "precondition: " << e.what() << "\n";
        return kPrecondition;
    } catch (const SelfCheckError& e) {
        err << "self-check failed: " << e.what() << "\n";
        return kSelfCheck;
    } catch (const StructuralError& e) {
        err << "input error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kSelfCheck;
    }
}

}  // namespace holodyn::cli
