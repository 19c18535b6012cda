#include "lef/cli.hpp"

#include <chrono>
#include <complex>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "lef/contraction.hpp"
#include "lef/euler.hpp"
#include "lef/geodesic_graph.hpp"
#include "lef/lefschetz.hpp"
#include "lef/padic.hpp"
#include "lef/root_datum.hpp"
#include "lef/sampling.hpp"

namespace lef::cli {

using json = nlohmann::ordered_json;

namespace {

struct CommandResult {
    json report;
    int exit_code = 0;
};

json complex_json(const std::complex<double>& z) {
    return json{{"re", z.real()}, {"im", z.imag()}};
}

std::string format_complex(const std::complex<double>& z) {
    std::ostringstream os;
    os.precision(15);
    os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    return os.str();
}

json spectrum_json(const AbsValueSpectrum& s) {
    json arr = json::array();
    for (const auto& [val, mult] : s.entries())
        arr.push_back(json::array({to_string(val), mult}));
    return arr;
}

// ---- input parsing helpers ----

struct ParseFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational parse_rational(const std::string& tok) {
    try {
        return Rational(tok);
    } catch (const std::exception&) {
        throw ParseFailure("cannot parse rational '" + tok + "'");
    }
}

std::vector<std::string> read_directive_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream probe(line);
        std::string tok;
        if (probe >> tok) lines.push_back(line);
    }
    return lines;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseFailure("cannot open input file: " + path);
    return in;
}

// ---- newton ----

CommandResult run_newton_file(const RunConfig& cfg) {
    std::ifstream in = open_input(cfg.input_path);
    long q = -1;
    RatPoly poly;
    std::vector<std::vector<Rational>> matrix_rows;
    long matrix_n = 0;
    bool in_matrix = false;
    for (const std::string& line : read_directive_lines(in)) {
        std::istringstream ls(line);
        if (in_matrix && static_cast<long>(matrix_rows.size()) < matrix_n) {
            std::vector<Rational> row;
            std::string tok;
            while (ls >> tok) row.push_back(parse_rational(tok));
            if (static_cast<long>(row.size()) != matrix_n)
                throw ParseFailure("matrix row has wrong length");
            matrix_rows.push_back(std::move(row));
            continue;
        }
        std::string key;
        ls >> key;
        if (key == "q") {
            if (!(ls >> q)) throw ParseFailure("expected integer after 'q'");
        } else if (key == "poly") {
            std::string tok;
            while (ls >> tok) poly.push_back(parse_rational(tok));
            if (poly.empty()) throw ParseFailure("'poly' needs coefficients (constant first)");
        } else if (key == "matrix") {
            if (!(ls >> matrix_n) || matrix_n < 1) throw ParseFailure("'matrix' needs a size");
            in_matrix = true;
        } else {
            throw ParseFailure("unknown directive '" + key + "'");
        }
    }
    if (q < 0) throw ParseFailure("missing 'q' line");
    PadicContext ctx(q);

    json rep;
    rep["command"] = "newton";
    rep["input"] = cfg.input_path;
    rep["q"] = q;
    if (!poly.empty()) {
        rep["kind"] = "poly";
        NewtonResult nr = newton_slopes(ctx, poly);
        rep["zero_roots"] = nr.zero_roots;
        rep["slopes"] = spectrum_json(nr.slopes);
    } else if (in_matrix) {
        if (static_cast<long>(matrix_rows.size()) != matrix_n)
            throw ParseFailure("matrix rows missing");
        RatMatrix g(matrix_n, matrix_n);
        for (long i = 0; i < matrix_n; ++i)
            for (long j = 0; j < matrix_n; ++j) g(i, j) = matrix_rows[i][j];
        rep["kind"] = "matrix";
        rep["n"] = matrix_n;
        AbsValueSpectrum spec = eigen_abs_values(ctx, g);
        LambdaExtremes ext = lambda_min_max(spec);
        rep["spectrum"] = spectrum_json(spec);
        rep["lambda_min_exponent"] = to_string(ext.min_exponent);
        rep["lambda_max_exponent"] = to_string(ext.max_exponent);
        rep["root_of_unity_eigenvalue"] = has_root_of_unity_eigenvalue(g);
    } else {
        throw ParseFailure("newton input needs a 'poly' or 'matrix' section");
    }
    return {std::move(rep), 0};
}

CommandResult run_newton_random(const RunConfig& cfg) {
    Rng rng(static_cast<std::uint64_t>(cfg.seed));
    SuiteResult res = newton_oracle_suite(rng, cfg.random_count);
    json rep;
    rep["command"] = "newton";
    rep["random"] = cfg.random_count;
    rep["seed"] = cfg.seed;
    rep["passed"] = res.total - res.failed();
    rep["failed"] = res.failed();
    rep["failures"] = res.failures;
    rep["all_pass"] = res.pass();
    return {std::move(rep), res.pass() ? 0 : 1};
}

// ---- region ----

CommandResult run_region_file(const RunConfig& cfg) {
    std::ifstream in = open_input(cfg.input_path);
    long q = -1, n = -1;
    std::string family;
    std::vector<Rational> a_diag, m_diag;
    for (const std::string& line : read_directive_lines(in)) {
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        auto read_diag = [&](std::vector<Rational>& dst) {
            std::string tok;
            while (ls >> tok) dst.push_back(parse_rational(tok));
        };
        if (key == "q") {
            if (!(ls >> q)) throw ParseFailure("expected integer after 'q'");
        } else if (key == "family") {
            ls >> family;
        } else if (key == "n") {
            if (!(ls >> n)) throw ParseFailure("expected integer after 'n'");
        } else if (key == "a") {
            read_diag(a_diag);
        } else if (key == "m") {
            read_diag(m_diag);
        } else {
            throw ParseFailure("unknown directive '" + key + "'");
        }
    }
    if (q < 0) throw ParseFailure("missing 'q' line");
    PadicContext ctx(q);
    RootDatum rd = [&] {
        if (family == "GL") return RootDatum::gl(static_cast<int>(n));
        if (family == "SL") return RootDatum::sl(static_cast<int>(n));
        if (family == "PGL2") return RootDatum::pgl2();
        throw ParseFailure("family must be GL, SL or PGL2");
    }();
    if (a_diag.empty()) throw ParseFailure("missing 'a' diagonal");
    if (m_diag.empty()) m_diag.assign(rd.n, Rational(1));

    bool elliptic = true;
    for (const Rational& u : m_diag)
        if (!(valuation(ctx, u) == Val(0))) elliptic = false;
    LeviPair p = LeviPair::make(ctx, rd, a_diag, m_diag, elliptic);

    json rep;
    rep["command"] = "region";
    rep["input"] = cfg.input_path;
    rep["q"] = q;
    rep["family"] = family;
    rep["n"] = rd.n;
    {
        TorusElement a = p.a_torus();
        rep["a_valuations"] = a.valuations();
        rep["in_A_minus"] = in_A_minus(a, rd);
    }
    rep["m_elliptic_model"] = elliptic;
    json spectra;
    spectra["n"] = spectrum_json(adjoint_spectrum(p, Subspace::N));
    spectra["nbar"] = spectrum_json(adjoint_spectrum(p, Subspace::NBar));
    spectra["g"] = spectrum_json(adjoint_spectrum(p, Subspace::G));
    spectra["a+m+n"] = spectrum_json(adjoint_spectrum(p, Subspace::AMN));
    rep["adjoint_spectra"] = std::move(spectra);
    rep["lambda_exponent"] = to_string(lambda_am(p));
    rep["in_AM_tilde"] = in_AM_tilde(p);
    int exit_code = 0;
    if (in_A_minus(p.a_torus(), rd) && elliptic) {
        DetIdentity d = det_identity(p);
        rep["det_identity"] = json{{"det_abs", to_string(d.det_abs)},
                                   {"modular_abs", to_string(d.modular_abs)},
                                   {"equal", d.equal()}};
        if (!d.equal()) exit_code = 1;
    } else {
        rep["det_identity"] = "skipped: preconditions (a in A^-, m elliptic) not met";
    }
    return {std::move(rep), exit_code};
}

CommandResult run_region_random(const RunConfig& cfg) {
    Rng rng(static_cast<std::uint64_t>(cfg.seed));
    RegionSuite suite = region_suite(rng, cfg.random_count);
    json rep;
    rep["command"] = "region";
    rep["random"] = cfg.random_count;
    rep["seed"] = cfg.seed;
    rep["det_identity"] = json{{"checked", suite.det_identity.total},
                               {"failed", suite.det_identity.failed()}};
    rep["contrapositive"] = json{{"checked", suite.contrapositive.total},
                                 {"failed", suite.contrapositive.failed()}};
    rep["ma_properties"] = json{{"samples", suite.ma.samples},
                                {"contraction_cases", suite.ma.contraction_cases},
                                {"chamber_cases", suite.ma.chamber_cases},
                                {"separation_cases", suite.ma.separation_cases},
                                {"failed", suite.ma.failures.size()}};
    json failures = json::array();
    for (const auto& f : suite.det_identity.failures) failures.push_back(f);
    for (const auto& f : suite.contrapositive.failures) failures.push_back(f);
    for (const auto& f : suite.ma.failures) failures.push_back(f);
    rep["failures"] = std::move(failures);
    rep["all_pass"] = suite.pass();
    return {std::move(rep), suite.pass() ? 0 : 1};
}

// ---- euler ----

CommandResult run_euler_file(const RunConfig& cfg) {
    std::ifstream in = open_input(cfg.input_path);
    std::vector<Int> betti;
    int r = 1, qG = 1;
    Rational lambda = 1;
    for (const std::string& line : read_directive_lines(in)) {
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "betti") {
            long x;
            while (ls >> x) betti.push_back(x);
            if (betti.empty()) throw ParseFailure("'betti' needs entries");
        } else if (key == "r") {
            if (!(ls >> r) || r < 0) throw ParseFailure("'r' needs a nonnegative integer");
        } else if (key == "qG") {
            if (!(ls >> qG)) throw ParseFailure("'qG' needs an integer");
        } else if (key == "lambda") {
            std::string tok;
            if (!(ls >> tok)) throw ParseFailure("'lambda' needs a rational");
            lambda = parse_rational(tok);
        } else {
            throw ParseFailure("unknown directive '" + key + "'");
        }
    }
    if (betti.empty()) throw ParseFailure("missing 'betti' line");
    BettiVector b(betti);
    json rep;
    rep["command"] = "euler";
    rep["input"] = cfg.input_path;
    json bj = json::array();
    for (const Int& x : b.entries()) bj.push_back(to_string(x));
    rep["betti"] = std::move(bj);
    rep["r"] = r;
    rep["chi"] = to_string(chi(b));
    rep["chi_r"] = to_string(chi_r(b, r));
    BettiVector ext = central_extension_betti(b, r);
    json ej = json::array();
    for (const Int& x : ext.entries()) ej.push_back(to_string(x));
    rep["extension_betti"] = std::move(ej);
    bool ok = verify_chichi(b, r);
    rep["chichi_ok"] = ok;
    rep["covolume"] = to_string(covolume(lambda, qG, r, b));
    return {std::move(rep), ok ? 0 : 1};
}

CommandResult run_euler_random(const RunConfig& cfg) {
    Rng rng(static_cast<std::uint64_t>(cfg.seed));
    SuiteResult res = chichi_suite(rng, cfg.random_count);
    bool lattice_ok = chi_r_unit_lattice_ok(6);
    json rep;
    rep["command"] = "euler";
    rep["random"] = cfg.random_count;
    rep["seed"] = cfg.seed;
    rep["passed"] = res.total - res.failed();
    rep["failed"] = res.failed();
    rep["chi_r_unit_lattice_ok"] = lattice_ok;
    rep["failures"] = res.failures;
    bool all = res.pass() && lattice_ok;
    rep["all_pass"] = all;
    return {std::move(rep), all ? 0 : 1};
}

// ---- lefschetz / hecke ----

EdgeCharacter parse_twist(const GeodesicGraph& g, const std::string& path) {
    std::ifstream in = open_input(path);
    std::vector<Rational> turns(g.undirected_edges(), Rational(0));
    std::vector<bool> assigned(g.undirected_edges(), false);
    for (const std::string& line : read_directive_lines(in)) {
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "edge") {
            long u, v;
            std::string tok;
            if (!(ls >> u >> v >> tok)) throw ParseFailure("'edge' needs: u v turns");
            Rational t = parse_rational(tok);
            bool found = false;
            for (std::size_t k = 0; k < g.undirected_edges(); ++k) {
                int a = g.tail[2 * k], b = g.head[2 * k];
                bool match = (a == u && b == v) || (a == v && b == u);
                if (match && !assigned[k]) {
                    turns[k] = t;
                    assigned[k] = true;
                    found = true;
                    break;
                }
            }
            if (!found) {
                std::ostringstream os;
                os << "twist: no unassigned edge between " << u << " and " << v;
                throw ParseFailure(os.str());
            }
        } else if (key == "edgeindex") {
            long k;
            std::string tok;
            if (!(ls >> k >> tok)) throw ParseFailure("'edgeindex' needs: index turns");
            if (k < 0 || static_cast<std::size_t>(k) >= turns.size())
                throw ParseFailure("twist: edge index out of range");
            turns[k] = parse_rational(tok);
            assigned[k] = true;
        } else {
            throw ParseFailure("unknown twist directive '" + key + "'");
        }
    }
    return EdgeCharacter::from_turns(g, turns);
}

json graph_header(const GeodesicGraph& g) {
    json j;
    j["graph"] = g.name;
    j["q"] = g.q;
    j["vertices"] = g.num_vertices;
    j["directed_edges"] = g.directed_edges();
    j["warnings"] = g.warnings;
    return j;
}

CommandResult run_lefschetz(const RunConfig& cfg) {
    GeodesicGraph g = load_graph(cfg.input_path);
    EdgeCharacter omega = cfg.twist_path.empty() ? EdgeCharacter::trivial(g)
                                                 : parse_twist(g, cfg.twist_path);
    LefschetzReport r = verify_lefschetz(g, cfg.m_max, omega);

    json rep;
    rep["command"] = "lefschetz";
    rep.update(graph_header(g));
    rep["twisted"] = r.twisted;
    json rows = json::array();
    for (const LefschetzRow& row : r.rows) {
        json jr;
        jr["m"] = row.m;
        if (!r.twisted) {
            jr["geometric"] = to_string(*row.geometric_exact);
            jr["transfer_trace"] = to_string(*row.transfer_exact);
            jr["spectral_from_adjacency"] = to_string(*row.spectral_exact);
        } else {
            jr["geometric"] = complex_json(row.geometric);
            jr["transfer_trace"] = complex_json(row.transfer_trace);
            jr["spectral_from_adjacency"] = nullptr;
        }
        jr["pass"] = row.pass;
        rows.push_back(std::move(jr));
    }
    rep["rows"] = std::move(rows);
    rep["dictionary"] = json{
        {"lambda_gamma", r.dictionary.lambda_gamma},
        {"chi1_centralizer", to_string(r.dictionary.chi1_centralizer)},
        {"sign", r.dictionary.sign},
        {"phi_normalization", r.dictionary.phi_normalization},
    };
    rep["all_pass"] = r.all_pass;
    return {std::move(rep), r.all_pass ? 0 : 1};
}

CommandResult run_hecke(const RunConfig& cfg) {
    GeodesicGraph g = load_graph(cfg.input_path);
    std::vector<HeckeCheck> checks = hecke_suite(g, cfg.m_max);
    json rep;
    rep["command"] = "hecke";
    rep.update(graph_header(g));
    rep["adjacency_charpoly"] = [&] {
        json arr = json::array();
        for (const Int& c : charpoly(adjacency_matrix(g))) arr.push_back(to_string(c));
        return arr;
    }();
    bool all = true;
    json rows = json::array();
    for (const HeckeCheck& c : checks) {
        all = all && c.recurrence_ok && c.spectral_map_ok;
        rows.push_back(json{{"m", c.m},
                            {"recurrence_ok", c.recurrence_ok},
                            {"spectral_map_ok", c.spectral_map_ok},
                            {"trace", to_string(c.trace)}});
    }
    rep["rows"] = std::move(rows);
    rep["all_pass"] = all;
    return {std::move(rep), all ? 0 : 1};
}

// ---- output formatting ----

std::string scalar_to_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "-";
    if (v.is_object() && v.contains("re"))
        return format_complex({v["re"].get<double>(), v["im"].get<double>()});
    return v.dump();
}

void emit_csv(const json& rep, std::ostream& out) {
    if (rep.contains("rows")) {
        const json& rows = rep["rows"];
        if (!rows.empty()) {
            bool first = true;
            for (const auto& [key, value] : rows[0].items()) {
                out << (first ? "" : ",") << key;
                first = false;
            }
            out << "\n";
            for (const json& row : rows) {
                first = true;
                for (const auto& [key, value] : row.items()) {
                    out << (first ? "" : ",") << scalar_to_text(value);
                    first = false;
                }
                out << "\n";
            }
        }
        return;
    }
    for (const auto& [key, value] : rep.items()) {
        if (value.is_array() || value.is_object()) continue;
        out << key << "," << scalar_to_text(value) << "\n";
    }
}

void emit_text(const json& rep, std::ostream& out) {
    for (const auto& [key, value] : rep.items()) {
        if (key == "rows") continue;
        if (value.is_object()) {
            out << key << ":\n";
            for (const auto& [k2, v2] : value.items())
                out << "  " << k2 << " = " << scalar_to_text(v2) << "\n";
        } else if (value.is_array()) {
            out << key << " = " << value.dump() << "\n";
        } else {
            out << key << " = " << scalar_to_text(value) << "\n";
        }
    }
    if (rep.contains("rows")) {
        out << "rows:\n";
        for (const json& row : rep["rows"]) {
            out << " ";
            for (const auto& [key, value] : row.items())
                out << " " << key << "=" << scalar_to_text(value);
            out << "\n";
        }
    }
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
    const auto start = std::chrono::steady_clock::now();
    CommandResult res;
    try {
        if (cfg.m_max < 1 || cfg.m_max > 32)
            throw ParseFailure("m_max must lie in [1, 32] (enumeration guardrail)");
        switch (cfg.command) {
            case RunConfig::Command::Newton:
                res = cfg.random_count > 0 ? run_newton_random(cfg) : run_newton_file(cfg);
                break;
            case RunConfig::Command::Region:
                res = cfg.random_count > 0 ? run_region_random(cfg) : run_region_file(cfg);
                break;
            case RunConfig::Command::Euler:
                res = cfg.random_count > 0 ? run_euler_random(cfg) : run_euler_file(cfg);
                break;
            case RunConfig::Command::Lefschetz:
                res = run_lefschetz(cfg);
                break;
            case RunConfig::Command::Hecke:
                res = run_hecke(cfg);
                break;
        }
    } catch (const GraphError& e) {
        diag << "input error: " << e.what() << "\n";
        return 2;
    } catch (const ParseFailure& e) {
        diag << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        diag << "input error: " << e.what() << "\n";
        return 2;
    }

    const auto stop = std::chrono::steady_clock::now();
    res.report["elapsed_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();

    std::ofstream file_out;
    std::ostream* sink = &out;
    if (!cfg.out_path.empty()) {
        file_out.open(cfg.out_path);
        if (!file_out) {
            diag << "input error: cannot open output path " << cfg.out_path << "\n";
            return 2;
        }
        sink = &file_out;
    }
    switch (cfg.format) {
        case RunConfig::Format::Json: *sink << res.report.dump(2) << "\n"; break;
        case RunConfig::Format::Csv: emit_csv(res.report, *sink); break;
        case RunConfig::Format::Text: emit_text(res.report, *sink); break;
    }
    return res.exit_code;
}

}  // namespace lef::cli
