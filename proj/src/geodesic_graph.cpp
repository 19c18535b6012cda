#include "lef/geodesic_graph.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>

namespace lef {

GeodesicGraph make_graph(long q, std::size_t vertices,
                         const std::vector<std::pair<int, int>>& edges, std::string name) {
    if (q < 2) throw GraphError(GraphError::Kind::Parse, "q must be an integer >= 2");
    GeodesicGraph g;
    g.q = q;
    g.num_vertices = vertices;
    g.name = std::move(name);
    g.out.resize(vertices);
    for (const auto& [u, v] : edges) {
        if (u == v) {
            std::ostringstream os;
            os << "self-loop at vertex " << u << " (the lattice model is torsion free)";
            throw GraphError(GraphError::Kind::SelfLoop, os.str());
        }
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= vertices ||
            static_cast<std::size_t>(v) >= vertices) {
            std::ostringstream os;
            os << "dangling edge (" << u << ", " << v << "): vertex out of range";
            throw GraphError(GraphError::Kind::Dangling, os.str());
        }
        int e = static_cast<int>(g.tail.size());
        g.tail.push_back(u);
        g.head.push_back(v);
        g.tail.push_back(v);
        g.head.push_back(u);
        g.out[u].push_back(e);
        g.out[v].push_back(e + 1);
    }
    for (std::size_t v = 0; v < vertices; ++v) {
        if (static_cast<long>(g.out[v].size()) != q + 1) {
            std::ostringstream os;
            os << "vertex " << v << " has degree " << g.out[v].size() << ", expected q+1 = "
               << (q + 1);
            throw GraphError(GraphError::Kind::Degree, os.str());
        }
    }
    if (!is_prime(q)) {
        std::ostringstream os;
        os << "q = " << q << " is not prime; accepted for the combinatorial identity only";
        g.warnings.push_back(os.str());
    }
    return g;
}

GeodesicGraph parse_graph(std::istream& in, std::string name) {
    long q = -1;
    long vertices = -1;
    std::vector<std::pair<int, int>> edges;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        auto fail = [&](const std::string& what) {
            std::ostringstream os;
            os << "line " << lineno << ": " << what;
            throw GraphError(GraphError::Kind::Parse, os.str());
        };
        if (key == "q") {
            if (!(ls >> q)) fail("expected integer after 'q'");
        } else if (key == "vertices") {
            if (!(ls >> vertices)) fail("expected integer after 'vertices'");
        } else if (key == "edge") {
            int u, v;
            if (!(ls >> u >> v)) fail("expected two vertex indices after 'edge'");
            edges.emplace_back(u, v);
        } else {
            fail("unknown directive '" + key + "'");
        }
    }
    if (q < 0) throw GraphError(GraphError::Kind::Parse, "missing 'q' line");
    if (vertices < 0) throw GraphError(GraphError::Kind::Parse, "missing 'vertices' line");
    return make_graph(q, static_cast<std::size_t>(vertices), edges, std::move(name));
}

GeodesicGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GraphError(GraphError::Kind::Parse, "cannot open graph file: " + path);
    return parse_graph(in, std::filesystem::path(path).stem().string());
}

std::vector<int> canonical_rotation(const std::vector<int>& cycle) {
    const std::size_t n = cycle.size();
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            int a = cycle[(i + k) % n];
            int b = cycle[(best + k) % n];
            if (a != b) {
                if (a < b) best = i;
                break;
            }
        }
    }
    std::vector<int> r(n);
    for (std::size_t k = 0; k < n; ++k) r[k] = cycle[(best + k) % n];
    return r;
}

void validate_cycle(const GeodesicGraph& g, const std::vector<int>& cycle) {
    if (cycle.empty()) throw std::invalid_argument("cycle: empty sequence");
    const int E = static_cast<int>(g.directed_edges());
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        int e = cycle[i];
        if (e < 0 || e >= E) throw std::invalid_argument("cycle: edge id out of range");
        int f = cycle[(i + 1) % cycle.size()];
        if (g.head[e] != g.tail[f])
            throw std::invalid_argument("cycle: consecutive edges do not chain");
        if (f == g.rev(e)) throw std::invalid_argument("cycle: backtracking step");
    }
}

namespace {

int minimal_period(const std::vector<int>& v) {
    const int n = static_cast<int>(v.size());
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) ok = v[i] == v[(i + d) % n];
        if (ok) return d;
    }
    return n;
}

GeodesicClass class_from_canonical(std::vector<int> canon) {
    GeodesicClass c;
    int period = minimal_period(canon);
    c.primitive_length = period;
    c.multiplicity = static_cast<int>(canon.size()) / period;
    c.edges = std::move(canon);
    return c;
}

}  // namespace

PrimitiveDecomposition primitive_decomposition(const GeodesicGraph& g,
                                               const std::vector<int>& cycle) {
    validate_cycle(g, cycle);
    std::vector<int> canon = canonical_rotation(cycle);
    int period = minimal_period(canon);
    PrimitiveDecomposition d;
    d.multiplicity = static_cast<int>(canon.size()) / period;
    // the canonical rotation of w^mu is the canonical rotation of w repeated
    std::vector<int> prim(canon.begin(), canon.begin() + period);
    d.primitive = class_from_canonical(std::move(prim));
    return d;
}

IntMatrix hashimoto_matrix(const GeodesicGraph& g) {
    const std::size_t E = g.directed_edges();
    IntMatrix t(E, E);
    for (std::size_t e = 0; e < E; ++e)
        for (int f : g.out[g.head[e]])
            if (f != g.rev(static_cast<int>(e))) t(e, f) = 1;
    return t;
}

std::vector<Int> transfer_traces(const GeodesicGraph& g, int m_max) {
    std::vector<Int> tr(m_max + 1);
    tr[0] = Int(g.directed_edges());
    IntMatrix t = hashimoto_matrix(g);
    IntMatrix p = t;
    for (int m = 1; m <= m_max; ++m) {
        tr[m] = p.trace();
        if (m < m_max) p = p * t;
    }
    return tr;
}

Int closed_geodesic_count(const GeodesicGraph& g, int m) {
    if (m < 1) throw std::invalid_argument("closed_geodesic_count: m must be >= 1");
    return transfer_traces(g, m)[m];
}

std::vector<GeodesicClass> primitive_geodesics(const GeodesicGraph& g, int max_len) {
    if (max_len < 1) throw std::invalid_argument("primitive_geodesics: length bound must be >= 1");
    std::set<std::vector<int>> seen;
    std::vector<GeodesicClass> result;
    std::vector<int> path;
    path.reserve(max_len);

    // Cycles are found from their minimal edge id s: the walk starts at s
    // and never uses an edge below s, so each class appears exactly once
    // per occurrence of s and the canonical-form set removes the rest.
    std::function<void(int)> extend = [&](int s) {
        int last = path.back();
        int v = g.head[last];
        if (path.size() >= 2 && v == g.tail[s] && last != g.rev(s)) {
            std::vector<int> canon = canonical_rotation(path);
            if (minimal_period(canon) == static_cast<int>(canon.size()) &&
                seen.insert(canon).second) {
                result.push_back(class_from_canonical(std::move(canon)));
            }
        }
        if (static_cast<int>(path.size()) == max_len) return;
        for (int f : g.out[v]) {
            if (f < s || f == g.rev(last)) continue;
            path.push_back(f);
            extend(s);
            path.pop_back();
        }
    };

    for (int s = 0; s < static_cast<int>(g.directed_edges()); ++s) {
        path.assign(1, s);
        extend(s);
    }

    std::sort(result.begin(), result.end(), [](const GeodesicClass& a, const GeodesicClass& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.edges < b.edges;
    });
    return result;
}

EdgeCharacter EdgeCharacter::trivial(const GeodesicGraph& g) {
    EdgeCharacter om;
    om.w_.assign(g.directed_edges(), std::complex<double>(1.0, 0.0));
    om.trivial_ = true;
    return om;
}

EdgeCharacter EdgeCharacter::from_turns(const GeodesicGraph& g,
                                        const std::vector<Rational>& turns) {
    if (turns.size() != g.undirected_edges())
        throw std::invalid_argument("EdgeCharacter: one turn per undirected edge expected");
    EdgeCharacter om;
    om.w_.resize(g.directed_edges());
    om.trivial_ = true;
    for (std::size_t k = 0; k < turns.size(); ++k) {
        // reduce mod 1 exactly so that integral turns give weight exactly 1
        Rational t = turns[k];
        Int whole = numerator(t) / denominator(t);
        if (t < 0 && whole * denominator(t) != numerator(t)) whole -= 1;
        t -= Rational(whole);
        if (t == 0) {
            om.w_[2 * k] = om.w_[2 * k + 1] = std::complex<double>(1.0, 0.0);
        } else {
            om.trivial_ = false;
            double ang = 2.0 * std::numbers::pi * t.convert_to<double>();
            om.w_[2 * k] = std::polar(1.0, ang);
            om.w_[2 * k + 1] = std::polar(1.0, -ang);
        }
    }
    return om;
}

EdgeCharacter EdgeCharacter::from_values(const GeodesicGraph& g,
                                         std::vector<std::complex<double>> per_directed_edge) {
    if (per_directed_edge.size() != g.directed_edges())
        throw std::invalid_argument("EdgeCharacter: one value per directed edge expected");
    constexpr double kTol = 1e-12;
    for (std::size_t e = 0; e < per_directed_edge.size(); ++e) {
        if (std::abs(std::abs(per_directed_edge[e]) - 1.0) > kTol)
            throw std::invalid_argument("EdgeCharacter: weight not on the unit circle");
        std::complex<double> prod = per_directed_edge[e] * per_directed_edge[e ^ 1];
        if (std::abs(prod - std::complex<double>(1.0, 0.0)) > kTol)
            throw std::invalid_argument("EdgeCharacter: weight(rev e) must invert weight(e)");
    }
    EdgeCharacter om;
    om.w_ = std::move(per_directed_edge);
    om.trivial_ = std::all_of(om.w_.begin(), om.w_.end(), [](const std::complex<double>& z) {
        return z == std::complex<double>(1.0, 0.0);
    });
    return om;
}

std::complex<double> character_value(const EdgeCharacter& omega, const GeodesicClass& c) {
    std::complex<double> v(1.0, 0.0);
    for (int e : c.edges) v *= omega.weight(e);
    return v;
}

Matrix<std::complex<double>> hashimoto_matrix_twisted(const GeodesicGraph& g,
                                                      const EdgeCharacter& omega) {
    const std::size_t E = g.directed_edges();
    Matrix<std::complex<double>> t(E, E);
    for (std::size_t e = 0; e < E; ++e)
        for (int f : g.out[g.head[e]])
            if (f != g.rev(static_cast<int>(e))) t(e, f) = omega.weight(f);
    return t;
}

std::vector<std::complex<double>> twisted_transfer_traces(const GeodesicGraph& g,
                                                          const EdgeCharacter& omega,
                                                          int m_max) {
    std::vector<std::complex<double>> tr(m_max + 1);
    tr[0] = static_cast<double>(g.directed_edges());
    auto t = hashimoto_matrix_twisted(g, omega);
    auto p = t;
    for (int m = 1; m <= m_max; ++m) {
        tr[m] = p.trace();
        if (m < m_max) p = p * t;
    }
    return tr;
}

}  // namespace lef
