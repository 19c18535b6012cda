#pragma once

#include <complex>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "lef/matrix.hpp"
#include "lef/rational.hpp"

namespace lef {

struct GraphError : std::runtime_error {
    enum class Kind { Parse, Degree, SelfLoop, Dangling };
    GraphError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
    Kind kind;
};

// Finite (q+1)-regular multigraph without self-loops, the desk-scale model
// of a cocompact quotient of the degree-(q+1) tree. Directed edges come in
// reversal pairs: edge 2k runs forward along undirected edge k, edge 2k+1
// backward, so rev(e) = e ^ 1 is a fixed-point-free involution.
struct GeodesicGraph {
    long q = 0;
    std::size_t num_vertices = 0;
    std::vector<int> tail, head;          // indexed by directed edge
    std::vector<std::vector<int>> out;    // outgoing directed edges per vertex
    std::vector<std::string> warnings;    // e.g. non-prime q
    std::string name;

    int rev(int e) const { return e ^ 1; }
    std::size_t directed_edges() const { return tail.size(); }
    std::size_t undirected_edges() const { return tail.size() / 2; }
};

// Builds and validates a graph from an undirected edge list. Repeated pairs
// are multi-edges. Violations raise GraphError with a distinct kind; a
// non-prime q only records a warning (the combinatorial identity does not
// need primality).
GeodesicGraph make_graph(long q, std::size_t vertices,
                         const std::vector<std::pair<int, int>>& edges,
                         std::string name = "");

// Text format: lines "q <int>", "vertices <int>", "edge <u> <v>".
// '#' starts a comment.
GeodesicGraph parse_graph(std::istream& in, std::string name = "");
GeodesicGraph load_graph(const std::string& path);

// Closed non-backtracking cycle up to rotation, stored in the
// lexicographically minimal rotation of its edge-id sequence. A class of
// length l is the multiplicity-th power of its primitive part.
struct GeodesicClass {
    std::vector<int> edges;  // canonical rotation, full length
    int primitive_length = 0;
    int multiplicity = 1;

    int length() const { return static_cast<int>(edges.size()); }
    bool primitive() const { return multiplicity == 1; }
    bool operator==(const GeodesicClass&) const = default;
};

std::vector<int> canonical_rotation(const std::vector<int>& cycle);

// Throws std::invalid_argument unless the sequence is a closed
// non-backtracking cycle of g.
void validate_cycle(const GeodesicGraph& g, const std::vector<int>& cycle);

struct PrimitiveDecomposition {
    GeodesicClass primitive;
    int multiplicity = 1;
};
PrimitiveDecomposition primitive_decomposition(const GeodesicGraph& g,
                                               const std::vector<int>& cycle);

// Non-backtracking transfer matrix on directed edges:
// T[e][f] = 1 iff head(e) = tail(f) and f != rev(e).
IntMatrix hashimoto_matrix(const GeodesicGraph& g);

// tr(T^m) by exact integer powering: rooted closed non-backtracking walks.
Int closed_geodesic_count(const GeodesicGraph& g, int m);
std::vector<Int> transfer_traces(const GeodesicGraph& g, int m_max);  // index = m

// All primitive classes of length <= max_len, deduplicated by canonical
// rotation, ordered by (length, canonical edge sequence). Depth-first
// extension from each candidate minimal edge, pruning edges below it;
// worst case O(|E| q^max_len).
std::vector<GeodesicClass> primitive_geodesics(const GeodesicGraph& g, int max_len);

// Unit-modulus weights on directed edges with w(rev e) = w(e)^{-1}; any such
// assignment is a rank-one unitary character of the fundamental group.
class EdgeCharacter {
public:
    static EdgeCharacter trivial(const GeodesicGraph& g);
    // one angle (in turns) per undirected edge; exact rationals keep the
    // weights exactly on the unit circle at roots of unity
    static EdgeCharacter from_turns(const GeodesicGraph& g, const std::vector<Rational>& turns);
    static EdgeCharacter from_values(const GeodesicGraph& g,
                                     std::vector<std::complex<double>> per_directed_edge);

    std::complex<double> weight(int e) const { return w_[e]; }
    std::size_t size() const { return w_.size(); }
    bool is_trivial() const { return trivial_; }

private:
    EdgeCharacter() = default;
    std::vector<std::complex<double>> w_;
    bool trivial_ = false;
};

// Product of the weights along the cycle; rotation invariant, and equals
// (value on the primitive part)^multiplicity.
std::complex<double> character_value(const EdgeCharacter& omega, const GeodesicClass& c);

Matrix<std::complex<double>> hashimoto_matrix_twisted(const GeodesicGraph& g,
                                                      const EdgeCharacter& omega);
std::vector<std::complex<double>> twisted_transfer_traces(const GeodesicGraph& g,
                                                          const EdgeCharacter& omega, int m_max);

}  // namespace lef
