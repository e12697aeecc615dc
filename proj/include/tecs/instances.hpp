#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "tecs/graph.hpp"

namespace tecs {

struct SparsifiedKnn {
    int n = 150;
    int k = 4;
    double alpha = 0.7;
};

struct KnCycles {
    int ell = 10;
};

struct Complete {
    int n = 15;
    std::int64_t weight_lo = -10;
    std::int64_t weight_hi = 3;
};

struct InstanceSpec {
    std::variant<SparsifiedKnn, KnCycles, Complete> kind;
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument if a parameter is out of range.
    void validate() const;
    /// Short identifier such as "knn_n150_k4_a0.70_s7".
    std::string name() const;
};

struct Instance {
    Graph graph;
    EdgeWeights weights;
};

/// Weights of the knn and kncycles generators.
constexpr std::int64_t kSparseWeightLo = -5;
constexpr std::int64_t kSparseWeightHi = 6;
constexpr int kKnnRetries = 100;

/// k nearest neighbours of n random points in the unit square (symmetrized),
/// then floor(alpha |E|) random edges are offered for deletion in random
/// order and removed whenever the graph stays 2-edge-connected. Throws
/// std::runtime_error if no 2-edge-connected k-NN graph is found within the
/// retry budget.
Instance gen_sparsified_knn(const InstanceSpec& spec);

/// ell complete graphs of random order in [3,7], joined level by level: each
/// group of 3..7 graphs is closed into a ring by one fresh edge between
/// consecutive members.
Instance gen_kn_cycles(const InstanceSpec& spec);

/// Same construction starting from given complete-graph orders.
Instance kn_cycles_from_sizes(const std::vector<int>& sizes, std::uint64_t seed);

/// K_n with uniform integer weights in [weight_lo, weight_hi].
Instance gen_complete(const InstanceSpec& spec);

Instance generate(const InstanceSpec& spec);

/// Random ear decomposition: a triangle, then open or closed ears of 1 to 3
/// new vertices until n vertices exist, then up to `chords` extra edges.
/// Weights are uniform in [-5, 6].
Instance random_2ec_graph(int n, int chords, std::uint64_t seed);

class InstanceFormatError : public std::runtime_error {
public:
    enum class Kind { Io, MalformedHeader, MalformedLine, EdgeCountMismatch, DuplicateEdge, VertexOutOfRange, SelfLoop };

    InstanceFormatError(Kind kind, int line, const std::string& what);

    Kind kind() const { return kind_; }
    int line() const { return line_; }

private:
    Kind kind_;
    int line_;
};

/// Text format: `p tecs <n> <m>`, then m lines `e <u> <v> <w>` (1-based);
/// lines starting with `c` are comments.
Instance parse_instance(std::istream& in);
void format_instance(std::ostream& out, const Graph& g, const EdgeWeights& w, const std::string& comment = {});

Instance read_instance(const std::filesystem::path& path);
void write_instance(const std::filesystem::path& path, const Graph& g, const EdgeWeights& w,
                    const std::string& comment = {});

}  // namespace tecs
