#include "tecs/instances.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <utility>

#include "tecs/rng.hpp"

namespace tecs {

void InstanceSpec::validate() const {
    std::visit(
        [](const auto& k) {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, SparsifiedKnn>) {
                if (k.n < 3) throw std::invalid_argument("knn: n must be at least 3");
                if (k.k < 2) throw std::invalid_argument("knn: k must be at least 2");
                if (k.k >= k.n) throw std::invalid_argument("knn: k must be below n");
                if (!(k.alpha >= 0.0 && k.alpha <= 1.0)) throw std::invalid_argument("knn: alpha must lie in [0,1]");
            } else if constexpr (std::is_same_v<K, KnCycles>) {
                if (k.ell < 2) throw std::invalid_argument("kncycles: ell must be at least 2");
            } else {
                if (k.n < 4) throw std::invalid_argument("complete: n must be at least 4");
                if (k.weight_lo > k.weight_hi) throw std::invalid_argument("complete: weight_lo exceeds weight_hi");
            }
        },
        kind);
}

std::string InstanceSpec::name() const {
    std::ostringstream out;
    std::visit(
        [&](const auto& k) {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, SparsifiedKnn>)
                out << "knn_n" << k.n << "_k" << k.k << "_a" << std::fixed << std::setprecision(2) << k.alpha;
            else if constexpr (std::is_same_v<K, KnCycles>)
                out << "kncycles_l" << k.ell;
            else
                out << "complete_n" << k.n;
        },
        kind);
    out << "_s" << seed;
    return out.str();
}

namespace {

EdgeWeights draw_weights(Xoshiro256& rng, int m, std::int64_t lo, std::int64_t hi) {
    EdgeWeights w(static_cast<std::size_t>(m));
    for (auto& x : w) x = rng.uniform_int(lo, hi);
    return w;
}

template <class T>
void fisher_yates(std::vector<T>& items, Xoshiro256& rng) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[rng.below(i)]);
}

std::vector<Edge> knn_edges(int n, int k, Xoshiro256& rng) {
    std::vector<std::pair<double, double>> pts(static_cast<std::size_t>(n));
    for (auto& p : pts) {
        p.first = rng.uniform01();
        p.second = rng.uniform01();
    }
    std::set<std::pair<int, int>> pairs;
    std::vector<std::pair<double, int>> order;
    for (int i = 0; i < n; ++i) {
        order.clear();
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            const double dx = pts[static_cast<std::size_t>(i)].first - pts[static_cast<std::size_t>(j)].first;
            const double dy = pts[static_cast<std::size_t>(i)].second - pts[static_cast<std::size_t>(j)].second;
            order.emplace_back(dx * dx + dy * dy, j);
        }
        std::sort(order.begin(), order.end());
        for (int r = 0; r < k; ++r) {
            const int j = order[static_cast<std::size_t>(r)].second;
            pairs.emplace(std::min(i, j), std::max(i, j));
        }
    }
    std::vector<Edge> edges;
    for (const auto& [u, v] : pairs) edges.push_back({u, v});
    return edges;
}

struct Piece {
    int vertices = 0;
    std::vector<Edge> edges;
};

Piece complete_piece(int order) {
    Piece p;
    p.vertices = order;
    for (int u = 0; u < order; ++u)
        for (int v = u + 1; v < order; ++v) p.edges.push_back({u, v});
    return p;
}

// Joins the pieces of a group into a ring with one fresh edge per consecutive pair.
Piece join_ring(const std::vector<Piece>& group, Xoshiro256& rng) {
    Piece out;
    std::vector<int> offset;
    for (const Piece& p : group) {
        offset.push_back(out.vertices);
        for (const Edge& e : p.edges) out.edges.push_back({e.u + out.vertices, e.v + out.vertices});
        out.vertices += p.vertices;
    }
    std::set<std::pair<int, int>> used;
    for (std::size_t i = 0; i < group.size(); ++i) {
        const std::size_t j = (i + 1) % group.size();
        while (true) {
            const int v = offset[i] + static_cast<int>(rng.below(static_cast<std::uint64_t>(group[i].vertices)));
            const int w = offset[j] + static_cast<int>(rng.below(static_cast<std::uint64_t>(group[j].vertices)));
            // A ring of two pieces must not draw the same pair twice.
            if (used.emplace(std::min(v, w), std::max(v, w)).second) {
                out.edges.push_back({std::min(v, w), std::max(v, w)});
                break;
            }
        }
    }
    return out;
}

Instance rings_from_pieces(std::vector<Piece> pieces, Xoshiro256& rng) {
    while (pieces.size() > 1) {
        fisher_yates(pieces, rng);
        std::vector<std::vector<Piece>> groups;
        std::size_t remaining = pieces.size();
        std::size_t next = 0;
        while (remaining >= 3) {
            const auto size = std::min<std::size_t>(static_cast<std::size_t>(rng.uniform_int(3, 7)), remaining);
            groups.emplace_back(pieces.begin() + static_cast<long>(next), pieces.begin() + static_cast<long>(next + size));
            next += size;
            remaining -= size;
        }
        if (remaining > 0) {
            if (groups.empty()) groups.emplace_back();
            for (; next < pieces.size(); ++next) groups.back().push_back(pieces[next]);
        }
        std::vector<Piece> joined;
        for (const auto& group : groups) joined.push_back(join_ring(group, rng));
        pieces = std::move(joined);
    }
    Instance out{Graph(pieces.front().vertices, pieces.front().edges), {}};
    out.weights = draw_weights(rng, out.graph.edge_count(), kSparseWeightLo, kSparseWeightHi);
    return out;
}

}  // namespace

Instance gen_sparsified_knn(const InstanceSpec& spec) {
    spec.validate();
    const auto& p = std::get<SparsifiedKnn>(spec.kind);
    std::uint64_t state = spec.seed;
    for (int attempt = 0; attempt < kKnnRetries; ++attempt) {
        Xoshiro256 rng(splitmix64(state));
        std::vector<Edge> edges = knn_edges(p.n, p.k, rng);
        if (!is_two_edge_connected(Graph(p.n, edges))) continue;

        const auto m = edges.size();
        std::vector<std::size_t> ids(m);
        for (std::size_t i = 0; i < m; ++i) ids[i] = i;
        const auto pick = static_cast<std::size_t>(p.alpha * static_cast<double>(m));
        // Partial Fisher-Yates: the first `pick` ids are a uniform sample.
        for (std::size_t i = 0; i < pick; ++i) std::swap(ids[i], ids[i + rng.below(m - i)]);
        std::vector<std::size_t> offered(ids.begin(), ids.begin() + static_cast<long>(pick));
        fisher_yates(offered, rng);

        std::vector<char> alive(m, 1);
        for (std::size_t id : offered) {
            alive[id] = 0;
            std::vector<Edge> rest;
            for (std::size_t i = 0; i < m; ++i)
                if (alive[i]) rest.push_back(edges[i]);
            if (!is_two_edge_connected(Graph(p.n, std::move(rest)))) alive[id] = 1;
        }
        std::vector<Edge> kept;
        for (std::size_t i = 0; i < m; ++i)
            if (alive[i]) kept.push_back(edges[i]);
        Instance out{Graph(p.n, std::move(kept)), {}};
        out.weights = draw_weights(rng, out.graph.edge_count(), kSparseWeightLo, kSparseWeightHi);
        return out;
    }
    throw std::runtime_error("gen_sparsified_knn: no 2-edge-connected k-NN graph within the retry budget");
}

Instance kn_cycles_from_sizes(const std::vector<int>& sizes, std::uint64_t seed) {
    if (sizes.size() < 2) throw std::invalid_argument("kn_cycles_from_sizes: need at least two graphs");
    std::vector<Piece> pieces;
    for (int s : sizes) {
        if (s < 3) throw std::invalid_argument("kn_cycles_from_sizes: complete graphs need order >= 3");
        pieces.push_back(complete_piece(s));
    }
    std::uint64_t state = seed;
    Xoshiro256 rng(splitmix64(state));
    return rings_from_pieces(std::move(pieces), rng);
}

Instance gen_kn_cycles(const InstanceSpec& spec) {
    spec.validate();
    const auto& p = std::get<KnCycles>(spec.kind);
    std::uint64_t state = spec.seed;
    Xoshiro256 rng(splitmix64(state));
    std::vector<Piece> pieces;
    for (int i = 0; i < p.ell; ++i) pieces.push_back(complete_piece(static_cast<int>(rng.uniform_int(3, 7))));
    return rings_from_pieces(std::move(pieces), rng);
}

Instance gen_complete(const InstanceSpec& spec) {
    spec.validate();
    const auto& p = std::get<Complete>(spec.kind);
    std::uint64_t state = spec.seed;
    Xoshiro256 rng(splitmix64(state));
    const Piece k = complete_piece(p.n);
    Instance out{Graph(p.n, k.edges), {}};
    out.weights = draw_weights(rng, out.graph.edge_count(), p.weight_lo, p.weight_hi);
    return out;
}

Instance generate(const InstanceSpec& spec) {
    return std::visit(
        [&](const auto& k) -> Instance {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, SparsifiedKnn>) return gen_sparsified_knn(spec);
            else if constexpr (std::is_same_v<K, KnCycles>) return gen_kn_cycles(spec);
            else return gen_complete(spec);
        },
        spec.kind);
}

Instance random_2ec_graph(int n, int chords, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("random_2ec_graph: n must be at least 3");
    std::uint64_t state = seed;
    Xoshiro256 rng(splitmix64(state));
    std::set<std::pair<int, int>> present;
    std::vector<Edge> edges;
    auto add = [&](int a, int b) {
        present.emplace(std::min(a, b), std::max(a, b));
        edges.push_back({std::min(a, b), std::max(a, b)});
    };
    add(0, 1);
    add(1, 2);
    add(0, 2);
    int count = 3;
    while (count < n) {
        const int fresh = static_cast<int>(std::min<std::int64_t>(rng.uniform_int(1, 3), n - count));
        const int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(count)));
        int b = static_cast<int>(rng.below(static_cast<std::uint64_t>(count)));
        // A closed ear through a single new vertex would double an edge.
        if (a == b && fresh == 1) continue;
        int prev = a;
        for (int i = 0; i < fresh; ++i) {
            add(prev, count);
            prev = count++;
        }
        add(prev, b);
    }
    for (int i = 0; i < chords; ++i) {
        const auto max_edges = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
        if (present.size() == max_edges) break;
        while (true) {
            const int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            const int b = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            if (a == b || present.count({std::min(a, b), std::max(a, b)})) continue;
            add(a, b);
            break;
        }
    }
    Instance out{Graph(n, std::move(edges)), {}};
    out.weights = draw_weights(rng, out.graph.edge_count(), kSparseWeightLo, kSparseWeightHi);
    return out;
}

InstanceFormatError::InstanceFormatError(Kind kind, int line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), kind_(kind), line_(line) {}

Instance parse_instance(std::istream& in) {
    using Kind = InstanceFormatError::Kind;
    std::string text;
    int line_no = 0;
    bool have_header = false;
    long n = 0;
    long m = 0;
    std::vector<Edge> edges;
    EdgeWeights weights;
    std::set<std::pair<long, long>> seen;
    while (std::getline(in, text)) {
        ++line_no;
        std::istringstream line(text);
        std::string tag;
        if (!(line >> tag) || tag == "c") continue;
        if (!have_header) {
            std::string format;
            std::string extra;
            if (tag != "p" || !(line >> format >> n >> m) || format != "tecs" || n < 0 || m < 0 || (line >> extra))
                throw InstanceFormatError(Kind::MalformedHeader, line_no, "expected 'p tecs <n> <m>'");
            have_header = true;
            continue;
        }
        long u = 0;
        long v = 0;
        std::int64_t w = 0;
        std::string extra;
        if (tag != "e" || !(line >> u >> v >> w) || (line >> extra))
            throw InstanceFormatError(Kind::MalformedLine, line_no, "expected 'e <u> <v> <w>'");
        if (u < 1 || v < 1 || u > n || v > n)
            throw InstanceFormatError(Kind::VertexOutOfRange, line_no, "vertex index outside [1, n]");
        if (u == v) throw InstanceFormatError(Kind::SelfLoop, line_no, "self-loop at vertex " + std::to_string(u));
        if (!seen.emplace(std::min(u, v), std::max(u, v)).second)
            throw InstanceFormatError(Kind::DuplicateEdge, line_no,
                                      "duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        edges.push_back({static_cast<int>(std::min(u, v) - 1), static_cast<int>(std::max(u, v) - 1)});
        weights.push_back(w);
    }
    if (!have_header) throw InstanceFormatError(Kind::MalformedHeader, 0, "missing 'p tecs' header");
    if (static_cast<long>(edges.size()) != m)
        throw InstanceFormatError(Kind::EdgeCountMismatch, 0,
                                  "header announces " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges.size()));
    return {Graph(static_cast<int>(n), std::move(edges)), std::move(weights)};
}

void format_instance(std::ostream& out, const Graph& g, const EdgeWeights& w, const std::string& comment) {
    if (w.size() != static_cast<std::size_t>(g.edge_count()))
        throw std::invalid_argument("format_instance: one weight per edge required");
    if (!comment.empty()) out << "c " << comment << "\n";
    out << "p tecs " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        out << "e " << g.edge(e).u + 1 << " " << g.edge(e).v + 1 << " " << w[static_cast<std::size_t>(e)] << "\n";
}

Instance read_instance(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InstanceFormatError(InstanceFormatError::Kind::Io, 0, "cannot open " + path.string());
    return parse_instance(in);
}

void write_instance(const std::filesystem::path& path, const Graph& g, const EdgeWeights& w,
                    const std::string& comment) {
    std::ofstream out(path);
    if (!out) throw InstanceFormatError(InstanceFormatError::Kind::Io, 0, "cannot write " + path.string());
    format_instance(out, g, w, comment);
    if (!out) throw InstanceFormatError(InstanceFormatError::Kind::Io, 0, "write failed for " + path.string());
}

}  // namespace tecs
