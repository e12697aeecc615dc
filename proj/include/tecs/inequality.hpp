#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "tecs/copar.hpp"
#include "tecs/graph.hpp"
#include "tecs/rational.hpp"

namespace tecs {

enum class Family { BoxLower, BoxUpper, AsymmetricCut, ConnectivityCut, CoparallelClass, OddStar };

std::string to_string(Family f);

struct BoxWitness {
    EdgeId edge;
};
struct AsymmetricWitness {
    CutSet cut;
    EdgeId edge;
};
struct ConnectivityWitness {
    CutSet cut;
    EdgeId inside;   // e1, in E(G[S])
    EdgeId outside;  // e2, in E(G[V \ S])
};
struct CoparallelWitness {
    int class_index;
    EdgeId f;
    std::vector<EdgeId> chosen;
};
struct OddStarWitness {
    VertexId center;
    /// (h, f) for odd n.
    std::optional<std::pair<EdgeId, EdgeId>> odd_case;
};

using Provenance =
    std::variant<BoxWitness, AsymmetricWitness, ConnectivityWitness, CoparallelWitness, OddStarWitness>;

struct Term {
    EdgeId edge;
    std::int64_t coef;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse row a.x <= rhs. Every family has integer coefficients and an integer
/// right-hand side, so the row is stored exactly in 64-bit integers.
class LinearInequality {
public:
    LinearInequality(Family family, std::vector<Term> terms, std::int64_t rhs, Provenance provenance);

    Family family() const { return family_; }
    std::span<const Term> terms() const { return terms_; }
    std::int64_t rhs() const { return rhs_; }
    const Provenance& provenance() const { return provenance_; }

    std::int64_t coefficient(EdgeId e) const;

    double activity(std::span<const double> x) const;
    Rational activity(std::span<const Rational> x) const;
    std::int64_t activity(std::span<const std::uint8_t> chi) const;

    double violation(std::span<const double> x) const { return activity(x) - static_cast<double>(rhs_); }
    Rational violation(std::span<const Rational> x) const { return activity(x) - Rational(rhs_); }

    /// Equal coefficients and right-hand side; provenance is ignored.
    bool same_row(const LinearInequality& other) const {
        return rhs_ == other.rhs_ && terms_ == other.terms_;
    }
    /// Lexicographic order on (terms, rhs); used for deterministic output.
    bool canonical_less(const LinearInequality& other) const;
    std::size_t canonical_hash() const;

    std::string to_string() const;

private:
    Family family_;
    std::vector<Term> terms_;
    std::int64_t rhs_;
    Provenance provenance_;
};

/// -x_e <= 0.
LinearInequality make_box_lower(const Graph& g, EdgeId e);
/// x_e <= 1.
LinearInequality make_box_upper(const Graph& g, EdgeId e);

/// x_e - x(delta(S) \ {e}) <= 0. Throws std::invalid_argument if e is not a
/// cut edge.
LinearInequality make_asymmetric(const Graph& g, const CutSet& cut, EdgeId e);

/// 2x_{e1} - x(delta(S)) + 2x_{e2} <= 2 with e1 inside S and e2 outside.
LinearInequality make_connectivity(const Graph& g, const CutSet& cut, EdgeId e1, EdgeId e2);

/// sum_j x_{e_j} - (r-1) x_f <= 1 for a class C, f in C and one edge per
/// edge-containing component of G - C (r = number of those components).
/// r = 1 and r = 2 are accepted; they reduce to a box row and a row
/// equivalent to a connectivity row.
LinearInequality make_coparallel_class(const Graph& g, const CoparallelPartition& cp, int class_index, EdgeId f,
                                       std::span<const EdgeId> e_choices);

/// Odd star row centred at v on a complete graph with n >= 4. A witness (h, f)
/// with h = {w1, w2} not touching v and f = {v, w1} is required iff n is odd.
LinearInequality make_odd_star(const Graph& g, VertexId v, std::optional<std::pair<EdgeId, EdgeId>> witness);

/// All n rows (n even) or n(n-1)(n-2) rows (n odd).
std::vector<LinearInequality> enumerate_odd_stars(const Graph& g);

/// Globally valid rows, deduplicated on canonical form.
class CutPool {
public:
    /// Returns false if an identical row (coefficients and rhs) is present.
    bool insert(LinearInequality row);

    std::span<const LinearInequality> rows() const { return rows_; }
    std::size_t size() const { return rows_.size(); }

private:
    std::vector<LinearInequality> rows_;
    std::unordered_map<std::size_t, std::vector<std::size_t>> by_hash_;
};

}  // namespace tecs
