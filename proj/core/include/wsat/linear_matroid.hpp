#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wsat/field.hpp"
#include "wsat/hypergraph.hpp"
#include "wsat/matroid.hpp"

namespace wsat {

/// A vector over F_p for every edge of some host. Parallel instances of an
/// edge share its vector.
struct VectorAssignment {
  std::uint64_t prime = PrimeField::kDefaultPrime;
  std::size_t dimension = 0;
  int uniformity = 2;
  std::vector<Edge> edges;           // colex order
  std::vector<FieldVector> vectors;  // aligned with edges
  std::uint64_t seed = 0;
  std::size_t resamples = 0;         // redraws needed before the sample was accepted
  std::string construction = "user";

  /// nullptr when the edge has no vector.
  const FieldVector* find(const Edge& e) const;
};

/// Generic d-dimensional hyperconnectivity on K_n: vertex i gets a random
/// x_i in F_p^d, edge {i, j} (i < j) gets the n*d vector with x_j in block i
/// and -x_i in block j. Redraws (at most 10 times) until the full rank equals
/// n*d - C(d+1, 2). Requires n >= d + 1, d >= 1.
VectorAssignment hyperconnectivity(Vertex n, std::size_t d, std::uint64_t prime = PrimeField::kDefaultPrime,
                                   std::uint64_t seed = 0);

/// Linear representation certifying wsat(K_n^(r), K_s^(r)) >= C(n,r) - C(n-s+r, r).
///
/// r = 2 is hyperconnectivity with d = s - 2. For r >= 3, with d = s - r and
/// a random n x n matrix G, edge S gets the r x r minors det G[S, T] over all
/// r-sets T that meet [0, d). The result is returned only after it passes
/// self-verification on K_n^(r): every copy of K_s^(r) is a cycle and the full
/// rank matches the clique formula. Throws VerificationFailure after 10 failed
/// draws. Requires n >= s > r >= 2.
VectorAssignment hyper_clique_assignment(Vertex n, int r, int s, std::uint64_t prime = PrimeField::kDefaultPrime,
                                         std::uint64_t seed = 0);

/// {"p": ..., "D": ..., "vectors": {"0,1": [...], ...}}; "r" optional.
VectorAssignment assignment_from_json(const nlohmann::json& j);
nlohmann::json to_json(const VectorAssignment& a);

class LinearMatroid final : public MatroidOracle {
 public:
  /// Throws InvalidInput if some ground edge has no vector.
  LinearMatroid(GroundSet ground, VectorAssignment assignment);

  std::size_t ground_size() const override { return ground_.size(); }
  bool is_independent(std::span<const ElementId> subset) const override;
  ElementSet basis(std::span<const ElementId> subset) const override;
  std::vector<bool> coloops(std::span<const ElementId> subset) const override;
  std::string describe() const override;

  const FieldVector& vector(ElementId e) const { return *element_vectors_.at(e); }
  const PrimeField& field() const noexcept { return field_; }
  const VectorAssignment& assignment() const noexcept { return assignment_; }
  const GroundSet& ground() const noexcept { return ground_; }

 private:
  std::vector<FieldVector> gather(std::span<const ElementId> subset) const;

  GroundSet ground_;
  VectorAssignment assignment_;
  PrimeField field_;
  std::vector<const FieldVector*> element_vectors_;
};

/// Rank of the vectors of `subset` over F_p.
std::size_t field_rank(const LinearMatroid& m, std::span<const ElementId> subset);

/// Coefficients lambda with sum lambda_e w(e) = 0 over a cycle.
struct CycleCertificate {
  ElementSet elements;
  FieldVector coefficients;  // aligned with elements
  bool all_nonzero = false;
};

/// For a cycle, a kernel vector; full support is searched for by random
/// combinations of a kernel basis (at most 100 trials). nullopt when the set
/// is not a cycle. Throws InvalidInput on the empty set.
std::optional<CycleCertificate> cycle_certificate(const LinearMatroid& m, std::span<const ElementId> subset,
                                                  std::uint64_t seed = 0);

/// Recomputes sum lambda_e w(e) directly and checks it vanishes, plus the
/// all-nonzero flag.
bool check_certificate(const LinearMatroid& m, const CycleCertificate& certificate);

}  // namespace wsat
