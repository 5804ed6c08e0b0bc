#include "wsat/linear_matroid.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "wsat/error.hpp"
#include "wsat/generators.hpp"

namespace wsat {

namespace {

constexpr int kMaxDraws = 10;

std::uint64_t attempt_seed(std::uint64_t seed, int attempt) {
  return seed + static_cast<std::uint64_t>(attempt) * 0x9E3779B97F4A7C15ULL;
}

std::uint64_t random_element(const PrimeField& f, std::mt19937_64& rng) {
  return std::uniform_int_distribution<std::uint64_t>(0, f.prime() - 1)(rng);
}

// det of a small square matrix over F_p.
std::uint64_t determinant(const PrimeField& f, std::vector<FieldVector> a) {
  const std::size_t n = a.size();
  std::uint64_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      det = f.neg(det);
    }
    det = f.mul(det, a[c][c]);
    const std::uint64_t inv = f.inv(a[c][c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      const std::uint64_t factor = f.mul(a[i][c], inv);
      if (factor == 0) continue;
      for (std::size_t j = c; j < n; ++j) a[i][j] = f.sub(a[i][j], f.mul(factor, a[c][j]));
    }
  }
  return det;
}

std::size_t full_rank(const VectorAssignment& a) {
  const PrimeField f(a.prime);
  return field_rank(f, a.vectors);
}

std::string edge_key(const Edge& e) {
  std::string key;
  for (int i = 0; i < e.size(); ++i) key += (i ? "," : "") + std::to_string(e[i]);
  return key;
}

Edge parse_edge_key(const std::string& key) {
  std::string normalized = key;
  std::replace_if(normalized.begin(), normalized.end(), [](char c) { return c == ',' || c == '-'; }, ' ');
  std::istringstream in(normalized);
  std::vector<Vertex> vs;
  long long v = 0;
  while (in >> v) {
    if (v < 0) throw InvalidInput("negative vertex in edge key '" + key + "'");
    vs.push_back(static_cast<Vertex>(v));
  }
  if (!in.eof() || vs.empty()) throw InvalidInput("bad edge key '" + key + "'");
  return Edge(vs);
}

}  // namespace

const FieldVector* VectorAssignment::find(const Edge& e) const {
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it == edges.end() || *it != e) return nullptr;
  return &vectors[static_cast<std::size_t>(it - edges.begin())];
}

VectorAssignment hyperconnectivity(Vertex n, std::size_t d, std::uint64_t prime, std::uint64_t seed) {
  if (d == 0) throw InvalidInput("hyperconnectivity dimension must be positive");
  if (n < d + 1) throw InvalidInput("hyperconnectivity needs n >= d + 1");
  const PrimeField f(prime);
  const UniformHypergraph kn = make_clique(n, 2);
  const std::size_t expected = n * d - binomial(static_cast<std::int64_t>(d) + 1, 2);

  for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
    std::mt19937_64 rng(attempt_seed(seed, attempt));
    std::vector<FieldVector> x(n, FieldVector(d));
    for (auto& xi : x)
      for (auto& c : xi) c = random_element(f, rng);

    VectorAssignment a;
    a.prime = prime;
    a.dimension = n * d;
    a.uniformity = 2;
    a.seed = seed;
    a.resamples = static_cast<std::size_t>(attempt);
    a.construction = "hyperconnectivity(d=" + std::to_string(d) + ")";
    for (const Edge& e : kn.edges()) {
      const Vertex i = e[0], j = e[1];
      FieldVector w(a.dimension, 0);
      for (std::size_t c = 0; c < d; ++c) {
        w[i * d + c] = x[j][c];
        w[j * d + c] = f.neg(x[i][c]);
      }
      a.edges.push_back(e);
      a.vectors.push_back(std::move(w));
    }
    if (full_rank(a) == expected) return a;
  }
  throw VerificationFailure("hyperconnectivity sample stayed degenerate after " + std::to_string(kMaxDraws) +
                            " draws");
}

VectorAssignment hyper_clique_assignment(Vertex n, int r, int s, std::uint64_t prime, std::uint64_t seed) {
  if (r < 2 || s <= r || n < static_cast<Vertex>(s)) {
    throw InvalidInput("hyper clique assignment needs n >= s > r >= 2");
  }
  if (r == 2) {
    auto a = hyperconnectivity(n, static_cast<std::size_t>(s - 2), prime, seed);
    return a;
  }

  const PrimeField f(prime);
  const Vertex d = static_cast<Vertex>(s - r);
  const UniformHypergraph host = make_clique(n, r);
  const GroundSet ground(host);
  const PatternFamily family({make_clique(static_cast<Vertex>(s), r)});
  const std::size_t expected = binomial(n, r) - binomial(n - d, r);

  // Coordinates: r-sets T with min(T) < d.
  std::vector<Edge> coords;
  for (const Edge& t : host.edges())
    if (t[0] < d) coords.push_back(t);

  for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
    std::mt19937_64 rng(attempt_seed(seed, attempt));
    std::vector<FieldVector> g(n, FieldVector(n));
    for (auto& row : g)
      for (auto& c : row) c = random_element(f, rng);

    VectorAssignment a;
    a.prime = prime;
    a.dimension = coords.size();
    a.uniformity = r;
    a.seed = seed;
    a.resamples = static_cast<std::size_t>(attempt);
    a.construction = "exterior-minors(r=" + std::to_string(r) + ",s=" + std::to_string(s) + ")";
    std::vector<FieldVector> minor(static_cast<std::size_t>(r), FieldVector(static_cast<std::size_t>(r)));
    for (const Edge& e : host.edges()) {
      FieldVector w(coords.size());
      for (std::size_t t = 0; t < coords.size(); ++t) {
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < r; ++j) minor[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = g[e[i]][coords[t][j]];
        w[t] = determinant(f, minor);
      }
      a.edges.push_back(e);
      a.vectors.push_back(std::move(w));
    }
    if (full_rank(a) != expected) continue;
    const LinearMatroid m(ground, a);
    if (!verify_weakly_saturated(m, ground, family).verified()) continue;
    return a;
  }
  throw VerificationFailure("hyper clique assignment failed self-verification for n=" + std::to_string(n) +
                            " r=" + std::to_string(r) + " s=" + std::to_string(s));
}

VectorAssignment assignment_from_json(const nlohmann::json& j) {
  try {
    VectorAssignment a;
    a.prime = j.at("p").get<std::uint64_t>();
    a.dimension = j.at("D").get<std::size_t>();
    const PrimeField f(a.prime);
    std::vector<std::pair<Edge, FieldVector>> items;
    for (const auto& [key, value] : j.at("vectors").items()) {
      FieldVector v;
      for (const auto& c : value) v.push_back(f.reduce(c.get<std::int64_t>()));
      if (v.size() != a.dimension) throw InvalidInput("vector for edge '" + key + "' does not have length D");
      items.emplace_back(parse_edge_key(key), std::move(v));
    }
    std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (std::size_t i = 1; i < items.size(); ++i)
      if (items[i].first == items[i - 1].first) throw InvalidInput("duplicate edge key " + items[i].first.to_string());
    a.uniformity = j.contains("r") ? j.at("r").get<int>() : (items.empty() ? 2 : items.front().first.size());
    for (auto& [e, v] : items) {
      if (e.size() != a.uniformity) throw InvalidInput("edge key " + e.to_string() + " has the wrong size");
      a.edges.push_back(e);
      a.vectors.push_back(std::move(v));
    }
    a.seed = j.value("seed", std::uint64_t{0});
    a.construction = j.value("construction", std::string("user"));
    return a;
  } catch (const nlohmann::json::exception& err) {
    throw InvalidInput(std::string("malformed vector assignment JSON: ") + err.what());
  }
}

nlohmann::json to_json(const VectorAssignment& a) {
  nlohmann::json vectors = nlohmann::json::object();
  for (std::size_t i = 0; i < a.edges.size(); ++i) vectors[edge_key(a.edges[i])] = a.vectors[i];
  return {{"p", a.prime},
          {"D", a.dimension},
          {"r", a.uniformity},
          {"seed", a.seed},
          {"resamples", a.resamples},
          {"construction", a.construction},
          {"vectors", std::move(vectors)}};
}

LinearMatroid::LinearMatroid(GroundSet ground, VectorAssignment assignment)
    : ground_(std::move(ground)), assignment_(std::move(assignment)), field_(assignment_.prime) {
  element_vectors_.reserve(ground_.size());
  for (const EdgeInstance& inst : ground_.instances()) {
    const FieldVector* v = assignment_.find(inst.edge);
    if (!v) throw InvalidInput("vector assignment has no vector for edge " + inst.edge.to_string());
    element_vectors_.push_back(v);
  }
}

std::vector<FieldVector> LinearMatroid::gather(std::span<const ElementId> subset) const {
  std::vector<FieldVector> out;
  out.reserve(subset.size());
  for (ElementId e : subset) {
    if (e >= element_vectors_.size()) throw InvalidInput("element " + std::to_string(e) + " is not in the ground set");
    out.push_back(*element_vectors_[e]);
  }
  return out;
}

bool LinearMatroid::is_independent(std::span<const ElementId> subset) const {
  return basis(subset).size() == subset.size();
}

ElementSet LinearMatroid::basis(std::span<const ElementId> subset) const {
  const auto vs = gather(subset);
  EchelonBasis echelon(field_, assignment_.dimension);
  ElementSet out;
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (echelon.insert(vs[i])) out.push_back(subset[i]);
  return out;
}

std::vector<bool> LinearMatroid::coloops(std::span<const ElementId> subset) const {
  // e is a coloop iff no dependency of the subset involves it.
  const auto kernel = kernel_basis(field_, gather(subset));
  std::vector<bool> mask(subset.size(), true);
  for (const auto& lambda : kernel)
    for (std::size_t i = 0; i < lambda.size(); ++i)
      if (lambda[i] != 0) mask[i] = false;
  return mask;
}

std::string LinearMatroid::describe() const {
  return "linear(" + assignment_.construction + ",p=" + std::to_string(assignment_.prime) +
         ",D=" + std::to_string(assignment_.dimension) + ")";
}

std::size_t field_rank(const LinearMatroid& m, std::span<const ElementId> subset) {
  std::vector<FieldVector> vs;
  for (ElementId e : subset) vs.push_back(m.vector(e));
  return field_rank(m.field(), vs);
}

std::optional<CycleCertificate> cycle_certificate(const LinearMatroid& m, std::span<const ElementId> subset,
                                                  std::uint64_t seed) {
  if (!is_cycle(m, subset)) return std::nullopt;
  std::vector<FieldVector> vs;
  for (ElementId e : subset) vs.push_back(m.vector(e));
  const auto kernel = kernel_basis(m.field(), vs);

  const auto full_support = [](const FieldVector& v) {
    return std::none_of(v.begin(), v.end(), [](std::uint64_t x) { return x == 0; });
  };

  CycleCertificate cert;
  cert.elements.assign(subset.begin(), subset.end());
  cert.coefficients = kernel.front();
  cert.all_nonzero = full_support(cert.coefficients);

  std::mt19937_64 rng(seed);
  const PrimeField& f = m.field();
  for (int trial = 0; trial < 100 && !cert.all_nonzero; ++trial) {
    FieldVector combo(subset.size(), 0);
    for (const auto& k : kernel) {
      const std::uint64_t c = random_element(f, rng);
      for (std::size_t i = 0; i < combo.size(); ++i) combo[i] = f.add(combo[i], f.mul(c, k[i]));
    }
    if (full_support(combo)) {
      cert.coefficients = std::move(combo);
      cert.all_nonzero = true;
    }
  }
  return cert;
}

bool check_certificate(const LinearMatroid& m, const CycleCertificate& certificate) {
  if (certificate.elements.size() != certificate.coefficients.size() || certificate.elements.empty()) return false;
  const PrimeField& f = m.field();
  FieldVector sum(m.assignment().dimension, 0);
  bool any_nonzero = false;
  bool all_nonzero = true;
  for (std::size_t i = 0; i < certificate.elements.size(); ++i) {
    const std::uint64_t lambda = certificate.coefficients[i] % f.prime();
    any_nonzero = any_nonzero || lambda != 0;
    all_nonzero = all_nonzero && lambda != 0;
    const FieldVector& w = m.vector(certificate.elements[i]);
    for (std::size_t c = 0; c < sum.size(); ++c) sum[c] = f.add(sum[c], f.mul(lambda, w[c]));
  }
  const bool vanishes = std::all_of(sum.begin(), sum.end(), [](std::uint64_t x) { return x == 0; });
  return vanishes && any_nonzero && (!certificate.all_nonzero || all_nonzero);
}

}  // namespace wsat
