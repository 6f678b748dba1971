#include "commdeg/sampler.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include "commdeg/degree.hpp"
#include "commdeg/error.hpp"

namespace commdeg {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

bool doubled_is_zero(std::uint64_t a) { return a * 2 == 0; }

Quaternion qpow(Quaternion base, std::uint64_t k) {
  Quaternion r;
  while (k > 0) {
    if (k & 1U) r = r * base;
    base = base * base;
    k >>= 1U;
  }
  return r;
}

void require_same(const SamplerPreset& p, const SampledElement& x) {
  if (x.kind != p.kind) throw Error(ErrorCode::PresetMismatch, "element does not belong to preset " + p.name);
}

bool dihedral_commute(const SampledElement& u, const SampledElement& v) {
  std::uint64_t a = u.angles[0], b = v.angles[0];
  if (u.sign == 1 && v.sign == 1) return true;
  if (u.sign == 1) return doubled_is_zero(a);
  if (v.sign == 1) return doubled_is_zero(b);
  return doubled_is_zero(a - b);
}

// Unit quaternions commute iff their vector parts are parallel.
bool vectors_parallel(const Quaternion& u, const Quaternion& v) {
  return u.y * v.z - u.z * v.y == 0.0 && u.z * v.x - u.x * v.z == 0.0 && u.x * v.y - u.y * v.x == 0.0;
}

// Commutator -1 in SU(2) is trivial in SO(3): both pure and orthogonal.
bool anticommute(const Quaternion& u, const Quaternion& v) {
  return u.w == 0.0 && v.w == 0.0 && u.x * v.x + u.y * v.y + u.z * v.z == 0.0;
}

bool commute_powered(const SamplerPreset& p, const SampledElement& u, const SampledElement& v) {
  switch (p.kind) {
    case PresetKind::Torus: return true;
    case PresetKind::Dihedral: return dihedral_commute(u, v);
    case PresetKind::SU2: return vectors_parallel(u.q, v.q);
    case PresetKind::SO3: return vectors_parallel(u.q, v.q) || anticommute(u.q, v.q);
    case PresetKind::Finite: {
      const GroupTable& g = *p.finite;
      return g.mul(u.index, v.index) == g.mul(v.index, u.index);
    }
    case PresetKind::Product:
      for (std::size_t i = 0; i < p.factors.size(); ++i)
        if (!commute_powered(p.factors[i], u.components[i], v.components[i])) return false;
      return true;
  }
  return false;
}

}  // namespace

StreamRng::StreamRng(std::uint64_t seed, std::uint64_t stream)
    : state_(mix64(seed + kGolden) ^ mix64(stream * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL)) {}

std::uint64_t StreamRng::next() {
  state_ += kGolden;
  return mix64(state_);
}

double StreamRng::uniform() { return double(next() >> 11) * 0x1.0p-53; }

std::uint64_t StreamRng::below(std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::InvalidArgument, "empty range");
  // Lemire's nearly-divisionless method.
  unsigned __int128 m = (unsigned __int128)next() * bound;
  auto low = std::uint64_t(m);
  if (low < bound) {
    std::uint64_t threshold = -bound % bound;
    while (low < threshold) {
      m = (unsigned __int128)next() * bound;
      low = std::uint64_t(m);
    }
  }
  return std::uint64_t(m >> 64);
}

double StreamRng::gaussian() {
  double u1 = 1.0 - uniform();  // (0, 1]
  double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z, a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x, a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

double Quaternion::norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

double SampledElement::turns(std::size_t i) const { return double(angles.at(i) >> 11) * 0x1.0p-53; }

SamplerPreset torus_sampler(std::size_t dim) {
  if (dim == 0) throw Error(ErrorCode::InvalidArgument, "torus dimension must be positive");
  return {PresetKind::Torus, "torus", dim, std::nullopt, {}};
}
SamplerPreset dihedral_sampler() { return {PresetKind::Dihedral, "continuous-dihedral", 1, std::nullopt, {}}; }
SamplerPreset so3_sampler() { return {PresetKind::SO3, "so3", 3, std::nullopt, {}}; }
SamplerPreset su2_sampler() { return {PresetKind::SU2, "su2", 3, std::nullopt, {}}; }

SamplerPreset finite_sampler(GroupTable g, std::string name) {
  return {PresetKind::Finite, std::move(name), 0, std::move(g), {}};
}

SamplerPreset product_sampler(std::vector<SamplerPreset> factors) {
  if (factors.empty()) throw Error(ErrorCode::InvalidArgument, "product needs at least one factor");
  std::string name;
  for (const auto& f : factors) name += (name.empty() ? "" : "x") + f.name;
  return {PresetKind::Product, name, 0, std::nullopt, std::move(factors)};
}

SamplerPreset sampler_preset(const std::string& name, std::size_t dim) {
  if (name == "torus") return torus_sampler(dim);
  if (name == "continuous-dihedral" || name == "dihedral") return dihedral_sampler();
  if (name == "so3") return so3_sampler();
  if (name == "su2") return su2_sampler();
  throw Error(ErrorCode::UnknownPreset, "unknown sampler preset '" + name + "'");
}

SampledElement sample_one(const SamplerPreset& preset, StreamRng& rng) {
  SampledElement e;
  e.kind = preset.kind;
  switch (preset.kind) {
    case PresetKind::Torus:
      for (std::size_t i = 0; i < preset.dim; ++i) e.angles.push_back(rng.next());
      break;
    case PresetKind::Dihedral:
      e.angles.push_back(rng.next());
      e.sign = (rng.next() >> 63) ? -1 : 1;
      break;
    case PresetKind::SO3:
    case PresetKind::SU2: {
      // Normalised 4-d Gaussian vectors are Haar on SU(2); SO(3) takes the image.
      double n = 0;
      do {
        e.q = {rng.gaussian(), rng.gaussian(), rng.gaussian(), rng.gaussian()};
        n = e.q.norm();
      } while (n == 0.0);
      e.q = {e.q.w / n, e.q.x / n, e.q.y / n, e.q.z / n};
      break;
    }
    case PresetKind::Finite:
      e.index = Element(rng.below(preset.finite->order()));
      break;
    case PresetKind::Product:
      for (const auto& f : preset.factors) e.components.push_back(sample_one(f, rng));
      break;
  }
  return e;
}

std::vector<SampledElement> sample(const SamplerPreset& preset, std::size_t count, std::uint64_t seed) {
  if (count == 0) throw Error(ErrorCode::InvalidArgument, "count must be positive");
  std::vector<SampledElement> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    StreamRng rng(seed, i);
    out.push_back(sample_one(preset, rng));
  }
  return out;
}

SampledElement power(const SamplerPreset& preset, const SampledElement& x, std::uint64_t m) {
  require_same(preset, x);
  SampledElement r = x;
  switch (preset.kind) {
    case PresetKind::Torus:
      for (auto& a : r.angles) a *= m;
      break;
    case PresetKind::Dihedral:
      if (x.sign == 1) {
        r.angles[0] = x.angles[0] * m;
      } else if (m % 2 == 0) {
        r.angles[0] = 0;
        r.sign = 1;
      }
      break;
    case PresetKind::SO3:
    case PresetKind::SU2:
      r.q = qpow(x.q, m);
      break;
    case PresetKind::Finite:
      r.index = commdeg::power(*preset.finite, x.index, m);
      break;
    case PresetKind::Product:
      for (std::size_t i = 0; i < preset.factors.size(); ++i)
        r.components[i] = power(preset.factors[i], x.components[i], m);
      break;
  }
  return r;
}

bool commutes(const SamplerPreset& preset, const SampledElement& x, const SampledElement& y, std::uint64_t m,
              std::uint64_t n) {
  require_same(preset, x);
  require_same(preset, y);
  if (m == 0 || n == 0) throw Error(ErrorCode::InvalidArgument, "powers must be positive");
  return commute_powered(preset, power(preset, x, m), power(preset, y, n));
}

std::optional<Rational> exact_degree_mn(const SamplerPreset& preset, std::uint64_t m, std::uint64_t n) {
  switch (preset.kind) {
    case PresetKind::Torus: return Rational(1);
    case PresetKind::Dihedral: {
      // x^m is the identity with probability 1/2 for even m (flips square to
      // 1) and otherwise generic: a flip w.p. 1/2 for odd m, a torus element
      // of non-zero doubling w.p. 1/2.
      auto identity_mass = [](std::uint64_t k) { return k % 2 == 0 ? Rational(1, 2) : Rational(0); };
      Rational im = identity_mass(m), in = identity_mass(n);
      Rational generic_torus(1, 2);
      return im + in - im * in + generic_torus * generic_torus;
    }
    case PresetKind::SO3:
    case PresetKind::SU2: return Rational(0);
    case PresetKind::Finite: return degree_mn(*preset.finite, m, n).value;
    case PresetKind::Product: {
      Rational r(1);
      for (const auto& f : preset.factors) {
        auto e = exact_degree_mn(f, m, n);
        if (!e) return std::nullopt;
        r *= *e;
      }
      return r;
    }
  }
  return std::nullopt;
}

Estimate estimate_degree_mn(const SamplerPreset& preset, std::uint64_t m, std::uint64_t n, std::uint64_t trials,
                            std::uint64_t seed, unsigned workers) {
  if (trials < 100) throw Error(ErrorCode::InvalidArgument, "at least 100 trials are required");
  if (m == 0 || n == 0) throw Error(ErrorCode::InvalidArgument, "powers must be positive");
  workers = std::max(1U, workers);
  std::vector<std::uint64_t> hits(workers, 0);
  auto run = [&](unsigned w) {
    std::uint64_t lo = trials * w / workers, hi = trials * (w + 1) / workers, c = 0;
    for (std::uint64_t i = lo; i < hi; ++i) {
      StreamRng rng(seed, i);
      SampledElement x = sample_one(preset, rng);
      SampledElement y = sample_one(preset, rng);
      c += commutes(preset, x, y, m, n);
    }
    hits[w] = c;
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  Estimate e;
  for (auto h : hits) e.successes += h;
  e.trials = trials;
  e.seed = seed;
  e.mean = double(e.successes) / double(trials);
  e.std_error = std::sqrt(e.mean * (1.0 - e.mean) / double(trials));
  e.exact = exact_degree_mn(preset, m, n);
  return e;
}

Estimate estimate_finite(const GroupTable& g, std::uint64_t m, std::uint64_t n, std::uint64_t trials,
                         std::uint64_t seed, unsigned workers) {
  return estimate_degree_mn(finite_sampler(g, "finite"), m, n, trials, seed, workers);
}

double deviation_sigmas(const Estimate& e) {
  if (!e.exact) return 0.0;
  double diff = std::abs(e.mean - e.exact->to_double());
  if (diff == 0.0) return 0.0;
  if (e.std_error == 0.0) return std::numeric_limits<double>::infinity();
  return diff / e.std_error;
}

BridgeStatus bridge_status(const Estimate& e) {
  double s = deviation_sigmas(e);
  if (s < 4.0) return BridgeStatus::Ok;
  if (s <= 6.0) return BridgeStatus::Flagged;
  return BridgeStatus::Failed;
}

}  // namespace commdeg
