#include "commdeg/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "commdeg/error.hpp"

namespace commdeg {

namespace {

constexpr std::size_t kExhaustiveAssociativityLimit = 256;

void check_latin(std::size_t n, const std::vector<Element>& mult) {
  std::vector<std::uint32_t> seen(n, 0);
  std::uint32_t stamp = 0;
  for (std::size_t r = 0; r < n; ++r) {
    ++stamp;
    for (std::size_t c = 0; c < n; ++c) {
      Element v = mult[r * n + c];
      if (v >= n) throw Error(ErrorCode::NotLatin, "entry out of range in row " + std::to_string(r));
      if (seen[v] == stamp) throw Error(ErrorCode::NotLatin, "row " + std::to_string(r) + " repeats " + std::to_string(v));
      seen[v] = stamp;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    ++stamp;
    for (std::size_t r = 0; r < n; ++r) {
      Element v = mult[r * n + c];
      if (seen[v] == stamp) throw Error(ErrorCode::NotLatin, "column " + std::to_string(c) + " repeats " + std::to_string(v));
      seen[v] = stamp;
    }
  }
}

void check_associative(std::size_t n, const std::vector<Element>& mult) {
  auto m = [&](std::size_t a, std::size_t b) { return std::size_t(mult[a * n + b]); };
  if (n <= kExhaustiveAssociativityLimit) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        std::size_t ab = m(a, b);
        for (std::size_t c = 0; c < n; ++c)
          if (m(ab, c) != m(a, m(b, c)))
            throw Error(ErrorCode::NonAssociative, "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
      }
    return;
  }
  std::mt19937_64 rng(0x5eed'a550c1a7e5ULL ^ n);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::size_t samples = 10 * n * n;
  for (std::size_t i = 0; i < samples; ++i) {
    std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
    if (m(m(a, b), c) != m(a, m(b, c)))
      throw Error(ErrorCode::NonAssociative, "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
  }
}

}  // namespace

GroupTable GroupTable::from_table(std::size_t order, std::vector<Element> mult,
                                  std::vector<std::string> labels, Validation validation) {
  if (order == 0) throw Error(ErrorCode::InvalidArgument, "group order must be positive");
  if (mult.size() != order * order)
    throw Error(ErrorCode::NotLatin, "table has " + std::to_string(mult.size()) + " entries, expected " +
                                         std::to_string(order * order));
  if (!labels.empty() && labels.size() != order)
    throw Error(ErrorCode::InvalidArgument, "label count does not match order");
  check_latin(order, mult);

  // Locate the identity: the unique e with e*e == e.
  std::size_t e = order;
  for (std::size_t i = 0; i < order; ++i)
    if (mult[i * order + i] == i) {
      e = i;
      break;
    }
  if (e == order) throw Error(ErrorCode::NotIdentity, "no idempotent element");
  for (std::size_t i = 0; i < order; ++i)
    if (mult[e * order + i] != i || mult[i * order + e] != i)
      throw Error(ErrorCode::NotIdentity, "element " + std::to_string(e) + " is not a two-sided identity");

  if (e != 0) {
    // Relabel: identity first, others keep their relative order.
    std::vector<Element> to_new(order);
    Element next = 1;
    for (std::size_t i = 0; i < order; ++i) to_new[i] = (i == e) ? 0 : next++;
    std::vector<Element> fresh(order * order);
    for (std::size_t a = 0; a < order; ++a)
      for (std::size_t b = 0; b < order; ++b) fresh[to_new[a] * order + to_new[b]] = to_new[mult[a * order + b]];
    mult = std::move(fresh);
    if (!labels.empty()) {
      std::vector<std::string> relabeled(order);
      for (std::size_t i = 0; i < order; ++i) relabeled[to_new[i]] = std::move(labels[i]);
      labels = std::move(relabeled);
    }
  }

  if (validation == Validation::Full) check_associative(order, mult);

  std::vector<Element> inv(order);
  for (std::size_t a = 0; a < order; ++a) {
    auto row = mult.begin() + std::ptrdiff_t(a * order);
    inv[a] = Element(std::find(row, row + std::ptrdiff_t(order), 0) - row);
    if (mult[inv[a] * order + a] != 0)
      throw Error(ErrorCode::NonAssociative, "left and right inverses differ for " + std::to_string(a));
  }

  auto data = std::make_shared<Data>();
  data->order = order;
  data->mult = std::move(mult);
  data->inv = std::move(inv);
  data->labels = std::move(labels);
  return GroupTable(std::move(data));
}

GroupTable GroupTable::trivial() { return from_table(1, {0}, {"e"}, Validation::Trusted); }

std::string GroupTable::label(Element a) const {
  if (has_labels()) return data_->labels[a];
  return std::to_string(a);
}

bool GroupTable::is_abelian() const {
  const std::size_t n = order();
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool operator==(const GroupTable& a, const GroupTable& b) {
  return a.data_ == b.data_ || (a.order() == b.order() && a.data_->mult == b.data_->mult);
}

// ---------------------------------------------------------------------------

Subgroup::Subgroup(GroupTable parent, std::vector<Element> members) : parent_(std::move(parent)) {
  const std::size_t n = parent_.order();
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty() || members.front() != 0)
    throw Error(ErrorCode::NotSubgroup, "subgroup must contain the identity");
  if (members.back() >= n) throw Error(ErrorCode::IndexOutOfRange, "subgroup member out of range");
  mask_.assign(n, false);
  for (Element m : members) mask_[m] = true;
  for (Element a : members) {
    if (!mask_[parent_.inv(a)]) throw Error(ErrorCode::NotSubgroup, "not closed under inverses");
    for (Element b : members)
      if (!mask_[parent_.mul(a, b)]) throw Error(ErrorCode::NotSubgroup, "not closed under multiplication");
  }
  if (n % members.size() != 0) throw Error(ErrorCode::NotSubgroup, "order does not divide group order");
  members_ = std::move(members);
}

Subgroup Subgroup::whole(const GroupTable& g) {
  std::vector<Element> all(g.order());
  std::iota(all.begin(), all.end(), Element{0});
  return {g, std::move(all), std::vector<bool>(g.order(), true)};
}

Subgroup Subgroup::trivial(const GroupTable& g) {
  std::vector<bool> mask(g.order(), false);
  mask[0] = true;
  return {g, {0}, std::move(mask)};
}

Subgroup Subgroup::generated_by(const GroupTable& g, std::span<const Element> generators) {
  const std::size_t n = g.order();
  std::vector<bool> mask(n, false);
  std::vector<Element> found{0};
  mask[0] = true;
  for (Element s : generators)
    if (s >= n) throw Error(ErrorCode::IndexOutOfRange, "generator out of range");
  // In a finite group, closure under right multiplication by generators
  // already yields the generated subgroup.
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (Element s : generators) {
      Element next = g.mul(found[head], s);
      if (!mask[next]) {
        mask[next] = true;
        found.push_back(next);
      }
    }
  }
  std::sort(found.begin(), found.end());
  return {g, std::move(found), std::move(mask)};
}

Subgroup Subgroup::unchecked(GroupTable parent, std::vector<Element> members) {
  std::vector<bool> mask(parent.order(), false);
  for (Element m : members) mask[m] = true;
  return {std::move(parent), std::move(members), std::move(mask)};
}

bool Subgroup::contains(Element e) const { return e < mask_.size() && mask_[e]; }

bool Subgroup::is_normal() const {
  const std::size_t n = parent_.order();
  for (Element x = 0; x < n; ++x) {
    Element xi = parent_.inv(x);
    for (Element h : members_)
      if (!mask_[parent_.mul(parent_.mul(x, h), xi)]) return false;
  }
  return true;
}

bool Subgroup::is_abelian() const {
  for (Element a : members_)
    for (Element b : members_)
      if (parent_.mul(a, b) != parent_.mul(b, a)) return false;
  return true;
}

// ---------------------------------------------------------------------------

Homomorphism::Homomorphism(GroupTable source, GroupTable target, std::vector<Element> image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
  const std::size_t n = source_.order();
  if (image_.size() != n) throw Error(ErrorCode::NotHomomorphism, "image size does not match source order");
  for (Element v : image_)
    if (v >= target_.order()) throw Error(ErrorCode::IndexOutOfRange, "image entry out of range");
  if (image_[0] != 0) throw Error(ErrorCode::NotHomomorphism, "identity must map to identity");
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (image_[source_.mul(a, b)] != target_.mul(image_[a], image_[b]))
        throw Error(ErrorCode::NotHomomorphism,
                    "law fails at (" + std::to_string(a) + "," + std::to_string(b) + ")");
}

bool Homomorphism::is_surjective() const {
  std::vector<bool> hit(target_.order(), false);
  for (Element v : image_) hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

Subgroup Homomorphism::kernel() const {
  std::vector<Element> k;
  for (Element a = 0; a < image_.size(); ++a)
    if (image_[a] == 0) k.push_back(a);
  return {source_, std::move(k)};
}

Subgroup Homomorphism::map(const Subgroup& h) const {
  if (!(h.parent() == source_)) throw Error(ErrorCode::InvalidArgument, "subgroup of a different group");
  std::vector<Element> img;
  img.reserve(h.size());
  for (Element e : h.members()) img.push_back(image_[e]);
  return {target_, std::move(img)};
}

// ---------------------------------------------------------------------------

Subgroup centralizer(const GroupTable& g, Element x) {
  if (x >= g.order()) throw Error(ErrorCode::IndexOutOfRange, "element " + std::to_string(x));
  std::vector<Element> members;
  for (Element y = 0; y < g.order(); ++y)
    if (g.mul(x, y) == g.mul(y, x)) members.push_back(y);
  return Subgroup::unchecked(g, std::move(members));
}

std::size_t centralizer_order(const GroupTable& g, Element x) {
  if (x >= g.order()) throw Error(ErrorCode::IndexOutOfRange, "element " + std::to_string(x));
  std::size_t k = 0;
  for (Element y = 0; y < g.order(); ++y) k += g.mul(x, y) == g.mul(y, x);
  return k;
}

Subgroup centralizer(const Subgroup& h) {
  const GroupTable& g = h.parent();
  std::vector<Element> members;
  for (Element y = 0; y < g.order(); ++y) {
    bool ok = std::all_of(h.members().begin(), h.members().end(),
                          [&](Element x) { return g.mul(x, y) == g.mul(y, x); });
    if (ok) members.push_back(y);
  }
  return Subgroup::unchecked(g, std::move(members));
}

ConjugacyClasses conjugacy_classes(const GroupTable& g) {
  const std::size_t n = g.order();
  std::vector<bool> assigned(n, false);
  ConjugacyClasses classes;
  for (Element x = 0; x < n; ++x) {
    if (assigned[x]) continue;
    std::vector<Element> cls;
    for (Element y = 0; y < n; ++y) {
      Element c = g.mul(g.mul(y, x), g.inv(y));
      if (!assigned[c]) {
        assigned[c] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

Subgroup center(const GroupTable& g) { return centralizer(Subgroup::whole(g)); }

Element commutator(const GroupTable& g, Element x, Element y) {
  return g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y));
}

Subgroup commutator_subgroup(const GroupTable& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<Element> gens;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      Element c = commutator(g, x, y);
      if (!seen[c]) {
        seen[c] = true;
        gens.push_back(c);
      }
    }
  return Subgroup::generated_by(g, gens);
}

Subgroup characteristic_abelian_subgroup(const GroupTable& g) {
  Subgroup zg = centralizer(commutator_subgroup(g));
  // Centre of Z(G',G) as a group in its own right.
  std::vector<Element> members;
  for (Element y : zg.members()) {
    bool central = std::all_of(zg.members().begin(), zg.members().end(),
                               [&](Element x) { return g.mul(x, y) == g.mul(y, x); });
    if (central) members.push_back(y);
  }
  return {g, std::move(members)};
}

Element power(const GroupTable& g, Element x, std::uint64_t n) {
  Element result = 0;
  Element base = x;
  while (n > 0) {
    if (n & 1U) result = g.mul(result, base);
    base = g.mul(base, base);
    n >>= 1U;
  }
  return result;
}

std::vector<Element> power_map(const GroupTable& g, std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "power must be positive");
  std::vector<Element> out(g.order());
  for (Element x = 0; x < g.order(); ++x) out[x] = power(g, x, n);
  return out;
}

std::uint64_t element_order(const GroupTable& g, Element x) {
  std::uint64_t k = 1;
  for (Element y = x; y != 0; y = g.mul(y, x)) ++k;
  return k;
}

std::uint64_t exponent(const GroupTable& g) {
  std::uint64_t e = 1;
  for (Element x = 0; x < g.order(); ++x) e = std::lcm(e, element_order(g, x));
  return e;
}

GroupTable subgroup_table(const Subgroup& h) {
  const GroupTable& g = h.parent();
  const std::size_t k = h.size();
  std::vector<Element> pos(g.order(), 0);
  for (std::size_t i = 0; i < k; ++i) pos[h.members()[i]] = Element(i);
  std::vector<Element> mult(k * k);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) {
    if (g.has_labels()) labels.push_back(g.label(h.members()[i]));
    for (std::size_t j = 0; j < k; ++j) mult[i * k + j] = pos[g.mul(h.members()[i], h.members()[j])];
  }
  return GroupTable::from_table(k, std::move(mult), std::move(labels), Validation::Trusted);
}

Quotient quotient(const GroupTable& g, const Subgroup& normal) {
  if (!(normal.parent() == g)) throw Error(ErrorCode::InvalidArgument, "subgroup of a different group");
  if (!normal.is_normal()) throw Error(ErrorCode::NotNormal, "subgroup is not normal");
  const std::size_t n = g.order();
  constexpr Element kUnassigned = ~Element{0};
  std::vector<Element> coset_of(n, kUnassigned);
  std::vector<Element> reps;
  for (Element x = 0; x < n; ++x) {
    if (coset_of[x] != kUnassigned) continue;
    Element id = Element(reps.size());
    reps.push_back(x);
    for (Element h : normal.members()) coset_of[g.mul(x, h)] = id;
  }
  const std::size_t k = reps.size();
  std::vector<Element> mult(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) mult[i * k + j] = coset_of[g.mul(reps[i], reps[j])];
  std::vector<std::string> labels;
  if (g.has_labels())
    for (Element r : reps) labels.push_back(g.label(r) + "N");
  GroupTable q = GroupTable::from_table(k, std::move(mult), std::move(labels), Validation::Trusted);
  Homomorphism proj(g, q, std::move(coset_of));
  return {std::move(q), std::move(proj)};
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  std::vector<Element> mult(n * n);
  for (Element a1 = 0; a1 < na; ++a1)
    for (Element b1 = 0; b1 < nb; ++b1) {
      std::size_t row = (std::size_t(a1) * nb + b1) * n;
      for (Element a2 = 0; a2 < na; ++a2)
        for (Element b2 = 0; b2 < nb; ++b2)
          mult[row + std::size_t(a2) * nb + b2] = Element(std::size_t(a.mul(a1, a2)) * nb + b.mul(b1, b2));
    }
  std::vector<std::string> labels;
  if (a.has_labels() || b.has_labels())
    for (Element x = 0; x < na; ++x)
      for (Element y = 0; y < nb; ++y) labels.push_back("(" + a.label(x) + "," + b.label(y) + ")");
  return GroupTable::from_table(n, std::move(mult), std::move(labels), Validation::Trusted);
}

GroupTable semidirect_product(const GroupTable& normal, const GroupTable& acting,
                              const std::vector<std::vector<Element>>& action) {
  const std::size_t nn = normal.order(), nh = acting.order(), n = nn * nh;
  if (action.size() != nh) throw Error(ErrorCode::InvalidAction, "action needs one row per acting element");
  for (Element h = 0; h < nh; ++h) {
    const auto& phi = action[h];
    if (phi.size() != nn) throw Error(ErrorCode::InvalidAction, "action row " + std::to_string(h) + " has wrong length");
    std::vector<bool> hit(nn, false);
    for (Element v : phi) {
      if (v >= nn || hit[v]) throw Error(ErrorCode::InvalidAction, "action row " + std::to_string(h) + " is not a bijection");
      hit[v] = true;
    }
    for (Element x = 0; x < nn; ++x)
      for (Element y = 0; y < nn; ++y)
        if (phi[normal.mul(x, y)] != normal.mul(phi[x], phi[y]))
          throw Error(ErrorCode::InvalidAction, "action row " + std::to_string(h) + " is not an automorphism");
  }
  for (Element x = 0; x < nn; ++x)
    if (action[0][x] != x) throw Error(ErrorCode::InvalidAction, "identity must act trivially");
  for (Element h1 = 0; h1 < nh; ++h1)
    for (Element h2 = 0; h2 < nh; ++h2) {
      const auto& composite = action[acting.mul(h1, h2)];
      for (Element x = 0; x < nn; ++x)
        if (composite[x] != action[h1][action[h2][x]])
          throw Error(ErrorCode::InvalidAction, "action is not a homomorphism into Aut(N)");
    }

  std::vector<Element> mult(n * n);
  for (Element x1 = 0; x1 < nn; ++x1)
    for (Element h1 = 0; h1 < nh; ++h1) {
      std::size_t row = (std::size_t(x1) * nh + h1) * n;
      for (Element x2 = 0; x2 < nn; ++x2)
        for (Element h2 = 0; h2 < nh; ++h2)
          mult[row + std::size_t(x2) * nh + h2] =
              Element(std::size_t(normal.mul(x1, action[h1][x2])) * nh + acting.mul(h1, h2));
    }
  std::vector<std::string> labels;
  if (normal.has_labels() || acting.has_labels())
    for (Element x = 0; x < nn; ++x)
      for (Element h = 0; h < nh; ++h) labels.push_back("(" + normal.label(x) + "," + acting.label(h) + ")");
  return GroupTable::from_table(n, std::move(mult), std::move(labels), Validation::Trusted);
}

}  // namespace commdeg
