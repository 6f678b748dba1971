#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace commdeg {

/// Dense element index; the identity is always 0.
using Element = std::uint32_t;

/// How much checking a table receives on construction. Tables produced by
/// closures, products and quotients are associative by construction and skip
/// the cubic associativity pass.
enum class Validation { Full, Trusted };

/// Finite group stored as a flat row-major multiplication table.
///
/// Copies share the immutable table storage, so passing a GroupTable by value
/// is cheap and every Subgroup or Homomorphism can keep its parent alive.
class GroupTable {
 public:
  /// Validates the Latin-square, identity, inverse and associativity laws. If
  /// the identity is not element 0 the elements are renumbered so that it is,
  /// keeping the remaining elements in their original relative order.
  static GroupTable from_table(std::size_t order, std::vector<Element> mult,
                               std::vector<std::string> labels = {},
                               Validation validation = Validation::Full);

  static GroupTable trivial();

  std::size_t order() const { return data_->order; }
  Element identity() const { return 0; }
  Element mul(Element a, Element b) const { return data_->mult[std::size_t(a) * data_->order + b]; }
  Element inv(Element a) const { return data_->inv[a]; }
  std::span<const Element> row(Element a) const {
    return {data_->mult.data() + std::size_t(a) * data_->order, data_->order};
  }
  std::span<const Element> flat_table() const { return data_->mult; }

  bool has_labels() const { return !data_->labels.empty(); }
  std::string label(Element a) const;
  std::span<const std::string> labels() const { return data_->labels; }

  bool is_abelian() const;

  /// Table equality; labels are display-only and ignored.
  friend bool operator==(const GroupTable& a, const GroupTable& b);

 private:
  struct Data {
    std::size_t order = 0;
    std::vector<Element> mult;
    std::vector<Element> inv;
    std::vector<std::string> labels;
  };
  explicit GroupTable(std::shared_ptr<const Data> d) : data_(std::move(d)) {}

  std::shared_ptr<const Data> data_;
};

/// A subgroup of a parent table, held as a sorted member list.
class Subgroup {
 public:
  /// Validates identity membership, closure and Lagrange.
  Subgroup(GroupTable parent, std::vector<Element> members);

  static Subgroup whole(const GroupTable& g);
  static Subgroup trivial(const GroupTable& g);
  /// Smallest subgroup containing `generators`.
  static Subgroup generated_by(const GroupTable& g, std::span<const Element> generators);
  /// Skips the closure check; `members` must be sorted and already a subgroup.
  static Subgroup unchecked(GroupTable parent, std::vector<Element> members);

  const GroupTable& parent() const { return parent_; }
  std::span<const Element> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  std::size_t index() const { return parent_.order() / members_.size(); }
  bool contains(Element e) const;

  bool is_normal() const;
  bool is_abelian() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.members_ == b.members_ && a.parent_ == b.parent_;
  }

 private:
  Subgroup(GroupTable parent, std::vector<Element> members, std::vector<bool> mask)
      : parent_(std::move(parent)), members_(std::move(members)), mask_(std::move(mask)) {}

  GroupTable parent_;
  std::vector<Element> members_;
  std::vector<bool> mask_;
};

class Homomorphism {
 public:
  /// Checks image[0] == 0 and the homomorphism law exhaustively.
  Homomorphism(GroupTable source, GroupTable target, std::vector<Element> image);

  const GroupTable& source() const { return source_; }
  const GroupTable& target() const { return target_; }
  Element operator()(Element e) const { return image_[e]; }
  std::span<const Element> images() const { return image_; }

  bool is_surjective() const;
  Subgroup kernel() const;
  /// Image of a subgroup of the source, as a subgroup of the target.
  Subgroup map(const Subgroup& h) const;

 private:
  GroupTable source_;
  GroupTable target_;
  std::vector<Element> image_;
};

using ConjugacyClasses = std::vector<std::vector<Element>>;

Subgroup centralizer(const GroupTable& g, Element x);
std::size_t centralizer_order(const GroupTable& g, Element x);
/// Z(H,G): elements of G commuting with every element of H.
Subgroup centralizer(const Subgroup& h);
/// Classes ordered by smallest member; each class sorted.
ConjugacyClasses conjugacy_classes(const GroupTable& g);
Subgroup center(const GroupTable& g);
Subgroup commutator_subgroup(const GroupTable& g);
/// Z(Z(G',G)), the centre of the centralizer of the commutator subgroup.
Subgroup characteristic_abelian_subgroup(const GroupTable& g);

Element commutator(const GroupTable& g, Element x, Element y);
Element power(const GroupTable& g, Element x, std::uint64_t n);
std::vector<Element> power_map(const GroupTable& g, std::uint64_t n);
std::uint64_t element_order(const GroupTable& g, Element x);
std::uint64_t exponent(const GroupTable& g);

/// Table of the subgroup's members, renumbered in member order.
GroupTable subgroup_table(const Subgroup& h);

struct Quotient {
  GroupTable group;
  Homomorphism projection;
};

/// Cosets are numbered by their smallest element in increasing order, so the
/// kernel is coset 0.
Quotient quotient(const GroupTable& g, const Subgroup& normal);

/// Pair (a, b) is element a * |B| + b.
GroupTable direct_product(const GroupTable& a, const GroupTable& b);

/// action[h][x] is the image of x under the automorphism attached to h.
/// Pair (x, h) is element x * |H| + h, with (x,h)(x',h') = (x * h(x'), hh').
GroupTable semidirect_product(const GroupTable& normal, const GroupTable& acting,
                              const std::vector<std::vector<Element>>& action);

}  // namespace commdeg
