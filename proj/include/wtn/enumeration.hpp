#pragma once

// Exhaustive enumeration of a Weyl group as a Cayley graph.
//
// Every element x is keyed by x^{-1}(rho) written in fundamental-weight coordinates; W acts
// simply transitively on the regular orbit of rho, so the key identifies x, and right
// multiplication by s_i acts on keys by the simple reflection itself. Breadth-first search
// from the identity, taking generators in increasing order, visits elements in
// (length, lexicographic word) order and records for each the lexicographically least
// reduced word.

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "wtn/root_data.hpp"
#include "wtn/weyl_group.hpp"

namespace wtn {

inline constexpr std::uint64_t kDefaultEnumerationCap = 4'000'000;

class EnumerationCapExceeded : public std::runtime_error {
 public:
  EnumerationCapExceeded(const RootSystemType& type, const Integer& order, std::uint64_t cap)
      : std::runtime_error("W(" + type.name() + ") has " + order.str() + " elements, above the enumeration cap " +
                           std::to_string(cap) + "; rerun with --cap " + order.str() + " or higher"),
        group_order(order),
        cap(cap) {}
  Integer group_order;
  std::uint64_t cap;
};

namespace detail {

// Open-addressing map from packed keys to element indices.
class FlatIndex {
 public:
  explicit FlatIndex(std::size_t expected) {
    std::size_t cap = 16;
    while (cap < expected * 2) cap <<= 1;
    keys_.assign(cap, 0);
    slots_.assign(cap, kEmpty);
    mask_ = cap - 1;
  }

  // Index stored for key, or inserts `value` and returns it.
  std::uint32_t find_or_insert(std::uint64_t key, std::uint32_t value, bool& inserted) {
    std::size_t h = hash(key) & mask_;
    for (;;) {
      if (slots_[h] == kEmpty) {
        keys_[h] = key;
        slots_[h] = value;
        inserted = true;
        return value;
      }
      if (keys_[h] == key) {
        inserted = false;
        return slots_[h];
      }
      h = (h + 1) & mask_;
    }
  }

  std::uint32_t find(std::uint64_t key) const {
    std::size_t h = hash(key) & mask_;
    for (;;) {
      if (slots_[h] == kEmpty) return kEmpty;
      if (keys_[h] == key) return slots_[h];
      h = (h + 1) & mask_;
    }
  }

  static constexpr std::uint32_t kEmpty = std::numeric_limits<std::uint32_t>::max();

 private:
  static std::size_t hash(std::uint64_t k) {
    k ^= k >> 33;
    k *= 0xff51afd7ed558ccdULL;
    k ^= k >> 33;
    k *= 0xc4ceb9fe1a85ec53ULL;
    k ^= k >> 33;
    return static_cast<std::size_t>(k);
  }

  std::vector<std::uint64_t> keys_;
  std::vector<std::uint32_t> slots_;
  std::size_t mask_ = 0;
};

using PackedWeight = std::array<std::int8_t, 8>;

inline std::uint64_t pack(const PackedWeight& v) {
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < 8; ++i) k |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(v[i])) << (8 * i);
  return k;
}

inline PackedWeight unpack(std::uint64_t k) {
  PackedWeight v{};
  for (std::size_t i = 0; i < 8; ++i) v[i] = static_cast<std::int8_t>(static_cast<std::uint8_t>(k >> (8 * i)));
  return v;
}

}  // namespace detail

struct ConjugacyClass {
  std::uint32_t representative = 0;  // least element index in the class
  std::uint64_t size = 0;
};

/// The whole group with right/left multiplication tables by simple reflections.
class WeylEnumeration {
 public:
  using Index = std::uint32_t;

  explicit WeylEnumeration(DatumPtr datum, std::uint64_t cap = kDefaultEnumerationCap) : datum_(std::move(datum)) {
    const Integer order = datum_->group_order();
    if (order > cap) throw EnumerationCapExceeded(datum_->type, order, cap);
    build(static_cast<std::size_t>(order));
  }

  const DatumPtr& datum() const noexcept { return datum_; }
  std::size_t size() const noexcept { return parent_.size(); }
  int rank() const noexcept { return datum_->rank; }
  static constexpr Index identity_index() { return 0; }

  Index right(Index x, int i) const { return right_[x * r_ + static_cast<std::size_t>(i)]; }
  Index left(int i, Index x) const { return left_[x * r_ + static_cast<std::size_t>(i)]; }
  Index conjugate_simple(int i, Index x) const { return left(i, right(x, i)); }
  std::size_t length(Index x) const { return length_[x]; }

  Word word(Index x) const {
    Word w(length_[x]);
    for (std::size_t k = w.size(); k-- > 0;) {
      w[k] = letter_[x];
      x = parent_[x];
    }
    return w;
  }

  Index multiply_word(Index x, const Word& w) const {
    for (auto letter : w) x = right(x, letter);
    return x;
  }
  Index multiply(Index a, Index b) const { return multiply_word(a, word(b)); }
  Index inverse(Index x) const {
    const Word w = word(x);
    return multiply_word(identity_index(), Word(w.rbegin(), w.rend()));
  }
  Index index_of_word(const Word& w) const {
    Index x = identity_index();
    for (auto letter : w) x = right(x, letter);
    return x;
  }

  WeylElement element(Index x) const { return WeylElement::from_word(datum_, word(x)); }

  /// Conjugacy classes, ordered by representative index.
  const std::vector<ConjugacyClass>& classes() const {
    if (classes_.empty()) compute_classes();
    return classes_;
  }
  std::uint32_t class_of(Index x) const {
    if (classes_.empty()) compute_classes();
    return class_of_[x];
  }

 private:
  void build(std::size_t order) {
    const std::size_t r = static_cast<std::size_t>(datum_->rank);
    r_ = r;
    const SmallMatrix& cartan = datum_->cartan;
    detail::FlatIndex index(order);
    std::vector<std::uint64_t> keys;
    keys.reserve(order);
    parent_.reserve(order);
    letter_.reserve(order);
    length_.reserve(order);
    right_.assign(order * r, 0);

    detail::PackedWeight rho{};
    for (std::size_t i = 0; i < r; ++i) rho[i] = 1;
    bool inserted = false;
    index.find_or_insert(detail::pack(rho), 0, inserted);
    keys.push_back(detail::pack(rho));
    parent_.push_back(0);
    letter_.push_back(0);
    length_.push_back(0);

    for (std::size_t head = 0; head < keys.size(); ++head) {
      const detail::PackedWeight v = detail::unpack(keys[head]);
      for (std::size_t i = 0; i < r; ++i) {
        detail::PackedWeight w = v;
        const int vi = v[i];
        for (std::size_t k = 0; k < r; ++k) w[k] = static_cast<std::int8_t>(v[k] - vi * cartan(i, k));
        const std::uint64_t key = detail::pack(w);
        const auto next = static_cast<Index>(keys.size());
        Index child = 0;
        if (vi > 0) {
          child = index.find_or_insert(key, next, inserted);
          if (inserted) {
            if (keys.size() >= order) throw std::logic_error("enumeration exceeded the group order");
            keys.push_back(key);
            parent_.push_back(static_cast<Index>(head));
            letter_.push_back(static_cast<std::uint8_t>(i));
            length_.push_back(static_cast<std::uint8_t>(length_[head] + 1));
          }
        } else {
          child = index.find(key);
          if (child == detail::FlatIndex::kEmpty) throw std::logic_error("descent target missing from enumeration");
        }
        right_[head * r + i] = child;
      }
    }
    if (keys.size() != order)
      throw std::logic_error("enumeration found " + std::to_string(keys.size()) + " elements, expected " + std::to_string(order));

    // s_i (y s_j) = (s_i y) s_j, filled in BFS order so parents come first.
    left_.assign(order * r, 0);
    for (std::size_t i = 0; i < r; ++i) left_[i] = right_[i];
    for (std::size_t x = 1; x < order; ++x) {
      const Index y = parent_[x];
      const std::size_t j = letter_[x];
      for (std::size_t i = 0; i < r; ++i) left_[x * r + i] = right_[static_cast<std::size_t>(left_[y * r + i]) * r + j];
    }
  }

  void compute_classes() const {
    const std::size_t n = size();
    constexpr std::uint32_t unset = std::numeric_limits<std::uint32_t>::max();
    class_of_.assign(n, unset);
    std::vector<Index> queue;
    for (std::size_t start = 0; start < n; ++start) {
      if (class_of_[start] != unset) continue;
      const auto id = static_cast<std::uint32_t>(classes_.size());
      queue.assign(1, static_cast<Index>(start));
      class_of_[start] = id;
      for (std::size_t head = 0; head < queue.size(); ++head)
        for (int i = 0; i < rank(); ++i) {
          const Index y = conjugate_simple(i, queue[head]);
          if (class_of_[y] == unset) {
            class_of_[y] = id;
            queue.push_back(y);
          }
        }
      classes_.push_back({static_cast<std::uint32_t>(start), queue.size()});
    }
  }

  DatumPtr datum_;
  std::size_t r_ = 0;
  std::vector<Index> parent_;
  std::vector<std::uint8_t> letter_;
  std::vector<std::uint8_t> length_;
  std::vector<Index> right_;
  std::vector<Index> left_;
  mutable std::vector<ConjugacyClass> classes_;
  mutable std::vector<std::uint32_t> class_of_;
};

/// Subgroup of an enumerated Weyl group, grown by adding generators.
class Subgroup {
 public:
  explicit Subgroup(const WeylEnumeration& w) : group_(&w), member_(w.size(), 0) {
    member_[WeylEnumeration::identity_index()] = 1;
    elements_.push_back(WeylEnumeration::identity_index());
  }

  bool contains(WeylEnumeration::Index x) const { return member_[x] != 0; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<Word>& generators() const noexcept { return generators_; }
  const std::vector<WeylEnumeration::Index>& elements() const noexcept { return elements_; }

  /// Replaces the subgroup H by <H, g>.
  void add_generator(WeylEnumeration::Index g) {
    if (contains(g)) return;
    generators_.push_back(group_->word(g));
    const Word& gw = generators_.back();
    const std::size_t old_size = elements_.size();
    for (std::size_t k = 0; k < old_size; ++k) insert(group_->multiply_word(elements_[k], gw));
    for (std::size_t k = old_size; k < elements_.size(); ++k)
      for (const auto& gen : generators_) insert(group_->multiply_word(elements_[k], gen));
  }

  /// Closes the subgroup under conjugation by W.
  void normal_closure() {
    for (std::size_t k = 0; k < generators_.size(); ++k)
      for (int i = 0; i < group_->rank(); ++i) {
        const auto g = group_->index_of_word(generators_[k]);
        add_generator(group_->conjugate_simple(i, g));
      }
  }

 private:
  void insert(WeylEnumeration::Index y) {
    if (member_[y]) return;
    member_[y] = 1;
    elements_.push_back(y);
  }

  const WeylEnumeration* group_;
  std::vector<char> member_;
  std::vector<WeylEnumeration::Index> elements_;
  std::vector<Word> generators_;
};

/// Orders of the derived subgroup W', the subgroup C generated by Coxeter elements and
/// the subgroup E generated by elliptic elements.
struct SubgroupReport {
  Integer group_order;
  std::uint64_t derived_order = 0;
  std::uint64_t coxeter_order = 0;
  std::uint64_t elliptic_order = 0;

  Integer derived_index() const { return group_order / derived_order; }
  Integer coxeter_index() const { return group_order / coxeter_order; }
  Integer elliptic_index() const { return group_order / elliptic_order; }
};

inline SubgroupReport subgroup_rows(const WeylEnumeration& w) {
  SubgroupReport rep;
  rep.group_order = w.size();

  Subgroup derived(w);
  for (int i = 0; i < w.rank(); ++i)
    for (int j = i + 1; j < w.rank(); ++j) {
      const Word comm{static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j), static_cast<std::uint8_t>(i),
                      static_cast<std::uint8_t>(j)};
      derived.add_generator(w.index_of_word(comm));
    }
  derived.normal_closure();
  rep.derived_order = derived.size();

  // Both C and E are generated by unions of conjugacy classes.
  const auto& classes = w.classes();
  std::vector<char> elliptic(classes.size(), 0);
  for (std::size_t c = 0; c < classes.size(); ++c) elliptic[c] = is_elliptic(w.element(classes[c].representative));
  const auto coxeter_class = w.class_of(w.index_of_word(coxeter_element(w.datum()).word()));

  Subgroup cox(w), ell(w);
  for (std::size_t x = 0; x < w.size(); ++x) {
    const auto c = w.class_of(static_cast<WeylEnumeration::Index>(x));
    if (c == coxeter_class) cox.add_generator(static_cast<WeylEnumeration::Index>(x));
    if (elliptic[c]) ell.add_generator(static_cast<WeylEnumeration::Index>(x));
  }
  rep.coxeter_order = cox.size();
  rep.elliptic_order = ell.size();
  return rep;
}

/// a_i = number of elements with sigma(w) = r - i.
struct SigmaDistribution {
  std::vector<Integer> coefficients;
};

inline SigmaDistribution sigma_distribution(const WeylEnumeration& w) {
  SigmaDistribution dist;
  dist.coefficients.assign(static_cast<std::size_t>(w.rank()) + 1, 0);
  for (const auto& c : w.classes()) {
    const int s = sigma(w.element(c.representative));
    dist.coefficients[static_cast<std::size_t>(w.rank() - s)] += c.size;
  }
  return dist;
}

inline SigmaDistribution sigma_distribution(const DatumPtr& datum, std::uint64_t cap = kDefaultEnumerationCap) {
  return sigma_distribution(WeylEnumeration(datum, cap));
}

}  // namespace wtn
