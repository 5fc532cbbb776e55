#pragma once

// Per-conjugacy-class invariants of a Weyl group: size, order, sigma, ellipticity, m(w),
// tau(w) and the minimal lift orders for the adjoint and simply connected groups.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "wtn/classical.hpp"
#include "wtn/component_counter.hpp"
#include "wtn/enumeration.hpp"
#include "wtn/root_data.hpp"
#include "wtn/tits_lift.hpp"
#include "wtn/weyl_group.hpp"

namespace wtn {

struct ClassRecord {
  Word word;  // least reduced word in the class
  Integer size;
  int order = 1;
  int sigma = 0;
  bool elliptic = false;
  Integer m;                   // on the adjoint lattice
  std::optional<Integer> tau;  // elliptic classes only
  int d_ad = 1;
  int d_sc = 1;

  friend bool operator==(const ClassRecord&, const ClassRecord&) = default;
};

/// Sort key of cache files and tables: (order, class size, representative word).
inline bool record_less(const ClassRecord& a, const ClassRecord& b) {
  return std::tie(a.order, a.size, a.word) < std::tie(b.order, b.size, b.word);
}

/// Invariants of the class of `word`, on both isogeny types.
inline ClassRecord class_record(const DatumPtr& ad, const DatumPtr& sc, const Word& word, const Integer& size) {
  ClassRecord rec;
  const WeylElement wa = WeylElement::from_word(ad, word);
  const WeylElement ws = WeylElement::from_word(sc, word);
  rec.word = wa.word();
  rec.size = size;
  rec.order = order(wa);
  rec.sigma = sigma(wa);
  rec.elliptic = rec.sigma == 0;
  rec.m = m_of(wa);
  if (rec.elliptic) rec.tau = tau(wa);
  rec.d_ad = minimal_lift_order(wa).d_w;
  rec.d_sc = minimal_lift_order(ws).d_w;
  return rec;
}

/// All classes of an enumerated group, sorted by record_less.
inline std::vector<ClassRecord> analyze_classes(const WeylEnumeration& w) {
  const RootSystemType& type = w.datum()->type;
  const auto ad = build_datum(type, Isogeny::adjoint);
  const auto sc = build_datum(type, Isogeny::simply_connected);
  std::vector<ClassRecord> out;
  for (const auto& c : w.classes()) out.push_back(class_record(ad, sc, w.word(c.representative), c.size));
  std::sort(out.begin(), out.end(), record_less);
  return out;
}

/// Elliptic classes of W(B_n), W(C_n) and W(D_n) from their partitions; the word is the
/// least reduced word of the negative-cycle representative, not of the class.
struct PartitionClass {
  Partition parts;
  ClassRecord record;
};

inline std::vector<PartitionClass> elliptic_partition_classes(const RootSystemType& type) {
  if (type.family != Family::B && type.family != Family::C && type.family != Family::D)
    throw std::invalid_argument("partition labels exist for B, C and D only");
  const auto ad = build_datum(type, Isogeny::adjoint);
  const auto sc = build_datum(type, Isogeny::simply_connected);
  std::vector<PartitionClass> out;
  for (const auto& p : partitions(type.rank)) {
    if (type.family == Family::D && p.size() % 2 != 0) continue;
    const WeylElement w = from_negative_cycles(ad, p);
    out.push_back({p, class_record(ad, sc, w.word(), negative_cycle_class_size(p))});
  }
  return out;
}

/// Label of an elliptic class: a cycle type (A), a partition (B, C, D) or a word.
struct ClassLabel {
  enum class Kind { cycle_type, partition, word };
  Kind kind = Kind::word;
  Partition parts;
  Word word;
};

class NeedsCache : public std::runtime_error {
 public:
  explicit NeedsCache(const RootSystemType& t)
      : std::runtime_error("the class list of W(" + t.name() + ") is beyond enumeration; supply a class cache") {}
};

inline std::vector<ClassLabel> elliptic_class_labels(const DatumPtr& datum, std::uint64_t cap = kDefaultEnumerationCap) {
  const RootSystemType& t = datum->type;
  std::vector<ClassLabel> out;
  switch (t.family) {
    case Family::A: out.push_back({ClassLabel::Kind::cycle_type, {t.rank + 1}, {}}); return out;
    case Family::B:
    case Family::C:
    case Family::D:
      for (const auto& p : partitions(t.rank))
        if (t.family != Family::D || p.size() % 2 == 0) out.push_back({ClassLabel::Kind::partition, p, {}});
      return out;
    default: break;
  }
  if (datum->group_order() > cap) throw NeedsCache(t);
  const WeylEnumeration w(datum, cap);
  for (const auto& c : w.classes()) {
    const WeylElement x = w.element(c.representative);
    if (is_elliptic(x)) out.push_back({ClassLabel::Kind::word, {}, x.word()});
  }
  return out;
}

/// Elliptic labels from previously computed class records (e.g. a cache file).
inline std::vector<ClassLabel> elliptic_class_labels(const std::vector<ClassRecord>& records) {
  std::vector<ClassLabel> out;
  for (const auto& r : records)
    if (r.elliptic) out.push_back({ClassLabel::Kind::word, {}, r.word});
  return out;
}

}  // namespace wtn
