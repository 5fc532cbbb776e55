#pragma once

// Table rows for a simple type: Coxeter-element data, elliptic-class data and the subgroups
// W', C and E, rendered as text or JSON.

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "wtn/cache.hpp"
#include "wtn/class_data.hpp"
#include "wtn/enumeration.hpp"
#include "wtn/reference.hpp"
#include "wtn/tits_lift.hpp"

namespace wtn {

struct TableOptions {
  FieldChar characteristic;
  std::uint64_t cap = kDefaultEnumerationCap;
  bool use_cache = true;
  bool subgroups = true;
};

struct TableReport {
  RootSystemType type;
  FieldChar characteristic;
  std::string source;  // enumeration, cache, partitions, degrees
  Integer group_order;
  Integer l_c;
  int w_c = 0;
  int n_c_ad = 0;
  int n_c_sc = 0;
  Integer tau_c;
  Integer l_e;
  // Elliptic classes other than the Coxeter class, sorted by (order, size, word); values in
  // characteristic 0. Empty for type A; absent when class data is unavailable.
  std::optional<std::vector<ClassRecord>> elliptic;
  std::vector<PartitionClass> partition_classes;  // B, C, D: every elliptic class
  std::optional<SubgroupReport> subgroups;
};

/// Index of the Coxeter class among class records: the unique elliptic class of order h
/// and size |W|/h whose fingerprint matches a Coxeter element.
inline std::size_t coxeter_class_position(const std::vector<ClassRecord>& records, const DatumPtr& ad) {
  const WeylElement cox = coxeter_element(ad);
  const ClassFingerprint fp = class_fingerprint(cox);
  const Integer size = count_coxeter(*ad);
  std::size_t found = records.size();
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    if (!r.elliptic || r.order != ad->coxeter_number || r.size != size) continue;
    if (class_fingerprint(WeylElement::from_word(ad, r.word)) != fp) continue;
    if (found != records.size()) throw std::logic_error("Coxeter class is not determined by its fingerprint");
    found = i;
  }
  if (found == records.size()) throw std::logic_error("no class matches the Coxeter element");
  return found;
}

inline std::vector<ClassRecord> non_coxeter_elliptic(const std::vector<ClassRecord>& records, const DatumPtr& ad) {
  const std::size_t cox = coxeter_class_position(records, ad);
  std::vector<ClassRecord> out;
  for (std::size_t i = 0; i < records.size(); ++i)
    if (records[i].elliptic && i != cox) out.push_back(records[i]);
  std::sort(out.begin(), out.end(), record_less);
  return out;
}

inline TableReport build_table(const RootSystemType& type, const TableOptions& opt = {}) {
  type.validate();
  TableReport rep;
  rep.type = type;
  rep.characteristic = opt.characteristic;
  const auto ad = build_datum(type, Isogeny::adjoint);
  const auto sc = build_datum(type, Isogeny::simply_connected);
  rep.group_order = ad->group_order();
  rep.l_c = count_coxeter(*ad);
  const WeylElement cox_ad = coxeter_element(ad);
  rep.w_c = order(cox_ad);
  rep.n_c_ad = minimal_lift_order(cox_ad, opt.characteristic).d_w;
  rep.n_c_sc = minimal_lift_order(coxeter_element(sc), opt.characteristic).d_w;
  rep.tau_c = tau(cox_ad, opt.characteristic);
  rep.l_e = ad->elliptic_count();

  const bool enumerable = rep.group_order <= opt.cap;
  if (type.is_classical()) {
    rep.source = "partitions";
    if (type.family == Family::A) {
      rep.elliptic = std::vector<ClassRecord>{};
    } else {
      rep.partition_classes = elliptic_partition_classes(type);
      const Partition coxeter_parts =
          type.family == Family::D ? Partition{type.rank - 1, 1} : Partition{type.rank};
      std::vector<ClassRecord> ell;
      for (const auto& pc : rep.partition_classes)
        if (pc.parts != coxeter_parts) ell.push_back(pc.record);
      std::sort(ell.begin(), ell.end(), record_less);
      rep.elliptic = ell;
    }
    if (opt.subgroups && enumerable) rep.subgroups = subgroup_rows(WeylEnumeration(ad, opt.cap));
    return rep;
  }

  if (type.family == Family::E && type.rank == 8) {
    rep.source = "degrees";
    return rep;
  }
  if (opt.use_cache) {
    if (auto cache = load_cache(cache_path(type))) {
      if (!(cache->type == type)) throw CacheFormatError("cache file " + cache_path(type).string() + " holds another type");
      rep.source = "cache";
      rep.elliptic = non_coxeter_elliptic(cache->records, ad);
      if (opt.subgroups && enumerable) rep.subgroups = subgroup_rows(WeylEnumeration(ad, opt.cap));
      return rep;
    }
  }
  const WeylEnumeration w(ad, opt.cap);
  rep.source = "enumeration";
  rep.elliptic = non_coxeter_elliptic(analyze_classes(w), ad);
  if (opt.subgroups) rep.subgroups = subgroup_rows(w);
  return rep;
}

namespace detail {

// Per-class value in the requested characteristic.
enum class Column { order, d_ad, d_sc, tau };

inline Integer column_value(const ClassRecord& r, Column c, FieldChar ch) {
  switch (c) {
    case Column::order: return r.order;
    case Column::d_ad: return ch.value() == 2 ? r.order : r.d_ad;
    case Column::d_sc: return ch.value() == 2 ? r.order : r.d_sc;
    case Column::tau: return p_prime_part(r.tau.value_or(0), ch);
  }
  return 0;
}

}  // namespace detail

/// Values grouped by element order (ascending), one sorted entry per order.
inline std::vector<GroupedEntry> grouped_column(const std::vector<ClassRecord>& classes, detail::Column c, FieldChar ch = {}) {
  std::map<int, GroupedEntry> groups;
  for (const auto& r : classes) groups[r.order].push_back(detail::column_value(r, c, ch));
  std::vector<GroupedEntry> out;
  for (auto& [ord, values] : groups) {
    std::sort(values.begin(), values.end());
    out.push_back(values);
  }
  return out;
}

inline std::string render_entry(const GroupedEntry& values) {
  std::vector<std::pair<Integer, int>> runs;
  for (const auto& v : values) {
    if (!runs.empty() && runs.back().first == v)
      ++runs.back().second;
    else
      runs.push_back({v, 1});
  }
  auto item = [](const std::pair<Integer, int>& run) {
    return run.first.str() + (run.second > 1 ? "_" + std::to_string(run.second) : "");
  };
  if (runs.size() == 1) return item(runs[0]);
  std::string s = "{";
  for (std::size_t i = 0; i < runs.size(); ++i) s += (i ? "," : "") + item(runs[i]);
  return s + "}";
}

inline std::string render_grouped(const std::vector<GroupedEntry>& entries) {
  std::string s;
  for (std::size_t i = 0; i < entries.size(); ++i) s += (i ? "," : "") + render_entry(entries[i]);
  return s.empty() ? "-" : s;
}

/// Lift rows collapse to "+" when every lift order equals the element order.
inline std::string render_lift_row(const std::vector<ClassRecord>& classes, detail::Column c, FieldChar ch) {
  if (classes.empty()) return "-";
  bool all_equal = true;
  for (const auto& r : classes) all_equal = all_equal && detail::column_value(r, c, ch) == r.order;
  return all_equal ? "+" : render_grouped(grouped_column(classes, c, ch));
}

struct TableRow {
  std::string label;
  std::string value;
};

inline std::vector<TableRow> table_rows(const TableReport& rep) {
  const FieldChar ch = rep.characteristic;
  std::vector<TableRow> rows{{"|W|", rep.group_order.str()},
                             {"l_c", rep.l_c.str()},
                             {"|w_c|", std::to_string(rep.w_c)},
                             {"|n_c|_ad", std::to_string(rep.n_c_ad)},
                             {"|n_c|_sc", std::to_string(rep.n_c_sc)},
                             {"tau(w_c)", rep.tau_c.str()},
                             {"l_e", rep.l_e.str()}};
  if (rep.elliptic) {
    const auto& e = *rep.elliptic;
    rows.push_back({"|w_e|", render_grouped(grouped_column(e, detail::Column::order))});
    rows.push_back({"|n_e|_ad", render_lift_row(e, detail::Column::d_ad, ch)});
    rows.push_back({"|n_e|_sc", render_lift_row(e, detail::Column::d_sc, ch)});
    rows.push_back({"tau(w_e)", render_grouped(grouped_column(e, detail::Column::tau, ch))});
  } else {
    for (const char* label : {"|w_e|", "|n_e|_ad", "|n_e|_sc", "tau(w_e)"})
      rows.push_back({label, "n/a (class data needs a cache)"});
  }
  if (rep.subgroups) {
    rows.push_back({"|W:W'|", rep.subgroups->derived_index().str()});
    rows.push_back({"|W:C|", rep.subgroups->coxeter_index().str()});
    rows.push_back({"|W:E|", rep.subgroups->elliptic_index().str()});
  } else {
    for (const char* label : {"|W:W'|", "|W:C|", "|W:E|"}) rows.push_back({label, "n/a (group not enumerated)"});
  }
  return rows;
}

inline std::string render_text(const TableReport& rep) {
  std::ostringstream out;
  out << rep.type.name() << "  (char " << rep.characteristic.value() << ", class data: " << rep.source << ")\n";
  for (const auto& row : table_rows(rep)) out << "  " << std::left << std::setw(10) << row.label << ' ' << row.value << '\n';
  if (!rep.partition_classes.empty()) {
    out << "  elliptic classes by partition:\n";
    for (const auto& pc : rep.partition_classes) {
      std::string parts;
      for (std::size_t i = 0; i < pc.parts.size(); ++i) parts += (i ? "," : "") + std::to_string(pc.parts[i]);
      const auto& r = pc.record;
      out << "    [" << parts << "] size " << r.size << " order " << r.order << " |n|_ad "
          << detail::column_value(r, detail::Column::d_ad, rep.characteristic) << " |n|_sc "
          << detail::column_value(r, detail::Column::d_sc, rep.characteristic) << " tau "
          << detail::column_value(r, detail::Column::tau, rep.characteristic) << '\n';
    }
  } else if (rep.elliptic && !rep.elliptic->empty()) {
    out << "  elliptic classes other than Coxeter (word: size order |n|_ad |n|_sc tau):\n";
    for (const auto& r : *rep.elliptic)
      out << "    " << format_word(r.word) << ": " << r.size << ' ' << r.order << ' '
          << detail::column_value(r, detail::Column::d_ad, rep.characteristic) << ' '
          << detail::column_value(r, detail::Column::d_sc, rep.characteristic) << ' '
          << detail::column_value(r, detail::Column::tau, rep.characteristic) << '\n';
  }
  return out.str();
}

inline nlohmann::ordered_json to_json(const TableReport& rep) {
  using nlohmann::ordered_json;
  const FieldChar ch = rep.characteristic;
  ordered_json j;
  j["type"] = rep.type.name();
  j["char"] = rep.characteristic.value();
  j["source"] = rep.source;
  j["group_order"] = rep.group_order.str();
  j["l_c"] = rep.l_c.str();
  j["w_c"] = rep.w_c;
  j["n_c_ad"] = rep.n_c_ad;
  j["n_c_sc"] = rep.n_c_sc;
  j["tau_c"] = rep.tau_c.str();
  j["l_e"] = rep.l_e.str();
  if (rep.elliptic) {
    const auto& e = *rep.elliptic;
    std::map<int, std::vector<const ClassRecord*>> by_order;
    for (const auto& r : e) by_order[r.order].push_back(&r);
    ordered_json w_e = ordered_json::array(), n_ad = ordered_json::array(), n_sc = ordered_json::array(),
                 tau_e = ordered_json::array();
    auto lift_pairs = [&](detail::Column c, ordered_json& into) {
      for (const auto& [ord, group] : by_order) {
        std::map<Integer, int> counts;
        for (const auto* r : group) ++counts[detail::column_value(*r, c, ch)];
        for (const auto& [v, n] : counts) into.push_back({{"order", ord}, {"lift", static_cast<int>(v)}, {"classes", n}});
      }
    };
    for (const auto& [ord, group] : by_order) {
      w_e.push_back({{"order", ord}, {"count", group.size()}});
      std::map<Integer, int> counts;
      for (const auto* r : group) ++counts[detail::column_value(*r, detail::Column::tau, ch)];
      for (const auto& [v, n] : counts) tau_e.push_back({{"order", ord}, {"tau", v.str()}, {"classes", n}});
    }
    lift_pairs(detail::Column::d_ad, n_ad);
    lift_pairs(detail::Column::d_sc, n_sc);
    j["w_e"] = w_e;
    j["n_e_ad"] = n_ad;
    j["n_e_sc"] = n_sc;
    j["tau_e"] = tau_e;
  } else {
    j["w_e"] = nullptr;
    j["n_e_ad"] = nullptr;
    j["n_e_sc"] = nullptr;
    j["tau_e"] = nullptr;
  }
  if (!rep.partition_classes.empty()) {
    ordered_json parts = ordered_json::array();
    for (const auto& pc : rep.partition_classes) {
      const auto& r = pc.record;
      parts.push_back({{"partition", pc.parts},
                       {"size", r.size.str()},
                       {"order", r.order},
                       {"lift_ad", static_cast<int>(detail::column_value(r, detail::Column::d_ad, ch))},
                       {"lift_sc", static_cast<int>(detail::column_value(r, detail::Column::d_sc, ch))},
                       {"tau", detail::column_value(r, detail::Column::tau, ch).str()}});
    }
    j["elliptic_partitions"] = parts;
  }
  if (rep.subgroups) {
    j["subgroups"] = {{"derived_index", rep.subgroups->derived_index().str()},
                      {"coxeter_index", rep.subgroups->coxeter_index().str()},
                      {"elliptic_index", rep.subgroups->elliptic_index().str()}};
  } else {
    j["subgroups"] = nullptr;
  }
  ordered_json rows = ordered_json::array();
  for (const auto& row : table_rows(rep)) rows.push_back({{"label", row.label}, {"value", row.value}});
  j["rows"] = rows;
  return j;
}

}  // namespace wtn
