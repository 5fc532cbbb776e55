#pragma once

// Tabulated reference values for the Weyl groups of simple groups: closed forms for the
// classical families and transcribed entries for the exceptional types. Entries for elliptic
// classes use the grouped notation of the tables: one comma-separated entry per element
// order (ascending), "v_c" for c classes sharing value v, "{a,b_2}" for a group whose
// classes take different values, and "+" for a lift row where every lift order equals
// the element order.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wtn/number_theory.hpp"
#include "wtn/root_data.hpp"

namespace wtn {

struct ClassicalReference {
  Integer group_order;
  Integer l_c;
  int w_c = 0;
  int n_c_ad = 0;
  int n_c_sc = 0;
  Integer tau_c;
  Integer l_e;
};

inline Integer double_factorial(int n) {
  Integer f = 1;
  for (int k = n; k > 1; k -= 2) f *= k;
  return f;
}

/// Closed forms for A_{n-1} (n = rank + 1), B_n, C_n and D_n.
inline ClassicalReference classical_reference(const RootSystemType& t) {
  if (!t.is_classical()) throw std::invalid_argument(t.name() + " is not classical");
  const Integer two = 2;
  ClassicalReference r;
  switch (t.family) {
    case Family::A: {
      const int n = t.rank + 1;
      r.group_order = factorial(static_cast<unsigned>(n));
      r.l_c = factorial(static_cast<unsigned>(n - 1));
      r.w_c = n;
      r.n_c_ad = n;
      r.n_c_sc = n % 2 == 0 ? 2 * n : n;
      r.tau_c = n;
      r.l_e = factorial(static_cast<unsigned>(n - 1));
      break;
    }
    case Family::B:
    case Family::C: {
      const int n = t.rank;
      r.group_order = ipow(two, static_cast<unsigned>(n)) * factorial(static_cast<unsigned>(n));
      r.l_c = ipow(two, static_cast<unsigned>(n - 1)) * factorial(static_cast<unsigned>(n - 1));
      r.w_c = 2 * n;
      r.n_c_ad = 2 * n;
      if (t.family == Family::B)
        r.n_c_sc = (n % 4 == 0 || n % 4 == 3) ? 2 * n : 4 * n;
      else
        r.n_c_sc = 4 * n;
      r.tau_c = 2;
      r.l_e = double_factorial(2 * n - 1);
      break;
    }
    case Family::D: {
      const int n = t.rank;
      r.group_order = ipow(two, static_cast<unsigned>(n - 1)) * factorial(static_cast<unsigned>(n));
      r.l_c = ipow(two, static_cast<unsigned>(n - 2)) * factorial(static_cast<unsigned>(n - 2)) * n;
      r.w_c = 2 * (n - 1);
      r.n_c_ad = 2 * (n - 1);
      r.n_c_sc = (n % 4 == 0 || n % 4 == 1) ? 2 * (n - 1) : 4 * (n - 1);
      r.tau_c = 4;
      r.l_e = double_factorial(2 * n - 3) * (n - 1);
      break;
    }
    default: break;
  }
  return r;
}

/// How minimal lift orders of elliptic classes relate to element orders d.
enum class LiftClaim { equal, either, doubled };  // d; {d, 2d}; 2d

struct ClassicalEllipticReference {
  LiftClaim ad;
  LiftClaim sc;
};

inline ClassicalEllipticReference classical_elliptic_reference(Family f) {
  switch (f) {
    case Family::B: return {LiftClaim::equal, LiftClaim::either};
    case Family::C: return {LiftClaim::either, LiftClaim::doubled};
    case Family::D: return {LiftClaim::equal, LiftClaim::either};
    default: throw std::invalid_argument("elliptic lift claims exist for B, C and D");
  }
}

/// Index of the derived subgroup, and of the subgroup C generated by Coxeter elements.
/// C contains W' and is generated modulo W' by the image of one Coxeter element: the sign of
/// the permutation (A, D: determinant (-1)^{n-1}, resp. (-1)^n) or, for B and C, a nontrivial
/// element of the Klein four quotient.
inline Integer classical_derived_index(const RootSystemType& t) {
  return t.family == Family::A || t.family == Family::D ? 2 : 4;
}
inline Integer classical_coxeter_index(const RootSystemType& t) {
  switch (t.family) {
    case Family::A: return (t.rank + 1) % 2 == 0 ? 1 : 2;
    case Family::B:
    case Family::C: return 2;
    case Family::D: return t.rank % 2 == 0 ? 2 : 1;
    default: throw std::invalid_argument(t.name() + " is not classical");
  }
}

struct ExceptionalReference {
  RootSystemType type;
  Integer group_order;
  Integer l_c;
  int w_c = 0;
  int n_c_ad = 0;
  int n_c_sc = 0;
  Integer tau_c;
  Integer l_e;
  // Elliptic classes other than the Coxeter class.
  std::string w_e;
  std::string n_e_ad;
  std::string n_e_sc;
  std::string tau_e;
  // Indices in W of W', of C (generated by Coxeter elements) and of E (generated by elliptic elements).
  Integer derived_index;
  Integer coxeter_index;
  Integer elliptic_index;
};

inline std::vector<ExceptionalReference> exceptional_references() {
  auto p = [](unsigned base, unsigned e) { return ipow(Integer(base), e); };
  std::vector<ExceptionalReference> refs;
  refs.push_back({{Family::G, 2}, 12, 2, 6, 6, 6, 1, 5, "2,3_2", "+", "+", "1,1_2", 4, 2, 2});
  refs.push_back({{Family::F, 4}, p(2, 7) * p(3, 2), 96, 12, 12, 12, 1, 385, "2,3,4_2,6_3,8", "2,3,8_2,6_3,8",
                  "2,3,8_2,6_3,8", "16,9,{4,8},{1,4_2},2", 4, 4, 2});
  refs.push_back({{Family::E, 6}, p(2, 7) * p(3, 4) * 5, p(2, 5) * p(3, 3) * 5, 12, 12, 12, 3, p(2, 5) * 5 * 7 * 11,
                  "3,6_2,9", "+", "+", "27,{3,12},3", 2, 2, 2});
  refs.push_back({{Family::E, 7}, p(2, 10) * p(3, 4) * 5 * 7, p(2, 9) * p(3, 2) * 5 * 7, 18, 18, 36, 2,
                  p(3, 2) * 5 * 7 * 11 * 13 * 17, "2,4,6_4,8,10,12,14,30", "+", "4,4,12_4,8,20,12,28,60",
                  "128,32,{2,8,18,32},8,8,2,2,2", 2, 1, 1});
  refs.push_back({{Family::E, 8}, p(2, 14) * p(3, 5) * p(5, 2) * 7, p(2, 13) * p(3, 4) * 5 * 7, 30, 30, 30, 1,
                  Integer(7) * 11 * 13 * 17 * 19 * 23 * 29, "2,3,4_2,5,6_6,8_2,9,10_2,12_6,14,15,18_2,20,24,30", "+", "+",
                  "256,81,{16,64},25,{1,4,9,16,36,64},{4,16},9,{1,16},{1_2,4_2,9,16},4,1,{1,4},1,1,1", 2, 2, 2});
  return refs;
}

inline ExceptionalReference exceptional_reference(const RootSystemType& t) {
  for (auto& r : exceptional_references())
    if (r.type == t) return r;
  throw std::invalid_argument(t.name() + " is not exceptional");
}

/// One entry of a grouped row, expanded to the sorted list of per-class values.
using GroupedEntry = std::vector<Integer>;

/// Parses "16,9,{4,8},{1,4_2},2" into {{16},{9},{4,8},{1,4,4},{2}}; "+" yields an empty list.
inline std::vector<GroupedEntry> parse_grouped(const std::string& text) {
  std::vector<GroupedEntry> out;
  if (text == "+") return out;
  auto parse_item = [&](const std::string& item, GroupedEntry& into) {
    const auto us = item.find('_');
    const Integer value(item.substr(0, us));
    const int count = us == std::string::npos ? 1 : std::stoi(item.substr(us + 1));
    if (count < 1) throw std::invalid_argument("bad multiplicity in '" + text + "'");
    for (int c = 0; c < count; ++c) into.push_back(value);
  };
  std::size_t pos = 0;
  while (pos < text.size()) {
    GroupedEntry entry;
    if (text[pos] == '{') {
      const auto close = text.find('}', pos);
      if (close == std::string::npos) throw std::invalid_argument("unbalanced brace in '" + text + "'");
      std::string inner = text.substr(pos + 1, close - pos - 1);
      std::size_t s = 0;
      while (s <= inner.size()) {
        const auto comma = inner.find(',', s);
        const auto end = comma == std::string::npos ? inner.size() : comma;
        parse_item(inner.substr(s, end - s), entry);
        s = end + 1;
      }
      pos = close + 1;
    } else {
      const auto comma = text.find(',', pos);
      const auto end = comma == std::string::npos ? text.size() : comma;
      parse_item(text.substr(pos, end - pos), entry);
      pos = end;
    }
    std::sort(entry.begin(), entry.end());
    out.push_back(std::move(entry));
    if (pos < text.size()) {
      if (text[pos] != ',') throw std::invalid_argument("expected ',' in '" + text + "'");
      ++pos;
    }
  }
  return out;
}

}  // namespace wtn
