#pragma once

// Self-checks run by `wtn verify --suite <name>`: each suite evaluates a family of
// identities over many inputs and collects the failures.

#include <cstdint>
#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "wtn/class_data.hpp"
#include "wtn/component_counter.hpp"
#include "wtn/enumeration.hpp"
#include "wtn/exact_linalg.hpp"
#include "wtn/reference.hpp"
#include "wtn/tables.hpp"
#include "wtn/tits_lift.hpp"
#include "wtn/type_a.hpp"

namespace wtn {

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  template <typename A, typename B>
  void expect_eq(const A& got, const B& want, const std::string& what) {
    std::ostringstream msg;
    msg << what << ": got " << got << ", expected " << want;
    check(got == want, msg.str());
  }
};

/// Mismatches between a table report and the classical closed forms.
inline std::vector<std::string> compare_classical(const TableReport& rep) {
  const ClassicalReference ref = classical_reference(rep.type);
  std::vector<std::string> out;
  auto cmp = [&](const std::string& row, const auto& got, const auto& want) {
    if (!(got == want)) {
      std::ostringstream s;
      s << rep.type.name() << ' ' << row << ": computed " << got << ", table " << want;
      out.push_back(s.str());
    }
  };
  cmp("|W|", rep.group_order, ref.group_order);
  cmp("l_c", rep.l_c, ref.l_c);
  cmp("|w_c|", rep.w_c, ref.w_c);
  cmp("|n_c|_ad", rep.n_c_ad, ref.n_c_ad);
  cmp("|n_c|_sc", rep.n_c_sc, ref.n_c_sc);
  cmp("tau(w_c)", rep.tau_c, ref.tau_c);
  cmp("l_e", rep.l_e, ref.l_e);
  return out;
}

inline std::string render_entries(const std::vector<GroupedEntry>& e) { return render_grouped(e); }

/// Mismatches between an exceptional table report (with class data) and the transcribed table.
inline std::vector<std::string> compare_exceptional(const TableReport& rep, const ExceptionalReference& ref) {
  std::vector<std::string> out;
  const std::string name = rep.type.name();
  auto cmp = [&](const std::string& row, const auto& got, const auto& want) {
    if (!(got == want)) {
      std::ostringstream s;
      s << name << ' ' << row << ": computed " << got << ", table " << want;
      out.push_back(s.str());
    }
  };
  cmp("|W|", rep.group_order, ref.group_order);
  cmp("l_c", rep.l_c, ref.l_c);
  cmp("|w_c|", rep.w_c, ref.w_c);
  cmp("|n_c|_ad", rep.n_c_ad, ref.n_c_ad);
  cmp("|n_c|_sc", rep.n_c_sc, ref.n_c_sc);
  cmp("tau(w_c)", rep.tau_c, ref.tau_c);
  cmp("l_e", rep.l_e, ref.l_e);
  if (!rep.elliptic) {
    out.push_back(name + ": no class data to compare");
    return out;
  }
  const auto& e = *rep.elliptic;
  const FieldChar ch = rep.characteristic;
  auto grouped_row = [&](const std::string& row, detail::Column c, const std::string& want) {
    const auto got = grouped_column(e, c, ch);
    if (got != parse_grouped(want)) out.push_back(name + ' ' + row + ": computed " + render_grouped(got) + ", table " + want);
  };
  auto lift_row = [&](const std::string& row, detail::Column c, const std::string& want) {
    if (want == "+") {
      const std::string got = render_lift_row(e, c, ch);
      if (got != "+") out.push_back(name + ' ' + row + ": computed " + got + ", table +");
    } else {
      grouped_row(row, c, want);
    }
  };
  grouped_row("|w_e|", detail::Column::order, ref.w_e);
  lift_row("|n_e|_ad", detail::Column::d_ad, ref.n_e_ad);
  lift_row("|n_e|_sc", detail::Column::d_sc, ref.n_e_sc);
  grouped_row("tau(w_e)", detail::Column::tau, ref.tau_e);
  if (rep.subgroups) {
    cmp("|W:W'|", rep.subgroups->derived_index(), ref.derived_index);
    cmp("|W:C|", rep.subgroups->coxeter_index(), ref.coxeter_index);
    cmp("|W:E|", rep.subgroups->elliptic_index(), ref.elliptic_index);
  }
  return out;
}

namespace detail {

inline std::vector<RootSystemType> types_up_to_rank(int max_rank, bool exceptional) {
  std::vector<RootSystemType> out;
  for (int r = 1; r <= max_rank; ++r) out.push_back({Family::A, r});
  for (int r = 2; r <= max_rank; ++r) out.push_back({Family::B, r});
  for (int r = 3; r <= max_rank; ++r) out.push_back({Family::C, r});
  for (int r = 4; r <= max_rank; ++r) out.push_back({Family::D, r});
  if (exceptional) {
    out.push_back({Family::G, 2});
    if (max_rank >= 4) out.push_back({Family::F, 4});
    if (max_rank >= 6) out.push_back({Family::E, 6});
  }
  return out;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

}  // namespace detail

inline SuiteResult verify_linalg() {
  SuiteResult res{"linalg", 0, {}};
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> size(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const auto rows = static_cast<std::size_t>(size(rng));
    const auto cols = trial < 100 ? rows : static_cast<std::size_t>(size(rng));
    const IntMatrix a = detail::random_matrix(rng, rows, cols, 9);
    const auto d = smith_normal_form(a);
    res.check(d.U * a * d.V == d.S, "U A V = S");
    res.check(abs(determinant(d.U)) == 1 && abs(determinant(d.V)) == 1, "U and V unimodular");
    for (std::size_t k = 1; k < d.invariant_factors.size(); ++k)
      res.check(d.invariant_factors[k] % d.invariant_factors[k - 1] == 0, "divisibility chain");
    const Integer m0 = multiplicity(a);
    for (unsigned p : {2u, 3u, 5u, 7u})
      res.check(m0 == multiplicity(a, FieldChar(p)) * p_part(m0, p), "p-part splitting of the multiplicity");
    if (rows == cols) {
      const Integer det = determinant(a);
      if (det != 0) res.expect_eq(m0, abs(det), "multiplicity of a nonsingular matrix");
    }
    const auto kernel = kernel_basis(a);
    res.expect_eq(kernel.size(), cols - rank(a), "kernel dimension");
    if (!kernel.empty()) {
      IntMatrix k(kernel.size(), cols);
      for (std::size_t i = 0; i < kernel.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) k(i, j) = kernel[i][j];
      res.check((a * k.transpose()).is_zero(), "kernel vectors are annihilated");
      bool saturated = true;
      for (const auto& f : invariant_factors(k)) saturated = saturated && f == 1;
      res.check(saturated, "kernel basis is saturated");
    }
  }
  return res;
}

inline SuiteResult verify_weyl(std::uint64_t cap = kDefaultEnumerationCap) {
  SuiteResult res{"weyl", 0, {}};
  for (const auto& t : detail::types_up_to_rank(5, true)) {
    const auto ad = build_datum(t, Isogeny::adjoint);
    const WeylEnumeration w(ad, cap);
    res.expect_eq(Integer(w.size()), ad->group_order(), t.name() + " |W|");
    const auto dist = sigma_distribution(w);
    res.check(dist.coefficients == solomon_coefficients(*ad), t.name() + " sigma distribution equals prod(1 + (d_i - 1) t)");
    res.expect_eq(dist.coefficients[1], Integer(ad->num_roots / 2), t.name() + " reflections");
    res.expect_eq(dist.coefficients.back(), ad->elliptic_count(), t.name() + " elliptic elements");
    const auto cox = w.index_of_word(coxeter_element(ad).word());
    res.expect_eq(Integer(w.classes()[w.class_of(cox)].size), count_coxeter(*ad), t.name() + " Coxeter class size");
    for (const auto& c : w.classes()) {
      const WeylElement x = w.element(c.representative);
      res.check(ad->group_order() % order(x) == 0, t.name() + " order divides |W|");
      res.check(sigma(x) + reflection_length(x) == t.rank, t.name() + " sigma + reflection length = r");
    }
  }
  return res;
}

inline SuiteResult verify_tits() {
  SuiteResult res{"tits", 0, {}};
  std::mt19937_64 rng(7);
  for (const auto& t : detail::types_up_to_rank(6, true))
    for (Isogeny iso : {Isogeny::adjoint, Isogeny::simply_connected}) {
      const auto datum = build_datum(t, iso);
      const std::string name = datum->name();
      for (int i = 0; i < t.rank; ++i) {
        const auto n = generator_lift(datum, i);
        const auto sq = multiply(n, n);
        res.check(sq.weyl_part().length() == 0 && sq.torus_part() == datum->coroot_mod2[static_cast<std::size_t>(i)],
                  name + " n_i^2 = alpha_i^vee(-1)");
        for (int j = i + 1; j < t.rank; ++j) {
          const int mij = order(WeylElement::from_word(datum, {static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)}));
          ExtendedElement lhs = ExtendedElement::identity(datum), rhs = lhs;
          for (int k = 0; k < mij; ++k) {
            lhs = multiply(lhs, generator_lift(datum, k % 2 == 0 ? i : j));
            rhs = multiply(rhs, generator_lift(datum, k % 2 == 0 ? j : i));
          }
          res.check(lhs == rhs, name + " braid relation");
        }
      }
      // Associativity on random elements given by random words.
      std::uniform_int_distribution<int> letter(0, t.rank - 1), len(0, 12);
      auto random_element = [&] {
        Word w(static_cast<std::size_t>(len(rng)));
        for (auto& l : w) l = static_cast<std::uint8_t>(letter(rng));
        TorusMod2 tp(static_cast<std::size_t>(t.rank));
        for (auto& c : tp) c = static_cast<std::uint8_t>(rng() & 1u);
        return ExtendedElement(tp, WeylElement::from_word(datum, w));
      };
      for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_element(), b = random_element(), c = random_element();
        res.check(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)), name + " associativity");
        const LiftOrderReport lr = minimal_lift_order(a.weyl_part());
        res.check(lr.d_w == lr.ord_w || lr.d_w == 2 * lr.ord_w, name + " d(w) in {ord, 2 ord}");
      }
    }
  return res;
}

inline SuiteResult verify_counts() {
  SuiteResult res{"counts", 0, {}};
  for (const auto& t : detail::types_up_to_rank(4, true))
    for (Isogeny iso : {Isogeny::adjoint, Isogeny::simply_connected}) {
      const auto datum = build_datum(t, iso);
      const std::string name = datum->name();
      const WeylEnumeration w(datum);
      for (std::size_t x = 0; x < w.size(); ++x) {
        const WeylElement e = w.element(static_cast<WeylEnumeration::Index>(x));
        const IntMatrix b = matrix_B(e), a = matrix_A(e);
        const int s = sigma(e);
        res.check((b * a).is_zero(), name + " B_w A_w = 0");
        res.expect_eq(rank(b), static_cast<std::size_t>(s), name + " rank B_w");
        res.expect_eq(rank(a), static_cast<std::size_t>(t.rank - s), name + " rank A_w");
        if (s == 0) {
          res.expect_eq(m_of(e), Integer(1), name + " m(elliptic)");
          res.expect_eq(multiplicity(a), tau(e), name + " multiplicity of A_w equals tau for elliptic w");
        }
      }
    }
  for (int n = 2; n <= 10; ++n)
    for (const auto& p : partitions(n)) {
      const CycleType ct(p);
      const auto ad = build_datum({Family::A, n - 1}, Isogeny::adjoint);
      res.expect_eq(m_of(from_cycle_type(ad, p)), m_typeA_closed(ct), "m closed formula " + ct.str());
    }
  for (const auto& t : detail::types_up_to_rank(8, true)) {
    const auto ad = build_datum(t, Isogeny::adjoint);
    for (unsigned p : {0u, 2u, 3u, 5u, 7u})
      res.expect_eq(tau(coxeter_element(ad), FieldChar(p)), center_order(t, FieldChar(p)),
                    t.name() + " tau(Coxeter) char " + std::to_string(p));
  }
  for (int n = 2; n <= 6; ++n)
    for (Family f : {Family::B, Family::C, Family::D}) {
      if (f == Family::D && n < 4) continue;
      for (Isogeny iso : {Isogeny::adjoint, Isogeny::simply_connected}) {
        const auto datum = build_datum({f, n}, iso);
        for (const auto& p : partitions(n)) {
          if (f == Family::D && p.size() % 2) continue;
          res.expect_eq(tau(from_negative_cycles(datum, p)), ipow(Integer(2), static_cast<unsigned>(p.size())),
                        datum->name() + " tau = 2^h");
        }
      }
    }
  return res;
}

inline SuiteResult verify_tables(bool heavy) {
  SuiteResult res{"tables", 0, {}};
  TableOptions opt;
  opt.subgroups = false;
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int r = f == Family::D ? 4 : 2; r <= 8; ++r) {
      const auto rep = build_table({f, r}, opt);
      const auto bad = compare_classical(rep);
      res.check(bad.empty(), bad.empty() ? "" : bad.front());
      for (std::size_t i = 1; i < bad.size(); ++i) res.failures.push_back(bad[i]);
    }
  std::vector<RootSystemType> exc{{Family::G, 2}, {Family::F, 4}, {Family::E, 6}};
  if (heavy) exc.push_back({Family::E, 7});
  TableOptions full;
  full.use_cache = false;
  for (const auto& t : exc) {
    const auto bad = compare_exceptional(build_table(t, full), exceptional_reference(t));
    res.check(bad.empty(), bad.empty() ? "" : bad.front());
    for (std::size_t i = 1; i < bad.size(); ++i) res.failures.push_back(bad[i]);
  }
  return res;
}

inline SuiteResult verify_oracle(int max_n = 4, std::uint64_t max_k = 12) {
  SuiteResult res{"oracle", 0, {}};
  for (int n = 2; n <= max_n; ++n) {
    const auto ad = build_datum({Family::A, n - 1}, Isogeny::adjoint);
    Permutation perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      const WeylElement w = pgl_element(ad, perm);
      for (std::uint64_t k = 1; k <= max_k; ++k) {
        const Integer theorem = count_components(w, k).num_components;
        try {
          const Integer brute = oracle_count_pgl(n, perm, k, oracle_modulus(w, k));
          res.expect_eq(theorem, brute, "PGL_" + std::to_string(n) + " w=" + format_word(w.word()) + " k=" + std::to_string(k));
        } catch (const OracleFailure& e) {
          res.check(false, e.what());
        }
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return res;
}

inline std::vector<std::string> suite_names() { return {"linalg", "weyl", "tits", "counts", "tables", "oracle"}; }

inline SuiteResult run_suite(const std::string& name, bool heavy) {
  if (name == "linalg") return verify_linalg();
  if (name == "weyl") return verify_weyl();
  if (name == "tits") return verify_tits();
  if (name == "counts") return verify_counts();
  if (name == "tables") return verify_tables(heavy);
  if (name == "oracle") return verify_oracle();
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace wtn
