#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "collapse.hpp"
#include "combinat.hpp"
#include "errors.hpp"
#include "mlq.hpp"
#include "parallel.hpp"
#include "poly.hpp"
#include "tableau.hpp"

namespace mlqkit {

struct MLQRecord {
  Composition type;
  Exponent content;
  int maj = 0;
};

// Generating functions of MLQ_lambda on n columns, whole and split by type
// and by strong type, with q kept and with q = 0 (nonwrapping members).
struct GenFunTable {
  GenFun P, schur;
  std::map<Composition, GenFun> by_type, atom_by_type;
  std::map<StrongComposition, GenFun> by_strtype, qschur_by_strtype;
};

// Theorem coefficients keyed by the expanded index, then the basis index.
using CoefficientTable = std::map<Composition, std::map<Composition, QPoly>>;

inline void require_columns(const Partition& lam, int n) {
  int need = static_cast<int>(lam.size());
  if (n < need) throw TooFewColumnsError("need at least " + std::to_string(need) + " columns, got " + std::to_string(n));
}

inline std::vector<MLQRecord> mlq_records(const Partition& lam, int n) {
  require_columns(lam, n);
  auto all = enumerate_mlq(lam, n);
  return parallel_map(all.size(), [&](std::size_t k) {
    LabelArray la = fm_label(all[k]);
    return MLQRecord{type_of(la), content_monomial(all[k]), maj_of(la)};
  });
}

inline GenFunTable build_genfun_table(const Partition& lam, int n) {
  GenFunTable t;
  t.P.n = t.schur.n = n;
  auto touch = [n](auto& map, const auto& key) -> GenFun& {
    auto it = map.find(key);
    if (it == map.end()) it = map.emplace(key, GenFun{n, {}}).first;
    return it->second;
  };
  for (const auto& r : mlq_records(lam, n)) {
    QPoly w = QPoly::monomial(r.maj);
    StrongComposition g = compress(r.type);
    t.P.add(r.content, w);
    touch(t.by_type, r.type).add(r.content, w);
    touch(t.by_strtype, g).add(r.content, w);
    if (r.maj == 0) {
      t.schur.add(r.content, w);
      touch(t.atom_by_type, r.type).add(r.content, w);
      touch(t.qschur_by_strtype, g).add(r.content, w);
    }
  }
  return t;
}

// The recording-tableau formula for the atom coefficients of every f_alpha
// with sort(alpha) = lam and length n: each Q in SSYT(mu', lam') and each
// beta rearranging mu contribute q^charge(Q) to K_{alpha,beta} where alpha
// is the type of uncollapse(M_beta, Q).
inline CoefficientTable build_atom_table(const Partition& lam, int n) {
  struct Job {
    Partition mu;
    Tableau q;
  };
  std::vector<Job> jobs;
  Partition lc = conjugate(lam);
  for (const auto& mu : partitions_of(total(lam)))
    if (static_cast<int>(mu.size()) <= n && dominates(lam, mu))
      for (auto& q : enumerate_ssyt(conjugate(mu), lc)) jobs.push_back({mu, std::move(q)});
  using Hit = std::pair<Composition, Composition>;
  auto hits = parallel_map(jobs.size(), [&](std::size_t k) {
    std::vector<Hit> out;
    for (const auto& beta : rearrangements(jobs[k].mu, n)) {
      MultilineQueue m = uncollapse({straight_mlq(beta), jobs[k].q});
      out.emplace_back(mlq_type(m), beta);
    }
    return out;
  });
  CoefficientTable table;
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    int c = charge(jobs[k].q);
    for (const auto& [alpha, beta] : hits[k]) table[alpha][beta].add_monomial(c);
  }
  return table;
}

// Same formula for the quasisymmetric coefficients: tau runs over strong
// rearrangements of mu, realized as M_tau padded to max(n, l(tau)) columns,
// and the recorded index is the strong type of the preimage.
inline CoefficientTable build_qschur_table(const Partition& lam, int n) {
  struct Job {
    Partition mu;
    Tableau q;
  };
  std::vector<Job> jobs;
  Partition lc = conjugate(lam);
  for (const auto& mu : partitions_of(total(lam)))
    if (dominates(lam, mu))
      for (auto& q : enumerate_ssyt(conjugate(mu), lc)) jobs.push_back({mu, std::move(q)});
  using Hit = std::pair<StrongComposition, StrongComposition>;
  auto hits = parallel_map(jobs.size(), [&](std::size_t k) {
    std::vector<Hit> out;
    const Partition& mu = jobs[k].mu;
    int len = static_cast<int>(mu.size());
    for (const auto& tau : rearrangements(mu, len)) {
      MultilineQueue m = uncollapse({straight_mlq(pad(tau, std::max(n, len))), jobs[k].q});
      out.emplace_back(mlq_strtype(m), tau);
    }
    return out;
  });
  CoefficientTable table;
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    int c = charge(jobs[k].q);
    for (const auto& [gamma, tau] : hits[k]) table[gamma][tau].add_monomial(c);
  }
  return table;
}

// Memo of the tables above. Values are computed outside the lock so nested
// parallel work never waits on it.
class SymCache {
 public:
  static SymCache& global() {
    static SymCache c;
    return c;
  }

  std::shared_ptr<const GenFunTable> genfuns(const Partition& lam, int n) {
    return lookup(genfuns_, {lam, n}, [&] { return build_genfun_table(lam, n); });
  }
  std::shared_ptr<const CoefficientTable> atoms(const Partition& lam, int n) {
    return lookup(atoms_, {lam, n}, [&] { return build_atom_table(lam, n); });
  }
  std::shared_ptr<const CoefficientTable> qschurs(const Partition& lam, int n) {
    return lookup(qschurs_, {lam, n}, [&] { return build_qschur_table(lam, n); });
  }
  void clear() {
    std::lock_guard<std::mutex> g(mu_);
    genfuns_.clear();
    atoms_.clear();
    qschurs_.clear();
  }

 private:
  using Key = std::pair<Partition, int>;
  template <class T, class Make>
  std::shared_ptr<const T> lookup(std::map<Key, std::shared_ptr<const T>>& slot, const Key& key, Make&& make) {
    {
      std::lock_guard<std::mutex> g(mu_);
      auto it = slot.find(key);
      if (it != slot.end()) return it->second;
    }
    auto value = std::make_shared<const T>(make());
    std::lock_guard<std::mutex> g(mu_);
    return slot.emplace(key, std::move(value)).first->second;
  }

  std::mutex mu_;
  std::map<Key, std::shared_ptr<const GenFunTable>> genfuns_;
  std::map<Key, std::shared_ptr<const CoefficientTable>> atoms_, qschurs_;
};

namespace detail {

inline GenFun lookup_or_zero(const std::map<Composition, GenFun>& m, const Composition& key, int n) {
  auto it = m.find(key);
  return it == m.end() ? GenFun{n, {}} : it->second;
}

inline void require_weak(const Composition& a) {
  if (!is_weak_composition(a)) throw ShapeError("composition " + to_string(a) + " has a negative part");
}

inline void require_strong(const StrongComposition& g) {
  if (!is_strong_composition(g)) throw ShapeError("strong composition " + to_string(g) + " has a nonpositive part");
}

inline void require_partition(const Partition& lam) {
  if (!is_partition(lam)) throw ShapeError(to_string(lam) + " is not a partition");
}

}  // namespace detail

inline GenFun genfun_P(const Partition& lam, int n) {
  detail::require_partition(lam);
  require_columns(lam, n);
  return SymCache::global().genfuns(lam, n)->P;
}

inline GenFun genfun_schur(const Partition& lam, int n) {
  detail::require_partition(lam);
  require_columns(lam, n);
  return SymCache::global().genfuns(lam, n)->schur;
}

// f_alpha uses as many variables as alpha has parts.
inline GenFun genfun_f(const Composition& alpha) {
  detail::require_weak(alpha);
  int n = static_cast<int>(alpha.size());
  return detail::lookup_or_zero(SymCache::global().genfuns(sort_parts(alpha), n)->by_type, alpha, n);
}

inline GenFun genfun_atom(const Composition& alpha) {
  detail::require_weak(alpha);
  int n = static_cast<int>(alpha.size());
  return detail::lookup_or_zero(SymCache::global().genfuns(sort_parts(alpha), n)->atom_by_type, alpha, n);
}

inline GenFun genfun_G(const StrongComposition& gamma, int n) {
  detail::require_strong(gamma);
  Partition lam = sort_parts(gamma);
  require_columns(lam, n);
  return detail::lookup_or_zero(SymCache::global().genfuns(lam, n)->by_strtype, gamma, n);
}

inline GenFun genfun_qschur(const StrongComposition& gamma, int n) {
  detail::require_strong(gamma);
  Partition lam = sort_parts(gamma);
  require_columns(lam, n);
  return detail::lookup_or_zero(SymCache::global().genfuns(lam, n)->qschur_by_strtype, gamma, n);
}

// K_{lam,mu}(q) as the charge generating function of SSYT(lam, mu).
inline QPoly kostka_foulkes(const Partition& lam, const Partition& mu) {
  detail::require_partition(lam);
  if (total(lam) != total(mu))
    throw SizeError("|" + to_string(lam) + "| differs from |" + to_string(mu) + "|");
  QPoly k;
  for (const auto& t : enumerate_ssyt(lam, mu)) k.add_monomial(charge(t));
  return k;
}

// K_{lam,mu}(q) read off the collapsing map: the q^maj generating function
// of the members of MLQ_{mu'} whose nonwrapping part is the straight queue
// of shape lam'.
inline QPoly kostka_by_preimage(const Partition& lam, const Partition& mu) {
  detail::require_partition(lam);
  detail::require_partition(mu);
  if (total(lam) != total(mu))
    throw SizeError("|" + to_string(lam) + "| differs from |" + to_string(mu) + "|");
  if (lam.empty()) return QPoly::one();
  int n = std::max(lam.front(), mu.front());
  MultilineQueue target = straight_mlq(pad(conjugate(lam), n));
  QPoly k;
  for_each_mlq(conjugate(mu), n, [&](const MultilineQueue& m) {
    if (collapse(m).nonwrap == target) k.add_monomial(maj(m));
  });
  return k;
}

enum class BasisKind { Schur, Atom, QSchur };

inline std::string basis_name(BasisKind b) {
  switch (b) {
    case BasisKind::Schur: return "schur";
    case BasisKind::Atom: return "atom";
    case BasisKind::QSchur: return "qschur";
  }
  return "";
}

struct Expansion {
  BasisKind kind = BasisKind::Schur;
  std::map<Composition, QPoly> coeffs;
};

// The basis element with the given index on n variables; zero when it needs
// more variables than n.
inline GenFun basis_element(BasisKind kind, const Composition& index, int n) {
  switch (kind) {
    case BasisKind::Schur:
      if (static_cast<int>(index.size()) > n) return GenFun{n, {}};
      return genfun_schur(index, n);
    case BasisKind::Atom:
      if (static_cast<int>(index.size()) != n) throw ShapeError("atom index length differs from n");
      return genfun_atom(index);
    case BasisKind::QSchur:
      if (static_cast<int>(index.size()) > n) return GenFun{n, {}};
      return genfun_qschur(index, n);
  }
  return GenFun{n, {}};
}

inline GenFun expansion_sum(const Expansion& e, int n) {
  GenFun g{n, {}};
  for (const auto& [index, c] : e.coeffs) g.add_scaled(basis_element(e.kind, index, n), c);
  return g;
}

// Coefficients of g in the given basis by peeling leading monomials. The
// leading monomial maximizes the sorted exponent, then the exponent itself,
// lexicographically; for each basis it is the index of exactly one element.
inline std::map<Composition, QPoly> eliminate(GenFun g, BasisKind kind) {
  std::map<Composition, QPoly> out;
  auto before = [](const Exponent& a, const Exponent& b) {
    Partition sa = sort_parts(a), sb = sort_parts(b);
    if (sa != sb) return sa < sb;
    return a < b;
  };
  while (!g.terms.empty()) {
    Exponent lead = g.terms.begin()->first;
    for (const auto& [e, c] : g.terms)
      if (before(lead, e)) lead = e;
    Composition index;
    switch (kind) {
      case BasisKind::Schur:
        if (!std::is_sorted(lead.begin(), lead.end(), std::greater<>()))
          throw TheoremViolationError("leading monomial " + to_string(lead) + " is not a partition");
        index = compress(lead);
        break;
      case BasisKind::Atom:
        index = lead;
        break;
      case BasisKind::QSchur:
        if (pad(compress(lead), g.n) != lead)
          throw TheoremViolationError("leading monomial " + to_string(lead) + " is not flush left");
        index = compress(lead);
        break;
    }
    if (out.count(index)) throw TheoremViolationError("basis index " + to_string(index) + " peeled twice");
    GenFun b = basis_element(kind, index, g.n);
    if (b.coeff(lead) != QPoly::one())
      throw TheoremViolationError("basis element " + to_string(index) + " lacks a unit leading term");
    QPoly c = g.coeff(lead);
    g.add_scaled(b, c, true);
    out[index] = c;
  }
  return out;
}

namespace detail {

inline void require_nonnegative(const std::map<Composition, QPoly>& coeffs, const std::string& what) {
  for (const auto& [index, c] : coeffs)
    if (!c.nonnegative()) throw TheoremViolationError(what + ": negative coefficient at " + to_string(index));
}

// The elimination coefficients must be the theorem coefficients whose basis
// elements survive on n variables.
inline void require_agreement(const std::map<Composition, QPoly>& theorem, const std::map<Composition, QPoly>& elim,
                              int n, const std::string& what) {
  std::map<Composition, QPoly> visible;
  for (const auto& [index, c] : theorem)
    if (static_cast<int>(compress(index).size()) <= n) visible.emplace(index, c);
  if (visible != elim) throw TheoremViolationError(what + ": theorem and elimination coefficients differ");
}

}  // namespace detail

// P_lam = sum over mu <= lam of K_{mu',lam'}(q) s_mu.
inline Expansion expand_in_schur(const Partition& lam, int n) {
  detail::require_partition(lam);
  require_columns(lam, n);
  Expansion e{BasisKind::Schur, {}};
  Partition lc = conjugate(lam);
  for (const auto& mu : partitions_of(total(lam)))
    if (dominates(lam, mu)) {
      QPoly k = kostka_foulkes(conjugate(mu), lc);
      if (!k.is_zero()) e.coeffs[mu] = k;
    }
  std::string what = "schur expansion of P" + to_string(lam);
  detail::require_nonnegative(e.coeffs, what);
  detail::require_agreement(e.coeffs, eliminate(genfun_P(lam, n), BasisKind::Schur), n, what);
  return e;
}

inline Expansion expand_in_atoms(const Composition& alpha) {
  detail::require_weak(alpha);
  int n = static_cast<int>(alpha.size());
  Partition lam = sort_parts(alpha);
  Expansion e{BasisKind::Atom, {}};
  auto table = SymCache::global().atoms(lam, n);
  if (auto it = table->find(alpha); it != table->end()) e.coeffs = it->second;
  std::string what = "atom expansion of f" + to_string(alpha);
  detail::require_nonnegative(e.coeffs, what);
  detail::require_agreement(e.coeffs, eliminate(genfun_f(alpha), BasisKind::Atom), n, what);
  return e;
}

// Coefficients are computed at n and n + 1 and must coincide.
inline Expansion expand_in_qschur(const StrongComposition& gamma, int n) {
  detail::require_strong(gamma);
  Partition lam = sort_parts(gamma);
  require_columns(lam, n);
  std::string what = "quasisymmetric Schur expansion of G" + to_string(gamma);
  auto coeffs_at = [&](int cols) {
    auto table = SymCache::global().qschurs(lam, cols);
    auto it = table->find(gamma);
    return it == table->end() ? std::map<Composition, QPoly>{} : it->second;
  };
  Expansion e{BasisKind::QSchur, coeffs_at(n)};
  if (coeffs_at(n + 1) != e.coeffs) throw TheoremViolationError(what + ": coefficients depend on n");
  detail::require_nonnegative(e.coeffs, what);
  for (int cols : {n, n + 1})
    detail::require_agreement(e.coeffs, eliminate(genfun_G(gamma, cols), BasisKind::QSchur), cols, what);
  return e;
}

}  // namespace mlqkit
