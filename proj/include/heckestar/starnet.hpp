#pragma once

#include <array>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "heckestar/hecke.hpp"
#include "heckestar/perm.hpp"

namespace heckestar {

struct NotIntersectingError : std::domain_error {
  explicit NotIntersectingError(const std::string& m) : std::domain_error(m) {}
};

/// A star network: the left-to-right concatenation of simple star networks
/// G_{J_1}, ..., G_{J_m}.  A simple star funnels the wires of its window
/// through one interior vertex; windows of size one have no interior vertex.
struct StarNetwork {
  int n;
  std::vector<Interval> intervals;

  StarNetwork(int n_, std::vector<Interval> js) : n(n_), intervals(std::move(js)) {
    for (const Interval& J : intervals)
      if (J.n != n) throw std::invalid_argument("interval ambient size mismatch");
  }

  int stars() const { return static_cast<int>(intervals.size()); }
};

/// A covering path family, represented by one window permutation per star:
/// locals[p][h - a_p] is the wire on which the path entering star p+1 on
/// wire h leaves it.  Trajectories are derived (and cached) from these.
class PathFamily {
 public:
  PathFamily(StarNetwork net, std::vector<std::vector<int>> locals)
      : net_(std::move(net)), locals_(std::move(locals)) {
    if (static_cast<int>(locals_.size()) != net_.stars())
      throw std::invalid_argument("one local permutation per star required");
    for (int p = 0; p < net_.stars(); ++p) {
      const Interval& J = net_.intervals[p];
      if (static_cast<int>(locals_[p].size()) != J.size())
        throw std::invalid_argument("local window size mismatch");
      std::vector<bool> seen(J.size(), false);
      for (int img : locals_[p]) {
        if (!J.contains(img) || seen[img - J.a])
          throw std::invalid_argument("local is not a window permutation");
        seen[img - J.a] = true;
      }
    }
    rebuild_trajectories();
  }

  const StarNetwork& network() const { return net_; }
  const std::vector<std::vector<int>>& locals() const { return locals_; }

  /// Wire of the path from source i after star p (p = 0 gives the source).
  int wire_after(int source, int p) const { return traj_[p][source - 1]; }

  Perm type() const { return Perm(traj_.back()); }

  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (auto& loc : locals_) arr.push_back(loc);
    return nlohmann::json{{"locals", arr}};
  }

 private:
  void rebuild_trajectories() {
    traj_.assign(net_.stars() + 1, std::vector<int>(net_.n));
    std::iota(traj_[0].begin(), traj_[0].end(), 1);
    for (int p = 0; p < net_.stars(); ++p) {
      const Interval& J = net_.intervals[p];
      for (int i = 0; i < net_.n; ++i) {
        int h = traj_[p][i];
        traj_[p + 1][i] = J.contains(h) ? locals_[p][h - J.a] : h;
      }
    }
  }

  StarNetwork net_;
  std::vector<std::vector<int>> locals_;
  std::vector<std::vector<int>> traj_;
};

/// One meeting of two paths at the interior vertex of a star.  i < j are
/// source indices; star is 1-based.  "lower" is the source of the path that
/// enters and leaves below the other (meaningful for noncrossings).
struct IntersectionTriple {
  int i;
  int j;
  int star;
  bool crossing;
  int lower;
  int prior_crossings;
  bool defective;
};

/// All intersection triples of a family, stars in order, pairs (i,j) with
/// i < j.  prior_crossings counts crossings of the same pair at stars
/// 1..p-1; a triple is defective when that count is odd.
inline std::vector<IntersectionTriple> intersections(const PathFamily& pf) {
  const StarNetwork& g = pf.network();
  std::vector<IntersectionTriple> out;
  std::vector<std::vector<int>> crossed(g.n + 1, std::vector<int>(g.n + 1, 0));
  for (int p = 1; p <= g.stars(); ++p) {
    const Interval& J = g.intervals[p - 1];
    if (!J.has_center()) continue;
    for (int i = 1; i <= g.n; ++i) {
      if (!J.contains(pf.wire_after(i, p - 1))) continue;
      for (int j = i + 1; j <= g.n; ++j) {
        if (!J.contains(pf.wire_after(j, p - 1))) continue;
        const int ei = pf.wire_after(i, p - 1), ej = pf.wire_after(j, p - 1);
        const int li = pf.wire_after(i, p), lj = pf.wire_after(j, p);
        IntersectionTriple t;
        t.i = i;
        t.j = j;
        t.star = p;
        t.crossing = (ei < ej) != (li < lj);
        t.lower = (ei < ej) ? i : j;
        t.prior_crossings = crossed[i][j];
        t.defective = (t.prior_crossings % 2 == 1);
        out.push_back(t);
        if (t.crossing) ++crossed[i][j];
      }
    }
  }
  return out;
}

inline int cross_stat(const PathFamily& pf) {
  int c = 0;
  for (const auto& t : intersections(pf)) c += t.crossing ? 1 : 0;
  return c;
}

inline int dfct_stat(const PathFamily& pf) {
  int d = 0;
  for (const auto& t : intersections(pf)) d += t.defective ? 1 : 0;
  return d;
}

/// Number of paths that enter star p strictly between the paths from
/// sources i and j and leave strictly between them (the quantity b of the
/// swap lemmas).  Both paths must meet at that star's interior vertex.
inline int pair_between_count(const PathFamily& pf, int i, int j, int p) {
  const StarNetwork& g = pf.network();
  if (p < 1 || p > g.stars()) throw std::out_of_range("star index out of range");
  const Interval& J = g.intervals[p - 1];
  const int ei = pf.wire_after(i, p - 1), ej = pf.wire_after(j, p - 1);
  if (!J.has_center() || !J.contains(ei) || !J.contains(ej))
    throw NotIntersectingError("paths do not meet at this star's interior vertex");
  const int li = pf.wire_after(i, p), lj = pf.wire_after(j, p);
  const int elo = std::min(ei, ej), ehi = std::max(ei, ej);
  const int llo = std::min(li, lj), lhi = std::max(li, lj);
  int b = 0;
  for (int c = 1; c <= g.n; ++c) {
    if (c == i || c == j) continue;
    const int ec = pf.wire_after(c, p - 1), lc = pf.wire_after(c, p);
    if (elo < ec && ec < ehi && llo < lc && lc < lhi) ++b;
  }
  return b;
}

/// Enumerates every covering family once: locals iterated lexicographically
/// per star, odometer order across stars (last star fastest).
inline void for_each_covering_family(
    const StarNetwork& g, const std::function<void(const PathFamily&)>& fn) {
  std::vector<std::vector<int>> locals(g.stars());
  std::function<void(int)> rec = [&](int p) {
    if (p == g.stars()) {
      fn(PathFamily(g, locals));
      return;
    }
    const Interval& J = g.intervals[p];
    std::vector<int> window(J.size());
    std::iota(window.begin(), window.end(), J.a);
    do {
      locals[p] = window;
      rec(p + 1);
    } while (std::next_permutation(window.begin(), window.end()));
  };
  rec(0);
}

inline std::vector<PathFamily> covering_families(const StarNetwork& g) {
  std::vector<PathFamily> out;
  for_each_covering_family(g, [&](const PathFamily& pf) { out.push_back(pf); });
  return out;
}

/// Lean enumeration for bulk identities: visits every covering family and
/// reports its type word, cross and dfct, without materializing PathFamily
/// objects.  State (wire positions, pair crossing parities) is maintained
/// incrementally star by star.
inline void scan_covering_families(
    const StarNetwork& g,
    const std::function<void(const std::vector<int>& type_word, int cross,
                             int dfct)>& fn) {
  const int n = g.n;
  std::vector<int> pos(n + 1);      // wire of each source
  std::vector<int> src_at(n + 1);   // source on each wire
  std::iota(pos.begin(), pos.end(), 0);
  std::iota(src_at.begin(), src_at.end(), 0);
  std::vector<std::vector<std::uint8_t>> parity(n + 1,
                                                std::vector<std::uint8_t>(n + 1, 0));
  std::vector<int> type_word(n);

  std::function<void(int, int, int)> rec = [&](int p, int cross, int dfct) {
    if (p == g.stars()) {
      for (int i = 1; i <= n; ++i) type_word[i - 1] = pos[i];
      fn(type_word, cross, dfct);
      return;
    }
    const Interval& J = g.intervals[p];
    const int k = J.size();
    std::vector<int> window(k);
    std::iota(window.begin(), window.end(), J.a);
    std::vector<int> entrants(k);  // sources entering on wires a..b
    do {
      // window[t] = exit wire of the path entering on wire a+t
      int dc = 0, dd = 0;
      for (int t = 0; t < k; ++t) entrants[t] = src_at[J.a + t];
      if (J.has_center()) {
        for (int t = 0; t < k; ++t)
          for (int s = t + 1; s < k; ++s) {
            const int i = std::min(entrants[t], entrants[s]);
            const int j = std::max(entrants[t], entrants[s]);
            const bool crossing = window[t] > window[s];
            if (parity[i][j]) ++dd;
            if (crossing) {
              ++dc;
              parity[i][j] ^= 1;
            }
          }
      }
      for (int t = 0; t < k; ++t) {
        pos[entrants[t]] = window[t];
        src_at[window[t]] = entrants[t];
      }
      rec(p + 1, cross + dc, dfct + dd);
      for (int t = 0; t < k; ++t) {
        pos[entrants[t]] = J.a + t;
        src_at[J.a + t] = entrants[t];
      }
      if (J.has_center()) {
        for (int t = 0; t < k; ++t)
          for (int s = t + 1; s < k; ++s)
            if (window[t] > window[s]) {
              const int i = std::min(entrants[t], entrants[s]);
              const int j = std::max(entrants[t], entrants[s]);
              parity[i][j] ^= 1;
            }
      }
    } while (std::next_permutation(window.begin(), window.end()));
  };
  rec(0, 0, 0);
}

/// The generalized Deodhar expansion: sum over covering families of
/// q^{dfct} T_{type}.  Equals product_of_reversals on the same intervals.
inline HeckeElt defect_expansion(const StarNetwork& g) {
  HeckeElt out(g.n);
  scan_covering_families(g, [&](const std::vector<int>& type_word, int, int dfct) {
    out.add_monomial(Perm(type_word), 2 * dfct, 1);
  });
  return out;
}

inline HeckeElt product_of_reversals(const StarNetwork& g) {
  return product_of_reversals(g.n, g.intervals);
}

inline bool verify_kl_factorization(const Perm& w, const LaurentPoly& g,
                                    const StarNetwork& net) {
  return verify_kl_factorization(w, g, net.intervals);
}

}  // namespace heckestar
