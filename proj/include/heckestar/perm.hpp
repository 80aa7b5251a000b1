#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace heckestar {

/// Permutations of [n] in one-line notation, 1-based.
///
/// Product convention (global, inherited by every other module):
///   compose(u, v)(i) = v(u(i)),  i.e. apply u first, then v.
/// This is the unique convention under which minimal right-coset
/// representatives of Young subgroups are concatenations of increasing
/// subwords and path-family types compose star by star.
class Perm {
 public:
  explicit Perm(std::vector<int> word) : word_(std::move(word)) {
    std::vector<bool> seen(word_.size(), false);
    for (int v : word_) {
      if (v < 1 || v > static_cast<int>(word_.size()) || seen[v - 1])
        throw std::invalid_argument("not a permutation word");
      seen[v - 1] = true;
    }
  }

  static Perm identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Perm(std::move(w));
  }

  /// The adjacent transposition s_i swapping values i and i+1.
  static Perm transposition(int n, int i) {
    Perm p = identity(n);
    std::swap(p.word_[i - 1], p.word_[i]);
    return p;
  }

  int size() const { return static_cast<int>(word_.size()); }

  /// Image of i, 1-based.
  int operator()(int i) const { return word_[i - 1]; }

  const std::vector<int>& word() const { return word_; }

  bool is_identity() const {
    for (int i = 1; i <= size(); ++i)
      if (word_[i - 1] != i) return false;
    return true;
  }

  Perm inverse() const {
    std::vector<int> w(word_.size());
    for (int i = 1; i <= size(); ++i) w[word_[i - 1] - 1] = i;
    return Perm(std::move(w));
  }

  /// Coxeter length = inversion count of the one-line word.
  int length() const {
    int inv = 0;
    for (int i = 0; i < size(); ++i)
      for (int j = i + 1; j < size(); ++j)
        if (word_[i] > word_[j]) ++inv;
    return inv;
  }

  friend bool operator==(const Perm& a, const Perm& b) {
    return a.word_ == b.word_;
  }
  friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
  friend bool operator<(const Perm& a, const Perm& b) {
    return a.word_ < b.word_;
  }

  /// Digit string for n <= 9, comma-separated otherwise.
  std::string to_string() const {
    std::string s;
    for (int i = 0; i < size(); ++i) {
      if (size() > 9 && i > 0) s += ',';
      s += std::to_string(word_[i]);
    }
    return s;
  }

  nlohmann::json to_json() const { return nlohmann::json(word_); }

 private:
  std::vector<int> word_;
};

/// compose(u, v)(i) = v(u(i)): apply u first, then v.
inline Perm compose(const Perm& u, const Perm& v) {
  if (u.size() != v.size()) throw std::invalid_argument("size mismatch");
  std::vector<int> w(u.size());
  for (int i = 1; i <= u.size(); ++i) w[i - 1] = v(u(i));
  return Perm(std::move(w));
}

/// Bruhat order via the sorted-prefix dominance test.
inline bool bruhat_leq(const Perm& v, const Perm& w) {
  if (v.size() != w.size()) throw std::invalid_argument("size mismatch");
  const int n = v.size();
  std::vector<int> pv, pw;
  pv.reserve(n);
  pw.reserve(n);
  for (int i = 0; i < n; ++i) {
    pv.insert(std::upper_bound(pv.begin(), pv.end(), v.word()[i]), v.word()[i]);
    pw.insert(std::upper_bound(pw.begin(), pw.end(), w.word()[i]), w.word()[i]);
    for (int k = 0; k <= i; ++k)
      if (pv[k] > pw[k]) return false;
  }
  return true;
}

/// A subinterval [a,b] of [n], 1 <= a <= b <= n.
struct Interval {
  int a;
  int b;
  int n;

  Interval(int a_, int b_, int n_) : a(a_), b(b_), n(n_) {
    if (!(1 <= a && a <= b && b <= n))
      throw std::invalid_argument("invalid interval");
  }

  int size() const { return b - a + 1; }
  bool contains(int h) const { return a <= h && h <= b; }
  /// True iff the star on this window has an interior vertex.
  bool has_center() const { return a < b; }

  friend bool operator==(const Interval& x, const Interval& y) {
    return x.a == y.a && x.b == y.b && x.n == y.n;
  }
};

/// The interval subgroup S_[a,b]: all permutations fixing [n] \ [a,b],
/// in lexicographic order of the window word.
inline std::vector<Perm> interval_subgroup(const Interval& J) {
  std::vector<int> window(J.size());
  std::iota(window.begin(), window.end(), J.a);
  std::vector<Perm> out;
  do {
    std::vector<int> w(J.n);
    std::iota(w.begin(), w.end(), 1);
    for (int t = 0; t < J.size(); ++t) w[J.a - 1 + t] = window[t];
    out.push_back(Perm(std::move(w)));
  } while (std::next_permutation(window.begin(), window.end()));
  return out;
}

/// The reversal s_[a,b]: longest element of S_[a,b].
inline Perm reversal(const Interval& J) {
  std::vector<int> w(J.n);
  std::iota(w.begin(), w.end(), 1);
  std::reverse(w.begin() + (J.a - 1), w.begin() + J.b);
  return Perm(std::move(w));
}

/// Unique factorization w = w_minus * w_star with w_star in S_J and w_minus
/// the minimal representative of the left coset w S_J (its word carries the
/// values a..b in increasing order).  Lengths are additive.
inline std::pair<Perm, Perm> left_coset_factor(const Perm& w,
                                               const Interval& J) {
  if (w.size() != J.n) throw std::invalid_argument("size mismatch");
  std::vector<int> word = w.word();
  std::vector<int> positions;
  for (int i = 0; i < J.n; ++i)
    if (J.contains(word[i])) positions.push_back(i);
  for (std::size_t t = 0; t < positions.size(); ++t)
    word[positions[t]] = J.a + static_cast<int>(t);
  Perm w_minus{std::move(word)};
  Perm w_star = compose(w_minus.inverse(), w);
  return {w_minus, w_star};
}

/// Integer partition of n (weakly decreasing positive parts).
class Partition {
 public:
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("empty partition");
    int sum = 0;
    for (std::size_t k = 0; k < parts_.size(); ++k) {
      if (parts_[k] <= 0 || (k > 0 && parts_[k] > parts_[k - 1]))
        throw std::invalid_argument("parts must be weakly decreasing and positive");
      sum += parts_[k];
    }
    n_ = sum;
  }

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  int rows() const { return static_cast<int>(parts_.size()); }

  /// Offset of block k (0-based): positions block_start(k)+1 .. block_end(k).
  int block_start(int k) const {
    int s = 0;
    for (int t = 0; t < k; ++t) s += parts_[t];
    return s;
  }
  int block_end(int k) const { return block_start(k) + parts_[k]; }

  /// Index of the block containing 1-based position j.
  int block_of(int j) const {
    int s = 0;
    for (int k = 0; k < rows(); ++k) {
      s += parts_[k];
      if (j <= s) return k;
    }
    throw std::out_of_range("position outside partition");
  }

  Partition transpose() const {
    std::vector<int> tr;
    for (int c = 1; c <= parts_[0]; ++c) {
      int h = 0;
      for (int p : parts_)
        if (p >= c) ++h;
      tr.push_back(h);
    }
    return Partition(std::move(tr));
  }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t k = 0; k < parts_.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(parts_[k]);
    }
    return s;
  }

 private:
  std::vector<int> parts_;
  int n_;
};

/// Ordered set partition I = (I_1,...,I_r) of [n]; blocks stored sorted.
struct OrderedSetPartition {
  std::vector<std::vector<int>> blocks;
};

/// The minimal right-coset representative u(I): its k-th subword is the
/// increasing rearrangement of I_k.
inline Perm min_rep(const OrderedSetPartition& I) {
  std::vector<int> w;
  for (auto& blk : I.blocks) w.insert(w.end(), blk.begin(), blk.end());
  return Perm(std::move(w));
}

namespace detail {

inline void osp_rec(const Partition& lambda, int k, std::vector<int>& avail,
                    OrderedSetPartition& cur,
                    std::vector<OrderedSetPartition>& out) {
  if (k == lambda.rows()) {
    out.push_back(cur);
    return;
  }
  const int sz = lambda.parts()[k];
  std::vector<int> idx(sz);
  // choose sz elements of avail, indices increasing -> lexicographic blocks
  std::function<void(int, int)> choose = [&](int start, int chosen) {
    if (chosen == sz) {
      std::vector<int> blk, rest;
      std::vector<bool> take(avail.size(), false);
      for (int t = 0; t < sz; ++t) take[idx[t]] = true;
      for (std::size_t t = 0; t < avail.size(); ++t)
        (take[t] ? blk : rest).push_back(avail[t]);
      cur.blocks.push_back(blk);
      std::vector<int> saved = avail;
      avail = rest;
      osp_rec(lambda, k + 1, avail, cur, out);
      avail = saved;
      cur.blocks.pop_back();
      return;
    }
    for (int i = start; i < static_cast<int>(avail.size()); ++i) {
      idx[chosen] = i;
      choose(i + 1, chosen + 1);
    }
  };
  choose(0, 0);
}

}  // namespace detail

/// All ordered set partitions of [n] of type lambda (n = |lambda|).
inline std::vector<OrderedSetPartition> ordered_set_partitions(
    const Partition& lambda) {
  std::vector<int> avail(lambda.n());
  std::iota(avail.begin(), avail.end(), 1);
  std::vector<OrderedSetPartition> out;
  OrderedSetPartition cur;
  detail::osp_rec(lambda, 0, avail, cur, out);
  return out;
}

/// Minimal representatives of right cosets S_lambda u: the permutations
/// whose consecutive blocks of lengths lambda_1,...,lambda_r are increasing.
inline std::vector<Perm> young_min_reps(const Partition& lambda) {
  std::vector<Perm> out;
  for (auto& I : ordered_set_partitions(lambda)) out.push_back(min_rep(I));
  return out;
}

/// Elements of the Young subgroup S_lambda (block-interval permutations).
inline std::vector<Perm> young_subgroup(const Partition& lambda) {
  const int n = lambda.n();
  std::vector<Perm> out{Perm::identity(n)};
  int off = 0;
  for (int p : lambda.parts()) {
    Interval blk(off + 1, off + p, n);
    std::vector<Perm> next;
    for (const Perm& w : out)
      for (const Perm& z : interval_subgroup(blk)) next.push_back(compose(w, z));
    out = std::move(next);
    off += p;
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Unique factorization w = w_circ * w_min with w_circ in S_lambda and
/// w_min in the minimal representatives; lengths are additive.
inline std::pair<Perm, Perm> young_factor(const Perm& w,
                                          const Partition& lambda) {
  if (w.size() != lambda.n()) throw std::invalid_argument("size mismatch");
  std::vector<int> word = w.word();
  int off = 0;
  for (int p : lambda.parts()) {
    std::sort(word.begin() + off, word.begin() + off + p);
    off += p;
  }
  Perm w_min{std::move(word)};
  Perm w_circ = compose(w, w_min.inverse());
  return {w_circ, w_min};
}

/// True iff the one-line word has no subsequence matching 3412 or 4231.
inline bool avoids_3412_4231(const Perm& w) {
  const auto& v = w.word();
  const int n = w.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          const int a = v[i], b = v[j], c = v[k], d = v[l];
          if (c < d && d < a && a < b) return false;  // 3412
          if (d < b && b < c && c < a) return false;  // 4231
        }
  return true;
}

/// All of S_n in lexicographic order.
inline std::vector<Perm> all_perms(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(Perm(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

/// All partitions of n, largest-first lexicographic order.
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.push_back(Partition(cur));
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

}  // namespace heckestar
