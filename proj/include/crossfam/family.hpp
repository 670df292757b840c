#pragma once

// Ground-set subsets, k-subset enumeration and exact binomials.
//
// Elements are 1-based labels drawn from [n] = {1, ..., n}. A Subset stores
// an indicator bitset of ceil(n/64) words, so intersection sizes cost one
// AND + popcount per word. Families are kept in lexicographic order of their
// sorted member lists.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace crossfam {

using BigCount = boost::multiprecision::cpp_int;

/// Thrown for precondition and validation failures of any public operation.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw InvalidArgument(what);
}

/// Exact C(n, r); zero when r > n or either argument is negative.
inline BigCount binomial(std::int64_t n, std::int64_t r) {
  if (n < 0 || r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  BigCount acc = 1;
  for (std::int64_t i = 1; i <= r; ++i) {
    acc *= n - r + i;
    acc /= i;  // exact: acc is C(n - r + i, i) after this step
  }
  return acc;
}

/// Power with a nonnegative exponent.
inline BigCount ipow(std::int64_t base, std::int64_t exp) {
  require(exp >= 0, "ipow: negative exponent");
  BigCount out = 1;
  BigCount b = base;
  while (exp > 0) {
    if (exp & 1) out *= b;
    b *= b;
    exp >>= 1;
  }
  return out;
}

/// Parameters (n, k, t, s) shared by a family pair.
struct Params {
  int n = 0;
  int k = 0;
  int t = 0;
  int s = 0;

  // s = 0 is accepted so the plain cross-t-intersecting case can be expressed.
  void validate() const {
    require(n >= 1, "params: n must be positive");
    require(t >= 1 && t <= k && k <= n, "params: need 1 <= t <= k <= n");
    require(s >= 0, "params: s must be nonnegative");
  }

  friend bool operator==(const Params&, const Params&) = default;
};

namespace detail {

inline int words_for(int universe) { return (universe + 63) / 64; }

inline int and_popcount(const std::uint64_t* a, const std::uint64_t* b, int words) {
  int c = 0;
  for (int w = 0; w < words; ++w) c += std::popcount(a[w] & b[w]);
  return c;
}

}  // namespace detail

/// A subset of [n], stored as a fixed-width indicator bitset.
class Subset {
 public:
  using Words = boost::container::small_vector<std::uint64_t, 2>;

  Subset() = default;

  /// The empty subset of [universe].
  explicit Subset(int universe) : universe_(universe), bits_(detail::words_for(universe), 0) {
    require(universe >= 0, "subset: negative universe");
  }

  Subset(int universe, std::initializer_list<int> elems) : Subset(universe) {
    for (int e : elems) insert(e);
  }

  static Subset from_elements(int universe, std::span<const int> elems) {
    Subset out(universe);
    for (int e : elems) out.insert(e);
    return out;
  }

  /// The set {first, ..., last} (empty when last < first).
  static Subset range(int universe, int first, int last) {
    Subset out(universe);
    for (int e = first; e <= last; ++e) out.insert(e);
    return out;
  }

  static Subset full(int universe) { return range(universe, 1, universe); }

  int universe() const { return universe_; }

  int size() const {
    int c = 0;
    for (auto w : bits_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
  }

  bool contains(int e) const {
    if (e < 1 || e > universe_) return false;
    const int i = e - 1;
    return (bits_[i / 64] >> (i % 64)) & 1u;
  }

  void insert(int e) {
    require(e >= 1 && e <= universe_,
            "subset: element " + std::to_string(e) + " outside [1, " + std::to_string(universe_) + "]");
    const int i = e - 1;
    bits_[i / 64] |= std::uint64_t{1} << (i % 64);
  }

  void erase(int e) {
    if (e < 1 || e > universe_) return;
    const int i = e - 1;
    bits_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
  }

  /// Sorted element list.
  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (int w = 0; w < static_cast<int>(bits_.size()); ++w) {
      std::uint64_t word = bits_[w];
      while (word) {
        out.push_back(w * 64 + std::countr_zero(word) + 1);
        word &= word - 1;
      }
    }
    return out;
  }

  /// Smallest element, or 0 when empty.
  int min_element() const {
    for (int w = 0; w < static_cast<int>(bits_.size()); ++w)
      if (bits_[w]) return w * 64 + std::countr_zero(bits_[w]) + 1;
    return 0;
  }

  /// Largest element, or 0 when empty.
  int max_element() const {
    for (int w = static_cast<int>(bits_.size()) - 1; w >= 0; --w)
      if (bits_[w]) return w * 64 + 63 - std::countl_zero(bits_[w]) + 1;
    return 0;
  }

  std::span<const std::uint64_t> words() const { return {bits_.data(), bits_.size()}; }
  const std::uint64_t* data() const { return bits_.data(); }
  int word_count() const { return static_cast<int>(bits_.size()); }

  bool is_subset_of(const Subset& other) const {
    same_universe(other);
    for (std::size_t w = 0; w < bits_.size(); ++w)
      if (bits_[w] & ~other.bits_[w]) return false;
    return true;
  }

  Subset operator|(const Subset& o) const { return combine(o, [](auto a, auto b) { return a | b; }); }
  Subset operator&(const Subset& o) const { return combine(o, [](auto a, auto b) { return a & b; }); }
  Subset operator-(const Subset& o) const { return combine(o, [](auto a, auto b) { return a & ~b; }); }

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.universe_ == b.universe_ && std::equal(a.bits_.begin(), a.bits_.end(), b.bits_.begin(), b.bits_.end());
  }

  // Lexicographic order of the sorted element lists (a proper prefix sorts
  // first). For equal-size sets this is the usual lex order of k-subsets.
  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b) {
    if (a.universe_ != b.universe_) return a.universe_ <=> b.universe_;
    const int words = static_cast<int>(a.bits_.size());
    for (int w = 0; w < words; ++w) {
      const std::uint64_t diff = a.bits_[w] ^ b.bits_[w];
      if (!diff) continue;
      const int bit = std::countr_zero(diff);
      const bool in_a = (a.bits_[w] >> bit) & 1u;
      // The set holding `bit` is smaller, unless the other set has run out of
      // elements there (then the other set is a prefix).
      const Subset& other = in_a ? b : a;
      const bool holder_first = other.has_element_above(w, bit);
      if (holder_first == in_a) return std::strong_ordering::less;
      return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int e : elements()) {
      if (!first) out += ",";
      out += std::to_string(e);
      first = false;
    }
    return out + "}";
  }

 private:
  void same_universe(const Subset& o) const {
    require(universe_ == o.universe_, "subset: mismatched universes " + std::to_string(universe_) +
                                          " and " + std::to_string(o.universe_));
  }

  bool has_element_above(int w, int bit) const {
    const std::uint64_t mask = bit == 63 ? 0 : (~std::uint64_t{0} << (bit + 1));
    if (bits_[w] & mask) return true;
    for (std::size_t v = w + 1; v < bits_.size(); ++v)
      if (bits_[v]) return true;
    return false;
  }

  template <class Op>
  Subset combine(const Subset& o, Op op) const {
    same_universe(o);
    Subset out(universe_);
    for (std::size_t w = 0; w < bits_.size(); ++w) out.bits_[w] = op(bits_[w], o.bits_[w]);
    return out;
  }

  int universe_ = 0;
  Words bits_;
};

/// |a ∩ b|. Both subsets must live over the same universe.
inline int intersection_size(const Subset& a, const Subset& b) {
  require(a.universe() == b.universe(), "intersection_size: mismatched universes");
  return detail::and_popcount(a.data(), b.data(), a.word_count());
}

/// Lexicographic stream of the k-subsets of [n].
class KSubsets {
 public:
  KSubsets(int n, int k) : n_(n), k_(k) {
    require(n >= 0 && k >= 0, "enumerate_k_subsets: negative argument");
    require(k <= n, "enumerate_k_subsets: k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
  }

  class iterator {
   public:
    using value_type = Subset;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    iterator(int n, int k) : n_(n), combo_(k), current_(n) {
      for (int i = 0; i < k; ++i) combo_[i] = i + 1;
      for (int e : combo_) current_.insert(e);
    }

    const Subset& operator*() const { return current_; }
    const Subset* operator->() const { return &current_; }
    const std::vector<int>& combination() const { return combo_; }

    iterator& operator++() {
      const int k = static_cast<int>(combo_.size());
      int i = k - 1;
      while (i >= 0 && combo_[i] == n_ - k + i + 1) --i;
      if (i < 0) {
        done_ = true;
        return *this;
      }
      ++combo_[i];
      for (int j = i + 1; j < k; ++j) combo_[j] = combo_[j - 1] + 1;
      current_ = Subset(n_);
      for (int e : combo_) current_.insert(e);
      return *this;
    }
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

   private:
    int n_ = 0;
    std::vector<int> combo_;
    Subset current_;
    bool done_ = false;
  };

  iterator begin() const { return iterator(n_, k_); }
  std::default_sentinel_t end() const { return {}; }

 private:
  int n_;
  int k_;
};

/// All k-subsets of [n] in lexicographic order.
inline KSubsets enumerate_k_subsets(int n, int k) { return KSubsets(n, k); }

inline std::vector<Subset> all_k_subsets(int n, int k) {
  std::vector<Subset> out;
  for (const auto& s : enumerate_k_subsets(n, k)) out.push_back(s);
  return out;
}

/// k-subsets of an arbitrary ground set `pool`, lexicographic, as unions with `base`.
inline std::vector<Subset> extensions(const Subset& base, const Subset& pool, int extra) {
  std::vector<Subset> out;
  const auto elems = pool.elements();
  const int m = static_cast<int>(elems.size());
  if (extra < 0 || extra > m) return out;
  for (const auto& pick : enumerate_k_subsets(m, extra)) {
    Subset s = base;
    for (int idx : pick.elements()) s.insert(elems[idx - 1]);
    out.push_back(std::move(s));
  }
  return out;
}

/// Ordered, duplicate-free collection of k-subsets of [n].
class SetFamily {
 public:
  SetFamily() = default;
  SetFamily(int n, int k) : n_(n), k_(k) {
    require(n >= 0 && k >= 0 && k <= n, "family: need 0 <= k <= n");
  }

  /// Sorts `sets`; rejects wrong universes, wrong sizes and duplicates.
  SetFamily(int n, int k, std::vector<Subset> sets) : SetFamily(n, k) {
    for (const auto& s : sets) {
      require(s.universe() == n, "family: member " + s.to_string() + " lives over the wrong universe");
      require(s.size() == k, "family: member " + s.to_string() + " has size " + std::to_string(s.size()) +
                                 ", expected " + std::to_string(k));
    }
    std::sort(sets.begin(), sets.end());
    auto dup = std::adjacent_find(sets.begin(), sets.end());
    require(dup == sets.end(), dup == sets.end() ? "" : "family: duplicate member " + dup->to_string());
    sets_ = std::move(sets);
  }

  /// Builds from explicit element lists; lists must be strictly increasing.
  static SetFamily from_lists(int n, int k, const std::vector<std::vector<int>>& lists) {
    std::vector<Subset> sets;
    sets.reserve(lists.size());
    for (const auto& l : lists) {
      require(std::adjacent_find(l.begin(), l.end(), std::greater_equal<>()) == l.end(),
              "family: member list is not strictly increasing");
      sets.push_back(Subset::from_elements(n, l));
    }
    return SetFamily(n, k, std::move(sets));
  }

  /// The complete family C([n], k).
  static SetFamily complete(int n, int k) { return SetFamily(n, k, all_k_subsets(n, k)); }

  int n() const { return n_; }
  int k() const { return k_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  const std::vector<Subset>& members() const { return sets_; }
  const Subset& operator[](std::size_t i) const { return sets_[i]; }
  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }

  bool contains(const Subset& s) const { return std::binary_search(sets_.begin(), sets_.end(), s); }

  /// Inserts keeping order; returns false if already present.
  bool insert(const Subset& s) {
    require(s.universe() == n_ && s.size() == k_, "family: inserted member has the wrong shape");
    auto it = std::lower_bound(sets_.begin(), sets_.end(), s);
    if (it != sets_.end() && *it == s) return false;
    sets_.insert(it, s);
    return true;
  }

  /// Members not in `other` (same n, k).
  SetFamily minus(const SetFamily& other) const {
    SetFamily out(n_, k_);
    std::set_difference(sets_.begin(), sets_.end(), other.sets_.begin(), other.sets_.end(),
                        std::back_inserter(out.sets_));
    return out;
  }

  SetFamily unite(const SetFamily& other) const {
    require(n_ == other.n_ && k_ == other.k_, "family: union of differently shaped families");
    SetFamily out(n_, k_);
    std::set_union(sets_.begin(), sets_.end(), other.sets_.begin(), other.sets_.end(),
                   std::back_inserter(out.sets_));
    return out;
  }

  friend bool operator==(const SetFamily& a, const SetFamily& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.sets_ == b.sets_;
  }

  friend std::strong_ordering operator<=>(const SetFamily& a, const SetFamily& b) {
    return std::lexicographical_compare_three_way(a.sets_.begin(), a.sets_.end(), b.sets_.begin(), b.sets_.end());
  }

 private:
  int n_ = 0;
  int k_ = 0;
  std::vector<Subset> sets_;
};

}  // namespace crossfam
