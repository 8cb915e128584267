#ifndef NONSEP_VERTEX_SET_HPP
#define NONSEP_VERTEX_SET_HPP

#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "nonsep/errors.hpp"

namespace nonsep {

using VertexId = int;

// Bitset-backed vertex set over a fixed universe [0, n).  All binary set
// operations require matching universes.  Iteration (members()) is always
// in ascending id order, which is what keeps the library deterministic.
class VertexSet {
 public:
  VertexSet() = default;

  explicit VertexSet(int universe) : n_(universe), bits_((universe + 63) / 64, 0) {
    if (universe < 0) throw precondition_error("vertex set universe must be non-negative");
  }

  static VertexSet of(int universe, std::initializer_list<VertexId> vs) {
    VertexSet s(universe);
    for (VertexId v : vs) s.insert(v);
    return s;
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (VertexId v = 0; v < universe; ++v) s.insert(v);
    return s;
  }

  int universe() const { return n_; }
  int size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(VertexId v) const {
    if (v < 0 || v >= n_) return false;
    return (bits_[v >> 6] >> (v & 63)) & 1u;
  }

  void insert(VertexId v) {
    check_range(v);
    std::uint64_t& w = bits_[v >> 6];
    std::uint64_t m = std::uint64_t{1} << (v & 63);
    if (!(w & m)) {
      w |= m;
      ++count_;
    }
  }

  void erase(VertexId v) {
    check_range(v);
    std::uint64_t& w = bits_[v >> 6];
    std::uint64_t m = std::uint64_t{1} << (v & 63);
    if (w & m) {
      w &= ~m;
      --count_;
    }
  }

  std::vector<VertexId> members() const {
    std::vector<VertexId> out;
    out.reserve(count_);
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      std::uint64_t w = bits_[i];
      while (w) {
        int b = __builtin_ctzll(w);
        out.push_back(static_cast<VertexId>(i * 64 + b));
        w &= w - 1;
      }
    }
    return out;
  }

  // Smallest member, or -1 when empty.
  VertexId front() const {
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i]) return static_cast<VertexId>(i * 64 + __builtin_ctzll(bits_[i]));
    return -1;
  }

  VertexSet& operator|=(const VertexSet& o) {
    check_universe(o);
    count_ = 0;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      bits_[i] |= o.bits_[i];
      count_ += __builtin_popcountll(bits_[i]);
    }
    return *this;
  }

  VertexSet& operator&=(const VertexSet& o) {
    check_universe(o);
    count_ = 0;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      bits_[i] &= o.bits_[i];
      count_ += __builtin_popcountll(bits_[i]);
    }
    return *this;
  }

  VertexSet& operator-=(const VertexSet& o) {
    check_universe(o);
    count_ = 0;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      bits_[i] &= ~o.bits_[i];
      count_ += __builtin_popcountll(bits_[i]);
    }
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  // Complement within the universe.
  VertexSet complement() const {
    VertexSet out(n_);
    for (VertexId v = 0; v < n_; ++v)
      if (!contains(v)) out.insert(v);
    return out;
  }

  bool subset_of(const VertexSet& o) const {
    check_universe(o);
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] & ~o.bits_[i]) return false;
    return true;
  }

  bool intersects(const VertexSet& o) const {
    check_universe(o);
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] & o.bits_[i]) return true;
    return false;
  }

  bool operator==(const VertexSet& o) const { return n_ == o.n_ && bits_ == o.bits_; }
  bool operator!=(const VertexSet& o) const { return !(*this == o); }

  // Lexicographic comparison on the ascending member list; used for
  // deterministic orderings of separators and fragments.
  bool lex_less(const VertexSet& o) const {
    std::vector<VertexId> a = members(), b = o.members();
    return a < b;
  }

 private:
  void check_range(VertexId v) const {
    if (v < 0 || v >= n_) throw precondition_error("vertex id out of range for vertex set");
  }
  void check_universe(const VertexSet& o) const {
    if (n_ != o.n_) throw precondition_error("vertex set universe mismatch");
  }

  int n_ = 0;
  std::vector<std::uint64_t> bits_;
  int count_ = 0;
};

}  // namespace nonsep

#endif  // NONSEP_VERTEX_SET_HPP
