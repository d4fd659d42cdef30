#pragma once

// Brute-force partition enumeration and Durfee statistics. Everything here
// is an oracle for the generating-function code: simple, direct, slow.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <iterator>
#include <string>
#include <vector>

namespace dtri {

// Largest n accepted by the enumerators. p(60) is just under a million.
inline constexpr unsigned kMaxEnumerationSize = 60;

constexpr unsigned triangular(unsigned k) { return k * (k + 1) / 2; }

/// Weakly decreasing list of positive parts. The empty list is the unique
/// partition of 0.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless `parts` is weakly decreasing and
  /// strictly positive.
  explicit Partition(std::vector<unsigned> parts);

  const std::vector<unsigned>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  unsigned size() const;
  bool empty() const { return parts_.empty(); }
  /// 1-based part access; returns 0 past the last part.
  unsigned part(std::size_t j) const { return j >= 1 && j <= parts_.size() ? parts_[j - 1] : 0; }

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<unsigned> parts_;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Forward range over the partitions of n in lexicographically decreasing
/// order: (n), (n-1,1), (n-2,2), (n-2,1,1), ...
class PartitionRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Partition;
    using difference_type = std::ptrdiff_t;
    using pointer = const Partition*;
    using reference = const Partition&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_ && (a.done_ || a.current_ == b.current_); }

   private:
    friend class PartitionRange;
    explicit iterator(unsigned n);

    Partition current_;
    bool done_ = true;
  };

  explicit PartitionRange(unsigned n);
  iterator begin() const { return iterator(n_); }
  iterator end() const { return iterator(); }

 private:
  unsigned n_;
};

/// Throws EnumerationLimit for n > kMaxEnumerationSize.
PartitionRange enumerate_partitions(unsigned n);

unsigned durfee_square_size(const Partition& p);
unsigned durfee_triangle_size(const Partition& p);
Partition conjugate(const Partition& p);

/// A partition split along its Durfee triangle of size k: the first d rows
/// stick out past the triangle by row_excess[j] >= 1 cells, and the first k-d
/// columns stick out below it by col_excess[j] >= 0 cells.
struct TriangleDecomposition {
  unsigned k = 0;
  unsigned d = 0;
  std::vector<unsigned> row_excess;
  std::vector<unsigned> col_excess;

  /// k(k+1)/2 + sum(row_excess) + sum(col_excess).
  unsigned size() const;
  /// Checks the chain constraints m_j <= m_{j-1}+1 and n_j <= n_{j-1}+1.
  bool well_formed() const;

  bool operator==(const TriangleDecomposition&) const = default;
};

TriangleDecomposition decompose_by_triangle(const Partition& p);
Partition reconstruct(const TriangleDecomposition& t);

std::uint64_t count_rk_bruteforce(unsigned k, unsigned n);
std::uint64_t count_dk_bruteforce(unsigned k, unsigned n);
/// Weak compositions of n into d parts where each part exceeds its
/// predecessor by at most one.
std::uint64_t count_ad_bruteforce(unsigned d, unsigned n);
/// Partitions of n into at most d parts.
std::uint64_t count_pd_bruteforce(unsigned d, unsigned n);
std::uint64_t count_partitions_bruteforce(unsigned n);

}  // namespace dtri
