#include "dtri/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "dtri/error.hpp"

namespace dtri {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

unsigned Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0u); }

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  os << '(';
  for (std::size_t i = 0; i < p.parts().size(); ++i) os << (i ? "," : "") << p.parts()[i];
  return os << ')';
}

PartitionRange::iterator::iterator(unsigned n) : done_(false) {
  if (n > 0) current_ = Partition({n});
}

PartitionRange::iterator& PartitionRange::iterator::operator++() {
  std::vector<unsigned> parts = current_.parts();
  auto it = std::find_if(parts.rbegin(), parts.rend(), [](unsigned x) { return x > 1; });
  if (it == parts.rend()) {
    done_ = true;
    current_ = Partition();
    return *this;
  }
  auto i = static_cast<std::size_t>(std::distance(it, parts.rend())) - 1;
  unsigned rem = static_cast<unsigned>(parts.size() - i - 1) + 1;
  unsigned cap = --parts[i];
  parts.resize(i + 1);
  while (rem > 0) {
    unsigned next = std::min(cap, rem);
    parts.push_back(next);
    rem -= next;
  }
  current_ = Partition(std::move(parts));
  return *this;
}

PartitionRange::PartitionRange(unsigned n) : n_(n) {
  if (n > kMaxEnumerationSize)
    throw EnumerationLimit("partition enumeration is capped at n = " + std::to_string(kMaxEnumerationSize));
}

PartitionRange enumerate_partitions(unsigned n) { return PartitionRange(n); }

unsigned durfee_square_size(const Partition& p) {
  unsigned k = 0;
  while (p.part(k + 1) >= k + 1) ++k;
  return k;
}

unsigned durfee_triangle_size(const Partition& p) {
  // Size k fits iff part(j) >= k - j + 1 for j = 1..k.
  unsigned k = 0;
  for (;;) {
    unsigned next = k + 1;
    bool fits = true;
    for (unsigned j = 1; j <= next && fits; ++j) fits = p.part(j) >= next - j + 1;
    if (!fits) return k;
    k = next;
  }
}

Partition conjugate(const Partition& p) {
  if (p.empty()) return {};
  std::vector<unsigned> cols(p.part(1), 0);
  for (unsigned row : p.parts())
    for (unsigned c = 0; c < row; ++c) ++cols[c];
  return Partition(std::move(cols));
}

unsigned TriangleDecomposition::size() const {
  return triangular(k) + std::accumulate(row_excess.begin(), row_excess.end(), 0u) +
         std::accumulate(col_excess.begin(), col_excess.end(), 0u);
}

bool TriangleDecomposition::well_formed() const {
  if (d > k || row_excess.size() != d || col_excess.size() != k - d) return false;
  for (std::size_t j = 0; j < row_excess.size(); ++j) {
    if (row_excess[j] < 1) return false;
    if (j > 0 && row_excess[j] > row_excess[j - 1] + 1) return false;
  }
  for (std::size_t j = 1; j < col_excess.size(); ++j)
    if (col_excess[j] > col_excess[j - 1] + 1) return false;
  return true;
}

TriangleDecomposition decompose_by_triangle(const Partition& p) {
  TriangleDecomposition t;
  t.k = durfee_triangle_size(p);
  if (t.k == 0) return t;
  while (t.d < t.k && p.part(t.d + 1) > t.k - t.d) ++t.d;
  for (unsigned j = 1; j <= t.d; ++j) t.row_excess.push_back(p.part(j) - (t.k - j + 1));
  Partition cols = conjugate(p);
  for (unsigned j = 1; j <= t.k - t.d; ++j) t.col_excess.push_back(cols.part(j) - (t.k - j + 1));
  return t;
}

Partition reconstruct(const TriangleDecomposition& t) {
  if (!t.well_formed()) throw std::invalid_argument("reconstruct: malformed triangle decomposition");
  std::vector<unsigned> rows;
  for (unsigned j = 1; j <= t.d; ++j) rows.push_back(t.k - j + 1 + t.row_excess[j - 1]);
  // Columns past k-d end inside the first d rows, so lower rows are made of
  // the first k-d columns only.
  std::vector<unsigned> col_len;
  for (unsigned c = 1; c <= t.k - t.d; ++c) col_len.push_back(t.k - c + 1 + t.col_excess[c - 1]);
  for (unsigned row = t.d + 1;; ++row) {
    auto len = static_cast<unsigned>(std::count_if(col_len.begin(), col_len.end(), [row](unsigned l) { return l >= row; }));
    if (len == 0) break;
    rows.push_back(len);
  }
  return Partition(std::move(rows));
}

namespace {

template <class Pred>
std::uint64_t count_if_partition(unsigned n, Pred pred) {
  std::uint64_t count = 0;
  for (const Partition& p : enumerate_partitions(n))
    if (pred(p)) ++count;
  return count;
}

void require_positive(unsigned v, const char* what) {
  if (v == 0) throw std::invalid_argument(std::string(what) + " must be positive");
}

std::uint64_t count_ad_tail(unsigned parts_left, unsigned prev, unsigned remaining) {
  if (parts_left == 0) return remaining == 0 ? 1 : 0;
  std::uint64_t total = 0;
  for (unsigned v = 0; v <= std::min(prev + 1, remaining); ++v) total += count_ad_tail(parts_left - 1, v, remaining - v);
  return total;
}

}  // namespace

std::uint64_t count_rk_bruteforce(unsigned k, unsigned n) {
  require_positive(k, "k");
  return count_if_partition(n, [k](const Partition& p) { return durfee_triangle_size(p) == k; });
}

std::uint64_t count_dk_bruteforce(unsigned k, unsigned n) {
  require_positive(k, "k");
  return count_if_partition(n, [k](const Partition& p) { return durfee_square_size(p) == k; });
}

std::uint64_t count_ad_bruteforce(unsigned d, unsigned n) {
  require_positive(d, "d");
  if (n > kMaxEnumerationSize) throw EnumerationLimit("weak composition enumeration is capped");
  std::uint64_t total = 0;
  for (unsigned first = 0; first <= n; ++first) total += count_ad_tail(d - 1, first, n - first);
  return total;
}

std::uint64_t count_pd_bruteforce(unsigned d, unsigned n) {
  require_positive(d, "d");
  return count_if_partition(n, [d](const Partition& p) { return p.length() <= d; });
}

std::uint64_t count_partitions_bruteforce(unsigned n) {
  return count_if_partition(n, [](const Partition&) { return true; });
}

}  // namespace dtri
