#include "intersectra/vset.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace intersectra {

namespace {
int word_count(int n) { return (n + 63) / 64; }
}  // namespace

VSet::VSet(int ground_size) : n_(ground_size), w_(word_count(ground_size), 0) {
  if (ground_size < 0) throw std::invalid_argument("negative ground size");
}

VSet::VSet(int ground_size, std::initializer_list<int> elems) : VSet(ground_size) {
  for (int e : elems) insert(e);
}

VSet VSet::from_elements(int ground_size, const std::vector<int>& elems) {
  VSet s(ground_size);
  for (int e : elems) s.insert(e);
  return s;
}

VSet VSet::full(int ground_size) {
  VSet s(ground_size);
  for (int w = 0; w < word_count(ground_size); ++w) s.w_[w] = ~0ull;
  int tail = ground_size % 64;
  if (tail && !s.w_.empty()) s.w_.back() = (1ull << tail) - 1;
  return s;
}

VSet VSet::single(int ground_size, int e) {
  VSet s(ground_size);
  s.insert(e);
  return s;
}

VSet VSet::from_mask(int ground_size, std::uint64_t mask) {
  if (ground_size > 64) throw std::invalid_argument("mask constructor needs n <= 64");
  VSet s(ground_size);
  if (ground_size > 0) {
    std::uint64_t cap = ground_size == 64 ? ~0ull : (1ull << ground_size) - 1;
    if (mask & ~cap) throw std::invalid_argument("element out of range");
    s.w_[0] = mask;
  } else if (mask) {
    throw std::invalid_argument("element out of range");
  }
  return s;
}

int VSet::size() const {
  int c = 0;
  for (std::uint64_t w : w_) c += std::popcount(w);
  return c;
}

bool VSet::empty() const {
  for (std::uint64_t w : w_)
    if (w) return false;
  return true;
}

bool VSet::contains(int e) const {
  if (e < 1 || e > n_) return false;
  return (w_[(e - 1) >> 6] >> ((e - 1) & 63)) & 1;
}

void VSet::insert(int e) {
  if (e < 1 || e > n_) throw std::invalid_argument("element out of range");
  w_[(e - 1) >> 6] |= 1ull << ((e - 1) & 63);
}

void VSet::erase(int e) {
  if (e < 1 || e > n_) return;
  w_[(e - 1) >> 6] &= ~(1ull << ((e - 1) & 63));
}

bool VSet::intersects(const VSet& o) const {
  size_t m = std::min(w_.size(), o.w_.size());
  for (size_t i = 0; i < m; ++i)
    if (w_[i] & o.w_[i]) return true;
  return false;
}

bool VSet::subset_of(const VSet& o) const {
  for (size_t i = 0; i < w_.size(); ++i) {
    std::uint64_t ow = i < o.w_.size() ? o.w_[i] : 0;
    if (w_[i] & ~ow) return false;
  }
  return true;
}

bool VSet::proper_subset_of(const VSet& o) const {
  return subset_of(o) && size() < o.size();
}

int VSet::intersection_size(const VSet& o) const {
  size_t m = std::min(w_.size(), o.w_.size());
  int c = 0;
  for (size_t i = 0; i < m; ++i) c += std::popcount(w_[i] & o.w_[i]);
  return c;
}

VSet VSet::operator&(const VSet& o) const {
  VSet r(std::min(n_, o.n_));
  for (size_t i = 0; i < r.w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
  return r;
}

VSet VSet::operator|(const VSet& o) const {
  VSet r(std::max(n_, o.n_));
  for (size_t i = 0; i < w_.size(); ++i) r.w_[i] |= w_[i];
  for (size_t i = 0; i < o.w_.size(); ++i) r.w_[i] |= o.w_[i];
  return r;
}

VSet VSet::operator-(const VSet& o) const {
  VSet r = *this;
  size_t m = std::min(w_.size(), o.w_.size());
  for (size_t i = 0; i < m; ++i) r.w_[i] &= ~o.w_[i];
  return r;
}

std::vector<int> VSet::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for (size_t i = 0; i < w_.size(); ++i) {
    std::uint64_t w = w_[i];
    while (w) {
      out.push_back(int(i * 64 + std::countr_zero(w) + 1));
      w &= w - 1;
    }
  }
  return out;
}

int VSet::min_element() const {
  for (size_t i = 0; i < w_.size(); ++i)
    if (w_[i]) return int(i * 64 + std::countr_zero(w_[i]) + 1);
  return 0;
}

int VSet::max_element() const {
  for (size_t i = w_.size(); i-- > 0;)
    if (w_[i]) return int(i * 64 + 63 - std::countl_zero(w_[i]) + 1);
  return 0;
}

VSet VSet::with_ground(int new_n) const {
  if (new_n < max_element()) throw std::invalid_argument("ground set too small for elements");
  VSet r(new_n);
  std::copy(w_.begin(), w_.end(), r.w_.begin());
  return r;
}

bool colex_less(const VSet& a, const VSet& b) {
  size_t m = std::max(a.w_.size(), b.w_.size());
  for (size_t i = m; i-- > 0;) {
    std::uint64_t aw = i < a.w_.size() ? a.w_[i] : 0;
    std::uint64_t bw = i < b.w_.size() ? b.w_[i] : 0;
    if (aw != bw) return aw < bw;
  }
  return a.ground_size() < b.ground_size();
}

bool lex_less(const VSet& a, const VSet& b) {
  std::vector<int> ae = a.elements(), be = b.elements();
  return std::lexicographical_compare(ae.begin(), ae.end(), be.begin(), be.end());
}

std::string VSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) s += ' ';
    s += std::to_string(e);
    first = false;
  }
  return s + "}";
}

}  // namespace intersectra
