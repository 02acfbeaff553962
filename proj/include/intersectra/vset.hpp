#ifndef INTERSECTRA_VSET_HPP
#define INTERSECTRA_VSET_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace intersectra {

// Subset of the ground set [n] = {1, ..., n}, stored as a bitmask.
// Element e lives at bit (e-1), word (e-1)/64.  One machine word covers
// n <= 64; larger ground sets spill into further words.  With that bit
// layout, numeric comparison of the word array (high word first) is exactly
// colexicographic order on sets, which is the order used throughout.
class VSet {
 public:
  VSet() = default;
  explicit VSet(int ground_size);
  VSet(int ground_size, std::initializer_list<int> elems);

  static VSet from_elements(int ground_size, const std::vector<int>& elems);
  static VSet full(int ground_size);                   // [n] itself
  static VSet single(int ground_size, int e);

  int ground_size() const { return n_; }
  int size() const;                                    // popcount
  bool empty() const;
  bool contains(int e) const;

  void insert(int e);
  void erase(int e);

  bool intersects(const VSet& o) const;
  bool disjoint_from(const VSet& o) const { return !intersects(o); }
  bool subset_of(const VSet& o) const;
  bool proper_subset_of(const VSet& o) const;
  int intersection_size(const VSet& o) const;          // |A & B| without allocating

  VSet operator&(const VSet& o) const;
  VSet operator|(const VSet& o) const;
  VSet operator-(const VSet& o) const;                 // set difference

  std::vector<int> elements() const;                   // ascending
  int min_element() const;                             // 0 if empty
  int max_element() const;                             // 0 if empty

  // Low word of the mask; the whole set when n <= 64.
  std::uint64_t low_word() const { return w_.empty() ? 0 : w_[0]; }
  const std::vector<std::uint64_t>& words() const { return w_; }
  static VSet from_mask(int ground_size, std::uint64_t mask);  // n <= 64

  // Same set over a larger ground set (new_n >= every element).
  VSet with_ground(int new_n) const;

  bool operator==(const VSet& o) const { return n_ == o.n_ && w_ == o.w_; }
  std::string to_string() const;                       // "{1 2 3}"

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;                       // (n_+63)/64 words
  friend bool colex_less(const VSet&, const VSet&);
  friend bool lex_less(const VSet&, const VSet&);
};

// Colex order: compare largest elements first; equals numeric order of masks.
bool colex_less(const VSet& a, const VSet& b);
// Lex order on the ascending element sequences ({1,4} precedes {2,3}).
bool lex_less(const VSet& a, const VSet& b);

}  // namespace intersectra

#endif
