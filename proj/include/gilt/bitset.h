#ifndef GUARD_GILT_BITSET_H
#define GUARD_GILT_BITSET_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace gilt
{

// Fixed-size bit vector with the handful of set operations the lattice and
// subgroup code needs; hashable and totally ordered so it can key maps.
class Bitset
{
public:
  Bitset() = default;

  explicit Bitset(std::size_t size)
  : _size(size), _words((size + 63u) / 64u, 0u)
  {}

  std::size_t size() const
  { return _size; }

  void set(std::size_t i)
  { _words[i >> 6] |= std::uint64_t{1} << (i & 63u); }

  void reset(std::size_t i)
  { _words[i >> 6] &= ~(std::uint64_t{1} << (i & 63u)); }

  bool test(std::size_t i) const
  { return (_words[i >> 6] >> (i & 63u)) & 1u; }

  std::size_t count() const
  {
    std::size_t n = 0;
    for (auto w : _words)
      n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool none() const
  {
    for (auto w : _words)
      if (w)
        return false;
    return true;
  }

  // Index of the lowest set bit, or size() if empty.
  std::size_t first() const
  {
    for (std::size_t i = 0; i < _words.size(); ++i)
      if (_words[i])
        return i * 64u + static_cast<std::size_t>(std::countr_zero(_words[i]));
    return _size;
  }

  // Index of the highest set bit, or size() if empty.
  std::size_t last() const
  {
    for (std::size_t i = _words.size(); i-- > 0;)
      if (_words[i])
        return i * 64u + 63u - static_cast<std::size_t>(std::countl_zero(_words[i]));
    return _size;
  }

  std::size_t next(std::size_t i) const
  {
    ++i;
    if (i >= _size)
      return _size;
    std::size_t w = i >> 6;
    std::uint64_t word = _words[w] & (~std::uint64_t{0} << (i & 63u));
    for (;;) {
      if (word)
        return w * 64u + static_cast<std::size_t>(std::countr_zero(word));
      if (++w >= _words.size())
        return _size;
      word = _words[w];
    }
  }

  template<typename F>
  void for_each(F &&f) const
  {
    for (std::size_t w = 0; w < _words.size(); ++w) {
      std::uint64_t word = _words[w];
      while (word) {
        f(w * 64u + static_cast<std::size_t>(std::countr_zero(word)));
        word &= word - 1u;
      }
    }
  }

  std::vector<std::size_t> indices() const
  {
    std::vector<std::size_t> res;
    for_each([&](std::size_t i) { res.push_back(i); });
    return res;
  }

  Bitset &operator&=(Bitset const &other)
  {
    for (std::size_t i = 0; i < _words.size(); ++i)
      _words[i] &= other._words[i];
    return *this;
  }

  Bitset &operator|=(Bitset const &other)
  {
    for (std::size_t i = 0; i < _words.size(); ++i)
      _words[i] |= other._words[i];
    return *this;
  }

  friend Bitset operator&(Bitset lhs, Bitset const &rhs)
  { return lhs &= rhs; }

  friend Bitset operator|(Bitset lhs, Bitset const &rhs)
  { return lhs |= rhs; }

  bool is_subset_of(Bitset const &other) const
  {
    for (std::size_t i = 0; i < _words.size(); ++i)
      if (_words[i] & ~other._words[i])
        return false;
    return true;
  }

  bool intersects(Bitset const &other) const
  {
    for (std::size_t i = 0; i < _words.size(); ++i)
      if (_words[i] & other._words[i])
        return true;
    return false;
  }

  friend bool operator==(Bitset const &, Bitset const &) = default;

  friend bool operator<(Bitset const &lhs, Bitset const &rhs)
  { return lhs._words < rhs._words; }

  std::size_t hash() const
  {
    std::size_t h = _size;
    for (auto w : _words)
      h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }

private:
  std::size_t _size = 0;
  std::vector<std::uint64_t> _words;
};

} // namespace gilt

template<>
struct std::hash<gilt::Bitset>
{
  std::size_t operator()(gilt::Bitset const &b) const
  { return b.hash(); }
};

#endif // GUARD_GILT_BITSET_H
