#ifndef GUARD_GILT_PERM_H
#define GUARD_GILT_PERM_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gilt
{

using Point = std::uint32_t;

/// A bijection on {0, ..., degree-1} stored as its image array.
///
/// Products follow the right-action convention used throughout the library:
/// `p * q` applies p first, then q, so `(p * q)[x] == q[p[x]]`. Points are
/// 0-based internally; cycle notation read from or written for users is
/// 1-based.
class Permutation
{
public:
  Permutation() = default;

  // Identity of the given degree.
  explicit Permutation(std::size_t degree);

  // Throws InvalidPoint unless images is a bijection on {0..n-1}.
  explicit Permutation(std::vector<Point> images);

  // Skips the bijection check; callers guarantee it.
  static Permutation from_images_unchecked(std::vector<Point> images)
  {
    Permutation res;
    res._images = std::move(images);
    return res;
  }

  static Permutation identity(std::size_t degree)
  { return Permutation(degree); }

  // 0-based cycles, e.g. {{0, 1, 2}, {3, 4}}.
  static Permutation from_cycles(std::size_t degree,
                                 std::vector<std::vector<Point>> const &cycles);

  // 1-based cycle notation such as "(1 2 3)(4 5)" or "()".
  static Permutation parse(std::size_t degree, std::string_view text);

  std::size_t degree() const
  { return _images.size(); }

  Point operator[](Point x) const
  { return _images[x]; }

  std::span<Point const> images() const
  { return _images; }

  bool is_identity() const;

  Permutation inverse() const;

  // Smallest k > 0 with p^k = 1.
  std::uint64_t order() const;

  Permutation pow(std::int64_t k) const;

  // 0-based cycles of length > 1, each starting at its least point, sorted.
  std::vector<std::vector<Point>> cycles() const;

  // 1-based; "()" for the identity.
  std::string to_string() const;

  std::size_t hash() const;

  friend bool operator==(Permutation const &, Permutation const &) = default;

  friend bool operator<(Permutation const &lhs, Permutation const &rhs)
  { return lhs._images < rhs._images; }

private:
  std::vector<Point> _images;
};

// Throws DegreeMismatch on unequal degrees.
Permutation compose(Permutation const &p, Permutation const &q);

inline Permutation operator*(Permutation const &p, Permutation const &q)
{ return compose(p, q); }

// p^-1 * q * p, i.e. q conjugated by p in the right-action convention.
Permutation conjugate(Permutation const &q, Permutation const &p);

// p^-1 q^-1 p q
Permutation commutator(Permutation const &p, Permutation const &q);

std::ostream &operator<<(std::ostream &os, Permutation const &p);

} // namespace gilt

template<>
struct std::hash<gilt::Permutation>
{
  std::size_t operator()(gilt::Permutation const &p) const
  { return p.hash(); }
};

#endif // GUARD_GILT_PERM_H
