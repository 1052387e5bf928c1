#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "gilt/errors.h"
#include "gilt/perm.h"

namespace gilt
{

Permutation::Permutation(std::size_t degree)
: _images(degree)
{ std::iota(_images.begin(), _images.end(), Point{0}); }

Permutation::Permutation(std::vector<Point> images)
: _images(std::move(images))
{
  std::vector<bool> seen(_images.size(), false);
  for (Point x : _images) {
    if (x >= _images.size() || seen[x])
      throw Error(ErrorKind::InvalidPoint, "image array is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::from_cycles(
  std::size_t degree, std::vector<std::vector<Point>> const &cycles)
{
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  for (auto const &cycle : cycles) {
    for (Point x : cycle) {
      if (x >= degree)
        throw Error(ErrorKind::InvalidPoint,
                    "point " + std::to_string(x + 1) + " exceeds degree " +
                    std::to_string(degree));
      if (used[x])
        throw Error(ErrorKind::InvalidPoint,
                    "point " + std::to_string(x + 1) + " repeated in cycles");
      used[x] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }

  return Permutation(std::move(images));
}

Permutation Permutation::parse(std::size_t degree, std::string_view text)
{
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;

  auto fail = [&](std::string const &msg) {
    throw Error(ErrorKind::ParseError,
                "bad cycle notation '" + std::string(text) + "': " + msg);
  };

  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };

  skip_space();
  while (i < text.size()) {
    if (text[i] != '(')
      fail("expected '('");
    ++i;

    std::vector<Point> cycle;
    for (;;) {
      skip_space();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i >= text.size())
        fail("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        fail("expected a point");

      std::uint64_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10u + static_cast<std::uint64_t>(text[i] - '0');
        if (value > degree + 1u)
          break;
        ++i;
      }
      if (value == 0 || value > degree)
        fail("point out of range 1.." + std::to_string(degree));
      cycle.push_back(static_cast<Point>(value - 1u));
    }

    if (cycle.size() > 1)
      cycles.push_back(std::move(cycle));
    skip_space();
  }

  try {
    return from_cycles(degree, cycles);
  } catch (Error const &e) {
    fail(e.what());
  }
  return Permutation(degree);
}

bool Permutation::is_identity() const
{
  for (std::size_t i = 0; i < _images.size(); ++i)
    if (_images[i] != i)
      return false;
  return true;
}

Permutation Permutation::inverse() const
{
  std::vector<Point> inv(_images.size());
  for (std::size_t i = 0; i < _images.size(); ++i)
    inv[_images[i]] = static_cast<Point>(i);

  Permutation res;
  res._images = std::move(inv);
  return res;
}

std::uint64_t Permutation::order() const
{
  std::uint64_t res = 1;
  for (auto const &cycle : cycles())
    res = std::lcm(res, static_cast<std::uint64_t>(cycle.size()));
  return res;
}

Permutation Permutation::pow(std::int64_t k) const
{
  Permutation base = k < 0 ? inverse() : *this;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k)
                          : static_cast<std::uint64_t>(k);
  Permutation res(degree());
  while (e) {
    if (e & 1u)
      res = res * base;
    base = base * base;
    e >>= 1u;
  }
  return res;
}

std::vector<std::vector<Point>> Permutation::cycles() const
{
  std::vector<std::vector<Point>> res;
  std::vector<bool> seen(_images.size(), false);

  for (Point x = 0; x < _images.size(); ++x) {
    if (seen[x] || _images[x] == x)
      continue;

    std::vector<Point> cycle;
    for (Point y = x; !seen[y]; y = _images[y]) {
      seen[y] = true;
      cycle.push_back(y);
    }
    res.push_back(std::move(cycle));
  }

  return res;
}

std::string Permutation::to_string() const
{
  auto cs = cycles();
  if (cs.empty())
    return "()";

  std::ostringstream os;
  for (auto const &cycle : cs) {
    os << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i)
      os << (i ? " " : "") << cycle[i] + 1u;
    os << ')';
  }
  return os.str();
}

std::size_t Permutation::hash() const
{
  std::size_t h = _images.size();
  for (Point x : _images)
    h = h * 1000003u ^ x;
  return h;
}

Permutation compose(Permutation const &p, Permutation const &q)
{
  if (p.degree() != q.degree())
    throw Error(ErrorKind::DegreeMismatch,
                "cannot compose permutations of degree " +
                std::to_string(p.degree()) + " and " + std::to_string(q.degree()));

  std::vector<Point> images(p.degree());
  for (Point x = 0; x < p.degree(); ++x)
    images[x] = q[p[x]];

  return Permutation::from_images_unchecked(std::move(images));
}

Permutation conjugate(Permutation const &q, Permutation const &p)
{ return p.inverse() * q * p; }

Permutation commutator(Permutation const &p, Permutation const &q)
{ return p.inverse() * q.inverse() * p * q; }

std::ostream &operator<<(std::ostream &os, Permutation const &p)
{ return os << p.to_string(); }

} // namespace gilt
