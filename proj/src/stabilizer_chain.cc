#include <algorithm>
#include <numeric>

#include "gilt/errors.h"
#include "gilt/stabilizer_chain.h"

namespace gilt
{

Permutation multiply_by_inverse(Permutation const &g, Permutation const &u)
{
  std::size_t const n = g.degree();
  std::vector<Point> inv(n);
  for (Point x = 0; x < n; ++x)
    inv[u[x]] = x;

  std::vector<Point> images(n);
  for (Point x = 0; x < n; ++x)
    images[x] = inv[g[x]];

  return Permutation::from_images_unchecked(std::move(images));
}

namespace
{

void extend_orbit(StabilizerChain::Level &level, std::size_t first_new_gen)
{
  // Old orbit points only need the new generators; new points need all.
  std::size_t const old_size = level.orbit.size();

  auto visit = [&](std::size_t pos, std::size_t gen_from) {
    Point x = level.orbit[pos];
    for (std::size_t k = gen_from; k < level.generators.size(); ++k) {
      Point y = level.generators[k][x];
      if (level.orbit_index[y] < 0) {
        level.orbit_index[y] = static_cast<std::int32_t>(level.orbit.size());
        level.orbit.push_back(y);
        level.transversal.push_back(level.transversal[pos] * level.generators[k]);
      }
    }
  };

  for (std::size_t pos = 0; pos < old_size; ++pos)
    visit(pos, first_new_gen);
  for (std::size_t pos = old_size; pos < level.orbit.size(); ++pos)
    visit(pos, 0u);
}

} // anonymous namespace

StabilizerChain::StabilizerChain(std::size_t degree,
                                 std::vector<Permutation> const &generators,
                                 Options options)
: _degree(degree),
  _domain(std::move(options.base_domain)),
  _in_domain(degree, false),
  _known_order(std::move(options.known_order))
{
  if (_domain.empty()) {
    _domain.resize(degree);
    std::iota(_domain.begin(), _domain.end(), Point{0});
  }
  for (Point x : _domain) {
    if (x >= degree)
      throw Error(ErrorKind::InvalidPoint, "base domain point out of range");
    _in_domain[x] = true;
  }

  for (auto const &g : generators)
    if (g.degree() != degree)
      throw Error(ErrorKind::DegreeMismatch,
                  "generator of degree " + std::to_string(g.degree()) +
                  " in a group of degree " + std::to_string(degree));

  schreier_sims(generators);
}

std::vector<Point> StabilizerChain::base() const
{
  std::vector<Point> res;
  for (auto const &level : _levels)
    res.push_back(level.base);
  return res;
}

BigInt StabilizerChain::order() const
{
  BigInt res = residual_order();
  for (auto const &level : _levels)
    res *= level.orbit.size();
  return res;
}

BigInt StabilizerChain::residual_order() const
{ return _residual ? _residual->order() : BigInt(1); }

bool StabilizerChain::fixes_domain(Permutation const &g) const
{
  for (Point x : _domain)
    if (g[x] != x)
      return false;
  return true;
}

bool StabilizerChain::in_residual(Permutation const &g) const
{
  if (g.is_identity())
    return true;
  return _residual && _residual->contains(g);
}

std::optional<Point>
StabilizerChain::first_moved_domain_point(Permutation const &g) const
{
  for (Point x : _domain)
    if (g[x] != x)
      return x;
  return std::nullopt;
}

std::pair<Permutation, std::size_t>
StabilizerChain::sift(Permutation g, std::size_t from) const
{
  for (std::size_t l = from; l < _levels.size(); ++l) {
    auto const &level = _levels[l];
    Point delta = g[level.base];
    if (!level.in_orbit(delta))
      return {std::move(g), l};
    g = multiply_by_inverse(g, level.transversal_element(delta));
  }
  return {std::move(g), _levels.size()};
}

bool StabilizerChain::contains(Permutation const &g) const
{
  if (g.degree() != _degree)
    throw Error(ErrorKind::DegreeMismatch,
                "permutation of degree " + std::to_string(g.degree()) +
                " tested against a group of degree " + std::to_string(_degree));

  auto [residue, level] = sift(g);
  if (level != _levels.size())
    return false;
  return fixes_domain(residue) && in_residual(residue);
}

void StabilizerChain::add_generator(std::size_t l, Permutation const &g)
{
  auto &level = _levels[l];
  std::size_t first_new = level.generators.size();
  level.generators.push_back(g);
  extend_orbit(level, first_new);
}

void StabilizerChain::add_residual(Permutation const &g)
{
  _residual_generators.push_back(g);
  _residual = std::make_unique<StabilizerChain>(_degree, _residual_generators);
}

bool StabilizerChain::reached_known_order() const
{
  if (!_known_order)
    return false;

  BigInt current = order();
  if (current > *_known_order)
    throw Error(ErrorKind::DegenerateInput,
                "stabilizer chain exceeds the supplied group order");
  return current == *_known_order;
}

void StabilizerChain::schreier_sims(std::vector<Permutation> const &generators)
{
  auto new_level = [&](Point base) {
    Level level;
    level.base = base;
    level.orbit_index.assign(_degree, -1);
    level.orbit.push_back(base);
    level.orbit_index[base] = 0;
    level.transversal.push_back(Permutation(_degree));
    // The residual fixes every base point, so it lies in each stabilizer.
    level.generators = _residual_generators;
    _levels.push_back(std::move(level));
  };

  std::vector<Permutation> initial;
  for (auto const &g : generators) {
    if (g.is_identity())
      continue;
    if (std::find(initial.begin(), initial.end(), g) != initial.end())
      continue;
    initial.push_back(g);

    bool fixes_base = std::all_of(_levels.begin(), _levels.end(),
      [&](Level const &level) { return g[level.base] == level.base; });

    if (fixes_base) {
      if (auto x = first_moved_domain_point(g))
        new_level(*x);
      else if (!in_residual(g))
        add_residual(g);
    }
  }

  for (auto const &g : initial) {
    for (std::size_t l = 0; l < _levels.size(); ++l) {
      _levels[l].generators.push_back(g);
      if (g[_levels[l].base] != _levels[l].base)
        break;
    }
  }
  for (auto &level : _levels)
    extend_orbit(level, 0u);

  if (reached_known_order() || _levels.empty())
    return;

  std::size_t i = _levels.size() - 1u;

  for (;;) {
    bool restarted = false;

    // Level i is complete once every Schreier generator sifts to identity
    // through the (already complete) deeper levels.
    for (std::size_t pos = 0; pos < _levels[i].orbit.size() && !restarted; ++pos) {
      for (std::size_t k = 0; k < _levels[i].generators.size(); ++k) {
        auto const &level = _levels[i];
        Point delta = level.orbit[pos];
        Permutation const &s = level.generators[k];
        Permutation t = level.transversal[pos] * s;
        Permutation const &u = level.transversal_element(s[delta]);
        if (t == u)
          continue;

        auto [h, j] = sift(multiply_by_inverse(t, u), i + 1u);

        if (j == _levels.size()) {
          if (h.is_identity())
            continue;

          if (auto x = first_moved_domain_point(h)) {
            new_level(*x);
          } else {
            if (in_residual(h))
              continue;
            add_residual(h);
            for (std::size_t l = i + 1u; l < _levels.size(); ++l)
              add_generator(l, h);
            if (reached_known_order())
              return;
            i = std::max(i, _levels.size() - 1u);
            restarted = true;
            break;
          }
        }

        for (std::size_t l = i + 1u; l <= j; ++l)
          add_generator(l, h);

        if (reached_known_order())
          return;

        i = j;
        restarted = true;
        break;
      }
    }

    if (restarted)
      continue;
    if (i == 0u)
      break;
    --i;
  }
}

std::vector<Permutation> StabilizerChain::elements() const
{
  std::vector<Permutation> current;
  if (_residual)
    current = _residual->elements();
  else
    current.push_back(Permutation(_degree));

  for (std::size_t l = _levels.size(); l-- > 0;) {
    std::vector<Permutation> next;
    next.reserve(current.size() * _levels[l].transversal.size());
    for (auto const &g : current)
      for (auto const &u : _levels[l].transversal)
        next.push_back(g * u);
    current = std::move(next);
  }

  return current;
}

} // namespace gilt
