#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "gilt/errors.h"
#include "gilt/perm_group.h"

namespace gilt
{

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
: _degree(degree),
  _lazy(std::make_shared<LazyChain>())
{
  for (auto &g : generators) {
    if (g.degree() != degree)
      throw Error(ErrorKind::DegreeMismatch,
                  "generator " + g.to_string() + " has degree " +
                  std::to_string(g.degree()) + ", expected " +
                  std::to_string(degree));
    if (g.is_identity())
      continue;
    if (std::find(_generators.begin(), _generators.end(), g) != _generators.end())
      continue;
    _generators.push_back(std::move(g));
  }
}

StabilizerChain const &PermGroup::chain() const
{
  std::call_once(_lazy->once, [this] {
    _lazy->chain = std::make_unique<StabilizerChain>(_degree, _generators);
  });
  return *_lazy->chain;
}

PermGroup PermGroup::symmetric(std::size_t n)
{
  if (n <= 1u)
    return trivial(n);
  if (n == 2u)
    return PermGroup(2u, {Permutation::from_cycles(2u, {{0, 1}})});

  std::vector<Point> cycle(n);
  std::iota(cycle.begin(), cycle.end(), Point{0});
  return PermGroup(n, {Permutation::from_cycles(n, {cycle}),
                       Permutation::from_cycles(n, {{0, 1}})});
}

PermGroup PermGroup::alternating(std::size_t n)
{
  if (n <= 2u)
    return trivial(n);
  if (n == 3u)
    return PermGroup(3u, {Permutation::from_cycles(3u, {{0, 1, 2}})});

  std::vector<Point> cycle;
  for (Point x = (n % 2u == 0u) ? 1u : 0u; x < n; ++x)
    cycle.push_back(x);

  return PermGroup(n, {Permutation::from_cycles(n, {{0, 1, 2}}),
                       Permutation::from_cycles(n, {cycle})});
}

PermGroup PermGroup::cyclic(std::size_t n)
{
  if (n <= 1u)
    return trivial(1u);

  std::vector<Point> cycle(n);
  std::iota(cycle.begin(), cycle.end(), Point{0});
  return PermGroup(n, {Permutation::from_cycles(n, {cycle})});
}

PermGroup PermGroup::dihedral(std::size_t n)
{
  if (n < 3u)
    throw Error(ErrorKind::DegenerateInput, "dihedral group needs n >= 3");

  std::vector<Point> rotation(n), reflection(n);
  for (Point x = 0; x < n; ++x) {
    rotation[x] = static_cast<Point>((x + 1u) % n);
    reflection[x] = static_cast<Point>((n - x) % n);
  }
  return PermGroup(n, {Permutation(rotation), Permutation(reflection)});
}

std::vector<Permutation> PermGroup::elements(std::uint64_t bound) const
{
  if (order() > bound)
    throw Error(ErrorKind::BoundExceeded,
                "group of order " + order().str() + " exceeds element bound " +
                std::to_string(bound));
  return chain().elements();
}

bool PermGroup::same_group(PermGroup const &other) const
{
  if (_degree != other._degree || order() != other.order())
    return false;
  return std::all_of(other._generators.begin(), other._generators.end(),
                     [&](Permutation const &g) { return contains(g); });
}

std::string PermGroup::to_string() const
{
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < _generators.size(); ++i)
    os << (i ? ", " : "") << _generators[i];
  os << ">";
  return os.str();
}

SubgroupPair::SubgroupPair(PermGroup parent_, PermGroup sub_)
: parent(std::move(parent_)), sub(std::move(sub_))
{ require_subgroup(parent, sub); }

void TransitiveGSet::validate() const
{
  for (auto const &g : gen_images)
    if (g.degree() != degree)
      throw Error(ErrorKind::DegreeMismatch, "action image of wrong degree");

  if (degree == 0u)
    throw Error(ErrorKind::IntransitiveAction, "empty G-set");

  std::vector<bool> seen(degree, false);
  std::vector<Point> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    Point x = stack.back();
    stack.pop_back();
    for (auto const &g : gen_images) {
      Point y = g[x];
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }

  if (count != degree)
    throw Error(ErrorKind::IntransitiveAction,
                "orbit of point 1 has " + std::to_string(count) + " of " +
                std::to_string(degree) + " points");
}

BigInt group_order(PermGroup const &g)
{ return g.order(); }

bool contains(PermGroup const &g, Permutation const &p)
{ return g.contains(p); }

bool is_subgroup(PermGroup const &g, PermGroup const &h)
{
  if (g.degree() != h.degree())
    return false;
  return std::all_of(h.generators().begin(), h.generators().end(),
                     [&](Permutation const &x) { return g.contains(x); });
}

void require_subgroup(PermGroup const &g, PermGroup const &h,
                      std::string const &what)
{
  if (g.degree() != h.degree())
    throw Error(ErrorKind::NotASubgroup,
                what + " has degree " + std::to_string(h.degree()) +
                ", group has degree " + std::to_string(g.degree()));

  for (auto const &x : h.generators())
    if (!g.contains(x))
      throw Error(ErrorKind::NotASubgroup,
                  what + " generator " + x.to_string() + " is not in the group");
}

PermGroup join(PermGroup const &a, PermGroup const &b)
{
  if (a.degree() != b.degree())
    throw Error(ErrorKind::DegreeMismatch, "join of groups of different degree");

  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return PermGroup(a.degree(), std::move(gens));
}

namespace
{

// Smallest generating set found greedily from a list of elements.
PermGroup group_from_elements(std::size_t degree,
                              std::vector<Permutation> const &elems)
{
  PermGroup res = PermGroup::trivial(degree);
  for (auto const &x : elems) {
    if (res.contains(x))
      continue;
    auto gens = res.generators();
    gens.push_back(x);
    res = PermGroup(degree, std::move(gens));
  }
  return res;
}

} // anonymous namespace

PermGroup intersection(PermGroup const &a, PermGroup const &b,
                       Config const &config)
{
  if (a.degree() != b.degree())
    throw Error(ErrorKind::DegreeMismatch,
                "intersection of groups of different degree");

  bool a_smaller = a.order() <= b.order();
  auto const &small = a_smaller ? a : b;
  auto const &large = a_smaller ? b : a;

  std::vector<Permutation> common;
  for (auto const &x : small.elements(config.element_scan_bound))
    if (large.contains(x))
      common.push_back(x);

  return group_from_elements(a.degree(), common);
}

bool is_normal(PermGroup const &g, PermGroup const &n)
{
  for (auto const &x : n.generators())
    for (auto const &y : g.generators())
      if (!n.contains(conjugate(x, y)))
        return false;
  return true;
}

bool is_abelian(PermGroup const &g)
{
  auto const &gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1u; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i])
        return false;
  return true;
}

Permutation canonical_coset_representative(PermGroup const &h,
                                           Permutation const &x)
{
  auto const &chain = h.chain();
  Permutation current = x;

  for (std::size_t l = 0; l < chain.depth(); ++l) {
    auto const &level = chain.level(l);
    std::size_t best = 0;
    for (std::size_t pos = 1; pos < level.orbit.size(); ++pos)
      if (current[level.orbit[pos]] < current[level.orbit[best]])
        best = pos;
    if (best != 0u)
      current = level.transversal[best] * current;
  }

  return current;
}

std::uint32_t CosetTable::coset_of(PermGroup const &h, Permutation const &x) const
{
  auto it = index.find(canonical_coset_representative(h, x));
  if (it == index.end())
    throw Error(ErrorKind::NotMembers, "element outside the group of the coset table");
  return it->second;
}

Permutation CosetTable::image_of(PermGroup const &h, Permutation const &x) const
{
  std::vector<Point> images(representatives.size());
  for (std::size_t i = 0; i < representatives.size(); ++i)
    images[i] = coset_of(h, representatives[i] * x);
  return Permutation(std::move(images));
}

CosetTable coset_table(PermGroup const &g, PermGroup const &h,
                       Config const &config)
{
  require_subgroup(g, h);

  BigInt index = g.order() / h.order();
  if (index > config.coset_index_cap)
    throw Error(ErrorKind::BoundExceeded,
                "index " + index.str() + " exceeds coset cap " +
                std::to_string(config.coset_index_cap));

  auto const n = static_cast<std::size_t>(index);
  auto const &gens = g.generators();

  CosetTable table;
  table.representatives.reserve(n);
  table.index.reserve(n);

  Permutation first = canonical_coset_representative(h, Permutation(g.degree()));
  table.index.emplace(first, 0u);
  table.representatives.push_back(first);

  std::vector<std::vector<Point>> images(gens.size(), std::vector<Point>(n));

  // Breadth-first over the Schreier graph of the coset action.
  for (std::size_t i = 0; i < table.representatives.size(); ++i) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Permutation y = canonical_coset_representative(
        h, table.representatives[i] * gens[k]);

      auto [it, inserted] = table.index.emplace(
        y, static_cast<std::uint32_t>(table.representatives.size()));
      if (inserted) {
        if (table.representatives.size() >= n)
          throw Error(ErrorKind::DegenerateInput, "coset enumeration overflow");
        table.representatives.push_back(std::move(y));
      }
      images[k][i] = it->second;
    }
  }

  if (table.representatives.size() != n)
    throw Error(ErrorKind::DegenerateInput, "coset enumeration incomplete");

  table.action.degree = n;
  for (auto &img : images)
    table.action.gen_images.push_back(Permutation(std::move(img)));

  return table;
}

PermGroup action_kernel(PermGroup const &g, TransitiveGSet const &action)
{
  if (action.gen_images.size() != g.generators().size())
    throw Error(ErrorKind::ShapeMismatch,
                "action supplies " + std::to_string(action.gen_images.size()) +
                " images for " + std::to_string(g.generators().size()) +
                " generators");

  std::size_t const d = g.degree();
  std::size_t const n = action.degree;

  // The diagonal group <(g_i, phi(g_i))> is isomorphic to G; its pointwise
  // stabilizer of the action points is the kernel.
  std::vector<Permutation> diagonal;
  for (std::size_t k = 0; k < g.generators().size(); ++k) {
    std::vector<Point> images(d + n);
    auto const &x = g.generators()[k];
    auto const &y = action.gen_images[k];
    for (Point p = 0; p < d; ++p)
      images[p] = x[p];
    for (Point p = 0; p < n; ++p)
      images[d + p] = static_cast<Point>(d + y[p]);
    diagonal.push_back(Permutation::from_images_unchecked(std::move(images)));
  }

  StabilizerChain::Options options;
  options.base_domain.resize(n);
  std::iota(options.base_domain.begin(), options.base_domain.end(),
            static_cast<Point>(d));
  options.known_order = g.order();

  StabilizerChain chain(d + n, diagonal, std::move(options));

  std::vector<Permutation> kernel_gens;
  for (auto const &r : chain.residual_generators()) {
    std::vector<Point> images(r.images().begin(), r.images().begin() + d);
    kernel_gens.push_back(Permutation::from_images_unchecked(std::move(images)));
  }

  return PermGroup(d, std::move(kernel_gens));
}

CosetAction coset_action(PermGroup const &g, PermGroup const &h,
                         Config const &config)
{
  auto table = coset_table(g, h, config);

  CosetAction res{table.action,
                  PermGroup(table.action.degree, table.action.gen_images),
                  action_kernel(g, table.action),
                  std::move(table.representatives)};
  return res;
}

PermGroup core(PermGroup const &g, PermGroup const &h, Config const &config)
{
  auto table = coset_table(g, h, config);
  return action_kernel(g, table.action);
}

bool is_core_free(PermGroup const &g, PermGroup const &h, Config const &config)
{ return core(g, h, config).is_trivial(); }

PermGroup normal_closure(PermGroup const &g, std::vector<Permutation> const &s)
{
  for (auto const &x : s) {
    if (x.degree() != g.degree())
      throw Error(ErrorKind::NotMembers, x.to_string() + " has the wrong degree");
    if (!g.contains(x))
      throw Error(ErrorKind::NotMembers, x.to_string() + " is not in the group");
  }

  PermGroup n(g.degree(), s);
  auto gens = n.generators();

  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (auto const &y : g.generators()) {
      Permutation c = conjugate(gens[i], y);
      if (!n.contains(c)) {
        gens.push_back(c);
        n = PermGroup(g.degree(), gens);
      }
    }
  }

  return n;
}

PermGroup centralizer(PermGroup const &g, PermGroup const &n,
                      Config const &config)
{
  require_subgroup(g, n);

  std::vector<Permutation> commuting;
  for (auto const &x : g.elements(config.element_scan_bound)) {
    bool ok = std::all_of(n.generators().begin(), n.generators().end(),
      [&](Permutation const &y) { return x * y == y * x; });
    if (ok)
      commuting.push_back(x);
  }

  return group_from_elements(g.degree(), commuting);
}

PermGroup derived_subgroup(PermGroup const &g)
{
  std::vector<Permutation> commutators;
  auto const &gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1u; j < gens.size(); ++j)
      commutators.push_back(commutator(gens[i], gens[j]));

  return normal_closure(g, commutators);
}

SolvabilityReport solvability(PermGroup const &g)
{
  SolvabilityReport report{true, {g}};

  for (;;) {
    auto const &last = report.series.back();
    if (last.is_trivial())
      return report;

    PermGroup next = derived_subgroup(last);
    if (next.order() == last.order()) {
      report.solvable = false;
      return report;
    }
    report.series.push_back(std::move(next));
  }
}

bool is_solvable(PermGroup const &g)
{ return solvability(g).solvable; }

std::vector<Permutation> class_representatives(PermGroup const &g,
                                               std::uint64_t bound)
{
  auto elems = g.elements(bound);
  std::sort(elems.begin(), elems.end());

  std::unordered_set<Permutation> seen;
  std::vector<Permutation> reps;

  for (auto const &x : elems) {
    if (seen.count(x))
      continue;
    reps.push_back(x);

    std::vector<Permutation> stack{x};
    seen.insert(x);
    while (!stack.empty()) {
      Permutation y = stack.back();
      stack.pop_back();
      for (auto const &s : g.generators()) {
        Permutation z = conjugate(y, s);
        if (seen.insert(z).second)
          stack.push_back(std::move(z));
      }
    }
  }

  return reps;
}

namespace
{

bool group_less(PermGroup const &a, PermGroup const &b)
{
  if (a.order() != b.order())
    return a.order() < b.order();
  return a.generators() < b.generators();
}

} // anonymous namespace

std::vector<PermGroup> minimal_normal_subgroups(PermGroup const &g,
                                                Config const &config)
{
  std::vector<PermGroup> closures;
  for (auto const &x : class_representatives(g, config.element_scan_bound)) {
    if (x.is_identity())
      continue;

    PermGroup n = normal_closure(g, {x});
    bool dup = std::any_of(closures.begin(), closures.end(),
      [&](PermGroup const &m) { return m.same_group(n); });
    if (!dup)
      closures.push_back(std::move(n));
  }

  std::vector<PermGroup> minimal;
  for (auto const &n : closures) {
    bool has_smaller = std::any_of(closures.begin(), closures.end(),
      [&](PermGroup const &m) {
        return m.order() < n.order() && is_subgroup(n, m);
      });
    if (!has_smaller)
      minimal.push_back(n);
  }

  std::sort(minimal.begin(), minimal.end(), group_less);
  return minimal;
}

bool is_subdirectly_irreducible(PermGroup const &g, Config const &config)
{
  if (g.is_trivial())
    throw Error(ErrorKind::DegenerateInput,
                "subdirect irreducibility is undefined for the trivial group");
  return minimal_normal_subgroups(g, config).size() == 1u;
}

bool is_nonabelian_simple(PermGroup const &g, Config const &config)
{
  if (g.is_trivial() || is_abelian(g))
    return false;

  BigInt order = g.order();
  for (auto const &x : class_representatives(g, config.element_scan_bound)) {
    if (x.is_identity())
      continue;
    if (normal_closure(g, {x}).order() != order)
      return false;
  }
  return true;
}

PermGroup direct_product(PermGroup const &g1, PermGroup const &g2)
{
  std::size_t const d1 = g1.degree(), d2 = g2.degree();
  std::vector<Permutation> gens;

  for (auto const &x : g1.generators()) {
    std::vector<Point> images(d1 + d2);
    std::iota(images.begin(), images.end(), Point{0});
    for (Point p = 0; p < d1; ++p)
      images[p] = x[p];
    gens.push_back(Permutation::from_images_unchecked(std::move(images)));
  }
  for (auto const &x : g2.generators()) {
    std::vector<Point> images(d1 + d2);
    std::iota(images.begin(), images.end(), Point{0});
    for (Point p = 0; p < d2; ++p)
      images[d1 + p] = static_cast<Point>(d1 + x[p]);
    gens.push_back(Permutation::from_images_unchecked(std::move(images)));
  }

  return PermGroup(d1 + d2, std::move(gens));
}

std::pair<PermGroup, PermGroup> quotient_by_core(PermGroup const &g,
                                                 PermGroup const &h,
                                                 Config const &config)
{
  auto table = coset_table(g, h, config);

  std::vector<Permutation> h_images;
  for (auto const &x : h.generators())
    h_images.push_back(table.image_of(h, x));

  return {PermGroup(table.action.degree, table.action.gen_images),
          PermGroup(table.action.degree, std::move(h_images))};
}

bool permutes(PermGroup const &g, PermGroup const &a, PermGroup const &b,
              Config const &config)
{
  require_subgroup(g, a, "A");
  require_subgroup(g, b, "B");

  BigInt lhs = join(a, b).order() * intersection(a, b, config).order();
  return lhs == a.order() * b.order();
}

} // namespace gilt
