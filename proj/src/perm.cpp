#include "laws/perm.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace laws {

Perm Perm::identity(int degree) {
  if (degree < 1) throw error("permutation degree must be >= 1");
  Perm p;
  p.img_.resize(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) p.img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  return p;
}

Perm Perm::from_images(const std::vector<int>& images) {
  Perm p;
  const int n = static_cast<int>(images.size());
  if (n < 1 || n > 255) throw error("unsupported permutation degree");
  std::vector<bool> seen(images.size(), false);
  p.img_.resize(images.size());
  for (int i = 0; i < n; ++i) {
    int v = images[static_cast<std::size_t>(i)];
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
      throw error("image list is not a bijection");
    seen[static_cast<std::size_t>(v)] = true;
    p.img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v);
  }
  return p;
}

Perm Perm::from_cycles(const std::string& text, int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') throw parse_error("expected '(' in cycle notation");
    ++i;
    std::vector<int> cyc;
    while (i < text.size() && text[i] != ')') {
      if (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw parse_error("expected point number in cycle notation");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      cyc.push_back(v);
    }
    if (i >= text.size()) throw parse_error("unterminated cycle");
    ++i;  // ')'
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      int from = cyc[k];
      int to = cyc[(k + 1) % cyc.size()];
      if (from >= degree || to >= degree) throw parse_error("cycle point exceeds degree");
      images[static_cast<std::size_t>(from)] = to;
    }
  }
  return from_images(images);
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

std::uint64_t Perm::pack() const {
  if (degree() > 16) throw error("pack() supports degree <= 16");
  std::uint64_t key = 0;
  for (int i = degree() - 1; i >= 0; --i) key = (key << 4) | img_[static_cast<std::size_t>(i)];
  return key;
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) throw error("permutation degree mismatch");
  Perm r;
  r.img_.resize(p.img_.size());
  for (int i = 0; i < p.degree(); ++i)
    r.img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(q(p(i)));
  return r;
}

Perm invert(const Perm& p) {
  Perm r;
  r.img_.resize(p.img_.size());
  for (int i = 0; i < p.degree(); ++i)
    r.img_[static_cast<std::size_t>(p(i))] = static_cast<std::uint8_t>(i);
  return r;
}

Perm conjugate(const Perm& g, const Perm& p) {
  return compose(compose(g, p), invert(g));
}

std::uint64_t order(const Perm& p) {
  std::uint64_t result = 1;
  for (int len : cycle_type(p)) result = std::lcm<std::uint64_t>(result, static_cast<std::uint64_t>(len));
  return result;
}

CycleType cycle_type(const Perm& p) {
  CycleType type;
  std::vector<bool> seen(static_cast<std::size_t>(p.degree()), false);
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    int j = i;
    do {
      seen[static_cast<std::size_t>(j)] = true;
      j = p(j);
      ++len;
    } while (j != i);
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

bool is_k_cycle(const Perm& p, int k) {
  CycleType t = cycle_type(p);
  if (t.empty() || t[0] != k) return false;
  for (std::size_t i = 1; i < t.size(); ++i)
    if (t[i] != 1) return false;
  return true;
}

bool has_regular_cycle(const Perm& p) {
  std::uint64_t ord = order(p);
  for (int len : cycle_type(p))
    if (static_cast<std::uint64_t>(len) == ord) return true;
  return false;
}

bool is_even(const Perm& p) {
  int transpositions = 0;
  for (int len : cycle_type(p)) transpositions += len - 1;
  return transpositions % 2 == 0;
}

std::string to_cycle_string(const Perm& p) {
  std::ostringstream os;
  std::vector<bool> seen(static_cast<std::size_t>(p.degree()), false);
  bool any = false;
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[static_cast<std::size_t>(i)] || p(i) == i) {
      seen[static_cast<std::size_t>(i)] = true;
      continue;
    }
    any = true;
    os << '(';
    int j = i;
    bool first = true;
    do {
      if (!first) os << ' ';
      first = false;
      os << j;
      seen[static_cast<std::size_t>(j)] = true;
      j = p(j);
    } while (j != i);
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

std::string to_oneline_string(const Perm& p) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < p.degree(); ++i) {
    if (i) os << ',';
    os << p(i);
  }
  os << ']';
  return os.str();
}

Perm parse_perm(const std::string& text, int degree) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '[') {
    std::vector<int> images;
    ++i;
    int v = 0;
    bool in_num = false;
    for (; i < text.size(); ++i) {
      char c = text[i];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        v = v * 10 + (c - '0');
        in_num = true;
      } else if (c == ',' || c == ']' || std::isspace(static_cast<unsigned char>(c))) {
        if (in_num) images.push_back(v);
        v = 0;
        in_num = false;
        if (c == ']') break;
      } else {
        throw parse_error("invalid character in image list");
      }
    }
    if (degree != 0 && degree != static_cast<int>(images.size()))
      throw parse_error("image list length does not match degree");
    return Perm::from_images(images);
  }
  if (degree <= 0) throw parse_error("cycle notation requires an explicit degree");
  return Perm::from_cycles(text, degree);
}

std::vector<std::vector<int>> orbits(const std::vector<Perm>& gens) {
  if (gens.empty()) throw error("orbits requires at least one generator");
  const int n = gens[0].degree();
  for (const Perm& g : gens)
    if (g.degree() != n) throw error("permutation degree mismatch");
  std::vector<int> root(static_cast<std::size_t>(n));
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[static_cast<std::size_t>(x)] != x) {
      root[static_cast<std::size_t>(x)] = root[static_cast<std::size_t>(root[static_cast<std::size_t>(x)])];
      x = root[static_cast<std::size_t>(x)];
    }
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) root[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  };
  for (const Perm& g : gens)
    for (int i = 0; i < n; ++i) unite(i, g(i));
  std::map<int, std::vector<int>> buckets;
  for (int i = 0; i < n; ++i) buckets[find(i)].push_back(i);
  std::vector<std::vector<int>> result;
  result.reserve(buckets.size());
  for (auto& [_, pts] : buckets) result.push_back(std::move(pts));
  return result;
}

namespace {

// Union-find refinement from a seed pair: the coarsest G-congruence that
// identifies the seed points.
std::vector<int> refine_congruence(const std::vector<Perm>& gens, int a, int b) {
  const int n = gens[0].degree();
  std::vector<int> root(static_cast<std::size_t>(n));
  std::iota(root.begin(), root.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (root[static_cast<std::size_t>(x)] != x) {
      root[static_cast<std::size_t>(x)] = root[static_cast<std::size_t>(root[static_cast<std::size_t>(x)])];
      x = root[static_cast<std::size_t>(x)];
    }
    return x;
  };
  std::vector<std::pair<int, int>> queue;
  auto unite = [&](int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    root[static_cast<std::size_t>(std::max(x, y))] = std::min(x, y);
    queue.emplace_back(x, y);
  };
  unite(a, b);
  while (!queue.empty()) {
    auto [x, y] = queue.back();
    queue.pop_back();
    for (const Perm& g : gens) unite(g(x), g(y));
  }
  for (int i = 0; i < n; ++i) find(i);
  std::vector<int> cls(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) cls[static_cast<std::size_t>(i)] = find(i);
  return cls;
}

}  // namespace

std::optional<std::vector<std::vector<int>>> minimal_block_system(const std::vector<Perm>& gens) {
  if (gens.empty()) throw error("minimal_block_system requires generators");
  const int n = gens[0].degree();
  if (orbits(gens).size() != 1) throw error("minimal_block_system requires a transitive action");
  for (int x = 1; x < n; ++x) {
    std::vector<int> cls = refine_congruence(gens, 0, x);
    std::map<int, std::vector<int>> blocks;
    for (int i = 0; i < n; ++i) blocks[cls[static_cast<std::size_t>(i)]].push_back(i);
    std::size_t size = blocks.begin()->second.size();
    if (size > 1 && size < static_cast<std::size_t>(n)) {
      std::vector<std::vector<int>> result;
      result.reserve(blocks.size());
      for (auto& [_, pts] : blocks) result.push_back(std::move(pts));
      return result;
    }
  }
  return std::nullopt;
}

std::vector<Perm> generate_subgroup(const std::vector<Perm>& gens, std::size_t cap) {
  if (gens.empty()) throw error("generate_subgroup requires generators");
  const int n = gens[0].degree();
  if (n > 16) throw error("generate_subgroup supports degree <= 16");
  std::vector<Perm> elements;
  std::unordered_set<std::uint64_t> seen;
  Perm id = Perm::identity(n);
  elements.push_back(id);
  seen.insert(id.pack());
  for (std::size_t head = 0; head < elements.size(); ++head) {
    Perm current = elements[head];
    for (const Perm& g : gens) {
      Perm next = compose(current, g);
      if (seen.insert(next.pack()).second) {
        if (elements.size() >= cap)
          throw scale_error("subgroup closure exceeds cap " + std::to_string(cap));
        elements.push_back(std::move(next));
      }
    }
  }
  return elements;
}

std::string to_string(SubgroupCase c) {
  switch (c) {
    case SubgroupCase::full_sym: return "full_sym";
    case SubgroupCase::alt: return "alt";
    case SubgroupCase::intransitive: return "intransitive";
    case SubgroupCase::imprimitive: return "imprimitive";
    case SubgroupCase::product_action_suspect: return "product_action_suspect";
    case SubgroupCase::small: return "small";
    case SubgroupCase::unknown: return "unknown";
  }
  return "unknown";
}

SubgroupReport classify(const std::vector<Perm>& gens, std::size_t closure_cap, int max_degree) {
  if (gens.empty()) throw error("classify requires generators");
  SubgroupReport report;
  report.degree = gens[0].degree();
  if (report.degree > max_degree)
    throw scale_error("classify degree exceeds cap " + std::to_string(max_degree));
  report.orbit_partition = orbits(gens);
  if (report.orbit_partition.size() > 1) {
    report.label = SubgroupCase::intransitive;
    return report;
  }
  report.blocks = minimal_block_system(gens);
  if (report.blocks) {
    report.label = SubgroupCase::imprimitive;
    return report;
  }
  try {
    std::vector<Perm> closure = generate_subgroup(gens, closure_cap);
    report.order = closure.size();
  } catch (const scale_error&) {
    report.label = SubgroupCase::product_action_suspect;
    return report;
  }
  std::uint64_t full = 1;
  for (int i = 2; i <= report.degree; ++i) full *= static_cast<std::uint64_t>(i);
  bool all_even = true;
  for (const Perm& g : gens) all_even = all_even && is_even(g);
  if (*report.order == full) {
    report.label = SubgroupCase::full_sym;
  } else if (report.degree >= 3 && *report.order == full / 2 && all_even) {
    report.label = SubgroupCase::alt;
  } else {
    report.label = SubgroupCase::small;
  }
  return report;
}

std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> result;
  std::vector<int> current;
  // Parts in non-increasing order.
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      result.push_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return result;
}

std::vector<Perm> conjugacy_class_reps(int n) {
  if (n < 1 || n > 12) throw scale_error("conjugacy_class_reps supports n <= 12");
  std::vector<Perm> reps;
  for (const std::vector<int>& partition : partitions_of(n)) {
    std::vector<int> images(static_cast<std::size_t>(n));
    int base = 0;
    for (int part : partition) {
      for (int i = 0; i < part; ++i)
        images[static_cast<std::size_t>(base + i)] = base + (i + 1) % part;
      base += part;
    }
    reps.push_back(Perm::from_images(images));
  }
  return reps;
}

std::vector<Perm> all_perms(int n) {
  if (n < 1 || n > 10) throw scale_error("all_perms supports n <= 10");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::vector<Perm> result;
  do {
    result.push_back(Perm::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return result;
}

}  // namespace laws
