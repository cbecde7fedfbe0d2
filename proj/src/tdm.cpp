#include "mdred/tdm.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include "mdred/error.hpp"

namespace mdred {

void ThreeDMInstance::validate() const {
  if (n < 1) throw ArgumentError("3dm: n must be at least 1");
  if (tuples.empty()) throw ArgumentError("3dm: at least one tuple is required");
  for (std::size_t j = 0; j < tuples.size(); ++j) {
    for (int r = 1; r <= 3; ++r) {
      const int c = tuples[j].coordinate(r);
      if (c < 1 || c > n) {
        throw ArgumentError("3dm: tuple " + std::to_string(j + 1) + " coordinate " +
                            std::to_string(c) + " outside [1," + std::to_string(n) + "]");
      }
    }
  }
}

ThreeDMInstance parse_3dm(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool have_header = false;
  int declared_m = 0;
  ThreeDMInstance inst;

  auto read_int = [&](std::istringstream& ls, const char* what) {
    long long v = 0;
    if (!(ls >> v)) throw ParseError(std::string("expected integer ") + what, lineno);
    if (v < -1'000'000 || v > 1'000'000) throw ParseError(std::string(what) + " out of range", lineno);
    return static_cast<int>(v);
  };

  while (std::getline(in, line)) {
    ++lineno;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (!have_header) {
      if (tag != "3dm") throw ParseError("expected header '3dm <n> <m>'", lineno);
      inst.n = read_int(ls, "n");
      declared_m = read_int(ls, "m");
      if (inst.n < 1) throw ParseError("n must be at least 1", lineno);
      if (declared_m < 1) throw ParseError("m must be at least 1", lineno);
      have_header = true;
    } else if (tag == "tuple") {
      Triple t;
      t.x = read_int(ls, "x");
      t.y = read_int(ls, "y");
      t.z = read_int(ls, "z");
      for (int c : {t.x, t.y, t.z}) {
        if (c < 1 || c > inst.n) {
          throw ParseError("coordinate " + std::to_string(c) + " outside [1," +
                               std::to_string(inst.n) + "]",
                           lineno);
        }
      }
      if (static_cast<int>(inst.tuples.size()) == declared_m) {
        throw ParseError("more tuples than the declared " + std::to_string(declared_m), lineno);
      }
      inst.tuples.push_back(t);
    } else {
      throw ParseError("unexpected record '" + tag + "'", lineno);
    }
    std::string rest;
    if (ls >> rest && rest[0] != '#') throw ParseError("trailing tokens", lineno);
  }
  if (!have_header) throw ParseError("missing header", lineno);
  if (inst.m() != declared_m) {
    throw ParseError("declared " + std::to_string(declared_m) + " tuples, found " +
                         std::to_string(inst.m()),
                     lineno);
  }
  return inst;
}

std::string format_3dm(const ThreeDMInstance& inst) {
  std::ostringstream out;
  out << "3dm " << inst.n << ' ' << inst.m() << '\n';
  for (const Triple& t : inst.tuples) out << "tuple " << t.x << ' ' << t.y << ' ' << t.z << '\n';
  return out.str();
}

namespace {

// std::uniform_int_distribution and std::shuffle are implementation-defined;
// these keep generated corpora identical across standard libraries.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

template <class T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t k = v.size(); k > 1; --k) std::swap(v[k - 1], v[below(rng, k)]);
}

}  // namespace

ThreeDMInstance gen_3dm(int n, int m, std::uint64_t seed, bool planted) {
  if (n < 1 || m < 1) throw ArgumentError("gen3dm: n and m must be at least 1");
  if (planted && m < n) throw ArgumentError("gen3dm: a planted cover needs m >= n");

  std::mt19937_64 rng(seed);
  ThreeDMInstance inst;
  inst.n = n;
  auto coord = [&] { return static_cast<int>(below(rng, static_cast<std::uint64_t>(n))) + 1; };

  if (planted) {
    std::vector<int> sigma(n);
    std::vector<int> tau(n);
    std::iota(sigma.begin(), sigma.end(), 1);
    std::iota(tau.begin(), tau.end(), 1);
    shuffle(sigma, rng);
    shuffle(tau, rng);
    for (int x = 1; x <= n; ++x) inst.tuples.push_back({x, sigma[x - 1], tau[x - 1]});
  }
  while (inst.m() < m) {
    const int x = coord();
    const int y = coord();
    const int z = coord();
    inst.tuples.push_back({x, y, z});
  }
  if (planted) shuffle(inst.tuples, rng);
  return inst;
}

std::optional<std::vector<int>> solve_3dm(const ThreeDMInstance& inst) {
  inst.validate();
  const int n = inst.n;
  std::vector<std::vector<int>> by_first(static_cast<std::size_t>(n) + 1);
  for (int j = 1; j <= inst.m(); ++j) by_first[inst.tuple(j).x].push_back(j);

  std::vector<char> used_y(static_cast<std::size_t>(n) + 1, 0);
  std::vector<char> used_z(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(n));

  auto search = [&](auto&& self, int x) -> bool {
    if (x > n) return true;
    for (int j : by_first[x]) {
      const Triple& t = inst.tuple(j);
      if (used_y[t.y] || used_z[t.z]) continue;
      used_y[t.y] = used_z[t.z] = 1;
      chosen.push_back(j);
      if (self(self, x + 1)) return true;
      chosen.pop_back();
      used_y[t.y] = used_z[t.z] = 0;
    }
    return false;
  };
  if (search(search, 1)) return chosen;
  return std::nullopt;
}

bool is_cover(const ThreeDMInstance& inst, const std::vector<int>& cover) {
  if (static_cast<int>(cover.size()) != inst.n) return false;
  std::vector<int> hits(3 * static_cast<std::size_t>(inst.n), 0);
  for (int j : cover) {
    if (j < 1 || j > inst.m()) return false;
    for (int r = 1; r <= 3; ++r) ++hits[(r - 1) * inst.n + inst.tuple(j).coordinate(r) - 1];
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

}  // namespace mdred
