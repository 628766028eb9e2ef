#include "chimot/roots.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <unordered_set>

namespace chimot {

namespace {

using Vec = std::vector<long long>;
using Mat = std::vector<long long>;  // row-major rank x rank

long long dot(const Vec& a, const Vec& b) {
  long long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<Vec> simple_roots_for(CartanType ct) {
  const int r = ct.rank;
  std::vector<Vec> roots;
  auto unit = [&](int d, int i, long long v) {
    Vec e(d, 0);
    e[i] = v;
    return e;
  };
  switch (ct.family) {
    case CartanFamily::A: {
      for (int i = 0; i < r; ++i) {
        Vec v(r + 1, 0);
        v[i] = 1;
        v[i + 1] = -1;
        roots.push_back(v);
      }
      break;
    }
    case CartanFamily::B: {
      for (int i = 0; i + 1 < r; ++i) {
        Vec v(r, 0);
        v[i] = 1;
        v[i + 1] = -1;
        roots.push_back(v);
      }
      roots.push_back(unit(r, r - 1, 1));
      break;
    }
    case CartanFamily::C: {
      for (int i = 0; i + 1 < r; ++i) {
        Vec v(r, 0);
        v[i] = 1;
        v[i + 1] = -1;
        roots.push_back(v);
      }
      roots.push_back(unit(r, r - 1, 2));
      break;
    }
    case CartanFamily::D: {
      for (int i = 0; i + 1 < r; ++i) {
        Vec v(r, 0);
        v[i] = 1;
        v[i + 1] = -1;
        roots.push_back(v);
      }
      Vec v(r, 0);
      v[r - 2] = 1;
      v[r - 1] = 1;
      roots.push_back(v);
      break;
    }
    case CartanFamily::G: {
      roots.push_back({1, -1, 0});
      roots.push_back({-2, 1, 1});
      break;
    }
    case CartanFamily::F: {
      // Doubled lattice: entries are 2x the usual half-integer realization.
      roots.push_back({0, 2, -2, 0});
      roots.push_back({0, 0, 2, -2});
      roots.push_back({0, 0, 0, 2});
      roots.push_back({1, -1, -1, -1});
      break;
    }
    case CartanFamily::E: {
      // Doubled lattice, Bourbaki numbering: chain 1-3-4-5-6, node 2 on 4.
      roots.push_back({1, -1, -1, -1, -1, -1, -1, 1});
      roots.push_back({2, 2, 0, 0, 0, 0, 0, 0});
      roots.push_back({-2, 2, 0, 0, 0, 0, 0, 0});
      roots.push_back({0, -2, 2, 0, 0, 0, 0, 0});
      roots.push_back({0, 0, -2, 2, 0, 0, 0, 0});
      roots.push_back({0, 0, 0, -2, 2, 0, 0, 0});
      break;
    }
  }
  return roots;
}

// s_a(x) = x - (2(x,a)/(a,a)) a; integral on the root set.
Vec reflect(const Vec& x, const Vec& alpha) {
  long long num = 2 * dot(x, alpha);
  long long den = dot(alpha, alpha);
  if (num % den != 0)
    throw std::logic_error("non-integral Cartan pairing; broken root realization");
  long long k = num / den;
  Vec y = x;
  for (size_t i = 0; i < y.size(); ++i) y[i] -= k * alpha[i];
  return y;
}

long long count_roots(const std::vector<Vec>& simples) {
  std::set<Vec> roots;
  std::deque<Vec> queue;
  auto add = [&](const Vec& v) {
    if (roots.insert(v).second) queue.push_back(v);
  };
  for (const auto& a : simples) {
    add(a);
    Vec neg = a;
    for (auto& c : neg) c = -c;
    add(neg);
  }
  while (!queue.empty()) {
    Vec x = std::move(queue.front());
    queue.pop_front();
    for (const auto& a : simples) {
      Vec y = reflect(x, a);
      if (roots.insert(y).second) queue.push_back(y);
    }
  }
  return static_cast<long long>(roots.size());
}

struct MatHash {
  size_t operator()(const Mat& m) const {
    uint64_t h = 1469598103934665603ull;
    for (long long v : m) {
      h ^= static_cast<uint64_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

Mat mat_identity(int r) {
  Mat m(static_cast<size_t>(r) * r, 0);
  for (int i = 0; i < r; ++i) m[static_cast<size_t>(i) * r + i] = 1;
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b, int r) {
  Mat c(static_cast<size_t>(r) * r, 0);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      long long aik = a[static_cast<size_t>(i) * r + k];
      if (aik == 0) continue;
      for (int j = 0; j < r; ++j)
        c[static_cast<size_t>(i) * r + j] += aik * b[static_cast<size_t>(k) * r + j];
    }
  return c;
}

}  // namespace

RootSystem build_root_system(CartanType ct) {
  if (!cartan_shape_ok(ct))
    throw EvalError("invalid Cartan type " + cartan_to_string(ct));
  if (!cartan_supported(ct))
    throw EvalError("Cartan type " + cartan_to_string(ct) +
                    " is outside the enumeration cap (|W| <= 60000: A<=7, B<=6, C<=6, D<=6, "
                    "G2, F4, E6)");

  RootSystem rs;
  rs.cartan = ct;
  rs.simple_roots = simple_roots_for(ct);

  const int r = ct.rank;
  rs.cartan_matrix.assign(r, std::vector<long long>(r, 0));
  for (int i = 0; i < r; ++i) {
    long long aii = dot(rs.simple_roots[i], rs.simple_roots[i]);
    for (int j = 0; j < r; ++j) {
      long long num = 2 * dot(rs.simple_roots[i], rs.simple_roots[j]);
      if (num % aii != 0)
        throw std::logic_error("non-integral Cartan matrix; broken root realization");
      rs.cartan_matrix[i][j] = num / aii;
    }
  }

  rs.positive_root_count = count_roots(rs.simple_roots) / 2;
  return rs;
}

WeylData weyl_enumerate(const RootSystem& rs) {
  const int r = rs.cartan.rank;

  // Simple reflections on the root lattice in the simple-root basis:
  // s_i replaces coordinate i by v_i - sum_j C[i][j] v_j.
  std::vector<Mat> gens;
  for (int i = 0; i < r; ++i) {
    Mat s = mat_identity(r);
    for (int j = 0; j < r; ++j)
      s[static_cast<size_t>(i) * r + j] -= rs.cartan_matrix[i][j];
    gens.push_back(std::move(s));
  }

  WeylData wd;
  wd.length_counts.assign(static_cast<size_t>(rs.positive_root_count) + 1, 0);

  std::unordered_set<Mat, MatHash> seen;
  std::deque<std::pair<Mat, int>> queue;
  Mat id = mat_identity(r);
  seen.insert(id);
  queue.emplace_back(std::move(id), 0);

  while (!queue.empty()) {
    auto [w, len] = std::move(queue.front());
    queue.pop_front();
    if (len >= static_cast<int>(wd.length_counts.size()))
      throw std::logic_error("Coxeter length exceeded the positive root count");
    ++wd.length_counts[len];
    ++wd.order;
    if (wd.order > 60000)
      throw EvalError("Weyl enumeration exceeded the 60000-element cap for " +
                      cartan_to_string(rs.cartan));
    for (const Mat& s : gens) {
      Mat next = mat_mul(w, s, r);
      if (seen.insert(next).second) queue.emplace_back(std::move(next), len + 1);
    }
  }
  return wd;
}

std::string length_counts_to_json(const WeylData& wd) {
  nlohmann::json arr = nlohmann::json::array();
  for (long long c : wd.length_counts) arr.push_back(c);
  return arr.dump();
}

namespace {

std::mutex cache_mutex;

}  // namespace

std::shared_ptr<const RootSystem> root_system(CartanType ct) {
  static std::map<CartanType, std::shared_ptr<const RootSystem>> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find(ct);
  if (it != cache.end()) return it->second;
  auto rs = std::make_shared<const RootSystem>(build_root_system(ct));
  cache.emplace(ct, rs);
  return rs;
}

std::shared_ptr<const WeylData> weyl_data(CartanType ct) {
  static std::map<CartanType, std::shared_ptr<const WeylData>> cache;
  auto rs = root_system(ct);
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find(ct);
  if (it != cache.end()) return it->second;
  auto wd = std::make_shared<const WeylData>(weyl_enumerate(*rs));
  cache.emplace(ct, wd);
  return wd;
}

GwValue chi_flag(CartanType ct, const FieldModel& m) {
  auto rs = root_system(ct);
  auto wd = weyl_data(ct);
  const long long n = rs->positive_root_count;
  long long even = 0, odd = 0;  // split by codimension parity
  for (long long l = 0; l <= n; ++l) {
    if ((n - l) % 2 == 0)
      even += wd->length_counts[static_cast<size_t>(l)];
    else
      odd += wd->length_counts[static_cast<size_t>(l)];
  }
  return exact_value(gw_make(even, odd, m), m);
}

GwValue chi_g_mod_t(CartanType ct, const FieldModel& m) { return chi_flag(ct, m); }

GwValue chi_g_mod_normalizer(CartanType ct, const FieldModel& m) {
  // Reduction chain: pass to the connected component, quotient the unipotent
  // radical, then identify G/N(T) with the variety of maximal tori, whose
  // T-fixed locus is the single point eN(T).  The root data are built here
  // so unsupported types fail and the Weyl cache is warm for derivations.
  (void)weyl_data(ct);
  GwValue one = exact_value(gw_one(m), m);
  return value_downgrade(one, m);
}

}  // namespace chimot
