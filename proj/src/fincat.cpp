#include "bcat/fincat.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

namespace bcat {

// ---- Val ----

bool is_bare_symbol(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char ch : s) {
    unsigned char c = static_cast<unsigned char>(ch);
    if (!(std::isalnum(c) || ch == '_' || ch == '-' || ch == '\'' || ch == '.')) return false;
  }
  return true;
}

std::string Val::show() const {
  if (is_num()) return std::to_string(num_value());
  if (is_str()) {
    const std::string& s = str_value();
    if (is_bare_symbol(s)) return s;
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out.push_back('\\');
      out.push_back(c);
    }
    out.push_back('"');
    return out;
  }
  std::string out = "[";
  bool first = true;
  for (const Val& v : items()) {
    if (!first) out.push_back(',');
    first = false;
    out += v.show();
  }
  out.push_back(']');
  return out;
}

Val::List sorted_set(Val::List xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

// ---- Report ----

std::string Report::to_string() const {
  if (ok()) return "valid";
  std::ostringstream os;
  for (const auto& v : violations) os << v << "\n";
  return os.str();
}

// ---- FinCategory ----

int FinCategory::add_object(const std::string& name) {
  if (object_index_.count(name)) throw Error("duplicate object name: " + name);
  objects_.push_back(name);
  identity_.push_back(-1);
  object_index_[name] = static_cast<int>(objects_.size()) - 1;
  return object_index_[name];
}

int FinCategory::add_morphism(const std::string& name, int src, int dst) {
  if (morphism_index_.count(name)) throw Error("duplicate morphism name: " + name);
  if (src < 0 || src >= object_count() || dst < 0 || dst >= object_count())
    throw Error("morphism " + name + " has an unknown endpoint");
  morphisms_.push_back({name, src, dst});
  morphism_index_[name] = static_cast<int>(morphisms_.size()) - 1;
  return morphism_index_[name];
}

int FinCategory::add_morphism(const std::string& name, const std::string& src,
                              const std::string& dst) {
  return add_morphism(name, require_object(src), require_object(dst));
}

void FinCategory::set_identity(int obj, int mor) {
  if (obj < 0 || obj >= object_count()) throw Error("set_identity: unknown object");
  identity_[obj] = mor;
}

void FinCategory::set_compose(int g, int f, int gf) {
  if (!composable(g, f))
    throw Error("set_compose: " + morphism_name(g) + " after " + morphism_name(f) +
                " is not composable");
  compose_[{g, f}] = gf;
}

void FinCategory::ensure_identities() {
  for (int o = 0; o < object_count(); ++o) {
    if (identity_[o] >= 0) continue;
    int m = add_morphism("id_" + objects_[o], o, o);
    identity_[o] = m;
  }
}

int FinCategory::object_index(const std::string& name) const {
  auto it = object_index_.find(name);
  return it == object_index_.end() ? -1 : it->second;
}

int FinCategory::morphism_index(const std::string& name) const {
  auto it = morphism_index_.find(name);
  return it == morphism_index_.end() ? -1 : it->second;
}

int FinCategory::require_object(const std::string& name) const {
  int i = object_index(name);
  if (i < 0) throw Error("unknown object: " + name);
  return i;
}

int FinCategory::require_morphism(const std::string& name) const {
  int i = morphism_index(name);
  if (i < 0) throw Error("unknown morphism: " + name);
  return i;
}

int FinCategory::identity(int obj) const {
  if (obj < 0 || obj >= object_count() || identity_[obj] < 0)
    throw Error("object has no identity assigned");
  return identity_[obj];
}

bool FinCategory::has_compose(int g, int f) const { return compose_.count({g, f}) > 0; }

int FinCategory::compose(int g, int f) const {
  auto it = compose_.find({g, f});
  if (it == compose_.end())
    throw Error("composite " + morphism_name(g) + " after " + morphism_name(f) + " is undefined");
  return it->second;
}

std::vector<int> FinCategory::hom(int a, int b) const {
  std::vector<int> out;
  for (int m = 0; m < morphism_count(); ++m)
    if (src(m) == a && dst(m) == b) out.push_back(m);
  return out;
}

bool FinCategory::is_identity(int m) const {
  int s = src(m);
  return has_identity(s) && identity_[s] == m;
}

// ---- validation ----

Report validate_category(const FinCategory& c) {
  Report r;
  for (int o = 0; o < c.object_count(); ++o) {
    if (!c.has_identity(o)) {
      r.fail("object " + c.object_name(o) + " has no identity");
      continue;
    }
    int i = c.identity(o);
    if (c.src(i) != o || c.dst(i) != o)
      r.fail("identity of " + c.object_name(o) + " is not an endomorphism");
  }
  for (int f = 0; f < c.morphism_count(); ++f) {
    for (int g = 0; g < c.morphism_count(); ++g) {
      if (!c.composable(g, f)) continue;
      if (!c.has_compose(g, f)) {
        r.fail("composite " + c.morphism_name(g) + " after " + c.morphism_name(f) +
               " is missing");
        continue;
      }
      int gf = c.compose(g, f);
      if (c.src(gf) != c.src(f) || c.dst(gf) != c.dst(g))
        r.fail("composite " + c.morphism_name(g) + " after " + c.morphism_name(f) +
               " has wrong endpoints");
    }
  }
  if (!r.ok()) return r;  // identity/compose tables incomplete: stop here
  for (int f = 0; f < c.morphism_count(); ++f) {
    int lf = c.identity(c.dst(f));
    if (c.compose(lf, f) != f)
      r.fail("identity law violated: " + c.morphism_name(lf) + " after " + c.morphism_name(f));
    int rf = c.identity(c.src(f));
    if (c.compose(f, rf) != f)
      r.fail("identity law violated: " + c.morphism_name(f) + " after " + c.morphism_name(rf));
  }
  for (int f = 0; f < c.morphism_count(); ++f)
    for (int g = 0; g < c.morphism_count(); ++g) {
      if (!c.composable(g, f)) continue;
      for (int h = 0; h < c.morphism_count(); ++h) {
        if (!c.composable(h, g)) continue;
        if (c.compose(c.compose(h, g), f) != c.compose(h, c.compose(g, f)))
          r.fail("associativity violated on (" + c.morphism_name(h) + ", " + c.morphism_name(g) +
                 ", " + c.morphism_name(f) + ")");
      }
    }
  return r;
}

Report validate_functor(const FinFunctor& f) {
  Report r;
  const FinCategory& s = *f.src;
  const FinCategory& d = *f.dst;
  if (static_cast<int>(f.object_map.size()) != s.object_count() ||
      static_cast<int>(f.morphism_map.size()) != s.morphism_count()) {
    r.fail("functor tables have wrong size");
    return r;
  }
  for (int m = 0; m < s.morphism_count(); ++m) {
    int fm = f.morphism_map[m];
    if (d.src(fm) != f.object_map[s.src(m)] || d.dst(fm) != f.object_map[s.dst(m)])
      r.fail("functor breaks endpoints on " + s.morphism_name(m));
  }
  for (int o = 0; o < s.object_count(); ++o)
    if (f.morphism_map[s.identity(o)] != d.identity(f.object_map[o]))
      r.fail("functor breaks identity of " + s.object_name(o));
  for (int m = 0; m < s.morphism_count(); ++m)
    for (int n = 0; n < s.morphism_count(); ++n) {
      if (!s.composable(n, m)) continue;
      if (f.morphism_map[s.compose(n, m)] !=
          d.compose(f.morphism_map[n], f.morphism_map[m]))
        r.fail("functor breaks composition on (" + s.morphism_name(n) + ", " +
               s.morphism_name(m) + ")");
    }
  return r;
}

Report validate_nat_trans(const FinNatTrans& n) {
  Report r;
  const FinCategory& s = *n.src.src;
  const FinCategory& d = *n.src.dst;
  if (n.src.src != n.dst.src || n.src.dst != n.dst.dst) {
    r.fail("natural transformation endpoints disagree");
    return r;
  }
  if (static_cast<int>(n.components.size()) != s.object_count()) {
    r.fail("component table has wrong size");
    return r;
  }
  for (int o = 0; o < s.object_count(); ++o) {
    int c = n.components[o];
    if (d.src(c) != n.src.object_map[o] || d.dst(c) != n.dst.object_map[o])
      r.fail("component at " + s.object_name(o) + " has wrong endpoints");
  }
  if (!r.ok()) return r;
  for (int m = 0; m < s.morphism_count(); ++m) {
    int a = s.src(m), b = s.dst(m);
    int lhs = d.compose(n.components[b], n.src.morphism_map[m]);
    int rhs = d.compose(n.dst.morphism_map[m], n.components[a]);
    if (lhs != rhs) r.fail("naturality fails at " + s.morphism_name(m));
  }
  return r;
}

// ---- constructions ----

FinFunctor identity_functor(const FinCategoryPtr& c) {
  FinFunctor f;
  f.src = c;
  f.dst = c;
  f.object_map.resize(c->object_count());
  std::iota(f.object_map.begin(), f.object_map.end(), 0);
  f.morphism_map.resize(c->morphism_count());
  std::iota(f.morphism_map.begin(), f.morphism_map.end(), 0);
  return f;
}

FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f) {
  if (f.dst != g.src) throw Error("compose_functors: middle categories differ");
  FinFunctor h;
  h.src = f.src;
  h.dst = g.dst;
  for (int o : f.object_map) h.object_map.push_back(g.object_map[o]);
  for (int m : f.morphism_map) h.morphism_map.push_back(g.morphism_map[m]);
  return h;
}

FinCategory slice_category(const FinCategory& c, int x) {
  if (x < 0 || x >= c.object_count()) throw Error("slice_category: unknown object");
  FinCategory s;
  std::vector<int> obj_mor;  // slice object index -> morphism of c into x
  for (int m = 0; m < c.morphism_count(); ++m) {
    if (c.dst(m) != x) continue;
    s.add_object(c.morphism_name(m));
    obj_mor.push_back(m);
  }
  // a morphism (a: A -> x) -> (b: B -> x) is t: A -> B with b t = a
  std::vector<std::tuple<int, int, int>> tri;  // (slice src, slice dst, t)
  for (int i = 0; i < static_cast<int>(obj_mor.size()); ++i)
    for (int j = 0; j < static_cast<int>(obj_mor.size()); ++j) {
      int a = obj_mor[i], b = obj_mor[j];
      for (int t = 0; t < c.morphism_count(); ++t) {
        if (c.src(t) != c.src(a) || c.dst(t) != c.src(b)) continue;
        if (c.compose(b, t) != a) continue;
        int m = s.add_morphism("tri_" + c.morphism_name(t) + "_" + std::to_string(i) + "_" +
                                   std::to_string(j),
                               i, j);
        tri.emplace_back(i, j, t);
        if (t == c.identity(c.src(a)) && i == j) s.set_identity(i, m);
      }
    }
  for (int m1 = 0; m1 < s.morphism_count(); ++m1)
    for (int m2 = 0; m2 < s.morphism_count(); ++m2) {
      if (!s.composable(m2, m1)) continue;
      int t = c.compose(std::get<2>(tri[m2]), std::get<2>(tri[m1]));
      // find the triangle with the same underlying morphism and endpoints
      for (int m3 = 0; m3 < s.morphism_count(); ++m3)
        if (std::get<2>(tri[m3]) == t && std::get<0>(tri[m3]) == std::get<0>(tri[m1]) &&
            std::get<1>(tri[m3]) == std::get<1>(tri[m2])) {
          s.set_compose(m2, m1, m3);
          break;
        }
    }
  return s;
}

FinCategory product_category(const FinCategory& c, const FinCategory& d) {
  FinCategory p;
  for (int i = 0; i < c.object_count(); ++i)
    for (int j = 0; j < d.object_count(); ++j)
      p.add_object("(" + c.object_name(i) + "," + d.object_name(j) + ")");
  auto obj = [&](int i, int j) { return i * d.object_count() + j; };
  std::vector<std::pair<int, int>> comp;
  for (int m = 0; m < c.morphism_count(); ++m)
    for (int n = 0; n < d.morphism_count(); ++n) {
      int idx = p.add_morphism("(" + c.morphism_name(m) + "," + d.morphism_name(n) + ")",
                               obj(c.src(m), d.src(n)), obj(c.dst(m), d.dst(n)));
      comp.emplace_back(m, n);
      if (c.is_identity(m) && d.is_identity(n)) p.set_identity(obj(c.src(m), d.src(n)), idx);
    }
  auto mor = [&](int m, int n) { return m * d.morphism_count() + n; };
  for (int a = 0; a < p.morphism_count(); ++a)
    for (int b = 0; b < p.morphism_count(); ++b) {
      if (!p.composable(b, a)) continue;
      auto [m1, n1] = comp[a];
      auto [m2, n2] = comp[b];
      p.set_compose(b, a, mor(c.compose(m2, m1), d.compose(n2, n1)));
    }
  return p;
}

FinCategory pullback_of_categories(const FinFunctor& f, const FinFunctor& g) {
  if (f.dst != g.dst) throw Error("pullback_of_categories: targets differ");
  const FinCategory& c = *f.src;
  const FinCategory& d = *g.src;
  FinCategory p;
  std::vector<std::pair<int, int>> objs, mors;
  for (int i = 0; i < c.object_count(); ++i)
    for (int j = 0; j < d.object_count(); ++j)
      if (f.object_map[i] == g.object_map[j]) {
        p.add_object("(" + c.object_name(i) + "," + d.object_name(j) + ")");
        objs.emplace_back(i, j);
      }
  auto obj_of = [&](int i, int j) {
    for (int k = 0; k < static_cast<int>(objs.size()); ++k)
      if (objs[k] == std::make_pair(i, j)) return k;
    return -1;
  };
  for (int m = 0; m < c.morphism_count(); ++m)
    for (int n = 0; n < d.morphism_count(); ++n)
      if (f.morphism_map[m] == g.morphism_map[n] && obj_of(c.src(m), d.src(n)) >= 0 &&
          obj_of(c.dst(m), d.dst(n)) >= 0) {
        int idx = p.add_morphism("(" + c.morphism_name(m) + "," + d.morphism_name(n) + ")",
                                 obj_of(c.src(m), d.src(n)), obj_of(c.dst(m), d.dst(n)));
        mors.emplace_back(m, n);
        if (c.is_identity(m) && d.is_identity(n)) p.set_identity(obj_of(c.src(m), d.src(n)), idx);
      }
  auto mor_of = [&](int m, int n) {
    for (int k = 0; k < static_cast<int>(mors.size()); ++k)
      if (mors[k] == std::make_pair(m, n)) return k;
    return -1;
  };
  for (int a = 0; a < p.morphism_count(); ++a)
    for (int b = 0; b < p.morphism_count(); ++b) {
      if (!p.composable(b, a)) continue;
      auto [m1, n1] = mors[a];
      auto [m2, n2] = mors[b];
      p.set_compose(b, a, mor_of(c.compose(m2, m1), d.compose(n2, n1)));
    }
  return p;
}

int count_cone_factorizations(const FinCategory& c, int f, int g, const PullbackCone& limit,
                              const PullbackCone& cone) {
  int n = 0;
  for (int t = 0; t < c.morphism_count(); ++t) {
    if (c.src(t) != cone.apex || c.dst(t) != limit.apex) continue;
    if (c.compose(limit.to_src_of_f, t) == cone.to_src_of_f &&
        c.compose(limit.to_src_of_g, t) == cone.to_src_of_g)
      ++n;
  }
  return n;
}

std::optional<PullbackCone> pullback_in(const FinCategory& c, int f, int g) {
  if (c.dst(f) != c.dst(g)) throw Error("pullback_in: not a cospan");
  // all cones over the cospan
  std::vector<PullbackCone> cones;
  for (int p = 0; p < c.morphism_count(); ++p) {
    if (c.dst(p) != c.src(f)) continue;
    for (int q = 0; q < c.morphism_count(); ++q) {
      if (c.dst(q) != c.src(g) || c.src(q) != c.src(p)) continue;
      if (c.compose(f, p) == c.compose(g, q)) cones.push_back({c.src(p), p, q});
    }
  }
  for (const PullbackCone& cand : cones) {
    bool universal = true;
    for (const PullbackCone& other : cones)
      if (count_cone_factorizations(c, f, g, cand, other) != 1) {
        universal = false;
        break;
      }
    if (universal) return cand;
  }
  return std::nullopt;
}

// ---- isomorphism search ----

namespace {

// Extends an object bijection to morphisms hom-by-hom, backtracking on
// composition compatibility.
bool extend_morphisms(const FinCategory& c, const FinCategory& d, const std::vector<int>& obj_map,
                      std::vector<int>& mor_map, int next) {
  if (next == c.morphism_count()) {
    for (int m = 0; m < c.morphism_count(); ++m)
      for (int n = 0; n < c.morphism_count(); ++n) {
        if (!c.composable(n, m)) continue;
        if (mor_map[c.compose(n, m)] != d.compose(mor_map[n], mor_map[m])) return false;
      }
    return true;
  }
  int a = obj_map[c.src(next)], b = obj_map[c.dst(next)];
  for (int image : d.hom(a, b)) {
    bool used = false;
    for (int k = 0; k < next; ++k)
      if (mor_map[k] == image) {
        used = true;
        break;
      }
    if (used) continue;
    if (c.is_identity(next) != d.is_identity(image)) continue;
    mor_map[next] = image;
    // partial composition check against already-assigned morphisms
    bool ok = true;
    for (int k = 0; k <= next && ok; ++k) {
      if (c.composable(next, k) && c.compose(next, k) <= next &&
          d.compose(mor_map[next], mor_map[k]) != mor_map[c.compose(next, k)])
        ok = false;
      if (ok && c.composable(k, next) && c.compose(k, next) <= next &&
          d.compose(mor_map[k], mor_map[next]) != mor_map[c.compose(k, next)])
        ok = false;
    }
    if (ok && extend_morphisms(c, d, obj_map, mor_map, next + 1)) return true;
    mor_map[next] = -1;
  }
  return false;
}

bool object_permutations(const FinCategory& c, const FinCategory& d, std::vector<int>& obj_map,
                         std::vector<bool>& used, int next, std::vector<int>& mor_map) {
  if (next == c.object_count()) {
    std::fill(mor_map.begin(), mor_map.end(), -1);
    return extend_morphisms(c, d, obj_map, mor_map, 0);
  }
  for (int t = 0; t < d.object_count(); ++t) {
    if (used[t]) continue;
    // degree profile pruning
    bool feasible = true;
    for (int k = 0; k <= next && feasible; ++k) {
      int s = (k == next) ? t : obj_map[k];
      if (c.hom(next, k).size() != d.hom(t, s).size()) feasible = false;
      if (k != next && c.hom(k, next).size() != d.hom(obj_map[k], t).size()) feasible = false;
    }
    if (!feasible) continue;
    obj_map[next] = t;
    used[t] = true;
    if (object_permutations(c, d, obj_map, used, next + 1, mor_map)) return true;
    used[t] = false;
  }
  return false;
}

}  // namespace

std::optional<IsoPair> iso_check(const FinCategoryPtr& c, const FinCategoryPtr& d) {
  if (c->object_count() != d->object_count() || c->morphism_count() != d->morphism_count())
    return std::nullopt;
  std::vector<int> obj_map(c->object_count(), -1), mor_map(c->morphism_count(), -1);
  std::vector<bool> used(d->object_count(), false);
  if (!object_permutations(*c, *d, obj_map, used, 0, mor_map)) return std::nullopt;
  IsoPair iso;
  iso.fwd = {c, d, obj_map, mor_map};
  std::vector<int> obj_inv(obj_map.size()), mor_inv(mor_map.size());
  for (int i = 0; i < static_cast<int>(obj_map.size()); ++i) obj_inv[obj_map[i]] = i;
  for (int i = 0; i < static_cast<int>(mor_map.size()); ++i) mor_inv[mor_map[i]] = i;
  iso.bwd = {d, c, obj_inv, mor_inv};
  return iso;
}

std::vector<std::vector<int>> connected_components(const FinCategory& c) {
  std::vector<int> parent(c.object_count());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int m = 0; m < c.morphism_count(); ++m) {
    int a = find(c.src(m)), b = find(c.dst(m));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<int, std::vector<int>> classes;
  for (int o = 0; o < c.object_count(); ++o) classes[find(o)].push_back(o);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : classes) out.push_back(members);
  return out;
}

// ---- set diagrams ----

Report SetDiagram::validate() const {
  Report r;
  if (static_cast<int>(value.size()) != shape.object_count() ||
      static_cast<int>(action.size()) != shape.morphism_count()) {
    r.fail("set diagram tables have wrong size");
    return r;
  }
  for (int m = 0; m < shape.morphism_count(); ++m) {
    const auto& a = action[m];
    if (a.size() != value[shape.src(m)].size()) {
      r.fail("action of " + shape.morphism_name(m) + " has wrong domain size");
      continue;
    }
    for (int e : a)
      if (e < 0 || e >= static_cast<int>(value[shape.dst(m)].size()))
        r.fail("action of " + shape.morphism_name(m) + " escapes its codomain");
  }
  if (!r.ok()) return r;
  for (int o = 0; o < shape.object_count(); ++o) {
    const auto& a = action[shape.identity(o)];
    for (int e = 0; e < static_cast<int>(a.size()); ++e)
      if (a[e] != e) r.fail("identity action of " + shape.object_name(o) + " moves an element");
  }
  for (int m = 0; m < shape.morphism_count(); ++m)
    for (int n = 0; n < shape.morphism_count(); ++n) {
      if (!shape.composable(n, m)) continue;
      const auto& am = action[m];
      const auto& an = action[n];
      const auto& anm = action[shape.compose(n, m)];
      for (int e = 0; e < static_cast<int>(am.size()); ++e)
        if (an[am[e]] != anm[e])
          r.fail("set diagram breaks composition on (" + shape.morphism_name(n) + ", " +
                 shape.morphism_name(m) + ")");
    }
  return r;
}

std::vector<std::vector<std::pair<int, int>>> colimit_of_sets(const SetDiagram& d) {
  // union-find over tagged elements
  std::vector<std::pair<int, int>> elems;
  std::map<std::pair<int, int>, int> index;
  for (int o = 0; o < d.shape.object_count(); ++o)
    for (int e = 0; e < static_cast<int>(d.value[o].size()); ++e) {
      index[{o, e}] = static_cast<int>(elems.size());
      elems.emplace_back(o, e);
    }
  std::vector<int> parent(elems.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int m = 0; m < d.shape.morphism_count(); ++m) {
    int a = d.shape.src(m), b = d.shape.dst(m);
    for (int e = 0; e < static_cast<int>(d.value[a].size()); ++e) {
      int u = find(index.at({a, e})), v = find(index.at({b, d.action[m][e]}));
      if (u != v) parent[std::max(u, v)] = std::min(u, v);
    }
  }
  std::map<int, std::vector<std::pair<int, int>>> classes;
  for (int i = 0; i < static_cast<int>(elems.size()); ++i) classes[find(i)].push_back(elems[i]);
  std::vector<std::vector<std::pair<int, int>>> out;
  for (auto& [root, members] : classes) out.push_back(members);
  return out;
}

SetCategory SetCategory::full_on(const std::vector<std::pair<std::string, Val::List>>& sets) {
  SetCategory sc;
  for (const auto& [name, elems] : sets) {
    sc.cat.add_object(name);
    sc.elements.push_back(elems);
  }
  int n = sc.cat.object_count();
  // enumerate every function a -> b
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int da = static_cast<int>(sc.elements[a].size());
      int db = static_cast<int>(sc.elements[b].size());
      if (da > 0 && db == 0) continue;  // no functions into the empty set
      std::vector<int> fn(da, 0);
      while (true) {
        std::string name = "f_" + std::to_string(a) + "_" + std::to_string(b) + "_";
        for (int v : fn) name += std::to_string(v) + "_";
        int m = sc.cat.add_morphism(name, a, b);
        sc.function.push_back(fn);
        if (a == b) {
          bool is_id = true;
          for (int e = 0; e < da; ++e)
            if (fn[e] != e) is_id = false;
          if (is_id) sc.cat.set_identity(a, m);
        }
        // increment
        int i = 0;
        while (i < da) {
          if (++fn[i] < db) break;
          fn[i] = 0;
          ++i;
        }
        if (i == da || da == 0) break;
      }
    }
  for (int m1 = 0; m1 < sc.cat.morphism_count(); ++m1)
    for (int m2 = 0; m2 < sc.cat.morphism_count(); ++m2) {
      if (!sc.cat.composable(m2, m1)) continue;
      std::vector<int> comp(sc.function[m1].size());
      for (int e = 0; e < static_cast<int>(comp.size()); ++e)
        comp[e] = sc.function[m2][sc.function[m1][e]];
      // locate the composite morphism
      int a = sc.cat.src(m1), b = sc.cat.dst(m2);
      for (int m3 = 0; m3 < sc.cat.morphism_count(); ++m3)
        if (sc.cat.src(m3) == a && sc.cat.dst(m3) == b && sc.function[m3] == comp) {
          sc.cat.set_compose(m2, m1, m3);
          break;
        }
    }
  return sc;
}

// ---- canonical categories ----

FinCategory cat_one() {
  FinCategory c;
  c.add_object("star");
  c.ensure_identities();
  c.set_compose(0, 0, 0);
  return c;
}

FinCategory cat_two() {
  FinCategory c;
  c.add_object("0");
  c.add_object("1");
  c.ensure_identities();
  int f = c.add_morphism("f", 0, 1);
  int i0 = c.identity(0), i1 = c.identity(1);
  c.set_compose(i0, i0, i0);
  c.set_compose(i1, i1, i1);
  c.set_compose(f, i0, f);
  c.set_compose(i1, f, f);
  return c;
}

FinCategory cat_disc2() {
  FinCategory c;
  c.add_object("0");
  c.add_object("1");
  c.ensure_identities();
  c.set_compose(c.identity(0), c.identity(0), c.identity(0));
  c.set_compose(c.identity(1), c.identity(1), c.identity(1));
  return c;
}

FinCategory cat_par() {
  FinCategory c;
  c.add_object("0");
  c.add_object("1");
  c.ensure_identities();
  int f = c.add_morphism("f", 0, 1);
  int g = c.add_morphism("g", 0, 1);
  int i0 = c.identity(0), i1 = c.identity(1);
  c.set_compose(i0, i0, i0);
  c.set_compose(i1, i1, i1);
  c.set_compose(f, i0, f);
  c.set_compose(i1, f, f);
  c.set_compose(g, i0, g);
  c.set_compose(i1, g, g);
  return c;
}

FinCategory cat_idem_mon() {
  FinCategory c;
  c.add_object("x");
  c.ensure_identities();
  int e = c.add_morphism("e", 0, 0);
  int i = c.identity(0);
  c.set_compose(i, i, i);
  c.set_compose(i, e, e);
  c.set_compose(e, i, e);
  c.set_compose(e, e, e);
  return c;
}

FinCategory arrow_category(const FinCategory& c) {
  FinCategory a;
  // objects: morphisms of c; morphisms: commuting squares (u, v)
  for (int m = 0; m < c.morphism_count(); ++m) a.add_object(c.morphism_name(m));
  std::vector<std::tuple<int, int>> squares;
  for (int m = 0; m < c.morphism_count(); ++m)
    for (int n = 0; n < c.morphism_count(); ++n)
      for (int u = 0; u < c.morphism_count(); ++u) {
        if (c.src(u) != c.src(m) || c.dst(u) != c.src(n)) continue;
        for (int v = 0; v < c.morphism_count(); ++v) {
          if (c.src(v) != c.dst(m) || c.dst(v) != c.dst(n)) continue;
          if (c.compose(n, u) != c.compose(v, m)) continue;
          int idx = a.add_morphism(
              "sq_" + c.morphism_name(u) + "_" + c.morphism_name(v) + "_" + std::to_string(m) +
                  "_" + std::to_string(n),
              m, n);
          squares.emplace_back(u, v);
          if (m == n && u == c.identity(c.src(m)) && v == c.identity(c.dst(m)))
            a.set_identity(m, idx);
        }
      }
  for (int s1 = 0; s1 < a.morphism_count(); ++s1)
    for (int s2 = 0; s2 < a.morphism_count(); ++s2) {
      if (!a.composable(s2, s1)) continue;
      int u = c.compose(std::get<0>(squares[s2]), std::get<0>(squares[s1]));
      int v = c.compose(std::get<1>(squares[s2]), std::get<1>(squares[s1]));
      for (int s3 = 0; s3 < a.morphism_count(); ++s3)
        if (a.src(s3) == a.src(s1) && a.dst(s3) == a.dst(s2) &&
            squares[s3] == std::make_tuple(u, v)) {
          a.set_compose(s2, s1, s3);
          break;
        }
    }
  return a;
}

FinFunctor cod_functor(const FinCategoryPtr& arr, const FinCategoryPtr& c) {
  FinFunctor f;
  f.src = arr;
  f.dst = c;
  for (int o = 0; o < arr->object_count(); ++o)
    f.object_map.push_back(c->dst(c->require_morphism(arr->object_name(o))));
  f.morphism_map.assign(arr->morphism_count(), -1);
  // replay the square enumeration of arrow_category; the cod component of
  // the k-th square is its v leg
  int k = 0;
  for (int m = 0; m < c->morphism_count(); ++m)
    for (int n = 0; n < c->morphism_count(); ++n)
      for (int u = 0; u < c->morphism_count(); ++u) {
        if (c->src(u) != c->src(m) || c->dst(u) != c->src(n)) continue;
        for (int v = 0; v < c->morphism_count(); ++v) {
          if (c->src(v) != c->dst(m) || c->dst(v) != c->dst(n)) continue;
          if (c->compose(n, u) != c->compose(v, m)) continue;
          f.morphism_map[k++] = v;
        }
      }
  return f;
}

FinCategory comma_category(const FinCategory& c) {
  // identity over identity: same as the arrow category
  return arrow_category(c);
}

}  // namespace bcat
