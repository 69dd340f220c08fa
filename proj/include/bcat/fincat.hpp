// Finite categories presented by explicit composition tables, together
// with functors, natural transformations, limit/colimit searches and the
// handful of constructions everything else is built from.

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bcat/val.hpp"

namespace bcat {

// Raised on precondition violations (unknown identifiers, mismatched
// cospans, tier mismatches). Axiom violations are reported, not thrown.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Accumulates axiom violations; empty means valid.
struct Report {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  void fail(std::string msg) { violations.push_back(std::move(msg)); }
  std::string to_string() const;
};

struct MorphismData {
  std::string name;
  int src = -1;
  int dst = -1;
};

// A finite category: object list, morphism list, identity assignment and
// a total composition table for composable pairs. Construction does basic
// well-formedness checks (throwing Error); the category axioms themselves
// are checked by validate_category, which reports every violation.
class FinCategory {
 public:
  FinCategory() = default;

  int add_object(const std::string& name);
  int add_morphism(const std::string& name, int src, int dst);
  int add_morphism(const std::string& name, const std::string& src, const std::string& dst);
  void set_identity(int obj, int mor);
  void set_compose(int g, int f, int gf);  // g after f

  // Adds identity morphisms named id_<obj> for objects lacking one.
  void ensure_identities();

  int object_count() const { return static_cast<int>(objects_.size()); }
  int morphism_count() const { return static_cast<int>(morphisms_.size()); }
  const std::string& object_name(int i) const { return objects_[i]; }
  const MorphismData& morphism(int m) const { return morphisms_[m]; }
  const std::string& morphism_name(int m) const { return morphisms_[m].name; }
  int src(int m) const { return morphisms_[m].src; }
  int dst(int m) const { return morphisms_[m].dst; }

  int object_index(const std::string& name) const;   // -1 when absent
  int morphism_index(const std::string& name) const; // -1 when absent
  int require_object(const std::string& name) const; // throws
  int require_morphism(const std::string& name) const;

  bool has_identity(int obj) const { return obj < static_cast<int>(identity_.size()) && identity_[obj] >= 0; }
  int identity(int obj) const;
  bool composable(int g, int f) const { return dst(f) == src(g); }
  bool has_compose(int g, int f) const;
  int compose(int g, int f) const;  // throws when undefined

  // Morphisms a -> b in stored order.
  std::vector<int> hom(int a, int b) const;
  bool is_identity(int m) const;

 private:
  std::vector<std::string> objects_;
  std::vector<MorphismData> morphisms_;
  std::vector<int> identity_;
  std::map<std::pair<int, int>, int> compose_;
  std::map<std::string, int> object_index_;
  std::map<std::string, int> morphism_index_;
};

using FinCategoryPtr = std::shared_ptr<const FinCategory>;

struct FinFunctor {
  FinCategoryPtr src;
  FinCategoryPtr dst;
  std::vector<int> object_map;    // per object of src
  std::vector<int> morphism_map;  // per morphism of src

  int on_object(int o) const { return object_map[o]; }
  int on_morphism(int m) const { return morphism_map[m]; }
};

struct FinNatTrans {
  FinFunctor src;
  FinFunctor dst;
  std::vector<int> components;  // per object of src.src: morphism of src.dst
};

// A cone over a cospan (the only diagram shape the limit search needs).
struct PullbackCone {
  int apex = -1;
  int to_src_of_f = -1;  // apex -> src(f)
  int to_src_of_g = -1;  // apex -> src(g)
};

// ---- validation ----

Report validate_category(const FinCategory& c);
Report validate_functor(const FinFunctor& f);
Report validate_nat_trans(const FinNatTrans& n);

// ---- constructions and searches ----

// Identity functor on c (shares the pointer).
FinFunctor identity_functor(const FinCategoryPtr& c);

// g after f; requires f.dst == g.src structurally.
FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f);

// Objects are morphisms into x, morphisms are commuting triangles.
FinCategory slice_category(const FinCategory& c, int x);

// Objects and morphisms are pairs, componentwise composition.
FinCategory product_category(const FinCategory& c, const FinCategory& d);

// Strict pullback of categories along functors with a common target.
FinCategory pullback_of_categories(const FinFunctor& f, const FinFunctor& g);

// Limit search: a terminal cone over the cospan (f, g), verified by
// exhaustive quantification over all competing cones. Deterministic: the
// first apex in stored order carrying a universal cone is returned.
std::optional<PullbackCone> pullback_in(const FinCategory& c, int f, int g);

// Counts factorizations of `cone` through `limit`; universal means 1.
int count_cone_factorizations(const FinCategory& c, int f, int g, const PullbackCone& limit,
                              const PullbackCone& cone);

// Mutually inverse functors when the categories are isomorphic.
struct IsoPair {
  FinFunctor fwd;
  FinFunctor bwd;
};
std::optional<IsoPair> iso_check(const FinCategoryPtr& c, const FinCategoryPtr& d);

// Partition of object indices under the zig-zag closure of "some morphism
// connects them"; classes ordered by least member.
std::vector<std::vector<int>> connected_components(const FinCategory& c);

// ---- the finite-sets fragment ----

// A diagram of finite sets over a finite shape: one element list per
// shape object and one elementwise action per shape morphism.
struct SetDiagram {
  FinCategory shape;
  std::vector<Val::List> value;            // per shape object
  std::vector<std::vector<int>> action;    // per shape morphism: element index map

  Report validate() const;
};

// Colimit of a set diagram: disjoint union of elements quotiented by the
// zig-zag relation generated by the actions. Classes are sorted;
// each element is tagged (object index, element index).
std::vector<std::vector<std::pair<int, int>>> colimit_of_sets(const SetDiagram& d);

// Finite sets and *all* functions between them, as a FinCategory whose
// objects carry element lists. Morphism names encode their graphs.
struct SetCategory {
  FinCategory cat;
  std::vector<Val::List> elements;                 // per object
  std::vector<std::vector<int>> function;          // per morphism

  static SetCategory full_on(const std::vector<std::pair<std::string, Val::List>>& sets);
};

// ---- canonical small categories ----

FinCategory cat_one();    // terminal category
FinCategory cat_two();    // 0 -> 1
FinCategory cat_disc2();  // two objects, identities only
FinCategory cat_par();    // two parallel arrows f,g : 0 -> 1
FinCategory cat_idem_mon();  // one object, {1, e} with e*e = e
FinCategory arrow_category(const FinCategory& c);  // objects are morphisms, morphisms are squares
FinFunctor cod_functor(const FinCategoryPtr& arr, const FinCategoryPtr& c);  // Arr(C) -> C
FinCategory comma_category(const FinCategory& c);  // C/C for identity functors

}  // namespace bcat
