// Bicategories in two tiers.
//
// ExplicitBicategory tabulates every hom-category, composition functor and
// coherence component, so all axioms are exhaustively checkable. The
// abstract Bicategory interface is what the rest of the library programs
// against; a second implementation (sigma_finset.hpp) provides hom-category
// operations on demand for bases whose hom-categories are too big to
// tabulate. Cell payloads are Vals throughout: strings naming hom-category
// cells on the explicit tier, structured values elsewhere.

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bcat/fincat.hpp"

namespace bcat {

struct OneCell {
  Val src, dst;  // objects
  Val pay;       // object of hom(src,dst)
};

struct TwoCell {
  Val a, b;      // objects: lives in hom(a,b)
  Val from, to;  // 1-cell payloads
  Val pay;       // morphism of hom(a,b)

  friend bool operator==(const TwoCell& x, const TwoCell& y) {
    return x.a == y.a && x.b == y.b && x.from == y.from && x.to == y.to && x.pay == y.pay;
  }
};

struct LocalPullback {
  Val obj;    // 1-cell payload of the vertex
  Val proj1;  // 2-cell payload: vertex => P
  Val proj2;  // 2-cell payload: vertex => Q
};

// A commuting square p;s = q;t in a hom-category, tested for being a
// pullback. All four sides are 2-cell payloads; corners are 1-cells.
struct HomSquare {
  Val vertex, p_corner, q_corner, r_corner;  // 1-cell payloads W, P, Q, R
  Val p, q;                                  // W => P, W => Q
  Val s, t;                                  // P => R, Q => R
};

class Bicategory {
 public:
  virtual ~Bicategory() = default;

  virtual std::string name() const { return "bicategory"; }
  virtual std::vector<Val> objects() const = 0;
  bool has_object(const Val& a) const;
  // explicit tier: hom-categories fully enumerable
  virtual bool is_explicit() const { return false; }

  // identity and composition of 1-cells (cells given as payloads)
  virtual Val id1(const Val& a) const = 0;
  virtual Val comp1(const Val& a, const Val& b, const Val& c, const Val& g,
                    const Val& f) const = 0;

  // hom-category structure on 2-cells
  virtual TwoCell id2(const Val& a, const Val& b, const Val& f) const = 0;
  virtual TwoCell vcomp(const TwoCell& beta, const TwoCell& alpha) const = 0;
  virtual TwoCell hcomp(const TwoCell& beta, const TwoCell& alpha) const = 0;

  // coherence cells
  virtual TwoCell associator(const Val& a, const Val& b, const Val& c, const Val& d, const Val& h,
                             const Val& g, const Val& f) const = 0;  // (h.g).f => h.(g.f)
  virtual TwoCell lunitor(const Val& a, const Val& b, const Val& f) const = 0;  // 1_b.f => f
  virtual TwoCell runitor(const Val& a, const Val& b, const Val& f) const = 0;  // f.1_a => f

  // enumeration. `bound` limits the "size" of 1-cells where hom-categories
  // are infinite; the explicit tier ignores it and returns everything.
  virtual std::vector<Val> one_cells(const Val& a, const Val& b, int bound) const = 0;
  virtual std::vector<Val> two_cells(const Val& a, const Val& b, const Val& f,
                                     const Val& g) const = 0;
  // A family of 1-cells sufficient for universal-property checks: all of
  // them on the explicit tier; a structured generating family elsewhere.
  virtual std::vector<Val> test_one_cells(const Val& a, const Val& b) const;

  // local (hom-category) pullbacks: s : P => R, t : Q => R
  virtual std::optional<LocalPullback> local_pullback(const Val& a, const Val& b,
                                                      const TwoCell& s,
                                                      const TwoCell& t) const = 0;
  virtual bool is_local_pullback(const Val& a, const Val& b, const HomSquare& sq) const;
  // mediating 2-cell W' => vertex for a competing cone (u, v); empty when
  // none exists, throws when not unique (which is_local_pullback rules out)
  virtual std::optional<Val> pullback_tuple(const Val& a, const Val& b, const LocalPullback& pb,
                                            const Val& p_corner, const Val& q_corner,
                                            const Val& w, const Val& u, const Val& v) const;

  // inverse of an invertible 2-cell; nullopt when not invertible
  virtual std::optional<TwoCell> inv2(const TwoCell& t) const;

  // the hom-category as a FinCategory (explicit tier only)
  virtual const FinCategory* hom_cat(const Val& a, const Val& b) const { return nullptr; }

  // ---- non-virtual pasting helpers ----
  TwoCell whisker_l(const Val& b, const Val& c, const Val& g, const TwoCell& alpha) const;
  TwoCell whisker_r(const TwoCell& beta, const Val& a, const Val& b, const Val& f) const;
  TwoCell mk2(const Val& a, const Val& b, const Val& from, const Val& to, const Val& pay) const {
    return TwoCell{a, b, from, to, pay};
  }
  TwoCell inv2_or_throw(const TwoCell& t) const;
  TwoCell lunitor_inv(const Val& a, const Val& b, const Val& f) const;
  TwoCell runitor_inv(const Val& a, const Val& b, const Val& f) const;
  TwoCell associator_inv(const Val& a, const Val& b, const Val& c, const Val& d, const Val& h,
                         const Val& g, const Val& f) const;
};

using BicategoryPtr = std::shared_ptr<const Bicategory>;

// ---- explicit tier ----

class ExplicitBicategory : public Bicategory {
 public:
  // construction
  void add_obj(const std::string& name);
  void set_hom(const std::string& a, const std::string& b, FinCategory hom);
  void set_unit(const std::string& a, const std::string& one_cell);
  void set_comp1(const std::string& a, const std::string& b, const std::string& c,
                 const std::string& g, const std::string& f, const std::string& gf);
  void set_comp2(const std::string& a, const std::string& b, const std::string& c,
                 const std::string& beta, const std::string& alpha, const std::string& res);
  void set_assoc(const std::string& a, const std::string& b, const std::string& c,
                 const std::string& d, const std::string& h, const std::string& g,
                 const std::string& f, const std::string& mor);
  void set_lunit(const std::string& a, const std::string& b, const std::string& f,
                 const std::string& mor);
  void set_runit(const std::string& a, const std::string& b, const std::string& f,
                 const std::string& mor);

  std::string name() const override { return name_.empty() ? "explicit" : name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  std::vector<Val> objects() const override;
  bool is_explicit() const override { return true; }
  Val id1(const Val& a) const override;
  Val comp1(const Val& a, const Val& b, const Val& c, const Val& g, const Val& f) const override;
  TwoCell id2(const Val& a, const Val& b, const Val& f) const override;
  TwoCell vcomp(const TwoCell& beta, const TwoCell& alpha) const override;
  TwoCell hcomp(const TwoCell& beta, const TwoCell& alpha) const override;
  TwoCell associator(const Val& a, const Val& b, const Val& c, const Val& d, const Val& h,
                     const Val& g, const Val& f) const override;
  TwoCell lunitor(const Val& a, const Val& b, const Val& f) const override;
  TwoCell runitor(const Val& a, const Val& b, const Val& f) const override;
  std::vector<Val> one_cells(const Val& a, const Val& b, int bound) const override;
  std::vector<Val> two_cells(const Val& a, const Val& b, const Val& f,
                             const Val& g) const override;
  std::optional<LocalPullback> local_pullback(const Val& a, const Val& b, const TwoCell& s,
                                              const TwoCell& t) const override;
  const FinCategory* hom_cat(const Val& a, const Val& b) const override;

  const FinCategory& hom_ref(const std::string& a, const std::string& b) const;
  const std::vector<std::string>& object_names() const { return objs_; }

 private:
  friend Report validate_bicategory(const ExplicitBicategory&);
  std::string name_;
  std::vector<std::string> objs_;
  std::map<std::pair<std::string, std::string>, FinCategory> homs_;
  std::map<std::string, std::string> unit_;
  std::map<std::tuple<std::string, std::string, std::string>,
           std::map<std::pair<std::string, std::string>, std::string>>
      comp1_, comp2_;
  std::map<std::tuple<std::string, std::string, std::string, std::string>,
           std::map<std::tuple<std::string, std::string, std::string>, std::string>>
      assoc_;
  std::map<std::pair<std::string, std::string>, std::map<std::string, std::string>> lunit_,
      runit_;
};

using ExplicitBicategoryPtr = std::shared_ptr<const ExplicitBicategory>;

// Every coherence and functoriality equation, exhaustively.
Report validate_bicategory(const ExplicitBicategory& b);

// The same laws restricted to a supplied family of 1-cells per hom, for
// bases whose hom-categories cannot be enumerated. Checks unitor and
// associator invertibility plus naturality, pentagon and triangle on every
// composable combination drawn from the family.
Report validate_bicategory_on(
    const Bicategory& b,
    const std::map<std::pair<Val, Val>, std::vector<Val>>& cells);

// ---- monoidal categories and one-object bicategories ----

struct MonoidalData {
  FinCategory cat;
  std::string unit;                                             // unit object
  std::map<std::pair<std::string, std::string>, std::string> tensor_obj;
  std::map<std::pair<std::string, std::string>, std::string> tensor_mor;
  // empty maps mean "strict": coherence components default to identities
  std::map<std::tuple<std::string, std::string, std::string>, std::string> assoc;
  std::map<std::string, std::string> lunit, runit;
};

// One-object bicategory with hom V; throws Error on malformed monoidal
// data, and rejects data whose result fails validate_bicategory.
ExplicitBicategory from_monoidal(const MonoidalData& v, const std::string& name = "");

// The poset {false <= true} with conjunction, unit true.
MonoidalData bool_and_monoidal();
// The chain bot <= mid <= top with meet, unit top.
MonoidalData chain3_monoidal();

ExplicitBicategory chaotic(const std::vector<std::string>& names);
ExplicitBicategory product_bicategory(const ExplicitBicategory& b, const ExplicitBicategory& c);
ExplicitBicategory free_quantaloid(const FinCategory& x);
ExplicitBicategory lax_slice(const ExplicitBicategory& b, const std::string& obj);
ExplicitBicategory terminal_bicategory();  // one object, one 1-cell, one 2-cell

// Right lifting of f through g (shared codomain): the 1-cell lift with
// counit g.lift => f, universal among all (h, g.h => f). Exhaustive
// verification; nullopt when absent.
struct RightLifting {
  OneCell lift;
  TwoCell counit;
};
std::optional<RightLifting> right_lifting(const Bicategory& b, const OneCell& f,
                                          const OneCell& g);

// ---- comonads ----

struct FinComonad {
  FinFunctor endo;           // G
  std::vector<int> counit;   // per object: G c -> c
  std::vector<int> comult;   // per object: G c -> G G c

  Report validate() const;
};

// Eilenberg-Moore category of coalgebras, found by enumeration. Object
// names are alg_<carrier>_<structure>; morphism names embed the underlying
// morphism. coalgebras_out, when given, receives (carrier, structure) pairs.
FinCategory em_category(const FinCategoryPtr& c, const FinComonad& g,
                        std::vector<std::pair<int, int>>* coalgebras_out = nullptr);

// Hom-wise comonads assembled into an identity-on-objects lax functor.
struct BicatComonad {
  ExplicitBicategoryPtr base;
  // per hom (a,b): action on 1-cells and 2-cells by name
  std::map<std::pair<std::string, std::string>, std::map<std::string, std::string>> on1, on2;
  // per hom: counit and comultiplication components per 1-cell
  std::map<std::pair<std::string, std::string>, std::map<std::string, std::string>> counit,
      comult;
  // comparison cells
  std::map<std::tuple<std::string, std::string, std::string>,
           std::map<std::pair<std::string, std::string>, std::string>>
      g2;                                    // G g . G f -> G (g f)
  std::map<std::string, std::string> g0;     // 1_a -> G 1_a
};

Report validate_bicat_comonad(const BicatComonad& g);

// Same objects; hom(a,b) is the coalgebra category of the local comonad;
// composition via g2, units via g0. Throws when the comonad data is bad.
ExplicitBicategory em_bicategory(const BicatComonad& g);

// identity comonad on any explicit bicategory
BicatComonad identity_bicat_comonad(const ExplicitBicategoryPtr& b);

// ---- lax functors and icons ----

struct LaxFunctor {
  BicategoryPtr src, dst;
  std::map<Val, Val> on_obj;
  std::map<std::tuple<Val, Val, Val>, Val> on1;  // (a,b,f) -> payload
  std::map<std::tuple<Val, Val, Val>, Val> on2;  // (a,b,mor) -> payload
  std::map<std::tuple<Val, Val, Val, Val, Val>, Val> comp;  // (a,b,c,g,f): Fg.Ff => F(gf)
  std::map<Val, Val> unit;                                  // a: 1_{Fa} => F 1_a
};

// Coherence on all data checkable from an explicit source bicategory.
Report validate_lax_functor(const LaxFunctor& f);

struct IconData {
  const LaxFunctor* src = nullptr;
  const LaxFunctor* dst = nullptr;
  std::map<std::tuple<Val, Val, Val>, Val> component;  // (a,b,f): Ff => Gf
};

Report validate_icon(const IconData& icon);

}  // namespace bcat
