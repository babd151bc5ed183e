#ifndef SGT_SEMIGROUP_HPP_
#define SGT_SEMIGROUP_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for int64_t
#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

namespace sgt {

  //! Elements are dense indices 0, ..., n - 1.
  using Element = std::size_t;

  //! A sorted, duplicate-free list of elements.
  using ElementSet = std::vector<Element>;

  //! An element map S -> T stored as the image of each index of S.
  using ElementMap = std::vector<Element>;

  //! Caps on the exhaustive enumerations.
  struct Limits {
    std::size_t subsemigroup_cap = 8;
    std::size_t congruence_cap   = 7;
  };

  //! A finite semigroup given by its multiplication table.
  //!
  //! Values are only produced by validate_table (or operations that call it),
  //! so every FiniteSemigroup is closed and associative.  Instances are
  //! immutable.
  class FiniteSemigroup {
   public:
    FiniteSemigroup() = default;

    std::size_t size() const noexcept {
      return _n;
    }

    Element product(Element a, Element b) const noexcept {
      return _table[a * _n + b];
    }

    Element operator()(Element a, Element b) const noexcept {
      return product(a, b);
    }

    bool is_idempotent(Element a) const noexcept {
      return product(a, a) == a;
    }

    ElementSet idempotents() const;

    std::vector<std::vector<Element>> rows() const;

    std::vector<Element> const& flat_table() const noexcept {
      return _table;
    }

    bool has_labels() const noexcept {
      return !_labels.empty();
    }

    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

    //! The display label of a, or its index when unlabelled.
    std::string label(Element a) const;

    FiniteSemigroup with_labels(std::vector<std::string> labels) const;

    //! Set when the semigroup was produced by adjoin_identity.
    std::optional<Element> adjoined_identity() const noexcept {
      return _identity;
    }

    bool operator==(FiniteSemigroup const& that) const noexcept {
      return _n == that._n && _table == that._table;
    }

   private:
    friend FiniteSemigroup validate_table(
        std::vector<std::vector<std::int64_t>> const&,
        std::vector<std::string>);
    friend FiniteSemigroup adjoin_identity(FiniteSemigroup const&);

    std::size_t              _n = 0;
    std::vector<Element>     _table;
    std::vector<std::string> _labels;
    std::optional<Element>   _identity;
  };

  //! An equivalence relation on 0, ..., n - 1.
  //!
  //! Class ids are normalised: classes are numbered in order of their least
  //! element, so two Partitions compare equal iff they are the same relation.
  class Partition {
   public:
    Partition() = default;

    //! From an arbitrary labelling of the elements by class.
    explicit Partition(std::vector<std::size_t> const& class_of);

    static Partition identity(std::size_t n);
    static Partition universal(std::size_t n);

    //! Kernel of a map: a ~ b iff key[a] == key[b].
    template <typename Key>
    static Partition kernel(std::vector<Key> const& key) {
      std::vector<std::size_t> ids(key.size());
      for (std::size_t a = 0; a < key.size(); ++a) {
        ids[a] = a;
        for (std::size_t b = 0; b < a; ++b) {
          if (key[b] == key[a]) {
            ids[a] = ids[b];
            break;
          }
        }
      }
      return Partition(ids);
    }

    std::size_t size() const noexcept {
      return _class_of.size();
    }

    std::size_t number_of_classes() const noexcept {
      return _classes.size();
    }

    std::size_t class_of(Element a) const noexcept {
      return _class_of[a];
    }

    std::vector<std::size_t> const& class_ids() const noexcept {
      return _class_of;
    }

    std::vector<ElementSet> const& classes() const noexcept {
      return _classes;
    }

    ElementSet const& class_containing(Element a) const noexcept {
      return _classes[_class_of[a]];
    }

    bool same(Element a, Element b) const noexcept {
      return _class_of[a] == _class_of[b];
    }

    //! True iff every class of *this lies inside a class of that.
    bool refines(Partition const& that) const noexcept;

    Partition meet(Partition const& that) const;
    Partition join(Partition const& that) const;

    bool is_identity() const noexcept {
      return _classes.size() == _class_of.size();
    }

    bool is_universal() const noexcept {
      return _classes.size() <= 1;
    }

    bool operator==(Partition const& that) const noexcept {
      return _class_of == that._class_of;
    }

   private:
    std::vector<std::size_t> _class_of;
    std::vector<ElementSet>  _classes;
  };

  //! Checks closure and associativity of a square table.
  //!
  //! Throws NonSquare, OutOfRange (witness: row, column, value) or
  //! NotAssociative (witness: the least triple a, b, c in lexicographic
  //! order with (ab)c != a(bc)).
  FiniteSemigroup validate_table(
      std::vector<std::vector<std::int64_t>> const& raw,
      std::vector<std::string>                      labels = {});

  FiniteSemigroup validate_table(std::vector<std::vector<Element>> const& raw,
                                 std::vector<std::string> labels = {});

  //! S with a fresh identity appended at index |S|, even if S is a monoid.
  FiniteSemigroup adjoin_identity(FiniteSemigroup const& s);

  bool is_closed(FiniteSemigroup const& s, ElementSet const& u);

  ElementSet generated_subsemigroup(FiniteSemigroup const& s,
                                    ElementSet const&      seed);

  //! A closed subset viewed as a semigroup in its own right.
  struct Restriction {
    FiniteSemigroup                     semigroup;
    std::vector<Element>                to_parent;
    std::vector<std::optional<Element>> from_parent;

    Element local(Element parent_elem) const;
    ElementSet to_parent_set(ElementSet const& local_set) const;
    ElementSet to_local_set(ElementSet const& parent_set) const;
  };

  //! Throws NotClosed if u is not a subsemigroup.
  Restriction restrict_to(FiniteSemigroup const& s, ElementSet const& u);

  //! All non-empty subsemigroups, ordered by size then lexicographically.
  std::vector<ElementSet> enumerate_subsemigroups(FiniteSemigroup const& s,
                                                  Limits const& limits = {});

  //! A pair (a, b) with a rho b and a failing compatibility witness c, or
  //! nothing when rho is a congruence.  Witness layout: a, b, c, side (0 for
  //! left multiplication ca, cb and 1 for right multiplication ac, bc).
  std::optional<std::vector<std::size_t>> congruence_violation(
      FiniteSemigroup const& s,
      Partition const&       rho);

  bool is_congruence(FiniteSemigroup const& s, Partition const& rho);

  //! Every congruence, in restricted-growth-string order of class ids.
  std::vector<Partition> enumerate_congruences(FiniteSemigroup const& s,
                                               Limits const& limits = {});

  struct Quotient {
    FiniteSemigroup semigroup;
    ElementMap      natural_map;
  };

  Quotient quotient(FiniteSemigroup const& s, Partition const& rho);

  bool is_morphism(FiniteSemigroup const& s,
                   FiniteSemigroup const& t,
                   ElementMap const&      phi);

  bool is_isomorphism(FiniteSemigroup const& s,
                      FiniteSemigroup const& t,
                      ElementMap const&      phi);

  //! The lexicographically least isomorphism S -> T, if there is one.
  std::optional<ElementMap> find_isomorphism(FiniteSemigroup const& s,
                                             FiniteSemigroup const& t);

  struct BandClassification {
    bool is_band         = false;  // xx = x
    bool is_semilattice  = false;  // band with xy = yx
    bool is_left_zero    = false;  // xy = x
    bool is_right_zero   = false;  // xy = y
    bool is_rectangular  = false;  // xyx = x
    bool is_left_regular = false;  // xyx = xy
    bool is_right_regular = false;  // xyx = yx
    bool is_left_normal  = false;  // xyz = xzy
    bool is_right_normal = false;  // xyz = yxz
    bool is_normal       = false;  // xyzx = xzyx
  };

  BandClassification band_class(FiniteSemigroup const& s);

  //! The J-class of e in the band E, from the ideals E^1 e E^1.
  ElementSet band_j_class(FiniteSemigroup const& band, Element e);

}  // namespace sgt

#endif  // SGT_SEMIGROUP_HPP_
