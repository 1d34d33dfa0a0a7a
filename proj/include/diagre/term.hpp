#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "diagre/errors.hpp"

namespace diagre {

// ---------------------------------------------------------------------------
// Signatures
// ---------------------------------------------------------------------------

/// A set of named generators, each with a number of input wires (dom)
/// and output wires (cod). Names are unique; `id`, `swap` and `tob` are
/// reserved by the concrete syntax and rejected.
class Signature {
 public:
  struct Entry {
    int dom = 0;
    int cod = 0;
  };

  /// When `demand_state_effect_free` is set, entries with dom 0 or cod 0
  /// are rejected at add() time.
  explicit Signature(bool demand_state_effect_free = false)
      : demand_se_free_(demand_state_effect_free) {}

  void add(const std::string& name, int dom, int cod);

  bool contains(const std::string& name) const;
  const Entry& at(const std::string& name) const;  // throws TypeError
  const std::map<std::string, Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  /// True iff every entry has dom >= 1 and cod >= 1.
  bool state_and_effect_free() const { return se_free_; }

 private:
  std::map<std::string, Entry> entries_;
  bool demand_se_free_ = false;
  bool se_free_ = true;
};

// ---------------------------------------------------------------------------
// Terms
// ---------------------------------------------------------------------------

enum class TermKind : std::uint8_t { Id, Gen, Swap, Seq, Par };

class Term;
using TermPtr = std::shared_ptr<const Term>;

/// An immutable, typed term node. dom/cod are computed bottom-up at
/// construction and cached; the structural hash likewise. Terms are
/// values: share freely across threads.
class Term {
 public:
  TermKind kind() const { return kind_; }
  int dom() const { return dom_; }
  int cod() const { return cod_; }
  std::size_t hash() const { return hash_; }

  // Id
  int id_width() const { return a_; }
  // Swap(n, m)
  int swap_n() const { return a_; }
  int swap_m() const { return b_; }
  // Gen
  const std::string& gen_name() const { return name_; }
  // Seq / Par
  const TermPtr& left() const { return left_; }
  const TermPtr& right() const { return right_; }

  /// Number of nodes in the tree.
  int size() const { return size_; }

  // Constructors live in the free functions below.
  Term(TermKind k, int a, int b, std::string name, TermPtr l, TermPtr r,
       int dom, int cod);

 private:
  TermKind kind_;
  int a_ = 0;  // Id width / Swap n
  int b_ = 0;  // Swap m
  std::string name_;
  TermPtr left_, right_;
  int dom_, cod_;
  int size_ = 1;
  std::size_t hash_ = 0;
};

TermPtr id_term(int width);
TermPtr gen_term(const std::string& name, int dom, int cod);
TermPtr gen_term(const std::string& name, const Signature& sig);
TermPtr swap_term(int n, int m);
TermPtr seq(const TermPtr& u, const TermPtr& v);  // throws TypeError on width mismatch
TermPtr par(const TermPtr& u, const TermPtr& v);

bool equal(const TermPtr& a, const TermPtr& b);

/// dom(t) - cod(t). Negative when a term widens.
int defect(const TermPtr& t);

bool is_id(const TermPtr& t);
bool is_atom(const TermPtr& t);  // Gen or Swap

/// True iff the term is built from Id/Swap/Seq/Par only.
bool symmetry_only(const TermPtr& t);

/// Throws StateEffectError if any atom of t has dom 0 or cod 0.
void require_state_effect_free_atoms(const TermPtr& t);

struct TermPtrHash {
  std::size_t operator()(const TermPtr& t) const { return t->hash(); }
};
struct TermPtrEq {
  bool operator()(const TermPtr& a, const TermPtr& b) const {
    return equal(a, b);
  }
};

// ---------------------------------------------------------------------------
// Untyped (raw) terms and validation
// ---------------------------------------------------------------------------

struct RawTerm;
using RawPtr = std::shared_ptr<const RawTerm>;

/// Untyped term tree as produced by the parser: generator occurrences
/// carry only their name; no widths are checked.
struct RawTerm {
  TermKind kind;
  int a = 0, b = 0;
  std::string name;
  RawPtr left, right;
};

RawPtr raw_id(int width);
RawPtr raw_gen(const std::string& name);
RawPtr raw_swap(int n, int m);
RawPtr raw_seq(const RawPtr& u, const RawPtr& v);
RawPtr raw_par(const RawPtr& u, const RawPtr& v);

/// Types a raw tree against a signature. Throws TypeError on unknown
/// generators or sequential width mismatches, and StateEffectError when
/// the signature demands state-and-effect-freedom that a generator
/// breaks.
TermPtr validate(const RawPtr& raw, const Signature& sig);

// ---------------------------------------------------------------------------
// Positions
// ---------------------------------------------------------------------------

enum class Dir : std::uint8_t { SeqLeft = 0, SeqRight = 1, ParLeft = 2, ParRight = 3 };

/// A path from the root; each step descends into a child of a Seq or Par.
using Position = std::vector<Dir>;

TermPtr subterm_at(const TermPtr& t, const Position& p);  // throws PositionError

/// Replaces the subterm at `p` with `s`. The replacement must have the
/// same dom and cod as the subterm it replaces; the rebuilt spine is
/// re-typed. Throws PositionError / TypeError.
TermPtr replace_at(const TermPtr& t, const Position& p, const TermPtr& s);

std::string position_digits(const Position& p);  // "021"-style, "" for root
Position position_from_digits(const std::string& digits);

// ---------------------------------------------------------------------------
// Generator references and layers
// ---------------------------------------------------------------------------

/// A generator occurrence viewed by what it is: a named box or a swap.
class GenRef {
 public:
  static GenRef named(std::string name, int dom, int cod);
  static GenRef swap(int n, int m);

  bool is_swap() const { return swap_; }
  const std::string& name() const { return name_; }
  int swap_n() const { return a_; }
  int swap_m() const { return b_; }
  int dom() const { return swap_ ? a_ + b_ : a_; }
  int cod() const { return swap_ ? a_ + b_ : b_; }
  int defect() const { return dom() - cod(); }

  /// Toboggan test: a swap of shape (d-1, 1); returns d when so.
  std::optional<int> toboggan_size() const;

  friend auto operator<=>(const GenRef&, const GenRef&) = default;

 private:
  bool swap_ = false;
  std::string name_;
  int a_ = 0, b_ = 0;
};

TermPtr atom_term(const GenRef& g);
std::optional<GenRef> as_atom(const TermPtr& t);

/// The set of generator occurrences in a term; identities contribute
/// nothing, swaps appear as swap references.
std::set<GenRef> generators_of(const TermPtr& t);

/// One generator sandwiched between identities: Id(k) ⊗ (g ⊗ Id(l)),
/// with upper width k, lower width l and height k + dom(g).
struct Layer {
  int k = 0;
  int l = 0;
  GenRef g;
};

/// A non-empty right-nested sequential chain of layers, characterized by
/// the upper widths, lower widths and generators of its layers. For
/// consecutive layers, typing forces
///   ks[i] + cod(gs[i]) + ls[i] == ks[i+1] + dom(gs[i+1]) + ls[i+1].
struct LayerSequence {
  std::vector<int> ks;
  std::vector<int> ls;
  std::vector<GenRef> gs;
  std::size_t layers() const { return gs.size(); }
};

TermPtr layer_term(int k, int l, const GenRef& g);
TermPtr layer_term(const Layer& layer);
TermPtr layer_sequence_term(const LayerSequence& s);

std::optional<Layer> as_layer(const TermPtr& t);
std::optional<LayerSequence> as_layer_sequence(const TermPtr& t);

// ---------------------------------------------------------------------------
// Preprocessing and structural classes
// ---------------------------------------------------------------------------

/// Replaces every generator and swap occurrence that is not already the
/// middle of a layer by its zero-padded layer Id(0) ⊗ (g ⊗ Id(0)).
/// Idempotent; preserves dom, cod, defect and generators_of.
TermPtr preprocess(const TermPtr& t);

/// Membership ladder, strongest last.
enum class TermClass : std::uint8_t {
  General,
  PreProcessed,
  PreNormal,
  NormalForm,
  CanonicalForm,
};

/// True iff every generator/swap occurrence sits inside a full layer
/// pattern Id(k) ⊗ (g ⊗ Id(l)). Equivalent to preprocess(t) == t.
bool is_preprocessed(const TermPtr& t);

/// Identity, or a right-nested sequential chain of layers.
bool is_pre_normal(const TermPtr& t);

/// Pre-normal with each layer's upper width below the next layer's
/// height: ks[i] < ks[i+1] + dom(gs[i+1]).
bool is_normal_form(const TermPtr& t);

/// Identity or a toboggan layer chain with all toboggan sizes >= 2 and
/// strictly increasing upper widths. Throws SymmetryError if the term
/// contains named generators.
bool is_canonical_form(const TermPtr& t);

/// Strongest class the term belongs to.
TermClass classify(const TermPtr& t);

const char* term_class_name(TermClass c);

}  // namespace diagre
