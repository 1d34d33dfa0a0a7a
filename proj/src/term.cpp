#include "diagre/term.hpp"

#include <cassert>
#include <functional>

namespace diagre {

// ---------------------------------------------------------------------------
// Signature
// ---------------------------------------------------------------------------

namespace {

bool reserved_name(const std::string& name) {
  return name == "id" || name == "swap" || name == "tob";
}

std::size_t hash_mix(std::size_t seed, std::size_t v) {
  // boost::hash_combine mixing constant
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

void Signature::add(const std::string& name, int dom, int cod) {
  if (reserved_name(name))
    throw SignatureError("reserved generator name: " + name);
  if (name.empty()) throw SignatureError("empty generator name");
  if (dom < 0 || cod < 0)
    throw SignatureError("negative arity for generator " + name);
  if (entries_.count(name))
    throw SignatureError("duplicate generator name: " + name);
  if (demand_se_free_ && (dom == 0 || cod == 0))
    throw StateEffectError("generator " + name +
                           " is a state or effect in a state-and-effect-free signature");
  entries_[name] = Entry{dom, cod};
  if (dom == 0 || cod == 0) se_free_ = false;
}

bool Signature::contains(const std::string& name) const {
  return entries_.count(name) != 0;
}

const Signature::Entry& Signature::at(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw TypeError("unknown generator: " + name);
  return it->second;
}

// ---------------------------------------------------------------------------
// Term construction
// ---------------------------------------------------------------------------

Term::Term(TermKind k, int a, int b, std::string name, TermPtr l, TermPtr r,
           int dom, int cod)
    : kind_(k),
      a_(a),
      b_(b),
      name_(std::move(name)),
      left_(std::move(l)),
      right_(std::move(r)),
      dom_(dom),
      cod_(cod) {
  std::size_t h = hash_mix(0x517cc1b7, static_cast<std::size_t>(kind_));
  h = hash_mix(h, static_cast<std::size_t>(a_));
  h = hash_mix(h, static_cast<std::size_t>(b_));
  if (!name_.empty()) h = hash_mix(h, std::hash<std::string>{}(name_));
  if (left_) {
    h = hash_mix(h, left_->hash());
    size_ += left_->size();
  }
  if (right_) {
    h = hash_mix(h, right_->hash());
    size_ += right_->size();
  }
  hash_ = h;
}

TermPtr id_term(int width) {
  if (width < 0) throw TypeError("identity with negative width");
  return std::make_shared<Term>(TermKind::Id, width, 0, "", nullptr, nullptr,
                                width, width);
}

TermPtr gen_term(const std::string& name, int dom, int cod) {
  if (dom < 0 || cod < 0) throw TypeError("generator with negative arity");
  if (name.empty() || reserved_name(name))
    throw TypeError("bad generator name: " + name);
  return std::make_shared<Term>(TermKind::Gen, dom, cod, name, nullptr,
                                nullptr, dom, cod);
}

TermPtr gen_term(const std::string& name, const Signature& sig) {
  const auto& e = sig.at(name);
  return gen_term(name, e.dom, e.cod);
}

TermPtr swap_term(int n, int m) {
  if (n < 0 || m < 0) throw TypeError("swap with negative block width");
  return std::make_shared<Term>(TermKind::Swap, n, m, "", nullptr, nullptr,
                                n + m, n + m);
}

TermPtr seq(const TermPtr& u, const TermPtr& v) {
  if (u->cod() != v->dom())
    throw TypeError("sequential mismatch: cod " + std::to_string(u->cod()) +
                    " vs dom " + std::to_string(v->dom()));
  return std::make_shared<Term>(TermKind::Seq, 0, 0, "", u, v, u->dom(),
                                v->cod());
}

TermPtr par(const TermPtr& u, const TermPtr& v) {
  return std::make_shared<Term>(TermKind::Par, 0, 0, "", u, v,
                                u->dom() + v->dom(), u->cod() + v->cod());
}

bool equal(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->hash() != b->hash()) return false;
  if (a->kind() != b->kind() || a->dom() != b->dom() || a->cod() != b->cod())
    return false;
  switch (a->kind()) {
    case TermKind::Id:
      return a->id_width() == b->id_width();
    case TermKind::Gen:
      return a->gen_name() == b->gen_name();
    case TermKind::Swap:
      return a->swap_n() == b->swap_n() && a->swap_m() == b->swap_m();
    case TermKind::Seq:
    case TermKind::Par:
      return equal(a->left(), b->left()) && equal(a->right(), b->right());
  }
  return false;
}

int defect(const TermPtr& t) { return t->dom() - t->cod(); }

bool is_id(const TermPtr& t) { return t->kind() == TermKind::Id; }

bool is_atom(const TermPtr& t) {
  return t->kind() == TermKind::Gen || t->kind() == TermKind::Swap;
}

bool symmetry_only(const TermPtr& t) {
  switch (t->kind()) {
    case TermKind::Gen:
      return false;
    case TermKind::Id:
    case TermKind::Swap:
      return true;
    case TermKind::Seq:
    case TermKind::Par:
      return symmetry_only(t->left()) && symmetry_only(t->right());
  }
  return false;
}

void require_state_effect_free_atoms(const TermPtr& t) {
  if (is_atom(t)) {
    if (t->dom() == 0 || t->cod() == 0)
      throw StateEffectError(
          "atom with zero input or output wires: dom " +
          std::to_string(t->dom()) + ", cod " + std::to_string(t->cod()));
    return;
  }
  if (t->left()) require_state_effect_free_atoms(t->left());
  if (t->right()) require_state_effect_free_atoms(t->right());
}

// ---------------------------------------------------------------------------
// Raw terms
// ---------------------------------------------------------------------------

RawPtr raw_id(int width) {
  auto r = std::make_shared<RawTerm>();
  r->kind = TermKind::Id;
  r->a = width;
  return r;
}

RawPtr raw_gen(const std::string& name) {
  auto r = std::make_shared<RawTerm>();
  r->kind = TermKind::Gen;
  r->name = name;
  return r;
}

RawPtr raw_swap(int n, int m) {
  auto r = std::make_shared<RawTerm>();
  r->kind = TermKind::Swap;
  r->a = n;
  r->b = m;
  return r;
}

RawPtr raw_seq(const RawPtr& u, const RawPtr& v) {
  auto r = std::make_shared<RawTerm>();
  r->kind = TermKind::Seq;
  r->left = u;
  r->right = v;
  return r;
}

RawPtr raw_par(const RawPtr& u, const RawPtr& v) {
  auto r = std::make_shared<RawTerm>();
  r->kind = TermKind::Par;
  r->left = u;
  r->right = v;
  return r;
}

TermPtr validate(const RawPtr& raw, const Signature& sig) {
  if (!raw) throw TypeError("null term");
  switch (raw->kind) {
    case TermKind::Id:
      return id_term(raw->a);
    case TermKind::Gen: {
      if (!sig.contains(raw->name))
        throw TypeError("unknown generator: " + raw->name);
      return gen_term(raw->name, sig);
    }
    case TermKind::Swap:
      return swap_term(raw->a, raw->b);
    case TermKind::Seq:
      return seq(validate(raw->left, sig), validate(raw->right, sig));
    case TermKind::Par:
      return par(validate(raw->left, sig), validate(raw->right, sig));
  }
  throw TypeError("corrupt raw term");
}

// ---------------------------------------------------------------------------
// Positions
// ---------------------------------------------------------------------------

namespace {

const TermPtr& child_at(const TermPtr& t, Dir d) {
  switch (d) {
    case Dir::SeqLeft:
      if (t->kind() != TermKind::Seq) break;
      return t->left();
    case Dir::SeqRight:
      if (t->kind() != TermKind::Seq) break;
      return t->right();
    case Dir::ParLeft:
      if (t->kind() != TermKind::Par) break;
      return t->left();
    case Dir::ParRight:
      if (t->kind() != TermKind::Par) break;
      return t->right();
  }
  throw PositionError("position step does not match term shape");
}

TermPtr replace_rec(const TermPtr& t, const Position& p, std::size_t i,
                    const TermPtr& s) {
  if (i == p.size()) {
    const TermPtr& old = t;
    if (old->dom() != s->dom() || old->cod() != s->cod())
      throw TypeError("replacement changes dom/cod at the hole");
    return s;
  }
  Dir d = p[i];
  const TermPtr& c = child_at(t, d);
  TermPtr nc = replace_rec(c, p, i + 1, s);
  bool left = (d == Dir::SeqLeft || d == Dir::ParLeft);
  if (t->kind() == TermKind::Seq)
    return seq(left ? nc : t->left(), left ? t->right() : nc);
  return par(left ? nc : t->left(), left ? t->right() : nc);
}

}  // namespace

TermPtr subterm_at(const TermPtr& t, const Position& p) {
  TermPtr cur = t;
  for (Dir d : p) cur = child_at(cur, d);
  return cur;
}

TermPtr replace_at(const TermPtr& t, const Position& p, const TermPtr& s) {
  return replace_rec(t, p, 0, s);
}

std::string position_digits(const Position& p) {
  std::string s;
  s.reserve(p.size());
  for (Dir d : p) s.push_back(static_cast<char>('0' + static_cast<int>(d)));
  return s;
}

Position position_from_digits(const std::string& digits) {
  Position p;
  p.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '3')
      throw PositionError(std::string("bad position digit: ") + c);
    p.push_back(static_cast<Dir>(c - '0'));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Generator references and layers
// ---------------------------------------------------------------------------

GenRef GenRef::named(std::string name, int dom, int cod) {
  GenRef g;
  g.swap_ = false;
  g.name_ = std::move(name);
  g.a_ = dom;
  g.b_ = cod;
  return g;
}

GenRef GenRef::swap(int n, int m) {
  GenRef g;
  g.swap_ = true;
  g.a_ = n;
  g.b_ = m;
  return g;
}

std::optional<int> GenRef::toboggan_size() const {
  if (swap_ && b_ == 1) return a_ + 1;
  return std::nullopt;
}

TermPtr atom_term(const GenRef& g) {
  if (g.is_swap()) return swap_term(g.swap_n(), g.swap_m());
  return gen_term(g.name(), g.dom(), g.cod());
}

std::optional<GenRef> as_atom(const TermPtr& t) {
  if (t->kind() == TermKind::Gen)
    return GenRef::named(t->gen_name(), t->dom(), t->cod());
  if (t->kind() == TermKind::Swap)
    return GenRef::swap(t->swap_n(), t->swap_m());
  return std::nullopt;
}

std::set<GenRef> generators_of(const TermPtr& t) {
  std::set<GenRef> out;
  std::function<void(const TermPtr&)> walk = [&](const TermPtr& u) {
    if (auto a = as_atom(u)) {
      out.insert(*a);
      return;
    }
    if (u->left()) walk(u->left());
    if (u->right()) walk(u->right());
  };
  walk(t);
  return out;
}

TermPtr layer_term(int k, int l, const GenRef& g) {
  return par(id_term(k), par(atom_term(g), id_term(l)));
}

TermPtr layer_term(const Layer& layer) {
  return layer_term(layer.k, layer.l, layer.g);
}

TermPtr layer_sequence_term(const LayerSequence& s) {
  if (s.gs.empty() || s.ks.size() != s.gs.size() || s.ls.size() != s.gs.size())
    throw PreconditionError("malformed layer sequence");
  TermPtr t = layer_term(s.ks.back(), s.ls.back(), s.gs.back());
  for (std::size_t i = s.gs.size() - 1; i-- > 0;)
    t = seq(layer_term(s.ks[i], s.ls[i], s.gs[i]), t);
  return t;
}

std::optional<Layer> as_layer(const TermPtr& t) {
  if (t->kind() != TermKind::Par || !is_id(t->left())) return std::nullopt;
  const TermPtr& inner = t->right();
  if (inner->kind() != TermKind::Par || !is_id(inner->right()))
    return std::nullopt;
  auto g = as_atom(inner->left());
  if (!g) return std::nullopt;
  return Layer{t->left()->id_width(), inner->right()->id_width(), *g};
}

std::optional<LayerSequence> as_layer_sequence(const TermPtr& t) {
  LayerSequence s;
  TermPtr cur = t;
  while (cur->kind() == TermKind::Seq) {
    auto layer = as_layer(cur->left());
    if (!layer) return std::nullopt;
    s.ks.push_back(layer->k);
    s.ls.push_back(layer->l);
    s.gs.push_back(layer->g);
    cur = cur->right();
  }
  auto last = as_layer(cur);
  if (!last) return std::nullopt;
  s.ks.push_back(last->k);
  s.ls.push_back(last->l);
  s.gs.push_back(last->g);
  return s;
}

// ---------------------------------------------------------------------------
// Preprocessing and classes
// ---------------------------------------------------------------------------

TermPtr preprocess(const TermPtr& t) {
  switch (t->kind()) {
    case TermKind::Id:
      return t;
    case TermKind::Gen:
    case TermKind::Swap:
      return par(id_term(0), par(t, id_term(0)));
    case TermKind::Seq:
      return seq(preprocess(t->left()), preprocess(t->right()));
    case TermKind::Par:
      if (as_layer(t)) return t;
      return par(preprocess(t->left()), preprocess(t->right()));
  }
  throw TypeError("corrupt term");
}

bool is_preprocessed(const TermPtr& t) {
  switch (t->kind()) {
    case TermKind::Id:
      return true;
    case TermKind::Gen:
    case TermKind::Swap:
      return false;
    case TermKind::Seq:
      return is_preprocessed(t->left()) && is_preprocessed(t->right());
    case TermKind::Par:
      if (as_layer(t)) return true;
      return is_preprocessed(t->left()) && is_preprocessed(t->right());
  }
  return false;
}

bool is_pre_normal(const TermPtr& t) {
  return is_id(t) || as_layer_sequence(t).has_value();
}

bool is_normal_form(const TermPtr& t) {
  if (is_id(t)) return true;
  auto s = as_layer_sequence(t);
  if (!s) return false;
  for (std::size_t i = 0; i + 1 < s->layers(); ++i)
    if (s->ks[i] >= s->ks[i + 1] + s->gs[i + 1].dom()) return false;
  return true;
}

bool is_canonical_form(const TermPtr& t) {
  if (!symmetry_only(t))
    throw SymmetryError("canonical forms are defined on symmetry-only terms");
  if (is_id(t)) return true;
  auto s = as_layer_sequence(t);
  if (!s) return false;
  for (std::size_t i = 0; i < s->layers(); ++i) {
    auto d = s->gs[i].toboggan_size();
    if (!d || *d < 2) return false;
    if (i + 1 < s->layers() && s->ks[i] >= s->ks[i + 1]) return false;
  }
  return true;
}

TermClass classify(const TermPtr& t) {
  if (symmetry_only(t) && is_canonical_form(t)) return TermClass::CanonicalForm;
  if (is_normal_form(t)) return TermClass::NormalForm;
  if (is_pre_normal(t)) return TermClass::PreNormal;
  if (is_preprocessed(t)) return TermClass::PreProcessed;
  return TermClass::General;
}

const char* term_class_name(TermClass c) {
  switch (c) {
    case TermClass::General:
      return "general";
    case TermClass::PreProcessed:
      return "preprocessed";
    case TermClass::PreNormal:
      return "pre-normal";
    case TermClass::NormalForm:
      return "normal-form";
    case TermClass::CanonicalForm:
      return "canonical-form";
  }
  return "?";
}

}  // namespace diagre
