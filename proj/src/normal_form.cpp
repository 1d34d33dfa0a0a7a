#include "diagre/normal_form.hpp"

#include <cassert>
#include <variant>

namespace diagre {

namespace {

// Normal forms are either identities or layer sequences; computing on
// the (ks, ls, gs) view keeps the commutation cases readable.
struct NfView {
  int id_width = -1;  // >= 0 iff the term is an identity
  LayerSequence s;

  bool is_identity() const { return id_width >= 0; }
};

NfView view_of(const TermPtr& t) {
  NfView v;
  if (is_id(t)) {
    v.id_width = t->id_width();
    return v;
  }
  auto s = as_layer_sequence(t);
  if (!s) throw PreconditionError("operand is not in normal form");
  v.s = std::move(*s);
  return v;
}

TermPtr term_of(const NfView& v) {
  if (v.is_identity()) return id_term(v.id_width);
  return layer_sequence_term(v.s);
}

int seq_dom(const LayerSequence& s) {
  return s.ks.front() + s.gs.front().dom() + s.ls.front();
}

int seq_cod(const LayerSequence& s) {
  return s.ks.back() + s.gs.back().cod() + s.ls.back();
}

LayerSequence tail_of(const LayerSequence& s) {
  LayerSequence t;
  t.ks.assign(s.ks.begin() + 1, s.ks.end());
  t.ls.assign(s.ls.begin() + 1, s.ls.end());
  t.gs.assign(s.gs.begin() + 1, s.gs.end());
  return t;
}

LayerSequence cons(int k, int l, const GenRef& g, const LayerSequence& s) {
  LayerSequence out;
  out.ks.reserve(s.ks.size() + 1);
  out.ks.push_back(k);
  out.ks.insert(out.ks.end(), s.ks.begin(), s.ks.end());
  out.ls.push_back(l);
  out.ls.insert(out.ls.end(), s.ls.begin(), s.ls.end());
  out.gs.push_back(g);
  out.gs.insert(out.gs.end(), s.gs.begin(), s.gs.end());
  return out;
}

LayerSequence single(int k, int l, const GenRef& g) {
  return LayerSequence{{k}, {l}, {g}};
}

LayerSequence seq_views(const LayerSequence& a, const LayerSequence& b);

// One layer against a sequence: prepend when the layer's upper width is
// below the head's height, otherwise commute it past the head and recurse.
LayerSequence layer_seq(int kp, int lp, const GenRef& gp,
                        const LayerSequence& b) {
  int k = b.ks.front();
  int l = b.ls.front();
  const GenRef& g = b.gs.front();
  if (kp < k + g.dom()) return cons(kp, lp, gp, b);
  int new_l = l + gp.defect();
  int new_k = kp - g.defect();
  assert(new_l >= 0 && new_k >= 0);
  if (b.layers() == 1)
    return LayerSequence{{k, new_k}, {new_l, lp}, {g, gp}};
  return cons(k, new_l, g, layer_seq(new_k, lp, gp, tail_of(b)));
}

LayerSequence seq_views(const LayerSequence& a, const LayerSequence& b) {
  if (a.layers() == 1) return layer_seq(a.ks[0], a.ls[0], a.gs[0], b);
  return layer_seq(a.ks[0], a.ls[0], a.gs[0], seq_views(tail_of(a), b));
}

NfView seq_nf_views(const NfView& a, const NfView& b) {
  if (a.is_identity()) return b;
  if (b.is_identity()) return a;
  NfView out;
  out.s = seq_views(a.s, b.s);
  return out;
}

NfView par_nf_views(const NfView& a, const NfView& b) {
  NfView out;
  if (a.is_identity() && b.is_identity()) {
    out.id_width = a.id_width + b.id_width;
    return out;
  }
  if (a.is_identity()) {
    out.s = b.s;
    for (auto& k : out.s.ks) k += a.id_width;
    return out;
  }
  if (b.is_identity()) {
    out.s = a.s;
    for (auto& l : out.s.ls) l += b.id_width;
    return out;
  }
  // Run the left block's layers above the right block, then the right
  // block's layers below the left block's output.
  int c = seq_cod(a.s);
  int d = seq_dom(b.s);
  out.s = a.s;
  for (auto& l : out.s.ls) l += d;
  for (std::size_t i = 0; i < b.s.layers(); ++i) {
    out.s.ks.push_back(b.s.ks[i] + c);
    out.s.ls.push_back(b.s.ls[i]);
    out.s.gs.push_back(b.s.gs[i]);
  }
  return out;
}

NfView nf_view(const TermPtr& t) {
  switch (t->kind()) {
    case TermKind::Id: {
      NfView v;
      v.id_width = t->id_width();
      return v;
    }
    case TermKind::Gen:
    case TermKind::Swap: {
      NfView v;
      v.s = single(0, 0, *as_atom(t));
      return v;
    }
    case TermKind::Seq:
      return seq_nf_views(nf_view(t->left()), nf_view(t->right()));
    case TermKind::Par:
      return par_nf_views(nf_view(t->left()), nf_view(t->right()));
  }
  throw TypeError("corrupt term");
}

}  // namespace

TermPtr seq_nf(const TermPtr& a, const TermPtr& b) {
  if (!is_normal_form(a) || !is_normal_form(b))
    throw PreconditionError("seq_nf expects normal-form operands");
  if (a->cod() != b->dom())
    throw PreconditionError("seq_nf operands do not compose");
  return term_of(seq_nf_views(view_of(a), view_of(b)));
}

TermPtr par_nf(const TermPtr& a, const TermPtr& b) {
  if (!is_normal_form(a) || !is_normal_form(b))
    throw PreconditionError("par_nf expects normal-form operands");
  return term_of(par_nf_views(view_of(a), view_of(b)));
}

TermPtr nf(const TermPtr& t) {
  require_state_effect_free_atoms(t);
  return term_of(nf_view(t));
}

}  // namespace diagre
