#pragma once

#include "diagre/term.hpp"

namespace diagre {

/// Normal form of a sequential composition of two normal forms
/// (cod(a) == dom(b)). Commutes layers so that each upper width stays
/// below the next layer's height. Throws PreconditionError if an
/// argument is not in normal form.
TermPtr seq_nf(const TermPtr& a, const TermPtr& b);

/// Normal form of a parallel composition of two normal forms: fuses
/// identities, shifts widths, or runs the left block's layers before the
/// right block's.
TermPtr par_nf(const TermPtr& a, const TermPtr& b);

/// Direct (non-rewriting) normal form of any typed term whose atoms all
/// have at least one input and one output wire; swaps of positive width
/// are treated as opaque generators. Defined structurally:
///   nf(id) = id, nf(g) = the zero-padded layer of g,
///   nf(u ; v) = seq_nf(nf(u), nf(v)), nf(u * v) = par_nf(nf(u), nf(v)).
/// The result passes is_normal_form. Throws StateEffectError when an
/// atom is a state or effect.
TermPtr nf(const TermPtr& t);

}  // namespace diagre
