#pragma once

#include <string>

#include "diagre/term.hpp"

namespace diagre {

/// One entry per non-empty, non-comment line, `NAME : D -> C`.
/// `#` starts a comment. Throws SignatureError / ParseError (line number).
Signature parse_signature(const std::string& text);

std::string print_signature(const Signature& sig);

/// Parses the concrete term syntax without typing it.
/// Atoms: `id[n]`, `swap[n,m]`, `tob[d]` (sugar for swap[d-1,1]) and
/// generator names. Operators: `*` (parallel, binds tighter) and `;`
/// (sequential), both right-associative; parentheses group; whitespace
/// is insignificant. The Unicode operators ⊗ and ⨾ are accepted too.
RawPtr parse_raw_term(const std::string& text);

/// parse + validate against the signature.
TermPtr parse_term(const std::string& text, const Signature& sig);

struct PrintOptions {
  bool unicode = false;  // emit ⨾ / ⊗ instead of ; / *
};

/// Deterministic printer; parenthesizes only where precedence or
/// associativity demands, so parse_term(print_term(t)) == t.
std::string print_term(const TermPtr& t, const PrintOptions& opts = {});

}  // namespace diagre
