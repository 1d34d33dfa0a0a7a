#include "diagre/textio.hpp"

#include <cctype>
#include <sstream>

namespace diagre {

// ---------------------------------------------------------------------------
// Signatures
// ---------------------------------------------------------------------------

Signature parse_signature(const std::string& text) {
  Signature sig;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string name, colon, arrow;
    int dom, cod;
    if (!(ls >> name)) continue;  // blank line
    if (!(ls >> colon >> dom >> arrow >> cod) || colon != ":" ||
        arrow != "->")
      throw ParseError("expected `NAME : D -> C` on line " +
                           std::to_string(lineno),
                       lineno);
    std::string extra;
    if (ls >> extra)
      throw ParseError("trailing input on line " + std::to_string(lineno),
                       lineno);
    sig.add(name, dom, cod);
  }
  return sig;
}

std::string print_signature(const Signature& sig) {
  std::string out;
  for (const auto& [name, e] : sig.entries()) {
    out += name + " : " + std::to_string(e.dom) + " -> " +
           std::to_string(e.cod) + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Term lexer
// ---------------------------------------------------------------------------

namespace {

struct Token {
  enum Kind { Name, Number, Semi, Star, LParen, RParen, LBrack, RBrack, Comma, End };
  Kind kind;
  std::string text;
  long value = 0;
  std::size_t offset = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    tok_.offset = pos_;
    if (pos_ >= text_.size()) {
      tok_.kind = Token::End;
      return;
    }
    char c = text_[pos_];
    switch (c) {
      case ';': tok_.kind = Token::Semi; ++pos_; return;
      case '*': tok_.kind = Token::Star; ++pos_; return;
      case '(': tok_.kind = Token::LParen; ++pos_; return;
      case ')': tok_.kind = Token::RParen; ++pos_; return;
      case '[': tok_.kind = Token::LBrack; ++pos_; return;
      case ']': tok_.kind = Token::RBrack; ++pos_; return;
      case ',': tok_.kind = Token::Comma; ++pos_; return;
      default: break;
    }
    // UTF-8 operators: U+2A3E (⨾) and U+2297 (⊗)
    if (text_.compare(pos_, 3, "⨾") == 0) {
      tok_.kind = Token::Semi;
      pos_ += 3;
      return;
    }
    if (text_.compare(pos_, 3, "⊗") == 0) {
      tok_.kind = Token::Star;
      pos_ += 3;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      tok_.kind = Token::Number;
      tok_.text = text_.substr(start, pos_ - start);
      try {
        tok_.value = std::stol(tok_.text);
      } catch (const std::out_of_range&) {
        throw ParseError("number out of range at offset " +
                             std::to_string(start),
                         start);
      }
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_' || text_[pos_] == '\''))
        ++pos_;
      tok_.kind = Token::Name;
      tok_.text = text_.substr(start, pos_ - start);
      return;
    }
    throw ParseError("unexpected character at offset " + std::to_string(pos_),
                     pos_);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  Token tok_;
};

// ---------------------------------------------------------------------------
// Term parser (recursive descent, right-associative operators)
// ---------------------------------------------------------------------------

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  RawPtr parse() {
    RawPtr t = seq_expr();
    if (lex_.peek().kind != Token::End)
      throw ParseError("trailing input at offset " +
                           std::to_string(lex_.peek().offset),
                       lex_.peek().offset);
    return t;
  }

 private:
  RawPtr seq_expr() {
    RawPtr left = par_expr();
    if (lex_.peek().kind == Token::Semi) {
      lex_.take();
      return raw_seq(left, seq_expr());
    }
    return left;
  }

  RawPtr par_expr() {
    RawPtr left = atom();
    if (lex_.peek().kind == Token::Star) {
      lex_.take();
      return raw_par(left, par_expr());
    }
    return left;
  }

  long bracketed_number() {
    expect(Token::LBrack, "[");
    long n = number();
    expect(Token::RBrack, "]");
    return n;
  }

  RawPtr atom() {
    const Token& t = lex_.peek();
    if (t.kind == Token::LParen) {
      lex_.take();
      RawPtr inner = seq_expr();
      expect(Token::RParen, ")");
      return inner;
    }
    if (t.kind == Token::Name) {
      Token name = lex_.take();
      if (name.text == "id") return raw_id(check_width(bracketed_number(), name.offset));
      if (name.text == "swap") {
        expect(Token::LBrack, "[");
        long n = number();
        expect(Token::Comma, ",");
        long m = number();
        expect(Token::RBrack, "]");
        return raw_swap(check_width(n, name.offset), check_width(m, name.offset));
      }
      if (name.text == "tob") {
        long d = bracketed_number();
        if (d < 1)
          throw ParseError("tob size must be >= 1 at offset " +
                               std::to_string(name.offset),
                           name.offset);
        return raw_swap(static_cast<int>(d - 1), 1);
      }
      return raw_gen(name.text);
    }
    throw ParseError("expected a term at offset " + std::to_string(t.offset),
                     t.offset);
  }

  int check_width(long n, std::size_t offset) {
    if (n < 0 || n > 1'000'000)
      throw ParseError("wire count out of range at offset " +
                           std::to_string(offset),
                       offset);
    return static_cast<int>(n);
  }

  long number() {
    if (lex_.peek().kind != Token::Number)
      throw ParseError("expected a number at offset " +
                           std::to_string(lex_.peek().offset),
                       lex_.peek().offset);
    return lex_.take().value;
  }

  void expect(Token::Kind k, const char* what) {
    if (lex_.peek().kind != k)
      throw ParseError(std::string("expected `") + what + "` at offset " +
                           std::to_string(lex_.peek().offset),
                       lex_.peek().offset);
    lex_.take();
  }

  Lexer lex_;
};

}  // namespace

RawPtr parse_raw_term(const std::string& text) { return Parser(text).parse(); }

TermPtr parse_term(const std::string& text, const Signature& sig) {
  return validate(parse_raw_term(text), sig);
}

// ---------------------------------------------------------------------------
// Printer
// ---------------------------------------------------------------------------

namespace {

// Precedence: atoms > * > ;
enum class Prec { Seq, Par, Atom };

void print_rec(const TermPtr& t, Prec ctx, const PrintOptions& opts,
               std::string& out) {
  switch (t->kind()) {
    case TermKind::Id:
      out += "id[" + std::to_string(t->id_width()) + "]";
      return;
    case TermKind::Gen:
      out += t->gen_name();
      return;
    case TermKind::Swap:
      out += "swap[" + std::to_string(t->swap_n()) + "," +
             std::to_string(t->swap_m()) + "]";
      return;
    case TermKind::Seq: {
      bool parens = ctx != Prec::Seq;
      if (parens) out += "(";
      // right-associative: a left Seq child must keep its parentheses
      print_rec(t->left(), Prec::Par, opts, out);
      out += opts.unicode ? " ⨾ " : " ; ";
      print_rec(t->right(), Prec::Seq, opts, out);
      if (parens) out += ")";
      return;
    }
    case TermKind::Par: {
      bool parens = ctx == Prec::Atom;
      if (parens) out += "(";
      print_rec(t->left(), Prec::Atom, opts, out);
      out += opts.unicode ? " ⊗ " : " * ";
      print_rec(t->right(), Prec::Par, opts, out);
      if (parens) out += ")";
      return;
    }
  }
}

}  // namespace

std::string print_term(const TermPtr& t, const PrintOptions& opts) {
  std::string out;
  print_rec(t, Prec::Seq, opts, out);
  return out;
}

}  // namespace diagre
