#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include <hopfgreen/green_ring.hpp>

namespace hopfgreen {

/// Recursive-descent parsers for the session grammars. Whitespace is
/// insignificant everywhere.
///
///   cyc-expr:  integer literals, `z` (zeta_N for the session N), binary
///              + - * / ^, parentheses, unary minus
///   character: `eps` | `chr(free=[...], tor=[...])`
///   module:    `V{t}(<char>)`, `W{t}(<char>; eta=<cyc-expr>)`, sums with
///              `+` and integer multiplicities `3*V2(...)`
///   genpoly:   integer combinations of products of `eps`/`chr(...)`,
///              `y[^k]`, `z[^k]`, `x[<root-expr>]` (the generator index is
///              root^{s'})
class ExprParser {
 public:
  ExprParser(const HopfParams& params, std::string_view text)
      : params_(&params), field_(params.field()), text_(text) {}
  /// Field-only parser: enough for cyclotomic expressions (used while the
  /// session parameters are still being assembled).
  ExprParser(const CycField* field, std::string_view text)
      : params_(nullptr), field_(field), text_(text) {}

  CycNum parse_cyc() {
    CycNum v = cyc_sum();
    expect_end();
    return v;
  }

  Character parse_character() {
    Character c = character();
    expect_end();
    return c;
  }

  Decomposition parse_module_expr() {
    Decomposition d = module_sum();
    expect_end();
    return d;
  }

  GenPoly parse_genpoly() {
    GenPoly g = gp_sum();
    expect_end();
    return g;
  }

 private:
  // ---- lexing helpers ----
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool eof() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!accept(c))
      throw ParseError(std::string("expected '") + c + "' " + what, pos_);
  }
  void expect_end() {
    if (!eof()) throw ParseError("unexpected trailing input", pos_);
  }
  bool accept_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) != w) return false;
    std::size_t after = pos_ + w.size();
    if (after < text_.size() &&
        (std::isalnum(static_cast<unsigned char>(text_[after])) || text_[after] == '_'))
      return false;
    pos_ = after;
    return true;
  }
  bool peek_digit() {
    return std::isdigit(static_cast<unsigned char>(peek())) != 0;
  }
  mpz_class integer_literal() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) throw ParseError("expected an integer", pos_);
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }
  Int small_integer(const char* what) {
    mpz_class v = integer_literal();
    if (!v.fits_slong_p())
      throw ParseError(std::string(what) + " out of range", pos_);
    return v.get_si();
  }

  // ---- cyclotomic expressions ----
  CycNum cyc_sum() {
    CycNum v = cyc_product();
    while (true) {
      if (accept('+')) {
        v = v + cyc_product();
      } else if (accept('-')) {
        v = v - cyc_product();
      } else {
        return v;
      }
    }
  }
  CycNum cyc_product() {
    CycNum v = cyc_power();
    while (true) {
      if (accept('*')) {
        v = v * cyc_power();
      } else if (accept('/')) {
        CycNum d = cyc_power();
        if (d.is_zero()) throw ParseError("division by zero", pos_);
        v = v / d;
      } else {
        return v;
      }
    }
  }
  CycNum cyc_power() {
    CycNum v = cyc_unary();
    if (accept('^')) {
      bool neg = accept('-');
      Int e = small_integer("exponent");
      if (neg && v.is_zero()) throw ParseError("division by zero", pos_);
      v = v.pow(neg ? -e : e);
    }
    return v;
  }
  CycNum cyc_unary() {
    if (accept('-')) return -cyc_unary();
    return cyc_atom();
  }
  CycNum cyc_atom() {
    if (accept('(')) {
      CycNum v = cyc_sum();
      expect(')', "to close the expression");
      return v;
    }
    if (accept_word("z")) return CycNum::root_of_unity(field_, 1);
    if (peek_digit()) return CycNum::integer(field_, integer_literal());
    throw ParseError("expected an integer, 'z' or '('", pos_);
  }

  // ---- characters ----
  Character character() {
    if (accept_word("eps")) return params().eps();
    if (!accept_word("chr"))
      throw ParseError("expected 'eps' or 'chr(...)'", pos_);
    expect('(', "after chr");
    std::vector<CycNum> free_images;
    std::vector<Int> torsion;
    bool have_free = false, have_tor = false;
    while (!accept(')')) {
      if (accept_word("free")) {
        if (have_free) throw ParseError("duplicate free= list", pos_);
        have_free = true;
        expect('=', "after free");
        expect('[', "to open the image list");
        if (!accept(']')) {
          do {
            free_images.push_back(cyc_sum());
          } while (accept(','));
          expect(']', "to close the image list");
        }
      } else if (accept_word("tor")) {
        if (have_tor) throw ParseError("duplicate tor= list", pos_);
        have_tor = true;
        expect('=', "after tor");
        expect('[', "to open the exponent list");
        if (!accept(']')) {
          do {
            bool neg = accept('-');
            Int e = small_integer("torsion exponent");
            torsion.push_back(neg ? -e : e);
          } while (accept(','));
          expect(']', "to close the exponent list");
        }
      } else {
        throw ParseError("expected free= or tor= in chr(...)", pos_);
      }
      if (!accept(',') && peek() != ')')
        throw ParseError("expected ',' or ')' in chr(...)", pos_);
    }
    if (static_cast<Int>(free_images.size()) != params().group()->free_rank)
      throw ParseError("chr(...) free image count does not match the group",
                       pos_);
    if (torsion.size() != params().group()->torsion.size())
      throw ParseError("chr(...) torsion exponent count does not match the group",
                       pos_);
    return Character(params().group(), field_, std::move(free_images),
                     std::move(torsion));
  }

  // ---- module expressions ----
  Decomposition module_sum() {
    Decomposition d = module_term();
    while (accept('+')) d += module_term();
    return d;
  }
  Decomposition module_term() {
    Int mult = 1;
    if (peek_digit()) {
      mult = small_integer("multiplicity");
      expect('*', "between multiplicity and module");
    }
    Label lab = module_atom();
    Decomposition d;
    d.add(lab, mult);
    return d;
  }
  Label module_atom() {
    if (peek() == 'V') {
      ++pos_;
      Int t = small_integer("module size");
      expect('(', "after V{t}");
      Character lam = character();
      expect(')', "to close V{t}(...)");
      return make_nil(params(), t, lam);
    }
    if (peek() == 'W') {
      ++pos_;
      Int t = small_integer("module size");
      expect('(', "after W{t}");
      Character sig = character();
      expect(';', "before eta");
      if (!accept_word("eta")) throw ParseError("expected eta=...", pos_);
      expect('=', "after eta");
      CycNum eta = cyc_sum();
      expect(')', "to close W{t}(...)");
      if (eta.is_zero())
        throw ParseError(
            "eta = 0 is rejected: the class with beta = 0 is the nilpotent "
            "module of dimension t*sbar; spell it as a V-module instead",
            pos_);
      return make_nonnil(params(), t, sig, eta);
    }
    throw ParseError("expected V{t}(...) or W{t}(...)", pos_);
  }

  // ---- generator polynomials ----
  GenPoly gp_sum() {
    bool neg = accept('-');
    GenPoly g = gp_term();
    if (neg) g = g.scaled(-1);
    while (true) {
      if (accept('+')) {
        g += gp_term();
      } else if (accept('-')) {
        g -= gp_term();
      } else {
        return g;
      }
    }
  }
  GenPoly gp_term() {
    GenPoly g = gp_factor();
    while (accept('*')) g = genpoly_mul(params(), g, gp_factor());
    return g;
  }
  GenPoly gp_factor() {
    if (accept('(')) {
      GenPoly g = gp_sum();
      expect(')', "to close the group");
      return g;
    }
    if (peek_digit()) {
      Int c = small_integer("coefficient");
      return GenPoly::constant(params(), c);
    }
    if (accept_word("y")) return GenPoly::y(params(), gp_exponent());
    if (accept_word("z")) return GenPoly::z(params(), gp_exponent());
    if (accept_word("x")) {
      expect('[', "after x");
      CycNum root = cyc_sum();
      expect(']', "to close x[...]");
      if (root.is_zero()) throw ParseError("x[...] needs a nonzero root", pos_);
      return GenPoly::x(params(), root);
    }
    return GenPoly::character(params(), character());
  }
  Int gp_exponent() {
    if (!accept('^')) return 1;
    Int e = small_integer("exponent");
    if (e < 0) throw ParseError("negative generator exponent", pos_);
    return e;
  }

  const HopfParams& params() {
    if (!params_)
      throw ParseError("this grammar needs full session parameters", pos_);
    return *params_;
  }

  const HopfParams* params_;
  const CycField* field_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

inline CycNum parse_cyc(const HopfParams& p, std::string_view text) {
  return ExprParser(p, text).parse_cyc();
}
inline CycNum parse_cyc(const CycField* f, std::string_view text) {
  return ExprParser(f, text).parse_cyc();
}
inline Character parse_character(const HopfParams& p, std::string_view text) {
  return ExprParser(p, text).parse_character();
}
inline Decomposition parse_module_expr(const HopfParams& p,
                                       std::string_view text) {
  return ExprParser(p, text).parse_module_expr();
}
inline GenPoly parse_genpoly(const HopfParams& p, std::string_view text) {
  return ExprParser(p, text).parse_genpoly();
}

}  // namespace hopfgreen
