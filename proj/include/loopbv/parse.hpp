#pragma once

#include "loopbv/bv.hpp"
#include "loopbv/render.hpp"

#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace loopbv {

/// Syntax or elaboration error with a source position (0-based offset).
class ParseError : public Error {
  public:
	ParseError(std::size_t pos, const std::string &msg)
	    : Error(msg + " (at position " + std::to_string(pos) + ")"), pos_(pos)
	{}
	std::size_t position() const { return pos_; }

  private:
	std::size_t pos_;
};

/// Expression tree for the element grammar:
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' uint)?
///   atom   := literal | symbol | '(' expr ')' | '{' expr ',' expr '}'
///           | 'D' '(' expr ')'
/// Literals are integers or exact fractions p/q; symbols are a<2l+1>,
/// e<2l>, x<2l+1>, h<2l> with the paper's subscripts. Generator indices are
/// validated against the signature at elaboration, not at parse time.
struct ExprNode {
	enum class Kind {
		literal,  ///< rational constant
		symbol,   ///< generator symbol
		sum,      ///< lhs + rhs
		diff,     ///< lhs - rhs
		product,  ///< lhs * rhs
		negate,   ///< -child
		power,    ///< child ^ exponent
		bracket,  ///< {lhs, rhs}
		delta,    ///< D(child)
	};

	Kind kind;
	std::size_t pos = 0;
	Rational value;          // literal
	char letter = 0;         // symbol
	int subscript = 0;       // symbol
	int exponent = 0;        // power
	std::unique_ptr<ExprNode> lhs, rhs;
};

using ExprPtr = std::unique_ptr<ExprNode>;

namespace detail {

class Lexer {
  public:
	struct Token {
		enum class Kind {
			number,
			symbol,
			delta,
			plus,
			minus,
			star,
			caret,
			lparen,
			rparen,
			lbrace,
			rbrace,
			comma,
			end,
		};
		Kind kind;
		std::size_t pos;
		Rational value;
		char letter = 0;
		int subscript = 0;
	};

	explicit Lexer(std::string_view src) : src_(src) { advance(); }

	const Token &peek() const { return tok_; }
	Token take()
	{
		Token t = tok_;
		advance();
		return t;
	}

  private:
	std::string_view src_;
	std::size_t pos_ = 0;
	Token tok_{};

	void advance()
	{
		while (pos_ < src_.size() &&
		       std::isspace(static_cast<unsigned char>(src_[pos_])))
			++pos_;
		tok_.pos = pos_;
		if (pos_ >= src_.size())
		{
			tok_.kind = Token::Kind::end;
			return;
		}
		char c = src_[pos_];
		switch (c)
		{
		case '+': tok_.kind = Token::Kind::plus; ++pos_; return;
		case '-': tok_.kind = Token::Kind::minus; ++pos_; return;
		case '*': tok_.kind = Token::Kind::star; ++pos_; return;
		case '^': tok_.kind = Token::Kind::caret; ++pos_; return;
		case '(': tok_.kind = Token::Kind::lparen; ++pos_; return;
		case ')': tok_.kind = Token::Kind::rparen; ++pos_; return;
		case '{': tok_.kind = Token::Kind::lbrace; ++pos_; return;
		case '}': tok_.kind = Token::Kind::rbrace; ++pos_; return;
		case ',': tok_.kind = Token::Kind::comma; ++pos_; return;
		default: break;
		}
		if (std::isdigit(static_cast<unsigned char>(c)))
		{
			std::size_t start = pos_;
			while (pos_ < src_.size() &&
			       std::isdigit(static_cast<unsigned char>(src_[pos_])))
				++pos_;
			// optional exact fraction p/q
			if (pos_ < src_.size() && src_[pos_] == '/' &&
			    pos_ + 1 < src_.size() &&
			    std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))
			{
				++pos_;
				while (pos_ < src_.size() &&
				       std::isdigit(static_cast<unsigned char>(src_[pos_])))
					++pos_;
			}
			tok_.kind = Token::Kind::number;
			tok_.value =
			    Rational::from_string(src_.substr(start, pos_ - start));
			return;
		}
		if (c == 'D')
		{
			tok_.kind = Token::Kind::delta;
			++pos_;
			return;
		}
		if (c == 'a' || c == 'e' || c == 'x' || c == 'h')
		{
			std::size_t start = pos_;
			++pos_;
			if (pos_ >= src_.size() ||
			    !std::isdigit(static_cast<unsigned char>(src_[pos_])))
				throw ParseError(start, "expected a subscript after '" +
				                            std::string(1, c) + "'");
			int sub = 0;
			while (pos_ < src_.size() &&
			       std::isdigit(static_cast<unsigned char>(src_[pos_])))
			{
				sub = sub * 10 + (src_[pos_] - '0');
				if (sub > 1000)
					throw ParseError(start, "subscript too large");
				++pos_;
			}
			tok_.kind = Token::Kind::symbol;
			tok_.letter = c;
			tok_.subscript = sub;
			return;
		}
		throw ParseError(pos_, std::string("unexpected character '") + c +
		                           "'");
	}
};

class Parser {
  public:
	explicit Parser(std::string_view src) : lex_(src) {}

	ExprPtr parse()
	{
		ExprPtr e = expr();
		if (lex_.peek().kind != Lexer::Token::Kind::end)
			throw ParseError(lex_.peek().pos, "trailing input");
		return e;
	}

  private:
	Lexer lex_;
	using TK = Lexer::Token::Kind;

	static ExprPtr node(ExprNode::Kind kind, std::size_t pos)
	{
		auto n = std::make_unique<ExprNode>();
		n->kind = kind;
		n->pos = pos;
		return n;
	}

	ExprPtr expr()
	{
		ExprPtr left;
		if (lex_.peek().kind == TK::minus)
		{
			auto t = lex_.take();
			left = node(ExprNode::Kind::negate, t.pos);
			left->lhs = term();
		}
		else
			left = term();
		while (lex_.peek().kind == TK::plus || lex_.peek().kind == TK::minus)
		{
			auto t = lex_.take();
			auto n = node(t.kind == TK::plus ? ExprNode::Kind::sum
			                                 : ExprNode::Kind::diff,
			              t.pos);
			n->lhs = std::move(left);
			n->rhs = term();
			left = std::move(n);
		}
		return left;
	}

	ExprPtr term()
	{
		ExprPtr left = factor();
		while (lex_.peek().kind == TK::star)
		{
			auto t = lex_.take();
			auto n = node(ExprNode::Kind::product, t.pos);
			n->lhs = std::move(left);
			n->rhs = factor();
			left = std::move(n);
		}
		return left;
	}

	ExprPtr factor()
	{
		ExprPtr base = atom();
		if (lex_.peek().kind == TK::caret)
		{
			auto t = lex_.take();
			auto e = lex_.take();
			if (e.kind != TK::number || !e.value.is_integer() ||
			    e.value.sign() < 0)
				throw ParseError(e.pos, "expected a nonnegative integer "
				                        "exponent");
			auto n = node(ExprNode::Kind::power, t.pos);
			n->exponent = static_cast<int>(e.value.num_small());
			n->lhs = std::move(base);
			return n;
		}
		return base;
	}

	ExprPtr atom()
	{
		auto t = lex_.take();
		switch (t.kind)
		{
		case TK::number:
		{
			auto n = node(ExprNode::Kind::literal, t.pos);
			n->value = t.value;
			return n;
		}
		case TK::symbol:
		{
			auto n = node(ExprNode::Kind::symbol, t.pos);
			n->letter = t.letter;
			n->subscript = t.subscript;
			return n;
		}
		case TK::lparen:
		{
			ExprPtr e = expr();
			expect(TK::rparen, "expected ')'");
			return e;
		}
		case TK::lbrace:
		{
			auto n = node(ExprNode::Kind::bracket, t.pos);
			n->lhs = expr();
			expect(TK::comma, "expected ',' in bracket");
			n->rhs = expr();
			expect(TK::rbrace, "expected '}'");
			return n;
		}
		case TK::delta:
		{
			expect(TK::lparen, "expected '(' after D");
			auto n = node(ExprNode::Kind::delta, t.pos);
			n->lhs = expr();
			expect(TK::rparen, "expected ')'");
			return n;
		}
		default:
			throw ParseError(t.pos, "expected a literal, symbol or '('");
		}
	}

	void expect(TK kind, const char *msg)
	{
		auto t = lex_.take();
		if (t.kind != kind)
			throw ParseError(t.pos, msg);
	}
};

} // namespace detail

/// Parses the element grammar; syntax errors carry the source position.
inline ExprPtr parse(std::string_view src)
{
	return detail::Parser(src).parse();
}

/// Elaborates a symbol against a signature and basis: the letter must belong
/// to the basis and the paper subscript must name a generator in range.
inline Element elaborate_symbol(const ExprNode &n, Signature sig, Basis basis)
{
	char expected_odd = odd_letter(basis);
	char expected_even = even_letter(basis);
	bool odd = n.letter == 'a' || n.letter == 'x';
	if (n.letter != expected_odd && n.letter != expected_even)
		throw ParseError(n.pos, std::string("symbol '") + n.letter +
		                            std::to_string(n.subscript) +
		                            "' does not belong to the " +
		                            basis_name(basis) + " basis");
	int l;
	if (odd)
	{
		if (n.subscript % 2 == 0)
			throw ParseError(n.pos, "odd generators have odd subscripts");
		l = (n.subscript - 1) / 2;
	}
	else
	{
		if (n.subscript % 2 == 1)
			throw ParseError(n.pos, "even generators have even subscripts");
		l = n.subscript / 2;
	}
	if (!sig.contains(l))
		throw ParseError(n.pos, std::string("generator '") + n.letter +
		                            std::to_string(n.subscript) +
		                            "' outside the signature (n=" +
		                            std::to_string(sig.n) +
		                            ", k=" + std::to_string(sig.k) + ")");
	return odd ? Element::odd_gen(sig, basis, l)
	           : Element::even_gen(sig, basis, l);
}

/// Evaluates an expression tree to an element. Bracket nodes use the
/// deviation bracket; D nodes use the BV operator (the circle action
/// delta in the Pontrjagin basis). Signature violations are reported with
/// source positions.
inline Element eval(const ExprNode &n, Signature sig, Basis basis)
{
	switch (n.kind)
	{
	case ExprNode::Kind::literal:
		return n.value * Element::unit(sig, basis);
	case ExprNode::Kind::symbol:
		return elaborate_symbol(n, sig, basis);
	case ExprNode::Kind::sum:
		return eval(*n.lhs, sig, basis) + eval(*n.rhs, sig, basis);
	case ExprNode::Kind::diff:
		return eval(*n.lhs, sig, basis) - eval(*n.rhs, sig, basis);
	case ExprNode::Kind::product:
		return eval(*n.lhs, sig, basis) * eval(*n.rhs, sig, basis);
	case ExprNode::Kind::negate:
		return -eval(*n.lhs, sig, basis);
	case ExprNode::Kind::power:
	{
		Element base = eval(*n.lhs, sig, basis);
		Element out = Element::unit(sig, basis);
		for (int i = 0; i < n.exponent; ++i)
			out *= base;
		return out;
	}
	case ExprNode::Kind::bracket:
	{
		Element a = eval(*n.lhs, sig, basis);
		Element b = eval(*n.rhs, sig, basis);
		try
		{
			if (basis == Basis::symplectic)
				return to_h_basis(
				    bracket_deviation(from_h_basis(a), from_h_basis(b)));
			return bracket_deviation(a, b);
		}
		catch (const Error &e)
		{
			throw ParseError(n.pos, e.what());
		}
	}
	case ExprNode::Kind::delta:
	{
		Element a = eval(*n.lhs, sig, basis);
		try
		{
			if (basis == Basis::pontrjagin)
				return delta_pontrjagin(a);
			if (basis == Basis::symplectic)
				return to_h_basis(bv_delta(from_h_basis(a)));
			return bv_delta(a);
		}
		catch (const Error &e)
		{
			throw ParseError(n.pos, e.what());
		}
	}
	}
	throw Error("eval: unreachable");
}

/// Convenience: parse and evaluate in one step.
inline Element eval_string(std::string_view src, Signature sig, Basis basis)
{
	ExprPtr ast = parse(src);
	return eval(*ast, sig, basis);
}

} // namespace loopbv
