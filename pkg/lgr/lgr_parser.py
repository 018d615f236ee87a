import argparse
import sys
from ply.yacc import yacc
from lgr.lgr_ast import Combination, Coord, Coordinates, NodeVisitor, Number, Term
from lgr.lgr_algebra import Vector
from lgr.lgr_errors import DimensionMismatch, InvalidInput, ensure
from lgr.lgr_lexer import VectorLexer


class VectorParser:
    """Parser for the vector literals accepted on the command line:

        Y                 a basis vector
        1/2 W - Y + 0.5*Z a linear combination of basis vectors
        0,1,0,0           a coordinate list
    """

    def __init__(self, debug=False):
        """Create a new VectorParser."""
        self.vlex = VectorLexer(self._lexer_error)
        self.vlex.build()
        self.tokens = self.vlex.tokens

        self.vparser = yacc(module=self, start="literal", debug=debug, write_tables=False)
        self._text = ""

    def parse(self, text, debuglevel=0):
        self._text = text
        ensure(text.strip() != "", InvalidInput, message="empty vector literal")
        return self.vparser.parse(input=text, lexer=self.vlex, debug=debuglevel)

    def _lexer_error(self, msg, column):
        raise InvalidInput(message="LexerError: %s at column %d in %r" % (msg, column, self._text))

    def _parser_error(self, msg, coord=None):
        raise InvalidInput(message="ParserError: %s %s in %r" % (msg, coord or "", self._text))

    def _token_coord(self, p, token_idx):
        return Coord(p.lexpos(token_idx) + 1)

    def p_literal(self, p):
        """literal : expression
        | coordinates
        """
        p[0] = p[1]

    def p_coordinates_1(self, p):
        """coordinates : signed_number COMMA signed_number"""
        p[0] = Coordinates([p[1], p[3]], coord=p[1].coord)

    def p_coordinates_2(self, p):
        """coordinates : coordinates COMMA signed_number"""
        p[1].values.append(p[3])
        p[0] = p[1]

    def p_signed_number(self, p):
        """signed_number : number
        | MINUS number
        | PLUS number
        """
        if len(p) == 2:
            p[0] = p[1]
        elif p[1] == "-":
            p[0] = p[2].negated()
        else:
            p[0] = p[2]

    def p_expression_1(self, p):
        """expression : term"""
        p[0] = Combination([p[1]], coord=p[1].coord)

    def p_expression_2(self, p):
        """expression : MINUS term
        | PLUS term
        """
        term = p[2].negated() if p[1] == "-" else p[2]
        p[0] = Combination([term], coord=self._token_coord(p, 1))

    def p_expression_3(self, p):
        """expression : expression PLUS term
        | expression MINUS term
        """
        term = p[3].negated() if p[2] == "-" else p[3]
        p[1].terms.append(term)
        p[0] = p[1]

    def p_term_1(self, p):
        """term : number NAME
        | number TIMES NAME
        """
        p[0] = Term(p[1], p[len(p) - 1], coord=p[1].coord)

    def p_term_2(self, p):
        """term : NAME"""
        coord = self._token_coord(p, 1)
        p[0] = Term(Number("1", coord), p[1], coord=coord)

    def p_number_1(self, p):
        """number : INTEGER
        | FLOAT
        """
        p[0] = Number(p[1], coord=self._token_coord(p, 1))

    def p_number_2(self, p):
        """number : INTEGER DIVIDE INTEGER"""
        p[0] = Number(p[1] + "/" + p[3], coord=self._token_coord(p, 1))

    def p_error(self, p):
        if p:
            self._parser_error("Before: %s" % p.value, Coord(p.lexpos + 1))
        else:
            self._parser_error("At the end of input")


class VectorResolver(NodeVisitor):
    """Turns a parsed literal into a Vector of the given algebra."""

    def __init__(self, algebra):
        self.algebra = algebra
        self.field = algebra.field

    def visit_Number(self, node):
        return self.field.parse(node.text)

    def visit_Coordinates(self, node):
        ensure(
            len(node.values) == self.algebra.dim,
            DimensionMismatch,
            expected=self.algebra.dim,
            got=len(node.values),
        )
        return Vector(self.visit(v) for v in node.values)

    def visit_Combination(self, node):
        coords = [self.field.zero] * self.algebra.dim
        for term in node.terms:
            coords[self.algebra.index(term.name)] += self.visit(term.coeff)
        return Vector(coords)


_parser = None


def parse_vector(text, algebra):
    global _parser
    if _parser is None:
        _parser = VectorParser()
    return VectorResolver(algebra).visit(_parser.parse(text))


if __name__ == "__main__":

    # create argument parser
    parser = argparse.ArgumentParser()
    parser.add_argument("literal", help="Vector literal to be parsed", type=str)
    args = parser.parse_args()

    p = VectorParser()
    try:
        ast = p.parse(args.literal)
    except InvalidInput as e:
        print(e, file=sys.stdout)
        sys.exit(1)
    ast.show(showcoord=True)
