import argparse
import sys
import ply.lex as lex


class VectorLexer:
    """A lexer for vector literals such as "1/2 W - Y" or "0,1,0,0".
    After building it, set the input text with input(), and call token()
    to get new tokens.
    """

    def __init__(self, error_func):
        """Create a new Lexer.
        An error function. Will be called with an error
        message and column as arguments, in case of
        an error during lexing.
        """
        self.error_func = error_func

        # Keeps track of the last token returned from self.token()
        self.last_token = None

    def build(self, **kwargs):
        """Builds the lexer from the token rules. Must be
        called after the lexer object is created.

        This method exists separately, because the PLY
        manual warns against calling lex.lex inside __init__
        """
        self.lexer = lex.lex(object=self, **kwargs)

    def input(self, text):
        self.lexer.input(text)

    def token(self):
        self.last_token = self.lexer.token()
        return self.last_token

    def find_tok_column(self, token):
        """Find the (1-based) column of the token."""
        return token.lexpos + 1

    # Internal auxiliary methods
    def _error(self, msg, token):
        self.error_func(msg, self.find_tok_column(token))
        self.lexer.skip(1)

    #
    # All the tokens recognized by the lexer
    #
    tokens = (
        "NAME",
        "INTEGER",
        "FLOAT",
        "PLUS",
        "MINUS",
        "TIMES",
        "DIVIDE",
        "COMMA",
    )

    #
    # Rules
    #
    t_ignore = " \t"

    t_PLUS = r"\+"

    t_MINUS = r"-"

    t_TIMES = r"\*"

    t_DIVIDE = r"/"

    t_COMMA = r","

    # function rules are tried in definition order: FLOAT before INTEGER
    def t_FLOAT(self, t):
        r"(\d+\.\d*|\.\d+)([eE][-+]?\d+)?|\d+[eE][-+]?\d+"
        return t

    def t_INTEGER(self, t):
        r"\d+"
        return t

    def t_NAME(self, t):
        r"[A-Za-z_][A-Za-z_0-9]*"
        return t

    def t_error(self, t):
        msg = "Illegal character %s" % repr(t.value[0])
        self._error(msg, t)

    # Scanner (used only for test)
    def scan(self, data):
        self.lexer.input(data)
        output = ""
        while True:
            tok = self.lexer.token()
            if not tok:
                break
            output += str(tok) + "\n"
        return output


if __name__ == "__main__":

    # create argument parser
    parser = argparse.ArgumentParser()
    parser.add_argument("literal", help="Vector literal to be scanned", type=str)
    args = parser.parse_args()

    def print_error(msg, column):
        print("Lexical error: %s at column %d" % (msg, column), file=sys.stdout)

    # set error function
    m = VectorLexer(print_error)
    # Build the lexer
    m.build()
    print(m.scan(args.literal), end="")
