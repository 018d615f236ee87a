import sys


class Coord:
    """Coordinates of a syntactic element: column in the vector literal."""

    __slots__ = ("column",)

    def __init__(self, column=None):
        self.column = column

    def __str__(self):
        return "@ %s" % self.column if self.column is not None else ""


class Node:
    """Abstract base class for vector-literal nodes."""

    __slots__ = ("coord",)
    attr_names = ()

    def children(self):
        """A sequence of all children that are Nodes"""
        return ()

    def show(self, buf=sys.stdout, offset=0, showcoord=False):
        """Pretty print the Node and all its children (recursively) to a buffer."""
        lead = " " * offset
        buf.write(lead + self.__class__.__name__ + ":")
        if self.attr_names:
            buf.write(" " + ", ".join(str(getattr(self, n)) for n in self.attr_names))
        if showcoord and self.coord is not None:
            buf.write(" %s" % self.coord)
        buf.write("\n")
        for child in self.children():
            child.show(buf, offset + 4, showcoord)


class Number(Node):
    """Numeric literal kept as text ("1/2", "0.25", "1e-3") so the field
    decides how to read it."""

    __slots__ = ("text", "coord")
    attr_names = ("text",)

    def __init__(self, text, coord=None):
        self.text = text
        self.coord = coord

    def negated(self):
        text = self.text[1:] if self.text.startswith("-") else "-" + self.text
        return Number(text, self.coord)


class Term(Node):
    """coefficient * basis vector"""

    __slots__ = ("coeff", "name", "coord")
    attr_names = ("name",)

    def __init__(self, coeff, name, coord=None):
        self.coeff = coeff
        self.name = name
        self.coord = coord

    def children(self):
        return (self.coeff,)

    def negated(self):
        return Term(self.coeff.negated(), self.name, self.coord)


class Combination(Node):
    """Linear combination of basis vectors: "1/2 W - Y"."""

    __slots__ = ("terms", "coord")

    def __init__(self, terms, coord=None):
        self.terms = terms
        self.coord = coord

    def children(self):
        return tuple(self.terms)


class Coordinates(Node):
    """Explicit coordinate list: "0,1,0,0"."""

    __slots__ = ("values", "coord")

    def __init__(self, values, coord=None):
        self.values = values
        self.coord = coord

    def children(self):
        return tuple(self.values)


class NodeVisitor:
    """A base NodeVisitor class for visiting lgr objects.
    Subclass it and define your own visit_XXX methods, where
    XXX is the class name you want to visit with these
    methods.
    """

    _method_cache = None

    def visit(self, node):
        """Visit a node."""

        if self._method_cache is None:
            self._method_cache = {}

        visitor = self._method_cache.get(node.__class__.__name__, None)
        if visitor is None:
            method = "visit_" + node.__class__.__name__
            visitor = getattr(self, method, self.generic_visit)
            self._method_cache[node.__class__.__name__] = visitor

        return visitor(node)

    def generic_visit(self, node):
        """Called if no explicit visitor function exists for a
        node. Implements preorder visiting of the node.
        """
        children = getattr(node, "children", None)
        if children is None:
            raise TypeError("no visitor for %s" % node.__class__.__name__)
        for child in children():
            self.visit(child)
