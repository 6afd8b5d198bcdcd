"""Sparse multivariate polynomial arithmetic over exact rationals.

Coefficients are fractions.Fraction values (never floats); monomials are
exponent tuples keyed to an ordered variable list and compared in graded
reverse lexicographic order throughout the library.
"""

from fractions import Fraction

from .errors import PolynomialParseError, UnknownVariableError

# Arbitrary-precision rational: auto-reduced, denominator always positive.
Rational = Fraction

Exponent = tuple[int, ...]


def grevlex_key(expo: Exponent):
    """Sort key for graded reverse lexicographic order (max = leading).

    Higher total degree wins; on ties the monomial whose last unequal
    exponent is smaller is the larger one.
    """
    return (sum(expo),) + tuple(-e for e in reversed(expo))


class Polynomial:
    """Immutable sparse polynomial over the rationals.

    `terms` maps exponent tuples (one slot per variable) to nonzero
    Fraction coefficients; zero coefficients are never stored.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables, terms):
        object.__setattr__(self, "variables", tuple(variables))
        nvars = len(self.variables)
        clean = {}
        for expo, coeff in terms.items():
            coeff = Fraction(coeff)
            if coeff == 0:
                continue
            expo = tuple(int(e) for e in expo)
            if len(expo) != nvars or any(e < 0 for e in expo):
                raise ValueError(f"bad exponent vector {expo} for {nvars} variables")
            clean[expo] = coeff
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, variables):
        return cls(variables, {})

    @classmethod
    def constant(cls, variables, value):
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): Fraction(value)})

    @classmethod
    def variable(cls, variables, name):
        variables = tuple(variables)
        idx = variables.index(name)
        expo = tuple(1 if i == idx else 0 for i in range(len(variables)))
        return cls(variables, {expo: Fraction(1)})

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.variables), Fraction(0))

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def vanishes_at_origin(self) -> bool:
        return self.constant_term() == 0

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def sorted_terms(self):
        """Terms in descending grevlex order (canonical iteration order)."""
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    # -- arithmetic --------------------------------------------------------

    def _check_ring(self, other: "Polynomial"):
        if self.variables != other.variables:
            raise ValueError(
                f"variable mismatch: {self.variables} vs {other.variables}"
            )

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.variables, other)
        self._check_ring(other)
        terms = dict(self.terms)
        for expo, coeff in other.terms.items():
            acc = terms.get(expo, Fraction(0)) + coeff
            if acc == 0:
                terms.pop(expo, None)
            else:
                terms[expo] = acc
        return Polynomial(self.variables, terms)

    def __neg__(self):
        return Polynomial(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.variables, other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial(
                self.variables, {e: c * other for e, c in self.terms.items()}
            )
        self._check_ring(other)
        terms: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                expo = tuple(a + b for a, b in zip(e1, e2))
                acc = terms.get(expo, Fraction(0)) + c1 * c2
                if acc == 0:
                    terms.pop(expo, None)
                else:
                    terms[expo] = acc
        return Polynomial(self.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result = Polynomial.constant(self.variables, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def derivative(self, name: str) -> "Polynomial":
        """Formal partial derivative with respect to one variable."""
        idx = self.variables.index(name)
        terms: dict[Exponent, Fraction] = {}
        for expo, coeff in self.terms.items():
            if expo[idx] == 0:
                continue
            new = list(expo)
            new[idx] -= 1
            terms[tuple(new)] = coeff * expo[idx]
        return Polynomial(self.variables, terms)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    # -- rendering ---------------------------------------------------------

    def _monomial_str(self, expo: Exponent) -> str:
        parts = []
        for name, e in zip(self.variables, expo):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for i, (expo, coeff) in enumerate(self.sorted_terms()):
            mono = self._monomial_str(expo)
            mag = abs(coeff)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            if i == 0:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self):
        return f"Polynomial({str(self)!r})"


# -- parsing ---------------------------------------------------------------

_OPS = set("+-*^()/")


def _tokenize(text: str):
    """Tokens: (kind, value, offset). Adjacent digits/digits around '/' fold
    into a single rational literal; any other '/' stays an operator token."""
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch in " \t\r\n":
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            num = int(text[start:i])
            if i < n and text[i] == "/" and i + 1 < n and text[i + 1].isdigit():
                i += 1
                dstart = i
                while i < n and text[i].isdigit():
                    i += 1
                den = int(text[dstart:i])
                if den == 0:
                    raise PolynomialParseError("zero denominator in literal", dstart)
                tokens.append(("number", Fraction(num, den), start))
            else:
                tokens.append(("number", Fraction(num), start))
            continue
        if ch.isalpha() or ch == "_":
            start = i
            while i < n and (text[i].isalnum() or text[i] == "_"):
                i += 1
            tokens.append(("name", text[start:i], start))
            continue
        if ch in _OPS:
            tokens.append(("op", ch, i))
            i += 1
            continue
        raise PolynomialParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    """Recursive descent for: expr := term ((+|-) term)*;
    term := factor (* factor)*; factor := - factor | atom (^ INT)?;
    atom := NUMBER | NAME | ( expr )."""

    def __init__(self, tokens, variables):
        self.tokens = tokens
        self.pos = 0
        self.variables = tuple(variables)

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, op):
        kind, value, offset = self.peek()
        if kind != "op" or value != op:
            raise PolynomialParseError(f"expected '{op}'", offset)
        return self.advance()

    def parse_expr(self) -> Polynomial:
        result = self.parse_term()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in "+-":
                self.advance()
                rhs = self.parse_term()
                result = result + rhs if value == "+" else result - rhs
            else:
                return result

    def parse_term(self) -> Polynomial:
        result = self.parse_factor()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value == "*":
                self.advance()
                result = result * self.parse_factor()
            else:
                return result

    def parse_factor(self) -> Polynomial:
        kind, value, _ = self.peek()
        if kind == "op" and value == "-":
            self.advance()
            return -self.parse_factor()
        atom = self.parse_atom()
        kind, value, offset = self.peek()
        if kind == "op" and value == "^":
            self.advance()
            kind, value, offset = self.peek()
            if kind != "number" or value.denominator != 1 or value < 0:
                raise PolynomialParseError(
                    "exponent must be a nonnegative integer", offset
                )
            self.advance()
            return atom ** int(value)
        return atom

    def parse_atom(self) -> Polynomial:
        kind, value, offset = self.advance()
        if kind == "number":
            return Polynomial.constant(self.variables, value)
        if kind == "name":
            if value not in self.variables:
                raise UnknownVariableError(value, offset)
            return Polynomial.variable(self.variables, value)
        if kind == "op" and value == "(":
            inner = self.parse_expr()
            self.expect_op(")")
            return inner
        raise PolynomialParseError("expected number, variable or '('", offset)


def parse_polynomial(text: str, variables) -> Polynomial:
    """Parse polynomial text (operators + - * ^, parentheses, rational
    literals like 2/3) into expanded normal form."""
    tokens = _tokenize(text)
    parser = _Parser(tokens, variables)
    result = parser.parse_expr()
    kind, _, offset = parser.peek()
    if kind != "end":
        raise PolynomialParseError("trailing input", offset)
    return result


def parse_fraction(text: str, variables) -> tuple[Polynomial, Polynomial]:
    """Parse `num` or `num / den` where both halves are polynomial texts.

    The split happens at the unique '/' operator token at parenthesis
    depth 0; '/' inside a rational literal (digits on both sides) never
    splits.  Returns (numerator, denominator), denominator 1 if absent.
    """
    tokens = _tokenize(text)
    depth = 0
    split_at = None
    for idx, (kind, value, offset) in enumerate(tokens):
        if kind != "op":
            continue
        if value == "(":
            depth += 1
        elif value == ")":
            depth -= 1
        elif value == "/" and depth == 0:
            if split_at is not None:
                raise PolynomialParseError("more than one top-level '/'", offset)
            split_at = idx
    if split_at is None:
        return parse_polynomial(text, variables), Polynomial.constant(variables, 1)
    num_tokens = tokens[:split_at] + [("end", "", tokens[split_at][2])]
    den_tokens = tokens[split_at + 1 :]
    num_parser = _Parser(num_tokens, variables)
    numerator = num_parser.parse_expr()
    kind, _, offset = num_parser.peek()
    if kind != "end":
        raise PolynomialParseError("trailing input before '/'", offset)
    den_parser = _Parser(den_tokens, variables)
    denominator = den_parser.parse_expr()
    kind, _, offset = den_parser.peek()
    if kind != "end":
        raise PolynomialParseError("trailing input", offset)
    return numerator, denominator
