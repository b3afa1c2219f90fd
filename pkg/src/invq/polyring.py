"""Exact sparse polynomial arithmetic over the fixed variable tuple (x, y, z, p, q).

MultiPoly is the shared substrate for the joint-statistic generating
polynomials: a term map from exponent vectors to nonzero integer
coefficients.  Coefficients are Python ints, so totals like n! stay exact
at any size and every identity check is an equality of term maps.

QLaurent is the one-variable companion for q-only quantities.  It allows
negative exponents, which the q -> 1/q substitutions of the Stirling-family
relations need as an intermediate step.

Both types are immutable: every operation returns a fresh value, so
instances can be shared freely across threads.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

VARIABLES = ("x", "y", "z", "p", "q")

# exponent vector, one slot per entry of VARIABLES
ExpVec = tuple[int, int, int, int, int]

_CONST_KEY: ExpVec = (0, 0, 0, 0, 0)


def _term_order(item):
    # canonical order: total degree descending, then exponent vector
    # descending lexicographically (x-heavy terms first)
    key = item[0]
    return (-sum(key), tuple(-e for e in key))


def _format_monomial(key: ExpVec) -> str:
    parts = []
    for name, e in zip(VARIABLES, key):
        if e == 0:
            continue
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def _join_signed(chunks: list[tuple[int, str]]) -> str:
    # chunks: (coefficient sign, rendered magnitude)
    sign, body = chunks[0]
    text = body if sign >= 0 else "-" + body
    for sign, body in chunks[1:]:
        text += (" + " if sign >= 0 else " - ") + body
    return text


class MultiPoly:
    """Sparse exact polynomial in (x, y, z, p, q).

    The term map is normalized: zero coefficients are never stored and the
    zero polynomial is the empty map.  Structural equality of term maps is
    polynomial equality.

    >>> x, p = MultiPoly.variable("x"), MultiPoly.variable("p")
    >>> str((p + x) * x)
    'x^2 + x*p'
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[ExpVec, int] | None = None):
        data: dict[ExpVec, int] = {}
        if terms:
            for key, coeff in terms.items():
                key = tuple(key)
                if len(key) != 5 or any(e < 0 for e in key):
                    raise ValueError(f"bad exponent vector {key!r}")
                if coeff:
                    data[key] = data.get(key, 0) + coeff
                    if not data[key]:
                        del data[key]
        self._terms = data

    @classmethod
    def _raw(cls, terms: dict[ExpVec, int]) -> "MultiPoly":
        # trusted constructor: terms already normalized, ownership transfers
        poly = object.__new__(cls)
        poly._terms = terms
        return poly

    # ---------------------------------------------------------------- build

    @classmethod
    def zero(cls) -> "MultiPoly":
        return cls._raw({})

    @classmethod
    def one(cls) -> "MultiPoly":
        return cls._raw({_CONST_KEY: 1})

    @classmethod
    def constant(cls, c: int) -> "MultiPoly":
        return cls._raw({_CONST_KEY: c} if c else {})

    @classmethod
    def variable(cls, name: str) -> "MultiPoly":
        if name not in VARIABLES:
            raise ValueError(f"unknown variable {name!r}")
        key = tuple(1 if v == name else 0 for v in VARIABLES)
        return cls._raw({key: 1})

    @classmethod
    def monomial(cls, coeff: int, ex: int = 0, ey: int = 0, ez: int = 0,
                 ep: int = 0, eq: int = 0) -> "MultiPoly":
        if min(ex, ey, ez, ep, eq) < 0:
            raise ValueError("negative exponent")
        return cls._raw({(ex, ey, ez, ep, eq): coeff} if coeff else {})

    # ------------------------------------------------------------ accessors

    def items(self) -> Iterator[tuple[ExpVec, int]]:
        """Iterate (exponent vector, coefficient) pairs, unordered."""
        return iter(self._terms.items())

    def sorted_items(self) -> list[tuple[ExpVec, int]]:
        return sorted(self._terms.items(), key=_term_order)

    def coefficient(self, key: Iterable[int]) -> int:
        return self._terms.get(tuple(key), 0)

    def term_count(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree_in(self, name: str) -> int:
        """Largest exponent of `name`; 0 for the zero polynomial."""
        i = VARIABLES.index(name)
        return max((key[i] for key in self._terms), default=0)

    def total_degree(self) -> int:
        return max((sum(key) for key in self._terms), default=0)

    def constant_value(self) -> int:
        """The value of a constant polynomial; error if any variable occurs."""
        for key in self._terms:
            if key != _CONST_KEY:
                raise ValueError("polynomial is not constant")
        return self._terms.get(_CONST_KEY, 0)

    def support_variables(self) -> set[str]:
        used = set()
        for key in self._terms:
            for name, e in zip(VARIABLES, key):
                if e:
                    used.add(name)
        return used

    # ----------------------------------------------------------- arithmetic

    @staticmethod
    def _coerce(other):
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, int):
            return MultiPoly.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for key, coeff in other._terms.items():
            c = out.get(key, 0) + coeff
            if c:
                out[key] = c
            elif key in out:
                del out[key]
        return MultiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) > len(b):
            a, b = b, a
        out: dict[ExpVec, int] = {}
        get = out.get
        for ka, ca in a.items():
            ax, ay, az, ap, aq = ka
            for kb, cb in b.items():
                key = (ax + kb[0], ay + kb[1], az + kb[2], ap + kb[3], aq + kb[4])
                c = get(key, 0) + ca * cb
                if c:
                    out[key] = c
                elif key in out:
                    del out[key]
        return MultiPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative int")
        result = MultiPoly.one()
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __bool__(self):
        return bool(self._terms)

    __hash__ = None  # mutable-dict backed; compare structurally only

    # -------------------------------------------------------- substitutions

    def eval_partial(self, bindings: Mapping[str, int]) -> "MultiPoly":
        """Substitute integers for a subset of the variables.

        Unbound variables stay symbolic; binding everything yields a
        constant polynomial.  Unknown variable names are an error.
        """
        for name in bindings:
            if name not in VARIABLES:
                raise ValueError(f"unknown variable {name!r}")
        if not bindings:
            return self
        slots = [(VARIABLES.index(name), int(v)) for name, v in bindings.items()]
        out: dict[ExpVec, int] = {}
        for key, coeff in self._terms.items():
            c = coeff
            newkey = list(key)
            for i, v in slots:
                e = key[i]
                if e:
                    c *= v ** e
                    newkey[i] = 0
            if not c:
                continue
            k = tuple(newkey)
            nc = out.get(k, 0) + c
            if nc:
                out[k] = nc
            elif k in out:
                del out[k]
        return MultiPoly._raw(out)

    def scaled_shift(self, n: int) -> "MultiPoly":
        """Termwise x^a ... p^d  ->  x^(a+1) ... p^(d+n-a).

        This realizes p^n * x * f(x/p) without leaving the polynomial
        ring; it is the substitution step of the length-extension
        recurrence.  If some term has x-degree above d+n the substitution
        would need a negative p-exponent, which is an error.
        """
        if n < 0:
            raise ValueError("shift length must be nonnegative")
        out: dict[ExpVec, int] = {}
        for (ax, ay, az, ap, aq), coeff in self._terms.items():
            pe = ap + n - ax
            if pe < 0:
                raise ValueError("substitution leaves polynomial ring")
            out[(ax + 1, ay, az, pe, aq)] = coeff
        return MultiPoly._raw(out)

    def dilate_x(self, j: int = 1) -> "MultiPoly":
        """Substitute x -> q^j * x (termwise x^a gains q^(j*a))."""
        out: dict[ExpVec, int] = {}
        for (ax, ay, az, ap, aq), coeff in self._terms.items():
            eq = aq + j * ax
            if eq < 0:
                raise ValueError("substitution leaves polynomial ring")
            out[(ax, ay, az, ap, eq)] = coeff
        return MultiPoly._raw(out)

    def coefficients_in(self, name: str) -> dict[int, "MultiPoly"]:
        """Split into {exponent of `name`: polynomial in the other variables}."""
        i = VARIABLES.index(name)
        out: dict[int, dict[ExpVec, int]] = {}
        for key, coeff in self._terms.items():
            e = key[i]
            rest = list(key)
            rest[i] = 0
            out.setdefault(e, {})[tuple(rest)] = coeff
        return {e: MultiPoly._raw(terms) for e, terms in out.items()}

    def truncate(self, name: str, max_exp: int) -> "MultiPoly":
        """Drop every term whose exponent of `name` exceeds max_exp."""
        i = VARIABLES.index(name)
        return MultiPoly._raw(
            {k: c for k, c in self._terms.items() if k[i] <= max_exp})

    # ------------------------------------------------------------ rendering

    def __str__(self):
        if not self._terms:
            return "0"
        chunks = []
        for key, coeff in self.sorted_items():
            mono = _format_monomial(key)
            mag = abs(coeff)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            chunks.append((1 if coeff > 0 else -1, body))
        return _join_signed(chunks)

    def __repr__(self):
        return f"MultiPoly({str(self)!r})"

    def to_json_terms(self) -> list[dict]:
        """Canonically ordered list of {"coeff", "ex", "ey", "ez", "ep", "eq"}."""
        return [
            {"coeff": c, "ex": k[0], "ey": k[1], "ez": k[2], "ep": k[3], "eq": k[4]}
            for k, c in self.sorted_items()
        ]

    @classmethod
    def from_json_terms(cls, items: Iterable[Mapping]) -> "MultiPoly":
        terms: dict[ExpVec, int] = {}
        for t in items:
            key = (t["ex"], t["ey"], t["ez"], t["ep"], t["eq"])
            terms[key] = terms.get(key, 0) + t["coeff"]
        return cls(terms)

    def as_qlaurent(self) -> "QLaurent":
        """View a q-only polynomial as a QLaurent; error if x,y,z,p occur."""
        out: dict[int, int] = {}
        for key, coeff in self._terms.items():
            if any(key[:4]):
                raise ValueError("polynomial involves more than q")
            out[key[4]] = coeff
        return QLaurent._raw(out)


class QLaurent:
    """Laurent polynomial in q alone, exact integer coefficients.

    >>> str(QLaurent({2: 3, 0: 1}))
    '3q^2 + 1'
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        data: dict[int, int] = {}
        if terms:
            for e, c in terms.items():
                if c:
                    data[int(e)] = data.get(int(e), 0) + c
                    if not data[int(e)]:
                        del data[int(e)]
        self._terms = data

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> "QLaurent":
        val = object.__new__(cls)
        val._terms = terms
        return val

    @classmethod
    def zero(cls) -> "QLaurent":
        return cls._raw({})

    @classmethod
    def one(cls) -> "QLaurent":
        return cls._raw({0: 1})

    @classmethod
    def constant(cls, c: int) -> "QLaurent":
        return cls._raw({0: c} if c else {})

    @classmethod
    def q_power(cls, e: int, coeff: int = 1) -> "QLaurent":
        return cls._raw({int(e): coeff} if coeff else {})

    # ------------------------------------------------------------ accessors

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(self._terms.items())

    def coefficient(self, e: int) -> int:
        return self._terms.get(e, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_polynomial(self) -> bool:
        return all(e >= 0 for e in self._terms)

    def min_exponent(self) -> int:
        return min(self._terms, default=0)

    def max_exponent(self) -> int:
        return max(self._terms, default=0)

    # ----------------------------------------------------------- arithmetic

    @staticmethod
    def _coerce(other):
        if isinstance(other, QLaurent):
            return other
        if isinstance(other, int):
            return QLaurent.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            nc = out.get(e, 0) + c
            if nc:
                out[e] = nc
            elif e in out:
                del out[e]
        return QLaurent._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return QLaurent._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[int, int] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                e = ea + eb
                c = out.get(e, 0) + ca * cb
                if c:
                    out[e] = c
                elif e in out:
                    del out[e]
        return QLaurent._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative int")
        result = QLaurent.one()
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __bool__(self):
        return bool(self._terms)

    __hash__ = None

    # -------------------------------------------------------- substitutions

    def times_q_power(self, e: int) -> "QLaurent":
        return QLaurent._raw({k + e: c for k, c in self._terms.items()})

    def substitute_q_inverse(self) -> "QLaurent":
        """q -> 1/q, i.e. negate every exponent."""
        return QLaurent._raw({-k: c for k, c in self._terms.items()})

    def evaluate(self, value: int) -> int:
        """Exact evaluation at an integer q; q=0 needs no negative exponents."""
        total = 0
        for e, c in self._terms.items():
            if e < 0:
                if value in (1, -1):
                    total += c * value ** (-e)
                    continue
                raise ValueError("negative exponent; cannot evaluate away from q=1,-1")
            total += c * value ** e
        return total

    def to_multipoly(self) -> MultiPoly:
        if not self.is_polynomial():
            raise ValueError("Laurent part present; not a polynomial in q")
        return MultiPoly._raw({(0, 0, 0, 0, e): c for e, c in self._terms.items()})

    # ------------------------------------------------------------ rendering

    def __str__(self):
        if not self._terms:
            return "0"
        chunks = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                qpart = "q" if e == 1 else f"q^{e}"
                body = qpart if mag == 1 else f"{mag}{qpart}"
            chunks.append((1 if c > 0 else -1, body))
        return _join_signed(chunks)

    def __repr__(self):
        return f"QLaurent({str(self)!r})"
