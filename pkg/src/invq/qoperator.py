"""Symbolic normal ordering of iterated g * D_q applications.

Words are tuples of factors g_i^(j) or f_i^(j), where i counts how often
the factor has been q-differentiated and (j) means the argument is scaled
by q^j (factor evaluated at x q^j).  The scaling rule
    D_q applied to h_i^(j) yields q^j h_{i+1}^(j)
plus the product rule (every factor right of the differentiated one gains
one argument scale) normal-orders (g D_q)^n f into a combination of such
words with q-polynomial coefficients.

The coefficient of a fixed g-word, with the terminal f factor stripped,
is a q-analog of the Comtet coefficient; it is computed here three ways
(expansion extraction, an explicit Gaussian-binomial sum over bounded
compositions, and a two-term recurrence) and specializes to
x^k * stirling2_q(n, k) under the geometric-word substitution G_IS_X.
"""

from __future__ import annotations

from typing import Callable, Iterator, NamedTuple

from .invseq import inversion_sequences, occurrence_counts, sequence_stats
from .polyring import MultiPoly, QLaurent
from .qcalc import q_binomial


class Factor(NamedTuple):
    kind: str   # "g" or "f"
    deriv: int  # number of q-derivatives taken
    shift: int  # argument scale: factor evaluated at x q^shift


Word = tuple[Factor, ...]


def g_factor(deriv: int = 0, shift: int = 0) -> Factor:
    return Factor("g", deriv, shift)


def f_factor(deriv: int = 0, shift: int = 0) -> Factor:
    return Factor("f", deriv, shift)


def _format_factor(f: Factor) -> str:
    text = f.kind
    if f.kind == "f" or f.deriv or f.shift:
        text += f"_{f.deriv}"
    if f.shift:
        text += f"^({f.shift})"
    return text


class SymExpr:
    """Finite combination of words with QLaurent coefficients.

    Zero coefficients are elided; equality is structural.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[Word, QLaurent] | None = None):
        data: dict[Word, QLaurent] = {}
        if terms:
            for word, coeff in terms.items():
                if not isinstance(coeff, QLaurent):
                    coeff = QLaurent.constant(coeff)
                if coeff:
                    data[tuple(word)] = coeff
        self._terms = data

    @classmethod
    def _raw(cls, terms: dict[Word, QLaurent]) -> "SymExpr":
        expr = object.__new__(cls)
        expr._terms = terms
        return expr

    @classmethod
    def from_word(cls, word: Word, coeff: QLaurent | int = 1) -> "SymExpr":
        if not isinstance(coeff, QLaurent):
            coeff = QLaurent.constant(coeff)
        return cls._raw({tuple(word): coeff} if coeff else {})

    @classmethod
    def zero(cls) -> "SymExpr":
        return cls._raw({})

    def items(self) -> Iterator[tuple[Word, QLaurent]]:
        return iter(self._terms.items())

    def sorted_items(self) -> list[tuple[Word, QLaurent]]:
        return sorted(self._terms.items(), key=lambda kv: kv[0])

    def word_count(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other):
        if not isinstance(other, SymExpr):
            return NotImplemented
        out = dict(self._terms)
        for word, coeff in other._terms.items():
            c = out.get(word)
            c = coeff if c is None else c + coeff
            if c:
                out[word] = c
            elif word in out:
                del out[word]
        return SymExpr._raw(out)

    def scale(self, coeff: QLaurent | int) -> "SymExpr":
        if not isinstance(coeff, QLaurent):
            coeff = QLaurent.constant(coeff)
        if not coeff:
            return SymExpr.zero()
        return SymExpr._raw({w: c * coeff for w, c in self._terms.items()})

    def __eq__(self, other):
        if not isinstance(other, SymExpr):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for word, coeff in self.sorted_items():
            body = " ".join(_format_factor(f) for f in word)
            if coeff == QLaurent.one():
                parts.append(body)
            else:
                parts.append(f"({coeff}) {body}")
        return " + ".join(parts)

    def __repr__(self):
        return f"SymExpr({str(self)!r})"


# ------------------------------------------------------------ the operator

def dq_word(word: Word, coeff: QLaurent) -> Iterator[tuple[Word, QLaurent]]:
    """Product rule: differentiate each position, scaling everything to
    its right by one more power of q."""
    for i, f in enumerate(word):
        new = (word[:i]
               + (Factor(f.kind, f.deriv + 1, f.shift),)
               + tuple(Factor(g.kind, g.deriv, g.shift + 1)
                       for g in word[i + 1:]))
        yield new, coeff.times_q_power(f.shift)


def dq_expr(expr: SymExpr) -> SymExpr:
    out: dict[Word, QLaurent] = {}
    for word, coeff in expr.items():
        for new, c in dq_word(word, coeff):
            acc = out.get(new)
            acc = c if acc is None else acc + c
            if acc:
                out[new] = acc
            elif new in out:
                del out[new]
    return SymExpr._raw(out)


def times_g(expr: SymExpr) -> SymExpr:
    """Left-multiply every word by a fresh unscaled g."""
    return SymExpr._raw({(g_factor(),) + w: c for w, c in expr.items()})


def apply_gdq(expr: SymExpr) -> SymExpr:
    """One application of g * D_q.  Every word must end in an f factor."""
    for word, _ in expr.items():
        if not word or word[-1].kind != "f":
            raise ValueError("each word must terminate in an f factor")
    return times_g(dq_expr(expr))


def operator_expansion(n: int) -> SymExpr:
    """(g D_q)^n applied to a bare f, normal-ordered."""
    if n < 0:
        raise ValueError("needs n >= 0")
    expr = SymExpr.from_word((f_factor(),))
    for _ in range(n):
        expr = apply_gdq(expr)
    return expr


def expansion_from_sequences(n: int) -> SymExpr:
    """The same normal form assembled directly from inversion sequences.

    Each e contributes q^inv(e) times the word
    g g_{k_1} g_{k_2}^(K_1) ... g_{k_{n-1}}^(K_{n-2}) f_k^(K_{n-1}),
    where k_j counts entries of e equal to n - j, K_j is the running sum,
    and k is the number of zeros.
    """
    if n < 1:
        raise ValueError("needs n >= 1")
    if n > 9:
        raise ValueError("enumeration bound is n <= 9")
    out: dict[Word, QLaurent] = {}
    for e in inversion_sequences(n):
        counts = occurrence_counts(e)
        word = [g_factor()]
        running = 0
        for j in range(1, n):
            kj = counts[n - j]
            word.append(Factor("g", kj, running))
            running += kj
        word.append(Factor("f", counts[0], running))
        word = tuple(word)
        inv = sequence_stats(e).inv
        acc = out.get(word)
        add = QLaurent.q_power(inv)
        acc = add if acc is None else acc + add
        out[word] = acc
    return SymExpr._raw(out)


# ----------------------------------------------------- Comtet-style coefficients

def comtet_coeff_from_expansion(expr: SymExpr, k: int) -> SymExpr:
    """Coefficient of the terminal f_k factor inside a full expansion:
    the sub-sum of words ending in f with deriv k, terminal factor stripped."""
    out: dict[Word, QLaurent] = {}
    for word, coeff in expr.items():
        if not word or word[-1].kind != "f":
            raise ValueError("each word must terminate in an f factor")
        if word[-1].deriv == k:
            out[word[:-1]] = coeff
    return SymExpr._raw(out)


def comtet_coeff_explicit(n: int, k: int) -> SymExpr:
    """Explicit form: sum over compositions (k_1, ..., k_{n-1}) with
    K_j <= j and K_{n-1} = n - k of
    prod_j qbinom(j - K_{j-1}, k_j) times the matching g-word."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    target = n - k
    out: dict[Word, QLaurent] = {}

    def rec(j: int, running: int, word: list[Factor], coeff: QLaurent):
        if j == n:
            if running == target:
                key = tuple(word)
                acc = out.get(key)
                acc = coeff if acc is None else acc + coeff
                out[key] = acc
            return
        for kj in range(min(j - running, target - running) + 1):
            factor = q_binomial(j - running, kj)
            word.append(Factor("g", kj, running))
            rec(j + 1, running + kj, word, coeff * factor)
            word.pop()

    rec(1, 0, [g_factor()], QLaurent.one())
    return SymExpr._raw(out)


def comtet_coeff_recurrence(n: int, k: int) -> SymExpr:
    """Two-term recurrence
    L(n+1, k) = g D_q L(n, k) + q^(n-k+1) g L(n, k-1),
    from L(0, 0) = empty word."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")

    def build(m: int, j: int) -> SymExpr:
        if m == 0:
            return (SymExpr.from_word(()) if j == 0 else SymExpr.zero())
        if j < 1 or j > m:
            return SymExpr.zero()
        result = times_g(dq_expr(build(m - 1, j)))
        lower = build(m - 1, j - 1)
        if not lower.is_zero():
            result = result + times_g(lower).scale(
                QLaurent.q_power(m - j))
        return result

    return build(n, k)


# --------------------------------------------------------- specializations

GRule = Callable[[int, int], MultiPoly]


def geometric_g_rule(deriv: int, shift: int) -> MultiPoly:
    """g = 1/(1-x) truncation rule: g_0^(j) -> q^j x, g_1^(j) -> 1,
    higher derivatives -> 0.  Turns Comtet words into x^k stirling2_q."""
    if deriv == 0:
        return MultiPoly.monomial(1, ex=1, eq=shift)
    if deriv == 1:
        return MultiPoly.one()
    return MultiPoly.zero()


G_IS_X: GRule = geometric_g_rule


def substitute_g(expr: SymExpr, rule: GRule) -> MultiPoly:
    """Replace every g factor via `rule` and multiply out.

    Words must be g-only (strip the terminal f first); coefficients must
    be genuine q-polynomials.
    """
    total = MultiPoly.zero()
    for word, coeff in expr.items():
        value = coeff.to_multipoly()
        for f in word:
            if f.kind != "g":
                raise ValueError("substitution needs g-only words")
            if value.is_zero():
                break
            value = value * rule(f.deriv, f.shift)
        total = total + value
    return total
