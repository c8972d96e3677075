"""JSON codecs and the small text formats accepted on the command line."""

from __future__ import annotations

import re
from collections.abc import Sequence
from fractions import Fraction
from numbers import Rational

from .errors import ParameterError
from .nullcone import IndependenceReport, OmegaSum
from .patterns import GTPattern, GTPoset, HRepresentation
from .poly import Exterior, Poly
from .straighten import StandardCombination
from .tableaux import DoubleTableau, OneLineTableau, SemistandardTableau, Shape


def coef_str(c: Rational) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def rational_str(v: Rational) -> str:
    """Always ``a/b``, as used for matrices."""
    v = Fraction(v)
    return f"{v.numerator}/{v.denominator}"


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ParameterError(f"not a rational number: {text!r}") from None


# --------------------------------------------------------------------------
# tableaux and shapes


def one_line_to_json(t: OneLineTableau) -> dict:
    return {"I": list(t.I), "J": list(t.J)}


def one_line_from_json(obj: dict, n: int, m: int) -> OneLineTableau:
    try:
        return OneLineTableau(tuple(obj["I"]), tuple(obj["J"]), n, m)
    except (KeyError, TypeError):
        raise ParameterError(f"malformed one-line tableau {obj!r}") from None


def double_to_json(t: DoubleTableau) -> dict:
    return {"columns": [one_line_to_json(c) for c in t.columns]}


def double_from_json(obj: dict, n: int, m: int) -> DoubleTableau:
    cols = [one_line_from_json(c, n, m) for c in obj.get("columns", [])]
    return DoubleTableau(tuple(cols), n, m)


def shape_to_json(s: Sequence[int]) -> list[int]:
    return list(Shape(s))


def ssyt_to_json(T: SemistandardTableau) -> dict:
    return {"shape": list(T.shape), "rows": [list(r) for r in T.rows]}


def ssyt_from_json(obj: dict) -> SemistandardTableau:
    try:
        return SemistandardTableau(tuple(tuple(r) for r in obj["rows"]))
    except (KeyError, TypeError):
        raise ParameterError(f"malformed tableau {obj!r}") from None


# --------------------------------------------------------------------------
# patterns


def poset_from_json(obj: dict) -> GTPoset:
    kind = obj.get("kind")
    keys = {"gamma": ("m",), "gamma_nm": ("n", "m"), "nullcone": ("k", "n")}
    if kind not in keys:
        raise ParameterError(f"unknown poset kind {kind!r}")
    try:
        return GTPoset(kind, tuple(int(obj[k]) for k in keys[kind]))
    except (KeyError, TypeError, ValueError):
        raise ParameterError(f"poset {kind} needs integer fields {keys[kind]}") from None


def pattern_to_json(p: GTPattern) -> dict:
    return {"poset": p.poset.to_json(), "rows": [list(r) for r in p.rows()]}


def pattern_from_json(obj: dict) -> GTPattern:
    if "poset" not in obj or "rows" not in obj:
        raise ParameterError("a pattern needs 'poset' and 'rows'")
    return GTPattern.from_rows(poset_from_json(obj["poset"]), obj["rows"])


def hrep_to_json(h: HRepresentation) -> dict:
    return h.to_json()


# --------------------------------------------------------------------------
# algebra


def poly_to_json(p: Poly) -> list[dict]:
    return [{"exp": [list(e) for e in p.sparse_exponent(exp)], "coef": coef_str(c)}
            for exp, c in p.sorted_terms()]


def poly_from_json(items: list[dict], n: int, m: int) -> Poly:
    return Poly.from_sparse(n, m, [([tuple(e) for e in it["exp"]], parse_rational(it["coef"])) for it in items])


def exterior_to_json(e: Exterior) -> list[dict]:
    return [{"indices": list(K), "coef": coef_str(c)} for K, c in e.sorted_terms()]


def combination_to_json(comb: StandardCombination) -> dict:
    return {
        "terms": [{"coef": coef_str(c), "tableau": double_to_json(t)} for c, t in comb.terms],
        "weight_base": str(comb.cfg.base),
    }


def omega_sum_to_json(s: OmegaSum) -> dict:
    return {
        "p": s.p,
        "terms": [{"J": list(J), "coef": coef_str(c)} for J, c in s.terms],
        "certificate": {"degree": s.certificate.degree, "terms": exterior_to_json(s.certificate)},
    }


def matrix_to_json(rows: Sequence[Sequence[Rational]]) -> list[list[str]]:
    return [[rational_str(v) for v in row] for row in rows]


def independence_to_json(r: IndependenceReport) -> dict:
    return {
        "candidates": r.candidates,
        "points": r.points,
        "rank": r.rank,
        "full_rank": r.full_rank,
        "attempts": r.attempts,
        "finding": r.finding,
    }


# --------------------------------------------------------------------------
# command-line micro formats

_ENTRY = re.compile(r"\[([^\[\]:]*):([^\[\]:]*)\]")


def parse_index_set(text: str) -> tuple[int, ...]:
    """``"135"``, ``"1 3 5"`` or ``"1,3,5"``; a single digit per index unless separated."""
    text = text.strip()
    if not text:
        return ()
    if re.search(r"[\s,]", text):
        parts = [p for p in re.split(r"[\s,]+", text) if p]
    else:
        parts = list(text)
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise ParameterError(f"malformed index set {text!r}") from None


def parse_product(text: str, n: int, m: int) -> list[OneLineTableau]:
    """Comma-separated ``[I:J]`` entries, e.g. ``"[1:2],[2:1]"`` or ``"[1 2:10 11]"``."""
    text = text.strip()
    if not text:
        return []
    out = []
    pos = 0
    for match in _ENTRY.finditer(text):
        gap = text[pos:match.start()].strip()
        if gap not in ("", ","):
            raise ParameterError(f"unexpected text {gap!r} in product {text!r}")
        I, J = parse_index_set(match.group(1)), parse_index_set(match.group(2))  # noqa: E741
        out.append(OneLineTableau(I, J, n, m))
        pos = match.end()
    if text[pos:].strip() or not out:
        raise ParameterError(f"malformed product {text!r}")
    return out


def parse_shape(text: str) -> Shape:
    text = text.strip()
    if not text:
        return Shape()
    try:
        return Shape(int(p) for p in text.split(","))
    except ValueError:
        raise ParameterError(f"malformed shape {text!r}") from None


def parse_int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(",") if p.strip())
    except ValueError:
        raise ParameterError(f"malformed integer list {text!r}") from None


def parse_tableau_rows(text: str) -> SemistandardTableau:
    """Rows separated by ``/``, entries by the rules of :func:`parse_index_set`."""
    rows = [parse_index_set(r) for r in text.split("/") if r.strip()]
    return SemistandardTableau(tuple(rows))


def parse_pattern_rows(text: str) -> list[tuple[int, ...]]:
    """Rows separated by ``/``, entries by commas, top row first."""
    return [parse_int_list(r) for r in text.split("/") if r.strip()]
