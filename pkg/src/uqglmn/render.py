"""Text, LaTeX and record renderings of elements.

The text form is the input grammar of :mod:`uqglmn.expr`, so
``parse(render_text(x))`` evaluates back to ``x``.
"""

from __future__ import annotations

from fractions import Fraction

from .qcoeff import LaurentPoly, QRat


def _is_negative(c) -> bool:
    if isinstance(c, QRat):
        return c.num.leading_coefficient() < 0
    return c < 0


def _coeff_text(c) -> tuple[str, bool]:
    """(text, needs parentheses before '*') for a positive-looking coefficient."""
    if isinstance(c, QRat):
        s = str(c)
        return s, c.is_laurent() and len(c.num.terms) > 1
    return str(c), False


def _cartan_text(c, latex=False):
    parts = []
    for k, a in enumerate(c, start=1):
        if not a:
            continue
        sym = f"K_{{{k}}}" if latex else f"K{k}"
        mag = abs(a)
        body = sym if mag == 1 else (f"{mag} {sym}" if latex else f"{mag}*{sym}")
        if not parts:
            parts.append(("-" if a < 0 else "") + body)
        else:
            parts.append((" - " if a < 0 else " + ") + body if latex else ("-" if a < 0 else "+") + body)
    return "".join(parts)


def _root_sub(r):
    i, j = r
    return f"{i}{j}" if i < 10 and j < 10 else f"{i},{j}"


def monomial_text(pm) -> str:
    out = []
    for r, k in pm.f_block:
        out.append(f"F[{r[0]},{r[1]}]" + (f"^{k}" if k > 1 else ""))
    if any(pm.cartan):
        out.append("q^{" + _cartan_text(pm.cartan) + "}")
    for r, k in pm.e_block:
        out.append(f"E[{r[0]},{r[1]}]" + (f"^{k}" if k > 1 else ""))
    return "*".join(out)


def monomial_latex(pm) -> str:
    out = []
    for r, k in pm.f_block:
        out.append(f"F_{{{_root_sub(r)}}}" + (f"^{{{k}}}" if k > 1 else ""))
    if any(pm.cartan):
        out.append("q^{" + _cartan_text(pm.cartan, latex=True) + "}")
    for r, k in pm.e_block:
        out.append(f"E_{{{_root_sub(r)}}}" + (f"^{{{k}}}" if k > 1 else ""))
    return " ".join(out)


def _join(pieces):
    """pieces: (negative, body); builds 'a + b - c'."""
    if not pieces:
        return "0"
    out = []
    for k, (neg, body) in enumerate(pieces):
        if k == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def render_text(x) -> str:
    pieces = []
    for pm, c in x.pbw_terms():
        neg = _is_negative(c)
        if neg:
            c = -c
        mono = monomial_text(pm)
        if c == 1:
            body = mono or "1"
        else:
            s, paren = _coeff_text(c)
            if paren and (mono or neg):
                s = f"({s})"
            body = f"{s}*{mono}" if mono else s
        pieces.append((neg, body))
    return _join(pieces)


def _laurent_latex(p: LaurentPoly) -> str:
    parts = []
    for e in sorted(p.terms, reverse=True):
        c = p.terms[e]
        neg = c < 0
        a = -c if neg else c
        qp = "" if e == 0 else ("q" if e == 1 else f"q^{{{e}}}")
        if not qp:
            body = _frac_latex(a)
        elif a == 1:
            body = qp
        else:
            body = _frac_latex(a) + " " + qp
        parts.append((neg, body))
    return _join(parts)


def _frac_latex(a) -> str:
    a = Fraction(a)
    if a.denominator == 1:
        return str(a.numerator)
    return f"\\frac{{{a.numerator}}}{{{a.denominator}}}"


def coeff_latex(c) -> tuple[str, bool]:
    if isinstance(c, QRat):
        if c.is_laurent():
            return _laurent_latex(c.num), len(c.num.terms) > 1
        return f"\\frac{{{_laurent_latex(c.num)}}}{{{_laurent_latex(c.den)}}}", False
    return _frac_latex(c), False


def render_latex(x) -> str:
    pieces = []
    for pm, c in x.pbw_terms():
        neg = _is_negative(c)
        if neg:
            c = -c
        mono = monomial_latex(pm)
        if c == 1:
            body = mono or "1"
        else:
            s, paren = coeff_latex(c)
            if paren and (mono or neg):
                s = f"\\left({s}\\right)"
            body = f"{s} {mono}" if mono else s
        pieces.append((neg, body))
    return _join(pieces)


def element_records(x) -> list[dict]:
    """One JSON-ready record per PBW term."""
    recs = []
    for pm, c in x.pbw_terms():
        recs.append(
            {
                "f": [[r[0], r[1], k] for r, k in pm.f_block],
                "cartan": list(pm.cartan),
                "e": [[r[0], r[1], k] for r, k in pm.e_block],
                "coeff": str(c),
                "monomial": monomial_text(pm) or "1",
            }
        )
    return recs
