"""Text and JSON serialization of multivectors.

Grammar (whitespace, including newlines, is insignificant between tokens)::

    mv       := [sign] term (sign term)*
    term     := rational ['*' blade] | blade
    rational := integer ['/' positive-integer]
    blade    := 'e{' index (',' index)* '}' | 'e' digit+

The compact ``e14`` form reads one digit per generator.  Indices inside a
blade must be distinct; an unsorted index list is reordered with the
matching permutation sign.  Canonical output always uses the bracketed form
with terms in canonical blade order.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .blades import Multivector, Signature, blade, blade_indices, blade_name
from .errors import ParseError

FORMAT_VERSION = 1


def _coef_text(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render_multivector(mv: Multivector) -> str:
    if not mv:
        return "0"
    parts = []
    for b, c in mv.items():
        mag = abs(c)
        if b == 0:
            body = _coef_text(mag)
        elif mag == 1:
            body = blade_name(b)
        else:
            body = f"{_coef_text(mag)}*{blade_name(b)}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>\d+)
  | (?P<blade>e\{[^}]*\}|e\d+)
  | (?P<op>[-+*/])
""", re.VERBOSE)


def _tokenize(text: str):
    pos = 0
    line, col = 1, 1
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        value = m.group()
        if kind != "ws":
            tokens.append((kind, value, line, col))
        for ch in value:
            if ch == "\n":
                line, col = line + 1, 1
            else:
                col += 1
        pos = m.end()
    tokens.append(("end", "", line, col))
    return tokens


def _parse_blade(token: str, line: int, col: int):
    """Return (sign, mask) for a blade token."""
    if token.startswith("e{"):
        body = token[2:-1]
        pieces = [s.strip() for s in body.split(",")]
        if not body.strip() or not all(s.isdigit() for s in pieces):
            raise ParseError(f"malformed blade {token!r}", line, col)
        indices = [int(s) for s in pieces]
    else:
        indices = [int(ch) for ch in token[1:]]
    if len(set(indices)) != len(indices):
        raise ParseError(f"repeated index in blade {token!r}", line, col)
    if any(i < 1 for i in indices):
        raise ParseError(f"generator indices start at 1 in {token!r}", line, col)
    inversions = sum(1 for a in range(len(indices))
                     for b in range(a + 1, len(indices)) if indices[a] > indices[b])
    return (-1 if inversions & 1 else 1), blade(*indices)


def parse_multivector(text: str, sig: Signature) -> Multivector:
    tokens = _tokenize(text)
    pos = 0
    terms: dict[int, Fraction] = {}

    def peek():
        return tokens[pos]

    def take(kind=None, value=None):
        nonlocal pos
        tok = tokens[pos]
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind
            got = tok[1] or "end of input"
            raise ParseError(f"expected {want}, got {got!r}", tok[2], tok[3])
        pos += 1
        return tok

    def term(sign):
        tok = peek()
        coef = Fraction(1)
        mask = 0
        if tok[0] == "num":
            take()
            num = int(tok[1])
            if peek()[:2] == ("op", "/"):
                take()
                den_tok = take("num")
                if int(den_tok[1]) == 0:
                    raise ParseError("zero denominator", den_tok[2], den_tok[3])
                coef = Fraction(num, int(den_tok[1]))
            else:
                coef = Fraction(num)
            if peek()[:2] == ("op", "*"):
                take()
                btok = take("blade")
                bsign, mask = _parse_blade(btok[1], btok[2], btok[3])
                coef *= bsign
                if mask & ~sig.full_mask:
                    raise ParseError(f"blade {btok[1]} outside signature {sig}",
                                     btok[2], btok[3])
        elif tok[0] == "blade":
            take()
            bsign, mask = _parse_blade(tok[1], tok[2], tok[3])
            coef = Fraction(bsign)
            if mask & ~sig.full_mask:
                raise ParseError(f"blade {tok[1]} outside signature {sig}", tok[2], tok[3])
        else:
            raise ParseError(f"expected a term, got {tok[1] or 'end of input'!r}",
                             tok[2], tok[3])
        terms[mask] = terms.get(mask, 0) + sign * coef

    sign = 1
    if peek()[0] == "op" and peek()[1] in "+-":
        sign = -1 if take()[1] == "-" else 1
    term(sign)
    while peek()[0] != "end":
        tok = peek()
        if tok[0] != "op" or tok[1] not in "+-":
            raise ParseError(f"expected '+' or '-', got {tok[1]!r}", tok[2], tok[3])
        take()
        term(-1 if tok[1] == "-" else 1)
    return Multivector(sig, terms)


def parse_blade_list(text: str, sig: Signature) -> list[int]:
    """Parse a comma-separated generator list such as ``e13,e24`` or ``e{1,3},e{2,4}``."""
    found = re.findall(r"e\{[^}]*\}|e\d+", text)
    residue = re.sub(r"e\{[^}]*\}|e\d+", "", text)
    if not found or residue.replace(",", "").strip():
        raise ParseError(f"cannot read blade list {text!r}")
    out = []
    for tok in found:
        sign, mask = _parse_blade(tok, 1, text.index(tok) + 1)
        if sign < 0:
            raise ParseError(f"write generator {tok} with increasing indices")
        if mask & ~sig.full_mask:
            raise ParseError(f"blade {tok} outside signature {sig}")
        out.append(mask)
    return out


def multivector_to_json(mv: Multivector) -> dict:
    return {
        "signature": [mv.sig.p, mv.sig.q],
        "terms": [{"indices": list(blade_indices(b)), "num": c.numerator,
                   "den": c.denominator} for b, c in mv.items()],
    }


def multivector_from_json(data: dict) -> Multivector:
    p, q = data["signature"]
    sig = Signature(p, q)
    terms = {}
    for t in data["terms"]:
        terms[blade(*t["indices"])] = Fraction(t["num"], t["den"])
    return Multivector(sig, terms)
