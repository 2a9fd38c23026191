"""Text notation for fibrations and bundle data.

Grammar (whitespace is allowed between tokens):

    manifold  :=  "Sigma(" a1 "," ... "," an ")"
               |  "M(" genus ";" background ";" pairs ")"
    pairs     :=  empty  |  "(" a "," b ")" { "," "(" a "," b ")" }
    bundle    :=  "(" e ";" locals ")"
    locals    :=  empty  |  eps1 { "," epsN }

`Sigma` delegates to the homology-sphere constructor; `M` gives the fields
directly. Formatting always emits the explicit `M` form, which makes it the
canonical spelling: format(parse(s)) is canonical and parse(format(x)) == x.
"""

from __future__ import annotations

from .errors import ParseError
from .orbifold import (
    BundleData,
    OrbifoldBase,
    SeifertFibration,
    brieskorn_fibration,
)


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    @property
    def column(self) -> int:
        return self.pos + 1

    def peek(self) -> str:
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, token: str) -> bool:
        self._skip_ws()
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def expect(self, token: str):
        if not self.take(token):
            raise ParseError(f"expected '{token}'", self.column)

    def integer(self) -> int:
        self._skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start or not self.text[start:self.pos].lstrip("+-"):
            raise ParseError("expected an integer", start + 1)
        return int(self.text[start:self.pos])

    def end(self):
        self._skip_ws()
        if self.pos != len(self.text):
            raise ParseError("unexpected trailing text", self.column)


def parse_manifold(text: str) -> SeifertFibration:
    cur = _Cursor(text)
    if cur.take("Sigma"):
        cur.expect("(")
        alphas = [cur.integer()]
        while cur.take(","):
            alphas.append(cur.integer())
        cur.expect(")")
        cur.end()
        try:
            return brieskorn_fibration(alphas)
        except ValueError as exc:
            raise ParseError(str(exc), 1) from exc
    if cur.take("M"):
        cur.expect("(")
        genus_col = cur.column
        genus = cur.integer()
        cur.expect(";")
        background = cur.integer()
        cur.expect(";")
        pairs = []
        while cur.peek() == "(":
            cur.expect("(")
            alpha = cur.integer()
            cur.expect(",")
            beta = cur.integer()
            cur.expect(")")
            pairs.append((alpha, beta))
            if not cur.take(","):
                break
        cur.expect(")")
        cur.end()
        try:
            base = OrbifoldBase(genus, tuple(a for a, _ in pairs))
            bundle = BundleData(base, background, tuple(b for _, b in pairs))
            return SeifertFibration(bundle)
        except ValueError as exc:
            raise ParseError(str(exc), genus_col) from exc
    raise ParseError("expected 'Sigma(...)' or 'M(...)'", cur.column)


def parse_bundle(text: str, base: OrbifoldBase) -> BundleData:
    cur = _Cursor(text)
    cur.expect("(")
    start_col = cur.column
    background = cur.integer()
    cur.expect(";")
    locs = []
    if cur.peek() not in (")", ""):
        locs.append(cur.integer())
        while cur.take(","):
            locs.append(cur.integer())
    cur.expect(")")
    cur.end()
    try:
        return BundleData(base, background, tuple(locs))
    except ValueError as exc:
        raise ParseError(str(exc), start_col) from exc


def format_manifold(y: SeifertFibration) -> str:
    pairs = ",".join(
        f"({a},{b})"
        for a, b in zip(y.base.multiplicities, y.bundle.local_invariants)
    )
    return f"M({y.base.genus};{y.bundle.background};{pairs})"


def format_bundle(e: BundleData) -> str:
    locs = ",".join(str(v) for v in e.local_invariants)
    return f"({e.background};{locs})"
