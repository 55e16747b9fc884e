"""ASCII string diagrams. Inputs at the top, outputs at the bottom.

A term is cut into composition layers; each layer is a row of boxes drawn
side by side, each wire four columns wide.
"""

from __future__ import annotations

from .hterm import Compose, Gen, HTerm, Id, Sym, Tensor, infer_type

Box = tuple[str, int, int]


def _layers(t: HTerm) -> list[list[Box]]:
    if isinstance(t, Compose):
        return _layers(t.right) + _layers(t.left)
    if isinstance(t, Tensor):
        left, right = _layers(t.left), _layers(t.right)
        depth = max(len(left), len(right))
        _, lc = infer_type(t.left)
        _, rc = infer_type(t.right)
        left += [[("id", lc, lc)]] * (depth - len(left))
        right += [[("id", rc, rc)]] * (depth - len(right))
        return [a + b for a, b in zip(left, right)]
    if isinstance(t, Gen):
        dom, cod = infer_type(t)
        return [[(t.kind, dom, cod)]]
    if isinstance(t, Id):
        return [[("id", t.n, t.n)]]
    if isinstance(t, Sym):
        return [[(f"sym:{t.m}", t.m + t.n, t.m + t.n)]]
    raise TypeError(f"not a term: {t!r}")


WIRE = " |  "

_GLYPHS = {
    "mu": (" |   |  ", " \\___/  ", "   |    "),
    "delta": ("   |    ", " /---\\  ", " |   |  "),
    "eta": ("    ", " o  ", WIRE),
    "eps": (WIRE, " o  ", "    "),
    "antipode": (WIRE, "[S] ", WIRE),
}


def _box_rows(box: Box) -> tuple[str, str, str]:
    kind, dom, cod = box
    if kind in _GLYPHS:
        return _GLYPHS[kind]
    if kind == "id":
        return WIRE * dom, WIRE * dom, WIRE * dom
    m = int(kind.split(":")[1])
    wires = WIRE * dom
    if not 0 < m < dom:
        return wires, wires, wires
    # one X where the two blocks cross
    crossing = " " * (4 * m - 1) + "X"
    return wires, crossing.ljust(4 * dom), wires


def render(t: HTerm) -> str:
    infer_type(t)
    lines: list[str] = []
    for layer in _layers(t):
        rows = [_box_rows(box) for box in layer]
        top, mid, bottom = ("".join(r[k] for r in rows).rstrip() for k in range(3))
        if not lines or lines[-1] != top:
            lines.append(top)
        lines += [mid, bottom]
    return "\n".join(lines)
