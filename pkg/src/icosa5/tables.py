"""The seven tables, rebuilt from computation.

Fixtures only choose which rows to show (row names and generator words);
every value in a row comes from the model.
"""
from __future__ import annotations

from . import fixtures
from .group import evaluate_word, parse_word
from .icosa import ICO_DOMAIN, classify_rotation, shared_vertex_compose
from .perm import Permutation, format_cycles
from .verify import Model, get_model, lexicographic_five_cycles

__all__ = ["reproduce_table", "render_text"]

_CONFIG = {"case1": "left", "case2": "right", "not_edge_rotation": "none"}


def _cyc(p: Permutation) -> str:
    return format_cycles(p) or "()"


def _three_cycle_pair(p: Permutation, q: Permutation) -> tuple[tuple[str, ...], tuple[str, ...]] | None:
    """Rotate 3-cycles p, q to the shape (a,b,c)(a,b,d), if they have it."""
    (cp,), (cq,) = p.cycles(), q.cycles()
    for a in set(cp) & set(cq):
        b = p(a)
        if q(a) == b:
            return (a, b, p(b)), (a, b, q(b))
    return None


def _table1(m: Model) -> list[dict]:
    return [{"name": name, "images": list(m.named[name].image_labels())} for name in (r.name for r in fixtures.TABLE_1)]


def _table2(m: Model) -> list[dict]:
    return [{"cycle": _cyc(m.hom(m.evaluate(r.rotation))), "rotation": r.rotation} for r in fixtures.TABLE_2]


def _table3(m: Model) -> list[dict]:
    rows = []
    for r in fixtures.TABLE_3:
        r1, r2 = (m.named[t] for t in parse_word(r.word, m.named))
        res = shared_vertex_compose(r1, r2, m.graph)
        rows.append({
            "edges": [list(e) for e in classify_rotation(res.product, m.graph).axis],
            "word": r.word,
            "configuration": _CONFIG[res.case],
        })
    return rows


def _table4(m: Model) -> list[dict]:
    rows = []
    for r in fixtures.TABLE_4:
        p, q = (m.hom(m.named[t]) for t in parse_word(r.word, m.named))
        shaped = _three_cycle_pair(p, q)
        row = {"word": r.word, "images": _cyc(p) + _cyc(q), "rewrite": None, "result": _cyc(p * q)}
        if shaped:
            (a, b, c), (_, _, d) = shaped
            row["rewrite"] = f"({a},{b},{c})({a},{b},{d})"
            row["result"] = f"({a},{d})({b},{c})"
        rows.append(row)
    return rows


def _table5(m: Model) -> list[dict]:
    rows = []
    for r in fixtures.TABLE_5:
        p = m.evaluate(r.word)
        rows.append({"word": r.word, "fixed": list(p.fixed_points()), "cycles": _cyc(p)})
    return rows


def _table6(m: Model) -> list[dict]:
    rows = []
    for r in fixtures.TABLE_6:
        names = parse_word(r.word, m.named)
        head = m.hom(evaluate_word(m.named, names[:-1], ICO_DOMAIN))
        tail = m.hom(m.named[names[-1]])
        rows.append({"index": r.index, "word": r.word, "factors": _cyc(head) + _cyc(tail), "q": _cyc(head * tail)})
    return rows


def _table7(m: Model) -> list[dict]:
    powers = {m.q[i] ** k: (i, k) for i in sorted(m.q) for k in range(1, 5)}
    rows = []
    for p in lexicographic_five_cycles(m.a5):
        i, k = powers[p]
        rows.append({"cycle": _cyc(p), "index": i, "exponent": k})
    return rows


_BUILDERS = {1: _table1, 2: _table2, 3: _table3, 4: _table4, 5: _table5, 6: _table6, 7: _table7}


def reproduce_table(n: int, model: Model | None = None) -> dict:
    if n not in _BUILDERS:
        raise ValueError(f"no table {n}; tables are numbered 1..7")
    return {"table": n, "title": fixtures.TITLES[n], "rows": _BUILDERS[n](model or get_model())}


def _line(table: dict, row: dict) -> str:
    n = table["table"]
    if n == 1:
        return f"{row['name']}: " + " ".join(f"{x:<3}" for x in row["images"]).rstrip()
    if n == 2:
        return f"{row['cycle']} <-> {row['rotation']}"
    if n == 3:
        edges = ",".join("(" + ",".join(e) + ")" for e in row["edges"])
        return f"{edges} = {row['word']}  [{row['configuration']}]"
    if n == 4:
        mid = f" = {row['rewrite']}" if row["rewrite"] else ""
        return f"{row['word']} <-> {row['images']}{mid} = {row['result']}"
    if n == 5:
        fixed = "".join(f"({v})" for v in row["fixed"])
        return f"{row['word']} = {fixed}{row['cycles']}"
    if n == 6:
        return f"S{row['index']} = {row['word']} <-> {row['factors']} = {row['q']} = Q{row['index']}"
    return f"{row['cycle']} = Q{row['index']}^{row['exponent']}"


def render_text(table: dict) -> str:
    lines = [f"Table {table['table']}: {table['title']}"]
    if table["table"] == 1:
        lines.append("   " + " ".join(f"{x:<3}" for x in ICO_DOMAIN.labels).rstrip())
    lines.extend(_line(table, row) for row in table["rows"])
    return "\n".join(lines)
