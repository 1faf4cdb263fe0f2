"""ASCII rendering of decision trees, with a JSON form that round-trips."""

from __future__ import annotations

import json

from .core import Bind, ChoiceLabel, Delay, Eff, Impure, Pure, resolve
from .lifted import NIL, Cons, Pair2


def _settled(e):
    """Follow already-computed resolutions without forcing anything."""
    while True:
        cls = e.__class__
        if cls is Bind or cls is Delay:
            r = e._resolved
            if r is None:
                return e
            e = r
            continue
        return e


def preview(value):
    """Render a value structurally; anything unforced shows as ``?``.

    Accepts plain host values, suspended trees, and the lifted list and
    pair cells.
    """
    if isinstance(value, Eff):
        e = _settled(value)
        if e.__class__ is Pure:
            return preview(e.value)
        if e.__class__ is Impure:
            return "?" if e.shape.__class__ is ChoiceLabel else "!"
        return "?"
    if value is NIL:
        return "[]"
    if isinstance(value, Cons):
        parts = []
        cell = value
        while True:
            parts.append(preview(cell.head))
            t = _settled(cell.tail)
            if t.__class__ is Pure:
                if t.value is NIL:
                    return "[" + ",".join(parts) + "]"
                if isinstance(t.value, Cons):
                    cell = t.value
                    continue
                parts.append(preview(t.value))
                return "[" + ",".join(parts) + "]"
            if t.__class__ is Impure and t.shape.__class__ is not ChoiceLabel:
                return "[" + ",".join(parts) + "|!]"
            return "[" + ",".join(parts) + "|?]"
    if isinstance(value, Pair2):
        return f"({preview(value.fst)}, {preview(value.snd)})"
    if isinstance(value, tuple):
        return "[" + ",".join(preview(v) for v in value) + "]"
    return repr(value) if isinstance(value, str) else str(value)


def _note_text(note):
    if note is None:
        return None
    left, right = note
    return f"{preview(left)} <= {preview(right)}"


def tree_structure(e, value_renderer=preview):
    """Force ``e`` into a plain dict tree: choices, values, failures.

    Both branches of every choice are explored (no decision pruning),
    mirroring how the structure would be drawn rather than searched.
    """
    root = resolve(e)
    out = {}
    stack = [(root, out)]
    while stack:
        node, slot = stack.pop()
        node = resolve(node)
        if node.__class__ is Pure:
            slot["kind"] = "value"
            slot["text"] = value_renderer(node.value)
            continue
        shape = node.shape
        if shape.__class__ is ChoiceLabel:
            slot["kind"] = "choice"
            slot["label"] = shape.id
            note = _note_text(shape.note)
            if note is not None:
                slot["note"] = note
            left, right = {}, {}
            slot["left"] = left
            slot["right"] = right
            stack.append((node.children[1], right))
            stack.append((node.children[0], left))
            continue
        slot["kind"] = "failure"
    return out


def _relabel(tree):
    """Assign compact display numbers; only repeated labels are shown."""
    counts = {}
    order = {}

    def scan(node):
        if node["kind"] == "choice":
            lid = node["label"]
            counts[lid] = counts.get(lid, 0) + 1
            if lid not in order:
                order[lid] = len(order) + 1
            scan(node["left"])
            scan(node["right"])

    scan(tree)
    return {lid: order[lid] for lid, c in counts.items() if c > 1}


def render_tree(tree):
    """Layout a structure dict as ASCII lines."""
    shown = _relabel(tree)
    lines = []

    def header(node):
        if node["kind"] == "value":
            return node["text"]
        if node["kind"] == "failure":
            return "!"
        mark = f"?{shown[node['label']]}" if node["label"] in shown else "?"
        note = node.get("note")
        return f"{mark} {note}" if note else mark

    def walk(node, prefix, tag, cont):
        lines.append(prefix + tag + header(node))
        if node["kind"] == "choice":
            inner = prefix + ("" if not tag else ("|  " if cont else "   "))
            walk(node["left"], inner, "+- L: ", True)
            walk(node["right"], inner, "+- R: ", False)

    walk(tree, "", "", False)
    return "\n".join(lines)


def render_decision_tree(e, value_renderer=preview):
    """Resolve, structure and draw a computation's decision tree."""
    return render_tree(tree_structure(e, value_renderer))


def tree_to_json(tree):
    return json.dumps(tree, indent=2, sort_keys=True)


def tree_from_json(text):
    return json.loads(text)


def count_leaves(tree):
    if tree["kind"] == "choice":
        return count_leaves(tree["left"]) + count_leaves(tree["right"])
    return 1
