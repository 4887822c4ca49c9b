"""Residues, i-signatures, normal and good nodes, and the crystal operators.

Signature convention: rows are scanned from the top (row 1) down to row
h(lam)+1.  An i-addable node contributes ``+`` and an i-removable node ``-``.
Adjacent ``+-`` pairs cancel until the word reads ``-...-+...+``.  Surviving
minus signs are the normal nodes and surviving plus signs the conormal ones.
The good node is the lowest normal node; the cogood node is the highest
conormal node.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple, Sequence

from .partitions import Partition, is_p_regular

PLUS = "+"
MINUS = "-"


class Node(NamedTuple):
    row: int
    col: int

    def residue(self, p: int) -> int:
        return (self.col - self.row) % p


def residue(node: Sequence[int], p: int) -> int:
    row, col = node
    return (col - row) % p


def removable_nodes(lam: Sequence[int]) -> list[Node]:
    out = []
    for r, part in enumerate(lam, 1):
        below = lam[r] if r < len(lam) else 0
        if part > below:
            out.append(Node(r, part))
    return out


def addable_nodes(lam: Sequence[int]) -> list[Node]:
    out = []
    for r in range(1, len(lam) + 2):
        part = lam[r - 1] if r <= len(lam) else 0
        if r == 1 or lam[r - 2] > part:
            out.append(Node(r, part + 1))
    return out


@dataclass(frozen=True)
class Signature:
    residue: int
    entries: list = field(default_factory=list)
    reduced: list = field(default_factory=list)


def _raw_entries(lam: Sequence[int], i: int, p: int) -> list[tuple[str, Node]]:
    entries = []
    h = len(lam)
    for r in range(1, h + 2):
        part = lam[r - 1] if r <= h else 0
        below = lam[r] if r < h else 0
        # removable (r, part) and addable (r, part+1) never share a residue
        if part > below and (part - r) % p == i:
            entries.append((MINUS, Node(r, part)))
        elif (r == 1 or lam[r - 2] > part) and (part + 1 - r) % p == i:
            entries.append((PLUS, Node(r, part + 1)))
    return entries


def _reduce(entries: list[tuple[str, Node]]) -> list[tuple[str, Node]]:
    minus: list[tuple[str, Node]] = []
    open_plus: list[tuple[str, Node]] = []
    for entry in entries:
        if entry[0] == PLUS:
            open_plus.append(entry)
        elif open_plus:
            open_plus.pop()
        else:
            minus.append(entry)
    return minus + open_plus


def signature(lam: Sequence[int], i: int, p: int) -> Signature:
    entries = _raw_entries(lam, i, p)
    return Signature(i, entries, _reduce(entries))


@lru_cache(maxsize=1 << 16)
def _survivors(lam: tuple, i: int, p: int) -> tuple[tuple[Node, ...], tuple[Node, ...]]:
    reduced = _reduce(_raw_entries(lam, i, p))
    normal = tuple(node for sign, node in reduced if sign == MINUS)
    conormal = tuple(node for sign, node in reduced if sign == PLUS)
    return normal, conormal


def normal_nodes(lam: Sequence[int], i: int, p: int) -> list[Node]:
    """i-normal nodes from top to bottom."""
    return list(_survivors(tuple(lam), i, p)[0])


def conormal_nodes(lam: Sequence[int], i: int, p: int) -> list[Node]:
    return list(_survivors(tuple(lam), i, p)[1])


def all_normal_nodes(lam: Sequence[int], p: int) -> list[Node]:
    """Normal nodes of every residue, ordered by row."""
    out = [a for i in range(p) for a in _survivors(tuple(lam), i, p)[0]]
    return sorted(out)


def good_node(lam: Sequence[int], i: int, p: int) -> Node | None:
    normal = _survivors(tuple(lam), i, p)[0]
    return normal[-1] if normal else None


def cogood_node(lam: Sequence[int], i: int, p: int) -> Node | None:
    conormal = _survivors(tuple(lam), i, p)[1]
    return conormal[0] if conormal else None


def epsilon(lam: Sequence[int], i: int, p: int) -> int:
    return len(_survivors(tuple(lam), i, p)[0])


def phi(lam: Sequence[int], i: int, p: int) -> int:
    return len(_survivors(tuple(lam), i, p)[1])


def remove_node(lam: Sequence[int], node: Sequence[int]) -> Partition:
    parts = list(lam)
    parts[node[0] - 1] -= 1
    return Partition(parts)


def add_node(lam: Sequence[int], node: Sequence[int]) -> Partition:
    parts = list(lam)
    if node[0] == len(parts) + 1:
        parts.append(0)
    parts[node[0] - 1] += 1
    return Partition(parts)


def e_tilde(lam: Sequence[int], i: int, p: int) -> Partition | None:
    """Remove the i-good node, or None when there is none."""
    node = good_node(lam, i, p)
    return None if node is None else remove_node(lam, node)


def f_tilde(lam: Sequence[int], i: int, p: int) -> Partition | None:
    """Add the i-cogood node, or None when there is none."""
    node = cogood_node(lam, i, p)
    return None if node is None else add_node(lam, node)


def is_JS(lam: Sequence[int], p: int) -> bool:
    return dim_end_restriction(lam, p) == 1


def dim_end_restriction(lam: Sequence[int], p: int) -> int:
    """Sum of epsilon_i over all residues."""
    return sum(epsilon(lam, i, p) for i in range(p))


def restriction_multiplicity(lam: Sequence[int], node: Sequence[int], p: int) -> int:
    """Multiplicity of D^{lam_A} in e_i D^lam, where A = node and i = res A."""
    node = Node(*node)
    if node not in removable_nodes(lam):
        raise ValueError(f"{tuple(node)} is not removable from {tuple(lam)}")
    if not is_p_regular(remove_node(lam, node), p):
        raise ValueError(f"removing {tuple(node)} from {tuple(lam)} is not {p}-regular")
    normal = normal_nodes(lam, residue(node, p), p)
    if node not in normal:
        return 0
    return 1 + sum(1 for a in normal if a.row < node.row)


__all__ = [
    "MINUS",
    "Node",
    "PLUS",
    "Signature",
    "add_node",
    "addable_nodes",
    "all_normal_nodes",
    "cogood_node",
    "conormal_nodes",
    "dim_end_restriction",
    "e_tilde",
    "epsilon",
    "f_tilde",
    "good_node",
    "is_JS",
    "normal_nodes",
    "phi",
    "remove_node",
    "removable_nodes",
    "residue",
    "restriction_multiplicity",
    "signature",
]
