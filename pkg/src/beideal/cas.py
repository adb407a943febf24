"""Export verification scripts for CoCoA-5 and Macaulay2.

The decomposition computed here is purely combinatorial, so the algebraic
identities it implies (the edge ideal equals the intersection of its minimal
primes) and the homological quantities it cannot reach (depth) are delegated
to a computer algebra system.  Each script declares the ring, defines the
edge ideal and every minimal prime, checks the intersection identity, counts
a minimal generating set, and asks for dimension and depth of the quotient.

Output is a pure function of (graph, decomposition, dialect, characteristic),
hence byte-stable.
"""

from __future__ import annotations

import itertools
from typing import Optional

from .errors import GraphInputError
from .graphs import Graph
from .ideals import Decomposition, PrimeComponent

DIALECTS = ("cocoa5", "macaulay2")


def export_cas_script(
    graph: Graph,
    decomposition: Decomposition,
    dialect: str = "cocoa5",
    *,
    char: int = 0,
    name: Optional[str] = None,
) -> str:
    """Render the verification script in the requested dialect.

    ``char`` selects the coefficient field: 0 for the rationals (default) or
    a prime p for the field with p elements.  The combinatorial results do
    not depend on this choice.
    """
    if dialect not in DIALECTS:
        raise GraphInputError(f"unknown CAS dialect {dialect!r}; expected one of {DIALECTS}")
    if char < 0:
        raise GraphInputError(f"field characteristic must be 0 or a prime, got {char}")
    if graph.n == 0:
        return (
            "-- empty graph: the edge ideal is (0) in a ring with no "
            "indeterminates; nothing to verify\n"
        )
    if dialect == "cocoa5":
        return _cocoa5(graph, decomposition, char, name)
    return _macaulay2(graph, decomposition, char, name)


def _minor(u: int, v: int, dialect: str) -> str:
    if dialect == "cocoa5":
        return f"x[{u}]*y[{v}] - x[{v}]*y[{u}]"
    return f"x_{u}*y_{v} - x_{v}*y_{u}"


def _prime_generators(component: PrimeComponent, dialect: str) -> list[str]:
    gens: list[str] = []
    for i in component.killed:
        if dialect == "cocoa5":
            gens += [f"x[{i}]", f"y[{i}]"]
        else:
            gens += [f"x_{i}", f"y_{i}"]
    for block in component.blocks:
        gens += [_minor(u, v, dialect) for u, v in itertools.combinations(block, 2)]
    return gens


def _ideal_lines(lhs: str, gens: list[str], assign: str, zero: str) -> list[str]:
    if not gens:
        return [f"{lhs} {assign} ideal({zero});"]
    lines = [f"{lhs} {assign} ideal("]
    lines += [f"  {g}," for g in gens[:-1]]
    lines.append(f"  {gens[-1]}")
    lines.append(");")
    return lines


def _killed_comment(component: PrimeComponent) -> str:
    killed = "{" + ", ".join(map(str, component.killed)) + "}"
    blocks = " ".join("{" + ", ".join(map(str, b)) + "}" for b in component.blocks)
    return f"T = {killed}; blocks {blocks}" if component.blocks else f"T = {killed}; no blocks"


def _cocoa5(graph: Graph, dec: Decomposition, char: int, name: Optional[str]) -> str:
    n = graph.n
    field = "QQ" if char == 0 else f"ZZ/({char})"
    lines = [
        f"-- binomial edge ideal check{': ' + name if name else ''}",
        f"-- graph: {n} vertices, {len(graph.edges)} edges; "
        f"{len(dec.components)} minimal primes",
        f"use R ::= {field}[x[1..{n}],y[1..{n}]];",
    ]
    edge_minors = [_minor(u, v, "cocoa5") for u, v in graph.edges]
    lines += _ideal_lines("JG", edge_minors, ":=", "zero(R)")
    prime_names = []
    for k, component in enumerate(dec.components, start=1):
        lines.append(f"-- {_killed_comment(component)}")
        prime_names.append(f"P{k}")
        lines += _ideal_lines(f"P{k}", _prime_generators(component, "cocoa5"), ":=", "zero(R)")
    lines += [
        f"Primes := [{', '.join(prime_names)}];",
        "Same := JG = IntersectList(Primes);",
        'println "intersection equals edge ideal: ", Same;',
        'println "minimal generators: ", len(MinGens(JG));',
        'println "dim: ", dim(R/JG);',
        'println "depth: ", depth(R/JG);',
    ]
    return "\n".join(lines) + "\n"


def _macaulay2(graph: Graph, dec: Decomposition, char: int, name: Optional[str]) -> str:
    n = graph.n
    field = "QQ" if char == 0 else f"ZZ/{char}"
    lines = [
        f"-- binomial edge ideal check{': ' + name if name else ''}",
        f"-- graph: {n} vertices, {len(graph.edges)} edges; "
        f"{len(dec.components)} minimal primes",
        f"S = {field}[x_1..x_{n}, y_1..y_{n}];",
    ]
    edge_minors = [_minor(u, v, "macaulay2") for u, v in graph.edges]
    lines += _ideal_lines("JG", edge_minors, "=", "0_S")
    prime_names = []
    for k, component in enumerate(dec.components, start=1):
        lines.append(f"-- {_killed_comment(component)}")
        prime_names.append(f"P{k}")
        lines += _ideal_lines(f"P{k}", _prime_generators(component, "macaulay2"), "=", "0_S")
    lines += [
        f"assert(JG == intersect({', '.join(prime_names)}));",
        '<< "intersection equals edge ideal: true" << endl;',
        '<< "minimal generators: " << numcols mingens JG << endl;',
        '<< "dim: " << dim(S^1/JG) << endl;',
        'needsPackage "Depth";',
        '<< "depth: " << depth(S^1/JG) << endl;',
    ]
    return "\n".join(lines) + "\n"
