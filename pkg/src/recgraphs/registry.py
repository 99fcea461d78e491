"""Canned programs with known ground truth.

Tree programs are characteristic functions on sequence codes: on code ``c``
they halt at stage ``len(decode(c)) + 1`` with value 1 for members and 0
otherwise.  Parametric names are ``halt@<t>`` and ``tree:finite(<d>)``.

Self-inputs (the input used by the self-application graph): ``self5`` and
``halt@t`` halt on every input; ``evens`` uses 0 (so it lands in K);
``cof-minus-1`` uses 1 (so it does not); everything else uses 0.
"""

from __future__ import annotations

import re
from types import MappingProxyType
from typing import Callable, Optional

from .codes import Seq, decode, encode
from .errors import InvalidProgram
from .machine import (
    DecJz,
    GroundTruth,
    Halt,
    Inc,
    ProgramRef,
    RegisterProgram,
    TreeKind,
)

__all__ = [
    "ADD2",
    "HALT_NOW",
    "LOOP",
    "registry_get",
    "list_programs",
    "manifest",
    "tree_program",
    "GAP_CODE",
]

TREE_BUDGET = 64
SLOW_FACTOR = 10
# partial:slow diverges on <1>
GAP_CODE = encode((1,))

HALT_NOW = RegisterProgram((Halt(),), name="halt-now")
LOOP = RegisterProgram((DecJz(1, 0),), name="loop")
ADD2 = RegisterProgram((Inc(0), Inc(0), Halt()), name="add2")

EVENS_RM = RegisterProgram(
    (
        DecJz(0, 3),  # 0: x exhausted on an even count
        DecJz(0, 4),  # 1: x exhausted on an odd count
        DecJz(1, 0),  # 2: r1 stays 0, so this is "goto 0"
        Halt(),  # 3
        DecJz(1, 4),  # 4: spin
    ),
    name="evens",
)

COF_MINUS_1_RM = RegisterProgram(
    (
        DecJz(0, 5),  # 0: x == 0 -> halt
        DecJz(0, 4),  # 1: x == 1 -> spin
        DecJz(0, 5),  # 2: drain r0, then halt with output 0
        DecJz(1, 2),  # 3: goto 2
        DecJz(1, 4),  # 4: spin
        Halt(),  # 5
    ),
    name="cof-minus-1",
)


def _never() -> ProgramRef:
    return ProgramRef(
        name="never",
        kind="rule",
        rule=lambda x: None,
        ground_truth=GroundTruth(
            halting="halts nowhere", halts_on=lambda x: False, tree=TreeKind.PARTIAL
        ),
        sufficient_budget=10**6,
        realization=LOOP,
        description="diverges on every input",
    )


def _halt_at(t: int, name: Optional[str] = None) -> ProgramRef:
    return ProgramRef(
        name=name or f"halt@{t}",
        kind="rule",
        rule=lambda x: (t, 0),
        ground_truth=GroundTruth(
            halting=f"halts everywhere at stage {t}", halts_on=lambda x: True
        ),
        sufficient_budget=t,
        description=f"outputs 0 on every input at stage {t}",
    )


def _evens() -> ProgramRef:
    return ProgramRef(
        name="evens",
        kind="rule",
        rule=lambda x: (x + 3, 0) if x % 2 == 0 else None,
        ground_truth=GroundTruth(
            halting="halts exactly on even x (stage x+3)", halts_on=lambda x: x % 2 == 0
        ),
        sufficient_budget=100,
        realization=EVENS_RM,
        realization_bound=lambda x: 2 * x + 2,
        description="outputs 0 on even inputs at stage x+3",
    )


def _cof_minus_1() -> ProgramRef:
    return ProgramRef(
        name="cof-minus-1",
        kind="rule",
        rule=lambda x: (x + 2, 0) if x != 1 else None,
        self_input=1,
        ground_truth=GroundTruth(
            halting="halts on every x != 1 (stage x+2); cofinite", halts_on=lambda x: x != 1
        ),
        sufficient_budget=100,
        realization=COF_MINUS_1_RM,
        realization_bound=lambda x: 2 * x + 2,
        description="outputs 0 on every input but 1 at stage x+2",
    )


def tree_program(
    name: str,
    member: Callable[[Seq], bool],
    ground_truth: GroundTruth,
    description: str = "",
) -> ProgramRef:
    """Wrap a membership predicate as a characteristic-function program."""

    def rule(code: int) -> tuple[int, int]:
        sigma = decode(code)
        return len(sigma) + 1, int(member(sigma))

    return ProgramRef(
        name=name,
        kind="rule",
        rule=rule,
        ground_truth=ground_truth,
        sufficient_budget=TREE_BUDGET,
        description=description,
    )


def _total() -> Callable[[int], bool]:
    return lambda x: True


def _binary() -> ProgramRef:
    return tree_program(
        "tree:binary",
        lambda s: all(x in (0, 1) for x in s),
        GroundTruth(
            halting="halts everywhere",
            halts_on=_total(),
            tree=TreeKind.INFINITE_PATH,
            path=lambda n: 0,
            path_label="all-zeros",
        ),
        "full binary tree {0,1}^<omega",
    )


def _ray0() -> ProgramRef:
    return tree_program(
        "tree:ray0",
        lambda s: all(x == 0 for x in s),
        GroundTruth(
            halting="halts everywhere",
            halts_on=_total(),
            tree=TreeKind.INFINITE_PATH,
            path=lambda n: 0,
            path_label="all-zeros",
        ),
        "the single ray of all-zero sequences",
    )


def _finite(d: int) -> ProgramRef:
    return tree_program(
        f"tree:finite({d})",
        lambda s: len(s) <= d and all(x in (0, 1) for x in s),
        GroundTruth(
            halting="halts everywhere",
            halts_on=_total(),
            tree=TreeKind.WELL_FOUNDED,
            max_code=encode((1,) * d),
        ),
        f"binary sequences of length <= {d}",
    )


def _desc() -> ProgramRef:
    return tree_program(
        "tree:desc",
        lambda s: all(a > b for a, b in zip(s, s[1:])),
        GroundTruth(halting="halts everywhere", halts_on=_total(), tree=TreeKind.WELL_FOUNDED),
        "strictly decreasing sequences",
    )


def _gap() -> ProgramRef:
    def rule(code: int) -> tuple[int, int]:
        sigma = decode(code)
        return len(sigma) + 1, 1 if sigma == (0,) else 0

    return ProgramRef(
        name="notree:gap",
        kind="rule",
        rule=rule,
        ground_truth=GroundTruth(
            halting="halts everywhere", halts_on=_total(), tree=TreeKind.NOT_A_TREE
        ),
        sufficient_budget=TREE_BUDGET,
        description="value 0 at <>, 1 at <0>: not prefix-closed",
    )


def _slow() -> ProgramRef:
    def rule(code: int) -> Optional[tuple[int, int]]:
        if code == GAP_CODE:
            return None
        sigma = decode(code)
        return SLOW_FACTOR * (len(sigma) + 1), int(all(x in (0, 1) for x in sigma))

    return ProgramRef(
        name="partial:slow",
        kind="rule",
        rule=rule,
        ground_truth=GroundTruth(
            halting=f"halts on every code except {GAP_CODE} (stage 10*(len+1))",
            halts_on=lambda c: c != GAP_CODE,
            tree=TreeKind.PARTIAL,
        ),
        sufficient_budget=SLOW_FACTOR * TREE_BUDGET,
        description="binary-tree values, slowly, diverging on <1>",
    )


_FIXED = MappingProxyType(
    {
        "never": _never,
        "self5": lambda: _halt_at(5, name="self5"),
        "evens": _evens,
        "cof-minus-1": _cof_minus_1,
        "tree:binary": _binary,
        "tree:ray0": _ray0,
        "tree:desc": _desc,
        "notree:gap": _gap,
        "partial:slow": _slow,
    }
)

_HALT_AT = re.compile(r"halt@(\d+)")
_FINITE = re.compile(r"tree:finite\((\d+)\)")

_CACHE: dict[str, ProgramRef] = {}


def registry_get(name: str) -> ProgramRef:
    """Look up a canned program by name; raises :class:`InvalidProgram`."""
    if name in _CACHE:
        return _CACHE[name]
    if name in _FIXED:
        prog = _FIXED[name]()
    elif m := _HALT_AT.fullmatch(name):
        prog = _halt_at(int(m.group(1)))
    elif m := _FINITE.fullmatch(name):
        prog = _finite(int(m.group(1)))
    else:
        raise InvalidProgram(f"unknown program {name!r}")
    _CACHE[name] = prog
    return prog


# names in manifest order; parametric entries are listed at a representative value
MANIFEST_NAMES = (
    "never",
    "self5",
    "halt@3",
    "evens",
    "cof-minus-1",
    "tree:binary",
    "tree:ray0",
    "tree:finite(2)",
    "tree:finite(3)",
    "tree:desc",
    "notree:gap",
    "partial:slow",
)


def list_programs() -> list[ProgramRef]:
    return [registry_get(name) for name in MANIFEST_NAMES]


def manifest() -> list[dict]:
    rows = []
    for p in list_programs():
        rows.append(
            {
                "name": p.name,
                "kind": p.kind,
                "self_input": p.self_input,
                "sufficient_budget": p.sufficient_budget,
                "register_realization": p.realization is not None,
                "ground_truth": p.ground_truth.summary() if p.ground_truth else "-",
                "description": p.description,
            }
        )
    return rows
