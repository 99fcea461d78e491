"""Stage-bounded partial computation.

A :class:`ProgramRef` stands in for an index ``e``.  Evaluating it on an input
``x`` with a stage budget ``s`` either converges to a natural number or stays
:data:`PENDING`.  Two kinds of semantics are supported:

* ``rule`` programs carry an explicit stage function ``x -> (stage, value)``
  (or ``None`` for divergence); they converge at budget ``s`` iff
  ``stage <= s``.
* ``register`` programs are counter machines run by :func:`rm_run`; stage
  ``s`` means "within ``s`` interpreter steps".

Both are monotone in the budget by construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Optional, Union

from .errors import MalformedProgram

__all__ = [
    "Converged",
    "Pending",
    "PENDING",
    "ConvergenceResult",
    "Inc",
    "DecJz",
    "Halt",
    "RegisterProgram",
    "rm_run",
    "rm_trace",
    "TreeKind",
    "GroundTruth",
    "ProgramRef",
    "eval_by",
    "halts_by",
]


@dataclass(frozen=True)
class Converged:
    value: int

    def __repr__(self) -> str:
        return f"Converged({self.value})"


class Pending:
    """Singleton marker for a computation that has not converged yet."""

    _instance: Optional["Pending"] = None

    def __new__(cls) -> "Pending":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "Pending"

    def __reduce__(self):
        return (Pending, ())


PENDING = Pending()

ConvergenceResult = Union[Converged, Pending]


# ---------------------------------------------------------------------------
# Counter machines


@dataclass(frozen=True)
class Inc:
    reg: int


@dataclass(frozen=True)
class DecJz:
    """Decrement ``reg`` and fall through, or jump to ``target`` if it is zero."""

    reg: int
    target: int


@dataclass(frozen=True)
class Halt:
    pass


Instruction = Union[Inc, DecJz, Halt]


@dataclass(frozen=True)
class RegisterProgram:
    """A counter machine.

    The input is loaded into register 0 and the output is read from register 0
    on halt.  Every executed instruction, ``Halt`` included, costs one step.
    Running past the last instruction is treated as halting at no extra cost.
    """

    instructions: tuple[Instruction, ...]
    n_registers: int = 2
    name: str = "anonymous"

    def __post_init__(self) -> None:
        object.__setattr__(self, "instructions", tuple(self.instructions))
        self.validate()

    def validate(self) -> None:
        n = len(self.instructions)
        if self.n_registers < 1:
            raise MalformedProgram(f"{self.name}: need at least one register")
        for pc, ins in enumerate(self.instructions):
            if isinstance(ins, Halt):
                continue
            if not isinstance(ins, (Inc, DecJz)):
                raise MalformedProgram(f"{self.name}: unknown instruction {ins!r} at {pc}")
            if not 0 <= ins.reg < self.n_registers:
                raise MalformedProgram(f"{self.name}: register {ins.reg} out of range at {pc}")
            if isinstance(ins, DecJz) and not 0 <= ins.target < n:
                raise MalformedProgram(
                    f"{self.name}: branch target {ins.target} out of range at {pc}"
                )


def rm_trace(prog: RegisterProgram, x: int, budget: int) -> tuple[Optional[int], int]:
    """Run ``prog`` on ``x`` for at most ``budget`` steps.

    Returns ``(output, steps)`` where ``output`` is ``None`` if the machine had
    not halted when the budget ran out.
    """
    if budget < 0:
        raise ValueError("budget must be >= 0")
    if x < 0:
        raise ValueError("input must be a natural number")
    regs = [0] * prog.n_registers
    regs[0] = x
    code = prog.instructions
    pc = 0
    steps = 0
    while True:
        if pc >= len(code):
            return regs[0], steps
        if steps >= budget:
            return None, steps
        ins = code[pc]
        steps += 1
        if isinstance(ins, Halt):
            return regs[0], steps
        if isinstance(ins, Inc):
            regs[ins.reg] += 1
            pc += 1
        elif regs[ins.reg] == 0:
            pc = ins.target
        else:
            regs[ins.reg] -= 1
            pc += 1


def rm_run(prog: RegisterProgram, x: int, budget: int) -> ConvergenceResult:
    out, _ = rm_trace(prog, x, budget)
    return PENDING if out is None else Converged(out)


# ---------------------------------------------------------------------------
# Program references


class TreeKind(Enum):
    WELL_FOUNDED = "WellFounded"
    INFINITE_PATH = "HasInfinitePath"
    NOT_A_TREE = "NotATree"
    PARTIAL = "PartialOnSomeInput"


@dataclass(frozen=True)
class GroundTruth:
    """What is known about a canned program, for tests and separators only.

    ``path`` gives the entries of an infinite path when ``tree`` is
    ``INFINITE_PATH``; ``max_code`` bounds the codes of a finite tree.
    """

    halting: Optional[str] = None
    halts_on: Optional[Callable[[int], bool]] = field(default=None, compare=False)
    tree: Optional[TreeKind] = None
    path: Optional[Callable[[int], int]] = field(default=None, compare=False)
    path_label: Optional[str] = None
    max_code: Optional[int] = None

    @property
    def is_tree(self) -> bool:
        return self.tree in (TreeKind.WELL_FOUNDED, TreeKind.INFINITE_PATH)

    def summary(self) -> str:
        parts = []
        if self.halting is not None:
            parts.append(self.halting)
        if self.tree is TreeKind.INFINITE_PATH:
            parts.append(f"IsTree{{HasInfinitePath({self.path_label})}}")
        elif self.tree is TreeKind.WELL_FOUNDED:
            parts.append("IsTree{WellFounded}")
        elif self.tree is not None:
            parts.append(self.tree.value)
        return "; ".join(parts) if parts else "-"


StageRule = Callable[[int], Optional[tuple[int, int]]]


@dataclass(frozen=True)
class ProgramRef:
    """Opaque handle for a partial computable function with stage semantics.

    ``self_input`` is the program's designated input for self-application
    constructions.  ``sufficient_budget`` is a budget documented to decide
    every input the registry's checks query.  ``realization`` optionally ties
    a rule program to a counter machine computing the same function, with
    ``realization_bound(x)`` bounding its halting step count.
    """

    name: str
    kind: str
    rule: Optional[StageRule] = field(default=None, compare=False)
    register: Optional[RegisterProgram] = None
    self_input: int = 0
    ground_truth: Optional[GroundTruth] = None
    sufficient_budget: int = 10_000
    realization: Optional[RegisterProgram] = None
    realization_bound: Optional[Callable[[int], int]] = field(default=None, compare=False)
    description: str = ""

    def __post_init__(self) -> None:
        if self.kind == "rule" and self.rule is None:
            raise ValueError("rule program needs a stage rule")
        if self.kind == "register" and self.register is None:
            raise ValueError("register program needs a RegisterProgram")
        if self.kind not in ("rule", "register"):
            raise ValueError(f"unknown program kind {self.kind!r}")

    def __hash__(self) -> int:
        return hash((self.name, self.kind))

    @classmethod
    def from_register(cls, prog: RegisterProgram, **kwargs) -> "ProgramRef":
        return cls(name=kwargs.pop("name", prog.name), kind="register", register=prog, **kwargs)


def eval_by(p: ProgramRef, x: int, stage: int) -> ConvergenceResult:
    """Evaluate ``p`` on ``x`` with ``stage`` steps of budget."""
    if stage < 0:
        return PENDING
    if p.kind == "register":
        return rm_run(p.register, x, stage)
    hit = p.rule(x)
    if hit is None or hit[0] > stage:
        return PENDING
    return Converged(hit[1])


def halts_by(p: ProgramRef, x: int, stage: int) -> bool:
    return isinstance(eval_by(p, x, stage), Converged)
