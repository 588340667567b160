"""Chinese remaindering for integer vectors modulo integer matrices.

The remainder of ``v`` modulo a nonsingular ``M`` is the unique point of
``v + M Z^D`` in the half-open parallelepiped ``{M t : t in [0, 1)^D}``.

Pairwise coprimality does not make every remainder tuple consistent once
three or more non-commuting moduli are involved: e.g. the three prime forms
of determinant 2 in dimension 2 are pairwise coprime, yet their lcrm is
``2I`` (determinant 4, not 8). The fold below therefore combines a running
modulus with the next one through the Hermite transform of their block, which
is the Bezout identity when the two are coprime and still solves the
congruence when they share a divisor and the remainders agree modulo it.
"""
import itertools
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .arith import are_coprime, bezout, lcrm_pair
from .core import IntMatrix, IntVector, adjugate, apply, as_vector, determinant
from .errors import (
    DimensionMismatchError,
    InconsistentRemaindersError,
    NotCoprimeError,
)
from .normal_forms import canonical_form, column_hnf, require_nonsingular


@dataclass(frozen=True)
class CrtInstance:
    moduli: Tuple[IntMatrix, ...]
    remainders: Tuple[IntVector, ...]

    def __post_init__(self):
        object.__setattr__(self, "moduli", tuple(self.moduli))
        object.__setattr__(self, "remainders", tuple(as_vector(r) for r in self.remainders))
        if len(self.moduli) != len(self.remainders):
            raise DimensionMismatchError("one remainder per modulus is required")
        if not self.moduli:
            raise ValueError("at least one modulus is required")

    def to_json(self):
        return {"moduli": [m.to_json() for m in self.moduli],
                "remainders": [list(r) for r in self.remainders]}


@dataclass(frozen=True)
class CrtSolution:
    n: IntVector
    lcrm_modulus: IntMatrix

    def to_json(self):
        return {"n": list(self.n), "lcrm": self.lcrm_modulus.to_json()}


class Reducer:
    """Reduction modulo a fixed ``m`` with its adjugate precomputed.

    ``floor(m^-1 v) = floor(adj(m) v / det(m))`` evaluated in integers.
    """

    def __init__(self, m: IntMatrix):
        require_nonsingular(m)
        self.m = m
        det = determinant(m)
        adj = adjugate(m)
        if det < 0:
            det, adj = -det, -adj
        self.det = det
        self.adj = adj

    def coords_floor(self, v: Sequence[int]) -> IntVector:
        return tuple(x // self.det for x in apply(self.adj, v))

    def __call__(self, v: Sequence[int]) -> IntVector:
        k = apply(self.m, self.coords_floor(v))
        return tuple(a - b for a, b in zip(v, k))

    def contains(self, v: Sequence[int]) -> bool:
        """Whether ``v`` lies in the column lattice of ``m``."""
        return all(x % self.det == 0 for x in apply(self.adj, v))

    def is_reduced(self, v: Sequence[int]) -> bool:
        return all(0 <= x < self.det for x in apply(self.adj, v))


def reduce(v: Sequence[int], m: IntMatrix) -> IntVector:
    """``v - m @ floor(m^-1 @ v)``."""
    v = as_vector(v)
    if len(v) != m.nrows:
        raise DimensionMismatchError(f"vector length {len(v)} != {m.nrows}")
    return Reducer(m)(v)


def crt_combine_pair(m1: IntMatrix, r1: Sequence[int], m2: IntMatrix,
                     r2: Sequence[int]) -> Tuple[IntMatrix, IntVector]:
    """Combine two congruences modulo coprime moduli.

    With ``m1 @ p + m2 @ q = I``, ``n = r1 + m1 @ p @ (r2 - r1)`` satisfies
    both; it is returned reduced modulo ``lcrm(m1, m2)``.
    """
    r1, r2 = as_vector(r1), as_vector(r2)
    w = bezout(m1, m2)
    diff = tuple(b - a for a, b in zip(r1, r2))
    step = apply(m1 @ w.p, diff)
    n = tuple(a + b for a, b in zip(r1, step))
    l12 = lcrm_pair(m1, m2)
    return l12, reduce(n, l12)


@dataclass(frozen=True)
class _FoldStep:
    gcld_reducer: Reducer
    lift: IntMatrix  # m_acc @ W[:D, :D]
    out: Reducer     # modulo lcrm(m_acc, m_next)


class CrtPlan:
    """Precomputed fold for a fixed list of pairwise-coprime moduli.

    Building the plan costs the Hermite reductions; each :meth:`solve` is then
    a handful of integer matrix-vector products.
    """

    def __init__(self, moduli: Sequence[IntMatrix], check_coprime: bool = True):
        moduli = tuple(moduli)
        if not moduli:
            raise ValueError("at least one modulus is required")
        self.dim = require_nonsingular(*moduli)
        if check_coprime:
            for (i, a), (j, b) in itertools.combinations(enumerate(moduli), 2):
                if not are_coprime(a, b):
                    raise NotCoprimeError(f"moduli {i} and {j} are not left coprime")
        self.moduli = moduli
        self.reducers = [Reducer(m) for m in moduli]
        self.steps: List[_FoldStep] = []
        d = self.dim
        acc = canonical_form(moduli[0])
        for m in moduli[1:]:
            h, w, _ = column_hnf(acc.hstack(m), track=True)
            g = IntMatrix(row[:d] for row in h)
            x = IntMatrix(row[:d] for row in w[:d])
            kern = IntMatrix(row[d:] for row in w[:d])
            nxt = canonical_form(acc @ kern)
            self.steps.append(_FoldStep(Reducer(g), acc @ x, Reducer(nxt)))
            acc = nxt
        self.lcrm_modulus = acc
        self._final = Reducer(acc)

    def solve(self, remainders: Sequence[Sequence[int]], check_reduced: bool = True) -> CrtSolution:
        if len(remainders) != len(self.moduli):
            raise DimensionMismatchError("one remainder per modulus is required")
        rems = [as_vector(r) for r in remainders]
        for i, (r, red) in enumerate(zip(rems, self.reducers)):
            if len(r) != self.dim:
                raise DimensionMismatchError(f"remainder {i} has length {len(r)} != {self.dim}")
            if check_reduced and not red.is_reduced(r):
                raise InconsistentRemaindersError(f"remainder {i} is not reduced modulo its modulus")
        n = self._final(rems[0])
        for step, r in zip(self.steps, rems[1:]):
            # solve acc @ x + m @ y = r - n, i.e. g @ t = r - n with (x; y) = W[:, :D] t
            diff = tuple(b - a for a, b in zip(n, r))
            g = step.gcld_reducer
            if not g.contains(diff):
                raise InconsistentRemaindersError("remainders admit no common solution")
            t = tuple(x // g.det for x in apply(g.adj, diff))
            n = step.out(tuple(a + b for a, b in zip(n, apply(step.lift, t))))
        return CrtSolution(n, self.lcrm_modulus)


def crt_solve(inst: CrtInstance) -> CrtSolution:
    """Smallest-region representative agreeing with every remainder."""
    return CrtPlan(inst.moduli).solve(inst.remainders)
