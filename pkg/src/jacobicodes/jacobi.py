"""Jacobi sums over F_q by direct character summation, together with the
arithmetic conditions that characterize them inside Z[zeta_l].

For a multiplicative character chi of odd prime order l (chi(generator) =
zeta_l), the sum J(i, j) = sum over v != 0, -1 of chi^i(v) * chi^j(v + 1)
is an element of Z[zeta_l].  Six conditions on a candidate element --
a quadratic norm identity, equality of all cyclic coefficient convolutions,
two linear congruences mod l, a non-divisibility constraint, and one
generator-dependent divisibility by p -- cut the Galois orbit of J(1, n)
down to the single sum attached to a specific generator.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .cyclotomic import CycInt, divisible_by_int
from .errors import IntegrityError
from .fields import FieldElement, FieldSpec, LogTable, is_prime

__all__ = [
    "JacobiSum",
    "ConditionReport",
    "jacobi_sum",
    "verify_conditions",
    "condition_index_set",
    "conjugate_solutions",
]


@dataclass(frozen=True)
class JacobiSum:
    """A computed Jacobi sum with its provenance: field, generator, and the
    character-exponent pair (i, j)."""

    value: CycInt
    spec: FieldSpec
    generator: FieldElement
    order_pair: tuple[int, int]

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.value.coeffs


def jacobi_sum(table: LogTable, i: int = 1, j: int = 1) -> JacobiSum:
    """J(i, j) for the character sending the table's generator to zeta_l.

    Runs one pass over F_q minus {0, -1}, histogramming the character
    exponent of chi^i(v) * chi^j(v + 1).  When gcd(i, l), gcd(j, l) and
    gcd(i + j, l) are all 1 the result is checked against the norm identity
    J * conj(J) = q, which any correct sum must satisfy.
    """
    spec = table.spec
    l = spec.l
    if not (1 <= i <= l - 1 and 1 <= j <= l - 1):
        raise ValueError(f"character exponents must lie in [1, {l - 1}]")
    hist = [0] * l
    one = spec.one
    minus_one = spec.minus_one
    log = table.log
    for v in spec.elements():
        if not v or v == minus_one:
            continue
        hist[(i * log(v) + j * log(v + one)) % l] += 1
    value = CycInt.from_raw(l, hist)
    if gcd(i, l) == gcd(j, l) == gcd(i + j, l) == 1:
        norm = (value * value.conjugate(-1)).as_rational_int()
        if norm != spec.q:
            raise IntegrityError(
                f"norm check failed: J(i,j) * conj = {norm}, expected q = {spec.q}"
            )
    return JacobiSum(value, spec, table.generator, (i, j))


def condition_index_set(l: int, n: int) -> list[int]:
    """The exponents k in [1, l-1] with ((n+1)*k mod l) > k.  These index
    the Galois conjugates entering the two divisibility conditions below."""
    return [k for k in range(1, l) if (n + 1) * k % l > k]


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of the six candidate conditions, with the root b used for the
    generator-dependent one and diagnostic residues for the failures."""

    i: bool
    ii: bool
    iii: bool
    iv: bool
    v: bool
    vi: bool
    b: int
    n: int
    diagnostics: dict

    @property
    def all_ok(self) -> bool:
        return self.i and self.ii and self.iii and self.iv and self.v and self.vi

    def as_json(self) -> dict:
        return {
            "i": self.i,
            "ii": self.ii,
            "iii": self.iii,
            "iv": self.iv,
            "v": self.v,
            "vi": self.vi,
            "b": self.b,
        }


def _cyclic_convolutions(a: tuple[int, ...], l: int) -> list[int]:
    # full holds (a_0, ..., a_(l-1)) with a_0 = 0; indices taken mod l
    full = (0,) + a
    return [sum(full[i] * full[(i + t) % l] for i in range(1, l)) for t in range(1, l)]


def verify_conditions(
    candidate: CycInt | tuple[int, ...], spec: FieldSpec, b: int, n: int = 1
) -> ConditionReport:
    """Check the six conditions a vector (a_1, ..., a_(l-1)) must satisfy to
    be the Jacobi sum J(1, n) for the generator with root b.

    The conditions are, writing a_0 = 0 and q = p^alpha:

      (i)   q = sum(a_i^2) - sum(a_i * a_(i+1)), indices mod l;
      (ii)  all cyclic convolutions sum(a_i * a_(i+t)) agree for t = 1..l-1;
      (iii) 1 + sum(a_i) = 0 mod l;
      (iv)  sum(i * a_i) = 0 mod l;
      (v)   p does not divide prod of conjugates sigma_k(H) over the index
            set {k : ((n+1)k mod l) > k};
      (vi)  p divides conj(H) * prod over the same set of (b - zeta^(1/k)).

    b must be an l-th root of unity mod p; it ties condition (vi) to one
    specific generator.
    """
    l = spec.l
    p = spec.p
    if not isinstance(candidate, CycInt):
        candidate = CycInt(l, tuple(candidate))
    if candidate.l != l:
        raise ValueError(f"candidate has order {candidate.l}, field expects {l}")
    if not 1 <= n <= l - 2:
        raise ValueError(f"n must lie in [1, {l - 2}]")
    if pow(b, l, p) != 1 % p:
        raise ValueError(f"b = {b} is not an l-th root of unity mod {p}")
    a = candidate.coeffs
    diagnostics: dict = {}

    convs = _cyclic_convolutions(a, l)
    cond_i = spec.q == sum(c * c for c in a) - convs[0]
    cond_ii = all(c == convs[0] for c in convs[1:])
    if not cond_ii:
        diagnostics["unequal_convolutions"] = convs

    residue_iii = (1 + sum(a)) % l
    cond_iii = residue_iii == 0
    diagnostics["iii_residue"] = residue_iii

    residue_iv = sum(i * c for i, c in enumerate(a, start=1)) % l
    cond_iv = residue_iv == 0
    diagnostics["iv_residue"] = residue_iv

    index_set = condition_index_set(l, n)
    prod_v = CycInt.from_int(l, 1)
    for k in index_set:
        prod_v = prod_v * candidate.conjugate(k)
    cond_v = not divisible_by_int(prod_v, p)

    prod_vi = candidate.conjugate(-1)
    for k in index_set:
        prod_vi = prod_vi * (CycInt.from_int(l, b) - CycInt.zeta(l, pow(k, -1, l)))
    cond_vi = divisible_by_int(prod_vi, p)
    diagnostics["vi_residues"] = tuple(c % p for c in prod_vi.coeffs)

    return ConditionReport(
        i=cond_i, ii=cond_ii, iii=cond_iii, iv=cond_iv, v=cond_v, vi=cond_vi,
        b=b, n=n, diagnostics=diagnostics,
    )


def conjugate_solutions(a) -> list[tuple[int, ...]]:
    """The l - 1 Galois-conjugate coefficient vectors of a = (a_1, ...,
    a_(l-1)): the i-th is (a_(i*1 mod l), ..., a_(i*(l-1) mod l)).  The
    first entry is a itself."""
    a = tuple(a)
    l = len(a) + 1
    if l < 3 or not is_prime(l):
        raise ValueError(f"vector length {len(a)} is not (odd prime - 1)")
    full = (None,) + a  # index 0 never hit: i*j mod l != 0 for unit i
    return [
        tuple(full[i * j % l] for j in range(1, l))
        for i in range(1, l)
    ]
